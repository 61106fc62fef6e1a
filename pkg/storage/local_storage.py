import json
import logging
from pathlib import Path

logger = logging.getLogger(__name__)


def empty_store():
    return {"v": 1, "reports": [], "next_id": 1}


class LocalStorage:
    """Локальное JSON-хранилище отчётов аудита"""

    def __init__(self, filepath):
        self.filepath = Path(filepath)

    def load(self):
        """Загрузка отчётов из локального файла"""
        try:
            if self.filepath.exists():
                with open(self.filepath, 'r', encoding='utf-8') as f:
                    data = json.load(f)
                if data.get('v') != 1 or not isinstance(data.get('reports'), list):
                    logger.error("Файл %s не является хранилищем отчётов версии 1", self.filepath)
                    return empty_store()
                logger.debug("Загружено %d отчётов из %s", len(data['reports']), self.filepath)
                return data
            return empty_store()
        except Exception as e:
            logger.error("Ошибка загрузки локального файла: %s", e)
            return empty_store()

    def save(self, data):
        """Сохранение отчётов в локальный файл"""
        try:
            # Создаем папку если нет
            self.filepath.parent.mkdir(parents=True, exist_ok=True)

            with open(self.filepath, 'w', encoding='utf-8') as f:
                json.dump(data, f, ensure_ascii=False, indent=2)
            logger.debug("Сохранено %d отчётов в %s", len(data.get('reports', [])), self.filepath)
            return True
        except Exception as e:
            logger.error("Ошибка сохранения локального файла: %s", e)
            return False

    def append_report(self, report):
        """
        Добавление отчёта с очередным id

        Args:
            report: словарь отчёта (AuditReport.to_dict())

        Returns:
            int: id сохранённого отчёта или None при ошибке записи
        """
        data = self.load()
        report_id = data.get('next_id', 1)
        data['reports'].append({**report, 'id': report_id})
        data['next_id'] = report_id + 1
        return report_id if self.save(data) else None

    def list_reports(self):
        return self.load()['reports']
