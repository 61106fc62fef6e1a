"""
Модуль для экспорта таблиц термов и отчётов аудита в Excel с использованием openpyxl
"""
import logging
from datetime import datetime
from io import BytesIO
from pathlib import Path

from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

from paths import EXPORT_DIR

logger = logging.getLogger(__name__)


class ExcelExporter:
    """Класс для экспорта данных в Excel с использованием openpyxl"""

    # Константы для форматирования
    HEADER_COLOR = '4A6FA5'      # Синий цвет заголовков
    FONT_NAME = 'Calibri'
    FONT_SIZE = 11
    HEADER_FONT_SIZE = 12

    # Цвета для итогов проверок
    STATUS_COLORS = {
        'OK': 'E8F5E8',          # Светло-зеленый
        'Нарушение': 'FFEBEE',   # Светло-красный
    }

    # Цвет для проверок с пропусками по бюджету
    SKIPPED_COLOR = 'FFF3E0'     # Светло-оранжевый

    # Коэффициенты для расчета ширины колонок
    CHAR_WIDTH = 1.2  # Ширина одного символа
    MAX_COLUMN_WIDTH = 60
    MIN_COLUMN_WIDTH = 6

    TERM_HEADERS = ['№', 'Терм', 'Норма', 'Класс', 'JSON']
    AUDIT_HEADERS = ['№', 'Набор', 'Проверка', 'Проверено', 'Пропущено', 'Нарушений', 'Итог', 'Примеры']

    def __init__(self):
        self._border = Border(
            left=Side(style='thin'),
            right=Side(style='thin'),
            top=Side(style='thin'),
            bottom=Side(style='thin')
        )

    def _write_header(self, worksheet, headers):
        for col_idx, header in enumerate(headers, start=1):
            cell = worksheet.cell(row=1, column=col_idx, value=header)

            # Стиль заголовка
            cell.font = Font(name=self.FONT_NAME, size=self.HEADER_FONT_SIZE, bold=True, color='FFFFFF')
            cell.fill = PatternFill(start_color=self.HEADER_COLOR, end_color=self.HEADER_COLOR, fill_type='solid')
            cell.alignment = Alignment(horizontal='center', vertical='center', wrap_text=True)
            cell.border = self._border

    def _write_row(self, worksheet, row_idx, values, centered, bg_color=None):
        for col_idx, value in enumerate(values, start=1):
            cell = worksheet.cell(row=row_idx, column=col_idx, value=value)
            cell.font = Font(name=self.FONT_NAME, size=self.FONT_SIZE)
            cell.border = self._border
            if col_idx in centered:
                cell.alignment = Alignment(horizontal='center', vertical='center', wrap_text=True)
            else:
                cell.alignment = Alignment(horizontal='left', vertical='top', wrap_text=True)
            if bg_color:
                cell.fill = PatternFill(start_color=bg_color, end_color=bg_color, fill_type='solid')

    def _finish_sheet(self, worksheet):
        self._adjust_column_widths(worksheet)

        # Настраиваем фильтры (автофильтр)
        worksheet.auto_filter.ref = worksheet.dimensions

        # Замораживаем заголовки
        worksheet.freeze_panes = 'A2'
        worksheet.row_dimensions[1].height = 30

    def _adjust_column_widths(self, worksheet):
        """Автоматическая настройка ширины колонок"""
        column_widths = []
        for column in worksheet.columns:
            max_length = 0
            column_letter = get_column_letter(column[0].column)
            for cell in column:
                if cell.value is not None:
                    lines = str(cell.value).split('\n')
                    max_length = max(max_length, max(len(line) for line in lines))
            adjusted_width = min(self.MAX_COLUMN_WIDTH, max(self.MIN_COLUMN_WIDTH, (max_length + 2) * self.CHAR_WIDTH))
            worksheet.column_dimensions[column_letter].width = adjusted_width
            column_widths.append(adjusted_width)
        return column_widths

    def terms_workbook(self, rows):
        """
        Таблица перечисленных термов

        Args:
            rows: последовательность словарей с ключами term, norm, class, json
        """
        workbook = Workbook()
        worksheet = workbook.active
        worksheet.title = 'Термы'
        self._write_header(worksheet, self.TERM_HEADERS)
        for row_idx, row in enumerate(rows, start=2):
            values = [row_idx - 1, row['term'], row['norm'], row['class'], row.get('json', '')]
            self._write_row(worksheet, row_idx, values, centered={1, 3, 4})
        self._finish_sheet(worksheet)
        return workbook

    def audit_workbook(self, report):
        """
        Таблица проверок одного отчёта аудита

        Args:
            report: словарь отчёта (AuditReport.to_dict())
        """
        workbook = Workbook()
        worksheet = workbook.active
        worksheet.title = 'Аудит'
        self._write_header(worksheet, self.AUDIT_HEADERS)
        for row_idx, check in enumerate(report.get('checks', []), start=2):
            status = 'OK' if check['passed'] else 'Нарушение'
            values = [
                row_idx - 1,
                check['suite'],
                check['name'],
                check['checked'],
                check['skipped'],
                check['violations'],
                status,
                '\n'.join(check.get('examples', [])),
            ]
            # Пропуски по бюджету подсвечиваем, только если нарушений нет
            bg_color = self.STATUS_COLORS[status]
            if check['passed'] and check['skipped']:
                bg_color = self.SKIPPED_COLOR
            self._write_row(worksheet, row_idx, values, centered={1, 4, 5, 6, 7}, bg_color=bg_color)

        summary = workbook.create_sheet('Сводка')
        for row_idx, (key, value) in enumerate([
            ('Набор', report.get('suite')),
            ('Норма', report.get('max_norm')),
            ('Зерно', report.get('seed')),
            ('Создан', report.get('created_at')),
            ('Итог', 'OK' if report.get('passed') else 'Нарушение'),
        ], start=1):
            summary.cell(row=row_idx, column=1, value=key).font = Font(name=self.FONT_NAME, bold=True)
            summary.cell(row=row_idx, column=2, value=value)
        self._adjust_column_widths(summary)
        self._finish_sheet(worksheet)
        return workbook

    def _generate_filename(self, stem):
        """Генерация имени файла с датой"""
        date_str = datetime.now().strftime("%Y-%m-%d_%H-%M")
        return f"{stem}_{date_str}.xlsx"

    def to_buffer(self, workbook):
        buffer = BytesIO()
        workbook.save(buffer)
        buffer.seek(0)
        return buffer

    def save(self, workbook, output_path=None, stem='ordinals'):
        """
        Сохранение книги в файл

        Returns:
            str: путь к сохраненному файлу или None при ошибке
        """
        if not output_path:
            output_path = EXPORT_DIR / self._generate_filename(stem)
        output_path = Path(output_path)
        try:
            output_path.parent.mkdir(parents=True, exist_ok=True)
            with open(output_path, 'wb') as f:
                f.write(self.to_buffer(workbook).getvalue())
        except Exception as e:
            logger.error("Ошибка при экспорте в Excel: %s", e)
            return None
        logger.debug("Файл сохранен: %s", output_path)
        return str(output_path)

    def export_terms(self, rows, output_path=None):
        return self.save(self.terms_workbook(rows), output_path, stem='terms')

    def export_audit(self, report, output_path=None):
        return self.save(self.audit_workbook(report), output_path, stem='audit')


# Фабричная функция
def create_exporter():
    """Создание экземпляра экспортера"""
    return ExcelExporter()
