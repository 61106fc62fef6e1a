import os
from pathlib import Path
from dotenv import load_dotenv

from paths import BASE_DIR

# Загружаем .env из текущего каталога, переменные окружения имеют приоритет
load_dotenv()


def _int_env(name, default):
    value = os.environ.get(name)
    if value is None or value.strip() == '':
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"Переменная {name} должна быть целым числом, получено {value!r}") from None


class Config:
    # Бюджеты вычисления иерархии (флаги CLI имеют приоритет)
    MAX_ENUMERATED_TERMS = _int_env('ORDINALS_MAX_TERMS', 50_000)
    MAX_VALUE_BITS = _int_env('ORDINALS_MAX_VALUE_BITS', 1 << 16)
    MAX_RECURSION_NODES = _int_env('ORDINALS_MAX_NODES', 200_000)

    # Параметры аудита
    AUDIT_MAX_NORM = _int_env('ORDINALS_AUDIT_MAX_NORM', 4)
    AUDIT_SEED = _int_env('ORDINALS_AUDIT_SEED', 0)
    AUDIT_TRIPLES = _int_env('ORDINALS_AUDIT_TRIPLES', 10_000)

    # Файл с отчётами аудита
    REPORT_FILE_PATH = os.environ.get('ORDINALS_REPORT_FILE', 'reports/audit_reports.json')
    REPORT_FILE = BASE_DIR / REPORT_FILE_PATH if not Path(REPORT_FILE_PATH).is_absolute() else Path(REPORT_FILE_PATH)

    LOG_LEVEL = os.environ.get('ORDINALS_LOG_LEVEL', 'WARNING').upper()

    # Базовые функции, доступные из командной строки
    BASE_NAMES = ('suc', 'lin', 'expshift')

    @classmethod
    def print_config(cls):
        """Вывод конфигурации для отладки"""
        print("=" * 60)
        print("КОНФИГУРАЦИЯ")
        print("=" * 60)

        # Бюджеты
        print(f"MAX_ENUMERATED_TERMS: {cls.MAX_ENUMERATED_TERMS}")
        print(f"MAX_VALUE_BITS: {cls.MAX_VALUE_BITS}")
        print(f"MAX_RECURSION_NODES: {cls.MAX_RECURSION_NODES}")

        # Аудит
        print(f"AUDIT_MAX_NORM: {cls.AUDIT_MAX_NORM}")
        print(f"AUDIT_SEED: {cls.AUDIT_SEED}")
        print(f"AUDIT_TRIPLES: {cls.AUDIT_TRIPLES}")
        print(f"REPORT_FILE: {cls.REPORT_FILE}")
        print(f"LOG_LEVEL: {cls.LOG_LEVEL}")
        print("=" * 60)
