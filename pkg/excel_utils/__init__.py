"""
Модули для работы с Excel (экспорт таблиц термов и отчётов аудита)
"""

from .exporter import ExcelExporter, create_exporter

__all__ = [
    'ExcelExporter',
    'create_exporter',
]
