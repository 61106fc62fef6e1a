"""
Хранилище отчётов аудита
"""
from .local_storage import LocalStorage, empty_store

__all__ = ['LocalStorage', 'empty_store']
