from pathlib import Path

# Определяем корень проекта
BASE_DIR = Path(__file__).resolve().parent

# Выгрузки Excel без явного пути
EXPORT_DIR = BASE_DIR / 'exports'
