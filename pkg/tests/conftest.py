import pytest
from click.testing import CliRunner

from ordinals import terms_up_to_norm


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(scope='session')
def terms_norm_4():
    """Все канонические термы нормы ≤ 4"""
    return terms_up_to_norm(4)
