"""
Fixtures compartidos por las pruebas unitarias y de integración
"""
import pytest

from hankel.sequences import get_sequence, paperfolding_equation, prefix


PAPER_PREFIX = "110110011100100"


@pytest.fixture(scope="session")
def paperfolding_spec():
    return get_sequence("paperfolding")


@pytest.fixture(scope="session")
def paperfolding(paperfolding_spec):
    """Prefijo largo del plegado de papel"""
    return prefix(paperfolding_spec, 4096)


@pytest.fixture(scope="session")
def fe():
    """F(z) = 1/(1 - z^4) + z F(z^2)"""
    return paperfolding_equation()


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    """Directorio de caché temporal para cada prueba"""
    directory = tmp_path / "cache"
    monkeypatch.setenv("HANKEL_CACHE_DIR", str(directory))
    return directory
