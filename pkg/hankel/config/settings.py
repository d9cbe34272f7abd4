"""
Configuración central del sistema
"""
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict

from dotenv import load_dotenv

# Cargar .env antes de evaluar los valores por defecto
load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


@dataclass
class CacheConfig:
    """Configuración del caché de tablas de determinantes"""
    cache_dir: Path = field(
        default_factory=lambda: Path(
            os.getenv("HANKEL_CACHE_DIR", str(Path.home() / ".cache" / "hankel"))
        ).expanduser()
    )
    enabled: bool = field(default_factory=lambda: _env_bool("HANKEL_CACHE_ENABLED", True))


@dataclass
class ExecutionConfig:
    """Configuración de ejecución en lote"""
    jobs: int = field(default_factory=lambda: int(os.getenv("HANKEL_JOBS", str(os.cpu_count() or 1))))
    log_level: str = field(default_factory=lambda: os.getenv("HANKEL_LOG_LEVEL", "INFO"))


@dataclass
class FamiliesConfig:
    """Configuración de las familias de determinantes"""
    # Mínimo para que las comprobaciones de periodo 10 tengan sentido
    min_n_max: int = 10
    # Orden máximo para determinantes exactos de no anulación
    exact_limit: int = 300
    lemma1_n_max: int = 120


@dataclass
class PadeConfig:
    """Configuración de aproximantes de Padé"""
    # Términos extra de la serie además de 2k
    series_margin: int = 2


@dataclass
class IrrationalityConfig:
    """Configuración de las aproximaciones racionales y cotas"""
    default_base: int = 2
    m_max: int = 8
    # Coeficientes exactos usados para acotar la cola del error (c(l))
    tail_order: int = 64
    log_dps: int = 40
    max_tail_at: int = 2 ** 20
    lemma4_horizon: int = 8


@dataclass(frozen=True)
class RunProfile:
    """Tamaños de ejecución predefinidos"""
    name: str
    n_max: int
    lemma1_n_max: int
    exact_limit: int
    m_max: int


_PROFILES: Dict[str, RunProfile] = {
    "desk": RunProfile(name="desk", n_max=200, lemma1_n_max=40, exact_limit=100, m_max=6),
    "acceptance": RunProfile(name="acceptance", n_max=2000, lemma1_n_max=120, exact_limit=300, m_max=8),
}


def get_profile(name: str) -> RunProfile:
    """Retorna el perfil de ejecución (desk por defecto)"""
    return _PROFILES.get(name, _PROFILES["desk"])


class Config:
    """Configuración principal del sistema"""
    def __init__(self):
        self.cache = CacheConfig()
        self.execution = ExecutionConfig()
        self.families = FamiliesConfig()
        self.pade = PadeConfig()
        self.irrationality = IrrationalityConfig()


# Instancia global de configuración
config = Config()
