"""
Caché en disco de tablas de determinantes
"""
import csv
import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Optional

from hankel import __version__
from hankel.config import config
from hankel.models.families import CSV_HEADER, FamilyRow

logger = logging.getLogger(__name__)


class TableCache:
    """
    Caché de tablas FamilyRow en archivos CSV

    Una tabla guardada no se modifica nunca: se escribe en un archivo
    temporal y se reemplaza de forma atómica.
    """

    def __init__(self, cache_dir: Optional[Path] = None, enabled: bool = True):
        """
        Inicializa el caché

        Args:
            cache_dir: Directorio de los archivos CSV
            enabled: Si es False, get devuelve siempre None y set no escribe
        """
        self.cache_dir = Path(cache_dir or config.cache.cache_dir)
        self.enabled = enabled
        self.hits = 0
        self.misses = 0
        self.corrupt = 0
        if self.enabled:
            try:
                self.cache_dir.mkdir(parents=True, exist_ok=True)
            except OSError as e:
                logger.warning("No se pudo crear el directorio de caché %s: %s", self.cache_dir, e)
                self.enabled = False

    def _generate_key(self, sequence: str, n_max: int) -> str:
        """Genera una clave única para una tabla"""
        data = json.dumps({"sequence": sequence, "n_max": n_max, "version": __version__}, sort_keys=True)
        return hashlib.md5(data.encode()).hexdigest()

    def path_for(self, sequence: str, n_max: int) -> Path:
        return self.cache_dir / f"{sequence}-{n_max}-{self._generate_key(sequence, n_max)}.csv"

    def get(self, sequence: str, n_max: int) -> Optional[List[FamilyRow]]:
        """
        Obtiene una tabla del caché si existe y es válida

        Un archivo corrupto se elimina y se reporta con WARNING.

        Returns:
            Filas n = 1..n_max o None
        """
        if not self.enabled:
            return None
        path = self.path_for(sequence, n_max)
        if not path.exists():
            self.misses += 1
            return None
        try:
            rows = self._read(path, n_max)
        except (ValueError, OSError, csv.Error) as e:
            logger.warning("Tabla en caché corrupta (%s): %s; se recalcula", path.name, e)
            self.corrupt += 1
            self.misses += 1
            path.unlink(missing_ok=True)
            return None
        self.hits += 1
        logger.info("Tabla %s n_max=%d leída del caché", sequence, n_max)
        return rows

    def _read(self, path: Path, n_max: int) -> List[FamilyRow]:
        with path.open(newline="") as handle:
            reader = csv.reader(handle)
            header = next(reader, None)
            if header is None or tuple(header) != CSV_HEADER:
                raise ValueError("encabezado inválido")
            rows = [FamilyRow.from_csv_row(line) for line in reader]
        if [row.n for row in rows] != list(range(1, n_max + 1)):
            raise ValueError(f"se esperaban {n_max} filas consecutivas")
        return rows

    def set(self, sequence: str, n_max: int, rows: List[FamilyRow]) -> None:
        """
        Guarda una tabla en el caché

        Args:
            sequence: Nombre de la sucesión
            n_max: Índice máximo
            rows: Filas completas n = 1..n_max
        """
        if not self.enabled:
            return
        path = self.path_for(sequence, n_max)
        if path.exists():
            return
        try:
            fd, tmp_name = tempfile.mkstemp(dir=self.cache_dir, suffix=".tmp")
            with os.fdopen(fd, "w", newline="") as handle:
                write_table(handle, rows)
            os.replace(tmp_name, path)
        except OSError as e:
            logger.warning("No se pudo escribir la tabla en caché: %s", e)

    def clear(self) -> None:
        """Elimina todas las tablas del caché"""
        if not self.cache_dir.exists():
            return
        for path in self.cache_dir.glob("*.csv"):
            path.unlink(missing_ok=True)

    def get_stats(self) -> Dict[str, Any]:
        """Obtiene estadísticas del caché"""
        files = list(self.cache_dir.glob("*.csv")) if self.cache_dir.exists() else []
        return {
            "cache_dir": str(self.cache_dir),
            "enabled": self.enabled,
            "tables": len(files),
            "hits": self.hits,
            "misses": self.misses,
            "corrupt": self.corrupt,
        }


def write_table(handle, rows: List[FamilyRow]) -> None:
    """Escribe la tabla con encabezado n,a,b,c,d,e,g,h,x,y"""
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.to_csv_row())


# Instancias por directorio
_table_caches: Dict[str, TableCache] = {}


def get_table_cache(cache_dir: Optional[Path] = None) -> TableCache:
    """Obtiene la instancia del caché para un directorio"""
    directory = Path(cache_dir or config.cache.cache_dir)
    key = str(directory)
    if key not in _table_caches:
        _table_caches[key] = TableCache(directory, enabled=config.cache.enabled)
    return _table_caches[key]
