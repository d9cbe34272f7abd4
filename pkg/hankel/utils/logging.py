"""
Configuración de logging para la CLI y los procesos en lote
"""
import logging
import sys

_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s - %(message)s"

_configured = False


def configure_logging(level: str = "INFO") -> None:
    """
    Configura el logger raíz una sola vez

    Args:
        level: Nivel de logging (DEBUG, INFO, WARNING...)
    """
    global _configured
    root = logging.getLogger()
    root.setLevel(level.upper())
    if _configured:
        return
    # Los reportes van a stdout; los logs siempre a stderr
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    root.addHandler(handler)
    _configured = True
