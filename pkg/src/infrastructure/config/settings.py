import logging
import os
from dataclasses import dataclass
from pathlib import Path

from src.application.dtos.search_config import SearchConfig

logger = logging.getLogger(__name__)

# Cargar variables de entorno desde archivo .env si existe
# Esto se ejecuta al importar el módulo
try:
    from dotenv import load_dotenv
    # Buscar archivo .env en la raíz del proyecto (mismo nivel que app.py)
    env_path = Path(__file__).parent.parent.parent.parent / '.env'
    if env_path.exists():
        load_dotenv(env_path, override=True)  # .env tiene prioridad
        logger.debug("Archivo .env cargado desde: %s", env_path)
except ImportError:
    logger.warning("python-dotenv no está instalado; se usan solo variables del sistema")
except Exception as e:
    logger.warning("Error al cargar .env: %s", e)

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"La variable {name} debe ser un entero (recibido '{raw}')") from None


@dataclass
class Settings:
    """Configuración de la aplicación leída del entorno"""
    seed: int = 0
    max_scale: int = 12
    samples_per_scale: int = 512
    denom_bound: int = 256
    cover_bound: int = 16
    max_workers: int = 1
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> 'Settings':
        """Crea configuración desde archivo .env o variables de entorno del sistema

        Orden de prioridad:
        1. Archivo .env (cargado automáticamente con python-dotenv)
        2. Variables de entorno del sistema
        3. Valores por defecto
        """
        log_level = os.getenv("QMSTAB_LOG_LEVEL", "WARNING").strip().upper() or "WARNING"
        if log_level not in _LOG_LEVELS:
            raise ValueError(f"QMSTAB_LOG_LEVEL inválido: '{log_level}'")
        return cls(
            seed=_int_env("QMSTAB_SEED", 0),
            max_scale=_int_env("QMSTAB_MAX_SCALE", 12),
            samples_per_scale=_int_env("QMSTAB_SAMPLES", 512),
            denom_bound=_int_env("QMSTAB_DENOM_BOUND", 256),
            cover_bound=_int_env("QMSTAB_COVER_BOUND", 16),
            max_workers=_int_env("QMSTAB_MAX_WORKERS", 1),
            log_level=log_level,
        )

    def search_config(self, **overrides) -> SearchConfig:
        """SearchConfig con los valores del entorno; los `overrides` no nulos tienen prioridad"""
        values = dict(
            seed=self.seed,
            max_scale=self.max_scale,
            samples_per_scale=self.samples_per_scale,
            denom_bound=self.denom_bound,
            max_workers=self.max_workers,
        )
        values.update({key: value for key, value in overrides.items() if value is not None})
        return SearchConfig(**values)
