import os
import logging
from typing import Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"


# ==============================================================
# SETTINGS MODEL
# ==============================================================

class RuntimeSettings(BaseModel):
    threads: int = Field(0, ge=0)
    jacobi_chunk_size: int = Field(16, ge=1)
    progress: bool = True


class LoggingSettings(BaseModel):
    level: str = "INFO"
    file: Optional[str] = "exlines.log"


class ModelSettings(BaseModel):
    theta_index: int = Field(0, ge=0, le=15)
    verify_on_build: bool = True


class OctonionSettings(BaseModel):
    composition_samples: int = Field(1000, ge=1)
    seed: int = 0


class ReportSettings(BaseModel):
    timings: bool = False


class Settings(BaseModel):
    runtime: RuntimeSettings = RuntimeSettings()
    logging: LoggingSettings = LoggingSettings()
    models: ModelSettings = ModelSettings()
    octonion: OctonionSettings = OctonionSettings()
    reports: ReportSettings = ReportSettings()

    def resolve_threads(self, requested: Optional[int] = None) -> int:
        """Flag, then EXLINES_THREADS, then the YAML value; 0 anywhere means every core."""
        if requested is None:
            env = os.getenv("EXLINES_THREADS")
            requested = int(env) if env else self.runtime.threads
        if requested < 0:
            raise ValueError(f"thread count must be >= 0, got {requested}")
        return requested or (os.cpu_count() or 1)


# ==============================================================
# CONFIGURATION LOADER
# ==============================================================

def settings_path() -> str:
    base_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    return os.path.join(base_dir, "config", "settings.yml")


def load_settings(path: Optional[str] = None) -> Settings:
    """Load settings.yml and apply the EXLINES_* environment overrides."""
    config_path = path or settings_path()
    raw = {}
    if os.path.exists(config_path):
        with open(config_path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
    else:
        logger.warning(f"⚠ Settings file not found at {config_path}, using defaults")

    settings = Settings.model_validate(raw)
    level = os.getenv("EXLINES_LOG_LEVEL")
    if level:
        settings.logging.level = level.upper()
    log_file = os.getenv("EXLINES_LOG_FILE")
    if log_file is not None:
        settings.logging.file = log_file or None
    return settings


def configure_logging(settings: Settings, level: Optional[str] = None) -> None:
    """Log records go to stderr and, when configured, to a file; stdout stays for data."""
    handlers = [logging.StreamHandler()]
    if settings.logging.file:
        handlers.insert(0, logging.FileHandler(settings.logging.file, encoding="utf-8"))
    logging.basicConfig(
        level=getattr(logging, (level or settings.logging.level).upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
