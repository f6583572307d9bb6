import logging
import os

from ..core.exceptions import ConfigurationError

FORMAT_VERSION = 1

DEFAULT_FIELD = "Q"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2
EXIT_INTERRUPT = 130

# Parameter grids swept by ``catalog check`` when no --param is given
CATALOG_PARAMETERS = {
    "Q": ("1", "2", "3", "-1"),
    "GF": ("1", "2", "3"),
}

LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


class Config:
    """Process-wide runtime toggles shared by the CLI handlers."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
            cls._instance.options = {"witness": False, "color": False, "verbose": False}
        return cls._instance

    def update(self, **options):
        self.options.update(options)
        return self

    def get(self, key, default=None):
        return self.options.get(key, default)


def env_log_level(default: int = logging.WARNING) -> int:
    value = os.environ.get("HOMYD_LOG_LEVEL")
    if value is None or value == "":
        return default
    try:
        return LOG_LEVELS[value.strip().upper()]
    except KeyError:
        raise ConfigurationError(f"HOMYD_LOG_LEVEL={value!r} is not a logging level") from None


def env_color(default: bool = False) -> bool:
    value = os.environ.get("HOMYD_COLOR")
    if value is None or value == "":
        return default
    if value.strip() not in ("0", "1"):
        raise ConfigurationError(f"HOMYD_COLOR={value!r} must be 0 or 1")
    return value.strip() == "1"
