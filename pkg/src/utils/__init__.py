from .config import ConfigManager as ConfigManager
from .logger import Logger as Logger

__all__ = [
    "ConfigManager",
    "Logger",
]
