import os
from dataclasses import dataclass
from typing import Dict, Optional
from pathlib import Path
import json

DEFAULT_CONFIG_PATH = Path("config/config.json")
CAP_ENV_VAR = "INSTKIT_CAP"

DEFAULT_CAP = 16
DEFAULT_SEARCH_BOUND = 2 ** 20
DEFAULT_FORMULA_BOUND = 4096


@dataclass(frozen=True)
class RandomLimits:
    signatures: int = 3
    sentences: int = 4
    models: int = 4


class ConfigManager:
    def __init__(self, config_path: Optional[Path] = None):
        if config_path is None:
            config_path = DEFAULT_CONFIG_PATH
            self.config = self._load_json(config_path) if config_path.exists() else {}
        else:
            self.config = self._load_json(config_path)
        # relative paths in the file are anchored at its directory
        self.config_dir = Path(config_path).resolve().parent

    def _load_json(self, config_path: Path) -> Dict:
        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        with config_path.open(encoding="utf-8") as f:
            return json.load(f)

    @property
    def enumeration_cap(self) -> int:
        from_env = os.environ.get(CAP_ENV_VAR)
        if from_env:
            try:
                return int(from_env)
            except ValueError:
                raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {from_env!r}")
        return self.config.get("ENUMERATION_CAP", DEFAULT_CAP)

    @property
    def search_bound(self) -> int:
        return self.config.get("SEARCH_BOUND", DEFAULT_SEARCH_BOUND)

    @property
    def formula_bound(self) -> int:
        return self.config.get("FORMULA_BOUND", DEFAULT_FORMULA_BOUND)

    @property
    def log_file(self) -> Optional[Path]:
        log_file = self.config.get("LOG_FILE")
        return self.config_dir / log_file if log_file else None

    @property
    def report_format(self) -> str:
        return self.config.get("REPORT_FORMAT", "text")

    @property
    def random_limits(self) -> RandomLimits:
        limits = self.config.get("RANDOM_LIMITS", {})
        return RandomLimits(
            signatures=limits.get("signatures", 3),
            sentences=limits.get("sentences", 4),
            models=limits.get("models", 4),
        )

    def resolve_cap(self, flag_value: Optional[int]) -> int:
        if flag_value is not None:
            return flag_value
        return self.enumeration_cap
