import sys
from enum import Enum
from datetime import datetime
from pathlib import Path
from typing import Optional, TextIO


class LogLevel(Enum):
    INFO = "ℹ️"
    CHECK = "🔎"
    SUCCESS = "✅"
    WARNING = "🚧"
    BOUND = "⛔"
    ERROR = "❌"


class Logger:
    # stdout is reserved for reports, so log lines go to stderr
    def __init__(self, log_file: Optional[Path] = None, stream: Optional[TextIO] = None, quiet: bool = False):
        self.log_file = log_file
        self.stream = stream
        self.quiet = quiet
        if log_file:
            log_file.parent.mkdir(parents=True, exist_ok=True)

    def log(self, message: str, level: LogLevel = LogLevel.INFO) -> None:
        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        formatted_message = f"{timestamp} {level.value} {message}"
        if not self.quiet:
            print(formatted_message, file=self.stream or sys.stderr)
        if self.log_file:
            with self.log_file.open('a', encoding='utf-8') as f:
                f.write(f"{formatted_message}\n")

    def info(self, message: str) -> None:
        self.log(message, LogLevel.INFO)

    def check(self, message: str) -> None:
        """One line per law sweep or command."""
        self.log(message, LogLevel.CHECK)

    def success(self, message: str) -> None:
        self.log(message, LogLevel.SUCCESS)

    def warning(self, message: str) -> None:
        self.log(message, LogLevel.WARNING)

    def bound(self, message: str) -> None:
        """An enumeration cap or search bound stopped the run."""
        self.log(message, LogLevel.BOUND)

    def error(self, message: str) -> None:
        self.log(message, LogLevel.ERROR)
