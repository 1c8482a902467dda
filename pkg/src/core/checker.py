from abc import ABC
from contextlib import contextmanager
from typing import Iterator, Optional

from src.core.report import ReportBuilder, ValidationReport
from src.utils.config import DEFAULT_CAP, DEFAULT_SEARCH_BOUND
from src.utils.logger import Logger


class LawChecker(ABC):
    def __init__(self, cap: int = DEFAULT_CAP, search_bound: int = DEFAULT_SEARCH_BOUND, logger: Optional[Logger] = None):
        self.cap = cap
        self.search_bound = search_bound
        self.logger = logger

    @contextmanager
    def sweep(self, name: str) -> Iterator[ReportBuilder]:
        builder = ReportBuilder()
        yield builder
        self._log_summary(name, builder)

    def finish(self, builder: ReportBuilder) -> ValidationReport:
        return builder.build()

    def _log_summary(self, name: str, builder: ReportBuilder) -> None:
        if not self.logger:
            return
        coverage = "exhaustive" if builder.exhaustive else "sampled"
        message = f"{name}: {builder.cases} cases ({coverage}), {len(builder.violations)} violations"
        if builder.violations:
            self.logger.warning(message)
        else:
            self.logger.check(message)
