from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Tuple


class Status(Enum):
    PASS = "pass"
    FAIL = "fail"
    SAMPLED = "sampled"


@dataclass(frozen=True)
class Violation:
    law: str
    witness: Tuple[str, ...]
    message: str = ""

    def to_dict(self) -> Dict:
        return {"law": self.law, "witness": list(self.witness), "message": self.message}

    @staticmethod
    def from_dict(data: Dict) -> "Violation":
        return Violation(data["law"], tuple(data.get("witness", [])), data.get("message", ""))


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()
    exhaustive: bool = True

    @property
    def status(self) -> Status:
        if self.violations:
            return Status.FAIL
        return Status.PASS if self.exhaustive else Status.SAMPLED

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def laws(self) -> List[str]:
        return [v.law for v in self.violations]

    def merge(self, *others: "ValidationReport") -> "ValidationReport":
        violations = list(self.violations)
        exhaustive = self.exhaustive
        for other in others:
            violations.extend(other.violations)
            exhaustive = exhaustive and other.exhaustive
        return ValidationReport(tuple(violations), exhaustive)

    def has(self, law: str, *witness: str) -> bool:
        return any(v.law == law and (not witness or v.witness == tuple(witness)) for v in self.violations)

    def to_dict(self) -> Dict:
        return {
            "status": self.status.value,
            "exhaustive": self.exhaustive,
            "violations": [v.to_dict() for v in self.violations],
        }

    @staticmethod
    def from_dict(data: Dict) -> "ValidationReport":
        violations = tuple(Violation.from_dict(v) for v in data.get("violations", []))
        return ValidationReport(violations, exhaustive=data.get("exhaustive", data.get("status") != Status.SAMPLED.value))


@dataclass
class ReportBuilder:
    violations: List[Violation] = field(default_factory=list)
    exhaustive: bool = True
    cases: int = 0

    def fail(self, law: str, witness: Iterable[str], message: str = "") -> None:
        self.violations.append(Violation(law, tuple(str(w) for w in witness), message))

    def include(self, report: ValidationReport) -> None:
        self.violations.extend(report.violations)
        self.exhaustive = self.exhaustive and report.exhaustive

    def build(self) -> ValidationReport:
        return ValidationReport(tuple(self.violations), self.exhaustive)
