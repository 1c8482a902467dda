from .fincat import FinCat, FinFunctor, Morphism, NatTransSet, SetFunctor, compose_mor
from .institution import Institution, InstComorphism, InstMorphism
from .pi_institution import ClosureOracle, ClosureTable, PiComorphism, PiInstitution
from .report import Status, ValidationReport, Violation

__all__ = [
    "FinCat",
    "FinFunctor",
    "Morphism",
    "NatTransSet",
    "SetFunctor",
    "compose_mor",
    "Institution",
    "InstComorphism",
    "InstMorphism",
    "ClosureOracle",
    "ClosureTable",
    "PiComorphism",
    "PiInstitution",
    "Status",
    "ValidationReport",
    "Violation",
]
