"""The semantic-closure functor from institutions to π-institutions.

Γ ↦ Γ* (models of Γ) and M ↦ M* (theory of M) form an antitone Galois
connection per signature; their round trip Γ** is the closure of F(I).
"""
from functools import partial
from typing import AbstractSet, FrozenSet, Optional

import numpy as np

from src.checkers.institution import InstitutionChecker
from src.core.institution import Institution, InstComorphism
from src.core.pi_institution import ClosureOracle, PiComorphism, PiInstitution
from src.utils.config import DEFAULT_CAP
from src.utils.errors import InvalidComorphism, InvalidStructure, ModelOutOfUniverse, SentenceOutOfUniverse
from src.utils.logger import Logger


class GaloisConnection:
    """Star operators of one institution, computed by scanning its satisfaction matrices."""

    def __init__(self, institution: Institution):
        self.institution = institution

    def sentences_star(self, sig: str, gamma: AbstractSet[str]) -> FrozenSet[str]:
        matrix = self.institution.matrix(sig)
        stray = set(gamma) - set(matrix.sentences)
        if stray:
            raise SentenceOutOfUniverse(f"{sorted(stray)} not in Sen({sig})", {"signature": sig, "sentences": sorted(stray)})
        columns = [matrix.sentence_index[s] for s in gamma]
        rows = np.all(matrix.values[:, columns], axis=1)
        return frozenset(m for m, keep in zip(matrix.models, rows) if keep)

    def models_star(self, sig: str, models: AbstractSet[str]) -> FrozenSet[str]:
        matrix = self.institution.matrix(sig)
        stray = set(models) - set(matrix.models)
        if stray:
            raise ModelOutOfUniverse(f"{sorted(stray)} not in Mod({sig})", {"signature": sig, "models": sorted(stray)})
        rows = [matrix.model_index[m] for m in models]
        columns = np.all(matrix.values[rows, :], axis=0)
        return frozenset(s for s, keep in zip(matrix.sentences, columns) if keep)

    def closure(self, sig: str, gamma: AbstractSet[str]) -> FrozenSet[str]:
        return self.models_star(sig, self.sentences_star(sig, gamma))


def sentences_star(institution: Institution, sig: str, gamma: AbstractSet[str]) -> FrozenSet[str]:
    return GaloisConnection(institution).sentences_star(sig, gamma)


def models_star(institution: Institution, sig: str, models: AbstractSet[str]) -> FrozenSet[str]:
    return GaloisConnection(institution).models_star(sig, models)


def f_object(
    institution: Institution, check: bool = True, cap: int = DEFAULT_CAP, logger: Optional[Logger] = None
) -> PiInstitution:
    """F(I): same signatures and sentences, closure C_Σ(Γ) = Γ**."""
    if check:
        report = InstitutionChecker(cap, logger=logger).validate_institution(institution)
        if not report.ok:
            raise InvalidStructure("F needs a valid institution", report)
    galois = GaloisConnection(institution)
    closure = {
        sig: ClosureOracle(institution.sentences(sig), partial(galois.closure, sig))
        for sig in institution.sig.objects
    }
    if logger:
        logger.info(f"F: built closures for {len(closure)} signatures")
    return PiInstitution(sig=institution.sig, sen=institution.sen, closure=closure)


def f_morphism(
    f: InstComorphism,
    source: Optional[Institution] = None,
    target: Optional[Institution] = None,
    cap: int = DEFAULT_CAP,
    logger: Optional[Logger] = None,
) -> PiComorphism:
    """F(⟨φ, α, β⟩) = ⟨φ, α⟩; the comorphism is checked when both ends are given."""
    if source is not None and target is not None:
        report = InstitutionChecker(cap, logger=logger).check_inst_comorphism(f, source, target)
        if not report.ok:
            raise InvalidComorphism("F needs a valid institution comorphism", report)
    return PiComorphism(phi=f.phi, alpha=f.alpha)
