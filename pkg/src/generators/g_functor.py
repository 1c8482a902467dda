"""The closed-theory functor from π-institutions to institutions.

Models of G(J) at Σ are the closed sets of C_Σ, named by their canonical
subset id; they are ordered by inclusion and satisfy exactly their members.
"""
from typing import Dict, FrozenSet, Optional

from src.checkers.pi_institution import PiInstitutionChecker
from src.core.institution import Institution, InstComorphism
from src.core.pi_institution import PiComorphism, PiInstitution, closed_sets
from src.core.subsets import parse_subset_id, subset_id
from src.utils.config import DEFAULT_CAP
from src.utils.errors import InvalidComorphism
from src.utils.logger import Logger


def theory_of(model: str) -> FrozenSet[str]:
    return parse_subset_id(model)


def g_object(pi: PiInstitution, cap: int = DEFAULT_CAP, logger: Optional[Logger] = None) -> Institution:
    theories = {sig: closed_sets(pi, sig, cap) for sig in pi.sig.objects}
    mod_objects = {
        sig: tuple(subset_id(t, pi.sentences(sig)) for t in closed) for sig, closed in theories.items()
    }
    mod_order = {
        sig: frozenset(
            (subset_id(t, pi.sentences(sig)), subset_id(u, pi.sentences(sig)))
            for t in closed for u in closed if t < u
        )
        for sig, closed in theories.items()
    }
    mod_reduct: Dict[str, Dict[str, str]] = {}
    for f in pi.sig.morphisms:
        source_universe = pi.sentences(f.src)
        mod_reduct[f.id] = {
            subset_id(t, pi.sentences(f.dst)): subset_id(pi.sen.preimage(f.id, t), source_universe)
            for t in theories[f.dst]
        }
    sat = {
        sig: frozenset((subset_id(t, pi.sentences(sig)), s) for t in closed for s in t)
        for sig, closed in theories.items()
    }
    if logger:
        counts = ", ".join(f"{sig}: {len(closed)}" for sig, closed in theories.items())
        logger.info(f"G: closed theories per signature ({counts})")
    return Institution(
        sig=pi.sig, sen=pi.sen, mod_objects=mod_objects, mod_reduct=mod_reduct, sat=sat, mod_order=mod_order
    )


def g_morphism(
    h: PiComorphism,
    source: PiInstitution,
    target: PiInstitution,
    cap: int = DEFAULT_CAP,
    check: bool = True,
    logger: Optional[Logger] = None,
) -> InstComorphism:
    """G(⟨φ, α⟩) = ⟨φ, α, β⟩ with β_Σ(m) = α_Σ⁻¹(m)."""
    if check:
        report = PiInstitutionChecker(cap, logger=logger).check_pi_comorphism(h, source, target)
        if not report.ok:
            raise InvalidComorphism("G needs a valid π-comorphism", report)
    beta = {}
    for sig in source.sig.objects:
        image_sig = h.phi.obj(sig)
        beta[sig] = {
            subset_id(t, target.sentences(image_sig)): subset_id(h.alpha.preimage(sig, t), source.sentences(sig))
            for t in closed_sets(target, image_sig, cap)
        }
    return InstComorphism(phi=h.phi, alpha=h.alpha, beta=beta)
