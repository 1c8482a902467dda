"""Unit, transpose and counit of the adjunction between G and F."""
from typing import Optional

from src.checkers.pi_institution import PiInstitutionChecker
from src.core.fincat import FinFunctor, NatTransSet
from src.core.institution import Institution, InstComorphism
from src.core.pi_institution import PiComorphism, PiInstitution, identity_pi_comorphism
from src.core.subsets import subset_id
from src.generators.f_functor import GaloisConnection, f_object
from src.generators.g_functor import g_object
from src.utils.config import DEFAULT_CAP
from src.utils.errors import InvalidComorphism
from src.utils.logger import Logger


def unit(pi: PiInstitution) -> PiComorphism:
    """η_J = ⟨Id, Id⟩: J → F(G(J)); F(G(J)) shares J's signatures and sentences."""
    return PiComorphism(phi=FinFunctor.identity(pi.sig), alpha=NatTransSet.identity(pi.sen))


def transpose(
    h: PiComorphism,
    source: PiInstitution,
    institution: Institution,
    cap: int = DEFAULT_CAP,
    check: bool = True,
    logger: Optional[Logger] = None,
) -> InstComorphism:
    """h̄: G(J) → I for h: J → F(I), with β_Σ(m) = α_Σ⁻¹[m*]."""
    if check:
        target = f_object(institution, check=False)
        report = PiInstitutionChecker(cap, logger=logger).check_pi_comorphism(h, source, target)
        if not report.ok:
            raise InvalidComorphism("transpose needs a valid π-comorphism into F(I)", report)
    galois = GaloisConnection(institution)
    beta = {}
    for sig in source.sig.objects:
        image_sig = h.phi.obj(sig)
        universe = source.sentences(sig)
        beta[sig] = {
            m: subset_id(h.alpha.preimage(sig, galois.models_star(image_sig, {m})), universe)
            for m in institution.models(image_sig)
        }
    return InstComorphism(phi=h.phi, alpha=h.alpha, beta=beta)


def counit(institution: Institution, cap: int = DEFAULT_CAP, logger: Optional[Logger] = None) -> InstComorphism:
    """ε_I: G(F(I)) → I, the transpose of the identity on F(I); β sends m to its theory m*."""
    closure = f_object(institution, cap=cap, logger=logger)
    return transpose(identity_pi_comorphism(closure), closure, institution, cap=cap, check=False)


def unit_target(pi: PiInstitution, cap: int = DEFAULT_CAP) -> PiInstitution:
    return f_object(g_object(pi, cap), check=False)
