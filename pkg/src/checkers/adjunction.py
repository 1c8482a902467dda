from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from src.checkers.category import CategoryChecker
from src.checkers.institution import InstitutionChecker
from src.checkers.pi_institution import PiInstitutionChecker
from src.core.checker import LawChecker
from src.core.fincat import FinFunctor, NatTransSet, enumerate_functors
from src.core.institution import (
    Institution,
    InstComorphism,
    compose_inst_comorphisms,
    identity_inst_comorphism,
)
from src.core.pi_institution import (
    PiComorphism,
    PiInstitution,
    compose_pi_comorphisms,
    identity_pi_comorphism,
)
from src.core.report import ReportBuilder, ValidationReport
from src.core.subsets import all_functions, all_subsets, subset_id
from src.generators.adjunction import counit, transpose, unit, unit_target
from src.generators.f_functor import f_morphism, f_object
from src.generators.g_functor import g_morphism, g_object
from src.utils.errors import SearchSpaceTooLarge
from src.utils.logger import Logger

Family = Dict[str, Dict[str, str]]


def families(per_signature: Mapping[str, List[Dict[str, str]]], bound: int) -> Iterator[Family]:
    """Cartesian product of per-signature candidate functions."""
    size = 1
    for candidates in per_signature.values():
        size *= len(candidates)
    if size > bound:
        raise SearchSpaceTooLarge(f"{size} candidate families exceed the search bound {bound}", size=size, bound=bound)
    keys = list(per_signature)
    for picked in product(*(per_signature[k] for k in keys)):
        yield dict(zip(keys, picked))


class AdjunctionChecker(LawChecker):

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # inner sweeps run once per candidate, so they stay silent
        self.categories = CategoryChecker(self.cap, self.search_bound)
        self.institutions = InstitutionChecker(self.cap, self.search_bound)
        self.pi_institutions = PiInstitutionChecker(self.cap, self.search_bound)

    def _compare_closures(self, law: str, pi: PiInstitution, other: PiInstitution, report: ReportBuilder) -> None:
        for sig in pi.sig.objects:
            universe = pi.sentences(sig)
            for gamma in all_subsets(universe, self.cap):
                report.cases += 1
                here, there = pi.closure[sig](gamma), other.closure[sig](gamma)
                if here != there:
                    report.fail(
                        law, [sig, subset_id(gamma, universe)],
                        f"closures differ: {subset_id(here, universe)} vs {subset_id(there, universe)}",
                    )

    def check_unit(self, pi: PiInstitution) -> ValidationReport:
        target = unit_target(pi, self.cap)
        builder = ReportBuilder()
        builder.include(self.pi_institutions.check_pi_comorphism(unit(pi), pi, target))
        with self.sweep("unit closure") as report:
            self._compare_closures("unit-closure", pi, target, report)
        builder.include(report.build())
        return builder.build()

    def check_fg_identity(self, pi: PiInstitution) -> ValidationReport:
        target = f_object(g_object(pi, self.cap), check=False)
        with self.sweep("F∘G identity") as report:
            if target.sig != pi.sig:
                report.fail("fg-signature", [], "F(G(J)) has a different signature category")
            elif target.sen != pi.sen:
                report.fail("fg-sentences", [], "F(G(J)) has a different sentence functor")
            else:
                self._compare_closures("fg-identity", pi, target, report)
        return self.finish(report)

    def _compatible_betas(
        self, h: PiComorphism, closed: Institution, institution: Institution, report: ReportBuilder
    ) -> Optional[Dict[str, List[Dict[str, str]]]]:
        per_signature = {}
        for sig in closed.sig.objects:
            image_sig = h.phi.obj(sig)
            domain, codomain = institution.models(image_sig), closed.models(sig)
            sentences = closed.sentences(sig)
            compatible = []
            for beta in all_functions(domain, codomain, self.search_bound):
                report.cases += 1
                if all(
                    institution.satisfies(image_sig, m, h.alpha.apply(sig, s)) == closed.satisfies(sig, beta[m], s)
                    for m in domain
                    for s in sentences
                ):
                    compatible.append(beta)
            if not compatible:
                report.fail("no-transpose", [sig], f"no model map at {sig} is compatible with α")
                return None
            per_signature[sig] = compatible
        return per_signature

    def _natural(self, h: PiComorphism, beta: Family, closed: Institution, institution: Institution) -> bool:
        return all(
            closed.reduct(f.id, beta[f.dst][m]) == beta[f.src][institution.reduct(h.phi.mor(f.id), m)]
            for f in closed.sig.morphisms
            for m in institution.models(h.phi.obj(f.dst))
        )

    def check_universal_property(self, h: PiComorphism, source: PiInstitution, institution: Institution) -> ValidationReport:
        closed = g_object(source, self.cap)
        with self.sweep("universal property") as report:
            per_signature = self._compatible_betas(h, closed, institution, report)
            if per_signature is not None:
                valid = [beta for beta in families(per_signature, self.search_bound) if self._natural(h, beta, closed, institution)]
                if not valid:
                    report.fail("no-transpose", [], "no compatible model map family is natural")
                else:
                    expected = transpose(h, source, institution, self.cap, check=False)
                    if len(valid) > 1:
                        report.fail("uniqueness", [str(len(valid))], f"{len(valid)} model map families complete ⟨φ, α⟩")
                    if not any(beta == _plain(expected.beta) for beta in valid):
                        report.fail("transpose-mismatch", [], "α⁻¹[m*] is not among the valid model map families")
                    self._compare_pi(f_morphism(expected), h, "triangle", report)
        return self.finish(report)

    def _compare_pi(self, got: PiComorphism, expected: PiComorphism, law: str, report: ReportBuilder) -> None:
        if got.phi.on_objects != expected.phi.on_objects or got.phi.on_morphisms != expected.phi.on_morphisms:
            report.fail(law, ["φ"], "signature functors differ")
            return
        for sig in got.phi.source.objects:
            for x, y in expected.alpha.components[sig].items():
                report.cases += 1
                if got.alpha.components[sig].get(x) != y:
                    report.fail(law, [sig, x], f"α sends {x} to {got.alpha.components[sig].get(x)}, expected {y}")

    def _compare_inst(self, got: InstComorphism, expected: InstComorphism, law: str, report: ReportBuilder) -> None:
        self._compare_pi(PiComorphism(got.phi, got.alpha), PiComorphism(expected.phi, expected.alpha), law, report)
        for sig, component in expected.beta.items():
            for m, n in component.items():
                report.cases += 1
                if got.beta.get(sig, {}).get(m) != n:
                    report.fail(law, [sig, m], f"β sends {m} to {got.beta.get(sig, {}).get(m)}, expected {n}")

    def check_counit_triangle(self, institution: Institution) -> ValidationReport:
        """F(ε_I) ∘ η_{F(I)} = Id_{F(I)}."""
        closure = f_object(institution, check=False)
        composite = compose_pi_comorphisms(unit(closure), f_morphism(counit(institution, self.cap)))
        with self.sweep("counit triangle") as report:
            self._compare_pi(composite, identity_pi_comorphism(closure), "counit-triangle", report)
        return self.finish(report)

    def check_unit_triangle(self, pi: PiInstitution) -> ValidationReport:
        """ε_{G(J)} ∘ G(η_J) = Id_{G(J)}."""
        closed = g_object(pi, self.cap)
        lifted = g_morphism(unit(pi), pi, unit_target(pi, self.cap), self.cap, check=False)
        composite = compose_inst_comorphisms(lifted, counit(closed, self.cap))
        with self.sweep("unit triangle") as report:
            self._compare_inst(composite, identity_inst_comorphism(closed), "unit-triangle", report)
        return self.finish(report)

    def _natural_alphas(self, phi: FinFunctor, pi: PiInstitution, institution: Institution) -> Iterator[NatTransSet]:
        per_signature = {
            sig: list(all_functions(pi.sentences(sig), institution.sentences(phi.obj(sig)), self.search_bound))
            for sig in pi.sig.objects
        }
        for components in families(per_signature, self.search_bound):
            alpha = NatTransSet(pi.sen, institution.sen, components, target_reindex=phi)
            if self.categories.check_naturality(alpha).ok:
                yield alpha

    def count_hom_sets(self, pi: PiInstitution, institution: Institution) -> Tuple[int, int]:
        """Numbers of π-comorphisms J → F(I) and of comorphisms G(J) → I."""
        closure = f_object(institution, check=False)
        closed = g_object(pi, self.cap)
        pi_count = inst_count = 0
        for phi in enumerate_functors(pi.sig, institution.sig, self.search_bound):
            for alpha in self._natural_alphas(phi, pi, institution):
                if self.pi_institutions.check_pi_comorphism(PiComorphism(phi, alpha), pi, closure).ok:
                    pi_count += 1
                per_signature = {
                    sig: list(all_functions(institution.models(phi.obj(sig)), closed.models(sig), self.search_bound))
                    for sig in pi.sig.objects
                }
                for beta in families(per_signature, self.search_bound):
                    candidate = InstComorphism(phi, alpha, beta)
                    if self.institutions.check_inst_comorphism(candidate, closed, institution).ok:
                        inst_count += 1
        return pi_count, inst_count

    def check_hom_bijection(self, pi: PiInstitution, institution: Institution) -> ValidationReport:
        with self.sweep("hom-set bijection") as report:
            pi_count, inst_count = self.count_hom_sets(pi, institution)
            report.cases += pi_count + inst_count
            if self.logger:
                self.logger.info(f"{pi_count} π-comorphisms J → F(I), {inst_count} comorphisms G(J) → I")
            if pi_count != inst_count:
                report.fail(
                    "hom-bijection", [str(pi_count), str(inst_count)],
                    f"{pi_count} π-comorphisms into F(I) but {inst_count} comorphisms out of G(J)",
                )
        return self.finish(report)


def _plain(family: Mapping[str, Mapping[str, str]]) -> Family:
    return {sig: dict(fn) for sig, fn in family.items()}


def check_unit(pi: PiInstitution, logger: Optional[Logger] = None) -> ValidationReport:
    return AdjunctionChecker(logger=logger).check_unit(pi)


def check_fg_identity(pi: PiInstitution, logger: Optional[Logger] = None) -> ValidationReport:
    return AdjunctionChecker(logger=logger).check_fg_identity(pi)


def check_universal_property(
    h: PiComorphism, source: PiInstitution, institution: Institution, logger: Optional[Logger] = None
) -> ValidationReport:
    return AdjunctionChecker(logger=logger).check_universal_property(h, source, institution)


def check_counit_triangle(institution: Institution, logger: Optional[Logger] = None) -> ValidationReport:
    return AdjunctionChecker(logger=logger).check_counit_triangle(institution)


def check_unit_triangle(pi: PiInstitution, logger: Optional[Logger] = None) -> ValidationReport:
    return AdjunctionChecker(logger=logger).check_unit_triangle(pi)


def check_hom_bijection(pi: PiInstitution, institution: Institution, logger: Optional[Logger] = None) -> ValidationReport:
    return AdjunctionChecker(logger=logger).check_hom_bijection(pi, institution)
