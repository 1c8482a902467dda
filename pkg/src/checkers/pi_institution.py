from typing import FrozenSet, Iterable, Mapping, Optional, Sequence

from src.checkers.category import CategoryChecker
from src.core.checker import LawChecker
from src.core.pi_institution import PiComorphism, PiInstitution, closed_sets
from src.core.report import ReportBuilder, ValidationReport
from src.core.subsets import all_subsets, covering_pairs, ensure_within_cap, subset_id
from src.utils.logger import Logger

# caller-provided generator subsets per signature, used above the cap
Samples = Mapping[str, Sequence[FrozenSet[str]]]


class PiInstitutionChecker(LawChecker):

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.category_checker = CategoryChecker(self.cap, self.search_bound, self.logger)

    def _subsets(self, universe: Sequence[str], sig: str, samples: Optional[Samples], report: ReportBuilder) -> Iterable[FrozenSet[str]]:
        if len(universe) > self.cap and samples and sig in samples:
            report.exhaustive = False
            return [frozenset(s) for s in samples[sig]]
        return all_subsets(universe, self.cap)

    def _close(self, pi: PiInstitution, sig: str, subset: FrozenSet[str], report: ReportBuilder) -> Optional[FrozenSet[str]]:
        try:
            return pi.closure[sig](subset)
        except KeyError:
            report.fail("closure-total", [sig, subset_id(subset, pi.sentences(sig))], "closure is undefined on this subset")
            return None

    def check_closure_laws(self, pi: PiInstitution, samples: Optional[Samples] = None) -> ValidationReport:
        with self.sweep("closure laws") as report:
            for sig in pi.sig.objects:
                universe = pi.sentences(sig)
                everything = frozenset(universe)
                for gamma in self._subsets(universe, sig, samples, report):
                    report.cases += 1
                    witness = [sig, subset_id(gamma, universe)]
                    closed = self._close(pi, sig, gamma, report)
                    if closed is None:
                        continue
                    if not closed <= everything:
                        report.fail("closure-range", witness, f"C({witness[1]}) leaves Sen({sig})")
                        continue
                    if not gamma <= closed:
                        report.fail("extensivity", witness, f"{subset_id(gamma - closed, universe)} missing from C({witness[1]})")
                    again = self._close(pi, sig, closed, report)
                    if again is not None and again != closed:
                        report.fail("idempotence", witness, f"C(C({witness[1]})) = {subset_id(again, universe)}")
                if len(universe) > self.cap:
                    pairs = ((g, d) for g in samples[sig] for d in samples[sig] if frozenset(g) < frozenset(d))
                else:
                    pairs = covering_pairs(universe, self.cap)
                for gamma, delta in pairs:
                    report.cases += 1
                    small = self._close(pi, sig, frozenset(gamma), report)
                    large = self._close(pi, sig, frozenset(delta), report)
                    if small is not None and large is not None and not small <= large:
                        report.fail(
                            "monotonicity", [sig, subset_id(gamma, universe), subset_id(delta, universe)],
                            f"C grows {subset_id(small, universe)} to {subset_id(large, universe)}",
                        )
        return self.finish(report)

    def check_coherence(self, pi: PiInstitution, samples: Optional[Samples] = None) -> ValidationReport:
        sen = pi.sen
        with self.sweep("coherence") as report:
            for f in pi.sig.morphisms:
                universe = pi.sentences(f.src)
                for gamma in self._subsets(universe, f.src, samples, report):
                    report.cases += 1
                    closed = self._close(pi, f.src, gamma, report)
                    moved = self._close(pi, f.dst, sen.image(f.id, gamma), report)
                    if closed is None or moved is None:
                        continue
                    escaped = sen.image(f.id, closed) - moved
                    if escaped:
                        report.fail(
                            "coherence", [f.id, subset_id(gamma, universe)],
                            f"Sen({f.id}) sends C({subset_id(gamma, universe)}) outside C(Sen({f.id})(Γ)): "
                            f"{subset_id(escaped, pi.sentences(f.dst))}",
                        )
        return self.finish(report)

    def validate_pi_institution(self, pi: PiInstitution, samples: Optional[Samples] = None) -> ValidationReport:
        builder = ReportBuilder()
        builder.include(self.category_checker.check_category(pi.sig))
        builder.include(self.category_checker.check_set_functor(pi.sen))
        if builder.violations:
            return builder.build()
        builder.include(self.check_closure_laws(pi, samples))
        builder.include(self.check_coherence(pi, samples))
        return builder.build()

    def check_preimage_closed(self, pi: PiInstitution, f: str) -> ValidationReport:
        arrow = pi.sig.morphism(f)
        source_universe = pi.sentences(arrow.src)
        target_universe = pi.sentences(arrow.dst)
        ensure_within_cap(source_universe, self.cap, f"Sen({arrow.src})")
        with self.sweep(f"preimages along {f}") as report:
            for theory in closed_sets(pi, arrow.dst, self.cap):
                report.cases += 1
                preimage = pi.sen.preimage(f, theory)
                closed = self._close(pi, arrow.src, preimage, report)
                if closed is None:
                    continue
                for sentence in source_universe:
                    if sentence in closed and sentence not in preimage:
                        report.fail(
                            "preimage-closed", [f, subset_id(theory, target_universe), sentence],
                            f"{sentence} enters the closure of Sen({f})⁻¹({subset_id(theory, target_universe)})",
                        )
        return self.finish(report)

    def check_pi_comorphism(self, g: PiComorphism, source: PiInstitution, target: PiInstitution) -> ValidationReport:
        builder = ReportBuilder()
        if g.phi.source != source.sig:
            builder.fail("signature-mismatch", ["source"], "φ does not start at the source signature category")
        if g.phi.target != target.sig:
            builder.fail("signature-mismatch", ["target"], "φ does not land in the target signature category")
        if not builder.violations:
            builder.include(self.category_checker.check_reindexing(g.alpha, g.phi, source.sen, target.sen))
        if builder.violations:
            return builder.build()
        builder.include(self.category_checker.check_functor(g.phi))
        builder.include(self.category_checker.check_naturality(g.alpha))
        if builder.violations:
            return builder.build()
        with self.sweep("π-comorphism") as report:
            for sig in source.sig.objects:
                universe = source.sentences(sig)
                image_sig = g.phi.obj(sig)
                for gamma in all_subsets(universe, self.cap):
                    report.cases += 1
                    closed = self._close(source, sig, gamma, report)
                    translated = self._close(target, image_sig, g.alpha.image(sig, gamma), report)
                    if closed is None or translated is None:
                        continue
                    for sentence in universe:
                        if sentence in closed and g.alpha.apply(sig, sentence) not in translated:
                            report.fail(
                                "pi-compatibility", [sig, subset_id(gamma, universe), sentence],
                                f"{sentence} ∈ C({subset_id(gamma, universe)}) but "
                                f"α({sentence}) = {g.alpha.apply(sig, sentence)} is not in C'(α[Γ])",
                            )
        builder.include(report.build())
        return builder.build()


def check_closure_laws(pi: PiInstitution, samples: Optional[Samples] = None, logger: Optional[Logger] = None) -> ValidationReport:
    return PiInstitutionChecker(logger=logger).check_closure_laws(pi, samples)


def check_coherence(pi: PiInstitution, samples: Optional[Samples] = None, logger: Optional[Logger] = None) -> ValidationReport:
    return PiInstitutionChecker(logger=logger).check_coherence(pi, samples)


def validate_pi_institution(pi: PiInstitution, logger: Optional[Logger] = None) -> ValidationReport:
    return PiInstitutionChecker(logger=logger).validate_pi_institution(pi)


def check_preimage_closed(pi: PiInstitution, f: str, logger: Optional[Logger] = None) -> ValidationReport:
    return PiInstitutionChecker(logger=logger).check_preimage_closed(pi, f)


def check_pi_comorphism(
    g: PiComorphism, source: PiInstitution, target: PiInstitution, logger: Optional[Logger] = None
) -> ValidationReport:
    return PiInstitutionChecker(logger=logger).check_pi_comorphism(g, source, target)
