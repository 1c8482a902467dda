from typing import Callable, Optional

from src.core.checker import LawChecker
from src.core.institution import Institution, InstComorphism
from src.core.report import ReportBuilder, ValidationReport
from src.core.subsets import all_subsets, covering_pairs, subset_id
from src.generators.f_functor import GaloisConnection
from src.utils.logger import Logger


class GaloisChecker(LawChecker):
    """Exhaustive checks of the star operators; ``connection`` builds them from an institution."""

    def __init__(self, *args, connection: Callable[[Institution], GaloisConnection] = GaloisConnection, **kwargs):
        super().__init__(*args, **kwargs)
        self.connection = connection

    def check_galois_laws(self, institution: Institution, sig: Optional[str] = None) -> ValidationReport:
        signatures = [sig] if sig is not None else list(institution.sig.objects)
        galois = self.connection(institution)
        with self.sweep("galois laws") as report:
            for s in signatures:
                self._check_sentence_side(galois, institution, s, report)
                self._check_model_side(galois, institution, s, report)
        return self.finish(report)

    def _check_sentence_side(self, galois: GaloisConnection, institution: Institution, sig: str, report: ReportBuilder) -> None:
        universe = institution.sentences(sig)
        models = institution.models(sig)
        for gamma, delta in covering_pairs(universe, self.cap):
            report.cases += 1
            if not galois.sentences_star(sig, delta) <= galois.sentences_star(sig, gamma):
                report.fail(
                    "sentences-antitone", [sig, subset_id(gamma, universe), subset_id(delta, universe)],
                    "enlarging Γ enlarged Γ*",
                )
        for gamma in all_subsets(universe, self.cap):
            report.cases += 1
            star = galois.sentences_star(sig, gamma)
            closed = galois.models_star(sig, star)
            if not gamma <= closed:
                report.fail("sentences-extensive", [sig, subset_id(gamma, universe)], "Γ is not contained in Γ**")
            if galois.sentences_star(sig, closed) != star:
                report.fail(
                    "triple-star", [sig, subset_id(gamma, universe)],
                    f"Γ* = {subset_id(star, models)} but Γ*** = {subset_id(galois.sentences_star(sig, closed), models)}",
                )

    def _check_model_side(self, galois: GaloisConnection, institution: Institution, sig: str, report: ReportBuilder) -> None:
        universe = institution.models(sig)
        for small, large in covering_pairs(universe, self.cap):
            report.cases += 1
            if not galois.models_star(sig, large) <= galois.models_star(sig, small):
                report.fail(
                    "models-antitone", [sig, subset_id(small, universe), subset_id(large, universe)],
                    "enlarging M enlarged M*",
                )
        for models in all_subsets(universe, self.cap):
            report.cases += 1
            theory = galois.models_star(sig, models)
            closed = galois.sentences_star(sig, theory)
            if not models <= closed:
                report.fail("models-extensive", [sig, subset_id(models, universe)], "M is not contained in M**")
            if galois.models_star(sig, closed) != theory:
                report.fail("models-triple-star", [sig, subset_id(models, universe)], "M* differs from M***")

    def check_lemma1(self, f: InstComorphism, source: Institution, target: Institution) -> ValidationReport:
        """β[(α[Γ])*] ⊆ Γ* and α[(β[M])*] ⊆ M* for every Σ, Γ and M."""
        here, there = self.connection(source), self.connection(target)
        with self.sweep("comorphism star inclusions") as report:
            for sig in source.sig.objects:
                image_sig = f.phi.obj(sig)
                alpha, beta = f.alpha.components[sig], f.beta[sig]
                universe = source.sentences(sig)
                for gamma in all_subsets(universe, self.cap):
                    report.cases += 1
                    pulled = {beta[m] for m in there.sentences_star(image_sig, {alpha[s] for s in gamma})}
                    models = here.sentences_star(sig, gamma)
                    for m in source.models(sig):
                        if m in pulled and m not in models:
                            report.fail(
                                "lemma1-sentences", [sig, subset_id(gamma, universe), m],
                                f"{m} lies in β[(α[Γ])*] but not in Γ*",
                            )
                target_models = target.models(image_sig)
                for models in all_subsets(target_models, self.cap):
                    report.cases += 1
                    pushed = {alpha[s] for s in here.models_star(sig, {beta[m] for m in models})}
                    theory = there.models_star(image_sig, models)
                    for sentence in target.sentences(image_sig):
                        if sentence in pushed and sentence not in theory:
                            report.fail(
                                "lemma1-models", [sig, subset_id(models, target_models), sentence],
                                f"{sentence} lies in α[(β[M])*] but not in M*",
                            )
        return self.finish(report)


def check_galois_laws(institution: Institution, sig: Optional[str] = None, logger: Optional[Logger] = None) -> ValidationReport:
    return GaloisChecker(logger=logger).check_galois_laws(institution, sig)


def check_lemma1(
    f: InstComorphism, source: Institution, target: Institution, logger: Optional[Logger] = None
) -> ValidationReport:
    return GaloisChecker(logger=logger).check_lemma1(f, source, target)
