"""Strict and flexible signature morphisms and the formula translations they induce.

A strict morphism renames each connective to one of the same arity. A flexible
morphism sends an n-ary connective to a target formula over the markers
``x1 … xn``; translating substitutes the translated arguments for the markers.
"""
from dataclasses import dataclass
from typing import Mapping, Optional, Union

from src.core.checker import LawChecker
from src.core.report import ReportBuilder, ValidationReport
from src.core.subsets import all_subsets, subset_id
from src.logic.formula import Conn, Formula, PropSignature, Var, depth, render_formula, substitute, variables
from src.logic.matrix import LogicPresentation
from src.utils.errors import DepthOverflow, MissingMapping
from src.utils.logger import Logger

STRICT = "strict"
FLEXIBLE = "flexible"


def marker(i: int) -> str:
    return f"x{i}"


@dataclass(frozen=True)
class SigTranslation:
    kind: str
    mapping: Mapping[str, Union[str, Formula]]
    name: str = ""
    source: str = ""
    target: str = ""

    def growth_factor(self) -> int:
        """Largest image depth; every translated formula is at most this many times deeper."""
        if self.kind == STRICT:
            return 1
        return max((depth(image) for image in self.mapping.values()), default=1)


def translate_formula(t: SigTranslation, f: Formula) -> Formula:
    if isinstance(f, Var):
        return f
    if f.name not in t.mapping:
        raise MissingMapping(f"{t.name or 'translation'} has no image for {f.name}", {"connective": f.name})
    args = tuple(translate_formula(t, a) for a in f.args)
    image = t.mapping[f.name]
    if t.kind == STRICT:
        return Conn(image, args)
    return substitute(image, {marker(i + 1): a for i, a in enumerate(args)})


def reread_flexible(t: SigTranslation, source: PropSignature, name: Optional[str] = None) -> SigTranslation:
    """The strict renaming ``t`` as a flexible morphism: ``c ↦ t(c)(x1, …, xn)``."""
    mapping = {
        c: Conn(image, tuple(Var(marker(i + 1)) for i in range(source.arity(c))))
        for c, image in t.mapping.items()
    }
    return SigTranslation(FLEXIBLE, mapping, name or t.name, t.source, t.target)


class LogicMorphismChecker(LawChecker):

    def check_shape(self, t: SigTranslation, source: PropSignature, target: PropSignature) -> ValidationReport:
        with self.sweep("translation shape") as report:
            for c in source.names():
                if c not in t.mapping:
                    report.fail("missing-mapping", [c], f"no image for {c}")
                    continue
                image = t.mapping[c]
                if t.kind == STRICT:
                    if image not in target.connectives or target.connectives[image] != source.connectives[c]:
                        report.fail("strict-arity", [c, str(image)], f"{c} must be renamed to a connective of arity {source.connectives[c]}")
                    continue
                allowed = {marker(i + 1) for i in range(source.connectives[c])}
                stray = [x for x in variables(image) if x not in allowed]
                if stray:
                    report.fail("flexible-markers", [c, render_formula(image)], f"image of {c} uses {stray}")
                if not _within(image, target):
                    report.fail("flexible-markers", [c, render_formula(image)], f"image of {c} leaves the target signature")
        return self.finish(report)

    def ensure_fits(self, t: SigTranslation, source: LogicPresentation, target: LogicPresentation) -> None:
        if target.sentences is None:
            needed = source.depth_cap * max(1, t.growth_factor())
            if target.depth_cap < needed:
                raise DepthOverflow(
                    f"{target.name} has depth cap {target.depth_cap}, translations of {source.name} need {needed}",
                    {"needed": needed, "depth_cap": target.depth_cap},
                )
            return
        for f in source.universe:
            image = render_formula(translate_formula(t, f))
            if image not in target.index:
                raise DepthOverflow(
                    f"{image} (translation of {render_formula(f)}) lies outside the sentences of {target.name}",
                    {"formula": render_formula(f), "image": image},
                )

    def check_logic_morphism(self, t: SigTranslation, source: LogicPresentation, target: LogicPresentation) -> ValidationReport:
        builder = ReportBuilder()
        builder.include(self.check_shape(t, source.signature, target.signature))
        if builder.violations:
            return builder.build()
        self.ensure_fits(t, source, target)
        images = {f: render_formula(translate_formula(t, g)) for f, g in zip(source.universe_ids, source.universe)}
        with self.sweep(f"logic morphism {t.name}") as report:
            for gamma in all_subsets(source.universe_ids, self.cap):
                report.cases += 1
                consequences = source.closure(gamma)
                translated = target.closure({images[g] for g in gamma})
                for psi in source.universe_ids:
                    if psi in consequences and images[psi] not in translated:
                        report.fail(
                            "logic-morphism", [subset_id(gamma, source.universe_ids), psi],
                            f"Γ ⊢ {psi} but the translation of Γ does not entail {images[psi]}",
                        )
        builder.include(report.build())
        return builder.build()


def _within(f: Formula, sig: PropSignature) -> bool:
    if isinstance(f, Var):
        return True
    return sig.connectives.get(f.name) == len(f.args) and all(_within(a, sig) for a in f.args)


def check_logic_morphism(
    t: SigTranslation, source: LogicPresentation, target: LogicPresentation, logger: Optional[Logger] = None
) -> ValidationReport:
    return LogicMorphismChecker(logger=logger).check_logic_morphism(t, source, target)
