"""Institutions and π-institutions built from logic presentations and their translations."""
from functools import reduce
from typing import Dict, Mapping, Optional, Sequence, Union

from src.checkers.category import CategoryChecker
from src.core.fincat import PATH_SEPARATOR, FinCat, FinFunctor, NatTransSet, SetFunctor
from src.core.institution import Institution
from src.core.pi_institution import ClosureOracle, PiComorphism, PiInstitution
from src.logic.formula import render_formula
from src.logic.matrix import LogicPresentation, eval_formula, render_valuation
from src.logic.translation import STRICT, LogicMorphismChecker, SigTranslation, translate_formula
from src.utils.config import DEFAULT_CAP
from src.utils.errors import DanglingReference, InvalidLogicMorphism, NotASubcategory
from src.utils.logger import Logger


def _by_name(logics: Sequence[LogicPresentation]) -> Dict[str, LogicPresentation]:
    return {l.name: l for l in logics}


def _signature_category(logics: Sequence[LogicPresentation], translations: Sequence[SigTranslation]) -> FinCat:
    names = [l.name for l in logics]
    for t in translations:
        for end in (t.source, t.target):
            if end not in names:
                raise DanglingReference(f"translation {t.name} refers to unknown logic {end}", {"logic": end})
    return FinCat.paths(names, [(t.name, t.source, t.target) for t in translations])


def _sentence_functor(
    sig: FinCat, logics: Mapping[str, LogicPresentation], translations: Sequence[SigTranslation]
) -> SetFunctor:
    steps = {
        t.name: {
            render_formula(f): render_formula(translate_formula(t, f)) for f in logics[t.source].universe
        }
        for t in translations
    }
    on_morphisms = {}
    for m in sig.morphisms:
        if sig.is_identity(m.id):
            on_morphisms[m.id] = {s: s for s in logics[m.src].universe_ids}
            continue
        fns = [steps[step] for step in m.id.split(PATH_SEPARATOR)]
        on_morphisms[m.id] = reduce(lambda fn, g: {x: g[y] for x, y in fn.items()}, fns[1:], fns[0])
    return SetFunctor(sig, {name: l.universe_ids for name, l in logics.items()}, on_morphisms)


def build_matrix_institution(
    logics: Union[LogicPresentation, Sequence[LogicPresentation]],
    translations: Sequence[SigTranslation] = (),
) -> Institution:
    """Sentences are the truncated formulas, models the valuations, satisfaction designation.

    Translations become signature morphisms whose reduct keeps the valuation,
    so source and target must share variables and truth values.
    """
    logics = [logics] if isinstance(logics, LogicPresentation) else list(logics)
    named = _by_name(logics)
    sig = _signature_category(logics, translations)
    checker = LogicMorphismChecker()
    for t in translations:
        source, target = named[t.source], named[t.target]
        if source.variables != target.variables or source.matrix.values != target.matrix.values:
            raise InvalidLogicMorphism(f"{t.name}: reducts need the same variables and truth values on both sides")
        checker.ensure_fits(t, source, target)
    mod_objects = {l.name: tuple(render_valuation(v) for v in l.valuations) for l in logics}
    mod_reduct = {m.id: {v: v for v in mod_objects[m.dst]} for m in sig.morphisms}
    sat = {
        l.name: frozenset(
            (render_valuation(v), s)
            for v in l.valuations
            for f, s in zip(l.universe, l.universe_ids)
            if eval_formula(l.matrix, v, f) in l.matrix.designated
        )
        for l in logics
    }
    return Institution(
        sig=sig, sen=_sentence_functor(sig, named, translations), mod_objects=mod_objects, mod_reduct=mod_reduct, sat=sat
    )


def build_logics_pi_institution(
    kind: str,
    logics: Sequence[LogicPresentation],
    translations: Sequence[SigTranslation] = (),
    check: bool = True,
    cap: int = DEFAULT_CAP,
    logger: Optional[Logger] = None,
) -> PiInstitution:
    """The π-institution of the given logics with closure = matrix consequence within each universe."""
    named = _by_name(logics)
    checker = LogicMorphismChecker(cap, logger=logger)
    for t in translations:
        if kind == STRICT and t.kind != STRICT:
            raise InvalidLogicMorphism(f"{t.name} is {t.kind}, but only strict morphisms belong to a strict category")
        checker.ensure_fits(t, named[t.source], named[t.target])
        if check:
            report = checker.check_logic_morphism(t, named[t.source], named[t.target])
            if not report.ok:
                raise InvalidLogicMorphism(f"{t.name} does not preserve consequence", report)
    sig = _signature_category(logics, translations)
    closure = {l.name: ClosureOracle(l.universe_ids, l.closure) for l in logics}
    if logger:
        logger.info(f"{kind} π-institution over {len(logics)} logics and {len(sig.morphisms)} morphisms")
    return PiInstitution(sig=sig, sen=_sentence_functor(sig, named, translations), closure=closure)


def build_plus_comorphism(
    strict: PiInstitution,
    flexible: PiInstitution,
    embedding: Optional[Mapping[str, Mapping[str, str]]] = None,
) -> PiComorphism:
    """⟨embedding, identity⟩ from the strict π-institution into the flexible one.

    ``embedding`` has ``objects`` and ``morphisms`` maps on generators; both
    default to the identity on names.
    """
    embedding = embedding or {}
    objects = dict(embedding.get("objects", {}))
    arrows = dict(embedding.get("morphisms", {}))
    source, target = strict.sig, flexible.sig
    on_objects = {o: objects.get(o, o) for o in source.objects}
    for o, image in on_objects.items():
        if image not in target.objects:
            raise NotASubcategory(f"logic {o} has no counterpart {image}", {"object": o})
    on_morphisms = {}
    for m in source.morphisms:
        if source.is_identity(m.id):
            on_morphisms[m.id] = target.identity[on_objects[m.src]]
            continue
        images = [arrows.get(step, step) for step in m.id.split(PATH_SEPARATOR)]
        missing = [g for g in images if not target.has_morphism(g)]
        if missing:
            raise NotASubcategory(f"morphism {m.id} needs {missing}, which the flexible side lacks", {"morphism": m.id})
        on_morphisms[m.id] = reduce(lambda f, g: target.compose.get((f, g), f"{f}{PATH_SEPARATOR}{g}"), images)
    phi = FinFunctor(source, target, on_objects, on_morphisms)
    report = CategoryChecker().check_functor(phi)
    if not report.ok:
        raise NotASubcategory("the embedding is not a functor", {"laws": report.laws})
    components = {}
    for o in source.objects:
        missing = set(strict.sentences(o)) - set(flexible.sentences(on_objects[o]))
        if missing:
            raise NotASubcategory(f"sentences {sorted(missing)} of {o} are missing on the flexible side", {"object": o})
        components[o] = {s: s for s in strict.sentences(o)}
    alpha = NatTransSet(strict.sen, flexible.sen, components, target_reindex=phi)
    report = CategoryChecker().check_naturality(alpha)
    if not report.ok:
        raise NotASubcategory("the flexible images of the strict morphisms translate differently", {"laws": report.laws})
    return PiComorphism(phi=phi, alpha=alpha)
