"""Conversion between JSON document bodies and the library structures.

Parsing checks cross-references only (every id must name something declared);
law violations such as a partial sentence map are left to the checkers.
Dumping produces canonical bodies: declaration order for objects and
universes, canonical subset order for sets.
"""
import json
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, Union

from src.core.fincat import FinCat, FinFunctor, NatTransSet, SetFunctor
from src.core.institution import Institution, InstComorphism, InstMorphism
from src.core.pi_institution import ClosureTable, PiComorphism, PiInstitution, table_closure
from src.core.subsets import canonical, parse_subset_id, subset_id
from src.logic.formula import PropSignature, parse_formula, render_formula
from src.logic.matrix import LogicMatrix, LogicPresentation, lukasiewicz_matrix
from src.logic.translation import FLEXIBLE, STRICT, SigTranslation, marker
from src.utils.config import DEFAULT_CAP, DEFAULT_FORMULA_BOUND
from src.utils.errors import DanglingReference, ParseError

Body = Dict[str, Any]
Maps = Dict[str, Dict[str, str]]

INSTITUTION = "institution"
PI_INSTITUTION = "pi-institution"
INST_COMORPHISM = "inst-comorphism"
INST_MORPHISM = "inst-morphism"
PI_COMORPHISM = "pi-comorphism"
LOGIC = "logic"
TRANSLATION = "translation"


@dataclass(frozen=True)
class ComorphismDocument:
    """A (co)morphism together with the structures at both of its ends.

    ``institution`` is set when a π-comorphism targets F(I) through an
    institution document; ``target`` is then F(I) itself.
    """

    morphism: Union[InstComorphism, InstMorphism, PiComorphism]
    source: Union[Institution, PiInstitution]
    target: Union[Institution, PiInstitution]
    institution: Optional[Institution] = None


@dataclass(frozen=True)
class TranslationDocument:
    translation: SigTranslation
    source: LogicPresentation
    target: LogicPresentation


def _field(body: Body, key: str, what: str) -> Any:
    if key not in body:
        raise ParseError(f"{what}: missing field {key!r}")
    return body[key]


def _dangling(what: str, name: str, **details) -> DanglingReference:
    return DanglingReference(f"{what} refers to unknown {name}", details)


def parse_category(body: Body) -> FinCat:
    objects = list(_field(body, "objects", "category"))
    if len(set(objects)) != len(objects):
        raise ParseError("category: duplicate object ids")
    arrows = []
    for entry in body.get("morphisms", []):
        if not isinstance(entry, dict):
            raise ParseError(f"category: morphism entries are objects, got {entry!r}")
        f = _field(entry, "id", "morphism")
        for end in (_field(entry, "src", f), _field(entry, "dst", f)):
            if end not in objects:
                raise _dangling(f"morphism {f}", f"object {end}", morphism=f, object=end)
        arrows.append((f, entry["src"], entry["dst"]))
    c = FinCat.build(objects, arrows)
    compose = []
    for entry in body.get("compose", []):
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise ParseError(f"category: compose entries are [f, g, fg] triples, got {entry!r}")
        for name in entry:
            if not c.has_morphism(name):
                raise _dangling("compose table", f"morphism {name}", morphism=name)
        compose.append(tuple(entry))
    return FinCat.build(objects, arrows, compose)


def _fill_composites(c: FinCat, maps: Maps, contravariant: bool) -> None:
    """Derive missing maps of composites from the composition table."""
    changed = True
    while changed:
        changed = False
        for (f, g), fg in c.compose.items():
            if fg in maps or f not in maps or g not in maps:
                continue
            first, second = (maps[g], maps[f]) if contravariant else (maps[f], maps[g])
            maps[fg] = {x: second[y] for x, y in first.items() if y in second}
            changed = True


def _parse_maps(
    c: FinCat, universes: Mapping[str, Sequence[str]], raw: Mapping[str, Mapping[str, str]], what: str,
    contravariant: bool = False,
) -> Maps:
    maps: Maps = {}
    for f, fn in raw.items():
        if not c.has_morphism(f):
            raise _dangling(what, f"morphism {f}", morphism=f)
        domain, codomain = (c.dst(f), c.src(f)) if contravariant else (c.src(f), c.dst(f))
        for x, y in fn.items():
            if x not in universes[domain]:
                raise _dangling(f"{what} of {f}", f"element {x} of {domain}", morphism=f, element=x)
            if y not in universes[codomain]:
                raise _dangling(f"{what} of {f}", f"element {y} of {codomain}", morphism=f, element=y)
        maps[f] = dict(fn)
    for o in c.objects:
        maps.setdefault(c.identity[o], {x: x for x in universes[o]})
    _fill_composites(c, maps, contravariant)
    missing = [m.id for m in c.morphisms if m.id not in maps]
    if missing:
        raise DanglingReference(f"{what} has no entry for {missing}", {"morphisms": missing})
    return maps


def _universes(c: FinCat, raw: Mapping[str, Sequence[str]], what: str) -> Dict[str, Tuple[str, ...]]:
    for o in raw:
        if o not in c.objects:
            raise _dangling(what, f"signature {o}", signature=o)
    return {o: tuple(raw.get(o, ())) for o in c.objects}


def parse_sentence_functor(c: FinCat, body: Body) -> SetFunctor:
    universes = _universes(c, body.get("sen", {}), "sen")
    return SetFunctor(c, universes, _parse_maps(c, universes, body.get("senMap", {}), "senMap"))


def _pairs(raw: Mapping[str, Sequence], c: FinCat, left: Mapping, right: Mapping, what: str) -> Dict[str, FrozenSet]:
    pairs = {}
    for o, entries in raw.items():
        if o not in c.objects:
            raise _dangling(what, f"signature {o}", signature=o)
        for entry in entries:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise ParseError(f"{what}: entries are pairs, got {entry!r}")
            if entry[0] not in left[o]:
                raise _dangling(f"{what} at {o}", f"model {entry[0]}", signature=o, model=entry[0])
            if entry[1] not in right[o]:
                raise _dangling(f"{what} at {o}", f"{entry[1]}", signature=o, element=entry[1])
        pairs[o] = frozenset(tuple(entry) for entry in entries)
    return pairs


def parse_institution(body: Body) -> Institution:
    c = parse_category(body)
    sen = parse_sentence_functor(c, body)
    models = _universes(c, _field(body, "mod", "institution"), "mod")
    reduct = _parse_maps(c, models, body.get("reduct", {}), "reduct", contravariant=True)
    return Institution(
        sig=c,
        sen=sen,
        mod_objects=models,
        mod_reduct=reduct,
        sat=_pairs(body.get("sat", {}), c, models, sen.on_objects, "sat"),
        mod_order=_pairs(body.get("modOrder", {}), c, models, models, "modOrder"),
    )


def parse_closure_table(c: FinCat, sen: SetFunctor, raw: Mapping[str, Mapping[str, Sequence[str]]]) -> Dict[str, ClosureTable]:
    closure = {}
    for o in raw:
        if o not in c.objects:
            raise _dangling("closure table", f"signature {o}", signature=o)
    for o in c.objects:
        universe = sen.universe(o)
        table = {}
        for key, value in raw.get(o, {}).items():
            try:
                subset = parse_subset_id(key)
            except (ValueError, TypeError):
                raise ParseError(f"closure table at {o}: {key!r} is not a subset id")
            for x in subset | frozenset(value):
                if x not in universe:
                    raise _dangling(f"closure table at {o}", f"sentence {x}", signature=o, sentence=x)
            table[subset] = frozenset(value)
        closure[o] = ClosureTable(universe, table)
    return closure


def parse_signature(body: Body) -> PropSignature:
    connectives = _field(body, "connectives", "logic")
    if not isinstance(connectives, dict):
        raise ParseError("logic: connectives map names to arities")
    return PropSignature(dict(connectives))


def parse_matrix(body: Body, signature: PropSignature) -> LogicMatrix:
    """A built-in matrix (connectives named after operations unless ``semantics`` says otherwise) or explicit tables."""
    builtin = body.get("builtin")
    semantics = body.get("semantics") or {c: c for c in signature.names()}
    if builtin == "boolean":
        return lukasiewicz_matrix(2, semantics)
    if builtin == "lukasiewicz":
        return lukasiewicz_matrix(int(body.get("values", 3)), semantics)
    if builtin is not None:
        raise ParseError(f"matrix: unknown builtin {builtin!r}")
    values = tuple(_field(body, "values", "matrix"))
    designated = frozenset(_field(body, "designated", "matrix"))
    for v in designated:
        if v not in values:
            raise _dangling("designated set", f"truth value {v}", value=v)
    interp = {}
    for name, table in _field(body, "tables", "matrix").items():
        interp[name] = {}
        for key, result in table.items():
            args = tuple(key.split(",")) if key else ()
            for v in args + (result,):
                if v not in values:
                    raise _dangling(f"table of {name}", f"truth value {v}", connective=name, value=v)
            interp[name][args] = result
    return LogicMatrix(values, designated, interp)


def parse_logic(body: Body, formula_bound: int = DEFAULT_FORMULA_BOUND) -> LogicPresentation:
    signature = parse_signature(body)
    variables = tuple(body.get("variables", ["p"]))
    sentences = body.get("sentences")
    if sentences is not None:
        sentences = tuple(parse_formula(s, signature, variables) for s in sentences)
    return LogicPresentation(
        name=_field(body, "name", "logic"),
        signature=signature,
        matrix=parse_matrix(_field(body, "matrix", "logic"), signature),
        variables=variables,
        depth_cap=int(body.get("depthCap", 1)),
        sentences=sentences,
        formula_bound=int(body.get("formulaBound", formula_bound)),
    )


def parse_translation(body: Body, source: LogicPresentation, target: LogicPresentation) -> SigTranslation:
    mode = body.get("mode", STRICT)
    if mode not in (STRICT, FLEXIBLE):
        raise ParseError(f"translation: mode is {STRICT!r} or {FLEXIBLE!r}, got {mode!r}")
    raw = _field(body, "mapping", "translation")
    mapping = {}
    for c, image in raw.items():
        if c not in source.signature.connectives:
            raise _dangling("translation mapping", f"connective {c} of {source.name}", connective=c)
        if mode == STRICT:
            mapping[c] = image
        else:
            markers = [marker(i + 1) for i in range(source.signature.connectives[c])]
            mapping[c] = parse_formula(image, target.signature, markers)
    return SigTranslation(mode, mapping, body.get("name", f"{source.name}-{target.name}"), source.name, target.name)


def parse_functor(body: Body, source: FinCat, target: FinCat) -> FinFunctor:
    raw_objects = body.get("objects", {})
    on_objects = {}
    for o in source.objects:
        image = raw_objects.get(o, o if o in target.objects else None)
        if image is None:
            raise DanglingReference(f"φ has no image for signature {o}", {"signature": o})
        if image not in target.objects:
            raise _dangling(f"φ({o})", f"signature {image}", signature=image)
        on_objects[o] = image
    on_morphisms = {source.identity[o]: target.identity[on_objects[o]] for o in source.objects}
    for f, image in body.get("morphisms", {}).items():
        if not source.has_morphism(f):
            raise _dangling("φ", f"morphism {f}", morphism=f)
        if not target.has_morphism(image):
            raise _dangling(f"φ({f})", f"morphism {image}", morphism=image)
        on_morphisms[f] = image
    for m in source.morphisms:
        if m.id not in on_morphisms and target.has_morphism(m.id):
            on_morphisms[m.id] = m.id
    changed = True
    while changed:
        changed = False
        for (f, g), fg in source.compose.items():
            if fg not in on_morphisms and f in on_morphisms and g in on_morphisms:
                composite = target.compose.get((on_morphisms[f], on_morphisms[g]))
                if composite is not None:
                    on_morphisms[fg] = composite
                    changed = True
    missing = [m.id for m in source.morphisms if m.id not in on_morphisms]
    if missing:
        raise DanglingReference(f"φ has no image for {missing}", {"morphisms": missing})
    return FinFunctor(source, target, on_objects, on_morphisms)


def _components(raw: Mapping[str, Mapping[str, str]], base: FinCat) -> Maps:
    for o in raw:
        if o not in base.objects:
            raise _dangling("α", f"signature {o}", signature=o)
    return {o: dict(fn) for o, fn in raw.items()}


def parse_inst_comorphism(body: Body, source: Institution, target: Institution) -> InstComorphism:
    phi = parse_functor(body.get("phi", {}), source.sig, target.sig)
    alpha = NatTransSet(source.sen, target.sen, _components(body.get("alpha", {}), source.sig), target_reindex=phi)
    return InstComorphism(phi=phi, alpha=alpha, beta=_components(body.get("beta", {}), source.sig))


def parse_inst_morphism(body: Body, source: Institution, target: Institution) -> InstMorphism:
    phi = parse_functor(body.get("phi", {}), source.sig, target.sig)
    alpha = NatTransSet(target.sen, source.sen, _components(body.get("alpha", {}), source.sig), source_reindex=phi)
    return InstMorphism(phi=phi, alpha=alpha, beta=_components(body.get("beta", {}), source.sig))


def parse_pi_comorphism(body: Body, source: PiInstitution, target: PiInstitution) -> PiComorphism:
    phi = parse_functor(body.get("phi", {}), source.sig, target.sig)
    alpha = NatTransSet(source.sen, target.sen, _components(body.get("alpha", {}), source.sig), target_reindex=phi)
    return PiComorphism(phi=phi, alpha=alpha)


def dump_category(c: FinCat) -> Body:
    identities = set(c.identity.values())
    return {
        "objects": list(c.objects),
        "morphisms": [{"id": m.id, "src": m.src, "dst": m.dst} for m in c.non_identities()],
        "compose": sorted(
            [f, g, fg] for (f, g), fg in c.compose.items() if f not in identities and g not in identities
        ),
    }


def _dump_maps(c: FinCat, maps: Mapping[str, Mapping[str, str]]) -> Maps:
    return {m.id: dict(sorted(maps[m.id].items())) for m in c.non_identities() if m.id in maps}


def _dump_pairs(c: FinCat, pairs: Mapping[str, FrozenSet[Tuple[str, str]]]) -> Dict[str, List[List[str]]]:
    return {o: sorted([a, b] for a, b in pairs.get(o, frozenset())) for o in c.objects if pairs.get(o)}


def _dump_sentences(c: FinCat, sen: SetFunctor) -> Body:
    return {
        "sen": {o: list(sen.universe(o)) for o in c.objects},
        "senMap": _dump_maps(c, sen.on_morphisms),
    }


def dump_institution(institution: Institution) -> Body:
    c = institution.sig
    body = {"kind": INSTITUTION, **dump_category(c), **_dump_sentences(c, institution.sen)}
    body["mod"] = {o: list(institution.models(o)) for o in c.objects}
    body["reduct"] = _dump_maps(c, institution.mod_reduct)
    body["sat"] = _dump_pairs(c, institution.sat)
    if any(institution.mod_order.values()):
        body["modOrder"] = _dump_pairs(c, institution.mod_order)
    return body


def dump_closure_table(pi: PiInstitution, cap: int = DEFAULT_CAP) -> Dict[str, Dict[str, List[str]]]:
    table = {}
    for o in pi.sig.objects:
        universe = pi.sentences(o)
        rows = table_closure(universe, pi.closure[o], cap).table
        table[o] = {subset_id(s, universe): list(canonical(t, universe)) for s, t in rows.items()}
    return table


def dump_pi_institution(pi: PiInstitution, cap: int = DEFAULT_CAP) -> Body:
    c = pi.sig
    return {
        "kind": PI_INSTITUTION,
        **dump_category(c),
        **_dump_sentences(c, pi.sen),
        "closure": {"table": dump_closure_table(pi, cap)},
    }


def dump_functor(phi: FinFunctor) -> Body:
    return {
        "objects": dict(phi.on_objects),
        "morphisms": {m.id: phi.mor(m.id) for m in phi.source.non_identities()},
    }


def _dump_components(base: FinCat, family: Mapping[str, Mapping[str, str]]) -> Maps:
    return {o: dict(sorted(family[o].items())) for o in base.objects if o in family}


def dump_morphism(
    kind: str,
    morphism: Union[InstComorphism, InstMorphism, PiComorphism],
    source: Body,
    target: Body,
) -> Body:
    """A (co)morphism body with inline source and target bodies."""
    base = morphism.phi.source
    body = {
        "kind": kind,
        "source": source,
        "target": target,
        "phi": dump_functor(morphism.phi),
        "alpha": _dump_components(base, morphism.alpha.components),
    }
    if not isinstance(morphism, PiComorphism):
        body["beta"] = _dump_components(base, morphism.beta)
    return body


def canonical_json(body: Body) -> str:
    return json.dumps(body, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def dump_structure(structure: Union[Institution, PiInstitution], cap: int = DEFAULT_CAP) -> Body:
    if isinstance(structure, PiInstitution):
        return dump_pi_institution(structure, cap)
    return dump_institution(structure)


def dump_logic(logic: LogicPresentation) -> Body:
    body = {
        "kind": LOGIC,
        "name": logic.name,
        "connectives": dict(logic.signature.connectives),
        "variables": list(logic.variables),
        "depthCap": logic.depth_cap,
        "matrix": {
            "values": list(logic.matrix.values),
            "designated": [v for v in logic.matrix.values if v in logic.matrix.designated],
            "tables": {
                c: {",".join(args): result for args, result in sorted(table.items())}
                for c, table in sorted(logic.matrix.interp.items())
            },
        },
    }
    if logic.sentences is not None:
        body["sentences"] = [render_formula(f) for f in logic.sentences]
    return body