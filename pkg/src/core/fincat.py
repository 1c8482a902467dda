"""Finitely presented categories, functors and set-valued functors.

Composition is stored as an explicit table in diagrammatic order:
``compose[(f, g)]`` is "f then g" and is defined exactly when ``dst(f) == src(g)``.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from src.utils.errors import DanglingReference, ExplosionGuard, NotComposable, SearchSpaceTooLarge

IDENTITY_PREFIX = "id_"
PATH_SEPARATOR = ";"


@dataclass(frozen=True)
class Morphism:
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class FinCat:
    objects: Tuple[str, ...]
    morphisms: Tuple[Morphism, ...]
    identity: Mapping[str, str]
    compose: Mapping[Tuple[str, str], str] = field(default_factory=dict)

    @cached_property
    def _by_id(self) -> Dict[str, Morphism]:
        return {m.id: m for m in self.morphisms}

    def has_morphism(self, f: str) -> bool:
        return f in self._by_id

    def morphism(self, f: str) -> Morphism:
        if f not in self._by_id:
            raise DanglingReference(f"Unknown morphism: {f}", {"morphism": f})
        return self._by_id[f]

    def src(self, f: str) -> str:
        return self.morphism(f).src

    def dst(self, f: str) -> str:
        return self.morphism(f).dst

    def is_identity(self, f: str) -> bool:
        m = self._by_id.get(f)
        return m is not None and self.identity.get(m.src) == f

    def hom(self, a: str, b: str) -> List[str]:
        return [m.id for m in self.morphisms if m.src == a and m.dst == b]

    def non_identities(self) -> List[Morphism]:
        return [m for m in self.morphisms if not self.is_identity(m.id)]

    def composable_pairs(self) -> Iterator[Tuple[str, str]]:
        for f in self.morphisms:
            for g in self.morphisms:
                if f.dst == g.src:
                    yield f.id, g.id

    @staticmethod
    def build(
        objects: Sequence[str],
        arrows: Iterable[Tuple[str, str, str]] = (),
        compose: Iterable[Tuple[str, str, str]] = (),
        identities: Optional[Mapping[str, str]] = None,
    ) -> "FinCat":
        """Build a category, filling in identities and unit compositions.

        Explicit ``compose`` entries win over the auto-filled unit entries, so a
        deliberately broken table can still be expressed.
        """
        identity = dict(identities) if identities else {o: f"{IDENTITY_PREFIX}{o}" for o in objects}
        morphisms = [Morphism(identity[o], o, o) for o in objects]
        morphisms += [Morphism(f, s, d) for f, s, d in arrows if f not in identity.values()]
        table: Dict[Tuple[str, str], str] = {}
        for m in morphisms:
            table[(identity[m.src], m.id)] = m.id
            table[(m.id, identity[m.dst])] = m.id
        for f, g, fg in compose:
            table[(f, g)] = fg
        return FinCat(tuple(objects), tuple(morphisms), identity, table)

    @staticmethod
    def discrete(objects: Sequence[str]) -> "FinCat":
        return FinCat.build(objects)

    @staticmethod
    def paths(objects: Sequence[str], arrows: Sequence[Tuple[str, str, str]], bound: int = 4096) -> "FinCat":
        """The category freely generated by ``arrows``: morphisms are paths.

        Composite ids join generator ids with ``;``. A cycle makes the free
        category infinite and trips the explosion guard.
        """
        outgoing: Dict[str, List[Tuple[str, str, str]]] = {o: [] for o in objects}
        for arrow in arrows:
            outgoing[arrow[1]].append(arrow)
        paths: List[Tuple[Tuple[str, ...], str, str]] = [((f,), s, d) for f, s, d in arrows]
        frontier = list(paths)
        while frontier:
            extended = []
            for steps, s, d in frontier:
                for f, _, d2 in outgoing[d]:
                    extended.append((steps + (f,), s, d2))
            paths.extend(extended)
            if len(paths) > bound:
                raise ExplosionGuard(
                    f"free category on {len(arrows)} generators exceeds {bound} morphisms",
                    size=len(paths),
                    bound=bound,
                )
            frontier = extended
        by_steps = {steps: (PATH_SEPARATOR.join(steps), s, d) for steps, s, d in paths}
        compose = []
        for steps1, (f, _, d1) in by_steps.items():
            for steps2, (g, s2, _) in by_steps.items():
                if d1 == s2:
                    compose.append((f, g, by_steps[steps1 + steps2][0]))
        return FinCat.build(objects, by_steps.values(), compose)


def compose_mor(c: FinCat, f: str, g: str) -> str:
    if c.dst(f) != c.src(g):
        raise NotComposable(
            f"{f}: {c.src(f)}→{c.dst(f)} and {g}: {c.src(g)}→{c.dst(g)} are not composable",
            {"f": f, "g": g},
        )
    if (f, g) not in c.compose:
        raise NotComposable(f"composition table has no entry for ({f}, {g})", {"f": f, "g": g})
    return c.compose[(f, g)]


@dataclass(frozen=True)
class SetFunctor:
    source: FinCat
    on_objects: Mapping[str, Tuple[str, ...]]
    on_morphisms: Mapping[str, Mapping[str, str]]

    def universe(self, obj: str) -> Tuple[str, ...]:
        return self.on_objects[obj]

    def apply(self, f: str, x: str) -> str:
        return self.on_morphisms[f][x]

    def image(self, f: str, subset: Iterable[str]) -> FrozenSet[str]:
        fn = self.on_morphisms[f]
        return frozenset(fn[x] for x in subset)

    def preimage(self, f: str, subset: Iterable[str]) -> FrozenSet[str]:
        targets = set(subset)
        return frozenset(x for x, y in self.on_morphisms[f].items() if y in targets)


@dataclass(frozen=True)
class FinFunctor:
    source: FinCat
    target: FinCat
    on_objects: Mapping[str, str]
    on_morphisms: Mapping[str, str]

    def obj(self, o: str) -> str:
        return self.on_objects[o]

    def mor(self, f: str) -> str:
        return self.on_morphisms[f]

    def then(self, other: "FinFunctor") -> "FinFunctor":
        return FinFunctor(
            source=self.source,
            target=other.target,
            on_objects={o: other.obj(self.obj(o)) for o in self.source.objects},
            on_morphisms={m.id: other.mor(self.mor(m.id)) for m in self.source.morphisms},
        )

    @staticmethod
    def identity(c: FinCat) -> "FinFunctor":
        return FinFunctor(c, c, {o: o for o in c.objects}, {m.id: m.id for m in c.morphisms})


def compose_functors(first: FinFunctor, second: FinFunctor) -> FinFunctor:
    return first.then(second)


@dataclass(frozen=True)
class NatTransSet:
    """A family of functions between two set-valued functors over a common base.

    Either functor may be reindexed along a ``FinFunctor`` out of the base
    category, which covers both ``Sen ⇒ Sen'∘φ`` (comorphisms) and
    ``Sen'∘Φ ⇒ Sen`` (morphisms).
    """

    source_functor: SetFunctor
    target_functor: SetFunctor
    components: Mapping[str, Mapping[str, str]]
    source_reindex: Optional[FinFunctor] = None
    target_reindex: Optional[FinFunctor] = None

    @property
    def base(self) -> FinCat:
        if self.source_reindex is not None:
            return self.source_reindex.source
        if self.target_reindex is not None:
            return self.target_reindex.source
        return self.source_functor.source

    def source_obj(self, o: str) -> str:
        return self.source_reindex.obj(o) if self.source_reindex else o

    def target_obj(self, o: str) -> str:
        return self.target_reindex.obj(o) if self.target_reindex else o

    def source_mor(self, f: str) -> str:
        return self.source_reindex.mor(f) if self.source_reindex else f

    def target_mor(self, f: str) -> str:
        return self.target_reindex.mor(f) if self.target_reindex else f

    def apply(self, o: str, x: str) -> str:
        return self.components[o][x]

    def image(self, o: str, subset: Iterable[str]) -> FrozenSet[str]:
        component = self.components[o]
        return frozenset(component[x] for x in subset)

    def preimage(self, o: str, subset: Iterable[str]) -> FrozenSet[str]:
        targets = set(subset)
        return frozenset(x for x, y in self.components[o].items() if y in targets)

    def then(self, following: "NatTransSet") -> "NatTransSet":
        """(α'•α)_Σ = α'_{φ(Σ)} ∘ α_Σ for forward translations."""
        phi = self.target_reindex or FinFunctor.identity(self.base)
        phi2 = following.target_reindex or FinFunctor.identity(following.base)
        return NatTransSet(
            source_functor=self.source_functor,
            target_functor=following.target_functor,
            components={
                o: {x: following.apply(phi.obj(o), y) for x, y in self.components[o].items()}
                for o in self.base.objects
            },
            target_reindex=phi.then(phi2),
        )

    @staticmethod
    def identity(functor: SetFunctor, target: Optional[SetFunctor] = None) -> "NatTransSet":
        return NatTransSet(
            source_functor=functor,
            target_functor=target or functor,
            components={o: {x: x for x in functor.universe(o)} for o in functor.source.objects},
            target_reindex=FinFunctor.identity(functor.source),
        )


def enumerate_functors(c: FinCat, d: FinCat, bound: int) -> Iterator[FinFunctor]:
    """Every functor c → d, by exhaustive search over object and arrow maps."""
    object_maps = list(product(d.objects, repeat=len(c.objects)))
    if len(object_maps) > bound:
        raise SearchSpaceTooLarge(
            f"{len(object_maps)} object maps exceed the search bound {bound}", size=len(object_maps), bound=bound
        )
    arrows = c.non_identities()
    for images in object_maps:
        on_objects = dict(zip(c.objects, images))
        choices = [d.hom(on_objects[m.src], on_objects[m.dst]) for m in arrows]
        space = 1
        for options in choices:
            space *= len(options)
        if space > bound:
            raise SearchSpaceTooLarge(f"{space} arrow maps exceed the search bound {bound}", size=space, bound=bound)
        for picked in product(*choices):
            on_morphisms = {c.identity[o]: d.identity[on_objects[o]] for o in c.objects}
            on_morphisms.update({m.id: g for m, g in zip(arrows, picked)})
            if all(
                (f, g) in c.compose and (on_morphisms[f], on_morphisms[g]) in d.compose
                and on_morphisms[c.compose[(f, g)]] == d.compose[(on_morphisms[f], on_morphisms[g])]
                for f, g in c.composable_pairs()
            ):
                yield FinFunctor(c, d, on_objects, on_morphisms)
