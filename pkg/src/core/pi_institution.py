from dataclasses import dataclass, field
from typing import AbstractSet, Callable, Dict, FrozenSet, List, Mapping, Tuple

from src.core.fincat import FinCat, FinFunctor, NatTransSet, SetFunctor, compose_functors
from src.core.subsets import all_subsets, subset_sort_key
from src.utils.config import DEFAULT_CAP
from src.utils.errors import DomainMismatch, SentenceOutOfUniverse, UnknownSignature


class ClosureOperator:
    universe: Tuple[str, ...]

    def __call__(self, subset: FrozenSet[str]) -> FrozenSet[str]:
        raise NotImplementedError


@dataclass(frozen=True)
class ClosureTable(ClosureOperator):
    """Closure given explicitly on every subset of the universe."""

    universe: Tuple[str, ...]
    table: Mapping[FrozenSet[str], FrozenSet[str]]

    def __call__(self, subset: FrozenSet[str]) -> FrozenSet[str]:
        return self.table[frozenset(subset)]


@dataclass(frozen=True, eq=False)
class ClosureOracle(ClosureOperator):
    """Closure computed on demand; results are memoized per subset."""

    universe: Tuple[str, ...]
    fn: Callable[[FrozenSet[str]], FrozenSet[str]]
    _memo: Dict[FrozenSet[str], FrozenSet[str]] = field(default_factory=dict, repr=False)

    def __call__(self, subset: FrozenSet[str]) -> FrozenSet[str]:
        key = frozenset(subset)
        if key not in self._memo:
            self._memo[key] = frozenset(self.fn(key))
        return self._memo[key]


@dataclass(frozen=True, eq=False)
class PiInstitution:
    sig: FinCat
    sen: SetFunctor
    closure: Mapping[str, ClosureOperator]

    def sentences(self, sig: str) -> Tuple[str, ...]:
        if sig not in self.sen.on_objects:
            raise UnknownSignature(f"Unknown signature: {sig}", {"signature": sig})
        return tuple(self.sen.on_objects[sig])


@dataclass(frozen=True)
class PiComorphism:
    phi: FinFunctor
    alpha: NatTransSet


def closure_of(pi: PiInstitution, sig: str, subset: AbstractSet[str]) -> FrozenSet[str]:
    universe = pi.sentences(sig)
    stray = set(subset) - set(universe)
    if stray:
        raise SentenceOutOfUniverse(
            f"{sorted(stray)} not in Sen({sig})", {"signature": sig, "sentences": sorted(stray)}
        )
    return pi.closure[sig](frozenset(subset))


def closed_sets(pi: PiInstitution, sig: str, cap: int = DEFAULT_CAP) -> List[FrozenSet[str]]:
    universe = pi.sentences(sig)
    images = {closure_of(pi, sig, subset) for subset in all_subsets(universe, cap)}
    return sorted(images, key=lambda s: subset_sort_key(s, universe))


def is_closed(pi: PiInstitution, sig: str, subset: AbstractSet[str]) -> bool:
    return closure_of(pi, sig, subset) == frozenset(subset)


def table_closure(universe: Tuple[str, ...], fn: Callable[[FrozenSet[str]], FrozenSet[str]], cap: int) -> ClosureTable:
    return ClosureTable(universe, {s: frozenset(fn(s)) for s in all_subsets(universe, cap)})


def identity_pi_comorphism(pi: PiInstitution) -> PiComorphism:
    return PiComorphism(phi=FinFunctor.identity(pi.sig), alpha=NatTransSet.identity(pi.sen))


def compose_pi_comorphisms(first: PiComorphism, second: PiComorphism) -> PiComorphism:
    if first.phi.target != second.phi.source:
        raise DomainMismatch("codomain signature category of g differs from the domain of g'")
    if first.alpha.target_functor != second.alpha.source_functor:
        raise DomainMismatch("codomain sentence functor of g differs from the domain of g'")
    return PiComorphism(phi=compose_functors(first.phi, second.phi), alpha=first.alpha.then(second.alpha))


def same_pi_comorphism(g: PiComorphism, h: PiComorphism) -> bool:
    return g.phi == h.phi and {o: dict(c) for o, c in g.alpha.components.items()} == {
        o: dict(c) for o, c in h.alpha.components.items()
    }
