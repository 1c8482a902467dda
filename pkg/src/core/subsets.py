"""Canonical ordering and enumeration of finite subsets.

Subsets of a sentence or model universe are ordered by the position of their
members in the universe tuple, so that table keys, model ids and report
witnesses are stable across runs.
"""
import json
from itertools import combinations, product
from typing import AbstractSet, Dict, FrozenSet, Iterator, Sequence, Tuple

from src.utils.errors import SearchSpaceTooLarge, UniverseTooLarge


def canonical(subset: AbstractSet[str], universe: Sequence[str]) -> Tuple[str, ...]:
    index = _index(universe)
    return tuple(sorted(subset, key=lambda x: (index.get(x, len(index)), x)))


def subset_id(subset: AbstractSet[str], universe: Sequence[str]) -> str:
    return json.dumps(list(canonical(subset, universe)), ensure_ascii=False)


def parse_subset_id(text: str) -> FrozenSet[str]:
    return frozenset(json.loads(text))


def subset_sort_key(subset: AbstractSet[str], universe: Sequence[str]) -> Tuple:
    index = _index(universe)
    return (len(subset), sorted(index.get(x, len(index)) for x in subset))


def ensure_within_cap(universe: Sequence[str], cap: int, what: str = "universe") -> None:
    if len(universe) > cap:
        raise UniverseTooLarge(
            f"{what} has {len(universe)} elements, above the enumeration cap of {cap}",
            size=len(universe),
            bound=cap,
        )


def all_subsets(universe: Sequence[str], cap: int) -> Iterator[FrozenSet[str]]:
    ensure_within_cap(universe, cap)
    for size in range(len(universe) + 1):
        for combo in combinations(universe, size):
            yield frozenset(combo)


def covering_pairs(universe: Sequence[str], cap: int) -> Iterator[Tuple[FrozenSet[str], FrozenSet[str]]]:
    # monotonicity along Γ ⊆ Γ ∪ {x} implies it for every Γ ⊆ Δ by transitivity
    for subset in all_subsets(universe, cap):
        for x in universe:
            if x not in subset:
                yield subset, subset | {x}


def _index(universe: Sequence[str]) -> Dict[str, int]:
    return {x: i for i, x in enumerate(universe)}


def all_functions(domain: Sequence[str], codomain: Sequence[str], bound: int) -> Iterator[Dict[str, str]]:
    """Every total function ``domain → codomain``, in lexicographic order of images."""
    size = len(codomain) ** len(domain)
    if size > bound:
        raise SearchSpaceTooLarge(
            f"{size} functions from {len(domain)} to {len(codomain)} elements exceed the search bound {bound}",
            size=size,
            bound=bound,
        )
    for images in product(codomain, repeat=len(domain)):
        yield dict(zip(domain, images))
