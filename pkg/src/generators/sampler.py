"""Seeded random corpora: atom/valuation institutions, valid comorphisms, lawful π-institutions.

Signature categories are free categories on random DAGs over ``S0 … S(n-1)``
with arrows pointing from lower to higher index.
"""
import random
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from src.checkers.institution import InstitutionChecker
from src.core.fincat import PATH_SEPARATOR, FinCat, FinFunctor, NatTransSet, SetFunctor, enumerate_functors
from src.core.institution import Institution, InstComorphism
from src.core.pi_institution import ClosureTable, PiInstitution
from src.core.subsets import all_subsets
from src.utils.config import RandomLimits
from src.utils.errors import SearchSpaceTooLarge
from src.utils.logger import Logger

MAX_ATTEMPTS = 200
FUNCTOR_SEARCH_BOUND = 4096

Valuation = Tuple[Tuple[str, bool], ...]


def render_valuation(valuation: Valuation) -> str:
    return ",".join(f"{atom}={'T' if value else 'F'}" for atom, value in valuation)


@dataclass(frozen=True)
class Skeleton:
    """Signature category, atom universes and the atom map of every morphism."""

    sig: FinCat
    atoms: Dict[str, Tuple[str, ...]]
    maps: Dict[str, Dict[str, str]]

    @property
    def sen(self) -> SetFunctor:
        return SetFunctor(self.sig, self.atoms, self.maps)


class RandomCorpus:
    def __init__(self, seed: int = 0, limits: RandomLimits = RandomLimits(), logger: Optional[Logger] = None):
        self.rng = random.Random(seed)
        self.limits = limits
        self.logger = logger

    def signature_category(self) -> Tuple[FinCat, List[Tuple[str, str, str]]]:
        n = self.rng.randint(1, self.limits.signatures)
        objects = [f"S{i}" for i in range(n)]
        arrows = [
            (f"f{i}{j}", objects[i], objects[j])
            for i in range(n) for j in range(i + 1, n) if self.rng.random() < 0.5
        ]
        return FinCat.paths(objects, arrows), arrows

    def skeleton(self) -> Skeleton:
        sig, arrows = self.signature_category()
        objects = sig.objects
        atoms = {o: tuple(f"p{k}" for k in range(self.rng.randint(1, self.limits.sentences))) for o in objects}
        generator_maps = {f: {a: self.rng.choice(atoms[d]) for a in atoms[s]} for f, s, d in arrows}
        maps: Dict[str, Dict[str, str]] = {}
        for m in sig.morphisms:
            fn = {a: a for a in atoms[m.src]}
            if not sig.is_identity(m.id):
                for step in m.id.split(PATH_SEPARATOR):
                    fn = {a: generator_maps[step][b] for a, b in fn.items()}
            maps[m.id] = fn
        return Skeleton(sig, atoms, maps)

    def _valuations(self, atoms: Sequence[str]) -> List[Valuation]:
        return [tuple(zip(atoms, values)) for values in product((False, True), repeat=len(atoms))]

    def _models(self, skeleton: Skeleton) -> Optional[Dict[str, Set[Valuation]]]:
        """Random valuations per signature, closed under reducts; None when over the limit."""
        models: Dict[str, Set[Valuation]] = {}
        for o in reversed(skeleton.sig.objects):
            pool = self._valuations(skeleton.atoms[o])
            chosen = set(self.rng.sample(pool, self.rng.randint(1, min(len(pool), self.limits.models))))
            for m in skeleton.sig.non_identities():
                if m.src == o:
                    chosen |= {reduct(v, skeleton.maps[m.id]) for v in models[m.dst]}
            if len(chosen) > self.limits.models:
                return None
            models[o] = chosen
        return models

    def institution(self) -> Institution:
        for _ in range(MAX_ATTEMPTS):
            skeleton = self.skeleton()
            models = self._models(skeleton)
            if models is not None:
                return valuation_institution(skeleton, models)
        raise RuntimeError(f"no institution within {self.limits} after {MAX_ATTEMPTS} attempts")

    def institutions(self, count: int) -> List[Institution]:
        return [self.institution() for _ in range(count)]

    def comorphism(self) -> Tuple[InstComorphism, Institution, Institution]:
        """A valid comorphism along a random functor φ from a renamed atom fragment into a random institution."""
        checker = InstitutionChecker()
        for _ in range(MAX_ATTEMPTS):
            target = self.institution()
            phi = self._random_functor(self.signature_category()[0], target.sig)
            if phi is None:
                continue
            fragment, names = self._fragment_skeleton(target, phi)
            models = {
                o: {restrict(parse_valuation(m), names[o]) for m in target.models(phi.obj(o))}
                for o in fragment.sig.objects
            }
            if any(len(ms) > self.limits.models for ms in models.values()):
                continue
            source = valuation_institution(fragment, models)
            alpha = NatTransSet(
                source_functor=source.sen,
                target_functor=target.sen,
                components={o: {new: old for old, new in names[o].items()} for o in fragment.sig.objects},
                target_reindex=phi,
            )
            beta = {
                o: {m: render_valuation(restrict(parse_valuation(m), names[o])) for m in target.models(phi.obj(o))}
                for o in fragment.sig.objects
            }
            comorphism = InstComorphism(phi=phi, alpha=alpha, beta=beta)
            if checker.check_inst_comorphism(comorphism, source, target).ok:
                return comorphism, source, target
            if self.logger:
                self.logger.warning("discarded a generated comorphism that failed its check")
        raise RuntimeError(f"no valid comorphism after {MAX_ATTEMPTS} attempts")

    def comorphisms(self, count: int) -> List[Tuple[InstComorphism, Institution, Institution]]:
        return [self.comorphism() for _ in range(count)]

    def _random_functor(self, source: FinCat, target: FinCat) -> Optional[FinFunctor]:
        try:
            functors = list(enumerate_functors(source, target, FUNCTOR_SEARCH_BOUND))
        except SearchSpaceTooLarge:
            return None
        return self.rng.choice(functors)

    def _fragment_skeleton(self, target: Institution, phi: FinFunctor) -> Tuple[Skeleton, Dict[str, Dict[str, str]]]:
        """Atoms at Σ are a renamed subset of Sen'(φΣ), closed under the translations along φ."""
        sig = phi.source
        chosen: Dict[str, Set[str]] = {}
        for o in sig.objects:
            atoms = target.sentences(phi.obj(o))
            chosen[o] = {a for a in atoms if self.rng.random() < 0.6} or {self.rng.choice(atoms)}
            for f in sig.non_identities():
                if f.dst == o:
                    chosen[o] |= set(target.sen.image(phi.mor(f.id), chosen[f.src]))
        names: Dict[str, Dict[str, str]] = {}
        for o in sig.objects:
            atoms = [a for a in target.sentences(phi.obj(o)) if a in chosen[o]]
            fresh = [f"q{k}" for k in range(len(atoms))]
            self.rng.shuffle(fresh)
            names[o] = dict(zip(atoms, fresh))
        atoms = {o: tuple(sorted(names[o].values())) for o in sig.objects}
        maps = {
            m.id: {names[m.src][a]: names[m.dst][target.sen.apply(phi.mor(m.id), a)] for a in names[m.src]}
            for m in sig.morphisms
        }
        return Skeleton(sig, atoms, maps), names

    def pi_institution(self) -> PiInstitution:
        """Closure from a random Moore family per signature, closed under preimages."""
        skeleton = self.skeleton()
        families: Dict[str, Set[FrozenSet[str]]] = {}
        for o in reversed(skeleton.sig.objects):
            universe = skeleton.atoms[o]
            subsets = list(all_subsets(universe, len(universe)))
            family = {frozenset(universe)}
            family |= set(self.rng.sample(subsets, self.rng.randint(0, min(3, len(subsets)))))
            for m in skeleton.sig.non_identities():
                if m.src == o:
                    family |= {frozenset(a for a in universe if skeleton.maps[m.id][a] in t) for t in families[m.dst]}
            families[o] = intersection_closed(family)
        closure = {
            o: ClosureTable(
                skeleton.atoms[o],
                {
                    gamma: frozenset.intersection(*[t for t in families[o] if gamma <= t])
                    for gamma in all_subsets(skeleton.atoms[o], len(skeleton.atoms[o]))
                },
            )
            for o in skeleton.sig.objects
        }
        return PiInstitution(sig=skeleton.sig, sen=skeleton.sen, closure=closure)

    def pi_institutions(self, count: int) -> List[PiInstitution]:
        return [self.pi_institution() for _ in range(count)]


def reduct(valuation: Valuation, atom_map: Dict[str, str]) -> Valuation:
    values = dict(valuation)
    return tuple(sorted((a, values[b]) for a, b in atom_map.items()))


def restrict(valuation: Valuation, names: Dict[str, str]) -> Valuation:
    values = dict(valuation)
    return tuple(sorted((names[a], values[a]) for a in names))


def parse_valuation(text: str) -> Valuation:
    pairs = (item.split("=") for item in text.split(",") if item)
    return tuple((atom, value == "T") for atom, value in pairs)


def intersection_closed(family: Set[FrozenSet[str]]) -> Set[FrozenSet[str]]:
    closed = set(family)
    changed = True
    while changed:
        changed = False
        for a in list(closed):
            for b in list(closed):
                if a & b not in closed:
                    closed.add(a & b)
                    changed = True
    return closed


def valuation_institution(skeleton: Skeleton, models: Dict[str, Set[Valuation]]) -> Institution:
    mod_objects = {o: tuple(sorted(render_valuation(v) for v in models[o])) for o in skeleton.sig.objects}
    mod_reduct = {
        m.id: {render_valuation(v): render_valuation(reduct(v, skeleton.maps[m.id])) for v in models[m.dst]}
        for m in skeleton.sig.morphisms
    }
    sat = {
        o: frozenset((render_valuation(v), a) for v in models[o] for a, value in v if value)
        for o in skeleton.sig.objects
    }
    return Institution(sig=skeleton.sig, sen=skeleton.sen, mod_objects=mod_objects, mod_reduct=mod_reduct, sat=sat)
