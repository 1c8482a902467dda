from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Mapping, Tuple

import numpy as np

from src.core.fincat import FinCat, FinFunctor, NatTransSet, SetFunctor, compose_functors
from src.utils.errors import DomainMismatch, UnknownSignature


@dataclass(frozen=True)
class SatMatrix:
    """Boolean satisfaction matrix of one signature: rows are models, columns sentences."""

    models: Tuple[str, ...]
    sentences: Tuple[str, ...]
    values: np.ndarray

    @cached_property
    def model_index(self) -> Dict[str, int]:
        return {m: i for i, m in enumerate(self.models)}

    @cached_property
    def sentence_index(self) -> Dict[str, int]:
        return {s: i for i, s in enumerate(self.sentences)}

    def holds(self, model: str, sentence: str) -> bool:
        return bool(self.values[self.model_index[model], self.sentence_index[sentence]])


@dataclass(frozen=True)
class Institution:
    sig: FinCat
    sen: SetFunctor
    mod_objects: Mapping[str, Tuple[str, ...]]
    mod_reduct: Mapping[str, Mapping[str, str]]
    sat: Mapping[str, FrozenSet[Tuple[str, str]]]
    # pairs (m, n) meaning m ≤ n; empty means discrete
    mod_order: Mapping[str, FrozenSet[Tuple[str, str]]] = field(default_factory=dict)

    @cached_property
    def _matrices(self) -> Dict[str, SatMatrix]:
        matrices = {}
        for o in self.sig.objects:
            models = tuple(self.mod_objects.get(o, ()))
            sentences = tuple(self.sen.on_objects.get(o, ()))
            values = np.zeros((len(models), len(sentences)), dtype=bool)
            m_index = {m: i for i, m in enumerate(models)}
            s_index = {s: i for i, s in enumerate(sentences)}
            for m, s in self.sat.get(o, frozenset()):
                if m in m_index and s in s_index:
                    values[m_index[m], s_index[s]] = True
            matrices[o] = SatMatrix(models, sentences, values)
        return matrices

    def matrix(self, sig: str) -> SatMatrix:
        if sig not in self._matrices:
            raise UnknownSignature(f"Unknown signature: {sig}", {"signature": sig})
        return self._matrices[sig]

    def satisfies(self, sig: str, model: str, sentence: str) -> bool:
        return (model, sentence) in self.sat.get(sig, frozenset())

    def models(self, sig: str) -> Tuple[str, ...]:
        if sig not in self.mod_objects:
            raise UnknownSignature(f"Unknown signature: {sig}", {"signature": sig})
        return tuple(self.mod_objects[sig])

    def sentences(self, sig: str) -> Tuple[str, ...]:
        if sig not in self.sen.on_objects:
            raise UnknownSignature(f"Unknown signature: {sig}", {"signature": sig})
        return tuple(self.sen.on_objects[sig])

    def reduct(self, f: str, model: str) -> str:
        return self.mod_reduct[f][model]

    def leq(self, sig: str, m: str, n: str) -> bool:
        return m == n or (m, n) in self.mod_order.get(sig, frozenset())


@dataclass(frozen=True)
class InstComorphism:
    """⟨φ, α, β⟩: α_Σ: Sen(Σ) → Sen'(φΣ) forward, β_Σ: Mod'(φΣ) → Mod(Σ) backward."""

    phi: FinFunctor
    alpha: NatTransSet
    beta: Mapping[str, Mapping[str, str]]


@dataclass(frozen=True)
class InstMorphism:
    """⟨Φ, α, β⟩: α_Σ: Sen'(ΦΣ) → Sen(Σ) backward, β_Σ: Mod(Σ) → Mod'(ΦΣ) forward."""

    phi: FinFunctor
    alpha: NatTransSet
    beta: Mapping[str, Mapping[str, str]]


def identity_inst_comorphism(institution: Institution) -> InstComorphism:
    return InstComorphism(
        phi=FinFunctor.identity(institution.sig),
        alpha=NatTransSet.identity(institution.sen),
        beta={o: {m: m for m in institution.mod_objects[o]} for o in institution.sig.objects},
    )


def identity_inst_morphism(institution: Institution) -> InstMorphism:
    identity = FinFunctor.identity(institution.sig)
    return InstMorphism(
        phi=identity,
        alpha=NatTransSet(
            source_functor=institution.sen,
            target_functor=institution.sen,
            components={o: {x: x for x in institution.sen.universe(o)} for o in institution.sig.objects},
            source_reindex=identity,
        ),
        beta={o: {m: m for m in institution.mod_objects[o]} for o in institution.sig.objects},
    )


def compose_inst_comorphisms(first: InstComorphism, second: InstComorphism) -> InstComorphism:
    """f' • f: first f: I → I', then f': I' → I''."""
    if first.phi.target != second.phi.source:
        raise DomainMismatch("codomain signature category of f differs from the domain of f'")
    if first.alpha.target_functor != second.alpha.source_functor:
        raise DomainMismatch("codomain sentence functor of f differs from the domain of f'")
    phi = first.phi
    beta = {
        o: {m2: first.beta[o][m1] for m2, m1 in second.beta[phi.obj(o)].items()}
        for o in phi.source.objects
    }
    return InstComorphism(phi=compose_functors(phi, second.phi), alpha=first.alpha.then(second.alpha), beta=beta)


def same_comorphism(f: InstComorphism, g: InstComorphism) -> bool:
    return (
        f.phi == g.phi
        and _components(f.alpha) == _components(g.alpha)
        and _normalize(f.beta) == _normalize(g.beta)
    )


def _components(alpha: NatTransSet) -> Dict[str, Dict[str, str]]:
    return _normalize(alpha.components)


def _normalize(family: Mapping[str, Mapping[str, str]]) -> Dict[str, Dict[str, str]]:
    return {o: dict(fn) for o, fn in family.items()}

