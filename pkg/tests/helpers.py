"""Small builders shared by the test modules."""
from pathlib import Path

from src.core.fincat import FinFunctor, NatTransSet
from src.core.pi_institution import ClosureTable, PiComorphism, PiInstitution, table_closure
from src.generators import fixtures

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES_DIR / name)


def closure_over(universe, overrides) -> ClosureTable:
    """Identity closure on ``universe`` with some subsets sent elsewhere."""
    table = dict(table_closure(tuple(universe), lambda s: s, len(universe)).table)
    for subset, image in overrides.items():
        table[frozenset(subset)] = frozenset(image)
    return ClosureTable(tuple(universe), table)


def pi_over_twoval_universe(overrides) -> PiInstitution:
    base = fixtures.identity_closure(("a", "b"))
    return PiInstitution(sig=base.sig, sen=base.sen, closure={"S0": closure_over(("a", "b"), overrides)})


def pi_comorphism_between(source: PiInstitution, target: PiInstitution, objects, components) -> PiComorphism:
    """⟨φ, α⟩ between π-institutions over discrete signature categories."""
    on_morphisms = {source.sig.identity[o]: target.sig.identity[objects[o]] for o in source.sig.objects}
    phi = FinFunctor(source.sig, target.sig, objects, on_morphisms)
    return PiComorphism(phi=phi, alpha=NatTransSet(source.sen, target.sen, components, target_reindex=phi))
