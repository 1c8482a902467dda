import pytest
from hypothesis import settings

from src.core.pi_institution import ClosureTable, PiInstitution, table_closure
from src.generators import fixtures
from src.generators.f_functor import f_object

settings.register_profile("instkit", deadline=None, max_examples=25)
settings.load_profile("instkit")


@pytest.fixture
def twoval():
    return fixtures.twoval()


@pytest.fixture
def rename():
    return fixtures.rename()


@pytest.fixture
def cpl1():
    return fixtures.cpl1_institution()


@pytest.fixture
def closure_twoval(twoval):
    return f_object(twoval)


@pytest.fixture
def incoherent(rename):
    """Rename's sentence functor with C(∅) = {p} at S1 but the identity closure at S2."""
    return PiInstitution(
        sig=rename.sig,
        sen=rename.sen,
        closure={
            "S1": ClosureTable(("p",), {frozenset(): frozenset({"p"}), frozenset({"p"}): frozenset({"p"})}),
            "S2": table_closure(("q", "r"), lambda s: s, 2),
        },
    )
