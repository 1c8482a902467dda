import pytest
from hypothesis import given, strategies as st

from src.checkers.category import check_category, check_functor, check_naturality, check_set_functor
from src.core.fincat import FinCat, FinFunctor, NatTransSet, SetFunctor, compose_mor, enumerate_functors
from src.utils.errors import DanglingReference, ExplosionGuard, NotComposable


@st.composite
def dags(draw):
    n = draw(st.integers(1, 4))
    objects = [f"S{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return objects, [(f"f{i}{j}", objects[i], objects[j]) for i, j in chosen]


def test_one_object_category_is_lawful():
    assert check_category(FinCat.discrete(["S0"])).ok


def test_rename_category_is_lawful(rename):
    assert check_category(rename.sig).ok


def test_broken_left_unit_is_reported():
    c = FinCat.build(["S1", "S2"], [("h", "S1", "S2")], compose=[("id_S1", "h", "id_S2")])
    report = check_category(c)
    assert report.has("left-identity", "h")


def test_compose_with_identities(rename):
    assert compose_mor(rename.sig, "id_S1", "h") == "h"
    assert compose_mor(rename.sig, "h", "id_S2") == "h"


def test_compose_rejects_mismatched_ends(rename):
    with pytest.raises(NotComposable):
        compose_mor(rename.sig, "h", "h")


def test_unknown_morphism_is_a_dangling_reference(rename):
    with pytest.raises(DanglingReference) as raised:
        rename.sig.morphism("g")
    assert raised.value.details == {"morphism": "g"}
    with pytest.raises(DanglingReference):
        compose_mor(rename.sig, "h", "g")


def test_identity_functor(rename):
    assert check_functor(FinFunctor.identity(rename.sig)).ok


def test_constant_functor_onto_a_point(rename):
    point = FinCat.discrete(["*"])
    collapse = FinFunctor(
        rename.sig, point, {"S1": "*", "S2": "*"}, {"id_S1": "id_*", "id_S2": "id_*", "h": "id_*"}
    )
    assert check_functor(collapse).ok


def test_functor_breaking_sources(rename):
    c = rename.sig
    broken = FinFunctor(c, c, {"S1": "S2", "S2": "S2"}, {"id_S1": "id_S2", "id_S2": "id_S2", "h": "h"})
    assert check_functor(broken).has("src-preservation")


def test_sentence_functor_of_rename(rename):
    assert check_set_functor(rename.sen).ok


def test_identity_only_set_functor():
    c = FinCat.discrete(["S0"])
    assert check_set_functor(SetFunctor(c, {"S0": ("a",)}, {"id_S0": {"a": "a"}})).ok


def test_sentence_map_leaving_its_codomain(rename):
    sen = SetFunctor(rename.sig, rename.sen.on_objects, {**rename.sen.on_morphisms, "h": {"p": "z"}})
    assert check_set_functor(sen).has("codomain", "h", "p")


def test_identity_components_are_natural(rename):
    assert check_naturality(NatTransSet.identity(rename.sen)).ok


def test_non_commuting_component(rename):
    swapped = NatTransSet(rename.sen, rename.sen, {"S1": {"p": "p"}, "S2": {"q": "r", "r": "q"}})
    assert check_naturality(swapped).has("naturality", "h", "p")


def test_paths_names_composites():
    c = FinCat.paths(["A", "B", "C"], [("f", "A", "B"), ("g", "B", "C")])
    assert c.compose[("f", "g")] == "f;g"
    assert c.hom("A", "C") == ["f;g"]
    assert check_category(c).ok


def test_paths_on_a_cycle_trips_the_guard():
    with pytest.raises(ExplosionGuard):
        FinCat.paths(["A", "B"], [("f", "A", "B"), ("g", "B", "A")], bound=50)


def test_functors_from_rename_to_itself(rename):
    functors = list(enumerate_functors(rename.sig, rename.sig, bound=64))
    assert len(functors) == 3
    assert all(check_functor(f).ok for f in functors)


@given(dags())
def test_free_categories_are_lawful(dag):
    objects, arrows = dag
    assert check_category(FinCat.paths(objects, arrows)).ok
