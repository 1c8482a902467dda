from src.checkers.adjunction import (
    AdjunctionChecker,
    check_counit_triangle,
    check_fg_identity,
    check_hom_bijection,
    check_unit,
    check_unit_triangle,
    check_universal_property,
)
from src.checkers.institution import check_inst_comorphism, validate_institution
from src.checkers.pi_institution import validate_pi_institution
from src.core.pi_institution import identity_pi_comorphism, same_pi_comorphism
from src.generators import fixtures
from src.generators.adjunction import counit, transpose
from src.generators.f_functor import f_morphism, f_object
from src.generators.g_functor import g_object
from tests.helpers import pi_comorphism_between


def test_unit_is_a_pi_comorphism(closure_twoval):
    for pi in (closure_twoval, fixtures.identity_closure(), fixtures.js()):
        assert check_unit(pi).ok


def test_transpose_of_the_identity(twoval, closure_twoval):
    h = identity_pi_comorphism(closure_twoval)
    bar = transpose(h, closure_twoval, twoval)
    assert bar.beta == {"S0": {"m1": '["a"]', "m2": '["a", "b"]'}}
    assert same_pi_comorphism(f_morphism(bar), h)


def test_transpose_over_two_signatures(rename):
    pi = f_object(rename)
    bar = transpose(identity_pi_comorphism(pi), pi, rename)
    assert check_inst_comorphism(bar, g_object(pi), rename).ok


def test_universal_property_for_the_identity(twoval, closure_twoval):
    assert check_universal_property(identity_pi_comorphism(closure_twoval), closure_twoval, twoval).ok


def test_universal_property_into_a_trivial_institution():
    source, institution = fixtures.identity_closure(), fixtures.trivial()
    h = pi_comorphism_between(source, f_object(institution), {"S0": "S0"}, {"S0": {"x": "x"}})
    assert check_universal_property(h, source, institution).ok


def test_no_transpose_from_an_indiscrete_closure(twoval, closure_twoval):
    source = fixtures.indiscrete_closure(("a", "b"))
    h = pi_comorphism_between(source, closure_twoval, {"S0": "S0"}, {"S0": {"a": "a", "b": "b"}})
    assert check_universal_property(h, source, twoval).has("no-transpose", "S0")


def test_f_after_g_is_the_identity(closure_twoval):
    for pi in (closure_twoval, fixtures.identity_closure(), fixtures.js()):
        assert check_fg_identity(pi).ok


def test_counit_on_closed_theories(closure_twoval):
    closed = g_object(closure_twoval)
    epsilon = counit(closed)
    assert epsilon.beta == {"S0": {m: m for m in closed.models("S0")}}


def test_counit_triangle(twoval, rename, cpl1):
    for institution in (cpl1, twoval, rename):
        assert check_counit_triangle(institution).ok


def test_unit_triangle(closure_twoval):
    for pi in (fixtures.identity_closure(), closure_twoval, fixtures.js()):
        assert check_unit_triangle(pi).ok


def test_hom_sets_match(twoval):
    pi = fixtures.identity_closure()
    assert AdjunctionChecker().count_hom_sets(pi, twoval) == (2, 2)
    assert check_hom_bijection(pi, twoval).ok


def test_universal_property_on_semantic_closures(rename, cpl1):
    for institution in (rename, cpl1):
        closure = f_object(institution)
        assert check_universal_property(identity_pi_comorphism(closure), closure, institution).ok


def test_f_after_g_on_semantic_closures(rename, cpl1):
    for institution in (rename, cpl1):
        closure = f_object(institution)
        assert check_fg_identity(closure).ok
        assert validate_institution(g_object(closure)).ok
        assert validate_pi_institution(f_object(g_object(closure))).ok
