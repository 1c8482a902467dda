from hypothesis import given, strategies as st

from src.checkers.category import check_functor
from src.checkers.institution import check_inst_comorphism, validate_institution
from src.checkers.pi_institution import check_preimage_closed
from src.core.fincat import compose_functors
from src.core.institution import compose_inst_comorphisms, identity_inst_comorphism, same_comorphism
from src.core.pi_institution import compose_pi_comorphisms, identity_pi_comorphism
from src.core.subsets import subset_id
from src.generators import fixtures
from src.generators.adjunction import counit
from src.generators.f_functor import f_morphism, f_object, models_star
from src.generators.g_functor import g_morphism, g_object, theory_of
from src.generators.sampler import RandomCorpus
from src.logic.builders import build_plus_comorphism


def test_closed_theories_of_twoval(closure_twoval):
    closed = g_object(closure_twoval)
    assert closed.models("S0") == ('["a"]', '["a", "b"]')
    assert not closed.satisfies("S0", '["a"]', "b")
    assert closed.satisfies("S0", '["a", "b"]', "b")


def test_closed_theories_of_the_identity_closure():
    closed = g_object(fixtures.identity_closure())
    assert closed.models("S0") == ("[]", '["x"]')
    assert not closed.satisfies("S0", "[]", "x")


def test_reduct_takes_preimages(rename):
    pi = f_object(rename)
    closed = g_object(pi)
    for model in closed.models("S2"):
        expected = subset_id(pi.sen.preimage("h", theory_of(model)), ("p",))
        assert closed.reduct("h", model) == expected
    assert validate_institution(closed).ok


def test_preimages_of_closed_theories(rename, incoherent):
    pi = f_object(rename)
    assert check_preimage_closed(pi, "h").ok
    assert check_preimage_closed(pi, "id_S1").ok
    assert not check_preimage_closed(incoherent, "h").ok


def test_g_preserves_identities():
    pi = fixtures.js()
    lifted = g_morphism(identity_pi_comorphism(pi), pi, pi)
    assert same_comorphism(lifted, identity_inst_comorphism(g_object(pi)))


def test_g_of_the_strict_into_flexible_embedding():
    strict, flexible = fixtures.js(), fixtures.jf_with_renaming()
    plus = build_plus_comorphism(strict, flexible)
    lifted = g_morphism(plus, strict, flexible)
    assert check_inst_comorphism(lifted, g_object(strict), g_object(flexible)).ok


def test_g_of_a_lifted_comorphism_is_a_comorphism():
    f, source, target = RandomCorpus(seed=7).comorphism()
    h = f_morphism(f)
    lifted = g_morphism(h, f_object(source), f_object(target))
    assert check_inst_comorphism(lifted, g_object(f_object(source)), g_object(f_object(target))).ok


def test_g_preserves_composition():
    f, source, target = RandomCorpus(seed=13).comorphism()
    first, second = f_morphism(counit(source)), f_morphism(f)
    start = f_object(g_object(f_object(source)))
    middle, end = f_object(source), f_object(target)
    direct = g_morphism(compose_pi_comorphisms(first, second), start, end)
    stepwise = compose_inst_comorphisms(g_morphism(first, start, middle), g_morphism(second, middle, end))
    assert same_comorphism(direct, stepwise)


@given(st.integers(0, 10_000))
def test_closed_theory_institutions_are_valid(seed):
    pi = RandomCorpus(seed).pi_institution()
    closed = g_object(pi)
    assert validate_institution(closed).ok
    for sig in closed.sig.objects:
        for model in closed.models(sig):
            assert models_star(closed, sig, {model}) == theory_of(model)


def _g_after_f(f, source, target):
    return g_morphism(f_morphism(f), f_object(source), f_object(target))


def test_g_after_f_preserves_identities(rename):
    lifted = _g_after_f(identity_inst_comorphism(rename), rename, rename)
    assert same_comorphism(lifted, identity_inst_comorphism(g_object(f_object(rename))))


def test_g_after_f_preserves_composition():
    f, source, target = RandomCorpus(seed=23).comorphism()
    epsilon = counit(source)
    middle = g_object(f_object(source))
    direct = _g_after_f(compose_inst_comorphisms(epsilon, f), middle, target)
    first, second = _g_after_f(epsilon, middle, source), _g_after_f(f, source, target)
    assert same_comorphism(direct, compose_inst_comorphisms(first, second))
    assert check_functor(compose_functors(first.phi, second.phi)).ok
