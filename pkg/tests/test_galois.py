from hypothesis import given, strategies as st

from src.checkers.galois import GaloisChecker, check_galois_laws, check_lemma1
from src.checkers.pi_institution import check_closure_laws, check_coherence, check_pi_comorphism
from src.core.institution import compose_inst_comorphisms, identity_inst_comorphism
from src.core.pi_institution import (
    closure_of,
    compose_pi_comorphisms,
    identity_pi_comorphism,
    same_pi_comorphism,
)
from src.generators.adjunction import counit
from src.generators.f_functor import GaloisConnection, f_morphism, f_object, models_star, sentences_star
from src.generators.g_functor import g_object
from src.generators.sampler import RandomCorpus


class ForgetfulStar(GaloisConnection):
    """Loses every model once Γ has two sentences."""

    def sentences_star(self, sig, gamma):
        if len(gamma) > 1:
            return frozenset()
        return super().sentences_star(sig, gamma)


def test_sentences_star(twoval):
    assert sentences_star(twoval, "S0", set()) == {"m1", "m2"}
    assert sentences_star(twoval, "S0", {"b"}) == {"m2"}
    assert sentences_star(twoval, "S0", {"a", "b"}) == {"m2"}


def test_models_star(twoval):
    assert models_star(twoval, "S0", set()) == {"a", "b"}
    assert models_star(twoval, "S0", {"m1", "m2"}) == {"a"}
    assert models_star(twoval, "S0", {"m2"}) == {"a", "b"}


def test_semantic_closure_of_twoval(closure_twoval):
    assert closure_of(closure_twoval, "S0", {"b"}) == {"a", "b"}


def test_semantic_closure_of_cpl1(cpl1):
    pi = f_object(cpl1)
    assert closure_of(pi, "CPL1", set()) == set()
    assert closure_of(pi, "CPL1", {"p"}) == {"p", "and(p,p)"}
    assert closure_of(pi, "CPL1", {"p", "not(p)"}) == {"p", "and(p,p)", "not(p)"}


def test_f_preserves_identities(twoval, closure_twoval):
    assert same_pi_comorphism(f_morphism(identity_inst_comorphism(twoval)), identity_pi_comorphism(closure_twoval))


def test_f_preserves_composition():
    f, source, target = RandomCorpus(seed=5).comorphism()
    epsilon = counit(source)
    direct = f_morphism(compose_inst_comorphisms(epsilon, f))
    stepwise = compose_pi_comorphisms(f_morphism(epsilon), f_morphism(f))
    assert same_pi_comorphism(direct, stepwise)


def test_f_of_the_counit(twoval, closure_twoval):
    source = f_object(g_object(closure_twoval))
    assert check_pi_comorphism(f_morphism(counit(twoval)), source, closure_twoval).ok


def test_galois_laws_on_fixtures(twoval, rename, cpl1):
    for institution in (twoval, rename, cpl1):
        assert check_galois_laws(institution).ok


def test_broken_star_fails_the_triple_star_law(twoval):
    report = GaloisChecker(connection=ForgetfulStar).check_galois_laws(twoval, "S0")
    assert report.has("triple-star", "S0", '["b"]')


def test_lemma1_for_the_identity(twoval):
    assert check_lemma1(identity_inst_comorphism(twoval), twoval, twoval).ok


def test_lemma1_for_the_counit(twoval):
    assert check_lemma1(counit(twoval), g_object(f_object(twoval)), twoval).ok


@given(st.integers(0, 10_000))
def test_random_institutions_give_closure_operators(seed):
    institution = RandomCorpus(seed).institution()
    pi = f_object(institution)
    assert check_closure_laws(pi).ok
    assert check_coherence(pi).ok
    assert check_galois_laws(institution).ok


@given(st.integers(0, 10_000))
def test_random_comorphisms_satisfy_lemma1(seed):
    f, source, target = RandomCorpus(seed).comorphism()
    assert check_lemma1(f, source, target).ok
