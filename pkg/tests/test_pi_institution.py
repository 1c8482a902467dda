import pytest

from src.checkers.pi_institution import (
    PiInstitutionChecker,
    check_closure_laws,
    check_coherence,
    check_pi_comorphism,
    validate_pi_institution,
)
from src.core.fincat import FinFunctor, NatTransSet
from src.core.pi_institution import (
    PiComorphism,
    closed_sets,
    closure_of,
    compose_pi_comorphisms,
    identity_pi_comorphism,
    is_closed,
    same_pi_comorphism,
)
from src.core.report import Status
from src.core.subsets import all_subsets
from src.generators import fixtures
from src.generators.adjunction import counit, unit
from src.generators.f_functor import f_morphism, f_object
from src.generators.g_functor import g_object
from src.generators.sampler import RandomCorpus
from src.utils.errors import SentenceOutOfUniverse, UniverseTooLarge
from tests.helpers import pi_comorphism_between, pi_over_twoval_universe


def test_closure_of_twoval(closure_twoval):
    assert closure_of(closure_twoval, "S0", set()) == {"a"}
    assert closure_of(closure_twoval, "S0", {"b"}) == {"a", "b"}


def test_closure_is_idempotent_on_fixtures(closure_twoval, rename):
    for pi in (closure_twoval, f_object(rename)):
        for sig in pi.sig.objects:
            for gamma in all_subsets(pi.sentences(sig), 16):
                closed = closure_of(pi, sig, gamma)
                assert closure_of(pi, sig, closed) == closed


def test_closure_rejects_foreign_sentences(closure_twoval):
    with pytest.raises(SentenceOutOfUniverse):
        closure_of(closure_twoval, "S0", {"z"})


def test_closed_sets(closure_twoval):
    assert closed_sets(closure_twoval, "S0") == [frozenset({"a"}), frozenset({"a", "b"})]
    assert len(closed_sets(fixtures.identity_closure(("a", "b")), "S0")) == 4
    assert closed_sets(fixtures.indiscrete_closure(("a", "b")), "S0") == [frozenset({"a", "b"})]


def test_closure_laws_of_twoval(closure_twoval):
    assert check_closure_laws(closure_twoval).ok


def test_shrinking_closure_is_not_extensive():
    pi = pi_over_twoval_universe({("a",): ()})
    assert check_closure_laws(pi).has("extensivity", "S0", '["a"]')


def test_non_monotone_closure():
    pi = pi_over_twoval_universe({("a",): ("a", "b"), ("a", "b"): ("a",)})
    assert check_closure_laws(pi).has("monotonicity")


def test_coherence_of_rename(rename):
    assert check_coherence(f_object(rename)).ok


def test_coherence_over_a_single_signature():
    assert check_coherence(fixtures.indiscrete_closure()).ok


def test_incoherent_closures(incoherent):
    assert check_coherence(incoherent).has("coherence", "h", "[]")


def test_sampled_sweep_above_the_cap(closure_twoval):
    checker = PiInstitutionChecker(cap=1)
    samples = {"S0": [frozenset(), frozenset({"a"}), frozenset({"a", "b"})]}
    report = checker.check_closure_laws(closure_twoval, samples)
    assert report.ok
    assert report.status == Status.SAMPLED


def test_sweep_above_the_cap_without_samples(closure_twoval):
    with pytest.raises(UniverseTooLarge):
        PiInstitutionChecker(cap=1).check_closure_laws(closure_twoval)


def test_validate_shipped_structures():
    for pi in (fixtures.identity_closure(), fixtures.js(), fixtures.jf()):
        assert validate_pi_institution(pi).ok


def test_identity_pi_comorphism(closure_twoval):
    identity = identity_pi_comorphism(closure_twoval)
    assert check_pi_comorphism(identity, closure_twoval, closure_twoval).ok


def test_translation_into_a_weaker_closure(closure_twoval):
    discrete = fixtures.identity_closure(("a", "b"))
    g = pi_comorphism_between(closure_twoval, discrete, {"S0": "S0"}, {"S0": {"a": "a", "b": "b"}})
    report = check_pi_comorphism(g, closure_twoval, discrete)
    assert report.has("pi-compatibility", "S0", "[]", "a")


def test_identity_is_a_unit_for_pi_composition(closure_twoval):
    g = unit(closure_twoval)
    identity = identity_pi_comorphism(closure_twoval)
    assert same_pi_comorphism(compose_pi_comorphisms(identity, g), g)


def test_composite_translation_is_pointwise(twoval, closure_twoval):
    g, g2 = unit(closure_twoval), f_morphism(counit(twoval))
    composite = compose_pi_comorphisms(g, g2)
    for s in closure_twoval.sentences("S0"):
        assert composite.alpha.apply("S0", s) == g2.alpha.apply(g.phi.obj("S0"), g.alpha.apply("S0", s))


def test_composite_of_valid_pi_comorphisms(twoval, closure_twoval):
    composite = compose_pi_comorphisms(unit(closure_twoval), f_morphism(counit(twoval)))
    assert check_pi_comorphism(composite, closure_twoval, closure_twoval).ok


def test_closed_sets_are_the_fixpoints(closure_twoval, rename):
    for pi in (closure_twoval, f_object(rename), fixtures.js(), RandomCorpus(seed=9).pi_institution()):
        for sig in pi.sig.objects:
            fixpoints = [g for g in all_subsets(pi.sentences(sig), 16) if is_closed(pi, sig, g)]
            assert set(closed_sets(pi, sig)) == set(fixpoints)


@pytest.mark.parametrize("name", sorted(fixtures.PI_FIXTURES))
def test_identity_on_every_shipped_pi_institution(name):
    pi = fixtures.PI_FIXTURES[name]()
    assert check_pi_comorphism(identity_pi_comorphism(pi), pi, pi).ok


@pytest.mark.parametrize("name", sorted(fixtures.FIXTURES))
def test_identity_on_the_closure_of_every_shipped_institution(name):
    pi = f_object(fixtures.FIXTURES[name]())
    assert check_pi_comorphism(identity_pi_comorphism(pi), pi, pi).ok


def test_pi_translation_reindexed_along_another_functor(rename):
    pi = f_object(rename)
    sig = pi.sig
    collapse = FinFunctor(
        sig, sig, {"S1": "S2", "S2": "S2"}, {"id_S1": "id_S2", "id_S2": "id_S2", "h": "id_S2"}
    )
    alpha = NatTransSet(pi.sen, pi.sen, {"S1": {"p": "q"}, "S2": {"q": "q", "r": "r"}}, target_reindex=collapse)
    g = PiComorphism(FinFunctor.identity(sig), alpha)
    assert check_pi_comorphism(g, pi, pi).has("alpha-shape", "reindex")


def test_pi_composition_is_associative():
    f, source, target = RandomCorpus(seed=19).comorphism()
    middle = g_object(f_object(source))
    first, second, third = f_morphism(counit(middle)), f_morphism(counit(source)), f_morphism(f)
    left = compose_pi_comorphisms(compose_pi_comorphisms(first, second), third)
    right = compose_pi_comorphisms(first, compose_pi_comorphisms(second, third))
    assert same_pi_comorphism(left, right)
    assert check_pi_comorphism(left, f_object(g_object(f_object(middle))), f_object(target)).ok
