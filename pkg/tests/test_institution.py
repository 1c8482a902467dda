from dataclasses import replace

from src.checkers.institution import (
    check_inst_comorphism,
    check_inst_morphism,
    check_satisfaction_condition,
    validate_institution,
)
from src.core.fincat import FinFunctor, NatTransSet
from src.core.institution import (
    InstComorphism,
    InstMorphism,
    compose_inst_comorphisms,
    identity_inst_comorphism,
    identity_inst_morphism,
    same_comorphism,
)
from src.generators import fixtures
from src.generators.adjunction import counit
from src.generators.f_functor import f_object
from src.generators.g_functor import g_object
from src.generators.sampler import RandomCorpus


def test_twoval_satisfaction_condition(twoval):
    assert check_satisfaction_condition(twoval).ok


def test_rename_satisfaction_condition(rename):
    assert check_satisfaction_condition(rename).ok


def test_flipped_satisfaction_is_reported(rename):
    sat = dict(rename.sat)
    sat["S2"] = rename.sat["S2"] - {("q=T,r=F", "q")}
    report = check_satisfaction_condition(replace(rename, sat=sat))
    assert report.has("satisfaction-condition", "h", "q=T,r=F", "p")


def test_fixtures_validate(twoval, rename, cpl1):
    for institution in (twoval, rename, cpl1):
        assert validate_institution(institution).ok


def test_reduct_ignoring_identities_breaks_contravariance(rename):
    reduct = dict(rename.mod_reduct)
    reduct["id_S1"] = {"p=F": "p=T", "p=T": "p=F"}
    assert validate_institution(replace(rename, mod_reduct=reduct)).has("contravariance")


def test_identity_comorphism(twoval):
    assert check_inst_comorphism(identity_inst_comorphism(twoval), twoval, twoval).ok


def test_counit_is_a_comorphism(twoval):
    source = g_object(f_object(twoval))
    assert check_inst_comorphism(counit(twoval), source, twoval).ok


def test_model_map_breaking_compatibility(twoval):
    f = identity_inst_comorphism(twoval)
    bad = InstComorphism(f.phi, f.alpha, {"S0": {"m1": "m2", "m2": "m2"}})
    assert check_inst_comorphism(bad, twoval, twoval).has("compatibility", "S0", "m1", "b")


def test_identity_morphism(twoval):
    assert check_inst_morphism(identity_inst_morphism(twoval), twoval, twoval).ok


def test_morphism_model_map_breaking_compatibility(twoval):
    h = identity_inst_morphism(twoval)
    bad = InstMorphism(h.phi, h.alpha, {"S0": {"m1": "m1", "m2": "m1"}})
    assert check_inst_morphism(bad, twoval, twoval).has("compatibility", "S0", "m2", "b")


def test_identity_is_a_unit_for_composition(twoval):
    epsilon = counit(twoval)
    source = g_object(f_object(twoval))
    assert same_comorphism(compose_inst_comorphisms(identity_inst_comorphism(source), epsilon), epsilon)
    assert same_comorphism(compose_inst_comorphisms(epsilon, identity_inst_comorphism(twoval)), epsilon)


def test_identity_composed_with_itself(twoval):
    identity = identity_inst_comorphism(twoval)
    assert same_comorphism(compose_inst_comorphisms(identity, identity), identity)


def test_composite_translation_is_pointwise():
    f, source, target = RandomCorpus(seed=3).comorphism()
    epsilon = counit(source)
    composite = compose_inst_comorphisms(epsilon, f)
    for sig in source.sig.objects:
        for s in source.sentences(sig):
            expected = f.alpha.apply(epsilon.phi.obj(sig), epsilon.alpha.apply(sig, s))
            assert composite.alpha.apply(sig, s) == expected


def test_composite_of_valid_comorphisms_is_valid():
    f, source, target = RandomCorpus(seed=11).comorphism()
    composite = compose_inst_comorphisms(counit(source), f)
    assert check_inst_comorphism(composite, g_object(f_object(source)), target).ok


def test_missing_reduct_is_reported(rename):
    reduct = dict(rename.mod_reduct)
    reduct["h"] = {m: n for m, n in rename.mod_reduct["h"].items() if m != "q=T,r=T"}
    report = check_satisfaction_condition(replace(rename, mod_reduct=reduct))
    assert report.has("reduct-total", "h", "q=T,r=T")


def test_missing_sentence_translation_is_reported(rename):
    on_morphisms = dict(rename.sen.on_morphisms)
    on_morphisms["h"] = {}
    institution = replace(rename, sen=replace(rename.sen, on_morphisms=on_morphisms))
    assert check_satisfaction_condition(institution).has("translation-total", "h", "p")


def test_translation_reindexed_along_another_functor(rename):
    sig = rename.sig
    collapse = FinFunctor(
        sig, sig, {"S1": "S2", "S2": "S2"}, {"id_S1": "id_S2", "id_S2": "id_S2", "h": "id_S2"}
    )
    alpha = NatTransSet(
        rename.sen, rename.sen, {"S1": {"p": "q"}, "S2": {"q": "q", "r": "r"}}, target_reindex=collapse
    )
    f = identity_inst_comorphism(rename)
    report = check_inst_comorphism(InstComorphism(f.phi, alpha, f.beta), rename, rename)
    assert report.has("alpha-shape", "reindex")


def test_translation_into_other_sentences(twoval):
    other = fixtures.trivial(("a", "c"))
    assert check_inst_comorphism(identity_inst_comorphism(twoval), twoval, other).has("alpha-shape", "target-functor")
    assert check_inst_morphism(identity_inst_morphism(twoval), twoval, other).has("alpha-shape", "source-functor")


def test_composition_is_associative():
    f, source, target = RandomCorpus(seed=17).comorphism()
    middle = g_object(f_object(source))
    inner, outer = counit(source), counit(middle)
    left = compose_inst_comorphisms(compose_inst_comorphisms(outer, inner), f)
    right = compose_inst_comorphisms(outer, compose_inst_comorphisms(inner, f))
    assert same_comorphism(left, right)
    assert check_inst_comorphism(left, g_object(f_object(middle)), target).ok


def test_random_comorphisms_move_along_signature_functors():
    moved = 0
    for f, source, target in RandomCorpus(seed=21).comorphisms(20):
        assert f.phi.source == source.sig
        if f.phi != FinFunctor.identity(target.sig):
            moved += 1
    assert moved > 0
