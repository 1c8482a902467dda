import pytest
from hypothesis import given, strategies as st

from src.checkers.pi_institution import check_pi_comorphism, validate_pi_institution
from src.checkers.institution import validate_institution
from src.core.pi_institution import closure_of
from src.core.subsets import all_subsets
from src.generators import fixtures
from src.generators.f_functor import f_object
from src.logic.builders import build_logics_pi_institution, build_matrix_institution, build_plus_comorphism
from src.logic.formula import (
    Conn,
    PropSignature,
    Var,
    enumerate_formulas,
    parse_formula,
    render_formula,
    substitute,
)
from src.logic.matrix import boolean_matrix, eval_formula, lukasiewicz_matrix, matrix_consequence
from src.logic.translation import FLEXIBLE, STRICT, SigTranslation, check_logic_morphism, reread_flexible, translate_formula
from src.utils.errors import (
    ArityMismatch,
    DepthOverflow,
    FormulaSyntaxError,
    InvalidLogicMorphism,
    NotASubcategory,
    UnknownSymbol,
)

AND_NOT = PropSignature({"and": 2, "not": 1})
P, Q = Var("p"), Var("q")

formulas = st.recursive(
    st.sampled_from([P, Q]),
    lambda inner: st.one_of(
        st.builds(lambda a: Conn("not", (a,)), inner),
        st.builds(lambda a, b: Conn("and", (a, b)), inner, inner),
    ),
    max_leaves=8,
)


def test_parse_variable_and_tree():
    assert parse_formula("p", AND_NOT, ["p"]) == P
    assert parse_formula("and(p, not(p))", AND_NOT, ["p"]) == Conn("and", (P, Conn("not", (P,))))


def test_parse_errors():
    with pytest.raises(ArityMismatch):
        parse_formula("and(p)", AND_NOT, ["p"])
    with pytest.raises(UnknownSymbol):
        parse_formula("xor(p,p)", AND_NOT, ["p"])
    with pytest.raises(FormulaSyntaxError):
        parse_formula("and(p,,p)", AND_NOT, ["p"])


def test_enumeration_order():
    assert [render_formula(f) for f in fixtures.cpl1().universe] == ["p", "and(p,p)", "not(p)"]
    assert [render_formula(f) for f in enumerate_formulas(AND_NOT, ["p", "q"], 0)] == ["p", "q"]


def test_enumeration_is_stable():
    first = enumerate_formulas(AND_NOT, ["p"], 2)
    assert len(first) == 13
    assert first == enumerate_formulas(AND_NOT, ["p"], 2)


def test_rendering_is_injective():
    rendered = [render_formula(f) for f in enumerate_formulas(AND_NOT, ["p", "q"], 2)]
    assert len(set(rendered)) == len(rendered)


@given(formulas)
def test_parse_inverts_render(f):
    assert parse_formula(render_formula(f), AND_NOT, ["p", "q"]) == f


def test_boolean_evaluation():
    matrix = boolean_matrix({"and": "and", "not": "not"})
    assert eval_formula(matrix, {"p": "1"}, Conn("and", (P, Conn("not", (P,))))) == "0"


def test_lukasiewicz_evaluation():
    matrix = lukasiewicz_matrix(3, {"not": "not", "imp": "imp"})
    assert eval_formula(matrix, {"p": "1/2"}, Conn("not", (P,))) == "1/2"
    assert eval_formula(matrix, {"p": "1/2"}, Conn("imp", (P, P))) == "1"


def test_matrix_consequence():
    cpl1 = fixtures.cpl1()
    assert matrix_consequence(cpl1, [P], Conn("and", (P, P)))
    assert not matrix_consequence(cpl1, [], P)
    assert matrix_consequence(fixtures.luk3(("p", "q")), [P, Conn("imp", (P, Q))], Q)


def test_strict_and_flexible_translations():
    conjunction = Conn("and", (P, Q))
    assert translate_formula(fixtures.and_to_or(), conjunction) == Conn("or", (P, Q))
    assert render_formula(translate_formula(fixtures.de_morgan(), conjunction)) == "not(or(not(p),not(q)))"


@given(formulas, formulas, formulas)
def test_translation_commutes_with_substitution(f, for_p, for_q):
    sigma = {"p": for_p, "q": for_q}
    for t in (fixtures.rename_connectives(), fixtures.de_morgan()):
        translated_sigma = {x: translate_formula(t, g) for x, g in sigma.items()}
        assert translate_formula(t, substitute(f, sigma)) == substitute(translate_formula(t, f), translated_sigma)


def test_identity_translation_is_a_logic_morphism():
    cpl1 = fixtures.cpl1()
    identity = SigTranslation(STRICT, {"and": "and", "not": "not"}, "id", "CPL1", "CPL1")
    assert check_logic_morphism(identity, cpl1, cpl1).ok


def test_de_morgan_preserves_consequence():
    assert check_logic_morphism(fixtures.de_morgan(), fixtures.and_not(), fixtures.de_morgan_target()).ok


def test_swapping_conjunction_for_disjunction_fails():
    source = fixtures.and_not(("p", "q"), "AN2")
    target = fixtures.or_not(("p", "q"), "ON2")
    report = check_logic_morphism(fixtures.and_to_or(), source, target)
    assert report.has("logic-morphism", '["and(p,q)"]', "p")


def test_flexible_images_need_room():
    with pytest.raises(DepthOverflow):
        check_logic_morphism(fixtures.de_morgan(), fixtures.and_not(), fixtures.or_not())


def test_matrix_institution_of_cpl1():
    institution = build_matrix_institution(fixtures.cpl1())
    assert len(institution.sentences("CPL1")) == 3
    assert institution.models("CPL1") == ("p=0", "p=1")
    assert validate_institution(institution).ok
    assert closure_of(f_object(institution), "CPL1", set()) == set()


def test_matrix_institution_of_luk3():
    institution = build_matrix_institution(fixtures.luk3())
    assert len(institution.models("LUK3")) == 3
    assert validate_institution(institution).ok


@pytest.mark.parametrize("logic", [fixtures.cpl1(), fixtures.luk3()], ids=["cpl1", "luk3"])
def test_semantic_closure_is_matrix_consequence(logic):
    pi = f_object(build_matrix_institution(logic))
    formulas_by_id = dict(zip(logic.universe_ids, logic.universe))
    for gamma in all_subsets(logic.universe_ids, 16):
        expected = {
            s for s, f in formulas_by_id.items()
            if matrix_consequence(logic, [formulas_by_id[g] for g in gamma], f)
        }
        assert closure_of(pi, logic.name, gamma) == expected


def test_shipped_logic_pi_institutions_are_lawful():
    for pi in (fixtures.js(), fixtures.jf()):
        assert validate_pi_institution(pi).ok


def test_single_logic_gives_one_signature():
    pi = build_logics_pi_institution(STRICT, [fixtures.cpl1()])
    assert list(pi.sig.objects) == ["CPL1"]
    assert validate_pi_institution(pi).ok


def test_strict_category_rejects_flexible_translations():
    with pytest.raises(InvalidLogicMorphism):
        build_logics_pi_institution(STRICT, [fixtures.and_not(), fixtures.de_morgan_target()], [fixtures.de_morgan()])


def test_strict_fragment_embeds_into_flexible_one():
    strict, flexible = fixtures.js(), fixtures.jf_with_renaming()
    assert check_pi_comorphism(build_plus_comorphism(strict, flexible), strict, flexible).ok


def test_objects_only_fragments_embed():
    strict = build_logics_pi_institution(STRICT, [fixtures.and_not()])
    flexible = build_logics_pi_institution(FLEXIBLE, [fixtures.and_not()])
    assert check_pi_comorphism(build_plus_comorphism(strict, flexible), strict, flexible).ok


def test_embedding_needs_every_strict_morphism():
    flexible = build_logics_pi_institution(FLEXIBLE, [fixtures.and_not(), fixtures.conj_neg()])
    with pytest.raises(NotASubcategory):
        build_plus_comorphism(fixtures.js(), flexible)


def test_embedding_must_respect_the_translations():
    source, target = fixtures.and_not(("p", "q"), "AN2"), fixtures.conj_neg(("p", "q"), "KN2")
    strict_rename = SigTranslation(STRICT, {"and": "conj", "not": "neg"}, "r", "AN2", "KN2")
    flipped = SigTranslation(
        FLEXIBLE,
        {"and": Conn("conj", (Var("x2"), Var("x1"))), "not": Conn("neg", (Var("x1"),))},
        "flip", "AN2", "KN2",
    )
    strict = build_logics_pi_institution(STRICT, [source, target], [strict_rename])
    flexible = build_logics_pi_institution(
        FLEXIBLE, [source, target], [reread_flexible(strict_rename, source.signature), flipped]
    )
    assert check_pi_comorphism(build_plus_comorphism(strict, flexible), strict, flexible).ok
    with pytest.raises(NotASubcategory) as raised:
        build_plus_comorphism(strict, flexible, {"morphisms": {"r": "flip"}})
    assert "naturality" in raised.value.details["laws"]
