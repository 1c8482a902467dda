"""Named desk-scale fixtures shared by the tests, the CLI and the shipped JSON files."""
from typing import Sequence

from src.core.fincat import FinCat, SetFunctor
from src.core.institution import Institution
from src.core.pi_institution import PiInstitution, table_closure
from src.logic.builders import build_logics_pi_institution, build_matrix_institution
from src.logic.formula import Conn, PropSignature, Var, formula_key
from src.logic.matrix import LogicPresentation, boolean_matrix, lukasiewicz_matrix
from src.logic.translation import FLEXIBLE, STRICT, SigTranslation, reread_flexible, translate_formula


def _identity_sen(sig: FinCat, universes) -> SetFunctor:
    return SetFunctor(
        sig, universes, {sig.identity[o]: {x: x for x in universes[o]} for o in sig.objects}
    )


def twoval() -> Institution:
    sig = FinCat.discrete(["S0"])
    return Institution(
        sig=sig,
        sen=_identity_sen(sig, {"S0": ("a", "b")}),
        mod_objects={"S0": ("m1", "m2")},
        mod_reduct={"id_S0": {"m1": "m1", "m2": "m2"}},
        sat={"S0": frozenset({("m1", "a"), ("m2", "a"), ("m2", "b")})},
    )


def rename() -> Institution:
    sig = FinCat.build(["S1", "S2"], [("h", "S1", "S2")])
    sen = SetFunctor(
        sig,
        {"S1": ("p",), "S2": ("q", "r")},
        {"id_S1": {"p": "p"}, "id_S2": {"q": "q", "r": "r"}, "h": {"p": "q"}},
    )
    big = [f"q={q},r={r}" for q in "FT" for r in "FT"]
    small = ["p=F", "p=T"]
    return Institution(
        sig=sig,
        sen=sen,
        mod_objects={"S1": tuple(small), "S2": tuple(big)},
        mod_reduct={
            "id_S1": {m: m for m in small},
            "id_S2": {m: m for m in big},
            "h": {m: f"p={m[2]}" for m in big},
        },
        sat={
            "S1": frozenset({("p=T", "p")}),
            "S2": frozenset(
                {(m, "q") for m in big if m.startswith("q=T")} | {(m, "r") for m in big if m.endswith("r=T")}
            ),
        },
    )


def trivial(universe: Sequence[str] = ("x",)) -> Institution:
    """One signature, no models: every theory is the whole universe."""
    sig = FinCat.discrete(["S0"])
    return Institution(
        sig=sig,
        sen=_identity_sen(sig, {"S0": tuple(universe)}),
        mod_objects={"S0": ()},
        mod_reduct={"id_S0": {}},
        sat={"S0": frozenset()},
    )


def identity_closure(universe: Sequence[str] = ("x",)) -> PiInstitution:
    sig = FinCat.discrete(["S0"])
    universe = tuple(universe)
    return PiInstitution(
        sig=sig,
        sen=_identity_sen(sig, {"S0": universe}),
        closure={"S0": table_closure(universe, lambda s: s, len(universe))},
    )


def indiscrete_closure(universe: Sequence[str] = ("a", "b")) -> PiInstitution:
    sig = FinCat.discrete(["S0"])
    universe = tuple(universe)
    return PiInstitution(
        sig=sig,
        sen=_identity_sen(sig, {"S0": universe}),
        closure={"S0": table_closure(universe, lambda s: frozenset(universe), len(universe))},
    )


def cpl1() -> LogicPresentation:
    return LogicPresentation(
        "CPL1", PropSignature({"not": 1, "and": 2}), boolean_matrix({"not": "not", "and": "and"}), ("p",), 1
    )


def luk3(variables: Sequence[str] = ("p",), depth_cap: int = 1) -> LogicPresentation:
    return LogicPresentation(
        "LUK3", PropSignature({"not": 1, "imp": 2}), lukasiewicz_matrix(3, {"not": "not", "imp": "imp"}),
        tuple(variables), depth_cap,
    )


def cpl1_institution() -> Institution:
    return build_matrix_institution(cpl1())


def and_not(variables: Sequence[str] = ("p",), name: str = "AN") -> LogicPresentation:
    return LogicPresentation(
        name, PropSignature({"and": 2, "not": 1}), boolean_matrix({"and": "and", "not": "not"}), tuple(variables), 1
    )


def conj_neg(variables: Sequence[str] = ("p",), name: str = "KN") -> LogicPresentation:
    return LogicPresentation(
        name, PropSignature({"conj": 2, "neg": 1}), boolean_matrix({"conj": "and", "neg": "not"}), tuple(variables), 1
    )


def or_not(variables: Sequence[str] = ("p",), name: str = "ON", depth_cap: int = 1) -> LogicPresentation:
    return LogicPresentation(
        name, PropSignature({"or": 2, "not": 1}), boolean_matrix({"or": "or", "not": "not"}), tuple(variables), depth_cap
    )


def rename_connectives() -> SigTranslation:
    return SigTranslation(STRICT, {"and": "conj", "not": "neg"}, "rename", "AN", "KN")


def de_morgan() -> SigTranslation:
    x1, x2 = Var("x1"), Var("x2")
    image = Conn("not", (Conn("or", (Conn("not", (x1,)), Conn("not", (x2,)))),))
    return SigTranslation(FLEXIBLE, {"and": image, "not": Conn("not", (x1,))}, "demorgan", "AN", "ON")


def de_morgan_target() -> LogicPresentation:
    """The {or, not} logic restricted to the De Morgan images of the {and, not} universe."""
    source, t = and_not(), de_morgan()
    images = sorted({translate_formula(t, f) for f in source.universe}, key=formula_key)
    base = or_not(depth_cap=3)
    return LogicPresentation(base.name, base.signature, base.matrix, base.variables, 3, tuple(images))


def and_to_or() -> SigTranslation:
    return SigTranslation(STRICT, {"and": "or", "not": "not"}, "swap", "AN2", "ON2")


def js() -> PiInstitution:
    return build_logics_pi_institution(STRICT, [and_not(), conj_neg()], [rename_connectives()])


def jf() -> PiInstitution:
    return build_logics_pi_institution(FLEXIBLE, [and_not(), de_morgan_target()], [de_morgan()])


def jf_with_renaming() -> PiInstitution:
    """The flexible fragment that also holds the strict renaming, reread as flexible."""
    flexible_rename = reread_flexible(rename_connectives(), and_not().signature)
    return build_logics_pi_institution(
        FLEXIBLE, [and_not(), conj_neg(), de_morgan_target()], [flexible_rename, de_morgan()]
    )


FIXTURES = {
    "twoval": twoval,
    "rename": rename,
    "trivial": trivial,
    "cpl1": cpl1_institution,
}

PI_FIXTURES = {
    "identity-closure": identity_closure,
    "indiscrete-closure": indiscrete_closure,
    "js": js,
    "jf": jf,
}
