# Entry-point checkers; each one is run by exactly one CLI command.
TOP_LEVEL_CHECKERS = (
    "src.checkers.category.check_category",
    "src.checkers.institution.validate_institution",
    "src.checkers.institution.check_inst_comorphism",
    "src.checkers.institution.check_inst_morphism",
    "src.checkers.pi_institution.validate_pi_institution",
    "src.checkers.pi_institution.check_pi_comorphism",
    "src.checkers.pi_institution.check_preimage_closed",
    "src.checkers.galois.check_galois_laws",
    "src.checkers.galois.check_lemma1",
    "src.checkers.adjunction.check_unit",
    "src.checkers.adjunction.check_fg_identity",
    "src.checkers.adjunction.check_universal_property",
    "src.checkers.adjunction.check_counit_triangle",
    "src.checkers.adjunction.check_unit_triangle",
    "src.checkers.adjunction.check_hom_bijection",
    "src.logic.translation.check_logic_morphism",
)
