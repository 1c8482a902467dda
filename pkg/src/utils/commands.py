from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import graphviz
import pandas as pd

from src.checkers.adjunction import AdjunctionChecker
from src.checkers.category import CategoryChecker
from src.checkers.galois import GaloisChecker
from src.checkers.institution import InstitutionChecker
from src.checkers.pi_institution import PiInstitutionChecker
from src.core.institution import Institution
from src.core.pi_institution import closure_of
from src.core.report import ReportBuilder, ValidationReport
from src.core.subsets import subset_id
from src.generators.adjunction import counit, transpose, unit, unit_target
from src.generators.f_functor import f_morphism, f_object
from src.generators.g_functor import g_morphism, g_object
from src.generators.sampler import RandomCorpus
from src.logic.builders import build_logics_pi_institution, build_matrix_institution, build_plus_comorphism
from src.logic.formula import parse_formula, render_formula
from src.logic.matrix import LogicPresentation
from src.logic.translation import STRICT, LogicMorphismChecker, translate_formula
from src.utils.config import RandomLimits
from src.utils.documents import (
    INST_COMORPHISM,
    INST_MORPHISM,
    INSTITUTION,
    LOGIC,
    PI_COMORPHISM,
    PI_INSTITUTION,
    TRANSLATION,
    Body,
    ComorphismDocument,
    canonical_json,
    dump_morphism,
    dump_structure,
)
from src.utils.errors import ParseError, SentenceOutOfUniverse
from src.utils.file_handler import FileHandler
from src.utils.logger import Logger


@dataclass
class CommandContext:
    cap: int
    search_bound: int
    formula_bound: int
    seed: int = 0
    output: Optional[Path] = None
    random_limits: RandomLimits = field(default_factory=RandomLimits)


@dataclass
class CommandResult:
    report: Optional[ValidationReport] = None
    document: Optional[Body] = None
    text: Optional[str] = None


@dataclass(frozen=True)
class CommandSpec:
    group: str
    name: Optional[str]
    method: str
    arguments: Tuple[Tuple[Tuple[str, ...], Dict[str, Any]], ...] = ()
    checker: Optional[str] = None
    help: str = ""


def _doc(name: str = "path", help: str = "document path") -> Tuple[Tuple[str, ...], Dict[str, Any]]:
    return (name,), {"help": help}


COMMAND_TABLE: Tuple[CommandSpec, ...] = (
    CommandSpec("check", "category", "check_category", (_doc(help="institution or π-institution document"),),
                "src.checkers.category.check_category", "category laws of the signature category"),
    CommandSpec("check", "institution", "check_institution", (_doc(),),
                "src.checkers.institution.validate_institution", "category, functor and satisfaction laws"),
    CommandSpec("check", "pi", "check_pi", (_doc(),),
                "src.checkers.pi_institution.validate_pi_institution", "closure and coherence laws"),
    CommandSpec("check", "inst-comorphism", "check_inst_comorphism", (_doc(),),
                "src.checkers.institution.check_inst_comorphism", "institution comorphism laws"),
    CommandSpec("check", "inst-morphism", "check_inst_morphism", (_doc(),),
                "src.checkers.institution.check_inst_morphism", "institution morphism laws"),
    CommandSpec("check", "pi-comorphism", "check_pi_comorphism", (_doc(),),
                "src.checkers.pi_institution.check_pi_comorphism", "π-comorphism laws"),
    CommandSpec("check", "lemma1", "check_lemma1", (_doc(help="institution comorphism document"),),
                "src.checkers.galois.check_lemma1", "star operators commute with a comorphism"),
    CommandSpec("check", "galois", "check_galois", (_doc(), (("--sig",), {"default": None})),
                "src.checkers.galois.check_galois_laws", "Galois connection laws"),
    CommandSpec("check", "preimage", "check_preimage", (_doc(), (("--morphism",), {"default": None})),
                "src.checkers.pi_institution.check_preimage_closed", "preimages of closed sets are closed"),
    CommandSpec("apply", "F", "apply_f", (_doc(help="institution or institution comorphism document"),),
                help="semantic-closure π-institution"),
    CommandSpec("apply", "G", "apply_g", (_doc(help="π-institution or π-comorphism document"),),
                help="closed-theory institution"),
    CommandSpec("adjunction", "unit", "adjunction_unit", (_doc(),),
                "src.checkers.adjunction.check_unit", "unit J → F(G(J))"),
    CommandSpec("adjunction", "transpose", "adjunction_transpose", (_doc(help="π-comorphism into an institution"),),
                help="transpose of h: J → F(I)"),
    CommandSpec("adjunction", "fg-identity", "adjunction_fg_identity", (_doc(),),
                "src.checkers.adjunction.check_fg_identity", "F(G(J)) = J"),
    CommandSpec("adjunction", "universal", "adjunction_universal", (_doc(help="π-comorphism into an institution"),),
                "src.checkers.adjunction.check_universal_property", "unique transpose by exhaustive search"),
    CommandSpec("adjunction", "counit", "adjunction_counit", (_doc(),),
                "src.checkers.adjunction.check_counit_triangle", "counit G(F(I)) → I and its triangle"),
    CommandSpec("adjunction", "unit-triangle", "adjunction_unit_triangle", (_doc(),),
                "src.checkers.adjunction.check_unit_triangle", "ε_G(J) after G(η_J) is the identity"),
    CommandSpec("adjunction", "hom-bijection", "adjunction_hom_bijection", (_doc("pi"), _doc("institution")),
                "src.checkers.adjunction.check_hom_bijection", "hom-set sizes agree"),
    CommandSpec("logic", "build-institution", "logic_build_institution", ((("paths",), {"nargs": "+"}),),
                help="matrix institution of logic and translation documents"),
    CommandSpec("logic", "build-pi", "logic_build_pi",
                ((("paths",), {"nargs": "+"}), (("--kind",), {"default": STRICT, "choices": ["strict", "flexible"]})),
                help="π-institution of logic and translation documents"),
    CommandSpec("logic", "check-morphism", "logic_check_morphism", (_doc(help="translation document"),),
                "src.logic.translation.check_logic_morphism", "translation preserves consequence"),
    CommandSpec("logic", "closure", "logic_closure", (_doc(help="logic document"), (("formulas",), {"nargs": "*"})),
                help="matrix consequences of a set of formulas"),
    CommandSpec("logic", "translate", "logic_translate", (_doc(help="translation document"), (("formula",), {})),
                help="translate one formula"),
    CommandSpec("logic", "plus", "logic_plus", (_doc("strict"), _doc("flexible")),
                help="inclusion of a strict π-institution into a flexible one"),
    CommandSpec("closure", None, "closure", (_doc(), (("sig",), {}), (("sentences",), {"nargs": "*"})),
                help="closure of a set of sentences"),
    CommandSpec("generate", "institution", "generate_institution", (), help="random lawful institution"),
    CommandSpec("generate", "comorphism", "generate_comorphism", (), help="random valid institution comorphism"),
    CommandSpec("generate", "pi", "generate_pi", (), help="random lawful π-institution"),
    CommandSpec("show", "category", "show_category", (_doc(),), help="signature category as Graphviz DOT"),
    CommandSpec("show", "sat", "show_sat", (_doc(), (("--sig",), {"default": None})), help="satisfaction table"),
)


def find_command(group: str, name: Optional[str]) -> CommandSpec:
    for spec in COMMAND_TABLE:
        if spec.group == group and spec.name == name:
            return spec
    raise ParseError(f"unknown command {group} {name or ''}".strip())


class CommandHandler:
    def __init__(self, context: CommandContext, logger: Logger):
        self.context = context
        self.logger = logger
        self.files = FileHandler(context.cap, context.formula_bound, logger)
        checker_args = (context.cap, context.search_bound, logger)
        self.categories = CategoryChecker(*checker_args)
        self.institutions = InstitutionChecker(*checker_args)
        self.pi_institutions = PiInstitutionChecker(*checker_args)
        self.galois = GaloisChecker(*checker_args)
        self.adjunction = AdjunctionChecker(*checker_args)
        self.logic_morphisms = LogicMorphismChecker(*checker_args)

    def execute(self, spec: CommandSpec, args: Any) -> CommandResult:
        self.logger.check(f"{spec.group} {spec.name or ''}".strip())
        return getattr(self, spec.method)(args)

    def _load(self, path: str, *kinds: str):
        return self.files.load_structure(path, *kinds)

    def _morphism(self, path: str, kind: str) -> ComorphismDocument:
        return self._load(path, kind)

    def _dump(self, structure) -> Body:
        return dump_structure(structure, self.context.cap)

    # check

    def check_category(self, args) -> CommandResult:
        structure = self._load(args.path, INSTITUTION, PI_INSTITUTION)
        return CommandResult(report=self.categories.check_category(structure.sig))

    def check_institution(self, args) -> CommandResult:
        return CommandResult(report=self.institutions.validate_institution(self._load(args.path, INSTITUTION)))

    def check_pi(self, args) -> CommandResult:
        return CommandResult(report=self.pi_institutions.validate_pi_institution(self._load(args.path, PI_INSTITUTION)))

    def check_inst_comorphism(self, args) -> CommandResult:
        doc = self._morphism(args.path, INST_COMORPHISM)
        return CommandResult(report=self.institutions.check_inst_comorphism(doc.morphism, doc.source, doc.target))

    def check_inst_morphism(self, args) -> CommandResult:
        doc = self._morphism(args.path, INST_MORPHISM)
        return CommandResult(report=self.institutions.check_inst_morphism(doc.morphism, doc.source, doc.target))

    def check_pi_comorphism(self, args) -> CommandResult:
        doc = self._morphism(args.path, PI_COMORPHISM)
        return CommandResult(report=self.pi_institutions.check_pi_comorphism(doc.morphism, doc.source, doc.target))

    def check_lemma1(self, args) -> CommandResult:
        doc = self._morphism(args.path, INST_COMORPHISM)
        return CommandResult(report=self.galois.check_lemma1(doc.morphism, doc.source, doc.target))

    def check_galois(self, args) -> CommandResult:
        return CommandResult(report=self.galois.check_galois_laws(self._load(args.path, INSTITUTION), args.sig))

    def check_preimage(self, args) -> CommandResult:
        pi = self._load(args.path, PI_INSTITUTION)
        morphisms = [args.morphism] if args.morphism else [m.id for m in pi.sig.non_identities()]
        builder = ReportBuilder()
        for f in morphisms:
            pi.sig.morphism(f)
            builder.include(self.pi_institutions.check_preimage_closed(pi, f))
        return CommandResult(report=builder.build())

    # apply

    def apply_f(self, args) -> CommandResult:
        document = self.files.load_document(args.path)
        cap, logger = self.context.cap, self.logger
        if document.kind == INSTITUTION:
            return CommandResult(document=self._dump(f_object(document.body, cap=cap, logger=logger)))
        if document.kind == INST_COMORPHISM:
            doc = document.body
            image = f_morphism(doc.morphism, doc.source, doc.target, cap=cap, logger=logger)
            return CommandResult(document=dump_morphism(
                PI_COMORPHISM, image,
                self._dump(f_object(doc.source, cap=cap)), self._dump(f_object(doc.target, cap=cap)),
            ))
        raise ParseError(f"F applies to institutions and institution comorphisms, not {document.kind}")

    def apply_g(self, args) -> CommandResult:
        document = self.files.load_document(args.path)
        cap, logger = self.context.cap, self.logger
        if document.kind == PI_INSTITUTION:
            return CommandResult(document=self._dump(g_object(document.body, cap, logger)))
        if document.kind == PI_COMORPHISM:
            doc = document.body
            image = g_morphism(doc.morphism, doc.source, doc.target, cap, logger=logger)
            return CommandResult(document=dump_morphism(
                INST_COMORPHISM, image, self._dump(g_object(doc.source, cap)), self._dump(g_object(doc.target, cap)),
            ))
        raise ParseError(f"G applies to π-institutions and π-comorphisms, not {document.kind}")

    # adjunction

    def _into_institution(self, path: str) -> ComorphismDocument:
        doc = self._morphism(path, PI_COMORPHISM)
        if doc.institution is None:
            raise ParseError(f"{path}: the target must be given as an institution document")
        return doc

    def adjunction_unit(self, args) -> CommandResult:
        pi = self._load(args.path, PI_INSTITUTION)
        document = None
        if self.context.output:
            target = unit_target(pi, self.context.cap)
            document = dump_morphism(PI_COMORPHISM, unit(pi), self._dump(pi), self._dump(target))
        return CommandResult(report=self.adjunction.check_unit(pi), document=document)

    def adjunction_transpose(self, args) -> CommandResult:
        doc = self._into_institution(args.path)
        cap = self.context.cap
        h_bar = transpose(doc.morphism, doc.source, doc.institution, cap, logger=self.logger)
        return CommandResult(document=dump_morphism(
            INST_COMORPHISM, h_bar, self._dump(g_object(doc.source, cap)), self._dump(doc.institution)
        ))

    def adjunction_fg_identity(self, args) -> CommandResult:
        return CommandResult(report=self.adjunction.check_fg_identity(self._load(args.path, PI_INSTITUTION)))

    def adjunction_universal(self, args) -> CommandResult:
        doc = self._into_institution(args.path)
        return CommandResult(report=self.adjunction.check_universal_property(doc.morphism, doc.source, doc.institution))

    def adjunction_counit(self, args) -> CommandResult:
        institution = self._load(args.path, INSTITUTION)
        document = None
        if self.context.output:
            epsilon = counit(institution, self.context.cap, self.logger)
            source = g_object(f_object(institution, check=False), self.context.cap)
            document = dump_morphism(INST_COMORPHISM, epsilon, self._dump(source), self._dump(institution))
        return CommandResult(report=self.adjunction.check_counit_triangle(institution), document=document)

    def adjunction_unit_triangle(self, args) -> CommandResult:
        return CommandResult(report=self.adjunction.check_unit_triangle(self._load(args.path, PI_INSTITUTION)))

    def adjunction_hom_bijection(self, args) -> CommandResult:
        pi = self._load(args.pi, PI_INSTITUTION)
        institution = self._load(args.institution, INSTITUTION)
        return CommandResult(report=self.adjunction.check_hom_bijection(pi, institution))

    # logic

    def _logics_and_translations(self, paths: Sequence[str]):
        logics: Dict[str, LogicPresentation] = {}
        translations = []
        for path in paths:
            document = self.files.load_document(path)
            if document.kind == LOGIC:
                logics[document.body.name] = document.body
            elif document.kind == TRANSLATION:
                for logic in (document.body.source, document.body.target):
                    logics.setdefault(logic.name, logic)
                translations.append(document.body.translation)
            else:
                raise ParseError(f"{path}: expected a logic or translation document, got {document.kind}")
        return list(logics.values()), translations

    def logic_build_institution(self, args) -> CommandResult:
        logics, translations = self._logics_and_translations(args.paths)
        return CommandResult(document=self._dump(build_matrix_institution(logics, translations)))

    def logic_build_pi(self, args) -> CommandResult:
        logics, translations = self._logics_and_translations(args.paths)
        pi = build_logics_pi_institution(args.kind, logics, translations, cap=self.context.cap, logger=self.logger)
        return CommandResult(document=self._dump(pi))

    def logic_check_morphism(self, args) -> CommandResult:
        doc = self._load(args.path, TRANSLATION)
        return CommandResult(report=self.logic_morphisms.check_logic_morphism(doc.translation, doc.source, doc.target))

    def logic_closure(self, args) -> CommandResult:
        logic = self._load(args.path, LOGIC)
        gamma = {render_formula(parse_formula(text, logic.signature, logic.variables)) for text in args.formulas}
        return CommandResult(text=subset_id(logic.closure(gamma), logic.universe_ids) + "\n")

    def logic_translate(self, args) -> CommandResult:
        doc = self._load(args.path, TRANSLATION)
        formula = parse_formula(args.formula, doc.source.signature, doc.source.variables)
        return CommandResult(text=render_formula(translate_formula(doc.translation, formula)) + "\n")

    def logic_plus(self, args) -> CommandResult:
        strict = self._load(args.strict, PI_INSTITUTION)
        flexible = self._load(args.flexible, PI_INSTITUTION)
        plus = build_plus_comorphism(strict, flexible)
        return CommandResult(document=dump_morphism(PI_COMORPHISM, plus, self._dump(strict), self._dump(flexible)))

    # closure

    def closure(self, args) -> CommandResult:
        document = self.files.load_document(args.path)
        if document.kind == INSTITUTION:
            pi = f_object(document.body, cap=self.context.cap, logger=self.logger)
        elif document.kind == PI_INSTITUTION:
            pi = document.body
        else:
            raise ParseError(f"closure needs an institution or a π-institution, not {document.kind}")
        universe = pi.sentences(args.sig)
        stray = [s for s in args.sentences if s not in universe]
        if stray:
            raise SentenceOutOfUniverse(f"{stray} not in Sen({args.sig})", {"sentences": stray})
        return CommandResult(text=subset_id(closure_of(pi, args.sig, set(args.sentences)), universe) + "\n")

    # generate

    def _corpus(self) -> RandomCorpus:
        return RandomCorpus(self.context.seed, self.context.random_limits, self.logger)

    def generate_institution(self, args) -> CommandResult:
        return CommandResult(document=self._dump(self._corpus().institution()))

    def generate_comorphism(self, args) -> CommandResult:
        f, source, target = self._corpus().comorphism()
        return CommandResult(document=dump_morphism(INST_COMORPHISM, f, self._dump(source), self._dump(target)))

    def generate_pi(self, args) -> CommandResult:
        return CommandResult(document=self._dump(self._corpus().pi_institution()))

    # show

    def show_category(self, args) -> CommandResult:
        c = self._load(args.path, INSTITUTION, PI_INSTITUTION).sig
        dot = graphviz.Digraph(name="signatures")
        for o in c.objects:
            dot.node(o)
        for m in c.non_identities():
            dot.edge(m.src, m.dst, label=m.id)
        return CommandResult(text=dot.source)

    def show_sat(self, args) -> CommandResult:
        institution: Institution = self._load(args.path, INSTITUTION)
        signatures = [args.sig] if args.sig else list(institution.sig.objects)
        blocks: List[str] = []
        for sig in signatures:
            matrix = institution.matrix(sig)
            df = pd.DataFrame(matrix.values, index=list(matrix.models), columns=list(matrix.sentences))
            table = df.map(lambda v: "1" if v else ".").to_string() if len(df.index) else "(no models)"
            blocks.append(f"# {sig}\n{table}\n")
        return CommandResult(text="\n".join(blocks))


def render_document(body: Body) -> str:
    return canonical_json(body)
