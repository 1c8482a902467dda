import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import json5

from src.core.institution import Institution
from src.core.pi_institution import PiInstitution
from src.generators.f_functor import f_object
from src.logic.builders import build_logics_pi_institution
from src.logic.matrix import LogicPresentation
from src.logic.translation import STRICT
from src.utils.config import DEFAULT_CAP, DEFAULT_FORMULA_BOUND
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
    TranslationDocument,
    canonical_json,
    parse_category,
    parse_closure_table,
    parse_inst_comorphism,
    parse_inst_morphism,
    parse_institution,
    parse_logic,
    parse_pi_comorphism,
    parse_sentence_functor,
    parse_translation,
)
from src.utils.errors import DanglingReference, ParseError
from src.utils.logger import Logger

SUFFIXES = {
    ".inst.json": INSTITUTION,
    ".pi.json": PI_INSTITUTION,
    ".comorph.json": INST_COMORPHISM,
    ".morph.json": INST_MORPHISM,
    ".picomorph.json": PI_COMORPHISM,
    ".logic.json": LOGIC,
    ".translation.json": TRANSLATION,
}

# json5 reports positions as "<string>:LINE ... column COL"
POSITION = re.compile(r":(\d+)\b.*?column (\d+)")

Structure = Union[Institution, PiInstitution, ComorphismDocument, LogicPresentation, TranslationDocument]


@dataclass(frozen=True)
class Document:
    kind: str
    body: Structure
    path: Optional[Path] = None


def kind_from_suffix(path: Path) -> Optional[str]:
    name = path.name
    for suffix, kind in SUFFIXES.items():
        if name.endswith(suffix):
            return kind
    return None


def infer_kind(body: Body) -> Optional[str]:
    if "kind" in body:
        return body["kind"]
    if "closure" in body:
        return PI_INSTITUTION
    if "mod" in body:
        return INSTITUTION
    if "connectives" in body:
        return LOGIC
    return None


class FileHandler:
    def __init__(self, cap: int = DEFAULT_CAP, formula_bound: int = DEFAULT_FORMULA_BOUND, logger: Optional[Logger] = None):
        self.cap = cap
        self.formula_bound = formula_bound
        self.logger = logger
        self._cache: Dict[Tuple[Path, str], Structure] = {}

    def read_body(self, path: Path) -> Body:
        if not path.exists():
            raise FileNotFoundError(f"Document not found: {path}")
        text = path.read_text(encoding="utf-8")
        if not text.strip():
            raise ParseError(f"{path}: empty document", 1, 1)
        try:
            body = json5.loads(text)
        except ValueError as e:
            match = POSITION.search(str(e))
            line, column = (int(match.group(1)), int(match.group(2))) if match else (None, None)
            raise ParseError(f"{path}: {e}", line, column)
        if not isinstance(body, dict):
            raise ParseError(f"{path}: top level must be an object", 1, 1)
        return body

    def load_document(self, path: Union[str, Path]) -> Document:
        path = Path(path)
        body = self.read_body(path)
        kind = body.get("kind") or kind_from_suffix(path)
        if kind is None:
            raise ParseError(f"{path}: no \"kind\" field and no known suffix ({', '.join(SUFFIXES)})")
        if self.logger:
            self.logger.info(f"loading {kind} document {path}")
        return Document(kind, self._parse(kind, body, path.parent), path)

    def load_structure(self, path: Union[str, Path], *kinds: str) -> Structure:
        document = self.load_document(path)
        if kinds and document.kind not in kinds:
            raise ParseError(f"{path}: expected a {' or '.join(kinds)} document, got {document.kind}")
        return document.body

    def _resolve(self, ref: Any, base: Path, kinds: Tuple[str, ...], what: str) -> Tuple[str, Structure]:
        """A referenced document given either as a path relative to ``base`` or inline."""
        if isinstance(ref, str):
            path = (base / ref).resolve()
            if not path.exists():
                raise DanglingReference(f"{what} refers to missing file {ref}", {"path": ref})
            body = self.read_body(path)
            kind = body.get("kind") or kind_from_suffix(path) or infer_kind(body)
            key = (path, kind)
            if key not in self._cache:
                self._cache[key] = self._parse(kind, body, path.parent)
            structure, base = self._cache[key], path.parent
        elif isinstance(ref, dict):
            kind = infer_kind(ref)
            structure = self._parse(kind, ref, base)
        else:
            raise ParseError(f"{what} must be a path or an inline document")
        if kind not in kinds:
            raise ParseError(f"{what} must be a {' or '.join(kinds)} document, got {kind}")
        return kind, structure

    def _parse(self, kind: Optional[str], body: Body, base: Path) -> Structure:
        if kind == INSTITUTION:
            return parse_institution(body)
        if kind == PI_INSTITUTION:
            return self._parse_pi_institution(body, base)
        if kind in (INST_COMORPHISM, INST_MORPHISM, PI_COMORPHISM):
            return self._parse_morphism(kind, body, base)
        if kind == LOGIC:
            return parse_logic(body, self.formula_bound)
        if kind == TRANSLATION:
            return self._parse_translation(body, base)
        raise ParseError(f"unknown document kind {kind!r}")

    def _parse_pi_institution(self, body: Body, base: Path) -> PiInstitution:
        closure = body.get("closure")
        if not isinstance(closure, dict):
            raise ParseError("pi-institution: missing \"closure\" object")
        if "table" in closure:
            c = parse_category(body)
            sen = parse_sentence_functor(c, body)
            return PiInstitution(sig=c, sen=sen, closure=parse_closure_table(c, sen, closure["table"]))
        if "matrixLogic" in closure:
            refs = closure["matrixLogic"]
            refs = refs if isinstance(refs, list) else [refs]
            logics = {}
            for ref in refs:
                _, logic = self._resolve(ref, base, (LOGIC,), "matrixLogic")
                logics[logic.name] = logic
            translations = []
            for ref in closure.get("translations", []):
                _, document = self._resolve(ref, base, (TRANSLATION,), "translations")
                for logic in (document.source, document.target):
                    logics.setdefault(logic.name, logic)
                translations.append(document.translation)
            return build_logics_pi_institution(
                closure.get("logicKind", STRICT), list(logics.values()), translations, cap=self.cap, logger=self.logger
            )
        raise ParseError("pi-institution: closure needs a \"table\" or a \"matrixLogic\"")

    def _parse_morphism(self, kind: str, body: Body, base: Path) -> ComorphismDocument:
        if kind == PI_COMORPHISM:
            _, source = self._resolve(body.get("source"), base, (PI_INSTITUTION,), "source")
            target_kind, target = self._resolve(body.get("target"), base, (PI_INSTITUTION, INSTITUTION), "target")
            institution = None
            if target_kind == INSTITUTION:
                institution, target = target, f_object(target, cap=self.cap, logger=self.logger)
            return ComorphismDocument(parse_pi_comorphism(body, source, target), source, target, institution)
        _, source = self._resolve(body.get("source"), base, (INSTITUTION,), "source")
        _, target = self._resolve(body.get("target"), base, (INSTITUTION,), "target")
        parse = parse_inst_comorphism if kind == INST_COMORPHISM else parse_inst_morphism
        return ComorphismDocument(parse(body, source, target), source, target)

    def _parse_translation(self, body: Body, base: Path) -> TranslationDocument:
        _, source = self._resolve(body.get("source"), base, (LOGIC,), "source")
        _, target = self._resolve(body.get("target"), base, (LOGIC,), "target")
        return TranslationDocument(parse_translation(body, source, target), source, target)

    def write_document(self, path: Union[str, Path], body: Body) -> Path:
        return write_text_atomic(Path(path), canonical_json(body))


def write_text_atomic(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_path = path.with_name(path.name + ".tmp")
    temp_path.write_text(text, encoding="utf-8")
    temp_path.replace(path)
    return path


def load_document(path: Union[str, Path], cap: int = DEFAULT_CAP, logger: Optional[Logger] = None) -> Document:
    return FileHandler(cap, logger=logger).load_document(path)
