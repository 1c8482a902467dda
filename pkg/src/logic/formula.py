"""Ranked propositional signatures and formulas in prefix notation.

Grammar: ``formula := name | name "(" formula ("," formula)* ")"``. A bare
name is a variable when declared as one, otherwise a 0-ary connective.
"""
import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.utils.config import DEFAULT_FORMULA_BOUND
from src.utils.errors import ArityMismatch, ExplosionGuard, FormulaSyntaxError, UnknownSymbol


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Conn:
    name: str
    args: Tuple["Formula", ...] = ()


Formula = Union[Var, Conn]


@dataclass(frozen=True)
class PropSignature:
    connectives: Mapping[str, int]

    def arity(self, name: str) -> int:
        if name not in self.connectives:
            raise UnknownSymbol(f"Unknown connective: {name}", {"symbol": name})
        return self.connectives[name]

    def names(self) -> List[str]:
        return sorted(self.connectives)


def depth(f: Formula) -> int:
    if isinstance(f, Var) or not f.args:
        return 0
    return 1 + max(depth(a) for a in f.args)


def variables(f: Formula) -> List[str]:
    if isinstance(f, Var):
        return [f.name]
    seen: List[str] = []
    for a in f.args:
        seen += [v for v in variables(a) if v not in seen]
    return seen


def render_formula(f: Formula) -> str:
    if isinstance(f, Var) or not f.args:
        return f.name
    return f"{f.name}({','.join(render_formula(a) for a in f.args)})"


def formula_key(f: Formula) -> Tuple[int, str]:
    return depth(f), render_formula(f)


def substitute(f: Formula, sigma: Mapping[str, Formula]) -> Formula:
    """Replace variables by formulas; unmapped variables stay."""
    if isinstance(f, Var):
        return sigma.get(f.name, f)
    return Conn(f.name, tuple(substitute(a, sigma) for a in f.args))


TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),]))")


class FormulaParser:
    def __init__(self, text: str, sig: PropSignature, variables: Iterable[str]):
        self.text = text
        self.sig = sig
        self.variables = set(variables)
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str) -> List[Tuple[str, int]]:
        tokens = []
        i = 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            match = TOKEN.match(text, i)
            if not match:
                raise FormulaSyntaxError(f"Unexpected character {text[i]!r}", i)
            token = match.group("name") or match.group("punct")
            tokens.append((token, match.start(match.lastgroup)))
            i = match.end()
        return tokens

    def _peek(self) -> Optional[str]:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _position(self) -> int:
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else len(self.text)

    def _consume(self, expected: Optional[str] = None) -> str:
        token = self._peek()
        if token is None:
            raise FormulaSyntaxError("Unexpected end of input", len(self.text))
        if expected and token != expected:
            raise FormulaSyntaxError(f"Expected {expected!r} but found {token!r}", self._position())
        self.pos += 1
        return token

    def parse(self) -> Formula:
        formula = self.parse_formula()
        if self._peek() is not None:
            raise FormulaSyntaxError(f"Unexpected token {self._peek()!r} after formula", self._position())
        return formula

    def parse_formula(self) -> Formula:
        position = self._position()
        name = self._consume()
        if name in "(),":
            raise FormulaSyntaxError(f"Expected a name but found {name!r}", position)
        if self._peek() != "(":
            if name in self.variables:
                return Var(name)
            if self.sig.arity(name) != 0:
                raise ArityMismatch(f"{name} takes {self.sig.arity(name)} arguments, got 0", {"symbol": name})
            return Conn(name)
        arity = self.sig.arity(name)
        self._consume("(")
        args: List[Formula] = []
        if self._peek() != ")":
            args.append(self.parse_formula())
            while self._peek() == ",":
                self._consume(",")
                args.append(self.parse_formula())
        self._consume(")")
        if len(args) != arity:
            raise ArityMismatch(f"{name} takes {arity} arguments, got {len(args)}", {"symbol": name})
        return Conn(name, tuple(args))


def parse_formula(text: str, sig: PropSignature, variables: Iterable[str]) -> Formula:
    return FormulaParser(text, sig, variables).parse()


def enumerate_formulas(
    sig: PropSignature, variables: Sequence[str], depth_cap: int, bound: int = DEFAULT_FORMULA_BOUND
) -> List[Formula]:
    """All formulas of depth ≤ ``depth_cap``, ordered by depth then rendered text."""
    by_depth: Dict[int, List[Formula]] = {0: [Var(x) for x in variables]}
    by_depth[0] += [Conn(c) for c in sig.names() if sig.connectives[c] == 0]
    total = len(by_depth[0])
    for d in range(1, depth_cap + 1):
        below = [f for k in range(d) for f in by_depth[k]]
        shallower = len(below) - len(by_depth[d - 1])
        count = sum(len(below) ** n - shallower ** n for n in sig.connectives.values() if n > 0)
        if total + count > bound:
            raise ExplosionGuard(
                f"{total + count} formulas of depth ≤ {d} exceed the formula bound {bound}",
                size=total + count,
                bound=bound,
            )
        level = []
        for c in sig.names():
            n = sig.connectives[c]
            if n == 0:
                continue
            for args in product(below, repeat=n):
                if max(depth(a) for a in args) == d - 1:
                    level.append(Conn(c, args))
        by_depth[d] = level
        total += len(level)
    return sorted((f for level in by_depth.values() for f in level), key=formula_key)
