"""Logical matrices, matrix consequence, and logic presentations over them."""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import AbstractSet, Callable, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.logic.formula import Conn, Formula, PropSignature, enumerate_formulas, render_formula, variables as free_variables
from src.utils.config import DEFAULT_FORMULA_BOUND
from src.utils.errors import ArityMismatch, ExplosionGuard, SentenceOutOfUniverse, UnassignedVariable, UnknownSymbol

Valuation = Mapping[str, str]


@dataclass(frozen=True)
class LogicMatrix:
    values: Tuple[str, ...]
    designated: FrozenSet[str]
    interp: Mapping[str, Mapping[Tuple[str, ...], str]]

    def apply(self, name: str, args: Tuple[str, ...]) -> str:
        if name not in self.interp:
            raise UnknownSymbol(f"Matrix does not interpret {name}", {"symbol": name})
        return self.interp[name][args]

    def restrict(self, names: AbstractSet[str]) -> "LogicMatrix":
        return LogicMatrix(self.values, self.designated, {c: t for c, t in self.interp.items() if c in names})

    def arity(self, name: str) -> int:
        table = self.interp[name]
        return len(next(iter(table))) if table else 0


# truth functions over [0, 1], shared by the two-valued and Łukasiewicz matrices
OPERATIONS: Dict[str, Tuple[int, Callable[..., Fraction]]] = {
    "not": (1, lambda x: 1 - x),
    "and": (2, min),
    "or": (2, max),
    "imp": (2, lambda x, y: min(Fraction(1), 1 - x + y)),
    "iff": (2, lambda x, y: 1 - abs(x - y)),
    "top": (0, lambda: Fraction(1)),
    "bot": (0, lambda: Fraction(0)),
}


def lukasiewicz_matrix(n: int = 3, semantics: Optional[Mapping[str, str]] = None) -> LogicMatrix:
    """Łukasiewicz n-valued matrix on {0, 1/(n-1), …, 1} with 1 designated.

    ``semantics`` maps connective names to built-in operations, so that a
    signature may call conjunction ``conj``; it defaults to the identity on
    every built-in operation.
    """
    points = [Fraction(k, n - 1) for k in range(n)]
    semantics = semantics or {name: name for name in OPERATIONS}
    interp = {}
    for name, operation in semantics.items():
        if operation not in OPERATIONS:
            raise UnknownSymbol(f"No built-in operation {operation}", {"symbol": operation})
        arity, fn = OPERATIONS[operation]
        interp[name] = {
            tuple(str(x) for x in args): str(Fraction(fn(*args)))
            for args in product(points, repeat=arity)
        }
    return LogicMatrix(tuple(str(x) for x in points), frozenset({"1"}), interp)


def boolean_matrix(semantics: Optional[Mapping[str, str]] = None) -> LogicMatrix:
    return lukasiewicz_matrix(2, semantics)


def eval_formula(matrix: LogicMatrix, valuation: Valuation, f: Formula) -> str:
    if not isinstance(f, Conn):
        if f.name not in valuation:
            raise UnassignedVariable(f"No value for {f.name}", {"variable": f.name})
        return valuation[f.name]
    return matrix.apply(f.name, tuple(eval_formula(matrix, valuation, a) for a in f.args))


def all_valuations(names: Sequence[str], values: Sequence[str]) -> List[Dict[str, str]]:
    return [dict(zip(names, picked)) for picked in product(values, repeat=len(names))]


def render_valuation(valuation: Valuation) -> str:
    return ",".join(f"{x}={v}" for x, v in valuation.items())


@dataclass(frozen=True, eq=False)
class LogicPresentation:
    """A propositional logic given by a finite matrix over a finite variable set.

    The sentence universe is every formula up to ``depth_cap``, unless an
    explicit ``sentences`` fragment is supplied.
    """

    name: str
    signature: PropSignature
    matrix: LogicMatrix
    variables: Tuple[str, ...]
    depth_cap: int
    sentences: Optional[Tuple[Formula, ...]] = None
    formula_bound: int = DEFAULT_FORMULA_BOUND

    def __post_init__(self):
        for c in self.signature.names():
            if c not in self.matrix.interp:
                raise UnknownSymbol(f"{self.name}: matrix does not interpret {c}", {"symbol": c})
            if self.matrix.arity(c) != self.signature.connectives[c]:
                raise ArityMismatch(f"{self.name}: {c} has arity {self.signature.connectives[c]} in the signature "
                                    f"but {self.matrix.arity(c)} in the matrix", {"symbol": c})
        extra = set(self.matrix.interp) - set(self.signature.connectives)
        if extra:
            raise UnknownSymbol(f"{self.name}: matrix interprets {sorted(extra)} outside the signature", {"symbols": sorted(extra)})
        clash = set(self.variables) & set(self.signature.connectives)
        if clash:
            raise UnknownSymbol(f"{self.name}: {sorted(clash)} are both variables and connectives", {"symbols": sorted(clash)})

    @cached_property
    def universe(self) -> Tuple[Formula, ...]:
        if self.sentences is not None:
            return tuple(self.sentences)
        return tuple(enumerate_formulas(self.signature, self.variables, self.depth_cap, self.formula_bound))

    @cached_property
    def universe_ids(self) -> Tuple[str, ...]:
        return tuple(render_formula(f) for f in self.universe)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {s: i for i, s in enumerate(self.universe_ids)}

    @cached_property
    def valuations(self) -> List[Dict[str, str]]:
        count = len(self.matrix.values) ** len(self.variables)
        if count > self.formula_bound:
            raise ExplosionGuard(f"{count} valuations exceed the bound {self.formula_bound}", size=count, bound=self.formula_bound)
        return all_valuations(self.variables, self.matrix.values)

    @cached_property
    def designation(self) -> np.ndarray:
        """Boolean table: rows are valuations, columns universe formulas."""
        table = np.zeros((len(self.valuations), len(self.universe)), dtype=bool)
        for i, v in enumerate(self.valuations):
            for j, f in enumerate(self.universe):
                table[i, j] = eval_formula(self.matrix, v, f) in self.matrix.designated
        return table

    def closure(self, gamma: AbstractSet[str]) -> FrozenSet[str]:
        """C(Γ) = the universe formulas designated by every valuation designating all of Γ."""
        stray = set(gamma) - set(self.index)
        if stray:
            raise SentenceOutOfUniverse(f"{sorted(stray)} not in the universe of {self.name}", {"sentences": sorted(stray)})
        columns = [self.index[s] for s in gamma]
        rows = np.all(self.designation[:, columns], axis=1)
        keep = np.all(self.designation[rows, :], axis=0)
        return frozenset(s for s, k in zip(self.universe_ids, keep) if k)


def matrix_consequence(logic: LogicPresentation, gamma: Sequence[Formula], psi: Formula) -> bool:
    """Γ ⊢ ψ: every valuation designating all of Γ designates ψ."""
    names = list(logic.variables)
    for f in list(gamma) + [psi]:
        names += [x for x in free_variables(f) if x not in names]
    designated = logic.matrix.designated
    for v in all_valuations(names, logic.matrix.values):
        if all(eval_formula(logic.matrix, v, g) in designated for g in gamma):
            if eval_formula(logic.matrix, v, psi) not in designated:
                return False
    return True
