"""The family A(gamma): quadratic algebras on four generators.

Relations are stored as 4x4 coefficient tensors on the tensor square
(entry (i, j) is the coefficient of x_i (x) x_j, zero-indexed), which is
the form Koszul duality needs.  This module also hosts the coordinate
variable sets shared by the whole pipeline and the symmetry maps psi1,
psi2 acting on Pluecker coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .gaussian import GaussianRational, ONE, ZERO, gr, sqrt as gr_sqrt
from .multipoly import (Polynomial, VarSet, _Lexer, PolyParseError,
                        substitute)
from .polylinalg import PolyMatrix, ScalarMatrix

X_VARS = VarSet(["x1", "x2", "x3", "x4"])
Z_VARS = VarSet(["z1", "z2", "z3", "z4"])
UV_VARS = VarSet(["u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"])
M_VARS = VarSet(["M12", "M13", "M14", "M23", "M24", "M34"])
N_VARS = VarSet(["N12", "N13", "N14", "N23", "N24", "N34"])
CHART_VARS = VarSet(["x2", "x3", "x4"])

PAIR_NAMES = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


class ZeroGammaError(ValueError):
    pass


class RankDeficiencyError(ValueError):
    pass


class Psi2UnavailableError(ValueError):
    pass


Tensor = Tuple[Tuple[GaussianRational, ...], ...]


def _zero_grid() -> List[List[GaussianRational]]:
    return [[ZERO] * 4 for _ in range(4)]


def _freeze(grid) -> Tensor:
    return tuple(tuple(row) for row in grid)


def parse_relation(text: str, gamma: Optional[GaussianRational] = None) -> Tensor:
    """Parse one quadratic relation in noncommutative normal form.

    Products are juxtaposition-free: 'x3*x1' means x3 (x) x1 and every
    term must contain exactly two generator factors ('x3^2' counts as
    x3 (x) x3).  Coefficients follow the multipoly grammar with 'i' and
    the placeholder 'g'.
    """
    lex = _Lexer(text)
    grid = _zero_grid()

    def coeff_atom(tok) -> GaussianRational:
        kind, value, pos = tok
        if kind == "nat":
            num = int(value)
            if lex.peek()[0] == "/":
                lex.next()
                den = lex.next()
                if den[0] != "nat":
                    raise PolyParseError("expected denominator", den[2])
                from fractions import Fraction

                return GaussianRational(Fraction(num, int(den[1])))
            return gr(num)
        if kind == "name" and value == "i":
            return gr(0, 1)
        if kind == "name" and value == "g":
            if gamma is None:
                raise PolyParseError("placeholder 'g' used but no gamma bound", pos)
            return gamma
        raise PolyParseError(f"unexpected token {value!r}", pos)

    def term(sign: int):
        coeff = gr(sign)
        slots: List[int] = []
        while True:
            tok = lex.next()
            kind, value, pos = tok
            if kind == "name" and value in X_VARS:
                idx = X_VARS.index(value)
                power = 1
                if lex.peek()[0] == "^":
                    lex.next()
                    e = lex.next()
                    if e[0] != "nat":
                        raise PolyParseError("exponent must be a natural number", e[2])
                    power = int(e[1])
                slots.extend([idx] * power)
            else:
                c = coeff_atom(tok)
                if lex.peek()[0] == "^":
                    lex.next()
                    e = lex.next()
                    if e[0] != "nat":
                        raise PolyParseError("exponent must be a natural number", e[2])
                    c = c ** int(e[1])
                coeff = coeff * c
            nxt = lex.peek()
            if nxt[0] == "*":
                lex.next()
                continue
            break
        if len(slots) != 2:
            raise PolyParseError(
                f"relation term must be quadratic in the generators, got "
                f"{len(slots)} factors", lex.peek()[2])
        grid[slots[0]][slots[1]] = grid[slots[0]][slots[1]] + coeff

    sign = 1
    if lex.peek()[0] == "-":
        lex.next()
        sign = -1
    term(sign)
    while lex.peek()[0] in ("+", "-"):
        op = lex.next()[0]
        term(1 if op == "+" else -1)
    tok = lex.peek()
    if tok[0] != "end":
        raise PolyParseError(f"unexpected token {tok[1]!r}", tok[2])
    return _freeze(grid)


# Definition order: each string is (left side) - (right side).
A_RELATION_STRINGS = (
    "x4*x1 - i*x1*x4",
    "x3^2 - x1^2",
    "x3*x1 - x1*x3 + x2^2",
    "x3*x2 - i*x2*x3",
    "x4^2 - x2^2",
    "x4*x2 - x2*x4 + g*x1^2",
)


@dataclass(frozen=True)
class QuadraticAlgebra:
    """Presentation with six linearly independent quadratic relations."""

    gamma: GaussianRational
    relations: Tuple[Tensor, ...]

    def __post_init__(self):
        if len(self.relations) != 6:
            raise ValueError("exactly six relations expected")
        if relation_rank(self.relations) != 6:
            raise RankDeficiencyError("relation tensors are linearly dependent")


def relation_rank(relations: Sequence[Tensor]) -> int:
    rows = [[t[i][j] for i in range(4) for j in range(4)] for t in relations]
    return ScalarMatrix(rows).rank()


def make_A(gamma: GaussianRational) -> QuadraticAlgebra:
    """The algebra A(gamma); gamma must be nonzero."""
    if not isinstance(gamma, GaussianRational):
        gamma = gr(gamma)
    if gamma.is_zero():
        raise ZeroGammaError("gamma must be a nonzero scalar")
    relations = tuple(parse_relation(s, gamma) for s in A_RELATION_STRINGS)
    return QuadraticAlgebra(gamma, relations)


def load_presentation(text: str, gamma: GaussianRational) -> QuadraticAlgebra:
    """Six relation strings, one per line ('#' comments allowed)."""
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.strip().startswith("#")]
    if len(lines) != 6:
        raise ValueError(f"expected six relations, found {len(lines)}")
    return QuadraticAlgebra(gamma, tuple(parse_relation(s, gamma) for s in lines))


def load_presentation_file(path, gamma: GaussianRational) -> QuadraticAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return load_presentation(fh.read(), gamma)


def tensor_to_rows(tensors: Sequence[Tensor], varset: VarSet) -> PolyMatrix:
    """Matrix with row r, column j equal to sum_i T_ij * var_i, so that
    (matrix) . (vars)^T expands back to each tensor."""
    rows = []
    for t in tensors:
        row = []
        for j in range(4):
            terms = {}
            for i in range(4):
                c = t[i][j]
                if not c.is_zero():
                    terms[varset.var_monomial(varset.names[i])] = c
            row.append(Polynomial(varset, terms))
        rows.append(row)
    return PolyMatrix(rows)


def relation_matrix(A: QuadraticAlgebra) -> PolyMatrix:
    """The 6x4 matrix M with M x = 0 encoding the relations, rows in the
    order the presentation lists them."""
    return tensor_to_rows(A.relations, X_VARS)


def expand_matrix_rows(m: PolyMatrix, varset: VarSet) -> List[Tensor]:
    """Inverse of tensor_to_rows: read each row of (m . vars) as a tensor."""
    out = []
    for r in range(m.rows):
        grid = _zero_grid()
        for j in range(4):
            entry = m.entries[r][j]
            for mono, c in entry.terms.items():
                i = next(k for k, e in enumerate(mono) if e)
                grid[i][j] = grid[i][j] + c
        out.append(_freeze(grid))
    return out


def tensor_pairing(t: Tensor, w: Tensor) -> GaussianRational:
    """<x_i (x) x_j , z_k (x) z_l> = delta_ik delta_jl, extended bilinearly."""
    acc = ZERO
    for i in range(4):
        for j in range(4):
            acc = acc + t[i][j] * w[i][j]
    return acc


def tensor_bilinear(t: Tensor, p: Sequence, q: Sequence):
    """Evaluate the tensor as a bilinear form at a pair of points."""
    acc = None
    for i in range(4):
        for j in range(4):
            c = t[i][j]
            if c.is_zero():
                continue
            term = c * p[i] * q[j]
            acc = term if acc is None else acc + term
    return ZERO if acc is None else acc


def koszul_dual_relations(A: QuadraticAlgebra,
                          tensor_order: str = "left") -> List[Tensor]:
    """The ten relations of the Koszul dual: a canonical basis of the
    orthogonal complement of the relation span in the tensor square.

    The basis comes from the reduced row echelon form of the relation
    coefficient matrix (one vector per free coordinate, in increasing
    coordinate order), which makes the output deterministic.  The tensor
    coordinates can be enumerated with either factor as the major index
    (tensor_order "left" or "right"); both give canonical bases of the
    same space but different representatives, hence different minors
    downstream.  "left" reproduces the displayed dual matrix.
    """
    if tensor_order not in ("left", "right"):
        raise ValueError("tensor_order must be 'left' or 'right'")
    if tensor_order == "left":
        rows = [[t[i][j] for i in range(4) for j in range(4)]
                for t in A.relations]
    else:
        rows = [[t[i][j] for j in range(4) for i in range(4)]
                for t in A.relations]
    mat = ScalarMatrix(rows)
    if mat.rank() != 6:
        raise RankDeficiencyError("relation tensors are linearly dependent")
    duals = []
    for vec in mat.nullspace():
        grid = _zero_grid()
        for k, c in enumerate(vec):
            if not c.is_zero():
                if tensor_order == "left":
                    grid[k // 4][k % 4] = c
                else:
                    grid[k % 4][k // 4] = c
        duals.append(_freeze(grid))
    return duals


def m_hat(A: QuadraticAlgebra, tensor_order: str = "left") -> PolyMatrix:
    """10x4 matrix of linear forms in the z_i with M^ z = 0 giving the
    Koszul dual relations, rows ordered as koszul_dual_relations."""
    return tensor_to_rows(koszul_dual_relations(A, tensor_order), Z_VARS)


# ---------------------------------------------------------------------------
# the N -> M assignment and the symmetry maps on Pluecker coordinates
# ---------------------------------------------------------------------------

# N12 -> M34, N13 -> -M24, N14 -> M23, N23 -> M14, N24 -> -M13, N34 -> M12
PLUECKER_MAP: Dict[str, Tuple[int, str]] = {
    "N12": (1, "M34"),
    "N13": (-1, "M24"),
    "N14": (1, "M23"),
    "N23": (1, "M14"),
    "N24": (-1, "M13"),
    "N34": (1, "M12"),
}

PLUECKER_MAP_INVERSE: Dict[str, Tuple[int, str]] = {
    m: (s, n) for n, (s, m) in PLUECKER_MAP.items()
}


def _substitution_images(table: Dict[str, Tuple[GaussianRational, str]],
                         varset: VarSet) -> Dict[str, Polynomial]:
    images = {}
    for src, (c, dst) in table.items():
        images[src] = Polynomial(varset, {varset.var_monomial(dst): c})
    return images


# index swap 1<->3, 2<->4 with M_ji = -M_ij sign normalization
_PSI1_TABLE = {
    "M12": (ONE, "M34"),
    "M13": (-ONE, "M13"),
    "M14": (-ONE, "M23"),
    "M23": (-ONE, "M14"),
    "M24": (-ONE, "M24"),
    "M34": (ONE, "M12"),
}


def psi1_on_pluecker(f: Polynomial) -> Polynomial:
    """Action of the antiautomorphism x1 <-> x3, x2 <-> x4 on the Pluecker
    coordinates; an involution."""
    if f.varset != M_VARS:
        raise ValueError("psi1_on_pluecker expects a polynomial in the M variables")
    return substitute(f, _substitution_images(_PSI1_TABLE, M_VARS), target=M_VARS)


def psi2_on_pluecker(f: Polynomial, gamma: GaussianRational) -> Polynomial:
    """Action of psi2 (x2 <-> lambda*x3, x4 <-> lambda*x1, lambda^4 = gamma)
    on Pluecker coordinates.

    Only lambda^2 enters the induced map on lines, so this is available
    exactly when gamma is a square in Q(i); otherwise a field extension
    would be required and Psi2UnavailableError is raised.
    """
    if f.varset != M_VARS:
        raise ValueError("psi2_on_pluecker expects a polynomial in the M variables")
    s = gr_sqrt(gamma)
    if s is None:
        raise Psi2UnavailableError(
            f"gamma = {gamma} has no square root in Q(i); psi2 needs lambda^2")
    table = {
        "M12": (ONE, "M34"),
        "M13": (s.inverse(), "M24"),
        "M14": (ONE, "M14"),
        "M23": (ONE, "M23"),
        "M24": (s, "M13"),
        "M34": (ONE, "M12"),
    }
    return substitute(f, _substitution_images(table, M_VARS), target=M_VARS)


def gamma_sign_on_pluecker(f: Polynomial) -> Polynomial:
    """Pluecker action of x2 -> -x2, the isomorphism A(g) ~ A(-g)."""
    if f.varset != M_VARS:
        raise ValueError("expects a polynomial in the M variables")
    table = {
        "M12": (-ONE, "M12"),
        "M13": (ONE, "M13"),
        "M14": (ONE, "M14"),
        "M23": (-ONE, "M23"),
        "M24": (-ONE, "M24"),
        "M34": (ONE, "M34"),
    }
    return substitute(f, _substitution_images(table, M_VARS), target=M_VARS)
