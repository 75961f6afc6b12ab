"""Floating-point cross-check of the exact machinery: enumerate the twenty
points of the point scheme and the six lines through each generic point
numerically, with residual and separation tolerances.

All of this is strictly a sanity net for the exact modules; on any
disagreement the tolerances here are suspected first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from .gaussian import GaussianRational
from .multipoly import Polynomial, VarSet, parse_poly
from .fixtures import load_fixtures

DEFAULT_TOL = 1e-8
DISTINCT_TOL = 1e-6


class ConvergenceError(RuntimeError):
    pass


class DegeneratePointError(ValueError):
    pass


def _to_complex(x) -> complex:
    if isinstance(x, GaussianRational):
        return x.to_complex()
    return complex(x)


@dataclass
class ComplexPoint:
    """A numeric point of P3, max-modulus coordinate scaled to 1."""

    coords: np.ndarray

    def __init__(self, coords):
        c = np.asarray([_to_complex(x) for x in coords], dtype=complex)
        k = int(np.argmax(np.abs(c)))
        if abs(c[k]) == 0:
            raise ValueError("zero vector is not a projective point")
        object.__setattr__(self, "coords", c / c[k])

    def __getitem__(self, k: int) -> complex:
        return self.coords[k]


def proj_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Chordal distance between projective points / Pluecker vectors."""
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    inner = abs(np.vdot(a, b)) / (na * nb)
    return float(np.sqrt(max(0.0, 1.0 - inner * inner)))


def univariate_roots(p: Polynomial, var: str = None, tol: float = DEFAULT_TOL,
                     max_newton: int = 60) -> np.ndarray:
    """All complex roots via companion-matrix eigenvalues, Newton-polished;
    raises ConvergenceError when a residual refuses to drop below tol."""
    names_used = [n for n in p.varset.names
                  if any(m[p.varset.index(n)] for m in p.terms)]
    if var is None:
        if len(names_used) != 1:
            raise ValueError("polynomial is not univariate")
        var = names_used[0]
    k = p.varset.index(var)
    deg = p.degree_in(var)
    if deg < 1:
        raise ValueError("need degree at least one")
    coeffs = np.zeros(deg + 1, dtype=complex)
    for m, c in p.terms.items():
        coeffs[deg - m[k]] += c.to_complex()
    roots = np.roots(coeffs)
    dcoeffs = coeffs[:-1] * np.arange(deg, 0, -1)
    scale = max(1.0, float(np.max(np.abs(coeffs))))
    for i, r in enumerate(roots):
        x = r
        for _ in range(max_newton):
            fx = np.polyval(coeffs, x)
            if abs(fx) <= tol * scale:
                break
            dfx = np.polyval(dcoeffs, x)
            if dfx == 0:
                break
            x = x - fx / dfx
        if abs(np.polyval(coeffs, x)) > tol * scale * 10:
            raise ConvergenceError(f"root polishing stalled at residual "
                                   f"{abs(np.polyval(coeffs, x)):.2e}")
        roots[i] = x
    return roots


_GVARS = VarSet(["x1", "x2", "x3", "x4", "g"])


@lru_cache(maxsize=1)
def _minor_polys_symbolic() -> Tuple[Polynomial, ...]:
    """The fifteen minors with g carried as an honest variable, so they
    evaluate at arbitrary complex gamma."""
    return tuple(parse_poly(t, _GVARS) for t in load_fixtures().point_scheme_polys)


def minor_residual(point: Sequence[complex], gamma: complex) -> float:
    vals = {"x1": point[0], "x2": point[1], "x3": point[2], "x4": point[3],
            "g": gamma}
    return max(abs(p.evaluate(vals)) for p in _minor_polys_symbolic())


def enumerate_points(gamma, tol: float = DEFAULT_TOL) -> List[ComplexPoint]:
    """e1..e4 plus the sixteen solutions of the triangular system, polished
    until every one of the fifteen minors has residual below tol."""
    g = _to_complex(gamma)
    if g == 0:
        raise ValueError("gamma must be nonzero")
    pts = [ComplexPoint(v) for v in np.eye(4)]
    # rho1 = x4^8 - 4 x4^4 + g^2, built directly from numeric coefficients
    coeffs = np.zeros(9, dtype=complex)
    coeffs[0] = 1.0
    coeffs[4] = -4.0
    coeffs[8] = g * g
    x4_roots = np.roots(coeffs)
    dcoeffs = coeffs[:-1] * np.arange(8, 0, -1)
    for i, r in enumerate(x4_roots):
        x = r
        for _ in range(60):
            fx = np.polyval(coeffs, x)
            if abs(fx) < 1e-14 * max(1.0, abs(g * g)):
                break
            x = x - fx / np.polyval(dcoeffs, x)
        x4_roots[i] = x
    for x4 in x4_roots:
        # rho2 = x3^2 - i x3 x4^2 - 1 = 0
        disc = np.sqrt(-(x4 ** 4) + 4.0 + 0j)
        for s in (1.0, -1.0):
            x3 = (1j * x4 * x4 + s * disc) / 2.0
            x2 = (2j * x4 ** 3 - x3 * x4 ** 5) / g
            pt = ComplexPoint((1.0, x2, x3, x4))
            if minor_residual(pt.coords, g) > tol:
                raise ConvergenceError("enumerated point exceeds residual tolerance")
            pts.append(pt)
    return pts


def distinct_count(points: List[ComplexPoint],
                   threshold: float = DISTINCT_TOL) -> int:
    reps: List[ComplexPoint] = []
    for p in points:
        if all(proj_distance(p.coords, q.coords) > threshold for q in reps):
            reps.append(p)
    return len(reps)


def sigma_numeric(p: ComplexPoint) -> ComplexPoint:
    basis = np.eye(4)
    for k, swap in ((0, 1), (1, 0), (2, 3), (3, 2)):
        if proj_distance(p.coords, basis[k]) < 1e-12:
            return ComplexPoint(basis[swap])
    c = p.coords / p.coords[0]
    a2, a3, a4 = c[1], c[2], c[3]
    return ComplexPoint((1.0, 1j * a2 / (a3 * a3), 1.0 / a3, -1j * a4))


@lru_cache(maxsize=1)
def _line_polys_symbolic() -> Tuple[Polynomial, ...]:
    gv = VarSet(["M12", "M13", "M14", "M23", "M24", "M34", "g"])
    return tuple(parse_poly(t, gv) for t in load_fixtures().line_scheme_polys)


def line_residual(m: Sequence[complex], gamma: complex) -> float:
    names = ("M12", "M13", "M14", "M23", "M24", "M34")
    vals = {n: v for n, v in zip(names, m)}
    vals["g"] = gamma
    return max(abs(p.evaluate(vals)) for p in _line_polys_symbolic())


def _pluecker_join(a: Sequence[complex], b: Sequence[complex]) -> np.ndarray:
    pairs = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    v = np.asarray([a[i] * b[j] - a[j] * b[i] for i, j in pairs], dtype=complex)
    return v / np.max(np.abs(v))


def six_lines_numeric(p: ComplexPoint, gamma, tol: float = DEFAULT_TOL
                      ) -> List[np.ndarray]:
    """The six lines through a generic point, via the closed formulas; each
    line is checked against all 46 scheme polynomials and the lines are
    pairwise separated."""
    g = _to_complex(gamma)
    c = p.coords / p.coords[0]
    x2, x3, x4 = c[1], c[2], c[3]
    if min(abs(x2), abs(x3), abs(x4)) < 1e-6:
        raise DegeneratePointError("point too close to a coordinate hyperplane")
    lines = [
        _pluecker_join((1, 0, x3, 0), (0, x2, 0, x4)),       # L1 family
        _pluecker_join((0, 1, 0, 0), (1, 0, x3, x4)),        # L2
        _pluecker_join((1, x2, x3, 0), (0, 0, 0, 1)),        # L3
        _pluecker_join((1, x2, 0, x4), (0, 0, 1, 0)),        # L4
        _pluecker_join((1, 0, 0, 0), (0, x2, x3, x4)),       # L5
    ]
    if abs(x2 - 1j * x3 * x4) < abs(x2 + 1j * x3 * x4):
        lines.append(_pluecker_join((1, 0, 0, x4), (0, 1j * x4, 1, 0)))   # L6a
    else:
        lines.append(_pluecker_join((1, 0, 0, x4), (0, -1j * x4, 1, 0)))  # L6b
    for m in lines:
        if line_residual(m, g) > tol:
            raise ConvergenceError("line exceeds residual tolerance")
    for i in range(6):
        for j in range(i + 1, 6):
            if proj_distance(lines[i], lines[j]) < DISTINCT_TOL:
                raise ConvergenceError("two of the six lines coincide numerically")
    return lines


def gamma4_factor_values(p: ComplexPoint) -> Tuple[complex, complex]:
    """The two factor values selecting the L1a / L1b line at gamma^2=16."""
    c = p.coords / p.coords[0]
    x2, x3, x4 = c[1], c[2], c[3]
    return ((1 + x3) * x2 + (1 - x3) * x4, (1 - x3) * x2 - (1 + x3) * x4)
