"""Lines in P3 via Pluecker coordinates: incidence, the component line
families with their surface containments and rulings, and the symbolic
verification that every generic point of the point scheme lies on exactly
six distinct lines of the line scheme."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .gaussian import GaussianRational, ONE, ZERO, gr
from .multipoly import (Polynomial, VarSet, parse_poly, print_poly,
                        substitute)
from .groebner import (GroebnerBasis, Ideal, buchberger, hilbert_dimension_degree,
                       is_unit_mod, normal_form, quotient_dimension)
from .quadratic_algebra import CHART_VARS, M_VARS, X_VARS
from .point_scheme import (BASIS_POINTS, ProjectivePoint, symbolic_point,
                           zgamma_ideal)
from .line_scheme import component_catalog, line_scheme_ideal

class DependentPointsError(ValueError):
    pass


class ZeroParameterError(ValueError):
    pass


class NonUnitDenominatorError(ValueError):
    pass


M_NAMES = ("M12", "M13", "M14", "M23", "M24", "M34")
_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class PluckerLine:
    """Six Pluecker coordinates (M12, M13, M14, M23, M24, M34), not all
    zero, satisfying the Pluecker quadric; equality up to a scalar."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = tuple(c if isinstance(c, GaussianRational) else gr(c)
                       for c in coords)
        if len(coords) != 6:
            raise ValueError("six Pluecker coordinates expected")
        if all(c.is_zero() for c in coords):
            raise ValueError("Pluecker coordinates cannot all vanish")
        m12, m13, m14, m23, m24, m34 = coords
        if not (m12 * m34 - m13 * m24 + m14 * m23).is_zero():
            raise ValueError("coordinates do not satisfy the Pluecker identity")
        self.coords = coords

    def normalized(self) -> Tuple[GaussianRational, ...]:
        pivot = next(c for c in self.coords if not c.is_zero())
        inv = pivot.inverse()
        return tuple(c * inv for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, PluckerLine):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __getitem__(self, k):
        return self.coords[k]

    def __repr__(self):
        return "PluckerLine(" + ", ".join(str(c) for c in self.normalized()) + ")"


def line_from_points(a: ProjectivePoint, b: ProjectivePoint) -> PluckerLine:
    """M_ij = a_i b_j - a_j b_i; requires linearly independent points."""
    coords = [a[i] * b[j] - a[j] * b[i] for i, j in _PAIRS]
    if all(c.is_zero() for c in coords):
        raise DependentPointsError("points are projectively equal")
    return PluckerLine(coords)


class LineMatrix:
    """A line as a rank-two 2x4 matrix: two spanning points as rows."""

    __slots__ = ("rows",)

    def __init__(self, a: ProjectivePoint, b: ProjectivePoint):
        if line_from_points(a, b) is None:  # raises on dependence
            raise DependentPointsError
        self.rows = (a, b)

    def pluecker(self) -> PluckerLine:
        return line_from_points(*self.rows)

    def contains(self, p: ProjectivePoint) -> bool:
        """Rank oracle: p on the line iff stacking it keeps rank two."""
        from .polylinalg import ScalarMatrix

        stacked = ScalarMatrix([list(self.rows[0].coords),
                                list(self.rows[1].coords),
                                list(p.coords)])
        return stacked.rank() == 2


def dual_coordinates(m: Sequence) -> Tuple:
    """Hodge-dual coordinates (M34, -M24, M23, M14, -M13, M12); a point p
    lies on the line iff the dual antisymmetric matrix kills p."""
    m12, m13, m14, m23, m24, m34 = m
    return (m34, -m24, m23, m14, -m13, m12)


def incidence_contractions(m: Sequence, p: Sequence) -> List:
    """The four contractions of the dual matrix with p; all zero iff p is
    on the line.  Works for scalars and for polynomial entries alike."""
    d12, d13, d14, d23, d24, d34 = dual_coordinates(m)
    return [
        d12 * p[1] + d13 * p[2] + d14 * p[3],
        -(d12 * p[0]) + d23 * p[2] + d24 * p[3],
        -(d13 * p[0]) - d23 * p[1] + d34 * p[3],
        -(d14 * p[0]) - d24 * p[1] - d34 * p[2],
    ]


def point_on_line(p: ProjectivePoint, l: PluckerLine) -> bool:
    return all((c if isinstance(c, GaussianRational) else gr(c)).is_zero()
               for c in incidence_contractions(l.coords, p.coords))


def incidence_ideal_forms(p: ProjectivePoint) -> List[Polynomial]:
    """Linear forms in the M_ij vanishing exactly on lines through p."""
    coord_polys = [Polynomial.variable(M_VARS, n) for n in M_NAMES]
    consts = [Polynomial.constant(M_VARS, c) for c in p.coords]
    return [f for f in incidence_contractions(coord_polys, consts)
            if not f.is_zero()]


def evaluate_in_M(f: Polynomial, coords: Sequence[Polynomial],
                  target: VarSet) -> Polynomial:
    """Substitute polynomial Pluecker coordinates into a polynomial on the
    M variables."""
    assignment = {n: c for n, c in zip(M_NAMES, coords)}
    return substitute(f, assignment, target=target)


# ---------------------------------------------------------------------------
# line families of the components and the surfaces they sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LineFamily:
    """A parametrized 2x4 matrix of row polynomials plus the parameter
    constraints cutting out the family."""

    name: str
    params: VarSet
    row1: Tuple[Polynomial, ...]
    row2: Tuple[Polynomial, ...]
    constraints: Tuple[Polynomial, ...]


def line_family(name: str, gamma: GaussianRational) -> LineFamily:
    if name == "L1":
        P = VarSet(["a1", "a3", "b2", "b4"])
        v = {n: Polynomial.variable(P, n) for n in P.names}
        zero = Polynomial.zero(P)
        row1 = (v["a1"], zero, v["a3"], zero)
        row2 = (zero, v["b2"], zero, v["b4"])
        c = parse_poly(
            "a1^2*b2^2 + a3^2*b4^2 - g*a1*b2*a3*b4 - a1^2*b4^2 - b2^2*a3^2",
            P, gamma=gamma)
        return LineFamily(name, P, row1, row2, (c,))
    if name in ("L1a", "L1b"):
        P = VarSet(["a1", "a3", "b2", "b4"])
        v = {n: Polynomial.variable(P, n) for n in P.names}
        zero = Polynomial.zero(P)
        row1 = (v["a1"], zero, v["a3"], zero)
        row2 = (zero, v["b2"], zero, v["b4"])
        text = ("a1*b2 + a1*b4 + a3*b2 - a3*b4" if name == "L1a"
                else "a3*b4 + a3*b2 + a1*b4 - a1*b2")
        return LineFamily(name, P, row1, row2, (parse_poly(text, P),))
    if name in ("L6a", "L6b"):
        P = VarSet(["a1", "a2", "a3", "a4", "al", "be"])
        v = {n: Polynomial.variable(P, n) for n in P.names}
        row1 = (v["a1"], v["a2"], v["a3"], v["a4"])
        if name == "L6a":
            row2 = (v["al"] * v["a1"], v["be"] * v["a2"],
                    v["be"] * v["a3"], v["al"] * v["a4"])
            c = parse_poly("a1*a2 - i*a3*a4", P)
        else:
            row2 = (v["be"] * v["a1"], v["al"] * v["a2"],
                    v["al"] * v["a3"], v["be"] * v["a4"])
            c = parse_poly("a3*a4 - i*a1*a2", P)
        return LineFamily(name, P, row1, row2, (c,))
    raise KeyError(f"no line family named {name!r}")


def surface_containment(family: LineFamily, surface: Polynomial) -> bool:
    """True iff every point of every line of the family lies on the
    surface: the substituted polynomial vanishes modulo the family's
    constraints, identically in the line parameters."""
    big = family.params.extend(["s_", "t_"])
    s = Polynomial.variable(big, "s_")
    t = Polynomial.variable(big, "t_")

    def lift(p: Polynomial) -> Polynomial:
        return substitute(p, {}, target=big)

    point = [s * lift(r1) + t * lift(r2)
             for r1, r2 in zip(family.row1, family.row2)]
    image = substitute(surface, {n: c for n, c in zip(X_VARS.names, point)},
                       target=big)
    if image.is_zero():
        return True
    constraints = [lift(c) for c in family.constraints]
    gb = buchberger(Ideal(constraints))
    return normal_form(image, gb).is_zero()


RULING_QUADRICS = ("Q6a", "Q6b", "Qa", "Qb")


def ruling_lines(quadric: str, param, gamma: Optional[GaussianRational] = None
                 ) -> PluckerLine:
    """One line of the named quadric's reference ruling.

    Q6a and Q6b take a parameter pair (delta, eps) != (0, 0); Qa and Qb
    (the gamma^2 = 16 split) take a single scalar, or None for the ruling
    member at infinity.
    """
    if quadric in ("Q6a", "Q6b"):
        delta, eps = (gr(param[0]) if not isinstance(param[0], GaussianRational) else param[0],
                      gr(param[1]) if not isinstance(param[1], GaussianRational) else param[1])
        if delta.is_zero() and eps.is_zero():
            raise ZeroParameterError("(delta, eps) must be nonzero")
        i = gr(0, 1)
        if quadric == "Q6a":
            # V(delta x1 - eps x4, delta x3 + i eps x2)
            p1 = ProjectivePoint((eps, ZERO, ZERO, delta))
            p2 = ProjectivePoint((ZERO, delta, -i * eps, ZERO))
        else:
            # V(delta x3 - eps x2, delta x1 + i eps x4)
            p1 = ProjectivePoint((ZERO, delta, eps, ZERO))
            p2 = ProjectivePoint((-i * eps, ZERO, ZERO, delta))
        return line_from_points(p1, p2)
    if quadric in ("Qa", "Qb"):
        if param is None:
            # the ruling member with no finite parameter value
            if quadric == "Qa":
                return line_from_points(ProjectivePoint((1, 0, 0, 0)),
                                        ProjectivePoint((0, 1, 0, -1)))
            return line_from_points(ProjectivePoint((0, 0, 1, 0)),
                                    ProjectivePoint((0, 1, 0, -1)))
        alpha = param if isinstance(param, GaussianRational) else gr(param)
        one = ONE
        if quadric == "Qa":
            # V(x1 - alpha x3, (alpha+1) x2 + (alpha-1) x4)
            p1 = ProjectivePoint((alpha, ZERO, one, ZERO))
            p2 = ProjectivePoint((ZERO, one - alpha, ZERO, one + alpha))
        else:
            # V(x3 - alpha x1, (alpha-1) x2 + (alpha+1) x4)
            p1 = ProjectivePoint((one, ZERO, alpha, ZERO))
            p2 = ProjectivePoint((ZERO, one + alpha, ZERO, one - alpha))
        return line_from_points(p1, p2)
    raise KeyError(f"no ruling data for quadric {quadric!r}")


def line_in_component(l: PluckerLine, comp_ideal: Ideal) -> bool:
    """Exact evaluation of every component generator at the line."""
    for g in comp_ideal.generators:
        acc = ZERO
        for mono, c in g.terms.items():
            term = c
            for coord, e in zip(l.coords, mono):
                term = term * coord ** e
            acc = acc + term
        if not acc.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# the six lines through a generic point of the point scheme
# ---------------------------------------------------------------------------


def symbolic_line_coords(gamma: GaussianRational) -> Dict[str, Tuple[Polynomial, ...]]:
    """Pluecker coordinates, denominators cleared, of the component line
    through the generic chart point (1, x2, x3, x4)."""
    x2 = Polynomial.variable(CHART_VARS, "x2")
    x3 = Polynomial.variable(CHART_VARS, "x3")
    x4 = Polynomial.variable(CHART_VARS, "x4")
    one = Polynomial.constant(CHART_VARS, 1)
    zero = Polynomial.zero(CHART_VARS)
    i = gr(0, 1)
    lines = {
        # join of (1, 0, x3, 0) and (0, x2, 0, x4): the line
        # V(x1 - (1/x3) x1... x1 = alpha x3, x2 = beta x4 scaled clear
        "L1": (x2, zero, x4, -(x2 * x3), zero, x3 * x4),
        # join of e2 and (1, 0, x3, x4)
        "L2": (-one, zero, zero, x3, x4, zero),
        # join of (1, x2, x3, 0) and e4
        "L3": (zero, zero, one, zero, x2, x3),
        # join of (1, x2, 0, x4) and e3
        "L4": (zero, one, zero, x2, zero, -x4),
        # join of e1 and (0, x2, x3, x4)
        "L5": (x2, x3, x4, zero, zero, zero),
        # join of (1, 0, 0, x4) and (0, i x4, 1, 0)
        "L6a": (i * x4, one, zero, zero, -(i * (x4 * x4)), -x4),
        # join of (1, 0, 0, x4) and (0, -i x4, 1, 0)
        "L6b": (-(i * x4), one, zero, zero, i * (x4 * x4), -x4),
    }
    lines["L1a"] = lines["L1"]
    lines["L1b"] = lines["L1"]
    return lines


def _branch_factors(gamma: GaussianRational) -> Dict[str, Polynomial]:
    x2 = Polynomial.variable(CHART_VARS, "x2")
    x3 = Polynomial.variable(CHART_VARS, "x3")
    x4 = Polynomial.variable(CHART_VARS, "x4")
    one = Polynomial.constant(CHART_VARS, 1)
    i = gr(0, 1)
    out = {
        "L6a": x2 - i * (x3 * x4),
        "L6b": x2 + i * (x3 * x4),
    }
    if gamma * gamma == gr(16):
        if gamma == gr(4):
            out["L1a"] = (one + x3) * x2 + (one - x3) * x4
            out["L1b"] = (one - x3) * x2 - (one + x3) * x4
        else:
            # gamma = -4: the quartic factors with the opposite signs
            out["L1a"] = (one + x3) * x2 - (one - x3) * x4
            out["L1b"] = (one - x3) * x2 + (one + x3) * x4
    return out


@dataclass
class LineCheck:
    component: str
    through_point: bool
    in_component: bool
    in_line_scheme: bool
    well_defined: bool

    @property
    def ok(self) -> bool:
        return (self.through_point and self.in_component
                and self.in_line_scheme and self.well_defined)


@dataclass
class BranchReport:
    name: str
    proper: bool
    quotient_dim: Optional[int]
    lines: List[LineCheck]
    distinct: bool

    @property
    def ok(self) -> bool:
        return (self.proper and len(self.lines) == 6 and self.distinct
                and all(l.ok for l in self.lines))


@dataclass
class SixLinesReport:
    gamma: GaussianRational
    point: str
    branches: List[BranchReport] = field(default_factory=list)
    component_dimensions: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    infinite: bool = False
    branch_dims_consistent: bool = True
    total: Union[int, str] = 0

    @property
    def ok(self) -> bool:
        if self.point in BASIS_POINTS:
            return self.infinite
        return (bool(self.branches) and self.branch_dims_consistent
                and all(b.ok for b in self.branches) and self.total == 6)

    def to_json_dict(self) -> dict:
        out = {
            "gamma": str(self.gamma),
            "point": self.point,
            "total": self.total,
            "verified": self.ok,
        }
        if self.point in BASIS_POINTS:
            out["infinite"] = self.infinite
            out["component_dimensions"] = {
                k: list(v) for k, v in sorted(self.component_dimensions.items())}
        else:
            out["branches"] = [
                {
                    "name": b.name,
                    "proper": b.proper,
                    "quotient_dim": b.quotient_dim,
                    "distinct": b.distinct,
                    "lines": [
                        {
                            "component": l.component,
                            "through_point": l.through_point,
                            "in_component": l.in_component,
                            "in_line_scheme": l.in_line_scheme,
                            "well_defined": l.well_defined,
                        }
                        for l in b.lines
                    ],
                }
                for b in self.branches
            ]
        return out

    def to_text(self) -> str:
        lines = [f"lines of the line scheme through {self.point} at gamma = {self.gamma}"]
        if self.point in BASIS_POINTS:
            lines.append(f"  infinitely many: {'yes' if self.infinite else 'no'}")
            for name, (d, deg) in sorted(self.component_dimensions.items()):
                tag = "pencil (infinitely many)" if d >= 1 else (
                    "finitely many" if d == 0 else "none")
                lines.append(f"  component {name}: dimension {d} -> {tag}")
        else:
            for b in self.branches:
                lines.append(f"  branch {b.name}: proper={b.proper} "
                             f"dim={b.quotient_dim} distinct={b.distinct}")
                for l in b.lines:
                    lines.append(
                        f"    {l.component}: through={l.through_point} "
                        f"component={l.in_component} scheme={l.in_line_scheme}")
            lines.append(f"  lines per point: {self.total}")
        lines.append(f"  verified: {'yes' if self.ok else 'NO'}")
        return "\n".join(lines)


def _check_line_on_branch(name: str, coords, comp_ideal: Ideal,
                          branch_gb: GroebnerBasis, branch_ideal: Ideal,
                          L46) -> LineCheck:
    p_sym = symbolic_point()
    contr = incidence_contractions(coords, p_sym)
    through = all(normal_form(c, branch_gb).is_zero() for c in contr)
    in_comp = all(
        normal_form(evaluate_in_M(g, coords, CHART_VARS), branch_gb).is_zero()
        for g in comp_ideal.generators)
    in_scheme = all(
        normal_form(evaluate_in_M(f, coords, CHART_VARS), branch_gb).is_zero()
        for f in L46.polys)
    well = any(is_unit_mod(c, branch_ideal) for c in coords if not c.is_zero())
    return LineCheck(component=name, through_point=through,
                     in_component=in_comp, in_line_scheme=in_scheme,
                     well_defined=well)


def _pairwise_distinct(lines: List[Tuple[str, Tuple[Polynomial, ...]]],
                       branch_ideal: Ideal) -> bool:
    """Every pair of the six lines differs at every point of the branch:
    some 2x2 cross-minor of their coordinate vectors is a unit."""
    for (n1, c1), (n2, c2) in combinations(lines, 2):
        found = False
        for a, b in combinations(range(6), 2):
            m = c1[a] * c2[b] - c1[b] * c2[a]
            if m.is_zero():
                continue
            if is_unit_mod(m, branch_ideal):
                found = True
                break
        if not found:
            return False
    return True


def lines_through_point(point: Union[str, ProjectivePoint, None],
                        gamma: GaussianRational) -> SixLinesReport:
    """Count and verify the lines of the line scheme through a point.

    point: 'e1'..'e4' (or the ProjectivePoint) for the basis points, or
    None / 'generic' for the symbolic generic point of Z_gamma.
    """
    catalog = component_catalog(gamma)
    L46 = line_scheme_ideal(gamma)

    if isinstance(point, ProjectivePoint):
        for name, bp in BASIS_POINTS.items():
            if point == bp:
                point = name
                break
    if isinstance(point, str) and point in BASIS_POINTS:
        forms = incidence_ideal_forms(BASIS_POINTS[point])
        dims: Dict[str, Tuple[int, int]] = {}
        for comp in catalog:
            slice_ideal = Ideal(list(comp.ideal.generators) + forms)
            dims[comp.name] = hilbert_dimension_degree(slice_ideal)
        full = Ideal(list(L46.ideal.generators) + forms)
        full_dim = hilbert_dimension_degree(full)
        infinite = full_dim[0] >= 1
        return SixLinesReport(gamma=gamma, point=point,
                              component_dimensions=dims,
                              infinite=infinite,
                              total="infinite" if infinite else 0)

    if point not in (None, "generic"):
        raise ValueError("point must be a basis point or 'generic'")

    rho = zgamma_ideal(gamma)
    coords = symbolic_line_coords(gamma)
    factors = _branch_factors(gamma)
    split16 = gamma * gamma == gr(16)

    six_sets: List[Tuple[str, Tuple[str, ...]]] = []
    base = ("L2", "L3", "L4", "L5")
    l6_cases = ("L6a", "L6b")
    l1_cases = ("L1a", "L1b") if split16 else ("L1",)
    for l6 in l6_cases:
        for l1 in l1_cases:
            branch_factors = [factors[l6]] + ([factors[l1]] if split16 else [])
            name = " & ".join(f"{print_poly(f)} = 0" for f in branch_factors)
            six_sets.append((name, (l1,) + base + (l6,)))

    # exclusivity of the branch split: no point satisfies both factors
    both6 = Ideal(list(rho.generators)
                  + [factors["L6a"], factors["L6b"]])
    dims_consistent = buchberger(both6).contains_one()
    if split16:
        both1 = Ideal(list(rho.generators)
                      + [factors["L1a"], factors["L1b"]])
        dims_consistent = dims_consistent and buchberger(both1).contains_one()

    total_dim = quotient_dimension(rho)
    branch_dims = []
    branches: List[BranchReport] = []
    for name, comps in six_sets:
        extra = []
        for c in comps:
            f = factors.get(c)
            if f is not None:
                extra.append(f)
        branch_ideal = Ideal(list(rho.generators) + extra)
        gb = buchberger(branch_ideal)
        proper = not gb.contains_one()
        qdim = quotient_dimension(branch_ideal)
        branch_dims.append(qdim or 0)
        checks = []
        used_lines = []
        for cname in comps:
            comp = catalog.get(cname)
            checks.append(_check_line_on_branch(
                cname, coords[cname], comp.ideal, gb, branch_ideal, L46))
            used_lines.append((cname, coords[cname]))
        distinct = _pairwise_distinct(used_lines, branch_ideal)
        branches.append(BranchReport(name=name, proper=proper,
                                     quotient_dim=qdim, lines=checks,
                                     distinct=distinct))
    dims_consistent = dims_consistent and (sum(branch_dims) == total_dim)
    totals = {len(b.lines) for b in branches}
    return SixLinesReport(gamma=gamma, point="generic", branches=branches,
                          branch_dims_consistent=dims_consistent,
                          total=totals.pop() if len(totals) == 1 else -1)
