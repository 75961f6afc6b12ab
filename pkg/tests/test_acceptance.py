"""Acceptance suite.

Each test runs one reference-claim verification exactly at its stated
tolerance and prints a single pass/fail line to the terminal.  Everything
here is exact arithmetic except the numeric cross-check, whose tolerances
are part of the claim being tested.

Known honest failure: the polynomial-by-polynomial clause of the
line-list check (criterion 2b).  The computed minors generate the same
ideal as the reference list at every tested gamma, but fifteen reference
entries are linear combinations of minors rather than unit multiples (the
reference list mixes the dual basis relative to the displayed matrix),
and entry 31 additionally differs from the closest minor by the single
term (1 - i) * M12^2 * M14 * M24 under the enumeration matching the other
forty-four entries.  See the fixture forensics report and notes ledger.
"""

import random
import time
from fractions import Fraction

from qp3.gaussian import ONE, gr
from qp3.multipoly import (MonomialOrder, Polynomial, VarSet, parse_poly,
                           print_poly)
from qp3.groebner import Ideal, buchberger, hilbert_dimension_degree, \
    ideals_equal, normal_form
from qp3.quadratic_algebra import M_VARS, X_VARS, make_A
from qp3.point_scheme import ProjectivePoint, count_points, point_ideal
from qp3.line_scheme import (component_catalog, fixture_forensics,
                             gamma4_factorization, line_scheme_ideal,
                             match_fixture_polys, verify_decomposition)
from qp3.plucker import (DependentPointsError, line_family, line_from_points,
                         lines_through_point, point_on_line, ruling_lines,
                         surface_containment, line_in_component)
from qp3.numeric import (distinct_count, enumerate_points, line_residual,
                         minor_residual, proj_distance, six_lines_numeric)
from qp3.fixtures import load_fixtures


from _acceptance_log import record


def _report(criterion: str, ok: bool, detail: str = "") -> None:
    print(record(criterion, ok, detail), flush=True)


GAMMAS_145 = (gr(1), gr(4), gr(5))


def test_criterion_1_reference_point_list():
    """Point-list equivalence: minors ideal == fixture ideal, minor-by-minor
    up to a unit scalar, at gamma in {1, 4, 5}."""
    ok = True
    for g in GAMMAS_145:
        mine = point_ideal(make_A(g))
        fixture = Ideal(load_fixtures().parse_point_polys(g))
        ok = ok and ideals_equal(mine, fixture)
        mset = sorted(print_poly(p.monic()) for p in mine.generators)
        fset = sorted(print_poly(p.monic()) for p in fixture.generators)
        ok = ok and (mset == fset)
    _report("criterion 1 (reference point list equivalence)", ok)
    assert ok


def test_criterion_2a_reference_line_ideal():
    """Line-list equivalence, ideal half: the 45 mapped minors plus P
    generate exactly the ideal of the 46 reference polynomials."""
    ok = True
    for g in GAMMAS_145:
        L = line_scheme_ideal(g)
        fixture = Ideal(load_fixtures().parse_line_polys(g))
        ok = ok and ideals_equal(L.ideal, fixture)
    _report("criterion 2a (reference line list, ideal equivalence)", ok)
    assert ok


def test_criterion_2b_reference_line_polynomials():
    """Line-list equivalence, polynomial half: each reference entry should
    be a unit multiple of a computed minor after Pluecker normal form.

    This clause cannot hold: the reference list mixes the dual basis, so
    fifteen entries are certified linear combinations of minors, and entry
    31 carries a one-term discrepancy besides.  The assertion runs the
    criterion as stated and fails honestly.
    """
    failures = {}
    for g in GAMMAS_145:
        try:
            match_fixture_polys(line_scheme_ideal(g))
        except ValueError:
            fr = fixture_forensics(g)
            failures[str(g)] = {
                "direct": len(fr.direct_matches),
                "certified_combinations": len(fr.combination_certificates),
                "direct_under_other_enumeration":
                    len(fr.direct_matches) + len(fr.right_order_matches),
                "entry_31_discrepancy": print_poly(
                    fr.right_order_discrepancies.get(31)),
            }
    ok = not failures
    _report("criterion 2b (reference line list, polynomial-by-polynomial)", ok,
            "reference entries are basis-mixed minor combinations; "
            "see fixture_forensics" if failures else "")
    assert ok, (
        "polynomial-by-polynomial matching against the reference list "
        f"fails at every tested gamma: {failures}. The computed minors "
        "generate the identical ideal (criterion 2a) and 30 of 45 entries "
        "match up to unit scalars; the remaining 15 are exact linear "
        "combinations of minors (dual-basis mixing, Cauchy-Binet), with "
        "entry 31 also off by (1 - i)*M12^2*M14*M24 under the enumeration "
        "that reproduces the other 44 entries. See fixture_forensics().")


def test_criterion_3_point_counts():
    """Point counts: 20 distinct at gamma^2 != 4, 12 distinct with the
    multiplicity-two profile at gamma = 2, chart dimensions summing to 20,
    squarefree dichotomy."""
    ok = True
    for gv in (1, 2, 4, 5):
        g = gr(gv)
        rep = count_points(make_A(g), verify_sigma=False)
        ok = ok and rep.total_with_multiplicity == 20
        ok = ok and all(v for v in rep.checks.values())
        if gv == 2:
            ok = ok and rep.distinct_count == 12
            ok = ok and rep.multiplicity_profile == {1: 4, 2: 8}
            ok = ok and not rep.rho1_squarefree
        else:
            ok = ok and rep.distinct_count == 20
            ok = ok and rep.multiplicity_profile == {1: 20}
            ok = ok and rep.rho1_squarefree
    _report("criterion 3 (point counts and multiplicities)", ok)
    assert ok


def test_criterion_4_sigma_orbits():
    """Sigma orbit profile {2, 2, 4, 4, 4, 4} at gamma = 1, established
    symbolically modulo the rho ideal."""
    rep = count_points(make_A(gr(1)), verify_sigma=True)
    ok = rep.sigma_orbits == (2, 2, 4, 4, 4, 4) and rep.ok
    _report("criterion 4 (sigma orbit profile)", ok)
    assert ok


def test_criterion_5_decomposition():
    """Component decomposition: both inclusions, 7 components at gamma in
    {1, 5}, 8 at gamma 4, and the factorization of the quadric at 16."""
    ok = True
    for gv in (1, 5):
        g = gr(gv)
        cat = component_catalog(g)
        ok = ok and len(cat) == 7
        rep = verify_decomposition(line_scheme_ideal(g), cat)
        ok = ok and rep.poly_in_components and rep.intersection_in_radical
    cat4 = component_catalog(gr(4))
    ok = ok and len(cat4) == 8
    ok = ok and gamma4_factorization(gr(4))
    rep4 = verify_decomposition(line_scheme_ideal(gr(4)), cat4)
    ok = ok and rep4.poly_in_components and rep4.intersection_in_radical
    _report("criterion 5 (component decomposition)", ok)
    assert ok


def test_criterion_6_dimension_and_degree():
    """The line scheme has projective dimension 1 and degree 20 at gamma
    in {1, 4, 5}; the component degrees add up as 4 + 4x3 + 2x2 = 20."""
    ok = True
    for g in GAMMAS_145:
        ok = ok and hilbert_dimension_degree(line_scheme_ideal(g).ideal) == (1, 20)
        cat = component_catalog(g)
        table = {c.name: hilbert_dimension_degree(c.ideal) for c in cat}
        ok = ok and all(d == 1 for d, _ in table.values())
        ok = ok and sum(deg for _, deg in table.values()) == 20
        if g == gr(4):
            ok = ok and sorted(deg for _, deg in table.values()) == \
                [2, 2, 2, 2, 3, 3, 3, 3]
        else:
            ok = ok and sorted(deg for _, deg in table.values()) == \
                [2, 2, 3, 3, 3, 3, 4]
    _report("criterion 6 (dimension one, degree twenty)", ok)
    assert ok


def test_criterion_7_six_lines():
    """Exactly six distinct lines through the generic point at gamma in
    {1, 4}, each verified in its component and in the full 46-polynomial
    ideal; basis points flagged as lying on infinitely many lines."""
    ok = True
    for gv in (1, 4):
        rep = lines_through_point("generic", gr(gv))
        ok = ok and rep.ok and rep.total == 6
    for name in ("e1", "e2", "e3", "e4"):
        rep = lines_through_point(name, gr(1))
        ok = ok and rep.infinite
    _report("criterion 7 (six lines through generic points)", ok)
    assert ok


def test_criterion_8_containments_and_rulings():
    """Surface containments: the quartic for the L1 family, the quadrics
    and rulings for L6a/L6b, and Qa/Qb with their rulings at gamma = 4."""
    fx = load_fixtures()
    ok = True
    quartic = parse_poly(fx.surfaces["quartic"], X_VARS, gamma=gr(1))
    ok = ok and surface_containment(line_family("L1", gr(1)), quartic)
    q6a = parse_poly(fx.surfaces["Q6a"], X_VARS)
    q6b = parse_poly(fx.surfaces["Q6b"], X_VARS)
    ok = ok and surface_containment(line_family("L6a", gr(1)), q6a)
    ok = ok and surface_containment(line_family("L6b", gr(1)), q6b)
    ok = ok and not surface_containment(line_family("L6a", gr(1)), q6b)
    qa = parse_poly(fx.surfaces["Qa"], X_VARS)
    qb = parse_poly(fx.surfaces["Qb"], X_VARS)
    ok = ok and surface_containment(line_family("L1a", gr(4)), qa)
    ok = ok and surface_containment(line_family("L1b", gr(4)), qb)
    cat1 = component_catalog(gr(1))
    cat4 = component_catalog(gr(4))
    for d, e in ((1, 0), (0, 1), (1, 1), (2, -3)):
        ok = ok and line_in_component(ruling_lines("Q6a", (d, e)),
                                      cat1.get("L6a").ideal)
        ok = ok and line_in_component(ruling_lines("Q6b", (d, e)),
                                      cat1.get("L6b").ideal)
    for a in (None, 0, 1, -2, 7):
        ok = ok and line_in_component(ruling_lines("Qa", a),
                                      cat4.get("L1a").ideal)
        ok = ok and line_in_component(ruling_lines("Qb", a),
                                      cat4.get("L1b").ideal)
    _report("criterion 8 (surface containments and rulings)", ok)
    assert ok


def test_criterion_9_numeric_cross_check():
    """Numeric cross-check at gamma = 1: twenty separated points, minor
    residuals below 1e-8, six separated lines per generic point with
    46-polynomial residuals below 1e-8, all under ten seconds."""
    start = time.perf_counter()
    pts = enumerate_points(gr(1))
    ok = len(pts) == 20 and distinct_count(pts, 1e-6) == 20
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            ok = ok and proj_distance(pts[i].coords, pts[j].coords) > 1e-6
    for p in pts:
        ok = ok and minor_residual(p.coords, 1.0) < 1e-8
    for p in pts[4:]:
        lines = six_lines_numeric(p, gr(1), tol=1e-8)
        ok = ok and len(lines) == 6
        for m in lines:
            ok = ok and line_residual(m, 1.0) < 1e-8
        for i in range(6):
            for j in range(i + 1, 6):
                ok = ok and proj_distance(lines[i], lines[j]) > 1e-6
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10.0
    _report("criterion 9 (numeric cross-check)", ok, f"{elapsed:.2f}s")
    assert ok


# --- criterion 10: randomized property suites, >= 500 cases each ----------


def _random_gr(rng):
    return gr(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
              Fraction(rng.randint(-9, 9), rng.randint(1, 9)))


def test_criterion_10a_field_and_ring_axioms():
    rng = random.Random(101)
    ok = True
    for _ in range(500):
        a, b, c = (_random_gr(rng) for _ in range(3))
        ok = ok and (a + b) + c == a + (b + c)
        ok = ok and a * b == b * a
        ok = ok and (a * b) * c == a * (b * c)
        ok = ok and a * (b + c) == a * b + a * c
        if not a.is_zero():
            ok = ok and a * a.inverse() == ONE
        if not b.is_zero():
            ok = ok and (a / b) * b == a
    vs = VarSet(["x", "y"])
    for _ in range(500):
        polys = []
        for _ in range(3):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                m = (rng.randint(0, 2), rng.randint(0, 2))
                terms[m] = gr(rng.randint(-4, 4), rng.randint(-4, 4))
            polys.append(Polynomial(vs, terms))
        f, g, h = polys
        ok = ok and (f + g) + h == f + (g + h)
        ok = ok and f * g == g * f
        ok = ok and f * (g + h) == f * g + f * h
    _report("criterion 10a (field and ring axioms, 500+ cases)", ok)
    assert ok


def test_criterion_10b_monomial_order_axioms():
    rng = random.Random(103)
    vs = VarSet(["x", "y", "z", "w"])
    orders = (MonomialOrder.lex(), MonomialOrder.degrevlex(),
              MonomialOrder.elimination(vs, ["x", "y"]))
    unit = (0, 0, 0, 0)
    ok = True
    for _ in range(500):
        m1 = tuple(rng.randint(0, 6) for _ in range(4))
        m2 = tuple(rng.randint(0, 6) for _ in range(4))
        n = tuple(rng.randint(0, 6) for _ in range(4))
        for order in orders:
            key = order.key
            ok = ok and key(unit) <= key(m1)
            ok = ok and (key(m1) < key(m2) or key(m2) < key(m1) or m1 == m2)
            if key(m1) <= key(m2):
                p1 = tuple(a + b for a, b in zip(m1, n))
                p2 = tuple(a + b for a, b in zip(m2, n))
                ok = ok and key(p1) <= key(p2)
    _report("criterion 10b (monomial order axioms, 500 cases)", ok)
    assert ok


def test_criterion_10c_buchberger_posthoc():
    from itertools import combinations

    rng = random.Random(107)
    vs = VarSet(["x", "y"])
    ok = True
    for _ in range(500):
        gens = []
        for _ in range(2):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                m = (rng.randint(0, 2), rng.randint(0, 2))
                terms[m] = gr(rng.randint(-3, 3), rng.randint(-3, 3))
            p = Polynomial(vs, terms)
            if not p.is_zero():
                gens.append(p)
        if not gens:
            continue
        G = buchberger(Ideal(gens))
        for f, g in combinations(G.basis, 2):
            lmf, lmg = f.leading_monomial(), g.leading_monomial()
            lcm = tuple(max(a, b) for a, b in zip(lmf, lmg))
            uf = Polynomial(vs, {tuple(a - b for a, b in zip(lcm, lmf)):
                                 g.leading_coefficient()})
            ug = Polynomial(vs, {tuple(a - b for a, b in zip(lcm, lmg)):
                                 f.leading_coefficient()})
            s = uf * f - ug * g
            ok = ok and normal_form(s, G).is_zero()
        for gen in gens:
            ok = ok and normal_form(gen, G).is_zero()
    _report("criterion 10c (Buchberger post-hoc S-polynomials, 500 ideals)", ok)
    assert ok


def test_criterion_10d_pluecker_identity():
    rng = random.Random(109)
    ok = True
    n = 0
    while n < 500:
        coords = [[gr(rng.randint(-5, 5), rng.randint(-3, 3)) for _ in range(4)]
                  for _ in range(2)]
        if all(c.is_zero() for c in coords[0]) or all(c.is_zero() for c in coords[1]):
            continue
        a = ProjectivePoint(coords[0])
        b = ProjectivePoint(coords[1])
        try:
            l = line_from_points(a, b)
        except DependentPointsError:
            continue
        n += 1
        m12, m13, m14, m23, m24, m34 = l.coords
        ok = ok and (m12 * m34 - m13 * m24 + m14 * m23).is_zero()
        ok = ok and point_on_line(a, l) and point_on_line(b, l)
    _report("criterion 10d (Pluecker identity, 500 lines)", ok)
    assert ok


def test_criterion_10e_parser_roundtrips():
    rng = random.Random(113)
    ok = True
    fx = load_fixtures()
    for text in fx.point_scheme_polys:
        f = parse_poly(text, X_VARS, gamma=gr(5))
        ok = ok and parse_poly(print_poly(f), X_VARS) == f
    for text in fx.line_scheme_polys:
        f = parse_poly(text, M_VARS, gamma=gr(5))
        ok = ok and parse_poly(print_poly(f), M_VARS) == f
    vs = VarSet(["x", "y", "z"])
    for _ in range(500):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            m = tuple(rng.randint(0, 5) for _ in range(3))
            terms[m] = gr(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                          Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        f = Polynomial(vs, terms)
        s = print_poly(f)
        ok = ok and parse_poly(s, vs) == f and print_poly(parse_poly(s, vs)) == s
    _report("criterion 10e (parser round-trips, 500+ cases)", ok)
    assert ok
