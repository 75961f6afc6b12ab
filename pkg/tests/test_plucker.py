import random
from fractions import Fraction

import pytest

from qp3.gaussian import ZERO, gr
from qp3.multipoly import parse_poly
from qp3.quadratic_algebra import X_VARS
from qp3.point_scheme import E1, E2, E3, E4, ProjectivePoint
from qp3.line_scheme import component_catalog
from qp3.plucker import (DependentPointsError, PluckerLine, ZeroParameterError,
                         line_family, line_from_points,
                         line_in_component, lines_through_point, point_on_line,
                         ruling_lines, surface_containment)
from qp3.fixtures import load_fixtures


def test_line_from_basis_points():
    l = line_from_points(E1, E2)
    assert l.normalized() == (gr(1), ZERO, ZERO, ZERO, ZERO, ZERO)
    l34 = line_from_points(E3, E4)
    assert l34.normalized() == (ZERO, ZERO, ZERO, ZERO, ZERO, gr(1))


def test_line_from_family_matrix_rows():
    # rows (a1, 0, a3, 0) and (0, b2, 0, b4) give the stated coordinates
    a1, a3, b2, b4 = gr(2), gr(3), gr(5), gr(7)
    l = line_from_points(ProjectivePoint((a1, 0, a3, 0)),
                         ProjectivePoint((0, b2, 0, b4)))
    assert l.coords == (a1 * b2, ZERO, a1 * b4, -(a3 * b2), ZERO, a3 * b4)


def test_dependent_points_rejected():
    with pytest.raises(DependentPointsError):
        line_from_points(E1, ProjectivePoint((2, 0, 0, 0)))


def test_point_on_line_examples():
    l = line_from_points(E1, E2)
    assert point_on_line(E1, l)
    assert point_on_line(E2, l)
    assert not point_on_line(E3, l)


def test_point_on_line_family_instance():
    alpha, beta = gr(3), gr(Fraction(1, 2))
    l = line_from_points(ProjectivePoint((alpha, 0, 1, 0)),
                         ProjectivePoint((0, beta, 0, 1)))
    p = ProjectivePoint((1, beta, alpha.inverse(), 1))
    # p = (1, beta, 1/alpha, 1) satisfies x1 = alpha x3 and x2 = beta x4
    assert point_on_line(p, l)


def _random_point(rng):
    while True:
        c = [gr(rng.randint(-4, 4), rng.randint(-2, 2)) for _ in range(4)]
        if any(not x.is_zero() for x in c):
            return ProjectivePoint(c)


def test_pluecker_identity_random():
    rng = random.Random(31)
    n = 0
    while n < 100:
        a, b = _random_point(rng), _random_point(rng)
        try:
            l = line_from_points(a, b)
        except DependentPointsError:
            continue
        n += 1
        m12, m13, m14, m23, m24, m34 = l.coords
        assert (m12 * m34 - m13 * m24 + m14 * m23).is_zero()
        assert point_on_line(a, l) and point_on_line(b, l)


def test_incidence_agrees_with_rank_oracle():
    from qp3.polylinalg import ScalarMatrix

    rng = random.Random(37)
    n = 0
    while n < 100:
        a, b = _random_point(rng), _random_point(rng)
        try:
            l = line_from_points(a, b)
        except DependentPointsError:
            continue
        n += 1
        p = _random_point(rng) if n % 2 else a
        stacked = ScalarMatrix([list(a.coords), list(b.coords), list(p.coords)])
        assert point_on_line(p, l) == (stacked.rank() == 2)


def test_six_lines_generic_gamma_one():
    rep = lines_through_point("generic", gr(1))
    assert rep.ok
    assert rep.total == 6
    assert len(rep.branches) == 2
    for b in rep.branches:
        assert b.proper and b.quotient_dim == 8 and b.distinct
        names = [l.component for l in b.lines]
        assert names[0] == "L1" and set(names[1:5]) == {"L2", "L3", "L4", "L5"}
        assert names[5] in ("L6a", "L6b")


def test_six_lines_generic_gamma_four():
    rep = lines_through_point("generic", gr(4))
    assert rep.ok
    assert rep.total == 6
    assert len(rep.branches) == 4
    for b in rep.branches:
        assert b.proper and b.quotient_dim == 4 and b.distinct
        assert b.lines[0].component in ("L1a", "L1b")


def test_basis_points_infinite():
    for name in ("e1", "e2", "e3", "e4"):
        rep = lines_through_point(name, gr(1))
        assert rep.infinite and rep.total == "infinite"
    rep2 = lines_through_point("e2", gr(1))
    # the pencil through e2 comes from L2
    assert rep2.component_dimensions["L2"][0] == 1
    assert all(d <= 0 for n, (d, _) in rep2.component_dimensions.items()
               if n != "L2")


def test_pencil_component_matches_fixture_table():
    table = load_fixtures().pencil_points
    for comp_name, point_name in table.items():
        rep = lines_through_point(point_name, gr(1))
        assert rep.component_dimensions[comp_name][0] == 1


def test_surface_containment_quartic():
    fx = load_fixtures()
    fam = line_family("L1", gr(1))
    quartic = parse_poly(fx.surfaces["quartic"], X_VARS, gamma=gr(1))
    assert surface_containment(fam, quartic)


def test_surface_containment_quadrics():
    fx = load_fixtures()
    q6a = parse_poly(fx.surfaces["Q6a"], X_VARS)
    q6b = parse_poly(fx.surfaces["Q6b"], X_VARS)
    fam_a = line_family("L6a", gr(1))
    fam_b = line_family("L6b", gr(1))
    assert surface_containment(fam_a, q6a)
    assert not surface_containment(fam_a, q6b)
    assert surface_containment(fam_b, q6b)
    assert not surface_containment(fam_b, q6a)


def test_surface_containment_gamma4():
    fx = load_fixtures()
    qa = parse_poly(fx.surfaces["Qa"], X_VARS)
    qb = parse_poly(fx.surfaces["Qb"], X_VARS)
    assert surface_containment(line_family("L1a", gr(4)), qa)
    assert surface_containment(line_family("L1b", gr(4)), qb)


def test_ruling_lines_examples():
    cat = component_catalog(gr(1))
    l = ruling_lines("Q6a", (1, 0))
    assert l.normalized() == (ZERO, ZERO, ZERO, ZERO, gr(1), ZERO)
    assert line_in_component(l, cat.get("L6a").ideal)
    l2 = ruling_lines("Q6b", (0, 1))
    assert line_in_component(l2, cat.get("L6b").ideal)
    # the (0,1) member of the Q6b ruling is V(x2, x4) = span(e1, e3)
    assert l2 == line_from_points(E1, E3)
    cat4 = component_catalog(gr(4))
    l3 = ruling_lines("Qa", 0)
    assert l3 == line_from_points(E3, ProjectivePoint((0, 1, 0, 1)))
    assert line_in_component(l3, cat4.get("L1a").ideal)
    l4 = ruling_lines("Qb", 0)
    assert line_in_component(l4, cat4.get("L1b").ideal)


def test_ruling_lines_sweep_components():
    cat = component_catalog(gr(1))
    rng = random.Random(41)
    for _ in range(10):
        d, e = rng.randint(-3, 3), rng.randint(-3, 3)
        if d == 0 and e == 0:
            continue
        assert line_in_component(ruling_lines("Q6a", (d, e)), cat.get("L6a").ideal)
        assert line_in_component(ruling_lines("Q6b", (d, e)), cat.get("L6b").ideal)
    cat4 = component_catalog(gr(4))
    for a in (-2, -1, 1, 2, 5, None):
        assert line_in_component(ruling_lines("Qa", a), cat4.get("L1a").ideal)
        assert line_in_component(ruling_lines("Qb", a), cat4.get("L1b").ideal)


def test_ruling_zero_parameter():
    with pytest.raises(ZeroParameterError):
        ruling_lines("Q6a", (0, 0))


def test_l1_family_rational_instances():
    # (alpha^2-1)(beta^2-1) = gamma alpha beta instances land on V(I(L1))
    cases = {
        gr(1): [(gr(0), gr(1)), (gr(0), gr(-1)), (gr(1), gr(0)), (gr(-1), gr(0))],
        gr(4): [(gr(0), gr(1)), (gr(2), gr(Fraction(-1, 3))),
                (gr(3), gr(Fraction(-1, 2))), (gr(5), gr(Fraction(-2, 3)))],
    }
    for g, pairs in cases.items():
        cat = component_catalog(g)
        comp_names = ["L1"] if g == gr(1) else ["L1a", "L1b"]
        ideals = [cat.get(n).ideal for n in comp_names]
        for alpha, beta in pairs:
            lhs = (alpha * alpha - gr(1)) * (beta * beta - gr(1))
            assert lhs == g * alpha * beta
            l = line_from_points(ProjectivePoint((alpha, 0, 1, 0)),
                                 ProjectivePoint((0, beta, 0, 1)))
            if g == gr(1):
                assert line_in_component(l, ideals[0])
            else:
                assert any(line_in_component(l, I) for I in ideals)


def test_pluecker_line_validates_identity():
    with pytest.raises(ValueError):
        PluckerLine((1, 0, 0, 0, 0, 1))  # violates the quadric


def test_lines_through_accepts_projective_point():
    rep = lines_through_point(E2, gr(1))
    assert rep.point == "e2" and rep.infinite


def test_line_check_transcript_serializes():
    import json

    rep = lines_through_point("generic", gr(1))
    doc = rep.to_json_dict()
    text = json.dumps(doc)
    assert json.loads(text)["total"] == 6


def test_line_matrix_type():
    from qp3.plucker import LineMatrix

    lm = LineMatrix(E1, E2)
    assert lm.pluecker() == line_from_points(E1, E2)
    assert lm.contains(E1) and lm.contains(E2)
    assert not lm.contains(E3)
    mid = ProjectivePoint((2, 3, 0, 0))
    assert lm.contains(mid)
    assert point_on_line(mid, lm.pluecker())
    with pytest.raises(DependentPointsError):
        LineMatrix(E1, ProjectivePoint((5, 0, 0, 0)))
