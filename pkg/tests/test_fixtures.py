from qp3.gaussian import gr
from qp3.multipoly import parse_poly
from qp3.quadratic_algebra import M_VARS, X_VARS
from qp3.fixtures import load_fixtures


def test_counts():
    fx = load_fixtures()
    assert len(fx.point_scheme_polys) == 15
    assert len(fx.line_scheme_polys) == 46


def test_first_point_fixture():
    fx = load_fixtures()
    f = parse_poly(fx.point_scheme_polys[0], X_VARS, gamma=gr(1))
    assert f == parse_poly("x1^2*x2^2 + x3^2*x4^2", X_VARS)


def test_first_line_fixture_is_pluecker_polynomial():
    fx = load_fixtures()
    P = parse_poly(fx.line_scheme_polys[0], M_VARS, gamma=gr(1))
    assert P == parse_poly("M12*M34 - M13*M24 + M14*M23", M_VARS)


def test_second_line_fixture_value():
    fx = load_fixtures()
    f = parse_poly(fx.line_scheme_polys[1], M_VARS, gamma=gr(1))
    assert f == parse_poly("2*M13*M14*M23*M24", M_VARS)


def test_degrees_and_homogeneity():
    fx = load_fixtures()
    for gv in (1, 2):
        for text in fx.point_scheme_polys:
            f = parse_poly(text, X_VARS, gamma=gr(gv))
            assert f.is_homogeneous() and f.degree() == 4
        for k, text in enumerate(fx.line_scheme_polys):
            f = parse_poly(text, M_VARS, gamma=gr(gv))
            assert f.is_homogeneous()
            assert f.degree() == (2 if k == 0 else 4)


def test_component_generator_data_present():
    fx = load_fixtures()
    assert set(fx.component_generators) == {"L1", "L2", "L3", "L4", "L5",
                                            "L6a", "L6b"}
    assert set(fx.component_generators_gamma4) == {"L1a", "L1b"}
    assert {"quartic", "Q6a", "Q6b", "Qa", "Qb"} <= set(fx.surfaces)
    assert set(fx.planar_curves) == {"L2", "L3", "L4", "L5"}
