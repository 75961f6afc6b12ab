import random

import pytest

from qp3.gaussian import ONE, ZERO, gr
from qp3.multipoly import Polynomial, VarSet, parse_poly
from qp3.polylinalg import (PolyMatrix, ScalarMatrix, all_minors, minor,
                            poly_exact_div)
from qp3.quadratic_algebra import X_VARS, make_A, relation_matrix
from qp3.line_scheme import build_big_matrix


def _const_matrix(varset, grid):
    return PolyMatrix([[Polynomial.constant(varset, c) for c in row]
                       for row in grid])


def test_identity_minor():
    m = _const_matrix(X_VARS, [[1 if r == c else 0 for c in range(4)]
                               for r in range(4)])
    assert minor(m, (0, 1, 2, 3), (0, 1, 2, 3)) == 1


def test_two_by_two_cofactor():
    vs = X_VARS
    m = PolyMatrix([[Polynomial.variable(vs, "x1"), Polynomial.variable(vs, "x2")],
                    [Polynomial.variable(vs, "x3"), Polynomial.variable(vs, "x4")]])
    assert minor(m, (0, 1), (0, 1)) == parse_poly("x1*x4 - x2*x3", vs)


def test_relation_matrix_minor_in_point_ideal():
    from qp3.groebner import Ideal, buchberger, normal_form
    from qp3.fixtures import load_fixtures

    A = make_A(gr(1))
    M = relation_matrix(A)
    d = minor(M, (0, 1, 2, 3), (0, 1, 2, 3))
    fixture_ideal = Ideal(load_fixtures().parse_point_polys(gr(1)))
    assert normal_form(d, buchberger(fixture_ideal)).is_zero()


def test_all_minors_counts():
    A = make_A(gr(1))
    assert len(all_minors(relation_matrix(A), 4)) == 15
    big = build_big_matrix(A)
    minors = [minor(big, rows, tuple(range(8)))
              for rows in __import__("itertools").combinations(range(10), 8)]
    assert len(minors) == 45
    for f in minors:
        assert f.bidegree(("u1", "u2", "u3", "u4")) == (4, 4)


def test_all_minors_full_size_equals_det():
    vs = VarSet(["x"])
    m = _const_matrix(vs, [[2, 1, 0], [0, 3, 1], [1, 0, 1]])
    out = all_minors(m, 3)
    assert len(out) == 1
    assert out[0] == m.det()


def test_minor_index_errors():
    vs = VarSet(["x"])
    m = _const_matrix(vs, [[1, 2], [3, 4]])
    with pytest.raises(IndexError):
        minor(m, (0, 2), (0, 1))
    with pytest.raises(IndexError):
        all_minors(m, 3)


def test_nullspace_identity_empty():
    m = ScalarMatrix([[ONE if r == c else ZERO for c in range(4)]
                      for r in range(4)])
    assert m.nullspace() == []


def test_nullspace_zero_matrix():
    m = ScalarMatrix([[ZERO] * 5, [ZERO] * 5])
    assert len(m.nullspace()) == 5


def test_relation_coefficient_nullspace_has_ten_vectors():
    A = make_A(gr(1))
    rows = [[t[i][j] for i in range(4) for j in range(4)] for t in A.relations]
    m = ScalarMatrix(rows)
    basis = m.nullspace()
    assert len(basis) == 10
    for v in basis:
        assert all(x.is_zero() for x in m.mul_vector(v))


def test_rank_nullity():
    rng = random.Random(5)
    for _ in range(30):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 5)
        m = ScalarMatrix([[gr(rng.randint(-3, 3), rng.randint(-2, 2))
                           for _ in range(cols)] for _ in range(rows)])
        assert m.rank() + len(m.nullspace()) == cols


def _random_poly_matrix(rng, n, varset):
    grid = []
    for _ in range(n):
        row = []
        for _ in range(n):
            if rng.random() < 0.3:
                row.append(Polynomial.zero(varset))
            else:
                terms = {}
                for _ in range(rng.randint(1, 2)):
                    m = tuple(rng.randint(0, 1) for _ in varset.names)
                    terms[m] = gr(rng.randint(-3, 3), rng.randint(-1, 1))
                row.append(Polynomial(varset, terms))
        grid.append(row)
    return PolyMatrix(grid)


def test_bareiss_agrees_with_subset_expansion():
    rng = random.Random(13)
    vs = VarSet(["x", "y"])
    for n in (2, 3, 4, 5):
        for _ in range(6 if n < 5 else 3):
            m = _random_poly_matrix(rng, n, vs)
            assert m.det() == m.det_bareiss()


def test_row_swap_flips_sign():
    rng = random.Random(17)
    vs = VarSet(["x", "y"])
    for _ in range(10):
        m = _random_poly_matrix(rng, 3, vs)
        rows = m.entries
        swapped = PolyMatrix([rows[1], rows[0], rows[2]])
        assert swapped.det() == -m.det()


def test_poly_exact_div():
    f = parse_poly("x1^2 - x2^2", X_VARS)
    g = parse_poly("x1 - x2", X_VARS)
    assert poly_exact_div(f, g) == parse_poly("x1 + x2", X_VARS)
    with pytest.raises(ValueError):
        poly_exact_div(parse_poly("x1^2 + 1", X_VARS), g)
