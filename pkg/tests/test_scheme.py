import pytest

from zetalab import (
    BudgetExceeded,
    FieldTower,
    NotRational,
    ProjectiveScheme,
    SchemaError,
    WittVector,
    count_points,
    count_vector,
    hasse_weil_zeta,
    witt_add,
)
from zetalab.scheme import parse_equation, representative_count
from zetalab.zeta import zeta_from_traces


def make_scheme(p, nvars, equations=(), r=1, dim=None):
    return ProjectiveScheme.from_dict(
        {
            "p": p,
            "r": r,
            "vars": [f"x{i}" for i in range(nvars)],
            "equations": list(equations),
            "dim": dim,
        }
    )


ELLIPTIC = ProjectiveScheme.from_dict(
    {
        "p": 5,
        "vars": ["x", "y", "z"],
        "equations": ["y^2*z - x^3 - x*z^2 - z^3"],
        "label": "E/F5",
    }
)


def test_parse_equation():
    mono = parse_equation("y^2*z - x^3 - x*z^2 - z^3", ("x", "y", "z"))
    assert mono == {(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): -1, (0, 0, 3): -1}


def test_parse_with_coefficients_and_parens():
    mono = parse_equation("2*x*(x + 3*y) - y^2", ("x", "y"))
    assert mono == {(2, 0): 2, (1, 1): 6, (0, 2): -1}


def test_parse_unknown_variable():
    with pytest.raises(SchemaError):
        parse_equation("x + w", ("x", "y"))


def test_inhomogeneous_rejected():
    with pytest.raises(SchemaError):
        make_scheme(2, 2, ["x0^2 + x1"])


def test_p1_counts():
    p1 = make_scheme(2, 2)
    tower = FieldTower(2)
    assert [count_points(p1, tower, n) for n in range(1, 7)] == [3, 5, 9, 17, 33, 65]


def test_single_point_hypersurface():
    x = make_scheme(2, 2, ["x0"])
    tower = FieldTower(2)
    assert [count_points(x, tower, n) for n in range(1, 4)] == [1, 1, 1]


def test_projective_space_formula():
    for q_base, r in ((2, 1), (3, 1), (5, 1)):
        tower = FieldTower(q_base, r)
        for nvars in (2, 3):
            scheme = make_scheme(q_base, nvars, r=r)
            for n in range(1, 4):
                q = tower.q**n
                assert count_points(scheme, tower, n) == (q**nvars - 1) // (q - 1)


def test_elliptic_counts():
    tower = FieldTower(5)
    n1 = count_points(ELLIPTIC, tower, 1)
    n2 = count_points(ELLIPTIC, tower, 2)
    assert n1 == 9
    # alpha + beta = -3, alpha*beta = 5 => alpha^2 + beta^2 = 9 - 10 = -1
    assert n2 == 5**2 + 1 - (-1) == 27


def test_budget_guard():
    p1 = make_scheme(2, 2)
    with pytest.raises(BudgetExceeded):
        count_points(p1, FieldTower(2), 5, budget=10)
    assert representative_count(2**5, 2) == 33


def test_parallel_matches_sequential():
    tower = FieldTower(5)
    seq = count_points(ELLIPTIC, tower, 2, workers=1)
    par = count_points(ELLIPTIC, tower, 2, workers=2)
    assert seq == par == 27


def test_hasse_weil_p1():
    report = hasse_weil_zeta(make_scheme(2, 2, dim=1), 6)
    assert report.counts.counts == (3, 5, 9, 17, 33, 65)
    assert report.euler_characteristic == 2
    assert report.sign == 1
    assert str(report.rational) == "(1) / (1 - 3*t + 2*t^2)"


def test_hasse_weil_p2():
    report = hasse_weil_zeta(make_scheme(2, 3, dim=2), 8)
    assert report.euler_characteristic == 3
    # 1/((1-t)(1-2t)(1-4t)) expanded
    assert [int(c) for c in report.rational.den.coeffs] == [1, -7, 14, -8]
    assert report.rational.num.degree == 0


def test_hasse_weil_elliptic():
    report = hasse_weil_zeta(ELLIPTIC, 4)
    assert report.counts.counts[:2] == (9, 27)
    assert [int(c) for c in report.rational.num.coeffs] == [1, 3, 5]
    assert report.euler_characteristic == 0
    assert report.sign == 1


def test_not_rational_when_precision_too_low():
    # m = 5 allows denominator degree at most 2, too small for the
    # degree-3 zeta of P2, and the extra coefficients rule out any fit
    with pytest.raises(NotRational):
        hasse_weil_zeta(make_scheme(2, 3, dim=2), 5)


def test_dimension_inferred_without_hint():
    report = hasse_weil_zeta(make_scheme(2, 2), 6)
    assert report.dimension == 1


def test_disjoint_union_is_witt_addition():
    # counts of a disjoint union add, so the zetas multiply
    tower = FieldTower(2)
    p1 = make_scheme(2, 2)
    point = make_scheme(2, 2, ["x0"])
    m = 5
    c_p1 = count_vector(p1, tower, m)
    c_pt = count_vector(point, tower, m)
    union_counts = [a + b for a, b in zip(c_p1.counts, c_pt.counts)]
    z_union = WittVector(zeta_from_traces(union_counts, m))
    z_p1 = WittVector(zeta_from_traces(list(c_p1.counts), m))
    z_pt = WittVector(zeta_from_traces(list(c_pt.counts), m))
    assert z_union == witt_add(z_p1, z_pt)
