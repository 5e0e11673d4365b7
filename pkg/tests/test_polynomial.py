from fractions import Fraction

import sympy

from hopfquiver import polynomial as P
from hopfquiver.field import FieldSpec

X = sympy.Symbol("X")
Q = FieldSpec(1)
QI = FieldSpec(4)
QW = FieldSpec(3)


def poly(field, *coeffs):
    return [field(Fraction(c)) for c in coeffs]


def test_rational_factorization_matches_sympy():
    p = poly(Q, -6, 11, -6, 1)  # (X-1)(X-2)(X-3)
    roots, rest = P.roots(p)
    assert sorted(r.rational() for r in roots) == [1, 2, 3]
    assert rest == []
    q = poly(Q, 2, 0, 0, 1, 0, 1)  # X^5 + X^3 + 2
    expected = sorted(sympy.degree(f, X) for f, _ in sympy.factor_list(X ** 5 + X ** 3 + 2)[1])
    assert sorted(P.degree(f) for f, _ in P.factor(q)) == expected


def test_gaussian_roots():
    roots, rest = P.roots(poly(QI, 1, 0, 1))
    assert set(roots) == {QI.zeta(), -QI.zeta()}
    assert rest == []
    roots, rest = P.roots(poly(Q, 1, 0, 1))
    assert roots == [] and rest == [2]


def test_cube_roots_of_two_do_not_split_over_eisenstein_field():
    roots, rest = P.roots(poly(QW, -2, 0, 0, 1))
    assert roots == [] and rest == [3]
    roots, rest = P.roots(poly(QW, -1, 0, 0, 1))
    assert len(roots) == 3


def test_factor_multiplicities():
    p = P.mul(P.power(poly(Q, -1, 1), 3), poly(Q, 1, 0, 1))
    facs = P.factor(p)
    assert sorted((P.degree(f), m) for f, m in facs) == [(1, 3), (2, 1)]


def test_ext_gcd_identity():
    a = poly(QI, 1, 0, 1)
    b = poly(QI, -1, 1)
    g, s, t = P.ext_gcd(a, b)
    assert P.trim(P.add(P.mul(s, a), P.mul(t, b))) == P.trim(g)
    assert P.degree(g) == 0
