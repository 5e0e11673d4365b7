"""Univariate polynomials over Q(zeta_m) and their factorization.

Polynomials are plain lists of :class:`CycElem`, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).

Factorization over the cyclotomic field follows Trager's norm method: the
norm of a square-free polynomial is a rational polynomial, factored over Q
with sympy; gcds with the rational factors recover the factors over the
field.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy

from .field import CycElem, FieldSpec

Poly = list  # list[CycElem]


def trim(p: Poly) -> Poly:
    while p and not p[-1]:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def sub(a: Poly, b: Poly) -> Poly:
    return add(a, [-c for c in b])


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    field = a[0].field
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return trim(out)


def scale(p: Poly, c) -> Poly:
    return trim([x * c for x in p])


def monic(p: Poly) -> Poly:
    if not p:
        return p
    lead_inv = p[-1].inv()
    return [x * lead_inv for x in p]


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    if len(a) < len(b):
        return [], trim(a)
    field = b[0].field
    lead_inv = b[-1].inv()
    q = [field.zero] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * lead_inv
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                if bj:
                    a[k + j] = a[k + j] - c * bj
    return trim(q), trim(a[: len(b) - 1])


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def derivative(p: Poly) -> Poly:
    return trim([p[k] * k for k in range(1, len(p))])


def squarefree_part(p: Poly) -> Poly:
    g = gcd(p, derivative(p))
    q, r = divmod_poly(p, g)
    assert not r
    return monic(q)


def evaluate(p: Poly, x):
    field = x.field if isinstance(x, CycElem) else p[0].field
    acc = field.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


def taylor_shift(p: Poly, s) -> Poly:
    """p(x + s)."""
    if not p:
        return []
    out: Poly = []
    lin = [s, p[0].field.one]
    for c in reversed(p):
        out = add(mul(out, lin), [c])
    return out


@lru_cache(maxsize=None)
def _sympy_symbols():
    return sympy.symbols("x y")


def _to_sympy_bivariate(p: Poly):
    x, y = _sympy_symbols()
    expr = 0
    for k, c in enumerate(p):
        for j, q in enumerate(c.coeffs):
            if q:
                expr += sympy.Rational(q.numerator, q.denominator) * y**j * x**k
    return sympy.Poly(expr, x, y, domain="QQ")


def _norm(p: Poly, field: FieldSpec) -> sympy.Poly:
    x, y = _sympy_symbols()
    if field.degree == 1:
        expr = sum(sympy.Rational(c.coeffs[0].numerator, c.coeffs[0].denominator) * x**k
                   for k, c in enumerate(p))
        return sympy.Poly(expr, x, domain="QQ")
    phi = sympy.Poly(sum(int(c) * y**j for j, c in enumerate(field.modulus)), y, x, domain="QQ")
    big = _to_sympy_bivariate(p)
    big = sympy.Poly(big.as_expr(), y, x, domain="QQ")
    res = sympy.resultant(phi, big, y)
    return sympy.Poly(res, x, domain="QQ")


def _from_sympy_rational(poly: sympy.Poly, field: FieldSpec) -> Poly:
    coeffs = list(reversed(poly.all_coeffs()))
    out = []
    for c in coeffs:
        c = sympy.Rational(c)
        out.append(field(Fraction(int(c.p), int(c.q))))
    return trim(out)


def factor_squarefree(p: Poly) -> list[Poly]:
    """Monic irreducible factors over the field of a square-free polynomial."""
    p = monic(trim(list(p)))
    if len(p) <= 2:
        return [p] if len(p) == 2 else []
    field = p[0].field
    if all(c.is_rational() for c in p):
        rational = _rational_factors(p, field)
        if field.degree == 1:
            return _sorted_factors(rational)
        out: list[Poly] = []
        for f in rational:
            out.extend(_trager(f, field))
        return _sorted_factors(out)
    return _sorted_factors(_trager(p, field))


def _rational_factors(p: Poly, field: FieldSpec) -> list[Poly]:
    x, _ = _sympy_symbols()
    expr = sum(sympy.Rational(c.coeffs[0].numerator, c.coeffs[0].denominator) * x**k
               for k, c in enumerate(p))
    out = []
    for fac, _m in sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))[1]:
        out.append(monic(_from_sympy_rational(sympy.Poly(fac, x), field)))
    return out


def _trager(p: Poly, field: FieldSpec) -> list[Poly]:
    if len(p) <= 2:
        return [p]
    zeta = field.zeta(1)
    for s in range(0, 64):
        shift = zeta * s
        shifted = taylor_shift(p, -shift)  # p(x - s*zeta)
        norm = _norm(shifted, field)
        if sympy.degree(sympy.gcd(norm, norm.diff())) > 0:
            continue
        factors = []
        for fac, _mult in sympy.factor_list(norm)[1]:
            g = gcd(shifted, _from_sympy_rational(sympy.Poly(fac, _sympy_symbols()[0]), field))
            if len(g) > 1:
                factors.append(monic(taylor_shift(g, shift)))  # undo the shift
        return factors
    raise RuntimeError("no square-free norm found")  # pragma: no cover


def _sorted_factors(factors: list[Poly]) -> list[Poly]:
    return sorted(factors, key=lambda f: (len(f), [c.to_json() for c in f]))


def roots(p: Poly) -> tuple[list[CycElem], list[int]]:
    """Roots in the field of the square-free part of ``p``.

    Returns the roots (deterministic order) and the degrees of the remaining
    irreducible factors that have no root.
    """
    p = trim(list(p))
    if len(p) <= 1:
        return [], []
    sf = squarefree_part(p)
    found, others = [], []
    for f in factor_squarefree(sf):
        if len(f) == 2:
            found.append(-f[0])
        else:
            others.append(len(f) - 1)
    return found, others


def factor(p: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities."""
    p = monic(trim(list(p)))
    if len(p) <= 1:
        return []
    out = []
    for f in factor_squarefree(squarefree_part(p)):
        k = 0
        while True:
            q, r = divmod_poly(p, f)
            if r:
                break
            p, k = q, k + 1
        out.append((f, k))
    return out


def ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with s a + t b = g, g the monic gcd."""
    r0, r1 = trim(list(a)), trim(list(b))
    field = (r0 or r1)[0].field
    s0, s1 = [field.one], []
    t0, t1 = [], [field.one]
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    inv = r0[-1].inv()
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def power(p: Poly, k: int) -> Poly:
    out = [p[0].field.one] if p else []
    for _ in range(k):
        out = mul(out, p)
    return out
