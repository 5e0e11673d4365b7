"""Shared fixture builders (cached) and hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from hypothesis import strategies as st

from hopfquiver import builders
from hopfquiver.field import FieldSpec, root_of_unity


@lru_cache(None)
def h16():
    return builders.build_h16()


@lru_cache(None)
def h32(lam=1):
    return builders.build_h32(lam)


@lru_cache(None)
def sweedler():
    return builders.build_sweedler()


def taft_field(d: int) -> FieldSpec:
    return FieldSpec(d if d >= 3 else 1)


@lru_cache(None)
def taft(n: int, d: int, k: int = 1, mu: int = 0):
    """A(n, d, mu, zeta_d^k) over Q(zeta_d)."""
    field = taft_field(d)
    q = root_of_unity(field, k) if d >= 3 else field(-1)
    return builders.build_taft(n, d, mu, q)


def taft_grid(max_n: int = 6):
    """Every valid (n, d, k, mu) with n <= max_n, mu in {0, 1}."""
    for n in range(1, max_n + 1):
        for d in range(2, n + 1):
            if n % d:
                continue
            for k in range(1, d):
                if gcd(k, d) != 1:
                    continue
                for mu in ([0] if n == d else [0, 1]):
                    yield n, d, k, mu


@lru_cache(None)
def dual_cyclic(n: int):
    table, names = builders.cyclic_group(n)
    return builders.build_dual_group_algebra(table, names, FieldSpec(n), name=f"dual_kZ{n}")


@lru_cache(None)
def dual_s3():
    table, names = builders.symmetric_group_3()
    return builders.build_dual_group_algebra(table, names, name="dual_kS3")


@lru_cache(None)
def group_cyclic(n: int):
    table, names = builders.cyclic_group(n)
    return builders.build_group_algebra(table, names, name=f"kZ{n}")


@lru_cache(None)
def group_s3():
    table, names = builders.symmetric_group_3()
    return builders.build_group_algebra(table, names, name="kS3")


@lru_cache(None)
def cdn(n: int, d: int):
    return builders.build_cdn(n, d)


def hopf_fixtures():
    """(name, thunk) for every Hopf fixture."""
    out = [("h16", h16), ("h32", h32), ("sweedler", sweedler),
           ("dual_kS3", dual_s3), ("kS3", group_s3)]
    out += [(f"dual_kZ{n}", lambda n=n: dual_cyclic(n)) for n in (2, 3, 4)]
    out += [(f"kZ{n}", lambda n=n: group_cyclic(n)) for n in (2, 3)]
    out += [(f"taft{p}", lambda p=p: taft(*p)) for p in taft_grid()]
    return out


def coalgebra_fixtures():
    return [(f"C{d}({n})", lambda n=n, d=d: cdn(n, d)) for n, d in ((1, 2), (2, 2), (3, 2), (2, 3), (3, 3))]


FIELD_ORDERS = (1, 3, 4, 5, 8, 12)

small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def field_elements(draw, field: FieldSpec):
    coeffs = draw(st.lists(small_rationals, min_size=field.degree, max_size=field.degree))
    return field.from_power_coeffs([Fraction(c) for c in coeffs])
