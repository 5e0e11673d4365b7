"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, z, ..., z^(phi(m)-1) of the m-th
cyclotomic polynomial, with ``fractions.Fraction`` coefficients.  Every value
is immutable and always kept fully reduced, so equality is coefficient-wise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import ConfigurationError, FieldMismatchError, MalformedInputError

DEFAULT_MAX_CYCLOTOMIC = 512

Scalar = Union[int, Fraction, "CycElem"]


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficients low -> high
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    dd = len(den) - 1
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for j, dj in enumerate(den):
                num[k - dd + j] -= c * dj
    rem = num[:dd] or [0]
    return q, rem


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_int(poly, list(_cyclotomic(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def cyclotomic_polynomial(m: int, max_order: int = DEFAULT_MAX_CYCLOTOMIC) -> tuple[int, ...]:
    """Integer coefficients (lowest degree first) of the m-th cyclotomic polynomial.

    Computed by exact division of x^m - 1 by Phi_d for every proper divisor d.
    """
    if m < 1:
        raise ConfigurationError(f"cyclotomic order must be positive, got {m}")
    if m > max_order:
        raise ConfigurationError(f"cyclotomic order {m} exceeds the configured cap {max_order}")
    return _cyclotomic(m)


def euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


class FieldSpec:
    """The field Q(zeta_m).  Instances are interned per order."""

    __slots__ = ("cyclotomic_order", "degree", "modulus", "_reduce_table", "zero", "one")

    _cache: dict[int, "FieldSpec"] = {}

    def __new__(cls, cyclotomic_order: int, max_order: int = DEFAULT_MAX_CYCLOTOMIC):
        modulus = cyclotomic_polynomial(cyclotomic_order, max_order)
        cached = cls._cache.get(cyclotomic_order)
        if cached is not None:
            return cached
        self = super().__new__(cls)
        self.cyclotomic_order = cyclotomic_order
        self.modulus = modulus
        self.degree = len(modulus) - 1
        deg = self.degree
        # z^k reduced, for deg <= k <= 2*deg - 2
        table = []
        cur = [0] * deg
        cur_top = [-c for c in modulus[:deg]]  # z^deg
        cur = cur_top
        for _ in range(deg, 2 * deg - 1):
            table.append(tuple(cur))
            top = cur[-1]
            shifted = [0] + cur[:-1]
            cur = [shifted[j] + top * cur_top[j] for j in range(deg)]
        self._reduce_table = tuple(table)
        self.zero = CycElem(self, (Fraction(0),) * deg)
        self.one = CycElem(self, (Fraction(1),) + (Fraction(0),) * (deg - 1))
        cls._cache[cyclotomic_order] = self
        return self

    def __getnewargs__(self):
        return (self.cyclotomic_order,)

    def __repr__(self) -> str:
        return f"FieldSpec({self.cyclotomic_order})"

    def __reduce__(self):
        return (FieldSpec, (self.cyclotomic_order,))

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def __call__(self, value: Scalar) -> "CycElem":
        """Coerce an int, Fraction or CycElem of this field into the field."""
        if isinstance(value, CycElem):
            if value.field is not self:
                raise FieldMismatchError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, (int, Fraction)):
            return CycElem(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))
        if isinstance(value, str):
            return CycElem(self, (parse_rational(value),) + (Fraction(0),) * (self.degree - 1))
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def from_power_coeffs(self, coeffs: Sequence[int | Fraction]) -> "CycElem":
        """Build sum c_k z^k for an arbitrary-length coefficient list (reduced here)."""
        coeffs = [Fraction(c) for c in coeffs]
        return CycElem(self, self._reduce(coeffs))

    def zeta(self, k: int = 1) -> "CycElem":
        return root_of_unity(self, k)

    def _reduce(self, coeffs: list) -> tuple:
        deg = self.degree
        if len(coeffs) <= deg:
            return tuple(coeffs) + (Fraction(0),) * (deg - len(coeffs))
        m = self.cyclotomic_order
        if len(coeffs) > 2 * deg - 1:
            # fold with z^m = 1 first
            folded = [Fraction(0)] * m
            for k, c in enumerate(coeffs):
                if c:
                    folded[k % m] += c
            coeffs = folded
            if len(coeffs) <= deg:
                return tuple(coeffs) + (Fraction(0),) * (deg - len(coeffs))
            if len(coeffs) > 2 * deg - 1:
                # generic long division by the monic modulus
                mod = self.modulus
                coeffs = list(coeffs)
                for k in range(len(coeffs) - 1, deg - 1, -1):
                    c = coeffs[k]
                    if c:
                        for j in range(deg + 1):
                            coeffs[k - deg + j] -= c * mod[j]
                return tuple(coeffs[:deg])
        out = list(coeffs[:deg])
        table = self._reduce_table
        for k in range(deg, len(coeffs)):
            c = coeffs[k]
            if c:
                row = table[k - deg]
                for j in range(deg):
                    if row[j]:
                        out[j] += c * row[j]
        return tuple(out)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInputError(f"not a rational literal: {text!r}") from exc
    return value


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class CycElem:
    """An element of Q(zeta_m), immutable and hashable."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: FieldSpec, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    # ---- coercion helpers -------------------------------------------------
    def _other(self, other) -> "CycElem | None":
        if isinstance(other, CycElem):
            if other.field is not self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    # ---- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) == 1:
            return CycElem(self.field, (a[0] + b[0],))
        return CycElem(self.field, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) == 1:
            return CycElem(self.field, (a[0] - b[0],))
        return CycElem(self.field, tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycElem(self.field, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycElem(self.field, tuple(x * other for x in self.coeffs))
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) == 1:
            return CycElem(self.field, (a[0] * b[0],))
        n = len(a)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycElem(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inv(self) -> "CycElem":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_m."""
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        a = self.coeffs
        if len(a) == 1:
            return CycElem(self.field, (1 / a[0],))
        # extended Euclid in Q[x]: find s with s*a = 1 mod Phi
        r0 = [Fraction(c) for c in self.field.modulus]
        r1 = list(a)
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        _trim(r1)
        while len(r1) > 1 or r1[0] != 0:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
            if len(r1) == 1 and r1[0] == 0:
                break
        # r0 is a nonzero constant since Phi is irreducible
        c = r0[0]
        assert len(r0) == 1 and c != 0
        s = [x / c for x in s0]
        return CycElem(self.field, self.field._reduce(s))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycElem(self.field, tuple(x / other for x in self.coeffs))
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ---- comparisons ------------------------------------------------------
    def __bool__(self) -> bool:
        for c in self.coeffs:
            if c:
                return True
        return False

    def __eq__(self, other) -> bool:
        if isinstance(other, CycElem):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            c = self.coeffs
            return c[0] == other and not any(c[1:])
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            c = self.coeffs
            if not any(c[1:]):
                h = hash(c[0])
            else:
                h = hash((self.field.cyclotomic_order, c))
            self._hash = h
        return h

    # ---- inspection -------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def size(self) -> int:
        """Bit size of the representation; used for pivot selection."""
        return sum(c.numerator.bit_length() + c.denominator.bit_length() for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [_fmt_rational(c) for c in self.coeffs]

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(_fmt_rational(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{_fmt_rational(c)}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _qpoly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _qpoly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])


def _qpoly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    _trim(a)
    b = _trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    rem = a[: len(b) - 1] or [Fraction(0)]
    return _trim(q), _trim(rem)


def root_of_unity(field: FieldSpec, k: int) -> CycElem:
    """zeta_m^k in canonical form (k may be negative)."""
    m = field.cyclotomic_order
    k %= m
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    return CycElem(field, field._reduce(coeffs))


def order(e: CycElem) -> int | None:
    """Multiplicative order of ``e`` if it is a root of unity, else ``None``."""
    if not e:
        return None
    m = e.field.cyclotomic_order
    bound = m if m % 2 == 0 else 2 * m  # roots of unity in Q(zeta_m) have order | lcm(2, m)
    if e ** bound != 1:
        return None
    power = e
    for k in range(1, bound + 1):
        if power == 1:
            return k
        power = power * e
    return None  # pragma: no cover


def elem_from_json(field: FieldSpec, data) -> CycElem:
    """Parse the serialized form: a list of phi(m) rational strings.

    A bare string or integer is accepted as a rational shorthand.
    """
    if isinstance(data, bool):
        raise MalformedInputError(f"invalid coefficient {data!r}")
    if isinstance(data, int):
        return field(data)
    if isinstance(data, str):
        return field(parse_rational(data))
    if isinstance(data, list):
        if len(data) != field.degree:
            raise MalformedInputError(
                f"coefficient {data!r} has length {len(data)}, expected {field.degree}")
        coeffs = []
        for item in data:
            if isinstance(item, bool) or not isinstance(item, (str, int)):
                raise MalformedInputError(f"invalid coefficient entry {item!r}")
            coeffs.append(parse_rational(str(item)))
        return CycElem(field, tuple(coeffs))
    raise MalformedInputError(f"invalid coefficient {data!r}")


def elem_to_json(e: CycElem) -> list[str]:
    return e.to_json()


def field_sum(items: Iterable[CycElem], field: FieldSpec) -> CycElem:
    total = field.zero
    for x in items:
        total = total + x
    return total
