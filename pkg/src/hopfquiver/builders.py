"""Constructions of the fixture (co)algebras.

Hopf algebras given by generators and relations are built with a small
word-rewriting engine: every relation is a rule ``word -> linear combination
of words`` and the normal words form the basis.  Comultiplication and counit
are extended multiplicatively from the generators, the antipode
anti-multiplicatively.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .coalgebra import Coalgebra
from .errors import DomainError, InvalidDatumError
from .field import CycElem, FieldSpec, order, root_of_unity
from .fileformat import make_hopf
from .hopf import HopfAlgebra

Word = tuple  # tuple[str, ...]
Lin = dict  # {Word: CycElem}


def _add(d: dict, key, c) -> None:
    v = d.get(key)
    v = c if v is None else v + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


class RewritingSystem:
    """Normal forms of words modulo rules ``lhs -> {word: coeff}``."""

    def __init__(self, field: FieldSpec, rules: dict[Word, Lin]):
        self.field = field
        self.rules = rules
        self._lengths = sorted({len(k) for k in rules})
        self._cache: dict[Word, Lin] = {}

    def _find(self, word: Word):
        for pos in range(len(word)):
            for length in self._lengths:
                lhs = word[pos:pos + length]
                if len(lhs) == length and lhs in self.rules:
                    return pos, length
        return None

    def normal_form(self, word: Word) -> Lin:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        hit = self._find(word)
        if hit is None:
            result = {word: self.field.one}
        else:
            pos, length = hit
            prefix, suffix = word[:pos], word[pos + length:]
            result: Lin = {}
            for w, c in self.rules[word[pos:pos + length]].items():
                for w2, c2 in self.normal_form(prefix + w + suffix).items():
                    _add(result, w2, c * c2)
        self._cache[word] = result
        return result

    def product(self, a: Lin, b: Lin) -> Lin:
        out: Lin = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                for w, c in self.normal_form(wa + wb).items():
                    _add(out, w, ca * cb * c)
        return out


def word_name(word: Word) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        k = j - i
        parts.append(word[i] if k == 1 else f"{word[i]}^{k}")
        i = j
    return "".join(parts)


def build_from_presentation(name: str, field: FieldSpec, basis: Sequence[Word],
                            rules: dict[Word, Lin],
                            delta: dict[str, dict[tuple[Word, Word], CycElem]],
                            counit: dict[str, CycElem],
                            antipode: dict[str, Lin]) -> HopfAlgebra:
    rw = RewritingSystem(field, rules)
    index = {w: i for i, w in enumerate(basis)}
    n = len(basis)

    def coords(lin: Lin) -> dict[int, CycElem]:
        out = {}
        for w, c in lin.items():
            if w not in index:
                raise DomainError(f"rewriting produced {word_name(w)!r}, which is not a basis word")
            out[index[w]] = c
        return out

    mul = []
    for i, wi in enumerate(basis):
        for j, wj in enumerate(basis):
            for k, c in coords(rw.normal_form(wi + wj)).items():
                mul.append((i, j, k, c))

    def tensor_mul(a: dict, b: dict) -> dict:
        out: dict = {}
        for (l1, r1), c1 in a.items():
            for (l2, r2), c2 in b.items():
                left = rw.normal_form(l1 + l2)
                right = rw.normal_form(r1 + r2)
                for wl, cl in left.items():
                    for wr, cr in right.items():
                        _add(out, (wl, wr), c1 * c2 * cl * cr)
        return out

    comul = []
    eps = []
    anti = []
    for i, w in enumerate(basis):
        d = {((), ()): field.one}
        e = field.one
        s: Lin = {(): field.one}
        for letter in w:
            d = tensor_mul(d, delta[letter])
            e = e * counit[letter]
            s = rw.product(antipode[letter], s)
        for (wl, wr), c in d.items():
            comul.append((i, index[wl], index[wr], c))
        eps.append(e)
        anti.append(sorted(coords(s).items()))
    unit = [field.one if w == () else field.zero for w in basis]
    if len(index) != n:
        raise DomainError("basis words are not distinct")
    return make_hopf(name, field, [word_name(w) for w in basis], comul, eps, mul, unit, anti)


def _lin(field: FieldSpec, *terms) -> Lin:
    out: Lin = {}
    for c, w in terms:
        _add(out, tuple(w), field(c) if not isinstance(c, CycElem) else c)
    return out


def _tens(field: FieldSpec, *terms) -> dict:
    out: dict = {}
    for c, l, r in terms:
        _add(out, (tuple(l), tuple(r)), field(c) if not isinstance(c, CycElem) else c)
    return out


# --------------------------------------------------------------------------
# Taft-type algebras A(n, d, mu, q)


def check_datum(n: int, d: int, mu: CycElem, q: CycElem) -> None:
    if n < 1:
        raise InvalidDatumError(f"n must be positive, got {n}")
    if d < 2:
        raise InvalidDatumError(f"d must be at least 2, got {d}")
    if n % d:
        raise InvalidDatumError(f"d = {d} does not divide n = {n}")
    if order(q) != d:
        raise InvalidDatumError(f"q = {q} is not a primitive {d}-th root of unity")
    if mu and n == d:
        raise InvalidDatumError("mu must be 0 when o(g) = o(q)")


def build_taft(n: int, d: int, mu, q: CycElem) -> HopfAlgebra:
    """A(n, d, mu, q): g^n = 1, x^d = mu(1 - g^d), xg = q gx, Delta(x) = x(x)1 + g(x)x."""
    field = q.field
    mu = field(mu)
    check_datum(n, d, mu, q)
    rules: dict = {
        ("x", "g"): _lin(field, (q, "gx")),
        ("g",) * n: _lin(field, (1, "")),
        ("x",) * d: _lin(field, (mu, ""), (-mu, "g" * d)),
    }
    basis = [("g",) * a + ("x",) * b for b in range(d) for a in range(n)]
    ginv = "g" * (n - 1)
    delta = {"g": _tens(field, (1, "g", "g")), "x": _tens(field, (1, "x", ""), (1, "g", "x"))}
    counit = {"g": field.one, "x": field.zero}
    # the antipode axiom for Delta(x) = x(x)1 + g(x)x forces S(x) = -g^{-1}x
    antipode = {"g": _lin(field, (1, ginv)), "x": _lin(field, (-1, ginv + "x"))}
    name = f"taft_n{n}_d{d}"
    return build_from_presentation(name, field, basis, rules, delta, counit, antipode)


def build_sweedler() -> HopfAlgebra:
    return build_taft(2, 2, 0, FieldSpec(1)(-1))


# --------------------------------------------------------------------------
# group algebras


def validate_group_table(table: Sequence[Sequence[int]]) -> int:
    """Return the identity index, or raise if the table is not a group."""
    n = len(table)
    if any(len(row) != n or any(not 0 <= x < n for x in row) for row in table):
        raise DomainError("group table must be square with entries in range")
    ids = [e for e in range(n) if all(table[e][a] == a and table[a][e] == a for a in range(n))]
    if not ids:
        raise DomainError("group table has no identity")
    e = ids[0]
    for a in range(n):
        if not any(table[a][b] == e and table[b][a] == e for b in range(n)):
            raise DomainError(f"element {a} has no inverse")
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise DomainError(f"table is not associative at ({a}, {b}, {c})")
    return e


def cyclic_group(n: int) -> tuple[list[list[int]], list[str]]:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    names = ["1" if a == 0 else ("g" if a == 1 else f"g^{a}") for a in range(n)]
    return table, names


def symmetric_group_3() -> tuple[list[list[int]], list[str]]:
    perms = sorted(permutations(range(3)), key=lambda p: (p != (0, 1, 2), p))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms]
    names = ["1" if p == (0, 1, 2) else "s" + "".join(str(x) for x in p) for p in perms]
    return table, names


def _inverse_map(table, e):
    n = len(table)
    return [next(b for b in range(n) if table[a][b] == e) for a in range(n)]


def build_group_algebra(table, names: Sequence[str], field: FieldSpec | None = None,
                        name: str = "group_algebra") -> HopfAlgebra:
    field = field or FieldSpec(1)
    e = validate_group_table(table)
    inv = _inverse_map(table, e)
    n = len(table)
    one = field.one
    comul = [(g, g, g, one) for g in range(n)]
    mul = [(a, b, table[a][b], one) for a in range(n) for b in range(n)]
    unit = [one if g == e else field.zero for g in range(n)]
    antipode = [[(inv[g], one)] for g in range(n)]
    return make_hopf(name, field, list(names), comul, [one] * n, mul, unit, antipode)


def build_dual_group_algebra(table, names: Sequence[str], field: FieldSpec | None = None,
                             name: str = "dual_group_algebra") -> HopfAlgebra:
    field = field or FieldSpec(1)
    e = validate_group_table(table)
    inv = _inverse_map(table, e)
    n = len(table)
    one = field.one
    comul = [(table[h][k], h, k, one) for h in range(n) for k in range(n)]
    mul = [(g, g, g, one) for g in range(n)]
    counit = [one if g == e else field.zero for g in range(n)]
    antipode = [[(inv[g], one)] for g in range(n)]
    return make_hopf(name, field, [f"d_{x}" for x in names], comul, counit, mul, [one] * n, antipode)


# --------------------------------------------------------------------------
# path coalgebras C_d(n)


def build_cdn(n: int, d: int) -> Coalgebra:
    """Paths of length < d on the basic cycle Z_n; Delta(p) = sum p2 (x) p1 over p = p2 p1."""
    if n < 1 or d < 2:
        raise DomainError("C_d(n) needs n >= 1 and d >= 2")
    field = FieldSpec(1)
    paths = [(i, l) for l in range(d) for i in range(n)]
    index = {p: k for k, p in enumerate(paths)}
    names = [f"e{i}" if l == 0 else f"p{i}_{l}" for i, l in paths]
    quads = []
    for k, (i, l) in enumerate(paths):
        for a in range(l + 1):
            quads.append((k, index[((i + a) % n, l - a)], index[(i, a)], field.one))
    counit = [field.one if l == 0 else field.zero for _, l in paths]
    return Coalgebra.from_quadruples(f"C{d}({n})", field, names, quads, counit)


# --------------------------------------------------------------------------
# the 16- and 32-dimensional examples


def build_h16() -> HopfAlgebra:
    """16-dimensional Hopf algebra with coradical k1 + kc + kb + kbc + E (E a 2x2 comatrix coalgebra)."""
    K = FieldSpec(4)
    i = root_of_unity(K, 1)
    half = Fraction(1, 2)
    rules = {
        ("c", "c"): _lin(K, (1, "")),
        ("b", "b"): _lin(K, (1, "")),
        ("b", "c"): _lin(K, (1, "cb")),
        ("x", "x"): _lin(K, (half, ""), (half, "c"), (half, "b"), (-half, "cb")),
        ("x", "c"): _lin(K, (1, "bx")),
        ("x", "b"): _lin(K, (1, "cx")),
        ("y", "y"): {},
        ("y", "c"): _lin(K, (-1, "cy")),
        ("y", "b"): _lin(K, (-1, "by")),
        ("y", "x"): _lin(K, (i, "cxy")),
    }
    basis = [tuple("c" * a + "b" * b + "x" * k + "y" * l)
             for l in range(2) for k in range(2) for a in range(2) for b in range(2)]
    delta = {
        "c": _tens(K, (1, "c", "c")),
        "b": _tens(K, (1, "b", "b")),
        "x": _tens(K, (half, "x", "x"), (half, "bx", "x"), (half, "x", "cx"), (-half, "bx", "cx")),
        "y": _tens(K, (1, "c", "y"), (1, "y", "")),
    }
    counit = {"c": K.one, "b": K.one, "x": K.one, "y": K.zero}
    antipode = {"c": _lin(K, (1, "c")), "b": _lin(K, (1, "b")), "x": _lin(K, (1, "x")),
                "y": _lin(K, (-1, "cy"))}
    return build_from_presentation("h16", K, basis, rules, delta, counit, antipode)


def build_h32(lam=1) -> HopfAlgebra:
    """32-dimensional Hopf algebra whose link quiver has a vertex of in- and out-degree 4."""
    K = FieldSpec(1)
    lam = K(Fraction(lam) if not isinstance(lam, CycElem) else lam)
    if not lam:
        raise DomainError("lambda must be nonzero")
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    P1, P2 = ("p1",), ("p2",)
    rules = {
        ("z", "z"): _lin(K, (1, ())),
        ("y", "y"): _lin(K, (1, ())),
        ("t", "t"): _lin(K, (1, ())),
        ("y", "z"): _lin(K, (1, ("z", "y"))),
        ("t", "z"): _lin(K, (1, ("z", "t"))),
        ("t", "y"): _lin(K, (1, ("y", "t"))),
        ("p1", "z"): _lin(K, (1, ("z", "p1"))),
        ("p1", "y"): _lin(K, (1, ("y", "p1"))),
        ("p1", "t"): _lin(K, (-1, ("t", "p1"))),
        ("p2", "z"): _lin(K, (1, ("z", "p2"))),
        ("p2", "y"): _lin(K, (1, ("y", "p2"))),
        ("p2", "t"): _lin(K, (-1, ("t", "p2"))),
        ("p1", "p1"): _lin(K, (lam, ()), (-lam, ("z",))),
        ("p2", "p2"): _lin(K, (-lam, ()), (lam, ("z",))),
        ("p2", "p1"): _lin(K, (-1, ("p1", "p2"))),
    }
    basis = [("z",) * a + ("y",) * b + ("t",) * c + P1 * e1 + P2 * e2
             for e2 in range(2) for e1 in range(2) for c in range(2) for b in range(2) for a in range(2)]
    t, zt, yt, zyt = ("t",), ("z", "t"), ("y", "t"), ("z", "y", "t")
    delta = {
        "z": _tens(K, (1, "z", "z")),
        "y": _tens(K, (1, "y", "y")),
        "t": _tens(K, (half, t, t), (half, yt, t), (half, t, zt), (-half, yt, zt)),
        "p1": _tens(K, (1, P1, ()), (half, t, P1), (half, zt, P1), (half, yt, P2), (-half, zyt, P2)),
        "p2": _tens(K, (1, P2, ()), (half, yt, P2), (half, zyt, P2), (half, t, P1), (-half, zt, P1)),
    }
    counit = {"z": K.one, "y": K.one, "t": K.one, "p1": K.zero, "p2": K.zero}
    rw = RewritingSystem(K, rules)
    a = _lin(K, (1, t), (1, yt), (1, zt), (-1, zyt))
    b1 = _lin(K, (1, P1), (1, ("z", "p1")), (1, ("y", "p2")), (-1, ("z", "y", "p2")))
    b2 = _lin(K, (1, ("y", "p2")), (1, ("z", "y", "p2")), (1, P1), (-1, ("z", "p1")))
    antipode = {
        "z": _lin(K, (1, "z")),
        "y": _lin(K, (1, "y")),
        "t": _lin(K, (half, t), (half, yt), (half, zt), (-half, zyt)),
        "p1": {w: -quarter * c for w, c in rw.product(a, b1).items()},
        "p2": {w: -quarter * c for w, c in rw.product(a, b2).items()},
    }
    name = "h32" if lam == 1 else f"h32_lambda{lam.rational()}"
    return build_from_presentation(name, K, basis, rules, delta, counit, antipode)


# --------------------------------------------------------------------------
# duals


def build_dual_hopf(h: HopfAlgebra, name: str | None = None) -> HopfAlgebra:
    """H* on the dual basis: structure constants transposed, S* = S^T."""
    comul = [(k, i, j, c) for i, j, k, c in h.mul_quadruples()]
    mul = [(j, k, i, c) for i, j, k, c in h.quadruples()]
    antipode: list[list] = [[] for _ in range(h.dim)]
    for i, terms in enumerate(h.antipode):
        for j, c in terms:
            antipode[j].append((i, c))
    return HopfAlgebra.from_quadruples(name or f"{h.name}_dual", h.field, [f"f_{b}" for b in h.basis_names],
                                       comul, list(h.unit), mul=mul, unit=list(h.counit), antipode=antipode)
