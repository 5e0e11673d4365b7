"""Wedderburn decomposition of the dual of a cosemisimple coalgebra.

The dual algebra of the coradical is split semisimple over the working field
(or a NON_SPLIT error is raised).  Each simple block M_r(K) is cut out by a
central primitive idempotent; matrix units of the block are obtained from a
minimal left ideal, and the dual basis of the matrix units inside the
coalgebra is a basic multiplicative matrix of the corresponding simple
subcoalgebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from math import isqrt
from typing import Sequence

from . import polynomial
from .algebra import Algebra, trace_form_radical
from .coalgebra import Coalgebra, tensor_product
from .errors import InternalError, NonSplitError
from .field import CycElem
from .linalg import (Subspace, Vector, inverse, linear_combination, minimal_dependency,
                     unit_vector)

SEARCH_BUDGET = 64


@dataclass(frozen=True)
class SimpleBlock:
    """A simple subcoalgebra with a basic multiplicative matrix of ambient vectors."""

    index: int
    r: int
    space: Subspace
    matrix: tuple  # r x r tuple of ambient vectors (tuples)
    label: str

    @property
    def dim(self) -> int:
        return self.r * self.r

    def entry(self, i: int, j: int) -> Vector:
        return list(self.matrix[i][j])

    def character(self) -> Vector:
        n = self.space.ambient_dim
        field = self.space.field
        out = [field.zero] * n
        for i in range(self.r):
            out = [a + b for a, b in zip(out, self.matrix[i][i])]
        return out


@dataclass(frozen=True)
class SimpleDecomp:
    blocks: tuple
    containing_space: Subspace

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i: int) -> SimpleBlock:
        return self.blocks[i]

    @property
    def dims(self) -> list[int]:
        return [b.dim for b in self.blocks]

    def labels(self) -> list[str]:
        return [b.label for b in self.blocks]

    def by_label(self, label: str) -> SimpleBlock:
        for b in self.blocks:
            if b.label == label:
                return b
        raise KeyError(label)

    def block_of_space(self, space: Subspace) -> int | None:
        for b in self.blocks:
            if b.space == space:
                return b.index
        return None


# --------------------------------------------------------------------------
# radical and central idempotents


def jacobson_radical(alg: Algebra, check: bool = False) -> Subspace:
    """Radical via the trace form; ``check`` asserts it is a nilpotent two-sided ideal."""
    rad = trace_form_radical(alg)
    if check and rad.dim:
        for r in rad.basis:
            for i in range(alg.dim):
                e = unit_vector(alg.field, alg.dim, i)
                if not (rad.contains(alg.multiply(e, r)) and rad.contains(alg.multiply(r, e))):
                    raise InternalError("trace-form radical is not an ideal")
        power = rad
        for _ in range(alg.dim):
            power = Subspace.span(alg.field, alg.dim,
                                  [alg.multiply(u, v) for u in power.basis for v in rad.basis])
            if power.dim == 0:
                break
        if power.dim:
            raise InternalError("trace-form radical is not nilpotent")
    return rad


def _moment_combination(vectors: Sequence[Sequence[CycElem]], s: int, alg: Algebra) -> Vector:
    coeffs = [alg.field(s ** j) for j in range(len(vectors))]
    return linear_combination(coeffs, vectors, alg.field, alg.dim)


def central_primitive_idempotents(alg: Algebra) -> list[Vector]:
    """Central primitive idempotents of a split semisimple algebra."""
    center = alg.center()
    if center.dim == 1:
        return [list(alg.unit)]
    basis = center.vectors()
    for s in count(1):
        z = _moment_combination(basis, s, alg)
        minpoly = alg.minimal_polynomial(z)
        if len(minpoly) - 1 == center.dim:
            break
    found, rootless = polynomial.roots(minpoly)
    if rootless:
        raise NonSplitError(
            f"central element has an irreducible factor of degree {max(rootless)} "
            f"over Q(zeta_{alg.field.cyclotomic_order})", degree=max(rootless))
    field = alg.field
    idempotents = []
    for i, lam in enumerate(found):
        num = [field.one]
        den = field.one
        for j, mu in enumerate(found):
            if j != i:
                num = polynomial.mul(num, [-mu, field.one])
                den = den * (lam - mu)
        num = polynomial.scale(num, den.inv())
        idempotents.append(alg.evaluate_polynomial(num, z))
    return idempotents


# --------------------------------------------------------------------------
# matrix units


def _corner_evaluate(alg: Algebra, e: Vector, poly: Sequence[CycElem], y: Vector) -> Vector:
    """poly(y) inside the corner algebra with unit e."""
    acc = [alg.field.zero] * alg.dim
    for c in reversed(poly):
        acc = alg.multiply(acc, y)
        acc = [a + c * x for a, x in zip(acc, e)]
    return acc


def _corner_minpoly(alg: Algebra, e: Vector, y: Vector) -> list[CycElem]:
    def powers():
        p = list(e)
        while True:
            yield p
            p = alg.multiply(p, y)

    coeffs = minimal_dependency(powers(), alg.field)
    assert coeffs is not None
    return coeffs


def _split_by(alg: Algebra, e: Vector, y: Vector, others: Sequence[Vector]) -> Vector | None:
    """A nontrivial idempotent below e built from y in eBe, or None.

    Coprime factors of the minimal polynomial give an idempotent by the
    Chinese remainder theorem.  A nilpotent part N = g(y) of a pure power g^a
    is multiplied by the other candidates until the product is singular but
    not nilpotent, which then has coprime factors x and something else.
    """
    mp = _corner_minpoly(alg, e, y)
    facs = polynomial.factor(mp)
    if len(facs) >= 2:
        f1, a = facs[0]
        fa = polynomial.power(f1, a)
        h, rem = polynomial.divmod_poly(mp, fa)
        assert not rem
        _, s, _ = polynomial.ext_gcd(h, fa)
        u = polynomial.divmod_poly(polynomial.mul(s, h), mp)[1]
        return _corner_evaluate(alg, e, u, y)
    if len(facs) == 1 and facs[0][1] >= 2:
        nil = _corner_evaluate(alg, e, facs[0][0], y)
        for c in others:
            y2 = alg.multiply(nil, c)
            if not any(y2):
                continue
            mp2 = _corner_minpoly(alg, e, y2)
            if len(polynomial.factor(mp2)) >= 2:
                return _split_by(alg, e, y2, ())
    return None


def _idempotent_rank(alg: Algebra, e: Vector, r: int) -> int:
    n = alg.dim
    ideal = Subspace.span(alg.field, n, [alg.multiply(unit_vector(alg.field, n, i), e) for i in range(n)])
    return ideal.dim // r


def primitive_idempotent(alg: Algebra, central: Vector, r: int, candidates: Sequence[Vector]) -> Vector:
    """A primitive idempotent below a central primitive idempotent of a block M_r(K)."""
    field = alg.field
    e = list(central)
    k = r
    while k > 1:
        ys = [alg.multiply(alg.multiply(e, c), e) for c in candidates]
        ys = [y for y in ys if any(y)]
        pool = ys + [alg.multiply(a, b) for a in ys for b in ys]
        found = None
        for y in pool:
            found = _split_by(alg, e, y, ys)
            if found is not None:
                break
        if found is None:
            for s in range(2, SEARCH_BUDGET + 2):
                found = _split_by(alg, e, _moment_combination(ys, s, alg), ys)
                if found is not None:
                    break
        if found is None:
            raise NonSplitError(
                f"no splitting idempotent found in a block of dimension {r * r} "
                f"over Q(zeta_{field.cyclotomic_order})")
        rest = [a - b for a, b in zip(e, found)]
        kf = _idempotent_rank(alg, found, r)
        if not 0 < kf < k:
            raise InternalError("idempotent splitting did not reduce the rank")
        e, k = (found, kf) if kf <= k - kf else (rest, k - kf)
    return e


def matrix_units(alg: Algebra, central: Vector, candidates: Sequence[Vector] = (),
                 reverse: bool = False) -> tuple[int, list[list[Vector]]]:
    """Matrix units e_ij of the simple block ``central * alg``.

    ``reverse`` walks the candidates in the opposite order, which in general
    gives a different primitive idempotent.
    """
    field = alg.field
    n = alg.dim
    block = Subspace.span(field, n, [alg.multiply(central, unit_vector(field, n, i)) for i in range(n)])
    r = isqrt(block.dim)
    if r * r != block.dim:
        raise NonSplitError(f"simple block of dimension {block.dim} is not a full matrix algebra",
                            degree=block.dim)
    block_basis = block.vectors()
    cands = [alg.multiply(central, c) for c in candidates] + block_basis
    if reverse:
        cands.reverse()
    e = primitive_idempotent(alg, central, r, cands)
    ideal = Subspace.span(field, n, [alg.multiply(b, e) for b in block_basis])
    assert ideal.dim == r
    # rho: block -> End(L), vectorized in L coordinates
    lbasis = ideal.basis
    rho_cols = []
    for t in block_basis:
        cols = [ideal.coordinates(alg.multiply(t, l)) for l in lbasis]
        rho_cols.append([cols[j][i] for i in range(r) for j in range(r)])
    rho = [[rho_cols[a][p] for a in range(r * r)] for p in range(r * r)]
    rho_inv = inverse(rho, field)
    units = []
    for i in range(r):
        row = []
        for j in range(r):
            coeffs = [rho_inv[a][i * r + j] for a in range(r * r)]
            row.append(linear_combination(coeffs, block_basis, field, n))
        units.append(row)
    return r, units


# --------------------------------------------------------------------------
# simple subcoalgebras


def _label(coalg: Coalgebra, r: int, vec: Sequence[CycElem], fallback: str) -> str:
    unit = getattr(coalg, "unit", None)
    if r == 1 and unit is not None and list(vec) == list(unit):
        return "k1"
    if r == 1:
        nz = [i for i, x in enumerate(vec) if x]
        if len(nz) == 1 and vec[nz[0]] == 1:
            return "k" + coalg.basis_names[nz[0]]
    return fallback


def decompose(coalg: Coalgebra, space: Subspace, reverse: bool = False) -> SimpleDecomp:
    """Simple subcoalgebras of a cosemisimple subcoalgebra ``space``."""
    sub = coalg.restrict(space)
    dual = sub.dual_algebra()
    if trace_form_radical(dual).dim:
        raise InternalError("decomposed subcoalgebra is not cosemisimple")
    field = coalg.field
    s = sub.dim
    # restrictions of the ambient coordinate functionals, as elements of the dual
    functionals = [[b[j] for b in space.basis] for j in range(coalg.dim)]
    raw = []
    for e in central_primitive_idempotents(dual):
        r, units = matrix_units(dual, e, functionals, reverse=reverse)
        raw.append((r, units))
    # comatrix elements: dual basis of all matrix units together
    rows = [u for _, units in raw for row in units for u in row]
    pairing_inv = inverse(rows, field)  # columns are the dual vectors
    col = 0
    unit = getattr(coalg, "unit", None)
    blocks = []
    for r, _units in raw:
        grid = []
        for i in range(r):
            grid_row = []
            for j in range(r):
                coords = [pairing_inv[p][col] for p in range(s)]
                col += 1
                grid_row.append(tuple(space.from_coordinates(coords)))
            grid.append(tuple(grid_row))
        bspace = coalg.span([v for row in grid for v in row])
        blocks.append((r, bspace, tuple(grid)))

    def sort_key(item):
        r, bspace, _ = item
        has_unit = unit is not None and bspace.contains(unit)
        return (0 if has_unit else 1, r, bspace.pivots, bspace.key())

    blocks.sort(key=sort_key)
    out = []
    matrix_blocks = sum(1 for r, _, _ in blocks if r > 1)
    for idx, (r, bspace, grid) in enumerate(blocks):
        fallback = f"C{idx}" if r == 1 else ("E" if matrix_blocks == 1 else f"E{idx}")
        out.append(SimpleBlock(idx, r, bspace, grid, _label(coalg, r, grid[0][0], fallback)))
    return SimpleDecomp(tuple(out), space)


def simple_subcoalgebras(coalg: Coalgebra) -> SimpleDecomp:
    cached = getattr(coalg, "_simple_cache", None)
    if cached is None:
        cached = decompose(coalg, coalg.coradical())
        coalg._simple_cache = cached
    return cached


def is_multiplicative(coalg: Coalgebra, grid: Sequence[Sequence[Sequence[CycElem]]]) -> bool:
    r = len(grid)
    if any(len(row) != r for row in grid):
        return False
    for i in range(r):
        for j in range(r):
            expected: dict = {}
            for t in range(r):
                for key, c in tensor_product(grid[i][t], grid[t][j]).items():
                    v = expected.get(key, coalg.field.zero) + c
                    if v:
                        expected[key] = v
                    else:
                        expected.pop(key, None)
            if coalg.delta(grid[i][j]) != expected:
                return False
            if coalg.epsilon(grid[i][j]) != (1 if i == j else 0):
                return False
    return True
