"""Exact dense (and a little sparse) linear algebra over Q(zeta_m).

Vectors are lists of :class:`CycElem`; matrices are lists of rows.  Matrices
act on column vectors, so a map K^n -> K^p is a p x n matrix.

:class:`Subspace` keeps its basis in reduced row echelon form, which makes the
representation canonical: two subspaces are equal exactly when their basis
matrices are equal.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import DomainError
from .field import CycElem, FieldSpec

Vector = list  # list[CycElem]
Matrix = list  # list[list[CycElem]]


# --------------------------------------------------------------------------
# vector helpers


def zeros(field: FieldSpec, n: int) -> Vector:
    return [field.zero] * n


def unit_vector(field: FieldSpec, n: int, i: int) -> Vector:
    v = [field.zero] * n
    v[i] = field.one
    return v


def vec_add(a: Sequence[CycElem], b: Sequence[CycElem]) -> Vector:
    return [x + y for x, y in zip(a, b)]


def vec_sub(a: Sequence[CycElem], b: Sequence[CycElem]) -> Vector:
    return [x - y for x, y in zip(a, b)]


def vec_scale(a: Sequence[CycElem], c) -> Vector:
    return [x * c for x in a]


def vec_is_zero(a: Sequence[CycElem]) -> bool:
    return not any(a)


def dot(a: Sequence[CycElem], b: Sequence[CycElem], field: FieldSpec) -> CycElem:
    acc = field.zero
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def linear_combination(coeffs: Sequence[CycElem], vectors: Sequence[Sequence[CycElem]],
                       field: FieldSpec, n: int) -> Vector:
    out = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, x in enumerate(v):
            if x:
                out[i] = out[i] + c * x
    return out


def mat_mul(a: Matrix, b: Matrix, field: FieldSpec) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    if a and len(a[0]) != inner:
        raise DomainError(f"shape mismatch: {len(a)}x{len(a[0])} times {inner}x{cols}")
    out = []
    for row in a:
        acc = [field.zero] * cols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j, y in enumerate(brow):
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def mat_vec(a: Matrix, v: Sequence[CycElem], field: FieldSpec) -> Vector:
    return [dot(row, v, field) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def identity(field: FieldSpec, n: int) -> Matrix:
    return [unit_vector(field, n, i) for i in range(n)]


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: block (i, j) of the result is a[i][j] * b."""
    out = []
    for arow in a:
        for brow in b:
            out.append([x * y for x in arow for y in brow])
    return out


# --------------------------------------------------------------------------
# row reduction


def rref(m: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Within a column the pivot row is the candidate with the smallest bit size,
    which keeps coefficient growth down; the result does not depend on it.
    """
    rows = [list(r) for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r >= nrows:
            break
        best, best_size = None, None
        for i in range(r, nrows):
            x = rows[i][c]
            if x:
                s = x.size()
                if best is None or s < best_size:
                    best, best_size = i, s
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        inv = rows[r][c].inv()
        prow = [x * inv for x in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row_i = rows[i]
                    for j in range(c, ncols):
                        pj = prow[j]
                        if pj:
                            row_i[j] = row_i[j] - f * pj
        pivots.append(c)
        r += 1
    return rows[: len(pivots)], pivots


def rank(m: Matrix, ncols: int | None = None) -> int:
    return len(rref(m, ncols)[1])


class Echelon:
    """Incremental sparse row echelon builder.

    Rows are dicts ``{column: value}``; each stored row has leading entry 1.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows: dict[int, dict[int, CycElem]] = {}
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, v: dict[int, CycElem]) -> dict[int, CycElem]:
        v = {k: x for k, x in v.items() if x}
        if not v:
            return v
        lo = min(v)
        for p in self._pivots:
            if p < lo:
                continue
            c = v.get(p)
            if c is None:
                continue
            for j, y in self.rows[p].items():
                nv = v.get(j)
                nv = -c * y if nv is None else nv - c * y
                if nv:
                    v[j] = nv
                else:
                    v.pop(j, None)
            if not v:
                break
        return v

    def add(self, v: dict[int, CycElem]) -> bool:
        """Insert a row; return ``True`` when it was independent of the stored rows."""
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = v[p].inv()
        self.rows[p] = {j: x * inv for j, x in v.items()}
        insort(self._pivots, p)
        return True

    def pivots(self) -> list[int]:
        return list(self._pivots)

    def rref_rows(self, ncols: int) -> tuple[Matrix, list[int]]:
        """Fully reduced dense rows, sorted by pivot."""
        piv = self._pivots
        rows = {p: dict(self.rows[p]) for p in piv}
        for p in reversed(piv):
            prow = rows[p]
            for q in piv:
                if q >= p:
                    break
                row = rows[q]
                c = row.get(p)
                if c:
                    for j, y in prow.items():
                        nv = row.get(j)
                        nv = -c * y if nv is None else nv - c * y
                        if nv:
                            row[j] = nv
                        else:
                            row.pop(j, None)
        zero = self.field.zero
        dense = []
        for p in piv:
            d = [zero] * ncols
            for j, x in rows[p].items():
                d[j] = x
            dense.append(d)
        return dense, list(piv)


def _dense_to_sparse(v: Sequence[CycElem]) -> dict[int, CycElem]:
    return {i: x for i, x in enumerate(v) if x}


def kernel_from_rref(rows: Matrix, pivots: list[int], ncols: int, field: FieldSpec) -> "Subspace":
    pivset = set(pivots)
    vectors = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for row, p in zip(rows, pivots):
            x = row[f]
            if x:
                v[p] = -x
        vectors.append(v)
    return Subspace.span(field, ncols, vectors)


def kernel(m: Matrix, ncols: int, field: FieldSpec) -> "Subspace":
    """Null space {v : m v = 0}."""
    ech = Echelon(field)
    for row in m:
        ech.add(_dense_to_sparse(row))
        if ech.rank == ncols:
            break
    rows, piv = ech.rref_rows(ncols)
    return kernel_from_rref(rows, piv, ncols, field)


def kernel_sparse(rows: Iterable[dict[int, CycElem]], ncols: int, field: FieldSpec) -> "Subspace":
    """Null space of a matrix given by sparse rows (possibly very many of them)."""
    ech = Echelon(field)
    for row in rows:
        ech.add(row)
        if ech.rank == ncols:
            break
    r, piv = ech.rref_rows(ncols)
    return kernel_from_rref(r, piv, ncols, field)


def solve(m: Matrix, rhs: Sequence[CycElem], ncols: int, field: FieldSpec) -> Vector | None:
    """One solution x of m x = rhs (free variables set to zero), or ``None``."""
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    rows, piv = rref(aug, ncols + 1)
    if piv and piv[-1] == ncols:
        return None
    x = [field.zero] * ncols
    for row, p in zip(rows, piv):
        x[p] = row[ncols]
    return x


def inverse(m: Matrix, field: FieldSpec) -> Matrix:
    n = len(m)
    aug = [list(row) + unit_vector(field, n, i) for i, row in enumerate(m)]
    rows, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise DomainError("matrix is singular")
    return [row[n:] for row in rows[:n]]


def minimal_dependency(vectors: Iterable[Sequence[CycElem]], field: FieldSpec) -> list[CycElem] | None:
    """Coefficients c_0..c_k with c_k = 1 and sum c_j v_j = 0 for the first k
    at which v_k depends on v_0..v_{k-1}; ``None`` if the iterable runs out."""
    ech = Echelon(field)
    offset = None
    for k, v in enumerate(vectors):
        if offset is None:
            offset = len(v)
        row = _dense_to_sparse(v)
        row[offset + k] = field.one
        red = ech.reduce(row)
        if min(red) >= offset:
            coeffs = [field.zero] * (k + 1)
            for j, x in red.items():
                coeffs[j - offset] = x
            lead = coeffs[k]
            return [c / lead for c in coeffs]
        ech.add(red)
    return None


# --------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of K^n stored by its reduced row echelon basis."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple  # tuple[tuple[CycElem, ...], ...]
    pivots: tuple
    _key: tuple = dc_field(default=None, repr=False)

    @classmethod
    def span(cls, field: FieldSpec, n: int, vectors: Iterable[Sequence[CycElem]]) -> "Subspace":
        ech = Echelon(field)
        for v in vectors:
            if len(v) != n:
                raise DomainError(f"vector of length {len(v)} in ambient dimension {n}")
            ech.add(_dense_to_sparse(v))
            if ech.rank == n:
                break
        rows, piv = ech.rref_rows(n)
        return cls(field, n, tuple(tuple(r) for r in rows), tuple(piv))

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, (), ())

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, tuple(tuple(unit_vector(field, n, i)) for i in range(n)), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def key(self) -> tuple:
        k = self._key
        if k is None:
            k = (self.ambient_dim, tuple(tuple(tuple(x.to_json()) for x in row) for row in self.basis))
            object.__setattr__(self, "_key", k)
        return k

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.pivots == other.pivots
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.pivots, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, pivots={list(self.pivots)})"

    def vectors(self) -> list[Vector]:
        return [list(r) for r in self.basis]

    def residue(self, v: Sequence[CycElem]) -> Vector:
        """v minus its component along the basis, i.e. zero at every pivot column."""
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] = out[j] - c * x
        return out

    def contains(self, v: Sequence[CycElem]) -> bool:
        return not any(self.residue(v))

    def coordinates(self, v: Sequence[CycElem]) -> Vector:
        """Coordinates of a member vector with respect to the stored basis."""
        if not self.contains(v):
            raise DomainError("vector is not in the subspace")
        return [v[p] for p in self.pivots]

    def from_coordinates(self, coords: Sequence[CycElem]) -> Vector:
        return linear_combination(coords, self.basis, self.field, self.ambient_dim)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def complement_columns(self) -> list[int]:
        piv = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in piv]

    def quotient_images(self) -> list[dict[int, CycElem]]:
        """For each standard basis vector e_c, its image in K^n / self, written in
        coordinates indexed by the non-pivot columns (sparse dicts)."""
        piv_index = {p: i for i, p in enumerate(self.pivots)}
        out = []
        for c in range(self.ambient_dim):
            i = piv_index.get(c)
            if i is None:
                out.append({c: self.field.one})
            else:
                row = self.basis[i]
                out.append({j: -x for j, x in enumerate(row) if x and j != c})
        return out


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DomainError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace.span(a.field, a.ambient_dim, list(a.basis) + list(b.basis))


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: reduce [a | a] over [b | 0]; rows with vanishing left half
    carry a basis of the intersection in their right half."""
    _check_ambient(a, b)
    n = a.ambient_dim
    field = a.field
    zero = [field.zero] * n
    rows = [list(v) + list(v) for v in a.basis] + [list(v) + zero for v in b.basis]
    red, piv = rref(rows, 2 * n)
    inter = [row[n:] for row, p in zip(red, piv) if p >= n]
    return Subspace.span(field, n, inter)


def preimage(f: Matrix, w: Subspace, domain_dim: int) -> Subspace:
    """{v in K^domain_dim : f v in w} for a w.ambient_dim x domain_dim matrix f."""
    if len(f) != w.ambient_dim or any(len(r) != domain_dim for r in f):
        raise DomainError("map does not go from the domain into the ambient space of w")
    field = w.field
    quot = w.quotient_images()
    cols = w.complement_columns()
    # rows of (projection onto the complement) o f
    rows = []
    for j in cols:
        rows.append({})
    col_index = {j: t for t, j in enumerate(cols)}
    for out_c, frow in enumerate(f):
        for j, x in quot[out_c].items():
            t = col_index[j]
            target = rows[t]
            for i, y in enumerate(frow):
                if y:
                    nv = target.get(i)
                    target[i] = x * y if nv is None else nv + x * y
    return kernel_sparse(rows, domain_dim, field)
