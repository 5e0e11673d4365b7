"""Finite-dimensional associative algebras given by structure constants."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainError
from .field import CycElem, FieldSpec
from .linalg import (Subspace, Vector, kernel, kernel_sparse, minimal_dependency,
                     unit_vector)

# products[(i, j)] = ((k, c), ...) meaning e_i e_j = sum c e_k
Table = dict


class Algebra:
    """Algebra with basis e_0..e_{n-1} and sparse multiplication table."""

    def __init__(self, field: FieldSpec, dim: int, products: Table, unit: Sequence[CycElem] | None):
        self.field = field
        self.dim = dim
        self.products = {key: tuple(val) for key, val in products.items() if val}
        self.unit = list(unit) if unit is not None else None

    @classmethod
    def from_quadruples(cls, field: FieldSpec, dim: int,
                        quads: Iterable[tuple[int, int, int, CycElem]],
                        unit: Sequence[CycElem] | None) -> "Algebra":
        acc: dict = {}
        for i, j, k, c in quads:
            if c:
                acc.setdefault((i, j), {})
                slot = acc[(i, j)]
                slot[k] = slot.get(k, field.zero) + c
        products = {key: tuple((k, c) for k, c in sorted(v.items()) if c) for key, v in acc.items()}
        return cls(field, dim, products, unit)

    def basis_product(self, i: int, j: int) -> tuple:
        return self.products.get((i, j), ())

    def multiply(self, u: Sequence[CycElem], v: Sequence[CycElem]) -> Vector:
        out = [self.field.zero] * self.dim
        nz_v = [(j, y) for j, y in enumerate(v) if y]
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in nz_v:
                xy = x * y
                for k, c in self.products.get((i, j), ()):
                    out[k] = out[k] + xy * c
        return out

    def power(self, u: Sequence[CycElem], k: int) -> Vector:
        if self.unit is None:
            raise DomainError("algebra has no unit")
        out = list(self.unit)
        for _ in range(k):
            out = self.multiply(out, u)
        return out

    def left_matrix(self, u: Sequence[CycElem]) -> list[list[CycElem]]:
        """Matrix of v -> u v (acting on column vectors)."""
        cols = [self.multiply(u, unit_vector(self.field, self.dim, j)) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def right_matrix(self, u: Sequence[CycElem]) -> list[list[CycElem]]:
        """Matrix of v -> v u."""
        cols = [self.multiply(unit_vector(self.field, self.dim, j), u) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def associativity_violations(self, limit: int | None = None) -> list[tuple[int, int, int]]:
        bad = []
        n = self.dim
        for i in range(n):
            ei = unit_vector(self.field, n, i)
            for j in range(n):
                eij = self.multiply(ei, unit_vector(self.field, n, j))
                for k in range(n):
                    ek = unit_vector(self.field, n, k)
                    lhs = self.multiply(eij, ek)
                    rhs = self.multiply(ei, self.multiply(unit_vector(self.field, n, j), ek))
                    if lhs != rhs:
                        bad.append((i, j, k))
                        if limit and len(bad) >= limit:
                            return bad
        return bad

    def unit_violations(self) -> list[int]:
        if self.unit is None:
            return []
        bad = []
        for i in range(self.dim):
            ei = unit_vector(self.field, self.dim, i)
            if self.multiply(self.unit, ei) != ei or self.multiply(ei, self.unit) != ei:
                bad.append(i)
        return bad

    def trace_of_basis(self) -> list[CycElem]:
        """trace(L_{e_k}) for every k."""
        out = []
        for k in range(self.dim):
            t = self.field.zero
            for j in range(self.dim):
                for kk, c in self.products.get((k, j), ()):
                    if kk == j:
                        t = t + c
            out.append(t)
        return out

    def minimal_polynomial(self, u: Sequence[CycElem]) -> list[CycElem]:
        """Monic minimal polynomial of u, lowest degree first."""
        if self.unit is None:
            raise DomainError("algebra has no unit")

        def powers():
            p = list(self.unit)
            while True:
                yield p
                p = self.multiply(p, u)

        coeffs = minimal_dependency(powers(), self.field)
        assert coeffs is not None
        return coeffs

    def evaluate_polynomial(self, poly: Sequence[CycElem], u: Sequence[CycElem]) -> Vector:
        """poly(u) by Horner's rule."""
        if self.unit is None:
            raise DomainError("algebra has no unit")
        acc = [self.field.zero] * self.dim
        for c in reversed(poly):
            acc = self.multiply(acc, u)
            acc = [a + c * e for a, e in zip(acc, self.unit)]
        return acc

    def center(self) -> Subspace:
        """{z : z e_j = e_j z for every j}."""
        n = self.dim
        rows: dict[tuple[int, int], dict[int, CycElem]] = {}
        for i in range(n):
            for j in range(n):
                diff: dict[int, CycElem] = {}
                for k, c in self.products.get((i, j), ()):
                    diff[k] = diff.get(k, self.field.zero) + c
                for k, c in self.products.get((j, i), ()):
                    diff[k] = diff.get(k, self.field.zero) - c
                for k, c in diff.items():
                    if c:
                        rows.setdefault((j, k), {})[i] = c
        return kernel_sparse(rows.values(), n, self.field)

    def left_ideal_generated(self, vectors: Sequence[Sequence[CycElem]]) -> Subspace:
        n = self.dim
        gens = []
        for v in vectors:
            for i in range(n):
                gens.append(self.multiply(unit_vector(self.field, n, i), v))
        return Subspace.span(self.field, n, gens + [list(v) for v in vectors])


def trace_form_radical(alg: Algebra) -> Subspace:
    """Kernel of T(x, y) = trace(L_{xy}); the Jacobson radical in characteristic 0."""
    n = alg.dim
    tr = alg.trace_of_basis()
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            t = alg.field.zero
            for k, c in alg.basis_product(i, j):
                if tr[k]:
                    t = t + c * tr[k]
            row.append(t)
        gram.append(row)
    return kernel(gram, n, alg.field)
