"""Primitive matrices between simple subcoalgebras and arrow counts.

For simple subcoalgebras C (r x r matrix c) and D (s x s matrix d), an r x s
matrix X is (C, D)-primitive when

    Delta(x_ij) = sum_k c_ik (x) x_kj + sum_t x_it (x) d_tj.

Two independent routes count arrows D -> C of the link quiver:

* the wedge route, dim((C ^ D) / (C + D)) / (r s);
* the primitive route, solving the linear system above for all primitive
  matrices (their entries necessarily lie in C ^ D) and counting them modulo
  the trivial ones (entries in the coradical).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import Coalgebra, _acc, tensor_product
from .errors import DivisibilityViolation, DomainError, InternalError
from .linalg import Subspace, kernel_sparse, linear_combination, subspace_sum
from .semisimple import SimpleBlock, SimpleDecomp, simple_subcoalgebras


@dataclass(frozen=True)
class PrimitiveMatrix:
    target: int  # C
    source: int  # D
    entries: tuple  # r x s tuple of ambient vectors

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0


@dataclass(frozen=True)
class CompleteFamily:
    target: int
    source: int
    members: tuple
    quotient_dim: int
    r: int
    s: int

    def __len__(self) -> int:
        return len(self.members)

    @property
    def consistent(self) -> bool:
        return len(self.members) * self.r * self.s == self.quotient_dim


def is_primitive(coalg: Coalgebra, C: SimpleBlock, D: SimpleBlock, grid) -> bool:
    r, s = C.r, D.r
    if len(grid) != r or any(len(row) != s for row in grid):
        raise DomainError(f"grid must be {r} x {s}")
    for i in range(r):
        for j in range(s):
            expected: dict = {}
            for k in range(r):
                for key, c in tensor_product(C.matrix[i][k], grid[k][j]).items():
                    _acc(expected, key, c)
            for t in range(s):
                for key, c in tensor_product(grid[i][t], D.matrix[t][j]).items():
                    _acc(expected, key, c)
            if coalg.delta(grid[i][j]) != expected:
                return False
    return True


def quotient_dim(coalg: Coalgebra, C: SimpleBlock, D: SimpleBlock) -> int:
    """dim((C ^ D) / (C + D))."""
    w = coalg.wedge(C.space, D.space)
    base = subspace_sum(C.space, D.space)
    if not base.issubspace(w):
        raise InternalError("C + D is not contained in C ^ D")
    return w.dim - base.dim


def arrow_count(coalg: Coalgebra, C: SimpleBlock, D: SimpleBlock) -> int:
    """Number of arrows D -> C."""
    q = quotient_dim(coalg, C, D)
    if q % (C.r * D.r):
        raise DivisibilityViolation(
            f"dim((C^D)/(C+D)) = {q} is not divisible by r*s = {C.r * D.r} "
            f"for C = {C.label}, D = {D.label}")
    return q // (C.r * D.r)


def directly_linked(coalg: Coalgebra, C: SimpleBlock, D: SimpleBlock) -> bool:
    base = subspace_sum(C.space, D.space)
    both = subspace_sum(coalg.wedge(C.space, D.space), coalg.wedge(D.space, C.space))
    return both.dim > base.dim


def primitive_solutions(coalg: Coalgebra, C: SimpleBlock, D: SimpleBlock) -> tuple[Subspace, Subspace, list]:
    """All (C, D)-primitive matrices as a subspace of K^(r s w), where w = dim(C ^ D).

    Returns the solution space, its trivial part (entries in the coradical)
    and the wedge basis used for the coordinates.
    """
    field = coalg.field
    r, s = C.r, D.r
    wedge = coalg.wedge(C.space, D.space)
    wb = wedge.vectors()
    w = len(wb)
    nunk = r * s * w
    deltas = [coalg.delta(v) for v in wb]
    rows: dict = {}

    def put(eq_i, eq_j, tensor, unknown, sign):
        for (p, q), c in tensor.items():
            row = rows.setdefault((eq_i, eq_j, p, q), {})
            _acc(row, unknown, c if sign > 0 else -c)

    for i in range(r):
        for j in range(s):
            for a in range(w):
                u = (i * s + j) * w + a
                put(i, j, deltas[a], u, 1)
                for i2 in range(r):
                    put(i2, j, tensor_product(C.matrix[i2][i], wb[a]), u, -1)
                for j2 in range(s):
                    put(i, j2, tensor_product(wb[a], D.matrix[j][j2]), u, -1)
    solutions = kernel_sparse((row for row in rows.values() if row), nunk, field)
    # trivial part: entries inside the coradical
    h0 = coalg.coradical()
    cons: dict = {}
    for b, sol in enumerate(solutions.basis):
        for ij in range(r * s):
            entry = linear_combination(sol[ij * w:(ij + 1) * w], wb, field, coalg.dim)
            for col, x in enumerate(h0.residue(entry)):
                if x:
                    cons.setdefault((ij, col), {})[b] = x
    coeffs = kernel_sparse(cons.values(), solutions.dim, field)
    trivial = Subspace.span(field, nunk, [linear_combination(c, solutions.basis, field, nunk)
                                          for c in coeffs.basis])
    return solutions, trivial, wb


def primitive_family(coalg: Coalgebra, C: SimpleBlock, D: SimpleBlock) -> CompleteFamily:
    """A complete family of non-trivial (C, D)-primitive matrices.

    Members form the rref basis of a fixed complement of the trivial
    primitive matrices, so the family is deterministic.
    """
    field = coalg.field
    r, s = C.r, D.r
    solutions, trivial, wb = primitive_solutions(coalg, C, D)
    w = len(wb)
    nunk = r * s * w
    comp = Subspace.span(field, nunk, [trivial.residue(v) for v in solutions.basis])
    members = []
    for vec in comp.basis:
        grid = tuple(
            tuple(tuple(linear_combination(vec[(i * s + j) * w:(i * s + j + 1) * w], wb, field, coalg.dim))
                  for j in range(s))
            for i in range(r))
        members.append(PrimitiveMatrix(C.index, D.index, grid))
    return CompleteFamily(C.index, D.index, tuple(members), quotient_dim(coalg, C, D), r, s)


def arrow_matrix(coalg: Coalgebra, decomp: SimpleDecomp | None = None) -> list[list[int]]:
    """A[to][from] = number of arrows from -> to."""
    decomp = decomp or simple_subcoalgebras(coalg)
    return [[arrow_count(coalg, C, D) for D in decomp] for C in decomp]
