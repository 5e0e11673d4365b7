"""Hopf algebras: axioms, dual Chevalley property, group-likes, skew-primitives."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Algebra
from .coalgebra import Coalgebra, Tensor, ValidationReport, _acc, tensor_product
from .errors import DomainError
from .field import CycElem, FieldSpec
from .linalg import Subspace, Vector, inverse, kernel_sparse, rank


class HopfAlgebra(Coalgebra):
    """A coalgebra together with multiplication, unit and antipode.

    ``antipode[i]`` lists the terms ``(j, c)`` of S(e_i) = sum c e_j.
    """

    def __init__(self, name: str, field: FieldSpec, basis_names: Sequence[str],
                 comul, counit, *, mul: Iterable[tuple[int, int, int, CycElem]],
                 unit: Sequence[CycElem], antipode: Sequence[Iterable[tuple[int, CycElem]]]):
        super().__init__(name, field, basis_names, comul, counit)
        self.algebra = Algebra.from_quadruples(field, self.dim, mul, [field(u) for u in unit])
        if len(antipode) != self.dim:
            raise DomainError("antipode length does not match the basis")
        self.antipode = [tuple((j, c) for j, c in terms if c) for terms in antipode]

    @property
    def unit(self) -> Vector:
        return list(self.algebra.unit)

    def mul_quadruples(self) -> list[tuple[int, int, int, CycElem]]:
        return [(i, j, k, c) for (i, j), terms in sorted(self.algebra.products.items())
                for k, c in terms]

    def multiply(self, u: Sequence[CycElem], v: Sequence[CycElem]) -> Vector:
        return self.algebra.multiply(u, v)

    def power(self, u: Sequence[CycElem], k: int) -> Vector:
        return self.algebra.power(u, k)

    def S(self, v: Sequence[CycElem]) -> Vector:
        out = self.zero_vector()
        for i, x in enumerate(v):
            if x:
                for j, c in self.antipode[i]:
                    out[j] = out[j] + x * c
        return out

    def antipode_matrix(self) -> list[list[CycElem]]:
        m = [[self.field.zero] * self.dim for _ in range(self.dim)]
        for i, terms in enumerate(self.antipode):
            for j, c in terms:
                m[j][i] = c
        return m

    def tensor_multiply(self, a: Tensor, b: Tensor) -> Tensor:
        """Product in H (x) H."""
        out: Tensor = {}
        prods = self.algebra.products
        for (i1, j1), x in a.items():
            for (i2, j2), y in b.items():
                xy = x * y
                for k1, c1 in prods.get((i1, i2), ()):
                    for k2, c2 in prods.get((j1, j2), ()):
                        _acc(out, (k1, k2), xy * c1 * c2)
        return out

    def right_adjoint(self, h: Sequence[CycElem], a: Sequence[CycElem]) -> Vector:
        """ad_r(h)(a) = sum S(h_1) a h_2."""
        out = self.zero_vector()
        for (j, k), c in self.delta(h).items():
            term = self.multiply(self.multiply(self.S(self.basis_vector(j)), a), self.basis_vector(k))
            out = [o + c * t for o, t in zip(out, term)]
        return out

    # ---------------------------------------------------------------- axioms
    def validate_hopf(self) -> ValidationReport:
        report = self.validate_coalgebra()
        names = self.basis_names
        n = self.dim
        alg = self.algebra
        for i, j, k in alg.associativity_violations(limit=5):
            report.violations.append(f"associativity fails at ({names[i]}, {names[j]}, {names[k]})")
        for i in alg.unit_violations():
            report.violations.append(f"unit law fails at {names[i]}")
        one = self.unit
        if self.delta(one) != tensor_product(one, one):
            report.violations.append("Delta(1) != 1 (x) 1")
        if self.epsilon(one) != self.field.one:
            report.violations.append("eps(1) != 1")
        deltas = [self.delta(self.basis_vector(i)) for i in range(n)]
        for i in range(n):
            for j in range(n):
                prod = alg.basis_product(i, j)
                lhs: Tensor = {}
                eps_lhs = self.field.zero
                for k, c in prod:
                    for (a, b), c2 in deltas[k].items():
                        _acc(lhs, (a, b), c * c2)
                    eps_lhs = eps_lhs + c * self.counit[k]
                if lhs != self.tensor_multiply(deltas[i], deltas[j]):
                    report.violations.append(
                        f"Delta is not multiplicative at ({names[i]}, {names[j]})")
                if eps_lhs != self.counit[i] * self.counit[j]:
                    report.violations.append(
                        f"eps is not multiplicative at ({names[i]}, {names[j]})")
        for i in range(n):
            left = self.zero_vector()
            right = self.zero_vector()
            for (a, b), c in deltas[i].items():
                sa = self.S(self.basis_vector(a))
                sb = self.S(self.basis_vector(b))
                left = [x + c * y for x, y in zip(left, self.multiply(sa, self.basis_vector(b)))]
                right = [x + c * y for x, y in zip(right, self.multiply(self.basis_vector(a), sb))]
            target = [self.counit[i] * u for u in one]
            if left != target:
                report.violations.append(f"antipode axiom S(x1)x2 = eps(x)1 fails at {names[i]}")
            if right != target:
                report.violations.append(f"antipode axiom x1S(x2) = eps(x)1 fails at {names[i]}")
        return report

    def antipode_is_bijective(self) -> bool:
        return rank(self.antipode_matrix(), self.dim) == self.dim

    def antipode_inverse(self) -> list[list[CycElem]]:
        return inverse(self.antipode_matrix(), self.field)

    # ---------------------------------------------------------------- coradical as subalgebra
    def has_dual_chevalley(self) -> bool:
        h0 = self.coradical()
        if not h0.contains(self.unit):
            return False
        for u in h0.basis:
            if not h0.contains(self.S(u)):
                return False
            for v in h0.basis:
                if not h0.contains(self.multiply(u, v)):
                    return False
        return True

    def product_span(self, a: Subspace, b: Subspace) -> Subspace:
        return self.span(self.multiply(u, v) for u in a.basis for v in b.basis)

    def image_under_S(self, a: Subspace) -> Subspace:
        return self.span(self.S(u) for u in a.basis)

    # ---------------------------------------------------------------- group-likes
    def group_likes(self) -> "GroupLikes":
        """Group-like elements: the one-dimensional simple subcoalgebras, normalized by eps = 1."""
        from .semisimple import simple_subcoalgebras

        decomp = simple_subcoalgebras(self)
        elems = []
        for block in decomp.blocks:
            if block.r == 1:
                elems.append(list(block.matrix[0][0]))
        return GroupLikes(self, elems)

    def skew_primitives(self, g: Sequence[CycElem], h: Sequence[CycElem]) -> "SkewPrimitives":
        """{x : Delta x = g (x) x + x (x) h} together with its trivial part span{g - h}."""
        n = self.dim
        g_nz = [(a, c) for a, c in enumerate(g) if c]
        h_nz = [(a, c) for a, c in enumerate(h) if c]
        rows: dict = {}
        for i in range(n):
            col: dict = {}
            for j, k, c in self.comul[i]:
                _acc(col, (j, k), c)
            for a, c in g_nz:
                _acc(col, (a, i), -c)
            for a, c in h_nz:
                _acc(col, (i, a), -c)
            for key, c in col.items():
                rows.setdefault(key, {})[i] = c
        space = kernel_sparse(rows.values(), n, self.field)
        trivial = self.span([[x - y for x, y in zip(g, h)]])
        return SkewPrimitives(space, trivial)


@dataclass(frozen=True)
class SkewPrimitives:
    space: Subspace
    trivial: Subspace

    @property
    def nontrivial_dim(self) -> int:
        return self.space.dim - self.trivial.dim

    def nontrivial_representatives(self) -> list[Vector]:
        """Basis of a fixed complement of the trivial part inside the space."""
        reduced = [self.trivial.residue(v) for v in self.space.basis]
        comp = Subspace.span(self.space.field, self.space.ambient_dim,
                             [v for v in reduced if any(v)])
        return comp.vectors()


class GroupLikes:
    """The group of group-like elements with its multiplication table."""

    def __init__(self, h: HopfAlgebra, elements: list[Vector]):
        self.hopf = h
        self.elements = elements
        index = {tuple(e): i for i, e in enumerate(elements)}
        self.table = []
        for a in elements:
            row = []
            for b in elements:
                p = tuple(h.multiply(a, b))
                if p not in index:
                    raise DomainError("group-like elements are not closed under multiplication")
                row.append(index[p])
            self.table.append(row)
        self.identity = index.get(tuple(h.unit))

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, v: Sequence[CycElem]) -> int | None:
        for i, e in enumerate(self.elements):
            if list(v) == e:
                return i
        return None

    def order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity:
            cur = self.table[cur][i]
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = len(self)
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))
