"""Coalgebras by structure constants: axioms, dual algebra, wedge, coradical filtration."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .algebra import Algebra, trace_form_radical
from .errors import DomainError, InternalError
from .field import CycElem, FieldSpec
from .linalg import Subspace, Vector, kernel, kernel_sparse, subspace_sum

Tensor = dict  # {(j, k): coeff} for elements of H (x) H


@dataclass
class ValidationReport:
    violations: list[str] = dc_field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def extend(self, other: "ValidationReport") -> None:
        self.violations.extend(other.violations)

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        return "\n".join(self.violations)


def _acc(d: dict, key, c) -> None:
    v = d.get(key)
    v = c if v is None else v + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def tensor_product(u: Sequence[CycElem], v: Sequence[CycElem]) -> Tensor:
    out: Tensor = {}
    nz_v = [(k, y) for k, y in enumerate(v) if y]
    for j, x in enumerate(u):
        if x:
            for k, y in nz_v:
                out[(j, k)] = x * y
    return out


def tensor_add(a: Tensor, b: Tensor, scale=None) -> Tensor:
    out = dict(a)
    for key, c in b.items():
        _acc(out, key, c if scale is None else c * scale)
    return out


class Coalgebra:
    """A finite-dimensional coalgebra.

    ``comul[i]`` lists the nonzero terms ``(j, k, c)`` of
    Delta(e_i) = sum c e_j (x) e_k.
    """

    def __init__(self, name: str, field: FieldSpec, basis_names: Sequence[str],
                 comul: Sequence[Iterable[tuple[int, int, CycElem]]],
                 counit: Sequence[CycElem]):
        self.name = name
        self.field = field
        self.dim = len(basis_names)
        self.basis_names = list(basis_names)
        if len(comul) != self.dim or len(counit) != self.dim:
            raise DomainError("comultiplication/counit length does not match the basis")
        self.comul = [tuple((j, k, c) for j, k, c in terms if c) for terms in comul]
        self.counit = [field(c) for c in counit]
        self._wedge_cache: dict = {}
        self._coradical: Subspace | None = None
        self._filtration: list[Subspace] | None = None

    @classmethod
    def from_quadruples(cls, name: str, field: FieldSpec, basis_names: Sequence[str],
                        quads: Iterable[tuple[int, int, int, CycElem]],
                        counit: Sequence[CycElem], **kwargs) -> "Coalgebra":
        n = len(basis_names)
        acc: list[dict] = [dict() for _ in range(n)]
        for i, j, k, c in quads:
            _acc(acc[i], (j, k), c)
        comul = [tuple((j, k, c) for (j, k), c in sorted(d.items())) for d in acc]
        return cls(name, field, basis_names, comul, counit, **kwargs)

    def quadruples(self) -> list[tuple[int, int, int, CycElem]]:
        return [(i, j, k, c) for i, terms in enumerate(self.comul) for j, k, c in terms]

    # ---------------------------------------------------------------- basics
    def zero_vector(self) -> Vector:
        return [self.field.zero] * self.dim

    def basis_vector(self, i: int) -> Vector:
        v = self.zero_vector()
        v[i] = self.field.one
        return v

    def delta(self, v: Sequence[CycElem]) -> Tensor:
        out: Tensor = {}
        for i, x in enumerate(v):
            if x:
                for j, k, c in self.comul[i]:
                    _acc(out, (j, k), x * c)
        return out

    def epsilon(self, v: Sequence[CycElem]) -> CycElem:
        acc = self.field.zero
        for x, e in zip(v, self.counit):
            if x and e:
                acc = acc + x * e
        return acc

    # ---------------------------------------------------------------- axioms
    def validate_coalgebra(self) -> ValidationReport:
        report = ValidationReport()
        names = self.basis_names
        for i in range(self.dim):
            left: dict = {}
            right: dict = {}
            for j, k, c in self.comul[i]:
                for a, b, c2 in self.comul[j]:
                    _acc(left, (a, b, k), c * c2)
                for a, b, c2 in self.comul[k]:
                    _acc(right, (j, a, b), c * c2)
            if left != right:
                cell = min(set(left) ^ set(right) or
                           {key for key in left if left[key] != right.get(key)})
                report.violations.append(
                    f"coassociativity fails at Delta({names[i]}), cell "
                    f"({names[cell[0]]}, {names[cell[1]]}, {names[cell[2]]})")
            lhs: dict = {}
            rhs: dict = {}
            for j, k, c in self.comul[i]:
                if self.counit[j]:
                    _acc(lhs, k, c * self.counit[j])
                if self.counit[k]:
                    _acc(rhs, j, c * self.counit[k])
            ident = {i: self.field.one}
            if lhs != ident:
                report.violations.append(f"counit law (eps (x) id) fails at {names[i]}")
            if rhs != ident:
                report.violations.append(f"counit law (id (x) eps) fails at {names[i]}")
        return report

    # ---------------------------------------------------------------- duals
    def dual_algebra(self) -> Algebra:
        """H* on the dual basis: (f g)(x) = (f (x) g)(Delta x), unit eps."""
        quads = [(j, k, i, c) for i, j, k, c in self.quadruples()]
        return Algebra.from_quadruples(self.field, self.dim, quads, self.counit)

    # ---------------------------------------------------------------- subspaces
    def tensor_in(self, t: Tensor, v: Subspace, w: Subspace) -> bool:
        """Whether t lies in V (x) W."""
        pv = v.quotient_images()
        pw = w.quotient_images()
        first: dict = {}
        second: dict = {}
        for (j, k), c in t.items():
            for a, x in pv[j].items():
                _acc(first, (a, k), c * x)
            for b, y in pw[k].items():
                _acc(second, (j, b), c * y)
        return not first and not second

    def is_subcoalgebra(self, sub: Subspace) -> bool:
        return all(self.tensor_in(self.delta(b), sub, sub) for b in sub.basis)

    def span(self, vectors: Iterable[Sequence[CycElem]]) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def restrict(self, sub: Subspace, name: str | None = None) -> "Coalgebra":
        """The subcoalgebra ``sub`` as a coalgebra in the coordinates of its rref basis."""
        if not self.is_subcoalgebra(sub):
            raise DomainError("subspace is not a subcoalgebra")
        piv = sub.pivots
        quads = []
        for p, b in enumerate(sub.basis):
            t = self.delta(b)
            for a, ca in enumerate(piv):
                for c_idx, cb in enumerate(piv):
                    c = t.get((ca, cb))
                    if c:
                        quads.append((p, a, c_idx, c))
        counit = [self.epsilon(b) for b in sub.basis]
        names = [self.basis_names[p] for p in piv]
        return Coalgebra.from_quadruples(name or f"{self.name}|sub", self.field, names, quads, counit)

    def wedge(self, v: Subspace, w: Subspace) -> Subspace:
        """V ^ W = Delta^{-1}(V (x) H + H (x) W), the kernel of (pi_V (x) pi_W) o Delta."""
        key = (v, w)
        cached = self._wedge_cache.get(key)
        if cached is not None:
            return cached
        pv = v.quotient_images()
        pw = w.quotient_images()
        rows: dict = {}
        for i, terms in enumerate(self.comul):
            for j, k, c in terms:
                pj = pv[j]
                if not pj:
                    continue
                pk = pw[k]
                if not pk:
                    continue
                for a, x in pj.items():
                    cx = c * x
                    for b, y in pk.items():
                        row = rows.setdefault((a, b), {})
                        _acc(row, i, cx * y)
        result = kernel_sparse((r for r in rows.values() if r), self.dim, self.field)
        self._wedge_cache[key] = result
        return result

    # ---------------------------------------------------------------- coradical
    def coradical(self) -> Subspace:
        """H_0 = (Rad H*)^perp."""
        if self._coradical is None:
            rad = trace_form_radical(self.dual_algebra())
            h0 = kernel([list(r) for r in rad.basis], self.dim, self.field)
            if not self.is_subcoalgebra(h0):
                raise InternalError("coradical is not a subcoalgebra")
            self._coradical = h0
        return self._coradical

    def coradical_filtration(self) -> list[Subspace]:
        if self._filtration is None:
            h0 = self.coradical()
            layers = [h0]
            for _ in range(self.dim + 1):
                if layers[-1].dim == self.dim:
                    break
                nxt = self.wedge(layers[-1], h0)
                if nxt.dim <= layers[-1].dim:
                    raise InternalError("coradical filtration stalled below the full space")
                layers.append(nxt)
            else:
                raise InternalError("coradical filtration did not terminate")
            self._filtration = layers
        return self._filtration

    def is_cosemisimple(self) -> bool:
        return self.coradical().dim == self.dim

    def sum_of(self, spaces: Iterable[Subspace]) -> Subspace:
        out = Subspace.zero(self.field, self.dim)
        for s in spaces:
            out = subspace_sum(out, s)
        return out
