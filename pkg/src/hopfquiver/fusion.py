"""The based ring spanned by the simple subcoalgebras of a Hopf algebra whose
coradical is a Hopf subalgebra.

Multiplicities alpha_ij^t are read off from characters: the character of C_i
is the trace of its basic multiplicative matrix, and chi_i chi_j decomposes
uniquely as sum_t alpha_ij^t chi_t because characters of distinct simples
are linearly independent.  As an independent check, the span of all products
C_i C_j must equal the sum of the C_t with alpha_ij^t > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DualChevalleyRequired, MatchFailure
from .hopf import HopfAlgebra
from .linalg import solve, subspace_sum, Subspace
from .semisimple import SimpleDecomp, simple_subcoalgebras


@dataclass(frozen=True)
class FusionTable:
    labels: tuple
    dims: tuple  # r_i (FP dimensions)
    alpha: tuple  # alpha[i][j][t]
    involution: tuple

    @property
    def n(self) -> int:
        return len(self.dims)

    def product(self, i: int, j: int) -> dict[int, int]:
        return {t: a for t, a in enumerate(self.alpha[i][j]) if a}

    def beta(self, i: int, k: int) -> int:
        return sum(self.alpha[i][k])

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "dims": list(self.dims),
            "alpha": [[i, j, t, a] for i in range(self.n) for j in range(self.n)
                      for t, a in enumerate(self.alpha[i][j]) if a],
            "involution": list(self.involution),
        }


def require_dual_chevalley(h) -> None:
    if not isinstance(h, HopfAlgebra):
        raise DualChevalleyRequired("input has no Hopf structure")
    if not h.has_dual_chevalley():
        raise DualChevalleyRequired("the coradical is not a Hopf subalgebra")


def fusion_table(h: HopfAlgebra, decomp: SimpleDecomp | None = None) -> FusionTable:
    require_dual_chevalley(h)
    decomp = decomp or simple_subcoalgebras(h)
    n = len(decomp)
    field = h.field
    chars = [b.character() for b in decomp]
    # columns = characters
    mat = [[chars[t][p] for t in range(n)] for p in range(h.dim)]
    alpha = []
    for i, Ci in enumerate(decomp):
        row = []
        for j, Cj in enumerate(decomp):
            prod = h.multiply(chars[i], chars[j])
            sol = solve(mat, prod, n, field)
            if sol is None:
                raise MatchFailure(f"chi({Ci.label}) chi({Cj.label}) is not a combination of characters")
            coeffs = []
            for x in sol:
                if not x.is_rational() or x.rational().denominator != 1 or x.rational() < 0:
                    raise MatchFailure(f"non-integral multiplicity {x} in {Ci.label}*{Cj.label}")
                coeffs.append(int(x.rational()))
            expected = Subspace.zero(field, h.dim)
            for t, a in enumerate(coeffs):
                if a:
                    expected = subspace_sum(expected, decomp[t].space)
            if h.product_span(Ci.space, Cj.space) != expected:
                raise MatchFailure(f"span of {Ci.label}*{Cj.label} differs from its constituents")
            row.append(tuple(coeffs))
        alpha.append(tuple(row))
    involution = []
    for i in range(n):
        partners = [j for j in range(n) if alpha[i][j][0] == 1]
        if len(partners) != 1:
            raise MatchFailure(f"{decomp[i].label} has {len(partners)} duals")
        j = partners[0]
        if h.image_under_S(decomp[i].space) != decomp[j].space:
            raise MatchFailure(f"S({decomp[i].label}) differs from the dual {decomp[j].label}")
        involution.append(j)
    return FusionTable(tuple(decomp.labels()), tuple(b.r for b in decomp), tuple(alpha), tuple(involution))


@dataclass
class CheckReport:
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def check_fpdim(t: FusionTable) -> CheckReport:
    failures = []
    r = t.dims
    for i in range(t.n):
        for j in range(t.n):
            if r[i] * r[j] != sum(t.alpha[i][j][k] * r[k] for k in range(t.n)):
                failures.append(("fpdim", i, j))
    # Perron eigenvector: N_i r = r_i r with (N_i)_{tj} = alpha_ij^t
    for i in range(t.n):
        for k in range(t.n):
            if sum(t.alpha[i][j][k] * r[j] for j in range(t.n)) != r[i] * r[k]:
                failures.append(("perron", i, k))
    return CheckReport(failures)


def regular_element_sides(t: FusionTable, k: int) -> tuple[int, int]:
    """(r_k sum_i r_i, sum_i r_i beta_ik)."""
    lhs = t.dims[k] * sum(t.dims)
    rhs = sum(t.dims[i] * t.beta(i, k) for i in range(t.n))
    return lhs, rhs


def check_regular_element(t: FusionTable, k: int) -> CheckReport:
    lhs, rhs = regular_element_sides(t, k)
    return CheckReport([] if lhs == rhs else [("regular", k, lhs, rhs)])


def check_based_ring(t: FusionTable) -> CheckReport:
    failures = []
    n = t.n
    inv = t.involution
    for j in range(n):
        for k in range(n):
            if t.alpha[0][j][k] != (j == k) or t.alpha[j][0][k] != (j == k):
                failures.append(("unit", j, k))
    for i in range(n):
        for j in range(n):
            if t.alpha[i][j][0] != (1 if j == inv[i] else 0):
                failures.append(("duality", i, j))
            for k in range(n):
                if t.alpha[i][j][k] != t.alpha[inv[j]][inv[i]][inv[k]]:
                    failures.append(("anti-involution", i, j, k))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for s in range(n):
                    left = sum(t.alpha[i][j][u] * t.alpha[u][k][s] for u in range(n))
                    right = sum(t.alpha[j][k][u] * t.alpha[i][u][s] for u in range(n))
                    if left != right:
                        failures.append(("associativity", i, j, k, s))
    return CheckReport(failures)


def transitivity_witness(t: FusionTable, i: int, k: int) -> int | None:
    """Some j with C_k a constituent of C_i C_j, or None."""
    for j in range(t.n):
        if t.alpha[i][j][k]:
            return j
    return None


def fpdim(t: FusionTable) -> tuple:
    return t.dims


def global_dim(t: FusionTable) -> Fraction:
    return Fraction(sum(r * r for r in t.dims))
