"""Group datum of the link-indecomposable component through k1 in finite type."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DatumInconsistent, NotApplicableError
from .field import CycElem, order
from .fusion import require_dual_chevalley
from .hopf import HopfAlgebra
from .linalg import solve, vec_add, vec_scale, vec_sub, vec_is_zero
from .polynomial import roots
from .primitives import primitive_family
from .quiver import FINITE, LinkQuiver, build_link_quiver, h1_component, is_basic_cycle, quiver_verdict
from .semisimple import simple_subcoalgebras


@dataclass(frozen=True)
class GroupDatum:
    n: int
    g_label: str
    q: CycElem
    d: int
    mu: CycElem  # as solved for the chosen x
    mu_class: str  # "zero" or "nonzero"
    mu_normalized: CycElem | None  # 0 or 1, None when no d-th root exists
    note: str | None
    orientation: str  # "(g,1)" when x(x)1 + g(x)x was found directly, "(1,g)" otherwise
    x: tuple

    def invariant(self) -> tuple:
        """What two isomorphic data must share."""
        return (self.n, self.d, order(self.q), self.mu_class)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "g": self.g_label,
            "q": self.q.to_json(),
            "d": self.d,
            "mu": self.mu.to_json(),
            "mu_class": self.mu_class,
            "mu_normalized": None if self.mu_normalized is None else self.mu_normalized.to_json(),
            "note": self.note,
            "orientation": self.orientation,
        }


def _sub_quiver(q: LinkQuiver, verts) -> LinkQuiver:
    verts = list(verts)
    return LinkQuiver(tuple(q.labels[v] for v in verts), tuple(q.ranks[v] for v in verts),
                      tuple(tuple(q.arrows[i][j] for j in verts) for i in verts))


def _coefficients(h: HopfAlgebra, target, spanning) -> list | None:
    mat = [[v[p] for v in spanning] for p in range(h.dim)]
    return solve(mat, list(target), len(spanning), h.field)


def extract_group_datum(h: HopfAlgebra) -> GroupDatum:
    require_dual_chevalley(h)
    if h.is_cosemisimple():
        raise NotApplicableError("input is cosemisimple")
    decomp = simple_subcoalgebras(h)
    quiver = build_link_quiver(h, decomp)
    if quiver_verdict(quiver, False).kind != FINITE:
        raise NotApplicableError("input is of infinite corepresentation type")
    comp = h1_component(h, quiver, decomp)
    if not comp.pointed or not is_basic_cycle(_sub_quiver(quiver, comp.vertices)):
        raise DatumInconsistent("component of k1 is not a pointed basic cycle")
    field = h.field
    one = h.unit
    grouplike = {v: decomp[v].matrix[0][0] for v in comp.vertices}

    # x(x)1 + g(x)x lives in the family for the arrow k1 -> g
    out = [i for i in range(quiver.n) if quiver.arrows[i][0]]
    into = [j for j in range(quiver.n) if quiver.arrows[0][j]]
    fam = primitive_family(h, decomp[out[0]], decomp[0]) if out else None
    if fam and len(fam):
        orientation = "(g,1)"
        g_vertex = out[0]
        g = grouplike[g_vertex]
        x = fam.members[0].entries[0][0]
    else:
        # 1(x)y + y(x)g': x = g'^{-1} y is (g'^{-1}, 1)-primitive
        fam = primitive_family(h, decomp[0], decomp[into[0]])
        orientation = "(1,g)"
        gp = grouplike[into[0]]
        ginv = h.S(gp)
        g = ginv
        g_vertex = next(v for v in comp.vertices if grouplike[v] == g)
        x = h.multiply(ginv, fam.members[0].entries[0][0])

    gminus = vec_sub(g, one)
    # g^{-1} x g = a x + b (g - 1)
    conj = h.multiply(h.multiply(h.S(g), x), g)
    coeffs = _coefficients(h, conj, [x, gminus])
    if coeffs is None:
        raise DatumInconsistent("g^{-1} x g is not in span{x, g - 1}")
    a, b = coeffs
    if a == 1:
        raise DatumInconsistent("x commutes with g up to a trivial term")
    c = b * (a - 1).inv()
    x = vec_add(x, vec_scale(gminus, c))
    q = a
    if h.multiply(x, g) != vec_scale(h.multiply(g, x), q):
        raise DatumInconsistent("xg = q gx fails after adjustment")
    d = order(q)
    if d is None:
        raise DatumInconsistent(f"q = {q} is not a root of unity")

    gl = h.group_likes()
    gi = gl.index_of(g)
    n = gl.order(gi) if gi is not None else None
    if n is None or n != len(comp.vertices):
        raise DatumInconsistent("g does not generate the group-likes of the component")
    if n % d:
        raise DatumInconsistent(f"d = {d} does not divide n = {n}")

    xd = h.power(x, d)
    gd = h.power(g, d)
    if gd == one:
        if not vec_is_zero(xd):
            raise DatumInconsistent("x^d is nonzero while g^d = 1")
        mu = field.zero
    else:
        sol = _coefficients(h, xd, [vec_sub(one, gd)])
        if sol is None:
            raise DatumInconsistent("x^d is not a multiple of 1 - g^d")
        mu = sol[0]

    note = None
    if not mu:
        mu_class, mu_norm = "zero", field.zero
    else:
        mu_class = "nonzero"
        # x -> x / lam rescales mu by lam^{-d}
        poly = [-mu] + [field.zero] * (d - 1) + [field.one]
        found, _ = roots(poly)
        if found:
            mu_norm = field.one
        else:
            mu_norm, note = None, "NOT_NORMALIZABLE"
    label = decomp[g_vertex].label
    return GroupDatum(n, label, q, d, mu, mu_class, mu_norm, note, orientation, tuple(x))
