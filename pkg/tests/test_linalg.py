import sympy
from hypothesis import given, settings, strategies as st

from hopfquiver.field import FieldSpec
from hopfquiver.linalg import (Echelon, Subspace, identity, inverse, kernel, kron, mat_mul, mat_vec, preimage,
                               rank, rref, solve, subspace_intersect, subspace_sum, vec_is_zero)
from helpers import field_elements

PROPS = settings(max_examples=1000, derandomize=True, deadline=None)
FIELDS = (FieldSpec(1), FieldSpec(3), FieldSpec(4))


@st.composite
def matrices(draw, field=None, rows=None, cols=None, max_dim=4):
    field = field or draw(st.sampled_from(FIELDS))
    r = rows if rows is not None else draw(st.integers(1, max_dim))
    c = cols if cols is not None else draw(st.integers(1, max_dim))
    # low-rank products appear often enough to exercise nontrivial kernels
    entry = st.one_of(st.just(field.zero), field_elements(field))
    return field, [[draw(entry) for _ in range(c)] for _ in range(r)]


@PROPS
@given(matrices())
def test_rank_nullity(data):
    field, m = data
    ncols = len(m[0])
    ker = kernel(m, ncols, field)
    assert rank(m, ncols) + ker.dim == ncols
    for v in ker.basis:
        assert vec_is_zero(mat_vec(m, v, field))


@PROPS
@given(matrices(field=FieldSpec(1)))
def test_rank_matches_sympy(data):
    _, m = data
    assert rank(m, len(m[0])) == sympy.Matrix([[x.rational() for x in row] for row in m]).rank()


@PROPS
@given(st.data())
def test_grassmann_identity(data):
    field = data.draw(st.sampled_from(FIELDS))
    n = data.draw(st.integers(1, 5))
    _, a = data.draw(matrices(field, cols=n))
    _, b = data.draw(matrices(field, cols=n))
    u, w = Subspace.span(field, n, a), Subspace.span(field, n, b)
    s, i = subspace_sum(u, w), subspace_intersect(u, w)
    assert s.dim + i.dim == u.dim + w.dim
    assert i <= u and i <= w and u <= s and w <= s


@PROPS
@given(st.data())
def test_kron_multiplicativity(data):
    field = data.draw(st.sampled_from(FIELDS))
    p, q, r, s, t, u = (data.draw(st.integers(1, 2)) for _ in range(6))
    _, a = data.draw(matrices(field, p, q))
    _, c = data.draw(matrices(field, q, r))
    _, b = data.draw(matrices(field, s, t))
    _, d = data.draw(matrices(field, t, u))
    assert mat_mul(kron(a, b), kron(c, d), field) == kron(mat_mul(a, c, field), mat_mul(b, d, field))


@PROPS
@given(matrices(max_dim=4))
def test_rref_is_canonical_and_echelon_agrees(data):
    field, m = data
    ncols = len(m[0])
    rows, piv = rref(m, ncols)
    for k, p in enumerate(piv):
        assert rows[k][p] == 1
        assert all(not rows[j][p] for j in range(len(rows)) if j != k)
    assert Subspace.span(field, ncols, m) == Subspace.span(field, ncols, rows)
    ech = Echelon(field)
    for row in m:
        ech.add({i: x for i, x in enumerate(row) if x})
    erows, epiv = ech.rref_rows(ncols)
    assert (erows, epiv) == (rows, piv)


@PROPS
@given(st.data())
def test_solve_and_inverse(data):
    field = data.draw(st.sampled_from(FIELDS))
    n = data.draw(st.integers(1, 4))
    _, m = data.draw(matrices(field, n, n))
    if rank(m, n) == n:
        inv = inverse(m, field)
        assert mat_mul(m, inv, field) == identity(field, n)
    _, x = data.draw(matrices(field, n, 1))
    x = [row[0] for row in x]
    b = mat_vec(m, x, field)
    sol = solve(m, b, n, field)
    assert sol is not None and mat_vec(m, sol, field) == b


@PROPS
@given(st.data())
def test_preimage(data):
    field = data.draw(st.sampled_from(FIELDS))
    n, k = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4))
    _, f = data.draw(matrices(field, k, n))
    _, w = data.draw(matrices(field, cols=k))
    target = Subspace.span(field, k, w)
    pre = preimage(f, target, n)
    for v in pre.basis:
        assert target.contains(mat_vec(f, v, field))
    assert pre.dim == kernel(f, n, field).dim + subspace_intersect(
        target, Subspace.span(field, k, [[row[j] for row in f] for j in range(n)])).dim


def test_subspace_coordinates_roundtrip():
    K = FieldSpec(1)
    s = Subspace.span(K, 3, [[K(1), K(2), K(0)], [K(0), K(1), K(1)]])
    v = [K(2), K(5), K(1)]
    assert s.contains(v)
    assert s.from_coordinates(s.coordinates(v)) == v
    assert s.complement_columns() == [2]
