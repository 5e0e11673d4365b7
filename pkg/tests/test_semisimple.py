from fractions import Fraction

import pytest

from hopfquiver.builders import build_dual_group_algebra, cyclic_group
from hopfquiver.errors import NonSplitError
from hopfquiver.field import FieldSpec
from hopfquiver.linalg import Subspace, inverse, kernel_sparse, rank, subspace_sum, vec_add, vec_scale
from hopfquiver.semisimple import (central_primitive_idempotents, decompose, is_multiplicative, jacobson_radical,
                                   simple_subcoalgebras)
from helpers import dual_cyclic, dual_s3, h16, h32, hopf_fixtures, sweedler


@pytest.mark.parametrize("name,make", hopf_fixtures())
def test_blocks_are_basic_multiplicative_and_span_the_coradical(name, make):
    h = make()
    decomp = simple_subcoalgebras(h)
    total = Subspace.zero(h.field, h.dim)
    for b in decomp:
        assert is_multiplicative(h, b.matrix)
        entries = [v for row in b.matrix for v in row]
        assert Subspace.span(h.field, h.dim, entries) == b.space and b.space.dim == b.r ** 2
        total = subspace_sum(total, b.space)
    assert total == h.coradical()
    assert sum(b.r ** 2 for b in decomp) == h.coradical().dim
    assert decomp.labels()[0] == "k1"


def similarity_solutions(h, m1, m2):
    """All P with P m2 = m1 P, as a subspace of K^(r*r)."""
    r = len(m1)
    rows: dict = {}
    for i in range(r):
        for j in range(r):
            for k in range(r):
                for p, x in enumerate(m2[k][j]):
                    if x:
                        row = rows.setdefault((i, j, p), {})
                        row[i * r + k] = row.get(i * r + k, h.field.zero) + x
                for p, x in enumerate(m1[i][k]):
                    if x:
                        row = rows.setdefault((i, j, p), {})
                        row[k * r + j] = row.get(k * r + j, h.field.zero) - x
    return kernel_sparse(rows.values(), r * r, h.field)


@pytest.mark.parametrize("make", [h16, h32, dual_s3])
def test_other_idempotent_choice_gives_similar_matrices(make):
    h = make()
    a = decompose(h, h.coradical())
    b = decompose(h, h.coradical(), reverse=True)
    assert [x.space for x in a] == [x.space for x in b]
    for x, y in zip(a, b):
        sols = similarity_solutions(h, x.matrix, y.matrix)
        assert sols.dim == 1  # Schur
        p = [sols.basis[0][i * x.r:(i + 1) * x.r] for i in range(x.r)]
        assert rank(p, x.r) == x.r
        assert x.character() == y.character()


def _named(h, expr):
    out = h.zero_vector()
    for c, name in expr:
        out = vec_add(out, vec_scale(h.basis_vector(h.basis_names.index(name)), h.field(Fraction(c))))
    return out


def test_printed_multiplicative_matrices():
    h = h16()
    hf = Fraction(1, 2)
    e = [[_named(h, [(hf, "x"), (hf, "bx")]), _named(h, [(hf, "x"), (-hf, "bx")])],
         [_named(h, [(hf, "cx"), (-hf, "cbx")]), _named(h, [(hf, "cx"), (hf, "cbx")])]]
    assert is_multiplicative(h, e)
    assert Subspace.span(h.field, h.dim, [v for row in e for v in row]) == simple_subcoalgebras(h).by_label("E").space
    h = h32()
    e = [[_named(h, [(hf, "t"), (hf, "yt")]), _named(h, [(hf, "t"), (-hf, "yt")])],
         [_named(h, [(hf, "zt"), (-hf, "zyt")]), _named(h, [(hf, "zt"), (hf, "zyt")])]]
    assert is_multiplicative(h, e)


def test_simple_dimensions():
    assert [b.r for b in simple_subcoalgebras(h16())] == [1, 1, 1, 1, 2]
    assert [b.r for b in simple_subcoalgebras(h32())] == [1, 1, 1, 1, 2]
    # irreducible characters of S3 have degrees 1, 1, 2
    assert sorted(b.r for b in simple_subcoalgebras(dual_s3())) == [1, 1, 2]
    # Z4 has four characters over Q(i)
    assert [b.r for b in simple_subcoalgebras(dual_cyclic(4))] == [1, 1, 1, 1]


def test_non_split_field_is_reported():
    table, names = cyclic_group(4)
    h = build_dual_group_algebra(table, names, FieldSpec(1))
    with pytest.raises(NonSplitError):
        simple_subcoalgebras(h)


def test_radical_of_dual_sweedler():
    dual = sweedler().dual_algebra()
    rad = jacobson_radical(dual, check=True)
    assert rad.dim == 2
    assert len(central_primitive_idempotents(h16().restrict(h16().coradical()).dual_algebra())) == 5
