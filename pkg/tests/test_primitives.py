from fractions import Fraction

import pytest

from hopfquiver.linalg import vec_add, vec_scale
from hopfquiver.primitives import (arrow_count, arrow_matrix, directly_linked, is_primitive, primitive_family,
                                   quotient_dim)
from hopfquiver.semisimple import SimpleBlock, simple_subcoalgebras
from helpers import cdn, coalgebra_fixtures, h16, h32, hopf_fixtures


def check_family_against_wedge(c):
    decomp = simple_subcoalgebras(c)
    total = 0
    for C in decomp:
        for D in decomp:
            fam = primitive_family(c, C, D)
            assert len(fam) == arrow_count(c, C, D)
            assert fam.consistent
            for m in fam.members:
                assert is_primitive(c, C, D, m.entries)
            total += fam.quotient_dim
    layers = c.coradical_filtration()
    h1 = layers[1].dim if len(layers) > 1 else layers[0].dim
    assert total == h1 - layers[0].dim


@pytest.mark.parametrize("name,make", hopf_fixtures() + coalgebra_fixtures())
def test_family_size_equals_arrow_count(name, make):
    check_family_against_wedge(make())


def test_path_coalgebra_arrows_form_a_cycle():
    for n in (1, 2, 3, 4):
        a = arrow_matrix(cdn(n, 2))
        assert all(a[i][j] == (1 if (i - j) % n == 1 or n == 1 else 0) for i in range(n) for j in range(n))


class Expr:
    """Evaluate words in the generators of a fixture."""

    def __init__(self, h):
        self.h = h

    def gen(self, name):
        return self.h.basis_vector(self.h.basis_names.index(name))

    def prod(self, *factors):
        out = self.h.unit
        for f in factors:
            out = self.h.multiply(out, self.gen(f) if isinstance(f, str) else f)
        return out

    def lin(self, *terms):
        out = self.h.zero_vector()
        for c, v in terms:
            out = vec_add(out, vec_scale(self.gen(v) if isinstance(v, str) else v, self.h.field(Fraction(c))))
        return out


def with_matrix(block, grid):
    return SimpleBlock(block.index, block.r, block.space, tuple(tuple(tuple(v) for v in row) for row in grid),
                       block.label)


def printed_e(ex, t, yt, zt, zyt):
    h = Fraction(1, 2)
    return [[ex.lin((h, t), (h, yt)), ex.lin((h, t), (-h, yt))],
            [ex.lin((h, zt), (-h, zyt)), ex.lin((h, zt), (h, zyt))]]


def test_printed_loop_primitive_of_16_dim_example():
    h = h16()
    ex = Expr(h)
    d = simple_subcoalgebras(h)
    E = with_matrix(d.by_label("E"), printed_e(ex, "x", "bx", "cx", "cbx"))
    hf = Fraction(1, 2)
    X = [[ex.lin((hf, "xy"), (hf, "bxy")), ex.lin((hf, "xy"), (-hf, "bxy"))],
         [ex.lin((hf, "cbxy"), (-hf, "cxy")), ex.lin((-hf, "cxy"), (-hf, "cbxy"))]]
    assert is_primitive(h, E, E, X)
    assert arrow_count(h, E, E) == 1
    # the arrows between group-likes are spanned by y, cy, by, bcy
    for target, source, elem in (("kc", "k1", "y"), ("k1", "kc", "cy"), ("kcb", "kb", "by"), ("kb", "kcb", "cby")):
        assert is_primitive(h, d.by_label(target), d.by_label(source), [[ex.gen(elem)]])


def test_printed_primitives_of_32_dim_example():
    h = h32()
    ex = Expr(h)
    d = simple_subcoalgebras(h)
    zt, yt, zyt = ex.prod("z", "t"), ex.prod("y", "t"), ex.prod("z", "y", "t")
    E = with_matrix(d.by_label("E"), printed_e(ex, "t", yt, zt, zyt))
    pp, pm = ex.lin((1, "p1"), (1, "p2")), ex.lin((1, "p1"), (-1, "p2"))
    opy, omy = ex.lin((1, "1"), (1, "y")), ex.lin((1, "1"), (-1, "y"))
    h2 = Fraction(1, 2)
    column = {
        "k1": [[ex.lin((h2, pp))], [ex.lin((h2, pm))]],
        "kz": [[ex.lin((h2, ex.prod("p1", "z")), (-h2, ex.prod("p2", "z")))],
               [ex.lin((h2, ex.prod("p1", "z")), (h2, ex.prod("p2", "z")))]],
        "ky": [[ex.lin((h2, ex.prod(pp, "y")))], [ex.lin((h2, ex.prod("p2", "y")), (-h2, ex.prod("p1", "y")))]],
        "kzy": [[ex.lin((h2, ex.prod("p2", "z", "y")), (-h2, ex.prod("p1", "z", "y")))],
                [ex.lin((h2, ex.prod("p1", "z", "y")), (h2, ex.prod("p2", "z", "y")))]],
    }
    for source, grid in column.items():
        for other in column:
            assert is_primitive(h, E, d.by_label(other), grid) == (other == source)
    q, e = Fraction(1, 4), Fraction(1, 8)
    row = {
        "k1": [[ex.lin((q, ex.prod(pp, opy, "t")), (q, ex.prod(pm, omy, zt))),
                ex.lin((q, ex.prod(pp, omy, "t")), (q, ex.prod(pm, opy, zt)))]],
        "kz": [[ex.lin((q, ex.prod(pp, omy, zt)), (q, ex.prod(pm, opy, "t"))),
                ex.lin((q, ex.prod(pp, opy, zt)), (q, ex.prod(pm, omy, "t")))]],
        "kzy": [[ex.lin((e, ex.prod(pm, opy, "t")), (-e, ex.prod(pp, omy, zt))),
                 ex.lin((e, ex.prod(pm, omy, "t")), (-e, ex.prod(pp, opy, zt)))]],
    }
    for target, grid in row.items():
        for other in column:
            assert is_primitive(h, d.by_label(other), E, grid) == (other == target)
    # the eighth printed matrix satisfies no primitivity condition; the arrow E -> ky exists regardless
    x8 = [[ex.lin((e, ex.prod(pm, omy, zt)), (e, ex.prod(pp, opy, "t"))),
           ex.lin((e, ex.prod(pp, opy, zt)), (-e, ex.prod(pp, omy, "t")))]]
    assert not any(is_primitive(h, d.by_label(g), E, x8) for g in column)
    assert len(primitive_family(h, d.by_label("ky"), E)) == 1


def test_directly_linked_and_quotient_dims():
    h = h16()
    d = simple_subcoalgebras(h)
    k1, kc, kb, E = (d.by_label(x) for x in ("k1", "kc", "kb", "E"))
    assert directly_linked(h, k1, kc) and not directly_linked(h, k1, kb)
    assert quotient_dim(h, E, E) == 4 and quotient_dim(h, k1, kc) == 1
