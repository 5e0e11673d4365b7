import pytest

from hopfquiver.errors import DualChevalleyRequired
from hopfquiver.builders import build_dual_hopf
from hopfquiver.fusion import (check_based_ring, check_fpdim, fusion_table, global_dim, regular_element_sides,
                               transitivity_witness)
from helpers import cdn, dual_s3, h16, h32, hopf_fixtures

# printed tables: rows act on the left; "+" separates summands
PRINTED_16 = {
    "labels": ["k1", "kc", "kb", "kcb", "E"],
    "rows": [
        ["k1", "kc", "kb", "kcb", "E"],
        ["kc", "k1", "kcb", "kb", "E"],
        ["kb", "kcb", "k1", "kc", "E"],
        ["kcb", "kb", "kc", "k1", "E"],
        ["E", "E", "E", "E", "k1+kc+kb+kcb"],
    ],
}
PRINTED_32 = {
    "labels": ["k1", "ky", "kz", "kzy", "E"],
    "rows": [
        ["k1", "ky", "kz", "kzy", "E"],
        ["ky", "k1", "kzy", "kz", "E"],
        ["kz", "kzy", "k1", "ky", "E"],
        ["kzy", "kz", "ky", "k1", "E"],
        ["E", "E", "E", "E", "k1+kz+ky+kzy"],
    ],
}


def table_as_strings(t, order):
    idx = {l: i for i, l in enumerate(t.labels)}
    out = []
    for a in order:
        row = []
        for b in order:
            prod = t.product(idx[a], idx[b])
            row.append(sorted(t.labels[k] for k, m in prod.items() for _ in range(m)))
        out.append(row)
    return out


@pytest.mark.parametrize("make,printed", [(h16, PRINTED_16), (h32, PRINTED_32)])
def test_printed_tables(make, printed):
    t = fusion_table(make())
    assert sorted(t.labels) == sorted(printed["labels"])
    expected = [[sorted(cell.split("+")) for cell in row] for row in printed["rows"]]
    assert table_as_strings(t, printed["labels"]) == expected
    assert list(t.involution) == list(range(5))


def test_dual_s3_character_products():
    # V (x) V = 1 + sgn + V for the two-dimensional irreducible of S3
    t = fusion_table(dual_s3())
    v = t.dims.index(2)
    sgn = next(i for i in range(1, t.n) if t.dims[i] == 1)
    assert t.product(v, v) == {0: 1, sgn: 1, v: 1}
    assert t.product(sgn, sgn) == {0: 1}
    assert global_dim(t) == 6


@pytest.mark.parametrize("name,make", hopf_fixtures())
def test_integer_identities(name, make):
    t = fusion_table(make())
    assert check_fpdim(t).ok
    assert check_based_ring(t).ok
    for i in range(t.n):
        for k in range(t.n):
            assert transitivity_witness(t, i, k) is not None


def test_regular_element_equation():
    t16 = fusion_table(h16())
    assert regular_element_sides(t16, t16.labels.index("kc")) == (6, 6)
    t32 = fusion_table(h32())
    assert regular_element_sides(t32, t32.labels.index("E")) == (12, 12)


def test_requires_dual_chevalley():
    with pytest.raises(DualChevalleyRequired):
        fusion_table(cdn(2, 2))
    with pytest.raises(DualChevalleyRequired):
        fusion_table(build_dual_hopf(h32()))
