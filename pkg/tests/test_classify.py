from fractions import Fraction

import pytest

from hopfquiver.builders import build_taft
from hopfquiver.classify import extract_group_datum
from hopfquiver.errors import NotApplicableError
from hopfquiver.field import FieldSpec, root_of_unity
from hopfquiver.linalg import vec_add, vec_scale
from hopfquiver.quiver import h1_component
from helpers import dual_s3, h16, h32, sweedler, taft, taft_field, taft_grid


@pytest.mark.parametrize("params", list(taft_grid()))
def test_taft_roundtrip(params):
    n, d, k, mu = params
    gd = extract_group_datum(taft(n, d, k, mu))
    assert gd.invariant() == (n, d, d, "nonzero" if mu else "zero")
    field = taft_field(d)
    assert gd.q == (root_of_unity(field, k) if d >= 3 else field(-1))
    assert gd.mu == mu
    assert gd.mu_normalized == mu
    assert gd.orientation == "(g,1)"


def test_sweedler():
    gd = extract_group_datum(sweedler())
    assert (gd.n, gd.d, gd.q, gd.mu) == (2, 2, -1, 0)


def test_sixteen_dim_example():
    h = h16()
    gd = extract_group_datum(h)
    assert (gd.n, gd.g_label, gd.q, gd.d, gd.mu) == (2, "kc", -1, 2, 0)
    # non-normality witness: ad_r((x + bx)/2)(c) = b with b outside the unit component
    vec = lambda name: h.basis_vector(h.basis_names.index(name))
    half = h.field(Fraction(1, 2))
    u = vec_scale(vec_add(vec("x"), h.multiply(vec("b"), vec("x"))), half)
    assert h.right_adjoint(u, vec("c")) == vec("b")
    assert not h1_component(h).space.contains(vec("b"))


def test_mu_without_a_root_is_not_normalized():
    K = FieldSpec(1)
    gd = extract_group_datum(build_taft(4, 2, 2, K(-1)))
    assert gd.mu == 2 and gd.mu_class == "nonzero"
    assert gd.mu_normalized is None and gd.note == "NOT_NORMALIZABLE"
    gd = extract_group_datum(build_taft(4, 2, 4, K(-1)))
    assert gd.mu_normalized == 1


def test_not_applicable():
    with pytest.raises(NotApplicableError):
        extract_group_datum(h32())
    with pytest.raises(NotApplicableError):
        extract_group_datum(dual_s3())
