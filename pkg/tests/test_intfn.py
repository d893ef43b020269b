"""Finitely supported integer functions and the ambient dimension counts."""

import pytest

from doubleplane.intfn import (
    IntFn,
    chi_poly_space,
    choose2,
    difference,
    h0_plane,
    h0_space,
)


def test_choose2_small_values():
    assert [choose2(m) for m in range(-2, 6)] == [3, 1, 0, 0, 1, 3, 6, 10]


def test_h0_space_is_binomial_count():
    # number of degree-n monomials in 4 variables, zero below degree 0
    for n in range(0, 10):
        count = sum(
            1
            for a in range(n + 1)
            for b in range(n - a + 1)
            for c in range(n - a - b + 1)
        )
        assert h0_space(n) == count
    assert h0_space(-1) == 0
    assert h0_space(-5) == 0


def test_h0_plane_is_triangle_count():
    for n in range(0, 10):
        assert h0_plane(n) == (n + 1) * (n + 2) // 2
    assert h0_plane(-1) == 0
    assert h0_plane(-3) == 0


def test_chi_poly_space_is_signed_binomial():
    # chi of O(n) on projective 3-space: the cube formula holds at all n
    for n in range(-8, 8):
        assert chi_poly_space(n) == (n + 1) * (n + 2) * (n + 3) // 6
    assert chi_poly_space(0) == 1
    assert chi_poly_space(-4) == -1


def test_intfn_drops_zero_entries_and_evaluates():
    f = IntFn({0: 1, 3: 0, 5: -2})
    assert f(0) == 1
    assert f(3) == 0
    assert f(5) == -2
    assert f(100) == 0
    assert f.support() == [0, 5]
    assert f.total() == -1


def test_intfn_rejects_non_integers():
    with pytest.raises(TypeError):
        IntFn({0: 1.5})
    with pytest.raises(TypeError):
        IntFn({"0": 1})


def test_intfn_algebra():
    f = IntFn({0: 1, 1: 2})
    g = IntFn({1: -2, 2: 5})
    assert (f + g).to_dict() == {0: 1, 2: 5}
    assert (f - g).to_dict() == {0: 1, 1: 4, 2: -5}
    assert (-f).to_dict() == {0: -1, 1: -2}
    assert f + g == g + f
    assert hash(f) == hash(IntFn({1: 2, 0: 1}))


def test_intfn_leq_is_pointwise():
    f = IntFn({0: 1, 2: 3})
    g = IntFn({0: 1, 2: 4, 5: 1})
    assert f.leq(g)
    assert not g.leq(f)
    assert IntFn().leq(f)
    assert IntFn({0: -1}).leq(IntFn())
    assert not IntFn({0: 1}).leq(IntFn())


def test_difference_inverts_summation():
    f = IntFn({0: 3, 1: -1, 4: 2})
    d = difference(f)
    for n in range(-2, 8):
        assert d(n) == f(n) - f(n - 1)
    # second difference agrees with iterating
    assert difference(f, 2) == difference(difference(f))
    assert difference(f, 0) == f
    with pytest.raises(ValueError):
        difference(f, -1)


def test_intfn_json_dict_orders_keys():
    f = IntFn({3: 1, -2: 4})
    assert list(f.to_json_dict()) == ["-2", "3"]
    assert f.to_json_dict() == {"-2": 4, "3": 1}
