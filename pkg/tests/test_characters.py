"""Postulation characters of point schemes and of the curves carrying them."""

import pytest

from doubleplane.characters import (
    CurveModel,
    InvalidModel,
    InvalidProfile,
    ZProfile,
    collinear_model,
    collinear_profile,
    curve_character,
    curve_character_from_h0,
    curve_character_tail,
    empty_profile,
    enumerate_profiles,
    generic_model,
    generic_profile,
    z_from_character_tail,
)
from doubleplane.intfn import h0_plane
from doubleplane.triples import Triple, curve_class


def test_profile_validation():
    ZProfile(1, {1: 1})
    ZProfile(2, {2: 1, 3: 1})
    with pytest.raises(InvalidProfile):
        ZProfile(2, {1: 2})  # key below s
    with pytest.raises(InvalidProfile):
        ZProfile(2, {2: 1})  # total != s
    with pytest.raises(InvalidProfile):
        ZProfile(1, {1: 0})  # zero multiplicity
    with pytest.raises(InvalidProfile):
        ZProfile(-1, {})


def test_empty_profile_is_length_zero():
    e = empty_profile()
    assert e.s == 0
    assert e.length == 0
    assert e.h0(0) == 1
    assert e.h0(3) == h0_plane(3)


def test_collinear_profile_length():
    for z in range(1, 12):
        prof = collinear_profile(z)
        assert prof.s == 1
        assert prof.a == {z: 1}
        assert prof.length == z


def test_generic_profile_length_and_support():
    # second difference of -min(z, h0_plane) is supported on {s, s+1}
    for z in range(1, 60):
        prof = generic_profile(z)
        assert prof.length == z, z
        assert set(prof.a) <= {prof.s, prof.s + 1}
        assert h0_plane(prof.s) > z >= h0_plane(prof.s - 1)


def test_generic_profile_frozen_values():
    assert generic_profile(3).a == {2: 2}
    assert generic_profile(4).a == {2: 1, 3: 1}
    assert generic_profile(5).a == {3: 2}
    assert generic_profile(6).a == {3: 3}
    assert generic_profile(1) == collinear_profile(1)
    assert generic_profile(2) == collinear_profile(2)


def test_profile_h0_defect_is_z_eventually():
    # h0 of the ideal of Z drops below the full plane count by exactly z
    for prof in (collinear_profile(5), generic_profile(5), generic_profile(9)):
        for m in range(12, 16):
            assert prof.h0(m) == h0_plane(m) - prof.length


def test_collinear_h0_matches_points_on_a_line():
    # z points on a line impose min(m+1, z) conditions in degree m
    z = 6
    prof = collinear_profile(z)
    for m in range(0, 12):
        assert prof.h0(m) == h0_plane(m) - min(m + 1, z)


def test_generic_h0_matches_general_position():
    for z in range(1, 25):
        prof = generic_profile(z)
        for m in range(0, 12):
            assert prof.h0(m) == max(0, h0_plane(m) - z), (z, m)


def test_enumerate_profiles_contains_both_models():
    profs = enumerate_profiles(4, 3)
    assert collinear_profile(4) in profs
    assert generic_profile(4) in profs
    # s = 3 needs a partition of 4 + 3 = 7 into three parts >= 3: impossible
    assert all(p.s <= 2 for p in profs)
    for p in profs:
        assert p.length == 4


def test_enumerate_profiles_zero():
    assert enumerate_profiles(0, 2) == [empty_profile()]


def test_model_validation():
    with pytest.raises(InvalidModel):
        CurveModel(Triple(3, 1, 3), generic_profile(3))  # s = 2 > y = 1
    with pytest.raises(InvalidModel):
        CurveModel(Triple(2, 1, 3), collinear_profile(3))  # wrong length
    m = collinear_model(Triple(2, 1, 3))
    assert m.zprofile.s == 1


def models_under(max_d):
    for p in range(1, max_d):
        for y in range(0, min(p, max_d - p) + 1):
            for z in range(0, 9):
                try:
                    t = Triple(z, y, p)
                except Exception:
                    continue
                for make in (collinear_model, generic_model):
                    try:
                        yield make(t)
                    except (InvalidModel, InvalidProfile):
                        continue


def test_curve_character_weighted_sums():
    # third-difference origin forces sum 0, first moment d, second 3d+2g-2
    count = 0
    for model in models_under(9):
        gamma = curve_character(model)
        cc = curve_class(model.triple)
        assert gamma.total() == 0
        assert sum(n * v for n, v in gamma.items()) == cc.d
        assert sum(n * n * v for n, v in gamma.items()) == 3 * cc.d + 2 * cc.g - 2
        count += 1
    assert count > 250


def test_curve_character_two_routes_agree():
    for model in models_under(9):
        assert curve_character(model) == curve_character_from_h0(model)


def test_curve_character_frozen_example():
    m = collinear_model(Triple(1, 1, 1))
    assert curve_character(m).to_dict() == {0: -1, 1: -1, 2: 3, 3: -1}


def test_character_tail_recovers_z():
    for model in models_under(9):
        tail = curve_character_tail(model)
        z = z_from_character_tail(tail, model.triple.p, model.zprofile.s)
        assert z == model.triple.z


def test_tail_total_mismatch_rejected():
    from doubleplane.intfn import IntFn

    with pytest.raises(ValueError):
        z_from_character_tail(IntFn({4: 1}), 3, 2)


def test_character_of_acm_curve_has_no_tail_beyond_p():
    # z = 0: no point scheme, the character stops at degree p
    m = collinear_model(Triple(0, 2, 3))
    gamma = curve_character(m)
    assert max(gamma.support()) <= m.triple.p
