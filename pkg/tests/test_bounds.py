"""Rao bounds, attainment, and the four-way classification."""

import pytest

from doubleplane.bounds import (
    CurveKind,
    bounds_for,
    classify,
    classify_quadric_divisor,
    extremal_bound,
    genus_ceilings,
    subextremal_bound,
)
from doubleplane.characters import collinear_model, generic_model
from doubleplane.cohomology import rao_function
from doubleplane.intfn import choose2
from doubleplane.triples import Triple, curve_class

from test_characters import models_under


def test_extremal_bound_shape():
    fn = extremal_bound(5, 0)
    # plateau of height (d-2)(d-3)/2 - g = 3 on [0, 3], slope one outside
    assert fn.to_dict() == {-2: 1, -1: 2, 0: 3, 1: 3, 2: 3, 3: 3, 4: 2, 5: 1}
    assert extremal_bound(2, 0).is_zero()
    with pytest.raises(ValueError):
        extremal_bound(1, 0)
    with pytest.raises(ValueError):
        extremal_bound(5, 4)


def test_subextremal_bound_shape():
    fn = subextremal_bound(6, 1)
    # height (d-3)(d-4)/2 + 1 - g = 3 on [1, 3]
    assert fn.to_dict() == {-1: 1, 0: 2, 1: 3, 2: 3, 3: 3, 4: 2, 5: 1}
    with pytest.raises(ValueError):
        subextremal_bound(3, 0)
    with pytest.raises(ValueError):
        subextremal_bound(6, 5)


def test_classification_cases():
    col = collinear_model
    assert classify(col(Triple(0, 0, 3))) is CurveKind.PLANAR
    assert classify(col(Triple(0, 1, 1))) is CurveKind.PLANAR
    assert classify(col(Triple(1, 1, 1))) is CurveKind.EXTREMAL
    assert classify(col(Triple(0, 1, 4))) is CurveKind.EXTREMAL
    assert classify(col(Triple(5, 1, 2))) is CurveKind.EXTREMAL
    assert classify(col(Triple(0, 2, 2))) is CurveKind.EXTREMAL
    assert classify(col(Triple(1, 2, 2))) is CurveKind.SUBEXTREMAL
    assert classify(col(Triple(0, 2, 5))) is CurveKind.SUBEXTREMAL
    assert classify(col(Triple(0, 3, 3))) is CurveKind.SUBEXTREMAL
    assert classify(col(Triple(0, 3, 4))) is CurveKind.OTHER
    assert classify(col(Triple(2, 3, 3))) is CurveKind.OTHER


def test_classification_depends_on_profile():
    # subextremal needs the point scheme on a line: s <= 1
    t = Triple(3, 2, 4)
    assert classify(collinear_model(t)) is CurveKind.SUBEXTREMAL
    assert classify(generic_model(t)) is CurveKind.OTHER


def test_bound_attainment_iff_kind():
    for model in models_under(9):
        kind = classify(model)
        ext, sub = bounds_for(model)
        rao = rao_function(model)
        if kind is CurveKind.PLANAR:
            assert ext is None and sub is None
            continue
        assert ext is not None
        assert rao.leq(ext)
        assert (rao == ext) == (kind is CurveKind.EXTREMAL)
        if kind is CurveKind.EXTREMAL:
            assert sub is None
            continue
        cc = curve_class(model.triple)
        if cc.d >= 4 and cc.g <= choose2(cc.d - 3) + 1:
            assert sub is not None
            assert rao.leq(sub)
            assert (rao == sub) == (kind is CurveKind.SUBEXTREMAL)
        else:
            assert sub is None
            assert kind is not CurveKind.SUBEXTREMAL


def test_every_nonplanar_nonextremal_has_degree_four():
    # the subextremal bound applies to every curve it should apply to
    for model in models_under(9):
        kind = classify(model)
        if kind in (CurveKind.SUBEXTREMAL, CurveKind.OTHER):
            assert curve_class(model.triple).d >= 4


def test_genus_ceilings():
    gc = genus_ceilings(6)
    assert gc.planar_g == choose2(5) == 10
    assert gc.nonplanar_max_g == choose2(4) == 6
    assert gc.nonextremal_max_g == choose2(3) + 1 == 4
    gc = genus_ceilings(2)
    assert gc.planar_g == 0
    assert gc.nonplanar_max_g == 0
    assert gc.nonextremal_max_g is None
    with pytest.raises(ValueError):
        genus_ceilings(0)


def test_quadric_divisor_classification():
    assert classify_quadric_divisor(0, 1) is CurveKind.PLANAR
    assert classify_quadric_divisor(1, 1) is CurveKind.PLANAR
    assert classify_quadric_divisor(2, 2) is CurveKind.EXTREMAL
    assert classify_quadric_divisor(1, 2) is CurveKind.EXTREMAL
    assert classify_quadric_divisor(3, 3) is CurveKind.SUBEXTREMAL
    assert classify_quadric_divisor(2, 4) is CurveKind.OTHER
    with pytest.raises(ValueError):
        classify_quadric_divisor(2, 1)
    with pytest.raises(ValueError):
        classify_quadric_divisor(0, 0)


def test_kind_values_are_lowercase_names():
    assert CurveKind.PLANAR.value == "planar"
    assert CurveKind.EXTREMAL.value == "extremal"
    assert CurveKind.SUBEXTREMAL.value == "subextremal"
    assert CurveKind.OTHER.value == "other"
