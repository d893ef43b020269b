"""Catalog builders, triple extraction, and degeneration verification."""

from fractions import Fraction

import pytest

from doubleplane.catalog import (
    CatalogEntry,
    ExtractionError,
    SpecializationError,
    binary_resultant,
    catalog_entry,
    conic_fiber,
    extract_report,
    extract_triple,
    extraction_window,
    extremal_like_ideal,
    family_fiber,
    limit_ideal,
    limit_presentation_ideal,
    predicted_limit_triple,
    predicted_source_triple,
    verify_specialization,
)
from doubleplane.polyoracle import (
    GradedIdeal,
    Poly,
    format_ideal,
    hf_quotient,
    member,
    parse_ideal,
    variables,
)
from doubleplane.triples import CurveClass, Triple, curve_class

X, Y, Z, W = variables()


def test_frozen_generators():
    assert format_ideal(extremal_like_ideal(1, 2)) == (
        "x^2\nx*y^2\nx*y*z + y^3\nx*y*w + x*z^2 + y^2*z\n"
    )
    assert format_ideal(limit_ideal(1, 2)) == "x^2\nx*y\ny^4\nx*z^3 + y^3*w\n"
    assert limit_presentation_ideal(1, 2) == parse_ideal(
        "x^2\nx*y^2\nx*y*z\nx*y*w\ny^4\ny^3*w + x*z^3"
    )
    assert family_fiber(1, 2, 1) == parse_ideal(
        "x^2\nx*y^2\ny^3 - x*y*z\nx*y*w - y^2*z + x*z^2"
    )
    assert hf_quotient(extremal_like_ideal(1, 2), 6) == 25


def test_builder_parameter_checks():
    for bad in ((1, 1), (-1, 2)):
        with pytest.raises(ValueError):
            extremal_like_ideal(*bad)
        with pytest.raises(ValueError):
            limit_ideal(*bad)
    with pytest.raises(ValueError):
        family_fiber(0, 0)
    with pytest.raises(TypeError):
        family_fiber(1, 2, 0.5)
    with pytest.raises(TypeError):
        conic_fiber(0.5)


def test_builders_are_cached():
    assert limit_ideal(1, 2) is limit_ideal(1, 2)
    assert family_fiber(1, 2, 0) is limit_ideal(1, 2)
    assert family_fiber(1, 2, Fraction(0)) is limit_ideal(1, 2)
    assert extremal_like_ideal(2, 3) is extremal_like_ideal(2, 3)


def test_binary_resultant():
    assert binary_resultant(Z, W) == 1
    assert binary_resultant(Z + W, Z - W) == -2
    assert binary_resultant(Z, Z) == 0
    assert binary_resultant(Poly.constant(2), Poly.constant(3)) == 1
    assert binary_resultant(Poly.constant(2), W ** 3) == 8
    with pytest.raises(ValueError):
        binary_resultant(X, W)
    with pytest.raises(ValueError):
        binary_resultant(Poly({}), W)


def test_extremal_like_overrides():
    ideal = extremal_like_ideal(1, 2, s=W, f=W, g=Z)
    assert extract_triple(ideal, 8) == Triple(1, 2, 2)
    with pytest.raises(ValueError):
        extremal_like_ideal(1, 2, s=Z ** 3)
    with pytest.raises(ValueError):
        extremal_like_ideal(1, 2, f=Z, g=Z)  # common zero at w = 0


def test_predicted_triples_share_a_class():
    for r in range(4):
        for p in range(2, 5):
            src = predicted_source_triple(r, p)
            lim = predicted_limit_triple(r, p)
            assert src == Triple(r, 2, p)
            assert lim == Triple(r + p - 2, 1, p + 1)
            assert curve_class(src) == curve_class(lim)
            pres = limit_presentation_ideal(r, p)
            assert all(member(g, limit_ideal(r, p)) for g in pres.generators)


def test_extraction_window():
    assert extraction_window(Triple(1, 1, 3)) == 8
    assert extraction_window(Triple(2, 1, 5)) == 11


def test_extract_on_small_grid():
    for r in range(3):
        for p in (2, 3):
            src = predicted_source_triple(r, p)
            assert extract_triple(extremal_like_ideal(r, p), extraction_window(src)) == src
            lim = predicted_limit_triple(r, p)
            assert extract_triple(limit_ideal(r, p), extraction_window(lim)) == lim


def test_extract_report_details():
    ideal = limit_ideal(1, 2)
    rep = extract_report(ideal, 8)
    assert rep.triple == Triple(1, 1, 3)
    assert rep.curve_class == CurveClass(4, 0)
    assert rep.quotient_hf[8] == 4 * 8 + 1
    assert rep.saturated_dims == {n: ideal.piece(n).rank for n in range(9)}
    assert rep.stabilized_at[8] == 0
    # colon by x leaves the line y = 0 on the plane, a degree-1 residual
    assert rep.residual_hf[0] == 1
    assert rep.residual_hf[5] == 6


def test_extract_rejects_non_curves():
    with pytest.raises(ValueError):
        extract_report(limit_ideal(1, 2), 4)
    with pytest.raises(ExtractionError, match="not a curve on the double plane"):
        extract_report(GradedIdeal([]), 6)
    twisted = parse_ideal("x*z - y^2\nx*w - y*z\ny*w - z^2")
    with pytest.raises(ExtractionError, match="not a curve on the double plane"):
        extract_report(twisted, 6)
    with pytest.raises(ExtractionError, match="no curve tail"):
        extract_report(parse_ideal("x"), 6)
    with pytest.raises(ExtractionError, match="no curve tail"):
        extract_report(parse_ideal("x\ny\nz"), 6)


def test_conic_family_fibers():
    ribbon = conic_fiber(1)
    assert ribbon == parse_ideal("x^2\nx*y\ny^2\nx + y")
    assert extract_triple(ribbon, 5) == Triple(0, 1, 1)
    plane_conic = conic_fiber(0)
    assert plane_conic == parse_ideal("x\ny^2")
    assert extract_triple(plane_conic, 5) == Triple(0, 0, 2)
    halved = conic_fiber(Fraction(1, 2))
    assert halved == parse_ideal("x^2\nx*y\ny^2\n2*x + y")
    assert extract_triple(halved, 5) == Triple(0, 1, 1)


def test_family_rational_parameter():
    ideal = family_fiber(1, 2, Fraction(1, 2))
    assert ideal == parse_ideal("x^2\nx*y^2\ny^3 - 2*x*y*z\n4*x*y*w - y^2*z + 2*x*z^2")
    assert extract_triple(ideal, 8) == Triple(1, 2, 2)


def test_verify_specialization():
    rep = verify_specialization(1, 2, sat_degree=6)
    assert rep.ok
    assert rep.source_extracted == Triple(1, 2, 2)
    assert rep.limit_extracted == Triple(1, 1, 3)
    assert rep.class_preserved
    assert rep.presentation_members
    assert rep.saturation_matches
    assert rep.checked_through == 6
    assert rep.failures == ()


def test_specialization_error_carries_report(monkeypatch):
    import doubleplane.catalog as cat

    monkeypatch.setattr(cat, "predicted_source_triple", lambda r, p: Triple(0, 2, 2))
    with pytest.raises(SpecializationError) as excinfo:
        cat.verify_specialization(1, 2, sat_degree=4)
    rep = excinfo.value.report
    assert not rep.ok
    assert any("general fiber extracted" in f for f in rep.failures)


def test_catalog_entry_parsing():
    entry = catalog_entry("limit:1,2")
    assert isinstance(entry, CatalogEntry)
    assert entry.ideal is limit_ideal(1, 2)
    assert entry.predicted == Triple(1, 1, 3)
    assert entry.family_params is None

    fam = catalog_entry("family:1,2,0")
    assert fam.ideal is limit_ideal(1, 2)
    assert fam.predicted == Triple(1, 1, 3)
    assert fam.family_params == (1, 2)

    assert catalog_entry("family:1,2,1/2").predicted == Triple(1, 2, 2)
    assert catalog_entry("extremal-like:0,3").predicted == Triple(0, 2, 3)
    assert catalog_entry("conic:0").predicted == Triple(0, 0, 2)
    assert catalog_entry("conic:2").predicted == Triple(0, 1, 1)


def test_catalog_entry_errors():
    with pytest.raises(ValueError, match="unknown catalog family"):
        catalog_entry("nope:1,2")
    with pytest.raises(ValueError, match="bad catalog name"):
        catalog_entry("limit:1")
    with pytest.raises(ValueError, match="bad catalog name"):
        catalog_entry("limit:a,b")
    with pytest.raises(ValueError, match="bad catalog name"):
        catalog_entry("family:1,2,1/0")
    with pytest.raises(ValueError):
        catalog_entry("limit")
