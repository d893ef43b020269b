"""Self-verification suite.

Each criterion checks one advertised property of the package at zero
tolerance, over either a scan of the classification (bounded degree, genus
within a fixed span of the maximum) or the built-in ideal catalog.  The CLI
selftest verb runs these, and the test suite mirrors them one to one.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from . import cohomology
from .bounds import CurveKind, classify, extremal_bound, subextremal_bound
from .catalog import (
    SpecializationError,
    conic_fiber,
    extract_report,
    extract_triple,
    extraction_window,
    extremal_like_ideal,
    limit_ideal,
    predicted_limit_triple,
    predicted_source_triple,
    verify_specialization,
)
from .characters import (
    CurveModel,
    collinear_model,
    curve_character,
    curve_character_from_h0,
    curve_character_tail,
    generic_profile,
    z_from_character_tail,
)
from .hilbert_scheme import components, is_connected, nonempty, planar_genus
from .intfn import choose2
from .liaison import bilink, liaison_invariants, link
from .polyoracle import hp_fit
from .triples import Triple, component_dim, curve_class, flag_dim, section_space_dim

# Genus scan window: every class with g within this span of the non-planar
# maximum (plus the planar class).  z is unbounded in principle; the span
# caps it so scans terminate while still crossing every classification kind.
GENUS_SPAN = 40


@lru_cache(maxsize=None)
def scan_triples(max_d: int, genus_span: int = GENUS_SPAN) -> tuple[Triple, ...]:
    """Components of every nonempty class with d <= max_d in the genus window."""
    out: list[Triple] = []
    for d in range(1, max_d + 1):
        floor = choose2(d - 2) - genus_span
        for g in range(planar_genus(d), floor - 1, -1):
            if nonempty(d, g):
                out.extend(components(d, g))
    return tuple(out)


@lru_cache(maxsize=None)
def scan_models(max_d: int) -> tuple[CurveModel, ...]:
    """One model per admissible point-profile constructor per scanned triple."""
    models: list[CurveModel] = []
    for t in scan_triples(max_d):
        cm = collinear_model(t)
        models.append(cm)
        gp = generic_profile(t.z)
        if gp.s <= t.y and gp != cm.zprofile:
            models.append(CurveModel(t, gp))
    return tuple(models)


def _component_census(deep: bool) -> tuple[bool, str]:
    top = 16 if deep else 12
    want = [Triple(0, 1, 1), Triple(0, 0, 2)]
    got = components(2, 0)
    if got != want:
        return False, f"components(2,0) = {[str(t) for t in got]}"
    for d in range(3, top + 1):
        planar = components(d, planar_genus(d))
        if planar != [Triple(0, 0, d)]:
            return False, f"planar census fails at d={d}: {[str(t) for t in planar]}"
    return True, f"two components at (2,0); single planar component for d=3..{top}"


def _dimension_identity(deep: bool) -> tuple[bool, str]:
    top = 14 if deep else 12
    count = 0
    for t in scan_triples(top):
        if component_dim(t) != flag_dim(t) + section_space_dim(t):
            return False, f"dimension identity fails at {t}"
        count += 1
    return True, f"{count} components: total dim = flag dim + section dim"


def _connectedness(deep: bool) -> tuple[bool, str]:
    top = 14 if deep else 12
    classes = 0
    for d in range(1, top + 1):
        floor = choose2(d - 2) - GENUS_SPAN
        for g in range(planar_genus(d), floor - 1, -1):
            if not nonempty(d, g):
                continue
            if not is_connected(d, g):
                return False, f"({d},{g}) is not connected"
            classes += 1
    return True, f"{classes} nonempty classes are connected"


def _rao_bounds(deep: bool) -> tuple[bool, str]:
    top = 12 if deep else 10
    checked = 0
    for model in scan_models(top):
        kind = classify(model)
        rao = cohomology.rao_function(model)
        where = f"{model.triple} (s={model.zprofile.s})"
        if kind is CurveKind.PLANAR:
            if not rao.is_zero():
                return False, f"planar model {where} has nonzero Rao function"
            continue
        cc = curve_class(model.triple)
        rho_e = extremal_bound(cc.d, cc.g)
        if not rao.leq(rho_e):
            return False, f"Rao function exceeds the extremal bound at {where}"
        if (rao == rho_e) != (kind is CurveKind.EXTREMAL):
            return False, f"extremal equality characterization fails at {where}"
        if kind is CurveKind.EXTREMAL:
            checked += 1
            continue
        if cc.d < 4:
            return False, f"non-extremal model of degree < 4 at {where}"
        rho_s = subextremal_bound(cc.d, cc.g)
        if not rao.leq(rho_s):
            return False, f"Rao function exceeds the subextremal bound at {where}"
        if (rao == rho_s) != (kind is CurveKind.SUBEXTREMAL):
            return False, f"subextremal equality characterization fails at {where}"
        checked += 1
    return True, f"{checked} non-planar models against both bounds, equality iff kind"


def _duality(deep: bool) -> tuple[bool, str]:
    top = 12 if deep else 10
    checked = 0
    for model in scan_models(top):
        d = curve_class(model.triple).d
        for n in range(-6, d + 7):
            if cohomology.h1(model, n) != cohomology.h1(model, d - 2 - n):
                return False, f"duality fails at {model.triple}, n={n}"
        checked += 1
    return True, f"{checked} models satisfy h1(n) = h1(d-2-n) on [-6, d+6]"


def _character_crosscheck(deep: bool) -> tuple[bool, str]:
    top = 12 if deep else 10
    checked = 0
    for model in scan_models(top):
        where = f"{model.triple} (s={model.zprofile.s})"
        if curve_character(model) != curve_character_from_h0(model):
            return False, f"character mismatch at {where}"
        recovered = z_from_character_tail(
            curve_character_tail(model), model.triple.p, model.zprofile.s
        )
        if recovered != model.triple.z:
            return False, f"tail recovers z = {recovered} at {where}"
        checked += 1
    return True, f"{checked} models: closed form equals section counts, z recovered"


def _catalog_grid() -> Iterable[tuple[int, int]]:
    for r in range(4):
        for p in range(2, 5):
            yield r, p


def _oracle_vs_formulas(deep: bool) -> tuple[bool, str]:
    checked = 0
    for r, p in _catalog_grid():
        pairs = (
            (extremal_like_ideal(r, p), predicted_source_triple(r, p)),
            (limit_ideal(r, p), predicted_limit_triple(r, p)),
        )
        for ideal, t in pairs:
            window = max(extraction_window(t), 8)
            cc = curve_class(t)
            fit = hp_fit(ideal, 0, window)
            if (fit.d, fit.g) != (cc.d, cc.g):
                return False, f"hp_fit gives {fit}, expected {cc}, for {t}"
            rep = extract_report(ideal, window)
            if rep.triple != t:
                return False, f"extraction gives {rep.triple}, expected {t}"
            model = collinear_model(t)
            for n in range(9):
                formula = cohomology.h0(model, n)
                if rep.saturated_dims[n] != formula:
                    return False, (
                        f"saturated dim {rep.saturated_dims[n]} != "
                        f"formula h0 {formula} at degree {n} for {t}"
                    )
            checked += 1
    return True, f"{checked} catalog ideals match the formula layer through degree 8"


def _specialization(deep: bool) -> tuple[bool, str]:
    done = 0
    for r, p in _catalog_grid():
        try:
            verify_specialization(r, p, sat_degree=10)
        except SpecializationError as exc:
            return False, f"(r,p)=({r},{p}): {exc}"
        done += 1
    return True, f"{done} degenerations verified, saturation identity through degree 10"


def _conic_family(deep: bool) -> tuple[bool, str]:
    for t, expected in ((1, Triple(0, 1, 1)), (0, Triple(0, 0, 2))):
        ideal = conic_fiber(t)
        fit = hp_fit(ideal, 0, 6)
        if (fit.d, fit.g) != (2, 0):
            return False, f"fiber t={t} has class {fit}, expected (2,0)"
        got = extract_triple(ideal, max(extraction_window(expected), 5))
        if got != expected:
            return False, f"fiber t={t} extracts {got}, expected {expected}"
    return True, "both fibers have Hilbert polynomial 2n+1 and the predicted triples"


def _liaison_algebra(deep: bool) -> tuple[bool, str]:
    rng = random.Random(93400815)
    models = scan_models(12 if deep else 10)
    target = 500 if deep else 200
    links = 0
    bilinks = 0
    while links + bilinks < target:
        model = rng.choice(models)
        t = model.triple
        s = model.zprofile.s
        inv = liaison_invariants(model)
        d = curve_class(t).d
        if rng.random() < 0.5:
            q = t.p + s + rng.randrange(5)
            try:
                linked = link(model, q)
            except ValueError:
                continue
            if liaison_invariants(linked) != inv:
                return False, f"link breaks the invariants at {t} with q={q}"
            if curve_class(linked.triple).d != 2 * q - d:
                return False, f"link degree is not 2q-d at {t} with q={q}"
            if link(linked, q) != model:
                return False, f"link is not an involution at {t} with q={q}"
            links += 1
        else:
            y_new = s + rng.randrange(5)
            try:
                moved = bilink(model, y_new)
            except ValueError:
                continue
            if liaison_invariants(moved) != inv:
                return False, f"bilink breaks the invariants at {t} with y'={y_new}"
            if bilink(moved, t.y) != model:
                return False, f"bilink does not invert at {t} via y'={y_new}"
            bilinks += 1
    return True, f"{links} links and {bilinks} double links preserve (z, p-y)"


_CRITERIA: tuple[tuple[str, Callable[[bool], tuple[bool, str]]], ...] = (
    ("component-census", _component_census),
    ("dimension-identity", _dimension_identity),
    ("connectedness", _connectedness),
    ("rao-bounds", _rao_bounds),
    ("duality", _duality),
    ("character-crosscheck", _character_crosscheck),
    ("oracle-vs-formulas", _oracle_vs_formulas),
    ("specialization", _specialization),
    ("conic-family", _conic_family),
    ("liaison-algebra", _liaison_algebra),
)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


def criterion_count() -> int:
    return len(_CRITERIA)


def criterion_names() -> tuple[str, ...]:
    return tuple(name for name, _ in _CRITERIA)


def run_criterion(number: int, deep: bool = False) -> CriterionResult:
    """Run one numbered criterion; a crash counts as a failure, not an abort."""
    if not 1 <= number <= len(_CRITERIA):
        raise ValueError(f"criterion number must be in 1..{len(_CRITERIA)}")
    name, fn = _CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        passed, detail = fn(deep)
    except Exception as exc:
        passed, detail = False, f"exception: {exc!r}"
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start)


def run_all(
    deep: bool = False, only: Iterable[int] | None = None
) -> list[CriterionResult]:
    numbers = sorted(set(only)) if only else range(1, len(_CRITERIA) + 1)
    return [run_criterion(n, deep) for n in numbers]
