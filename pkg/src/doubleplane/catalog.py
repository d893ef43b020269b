"""Explicit curve ideals on the double plane and their degenerations.

Every builder returns a cached GradedIdeal, so repeated queries against one
family member share all elimination work.  extract_report recovers the
numerical triple of a curve from saturated Hilbert data alone; that is the
bridge over which the formula layer and the exact-arithmetic oracle check
each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .intfn import h0_space
from .polyoracle import (
    GradedIdeal,
    HilbertFitError,
    Poly,
    colon_dim,
    fit_linear_tail,
    graded_piece_dim,
    poly_vector,
    saturation_member,
    saturation_piece,
    variables,
)
from .triples import CurveClass, Triple, curve_class, triple_from_class

X, Y, Z, W = variables()


class ExtractionError(ValueError):
    """Raised when an ideal does not present a double-plane curve cleanly."""


class SpecializationError(RuntimeError):
    """Raised when a degeneration check fails; carries the report."""

    def __init__(self, report: "SpecializationReport"):
        super().__init__("; ".join(report.failures))
        self.report = report


# --------------------------------------------------------------------------
# binary forms on the line x = y = 0


def _binary_coeffs(form: Poly, degree: int, label: str) -> list[int]:
    """Coefficients of a form in z and w, indexed by the w-exponent."""
    if form.is_zero() or form.degree != degree:
        raise ValueError(f"{label} must be a nonzero form of degree {degree}")
    coeffs = [0] * (degree + 1)
    for mono, c in form.terms.items():
        if mono[0] or mono[1]:
            raise ValueError(f"{label} must involve only z and w")
        coeffs[mono[3]] = c
    return coeffs


def _det(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix (Bareiss)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def binary_resultant(f: Poly, g: Poly) -> int:
    """Sylvester resultant of two binary forms in z and w.

    Nonzero exactly when f and g have no common zero on the line x = y = 0.
    Degree-zero forms follow the usual conventions: two constants have
    resultant 1, and a constant c against a degree-n form contributes c^n.
    """
    fc = _binary_coeffs(f, f.degree, "f")
    gc = _binary_coeffs(g, g.degree, "g")
    m, n = f.degree, g.degree
    size = m + n
    if size == 0:
        return 1
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(fc):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(gc):
            row[i + j] = c
        rows.append(row)
    return _det(rows)


# --------------------------------------------------------------------------
# the family and its endpoints


def _check_params(r: int, p: int) -> None:
    if not isinstance(r, int) or not isinstance(p, int):
        raise ValueError("r and p must be integers")
    if p < 2:
        raise ValueError(f"p = {p} < 2")
    if r < 0:
        raise ValueError(f"r = {r} < 0")


def predicted_source_triple(r: int, p: int) -> Triple:
    return Triple(r, 2, p)


def predicted_limit_triple(r: int, p: int) -> Triple:
    return Triple(r + p - 2, 1, p + 1)


@lru_cache(maxsize=None)
def extremal_like_ideal(
    r: int,
    p: int,
    s: Poly | None = None,
    f: Poly | None = None,
    g: Poly | None = None,
) -> GradedIdeal:
    """Ideal of a curve with triple (r, 2, p).

    Generators: x^2, x*y^2, y^(p+1) + x*y*s, x*s*f + x*y*g + y^p*f, where
    s, f, g are binary forms in z and w of degrees p-1, r, r+p-2.  The
    defaults are the pure powers z^(p-1), z^r, w^(r+p-2).  f and g must not
    vanish simultaneously on the line x = y = 0; overrides are screened by
    the resultant.
    """
    _check_params(r, p)
    if s is None:
        s = Z ** (p - 1)
    if f is None:
        f = Z**r
    if g is None:
        g = W ** (r + p - 2)
    _binary_coeffs(s, p - 1, "s")
    _binary_coeffs(f, r, "f")
    _binary_coeffs(g, r + p - 2, "g")
    if binary_resultant(f, g) == 0:
        raise ValueError("f and g share a zero on the line x = y = 0")
    return GradedIdeal(
        [
            X * X,
            X * Y * Y,
            Y ** (p + 1) + X * Y * s,
            X * s * f + X * Y * g + Y**p * f,
        ]
    )


@lru_cache(maxsize=None)
def limit_ideal(r: int, p: int) -> GradedIdeal:
    """Ideal of the degeneration, a curve with triple (r+p-2, 1, p+1)."""
    _check_params(r, p)
    return GradedIdeal(
        [
            X * X,
            X * Y,
            Y ** (p + 2),
            Y ** (p + 1) * W ** (r + p - 2) + X * Z ** (r + 2 * p - 2),
        ]
    )


@lru_cache(maxsize=None)
def family_fiber(r: int, p: int, t: Fraction | int = 1) -> GradedIdeal:
    """Fiber over t of the pencil degenerating (r, 2, p) into (r+p-2, 1, p+1).

    A rational t is cleared to integer coefficients generator by generator,
    which leaves the ideal unchanged.  The fiber at t = 0 is emitted as the
    known limit ideal; that this is the correct flat limit is what
    verify_specialization checks.
    """
    _check_params(r, p)
    if not isinstance(t, (int, Fraction)):
        raise TypeError("t must be an integer or a Fraction")
    t = Fraction(t)
    if t == 0:
        return limit_ideal(r, p)
    a, b = t.numerator, t.denominator
    return GradedIdeal(
        [
            X * X,
            X * Y * Y,
            a * Y ** (p + 1) - b * X * Y * Z ** (p - 1),
            b * b * X * Y * W ** (r + p - 2)
            - a * a * Y**p * Z**r
            + a * b * X * Z ** (r + p - 1),
        ]
    )


@lru_cache(maxsize=None)
def limit_presentation_ideal(r: int, p: int) -> GradedIdeal:
    """Unsaturated presentation of the t = 0 fiber.

    Its saturation must coincide with limit_ideal(r, p) degree by degree;
    verify_specialization asserts exactly that.
    """
    _check_params(r, p)
    return GradedIdeal(
        [
            X * X,
            X * Y * Y,
            X * Y * Z ** (p - 1),
            X * Y * W ** (r + p - 2),
            Y ** (p + 2),
            Y ** (p + 1) * W ** (r + p - 2) + X * Z ** (r + 2 * p - 2),
        ]
    )


@lru_cache(maxsize=None)
def conic_fiber(t: Fraction | int = 1) -> GradedIdeal:
    """Fiber of the pencil joining a double line to a plane conic.

    For t != 0 the ideal is <x^2, xy, y^2, x + t*y> (a ribbon on a line,
    triple (0,1,1)); at t = 0 the degree-1 piece tips over to x alone and
    the fiber is the plane conic <x, y^2> with triple (0,0,2).
    """
    if not isinstance(t, (int, Fraction)):
        raise TypeError("t must be an integer or a Fraction")
    t = Fraction(t)
    if t == 0:
        return GradedIdeal([X, Y * Y])
    a, b = t.numerator, t.denominator
    return GradedIdeal([X * X, X * Y, Y * Y, b * X + a * Y])


# --------------------------------------------------------------------------
# triple extraction


@dataclass(frozen=True)
class ExtractReport:
    """Everything read off an ideal while recovering its triple."""

    triple: Triple
    curve_class: CurveClass
    quotient_hf: dict[int, int]
    saturated_dims: dict[int, int]
    stabilized_at: dict[int, int]
    residual_hf: dict[int, int]


def extraction_window(t: Triple) -> int:
    """A degree bound past the saturation regularity of the built-in families."""
    return curve_class(t).d + t.z + 3


def extract_report(
    ideal: GradedIdeal, max_degree: int, guard: int | None = None
) -> ExtractReport:
    """Recover the numerical triple of a curve ideal from exact Hilbert data.

    Degree and genus come from the linear tail of the saturated quotient
    Hilbert function; the residual degree y from the quotient under colon by
    x (a colon containing the constants means the residual is empty, y = 0);
    the embedded length z from inverting the genus formula.  The window must
    reach past the regularity of the saturation or the tail fits fail; for
    the built-in families extraction_window of the expected triple suffices.
    """
    if max_degree < 5:
        raise ValueError("max_degree must be at least 5")
    sat = {n: saturation_piece(ideal, n, guard) for n in range(max_degree + 1)}
    if not sat[2].echelon.contains(poly_vector(X * X)):
        raise ExtractionError(
            "x^2 is not in the saturation: not a curve on the double plane"
        )
    quotient_hf = {n: h0_space(n) - piece.dim for n, piece in sat.items()}
    try:
        cc = fit_linear_tail(sorted(quotient_hf.items()))
    except HilbertFitError as exc:
        raise ExtractionError(
            f"saturated Hilbert function has no curve tail: {exc}"
        ) from exc
    residual_hf = {
        n: h0_space(n) - colon_dim(sat[n + 1].echelon, X, n)
        for n in range(max_degree)
    }
    if residual_hf[0] == 0:
        y = 0
    else:
        try:
            y = fit_linear_tail(sorted(residual_hf.items())).d
        except HilbertFitError as exc:
            raise ExtractionError(
                f"residual Hilbert function has no curve tail: {exc}"
            ) from exc
    triple = triple_from_class(cc.d, cc.g, y)
    if triple is None:
        raise ExtractionError(
            f"degree {cc.d}, genus {cc.g}, residual degree {y} "
            "do not form a valid triple (z < 0 or malformed)"
        )
    return ExtractReport(
        triple=triple,
        curve_class=cc,
        quotient_hf=quotient_hf,
        saturated_dims={n: piece.dim for n, piece in sat.items()},
        stabilized_at={n: piece.stabilized_at for n, piece in sat.items()},
        residual_hf=residual_hf,
    )


def extract_triple(
    ideal: GradedIdeal, max_degree: int, guard: int | None = None
) -> Triple:
    return extract_report(ideal, max_degree, guard).triple


# --------------------------------------------------------------------------
# specialization verification


@dataclass(frozen=True)
class SpecializationReport:
    """Outcome of the four degeneration checks for one (r, p)."""

    r: int
    p: int
    source_expected: Triple
    source_extracted: Triple
    limit_expected: Triple
    limit_extracted: Triple
    class_preserved: bool
    presentation_members: bool
    saturation_matches: bool
    checked_through: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_specialization(r: int, p: int, sat_degree: int = 10) -> SpecializationReport:
    """Verify the flat degeneration of stratum (r, 2, p) onto (r+p-2, 1, p+1).

    Four checks must pass: the general fiber extracts to the source triple,
    the zero fiber extracts to the limit triple, both fibers share one
    curve class, and the unsaturated limit presentation saturates degree by
    degree to the limit ideal (in particular all its generators lie in the
    saturation).  Raises SpecializationError carrying the report otherwise.
    """
    src_expected = predicted_source_triple(r, p)
    lim_expected = predicted_limit_triple(r, p)
    failures: list[str] = []

    src_rep = extract_report(family_fiber(r, p, 1), extraction_window(src_expected))
    if src_rep.triple != src_expected:
        failures.append(
            f"general fiber extracted {src_rep.triple}, expected {src_expected}"
        )
    lim = family_fiber(r, p, 0)
    lim_rep = extract_report(lim, extraction_window(lim_expected))
    if lim_rep.triple != lim_expected:
        failures.append(
            f"zero fiber extracted {lim_rep.triple}, expected {lim_expected}"
        )

    class_preserved = src_rep.curve_class == lim_rep.curve_class
    if not class_preserved:
        failures.append(
            f"curve class jumps: {src_rep.curve_class} vs {lim_rep.curve_class}"
        )

    pres = limit_presentation_ideal(r, p)
    presentation_members = all(
        saturation_member(gen, lim) for gen in pres.generators
    )
    if not presentation_members:
        failures.append("a presentation generator is not in the limit saturation")

    saturation_matches = True
    for n in range(sat_degree + 1):
        piece = saturation_piece(pres, n)
        want = graded_piece_dim(lim, n)
        if piece.dim != want:
            saturation_matches = False
            failures.append(
                f"saturated presentation has dim {piece.dim} != {want} in degree {n}"
            )
            continue
        if not all(piece.echelon.contains(row) for row in lim.piece(n).rows()):
            saturation_matches = False
            failures.append(
                f"limit ideal piece escapes the presentation saturation in degree {n}"
            )

    report = SpecializationReport(
        r=r,
        p=p,
        source_expected=src_expected,
        source_extracted=src_rep.triple,
        limit_expected=lim_expected,
        limit_extracted=lim_rep.triple,
        class_preserved=class_preserved,
        presentation_members=presentation_members,
        saturation_matches=saturation_matches,
        checked_through=sat_degree,
        failures=tuple(failures),
    )
    if failures:
        raise SpecializationError(report)
    return report


# --------------------------------------------------------------------------
# named entries for the command line


@dataclass(frozen=True)
class CatalogEntry:
    """A named catalog ideal plus the triple it is predicted to realize."""

    name: str
    ideal: GradedIdeal
    predicted: Triple
    family_params: tuple[int, int] | None


CATALOG_FORMS = (
    "extremal-like:R,P",
    "limit:R,P",
    "family:R,P,T",
    "conic:T",
)


def catalog_entry(name: str) -> CatalogEntry:
    """Resolve a catalog name such as limit:1,2 or family:1,2,0 or conic:1."""
    kind, _, rest = name.partition(":")
    params = [piece.strip() for piece in rest.split(",")] if rest else []
    try:
        if kind == "extremal-like":
            r, p = (int(v) for v in params)
            return CatalogEntry(
                name, extremal_like_ideal(r, p), predicted_source_triple(r, p), None
            )
        if kind == "limit":
            r, p = (int(v) for v in params)
            return CatalogEntry(
                name, limit_ideal(r, p), predicted_limit_triple(r, p), None
            )
        if kind == "family":
            rv, pv, tv = params
            r, p, t = int(rv), int(pv), Fraction(tv)
            predicted = (
                predicted_source_triple(r, p)
                if t != 0
                else predicted_limit_triple(r, p)
            )
            return CatalogEntry(name, family_fiber(r, p, t), predicted, (r, p))
        if kind == "conic":
            (tv,) = params
            t = Fraction(tv)
            predicted = Triple(0, 1, 1) if t != 0 else Triple(0, 0, 2)
            return CatalogEntry(name, conic_fiber(t), predicted, None)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad catalog name {name!r}: {exc}") from exc
    raise ValueError(
        f"unknown catalog family {kind!r}; known forms: {', '.join(CATALOG_FORMS)}"
    )
