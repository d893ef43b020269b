"""Exact linear algebra on graded pieces of ideals in k[x, y, z, w].

This is the verification side of the package: homogeneous ideals are handled
degree by degree as integer matrices over the monomial basis, with
fraction-free row reduction, so every rank, colon and saturation computation
is exact.  Nothing here knows about the curve formulas; agreement between
the two routes is established in the tests and the acceptance suite.

Monomials are exponent 4-tuples ordered graded-lexicographically with
x > y > z > w.  Polynomials are finite integer combinations of monomials of
one common degree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, gcd
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .intfn import h0_space
from .triples import CurveClass

Monomial = tuple[int, int, int, int]

VARIABLE_NAMES = ("x", "y", "z", "w")


class ParseError(ValueError):
    """Raised on malformed polynomial or ideal text."""


class HilbertFitError(ValueError):
    """Raised when a Hilbert function tail is not exactly linear."""


class SaturationGuardError(RuntimeError):
    """Raised when saturation does not stabilize within the guard."""


# --------------------------------------------------------------------------
# monomials


@lru_cache(maxsize=None)
def monomials_of_degree(n: int) -> tuple[Monomial, ...]:
    """All degree-n monomials, largest first in graded lex with x > y > z > w."""
    if n < 0:
        return ()
    out = []
    for ex in range(n, -1, -1):
        for ey in range(n - ex, -1, -1):
            for ez in range(n - ex - ey, -1, -1):
                out.append((ex, ey, ez, n - ex - ey - ez))
    return tuple(out)


@lru_cache(maxsize=None)
def _index_of_degree(n: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials_of_degree(n))}


def monomial_degree(m: Monomial) -> int:
    return m[0] + m[1] + m[2] + m[3]


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


# --------------------------------------------------------------------------
# polynomials


class Poly:
    """A homogeneous polynomial with exact integer coefficients.

    The zero polynomial is the empty combination and reports degree None.
    Addition of nonzero polynomials of different degrees is rejected so that
    every value stays homogeneous.
    """

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping[Monomial, int]):
        cleaned: dict[Monomial, int] = {}
        deg = None
        for m, c in terms.items():
            if not isinstance(c, int):
                raise TypeError("coefficients must be integers")
            if c == 0:
                continue
            if (
                not isinstance(m, tuple)
                or len(m) != 4
                or any(not isinstance(e, int) or e < 0 for e in m)
            ):
                raise ValueError(f"bad monomial {m!r}")
            d = monomial_degree(m)
            if deg is None:
                deg = d
            elif d != deg:
                raise ValueError("polynomial is not homogeneous")
            cleaned[m] = c
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "degree", deg)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Poly is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    @staticmethod
    def constant(c: int) -> "Poly":
        return Poly({(0, 0, 0, 0): c})

    @staticmethod
    def variable(name: str) -> "Poly":
        i = VARIABLE_NAMES.index(name)
        expo = [0, 0, 0, 0]
        expo[i] = 1
        return Poly({tuple(expo): 1})

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return Poly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    def __rmul__(self, other: int) -> "Poly":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})" if not self.is_zero() else "Poly(0)"


def variables() -> tuple[Poly, Poly, Poly, Poly]:
    """The four coordinate forms x, y, z, w."""
    return tuple(Poly.variable(v) for v in VARIABLE_NAMES)


# --------------------------------------------------------------------------
# text format: one generator per line, terms like "3*x^2*y - w^3"

_TERM_RE = re.compile(r"^[+-]?\d+$|^([xyzw])(\^(\d+))?$")


def parse_poly(text: str) -> Poly:
    """Parse one polynomial; '#' starts a comment."""
    body = text.split("#", 1)[0].strip()
    if not body:
        raise ParseError("empty polynomial")
    chunks = re.findall(r"[+-]?[^+-]+", body.replace(" ", ""))
    if "".join(chunks) != body.replace(" ", ""):
        raise ParseError(f"cannot tokenize {text!r}")
    terms: dict[Monomial, int] = {}
    for chunk in chunks:
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        if not chunk:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = sign
        expo = [0, 0, 0, 0]
        for piece in chunk.split("*"):
            m = _TERM_RE.match(piece)
            if m is None:
                raise ParseError(f"bad factor {piece!r} in {text!r}")
            if m.group(1) is None:
                coeff *= int(piece)
            else:
                i = VARIABLE_NAMES.index(m.group(1))
                expo[i] += int(m.group(3)) if m.group(3) else 1
        mono = tuple(expo)
        terms[mono] = terms.get(mono, 0) + coeff
    poly = Poly(terms)
    if poly.is_zero():
        raise ParseError(f"polynomial {text!r} is zero")
    return poly


def format_poly(p: Poly) -> str:
    """Canonical text: terms largest-first, unit coefficients left implicit."""
    if p.is_zero():
        raise ValueError("cannot format the zero polynomial")
    parts: list[str] = []
    for m in sorted(p.terms, reverse=True):
        c = p.terms[m]
        factors = [
            f"{v}^{e}" if e > 1 else v
            for v, e in zip(VARIABLE_NAMES, m)
            if e
        ]
        mag = abs(c)
        if factors:
            body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
        else:
            body = str(mag)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def parse_ideal(text: str) -> "GradedIdeal":
    """Parse an ideal, one generator per line; blank and comment lines skipped."""
    gens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            gens.append(parse_poly(body))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return GradedIdeal(gens)


def format_ideal(ideal: "GradedIdeal") -> str:
    return "".join(format_poly(g) + "\n" for g in ideal.generators)


# --------------------------------------------------------------------------
# sparse fraction-free row echelon


def _normalize(row: dict[int, int]) -> dict[int, int]:
    """Divide by the content and make the leading coefficient positive."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if row[min(row)] < 0:
        g = -g
    if g != 1:
        for c in row:
            row[c] //= g
    return row


class RowEchelon:
    """Row echelon form over the rationals, kept as gcd-reduced integer rows.

    Rows are sparse dicts column -> coefficient; the pivot of a row is its
    smallest column.  Elimination is fraction-free: reducing r by pivot p
    replaces r with b*r - a*p where a, b are the colliding coefficients, then
    divides out the content, so entries stay small integers.
    """

    __slots__ = ("pivots",)

    def __init__(self) -> None:
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, int]) -> dict[int, int]:
        """Eliminate against the current pivots; empty result means membership."""
        work = {c: v for c, v in row.items() if v}
        pivots = self.pivots
        while work:
            lead = min(work)
            piv = pivots.get(lead)
            if piv is None:
                return _normalize(work)
            a = work.pop(lead)
            b = piv[lead]
            if b != 1:
                for c in work:
                    work[c] *= b
            for c, v in piv.items():
                if c == lead:
                    continue
                nv = work.get(c, 0) - a * v
                if nv:
                    work[c] = nv
                else:
                    work.pop(c, None)
            _normalize(work)
        return work

    def insert(self, row: Mapping[int, int]) -> bool:
        """Add a row to the span; returns True when the rank grew."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def contains(self, row: Mapping[int, int]) -> bool:
        return not self.reduce(row)

    def rows(self) -> Iterator[dict[int, int]]:
        return iter(self.pivots.values())


# --------------------------------------------------------------------------
# graded ideals


class GradedIdeal:
    """A homogeneous ideal given by nonzero homogeneous generators.

    The empty generator list is the zero ideal.  Graded pieces and
    saturation approximations are cached on the instance, so reusing one
    object across queries shares all elimination work.
    """

    __slots__ = ("generators", "_pieces", "_sat_state")

    def __init__(self, generators: Iterable[Poly]):
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, Poly):
                raise TypeError("generators must be Poly")
            if g.is_zero():
                raise ValueError("zero generator")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_pieces", {})
        object.__setattr__(self, "_sat_state", {})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GradedIdeal is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedIdeal):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"GradedIdeal<{len(self.generators)} generators>"

    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=1)

    def default_guard(self) -> int:
        """Default saturation guard: twice the top generator degree plus 4."""
        return 2 * self.max_generator_degree() + 4

    def piece(self, n: int) -> RowEchelon:
        """Echelon basis of the degree-n piece of the ideal as generated."""
        if n < 0:
            raise ValueError("degree must be >= 0")
        cached = self._pieces.get(n)
        if cached is not None:
            return cached
        ech = RowEchelon()
        index = _index_of_degree(n)
        for g in self.generators:
            if g.degree > n:
                continue
            items = tuple(g.terms.items())
            for mult in monomials_of_degree(n - g.degree):
                row = {index[monomial_mul(mult, m)]: c for m, c in items}
                ech.insert(row)
        self._pieces[n] = ech
        return ech


def poly_vector(p: Poly) -> dict[int, int]:
    """Coordinates of a nonzero form over the monomial basis of its degree."""
    index = _index_of_degree(p.degree)
    return {index[m]: c for m, c in p.terms.items()}


def _poly_from_vector(vec: Mapping[int, int], n: int) -> Poly:
    basis = monomials_of_degree(n)
    return Poly({basis[i]: c for i, c in vec.items()})


def graded_piece_dim(ideal: GradedIdeal, n: int) -> int:
    """Dimension of the degree-n piece spanned by generator multiples."""
    return ideal.piece(n).rank


def hf_quotient(ideal: GradedIdeal, n: int) -> int:
    """Hilbert function of the quotient ring in degree n."""
    return h0_space(n) - graded_piece_dim(ideal, n)


def member(f: Poly, ideal: GradedIdeal) -> bool:
    """Whether f lies in the span of the ideal's piece in its own degree."""
    if f.is_zero():
        return True
    return ideal.piece(f.degree).contains(poly_vector(f))


# --------------------------------------------------------------------------
# colon subspaces and saturation


def _kernel_basis(
    blocks: Sequence[tuple[Poly, RowEchelon]], n: int
) -> list[dict[int, int]]:
    """Vectors f over the degree-n monomials with mult*f in span, per block.

    Solved by augmented elimination: the target spans are embedded as rows
    with empty tracking part, then each candidate monomial contributes the
    row of its products plus a fresh tracking column.  Rows whose product
    part dies give kernel vectors in the tracking columns.
    """
    cand = monomials_of_degree(n)
    if not cand:
        return []
    offsets = []
    total = 0
    for mult, _ in blocks:
        offsets.append(total)
        total += len(monomials_of_degree(n + mult.degree))
    aux = total
    big = RowEchelon()
    for (mult, span), off in zip(blocks, offsets):
        for prow in span.rows():
            big.pivots[off + min(prow)] = {off + c: v for c, v in prow.items()}
    kernel: list[dict[int, int]] = []
    for j, u in enumerate(cand):
        row: dict[int, int] = {}
        for (mult, _), off in zip(blocks, offsets):
            index = _index_of_degree(n + mult.degree)
            for m, c in mult.terms.items():
                col = off + index[monomial_mul(m, u)]
                row[col] = row.get(col, 0) + c
        row[aux + j] = 1
        r = big.reduce(row)
        lead = min(r)
        if lead >= aux:
            kernel.append({c - aux: v for c, v in r.items()})
        big.pivots[lead] = r
    return kernel


def colon_piece(ideal: GradedIdeal, f: Poly, n: int) -> list[Poly]:
    """Basis of {v of degree n : f*v lies in the ideal's piece}."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if n < 0:
        raise ValueError("degree must be >= 0")
    span = ideal.piece(n + f.degree)
    return [_poly_from_vector(vec, n) for vec in _kernel_basis([(f, span)], n)]


def colon_dim(span: RowEchelon, f: Poly, n: int) -> int:
    """Dimension of {v of degree n : f*v lies in the given degree n+deg f span}."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    return len(_kernel_basis([(f, span)], n))


_VAR_POLYS = variables()


def _echelon_from_vectors(vectors: Iterable[Mapping[int, int]]) -> RowEchelon:
    ech = RowEchelon()
    for vec in vectors:
        ech.insert(vec)
    return ech


# Hilbert polynomials of graded quotients, represented as tuples of Fraction
# coefficients, constant term first, trailing zeros trimmed.


def _binomial_in_n(shift: int, a: int) -> tuple[Fraction, ...]:
    """Coefficients of binomial(n + shift, a) as a polynomial in n."""
    coeffs = [Fraction(1)]
    for i in range(a):
        const = shift - i
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for j, cj in enumerate(coeffs):
            nxt[j] += cj * const
            nxt[j + 1] += cj
        coeffs = nxt
    f = factorial(a)
    return tuple(c / f for c in coeffs)


def _poly_trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_eval(coeffs: Sequence[Fraction], n: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


def _interpolated_tail(t: int, values: Sequence[int]) -> tuple[Fraction, ...]:
    """The unique polynomial of degree < len(values) through (t+i, values[i])."""
    coeffs: tuple[Fraction, ...] = ()
    diffs = [Fraction(v) for v in values]
    for j in range(len(values)):
        coeffs = _poly_trim(
            _poly_sub(coeffs, tuple(-diffs[0] * c for c in _binomial_in_n(-t, j)))
        )
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return coeffs


def _gotzmann_number(p: tuple[Fraction, ...]) -> int | None:
    """Terms in the Macaulay decomposition of a Hilbert polynomial.

    Greedily peels binomial(n + e - i, e) with e the current degree; None
    when p is not the Hilbert polynomial of any graded quotient of the
    four-variable ring.
    """
    s = 0
    while p:
        e = len(p) - 1
        if e > 3 or p[-1] <= 0 or s > 512:
            return None
        p = _poly_sub(p, _binomial_in_n(e - s, e))
        if len(p) - 1 > e:
            return None
        s += 1
    return s


def _certified_top(ideal: GradedIdeal, guard: int) -> int:
    """Smallest verified degree from which the ideal equals its saturation.

    A degree t qualifies once the quotient Hilbert function interpolated at
    t..t+3 is a Hilbert polynomial with Gotzmann number at most t and the
    generators live in degrees at most t: persistence then pins the Hilbert
    function from t on, and the Gotzmann regularity bound forces the
    saturation to agree with the ideal there.
    """
    t = max(ideal.max_generator_degree(), 1)
    while t <= guard:
        vals = [hf_quotient(ideal, t + i) for i in range(4)]
        s = _gotzmann_number(_interpolated_tail(t, vals))
        if s is not None:
            if s <= t:
                return t
            if s <= guard:
                t = s
                continue
        t += 1
    raise SaturationGuardError(
        f"no stabilization certificate for the saturation within degree {guard}"
    )


def _ladder_step(upper: RowEchelon, n: int) -> RowEchelon:
    """Forms of degree n whose four variable multiples lie in the upper span."""
    blocks = [(v, upper) for v in _VAR_POLYS]
    return _echelon_from_vectors(_kernel_basis(blocks, n))


class SatPiece(NamedTuple):
    """Degree-n piece of the saturation: echelon basis, dimension, and the
    number of degrees separating n from the certified stabilization degree."""

    echelon: RowEchelon
    dim: int
    stabilized_at: int


def saturation_piece(ideal: GradedIdeal, n: int, guard: int | None = None) -> SatPiece:
    """Degree-n piece of the saturation of the ideal.

    Ideal and saturation agree from a certified degree T on (see
    _certified_top); below T each piece is the space of forms whose four
    variable multiples lie in the piece one degree up, filled in by a single
    downward sweep and cached.  The guard (default twice the top generator
    degree plus 4) caps the certification search; exceeding it raises
    SaturationGuardError rather than returning an unverified answer.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if guard is None:
        guard = ideal.default_guard()
    if guard < 1:
        raise ValueError("guard must be >= 1")
    state = ideal._sat_state
    top = state.get("top")
    if top is None:
        top = _certified_top(ideal, guard)
        state["top"] = top
    elif top > guard:
        raise SaturationGuardError(
            f"certified stabilization degree {top} exceeds guard {guard}"
        )
    if n >= top:
        ech = ideal.piece(n)
        return SatPiece(ech, ech.rank, 0)
    pieces = state.setdefault("pieces", {})
    low = min(pieces, default=top)
    for k in range(low - 1, n - 1, -1):
        upper = pieces[k + 1] if k + 1 < top else ideal.piece(top)
        pieces[k] = _ladder_step(upper, k)
    ech = pieces[n]
    return SatPiece(ech, ech.rank, top - n)


def saturation_piece_dim(ideal: GradedIdeal, n: int, guard: int | None = None) -> int:
    return saturation_piece(ideal, n, guard).dim


def saturation_member(f: Poly, ideal: GradedIdeal, guard: int | None = None) -> bool:
    """Whether f lies in the saturation of the ideal."""
    if f.is_zero():
        return True
    return saturation_piece(ideal, f.degree, guard).echelon.contains(poly_vector(f))


# --------------------------------------------------------------------------
# Hilbert polynomial fitting


def fit_linear_tail(points: Sequence[tuple[int, int]]) -> CurveClass:
    """Fit d*n + 1 - g through the last four values of a Hilbert function.

    The four points must be consecutive, exactly collinear, and of positive
    slope; otherwise HilbertFitError is raised.
    """
    if len(points) < 4:
        raise HilbertFitError("need at least 4 consecutive values")
    tail = points[-4:]
    degrees = [n for n, _ in tail]
    if degrees != list(range(degrees[0], degrees[0] + 4)):
        raise HilbertFitError("window degrees are not consecutive")
    values = [v for _, v in tail]
    diffs = {values[i + 1] - values[i] for i in range(3)}
    if len(diffs) != 1:
        raise HilbertFitError(f"tail {values} is not linear")
    slope = diffs.pop()
    if slope <= 0:
        raise HilbertFitError(f"tail slope {slope} is not positive")
    intercept = values[-1] - slope * degrees[-1]
    return CurveClass(slope, 1 - intercept)


def hp_fit(ideal: GradedIdeal, lo: int, hi: int) -> CurveClass:
    """Degree and genus read off the quotient Hilbert function on [lo, hi]."""
    if hi - lo < 3:
        raise HilbertFitError("window must contain at least 4 degrees")
    pts = [(n, hf_quotient(ideal, n)) for n in range(lo, hi + 1)]
    return fit_linear_tail(pts)


@dataclass(frozen=True)
class HilbertData:
    """Quotient Hilbert function values on a window plus the fitted class."""

    dims: dict[int, int]
    fitted: CurveClass | None = field(default=None)


def hilbert_data(ideal: GradedIdeal, lo: int, hi: int) -> HilbertData:
    dims = {n: hf_quotient(ideal, n) for n in range(lo, hi + 1)}
    try:
        fitted = fit_linear_tail(sorted(dims.items()))
    except HilbertFitError:
        fitted = None
    return HilbertData(dims, fitted)
