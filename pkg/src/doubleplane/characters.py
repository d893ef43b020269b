"""Postulation data of the embedded point scheme and of the whole curve.

The zero-dimensional scheme Z sitting on the residual curve of a double
plane curve is recorded through its postulation character: the least degree
s of a plane curve through Z and the multiplicities a_n of the degrees where
conditions are spent.  A curve model couples a numerical triple with such a
profile; from it the postulation character of the full curve is assembled in
closed form and can be cross-checked against third differences of the
cohomology formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .intfn import IntFn, choose2, difference, h0_plane, h0_space
from .triples import Triple


class InvalidProfile(ValueError):
    """Raised when (s, a) is not the character of a plane point scheme."""


class InvalidModel(ValueError):
    """Raised when a profile cannot sit on the residual curve of a triple."""


class ZProfile:
    """Postulation character of a length-z subscheme of the plane.

    s is the least degree of a curve containing the scheme (s = 0 only for
    the empty scheme) and a maps degrees n >= s to nonnegative multiplicities
    with sum s.  The length is recovered as sum(n * a_n) - s(s-1)/2.
    """

    __slots__ = ("s", "_a")

    def __init__(self, s: int, a: Mapping[int, int] | None = None):
        if not isinstance(s, int) or s < 0:
            raise InvalidProfile("s must be a nonnegative integer")
        entries = {n: v for n, v in (a or {}).items() if v != 0}
        for n, v in entries.items():
            if not isinstance(n, int) or not isinstance(v, int):
                raise InvalidProfile("a must map int to int")
            if n < s:
                raise InvalidProfile(f"a_{n} set below degree s = {s}")
            if v < 0:
                raise InvalidProfile(f"a_{n} = {v} < 0")
        if sum(entries.values()) != s:
            raise InvalidProfile(f"multiplicities sum to {sum(entries.values())}, expected s = {s}")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "_a", entries)

    @property
    def a(self) -> dict[int, int]:
        return dict(sorted(self._a.items()))

    @property
    def length(self) -> int:
        """The length z of the point scheme."""
        return sum(n * v for n, v in self._a.items()) - choose2(self.s)

    def character(self) -> IntFn:
        """Character values: -1 on 0 <= n < s, a_n on n >= s, 0 elsewhere."""
        entries = {n: -1 for n in range(self.s)}
        for n, v in self._a.items():
            entries[n] = entries.get(n, 0) + v
        return IntFn(entries)

    def h0(self, m: int) -> int:
        """Dimension of the degree-m plane curves through the scheme.

        Double summation of the character: h0(m) equals the full space of
        plane forms plus sum over n <= m of (m - n + 1) * character(n).
        """
        if m < 0:
            return 0
        total = h0_plane(m)
        for n in range(min(self.s, m + 1)):
            total -= m - n + 1
        for n, v in self._a.items():
            if n <= m:
                total += (m - n + 1) * v
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZProfile):
            return NotImplemented
        return self.s == other.s and self._a == other._a

    def __hash__(self) -> int:
        return hash((self.s, frozenset(self._a.items())))

    def __repr__(self) -> str:
        return f"ZProfile(s={self.s}, a={self.a})"


def empty_profile() -> ZProfile:
    return ZProfile(0, {})


def collinear_profile(z: int) -> ZProfile:
    """Character of z points on a line: s = 1, a_z = 1.  Requires z >= 1."""
    if z < 1:
        raise ValueError("collinear profile needs z >= 1; use empty_profile for z = 0")
    return ZProfile(1, {z: 1})


def generic_profile(z: int) -> ZProfile:
    """Character of z points in general position.

    Built from the generic postulation h0(m) = max(0, h0_plane(m) - z): s is
    the first degree where curves through the points exist and a is the
    second difference of the defect.  Coincides with the collinear profile
    for z <= 2.
    """
    if z < 0:
        raise ValueError("length must be >= 0")
    if z == 0:
        return empty_profile()
    s = 0
    while h0_plane(s) <= z:
        s += 1

    def defect(m: int) -> int:
        return -min(z, h0_plane(m)) if m >= 0 else 0

    # defect is constant -z from degree s on, so the second difference can
    # only be nonzero at s and s + 1.
    a = {}
    for n in (s, s + 1):
        v = defect(n) - 2 * defect(n - 1) + defect(n - 2)
        if v:
            a[n] = v
    return ZProfile(s, a)


def enumerate_profiles(z: int, s_max: int) -> list[ZProfile]:
    """All valid profiles of length z with s <= s_max.

    Profiles with a given s correspond to partitions of z + s(s-1)/2 into
    exactly s parts, each part >= s.  Ordered by s, then by partition.
    """
    if z < 0 or s_max < 0:
        raise ValueError("arguments must be >= 0")
    out: list[ZProfile] = []
    if z == 0:
        out.append(empty_profile())
    for s in range(1, s_max + 1):
        total = z + choose2(s)
        for parts in _partitions(total, s, s):
            a: dict[int, int] = {}
            for part in parts:
                a[part] = a.get(part, 0) + 1
            out.append(ZProfile(s, a))
    return out


def _partitions(total: int, count: int, minimum: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples of `count` integers >= minimum summing to total."""
    if count == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (count - 1) + 1):
        for rest in _partitions(total - first, count - 1, first):
            yield (first,) + rest


@dataclass(frozen=True)
class CurveModel:
    """A triple together with the postulation character of its point scheme."""

    triple: Triple
    zprofile: ZProfile

    def __post_init__(self) -> None:
        if self.zprofile.length != self.triple.z:
            raise InvalidModel(
                f"profile length {self.zprofile.length} != z = {self.triple.z}"
            )
        if self.zprofile.s > self.triple.y:
            raise InvalidModel(
                f"Z needs a curve of degree s = {self.zprofile.s} but lies on the "
                f"residual curve of degree y = {self.triple.y}"
            )


def collinear_model(t: Triple) -> CurveModel:
    """Model with all embedded points on a line (empty profile when z = 0)."""
    prof = empty_profile() if t.z == 0 else collinear_profile(t.z)
    return CurveModel(t, prof)


def generic_model(t: Triple) -> CurveModel:
    """Model with embedded points in general position; may be invalid if s > y."""
    return CurveModel(t, generic_profile(t.z))


def curve_character(model: CurveModel) -> IntFn:
    """Postulation character of the curve, assembled in closed form.

    The character is -1 at degrees 0 and 1, +1 at y + 1 and at p + s, plus
    the first difference of the tail b, where b places the multiplicity a_n
    of the point scheme at degree p + n.
    """
    t = model.triple
    prof = model.zprofile
    entries: dict[int, int] = {}

    def bump(n: int, v: int) -> None:
        entries[n] = entries.get(n, 0) + v

    bump(0, -1)
    bump(1, -1)
    bump(t.y + 1, 1)
    bump(t.p + prof.s, 1)
    for n, v in prof._a.items():
        bump(t.p + n, v)
        bump(t.p + n + 1, -v)
    return IntFn(entries)


def curve_character_tail(model: CurveModel) -> IntFn:
    """The tail b of the curve character: b at p + n is a_n."""
    t = model.triple
    return IntFn({t.p + n: v for n, v in model.zprofile._a.items()})


def z_from_character_tail(b: IntFn, p: int, s: int) -> int:
    """Recover the point scheme length from a character tail.

    Requires b >= 0 supported in degrees >= p + s with total s; returns
    sum((n - p) * b_n) - s(s-1)/2.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    for n, v in b.items():
        if v < 0:
            raise ValueError(f"tail value b_{n} = {v} < 0")
        if n < p + s:
            raise ValueError(f"tail supported at degree {n} < p + s = {p + s}")
    if b.total() != s:
        raise ValueError(f"tail total {b.total()} != s = {s}")
    return sum((n - p) * v for n, v in b.items()) - choose2(s)


def curve_character_from_h0(model: CurveModel) -> IntFn:
    """The curve character recomputed as a third difference.

    Independent route: take the deficiency h0 of the curve's ideal against
    the full space of forms, degree by degree, and difference it three
    times.  Matches curve_character identically for every valid model.
    """
    from . import cohomology

    t = model.triple
    hi = t.p + model.zprofile.s + t.z + 3
    defect = IntFn(
        {n: cohomology.h0(model, n) - h0_space(n) for n in range(0, hi + 1)}
    )
    third = difference(defect, 3)
    return IntFn({n: v for n, v in third.items() if n <= hi})
