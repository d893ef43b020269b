"""Numerical triples classifying curves on a double plane.

A locally Cohen-Macaulay curve C on the double plane 2H in projective
3-space is measured by a triple (z, y, p): the residual curve of C with
respect to H is a plane curve Y of degree y inside a larger plane curve P of
degree p, and C carries a zero-dimensional subscheme Z of Y of length z.
The triple determines the degree and arithmetic genus of C and the dimension
of the family of such curves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intfn import choose2


class InvalidTriple(ValueError):
    """Raised when (z, y, p) violates the numerical constraints."""


@dataclass(frozen=True)
class Triple:
    """Numerical type (z, y, p) of a curve on the double plane.

    Constraints: z >= 0, 0 <= y <= p, p >= 1, and y = 0 forces z = 0 (a
    curve with empty residual lies in the reduced plane and carries no
    embedded points).
    """

    z: int
    y: int
    p: int

    def __post_init__(self) -> None:
        for name in ("z", "y", "p"):
            if not isinstance(getattr(self, name), int):
                raise InvalidTriple(f"{name} must be an integer")
        if self.z < 0:
            raise InvalidTriple(f"z = {self.z} < 0")
        if self.y < 0:
            raise InvalidTriple(f"y = {self.y} < 0")
        if self.p < 1:
            raise InvalidTriple(f"p = {self.p} < 1")
        if self.p < self.y:
            raise InvalidTriple(f"p = {self.p} < y = {self.y}")
        if self.y == 0 and self.z != 0:
            raise InvalidTriple("y = 0 forces z = 0")

    def __str__(self) -> str:
        return f"({self.z},{self.y},{self.p})"


@dataclass(frozen=True)
class CurveClass:
    """Degree and arithmetic genus (d, g) of a curve."""

    d: int
    g: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"degree d = {self.d} < 1")

    def __str__(self) -> str:
        return f"(d,g)=({self.d},{self.g})"


def curve_class(t: Triple) -> CurveClass:
    """Degree d = y + p and genus of the curve with triple t."""
    d = t.y + t.p
    g = choose2(t.y - 1) + choose2(t.p - 1) + t.y - t.z - 1
    return CurveClass(d, g)


def triple_from_class(d: int, g: int, y: int) -> Triple | None:
    """The triple with residual degree y in class (d, g), or None.

    Solves the genus formula for z; returns None when the solution violates
    z >= 0 or the shape constraints on (z, y, p).
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if y < 0:
        raise ValueError("residual degree must be >= 0")
    p = d - y
    if p < 1 or p < y:
        return None
    z = choose2(d - 2) - g - (y - 1) * (d - y - 2)
    if z < 0:
        return None
    if y == 0 and z != 0:
        return None
    return Triple(z, y, p)


def section_space_dim(t: Triple) -> int:
    """Dimension of the linear system of curves with triple t on a fixed flag.

    For y = 0 the polynomial term (y-1)(y-2)/2 evaluates to 1 and the
    dimension is 0: the curve in the reduced plane is determined by P alone.
    """
    return t.z + (t.p - 1) * t.y + 1 - choose2(t.y - 1)


def flag_dim(t: Triple) -> int:
    """Dimension of the family of flags Z in Y in P for the triple t."""
    return t.z + t.y * (t.y + 3) // 2 + (t.p - t.y) * (t.p - t.y + 3) // 2


def component_dim(t: Triple) -> int:
    """Dimension of the family of curves with triple t."""
    return 2 * t.z + t.y * (t.y + 1) // 2 + t.p * (t.p + 3) // 2
