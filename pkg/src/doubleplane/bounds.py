"""Sharp bounds on the Rao function and the resulting classification.

Non-planar curves of degree d and genus g satisfy a triangle-shaped upper
bound on their Rao function; curves attaining it are extremal.  Among the
remaining curves a second, smaller triangle bounds the Rao function, and
curves attaining that one are subextremal.  On the double plane both kinds
are characterised purely by the numerical data of the model.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .intfn import IntFn, choose2
from .triples import curve_class

if TYPE_CHECKING:
    from .characters import CurveModel


class CurveKind(enum.Enum):
    PLANAR = "planar"
    EXTREMAL = "extremal"
    SUBEXTREMAL = "subextremal"
    OTHER = "other"


def extremal_bound(d: int, g: int) -> IntFn:
    """Largest possible Rao function of a non-planar (d, g) curve.

    A triangle of height (d-2)(d-3)/2 - g with plateau on [0, d-2], falling
    off by one per step outside.  Requires d >= 2 and g <= (d-2)(d-3)/2.
    """
    if d < 2:
        raise ValueError("extremal bound needs d >= 2")
    a = choose2(d - 2) - g
    if a < 0:
        raise ValueError(f"genus {g} exceeds the non-planar maximum {choose2(d - 2)}")
    return _triangle(a, 0, d - 2)


def subextremal_bound(d: int, g: int) -> IntFn:
    """Largest possible Rao function of a non-planar, non-extremal curve.

    A triangle of height (d-3)(d-4)/2 + 1 - g with plateau on [1, d-3].
    Requires d >= 4 and g <= (d-3)(d-4)/2 + 1.
    """
    if d < 4:
        raise ValueError("subextremal bound needs d >= 4")
    a = choose2(d - 3) + 1 - g
    if a < 0:
        raise ValueError(f"genus {g} exceeds the non-extremal maximum {choose2(d - 3) + 1}")
    return _triangle(a, 1, d - 3)


def _triangle(height: int, left: int, right: int) -> IntFn:
    """max(0, height + min(n - left, 0) + min(right - n, 0)) as an IntFn."""
    entries = {}
    for n in range(left - height + 1, right + height):
        v = height + min(n - left, 0) + min(right - n, 0)
        if v > 0:
            entries[n] = v
    return IntFn(entries)


def classify(model: "CurveModel") -> CurveKind:
    """Numerical classification of a curve model on the double plane.

    Checked in priority order planar > extremal > subextremal; the
    subextremal cases additionally require the point scheme to lie on a
    line (s <= 1).
    """
    t = model.triple
    s = model.zprofile.s
    if t.y == 0 or (t.p == 1 and t.y == 1 and t.z == 0):
        return CurveKind.PLANAR
    if (t.y == 1 and t.p >= 2) or (t.y == 1 and t.p == 1 and t.z >= 1):
        return CurveKind.EXTREMAL
    if t.y == 2 and t.p == 2 and t.z == 0:
        return CurveKind.EXTREMAL
    if s <= 1:
        if t.y == 2 and t.p >= 3:
            return CurveKind.SUBEXTREMAL
        if t.y == 2 and t.p == 2 and t.z >= 1:
            return CurveKind.SUBEXTREMAL
        if t.y == 3 and t.p == 3 and t.z == 0:
            return CurveKind.SUBEXTREMAL
    return CurveKind.OTHER


# divisor classes (a, b) on a smooth quadric, a <= b, by kind
_QUADRIC_KINDS = {
    (0, 1): CurveKind.PLANAR,
    (1, 1): CurveKind.PLANAR,
    (0, 2): CurveKind.EXTREMAL,
    (1, 2): CurveKind.EXTREMAL,
    (2, 2): CurveKind.EXTREMAL,
    (1, 3): CurveKind.SUBEXTREMAL,
    (2, 3): CurveKind.SUBEXTREMAL,
    (3, 3): CurveKind.SUBEXTREMAL,
}


def classify_quadric_divisor(a: int, b: int) -> CurveKind:
    """Classification of the divisor class (a, b) on a smooth quadric surface."""
    if a > b:
        raise ValueError("divisor class must satisfy a <= b")
    if a < 0 or (a, b) == (0, 0):
        raise ValueError(f"({a},{b}) is not a curve class")
    return _QUADRIC_KINDS.get((a, b), CurveKind.OTHER)


@dataclass(frozen=True)
class GenusCeilings:
    """Maximal genus of degree-d curves: planar, non-planar, non-extremal."""

    planar_g: int
    nonplanar_max_g: int | None
    nonextremal_max_g: int | None


def genus_ceilings(d: int) -> GenusCeilings:
    if d < 1:
        raise ValueError("degree must be >= 1")
    return GenusCeilings(
        planar_g=choose2(d - 1),
        nonplanar_max_g=choose2(d - 2) if d >= 2 else None,
        nonextremal_max_g=choose2(d - 3) + 1 if d >= 3 else None,
    )


def bounds_for(model: "CurveModel") -> tuple[IntFn | None, IntFn | None]:
    """The (extremal, subextremal) bounds applicable to this model.

    Either entry is None when the corresponding precondition fails: the
    extremal bound needs a non-planar class, the subextremal bound
    additionally d >= 4 and a non-extremal kind.
    """
    cc = curve_class(model.triple)
    kind = classify(model)
    ext = None
    sub = None
    if kind is not CurveKind.PLANAR and cc.d >= 2 and cc.g <= choose2(cc.d - 2):
        ext = extremal_bound(cc.d, cc.g)
    if (
        kind not in (CurveKind.PLANAR, CurveKind.EXTREMAL)
        and cc.d >= 4
        and cc.g <= choose2(cc.d - 3) + 1
    ):
        sub = subextremal_bound(cc.d, cc.g)
    return ext, sub
