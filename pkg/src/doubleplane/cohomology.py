"""Cohomology of the ideal sheaf of a curve on the double plane.

Closed formulas for h^i of every twist of the ideal sheaf of a curve model,
the finite Rao function collecting the middle cohomology, and the
arithmetically Cohen-Macaulay test.  h^1 is recovered from the other three
via the Euler characteristic, so a negative value can only mean an internal
inconsistency and raises AssertionError.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .intfn import IntFn, chi_poly_space, h0_plane, h0_space
from .triples import curve_class

if TYPE_CHECKING:
    from .characters import CurveModel


def h0(model: "CurveModel", n: int) -> int:
    """Global sections of the degree-n twist of the curve's ideal sheaf.

    Splits as forms vanishing on the double plane, forms through the larger
    plane curve, and plane forms through the point scheme, in degrees
    shifted by 2, y + 1 and p respectively.
    """
    t = model.triple
    return (
        h0_space(n - 2)
        + h0_plane(n - t.y - 1)
        + model.zprofile.h0(n - t.p)
    )


def h2(model: "CurveModel", n: int) -> int:
    t = model.triple
    return (
        h0_space(-n - 4)
        - h0_space(-n - 2)
        + h0_plane(t.p - 3 - n)
        + model.zprofile.h0(t.y - 2 - n)
    )


def h3(n: int) -> int:
    """Top cohomology of the twisted ideal sheaf; curve-independent."""
    return h0_space(-n - 4)


def euler_char(model: "CurveModel", n: int) -> int:
    """Euler characteristic of the degree-n twist of the ideal sheaf."""
    cc = curve_class(model.triple)
    return chi_poly_space(n) - (cc.d * n + 1 - cc.g)


def h1(model: "CurveModel", n: int) -> int:
    """Middle cohomology, recovered as h0 + h2 - h3 - chi."""
    value = h0(model, n) + h2(model, n) - h3(n) - euler_char(model, n)
    if value < 0:
        raise AssertionError(
            f"h1 = {value} < 0 at twist {n} for {model.triple}: formulas disagree"
        )
    return value


def rao_function(model: "CurveModel") -> IntFn:
    """The finite function n -> h1 of the degree-n twist.

    Evaluated on a window that starts at [-2, d] and grows until both
    boundary values vanish; growth beyond width 10(d + z + 4) aborts.
    """
    t = model.triple
    cc = curve_class(t)
    lo, hi = -2, cc.d
    limit = 10 * (cc.d + t.z + 4)
    # look a few degrees past each end so an isolated boundary zero cannot
    # truncate the support
    while any(h1(model, lo - i) != 0 for i in range(3)):
        lo -= 1
        if hi - lo > limit:
            raise RuntimeError("Rao window grew past its safety bound")
    while any(h1(model, hi + i) != 0 for i in range(3)):
        hi += 1
        if hi - lo > limit:
            raise RuntimeError("Rao window grew past its safety bound")
    return IntFn({n: h1(model, n) for n in range(lo, hi + 1)})


def is_acm(model: "CurveModel") -> bool:
    """Arithmetically Cohen-Macaulay iff the point scheme is empty."""
    return model.triple.z == 0
