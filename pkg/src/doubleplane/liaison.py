"""Liaison and biliaison of curves on the double plane.

Linking a curve inside a complete intersection of the double plane with a
degree-q surface replaces the triple (z, y, p) by (z, q - p, q - y) and
keeps the point scheme; biliaison moves the residual degree directly.  Both
preserve z and p - y, the numerical invariants of the liaison class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import CurveModel
from .triples import InvalidTriple, Triple


@dataclass(frozen=True)
class LiaisonInvariants:
    """The liaison class data preserved by link and bilink."""

    z: int
    p_minus_y: int


def liaison_invariants(model: CurveModel) -> LiaisonInvariants:
    t = model.triple
    return LiaisonInvariants(t.z, t.p - t.y)


def link(model: CurveModel, q: int) -> CurveModel:
    """Residual of the curve in a complete intersection with a q-surface.

    Requires q >= p so the surface contains P, and q - p >= s so the linked
    curve can still carry the point scheme.  Applying the same q twice is
    the identity; degree moves d -> 2q - d.
    """
    t = model.triple
    s = model.zprofile.s
    if q < t.p:
        raise ValueError(f"linking needs q >= p = {t.p}, got q = {q}")
    if q - t.p < s:
        raise ValueError(
            f"linking with q = {q} leaves residual degree {q - t.p} < s = {s}"
        )
    try:
        linked = Triple(t.z, q - t.p, q - t.y)
    except InvalidTriple as exc:
        raise ValueError(f"link with q = {q} degenerates: {exc}") from exc
    return CurveModel(linked, model.zprofile)


def bilink(model: CurveModel, y_new: int) -> CurveModel:
    """Biliaison on the double plane: move the residual degree to y_new.

    Requires y_new >= s; the result is (z, y_new, y_new + p - y) and the
    height of the move is y_new - y.
    """
    t = model.triple
    s = model.zprofile.s
    if y_new < s:
        raise ValueError(f"biliaison needs y_new >= s = {s}, got {y_new}")
    try:
        moved = Triple(t.z, y_new, y_new + t.p - t.y)
    except InvalidTriple as exc:
        raise ValueError(f"biliaison to y = {y_new} degenerates: {exc}") from exc
    return CurveModel(moved, model.zprofile)


def is_minimal(model: CurveModel) -> bool:
    """Whether the curve is minimal in its (even) liaison class.

    Defined for z >= 1: minimal exactly when no smaller residual curve can
    contain the point scheme, i.e. y = s.
    """
    t = model.triple
    if t.z < 1:
        raise ValueError("minimality test needs a nonempty point scheme (z >= 1)")
    return t.y == model.zprofile.s
