"""Exact integer combinatorics shared by every other module.

Dimension counts for spaces of forms, the polynomial Euler characteristic of
twists of the structure sheaf on projective 3-space, and finite-support
integer-valued functions on Z together with their difference operator.  All
arithmetic is arbitrary-precision integer; nothing here or downstream uses
floating point.
"""

from __future__ import annotations

from typing import Iterator, Mapping


def h0_space(n: int) -> int:
    """Dimension of the space of degree-n forms in four variables; 0 for n < 0."""
    if n < 0:
        return 0
    return (n + 1) * (n + 2) * (n + 3) // 6


def h0_plane(n: int) -> int:
    """Dimension of the space of degree-n forms in three variables; 0 for n < 0."""
    if n < 0:
        return 0
    return (n + 1) * (n + 2) // 2


def chi_poly_space(n: int) -> int:
    """Euler characteristic of the degree-n twist on projective 3-space.

    Unlike h0_space this is the untruncated polynomial (n+1)(n+2)(n+3)/6, so
    it is negative for n <= -4.  The two agree for n >= -3.
    """
    # product of three consecutive integers, always divisible by 6
    return (n + 1) * (n + 2) * (n + 3) // 6


def choose2(m: int) -> int:
    """m(m-1)/2 as a polynomial in m, exact for every integer m."""
    return m * (m - 1) // 2


class IntFn:
    """A finitely supported function Z -> Z; the value off the support is 0."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, int] | None = None):
        cleaned = {}
        for n, v in (entries or {}).items():
            if not isinstance(n, int) or not isinstance(v, int):
                raise TypeError("IntFn entries must map int to int")
            if v:
                cleaned[n] = v
        self._entries = cleaned

    def __call__(self, n: int) -> int:
        return self._entries.get(n, 0)

    def support(self) -> list[int]:
        return sorted(self._entries)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._entries.items()))

    def is_zero(self) -> bool:
        return not self._entries

    def total(self) -> int:
        return sum(self._entries.values())

    def leq(self, other: "IntFn") -> bool:
        """Pointwise self(n) <= other(n) for all n."""
        keys = set(self._entries) | set(other._entries)
        return all(self(n) <= other(n) for n in keys)

    def __add__(self, other: "IntFn") -> "IntFn":
        out = dict(self._entries)
        for n, v in other._entries.items():
            out[n] = out.get(n, 0) + v
        return IntFn(out)

    def __sub__(self, other: "IntFn") -> "IntFn":
        out = dict(self._entries)
        for n, v in other._entries.items():
            out[n] = out.get(n, 0) - v
        return IntFn(out)

    def __neg__(self) -> "IntFn":
        return IntFn({n: -v for n, v in self._entries.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntFn):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{n}: {v}" for n, v in self.items())
        return f"IntFn({{{body}}})"

    def to_dict(self) -> dict[int, int]:
        return dict(sorted(self._entries.items()))

    def to_json_dict(self) -> dict[str, int]:
        """String-keyed copy in increasing degree order, for JSON output."""
        return {str(n): v for n, v in self.items()}


def difference(f: IntFn, k: int = 1) -> IntFn:
    """k-th finite difference (Df)(n) = f(n) - f(n-1), iterated k times."""
    if k < 0:
        raise ValueError("difference order must be >= 0")
    out = f
    for _ in range(k):
        entries: dict[int, int] = {}
        for n, v in out.items():
            entries[n] = entries.get(n, 0) + v
            entries[n + 1] = entries.get(n + 1, 0) - v
        out = IntFn(entries)
    return out
