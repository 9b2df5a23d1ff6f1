"""Dwork's dash operation x* = (x + <-x>_p)/p on p-adic integer rationals.

The operation, its iterates, the closed form <s^-n c>_d / d valid when p = s (mod d),
and the orbit period ind_d(s). The iterative path and the closed form are kept
independent of each other on purpose: their agreement is a theorem, and the test
suite treats it as one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact_core import NonInvertibleError, Rational, mod_inverse, residue


@dataclass(frozen=True)
class DashParams:
    """The tuple (c, d, s) with alpha = c/d; primes of interest satisfy p = s (mod d)."""

    c: int
    d: int
    s: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")
        if not 1 <= self.c <= self.d:
            raise ValueError(f"c must lie in [1, d], got c={self.c}, d={self.d}")
        if not 1 <= self.s <= self.d:
            raise ValueError(f"s must lie in [1, d], got s={self.s}, d={self.d}")
        if gcd(self.c * self.s, self.d) != 1:
            raise ValueError(f"gcd(c*s, d) must be 1, got ({self.c}*{self.s}, {self.d})")

    @property
    def alpha(self) -> Rational:
        return Fraction(self.c, self.d)


def least_residue(x: Rational, p: int, r: int) -> int:
    """<x> mod p^r for a p-adic integer rational x."""
    return residue(x, p, r)


def dash(x: Rational, p: int) -> Rational:
    """One application of the dash operation. The result is again a p-adic integer."""
    x = Fraction(x)
    return (x + least_residue(-x, p, 1)) / p


def dash_iter(x: Rational, p: int, n: int) -> Rational:
    """n-fold dash; n = 0 returns x unchanged."""
    if n < 0:
        raise ValueError(f"iteration count must be >= 0, got {n}")
    y = Fraction(x)
    for _ in range(n):
        y = dash(y, p)
    return y


def dash_closed_form(params: DashParams, n: int) -> Rational:
    """<s^-n c>_d / d, the n-th iterate of c/d for any prime p = s (mod d).

    Computed with no prime in sight, which is what makes it an independent
    oracle for dash_iter.
    """
    if n < 0:
        raise ValueError(f"iteration count must be >= 0, got {n}")
    s_inv = mod_inverse(params.s, params.d)
    t = pow(s_inv, n, params.d) * params.c % params.d
    return Fraction(t, params.d)


def dash_period(d: int, s: int) -> int:
    """ind_d(s): least n >= 1 with s^n = 1 (mod d), the dash-orbit period of c/d."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    if gcd(s, d) != 1:
        raise NonInvertibleError(f"gcd(s, d) must be 1, got ({s}, {d})")
    acc = s % d
    n = 1
    while acc != 1:
        acc = acc * s % d
        n += 1
    return n


@dataclass(frozen=True)
class DashOrbit:
    """A purely periodic dash orbit: iterates[0] = base, iterates[period] = base again."""

    base: Rational
    p: int
    iterates: tuple[Rational, ...]
    period: int

    def __post_init__(self) -> None:
        if self.iterates[0] != self.base or self.iterates[self.period] != self.base:
            raise ValueError("orbit does not close up on its base point")


def dash_orbit(x: Rational, p: int, max_steps: int = 10_000) -> DashOrbit:
    """Follow the dash orbit of x until it returns to x.

    Raises ValueError if the orbit is only eventually periodic (enters a cycle
    that does not contain x, e.g. x = 7/6 falling onto 1/6) or does not close
    within max_steps.
    """
    x = Fraction(x)
    iterates = [x]
    seen = {x}
    y = x
    for _ in range(max_steps):
        y = dash(y, p)
        iterates.append(y)
        if y == x:
            return DashOrbit(base=x, p=p, iterates=tuple(iterates), period=len(iterates) - 1)
        if y in seen:
            raise ValueError(f"orbit of {x} is eventually periodic but never returns to {x}")
        seen.add(y)
    raise ValueError(f"orbit of {x} did not close within {max_steps} steps")
