"""Rising factorials, harmonic numbers, and the WZ pair (F, G) with its partial sums.

F(x, k) = (2k + x) (x)_k^3 (1/2)_k / ((1)_k^3 (1/2 + x)_k)
G(x, k) = k^3 (k + 2x) / x^3 * (x)_k^3 (1/2)_k / ((1)_k^3 (1/2 + x)_k)

F and G satisfy F(x+1, k) - F(x, k) = G(x, k+1) - G(x, k) exactly, which lets a
shifted sum of F telescope into a boundary sum of G. All sums are computed as
exact rationals; individual summands are allowed to be non p-adic integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_core import Rational


class PochhammerPoleError(ValueError):
    """The (1/2 + x)_k denominator vanishes, or G is evaluated at x = 0."""


def half_pole_index(x: Rational) -> int | None:
    """j >= 0 such that 1/2 + x + j = 0, or None. (1/2+x)_k vanishes iff j < k."""
    t = -(Fraction(x) + Fraction(1, 2))
    if t.denominator == 1 and t >= 0:
        return int(t)
    return None


@dataclass(frozen=True)
class WZTermSpec:
    """An admissible (x, k) for the pair: k >= 0 and (1/2 + x)_k free of zeros."""

    x: Rational
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"k must be nonnegative, got {self.k}")
        j = half_pole_index(self.x)
        if j is not None and j < self.k:
            raise PochhammerPoleError(f"(1/2 + {self.x})_{self.k} has a zero factor at j = {j}")


@dataclass(frozen=True)
class HarmonicSpec:
    """Index and order of a generalized harmonic number; H_0 is the empty sum."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if self.m < 1:
            raise ValueError(f"order must be positive, got {self.m}")


def pochhammer(x: Rational, k: int) -> Rational:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    x = Fraction(x)
    acc = Fraction(1)
    for j in range(k):
        acc *= x + j
    return acc


def harmonic(n: int, m: int) -> Rational:
    """H_n of order m: sum of 1/k^m for k = 1..n."""
    spec = HarmonicSpec(n, m)
    return sum((Fraction(1, k**spec.m) for k in range(1, spec.n + 1)), Fraction(0))


def _core(x: Rational, k: int) -> Rational:
    # (x)_k^3 (1/2)_k / ((1)_k^3 (1/2+x)_k); callers have already checked the pole
    num = pochhammer(x, k) ** 3 * pochhammer(Fraction(1, 2), k)
    den = pochhammer(Fraction(1), k) ** 3 * pochhammer(Fraction(1, 2) + x, k)
    return num / den


def term_F(x: Rational, k: int) -> Rational:
    """F(x, k), exact."""
    spec = WZTermSpec(x, k)
    x = Fraction(spec.x)
    return (2 * spec.k + x) * _core(x, spec.k)


def term_G(x: Rational, k: int) -> Rational:
    """G(x, k), exact; G(x, 0) = 0."""
    spec = WZTermSpec(x, k)
    x = Fraction(spec.x)
    if x == 0:
        raise PochhammerPoleError("G has a pole at x = 0")
    return Fraction(spec.k**3) * (spec.k + 2 * x) / x**3 * _core(x, spec.k)


def wz_residual(x: Rational, k: int) -> Rational:
    """F(x+1, k) - F(x, k) - G(x, k+1) + G(x, k); exactly zero for admissible inputs."""
    x = Fraction(x)
    return term_F(x + 1, k) - term_F(x, k) - term_G(x, k + 1) + term_G(x, k)


def sum_F(x: Rational, N: int) -> Rational:
    """Sum of F(x, k) for k = 0..N-1, computed incrementally in O(N) products."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    x = Fraction(x)
    j = half_pole_index(x)
    if j is not None and j < N - 1:
        raise PochhammerPoleError(f"(1/2 + {x})_{N - 1} has a zero factor at j = {j}")
    half = Fraction(1, 2)
    core = Fraction(1)
    total = Fraction(0)
    for k in range(N):
        total += (2 * k + x) * core
        if k < N - 1:
            core *= (x + k) ** 3 * (half + k) / ((1 + k) ** 3 * (half + x + k))
    return total


def sum_G_boundary(alpha: Rational, a: int, N: int) -> Rational:
    """Sum of G(alpha + l, N) over l = 0..a-1, exact.

    Consecutive values are related by one rational ratio, so the usual cost of a
    full Pochhammer evaluation is paid once, not a times. Whenever a value is 0
    (or a ratio factor degenerates) the next value is recomputed directly.
    """
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    alpha = Fraction(alpha)
    if a == 0:
        return Fraction(0)

    # reject any pole in the whole l-range up front
    if alpha.denominator == 1 and 0 <= -alpha < a:
        raise PochhammerPoleError(f"G has a pole at x = 0 (l = {-alpha})")
    t = -(alpha + Fraction(1, 2))
    if t.denominator == 1 and t - (a - 1) < N and t >= 0:
        bad_l = max(0, int(t) - N + 1)
        if bad_l < a:
            raise PochhammerPoleError(f"(1/2 + {alpha} + {bad_l})_{N} has a zero factor")

    half = Fraction(1, 2)
    cur = term_G(alpha, N)
    total = cur
    for l in range(1, a):
        x = alpha + l - 1
        if cur != 0 and x + 1 != 0 and half + x + N != 0:
            cur *= (N + 2 * x + 2) * (x + N) ** 3 * (half + x)
            cur /= (N + 2 * x) * (x + 1) ** 3 * (half + x + N)
        else:
            cur = term_G(alpha + l, N)
        total += cur
    return total
