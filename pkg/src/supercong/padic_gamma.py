"""Morita's p-adic Gamma function to a chosen modular precision p^M.

Gamma_p(0) = 1 and Gamma_p(n) = (-1)^n * prod of j for 0 < j < n, p not dividing j.
Rational arguments are evaluated through their least residue mod p^M, which is
correct mod p^M because Gamma_p is 1-Lipschitz in the p-adic metric. The unit-part
factorization of (x)_{p^r} into dash iterates and Gamma_p ratios lives here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_core import (
    PadicDenominatorError,
    PrimeRequiredError,
    Rational,
    is_prime,
    mod_inverse,
    residue,
    valuation,
)
from .dwork import dash

PRECISION_CAP = 10**6


class PrecisionCapError(ValueError):
    """Requested modulus exceeds the desk-scale cap on Gamma_p products."""


@dataclass(frozen=True)
class GammaValue:
    """A Gamma_p value as a residue mod p^M. Gamma_p values are always p-adic units."""

    residue: int
    p: int
    M: int

    def __post_init__(self) -> None:
        if not 0 <= self.residue < self.p**self.M:
            raise ValueError("residue out of range")
        if self.residue % self.p == 0:
            raise ValueError("Gamma_p values are p-adic units")


def _check_modulus(p: int, M: int) -> int:
    if not is_prime(p):
        raise PrimeRequiredError(f"p must be prime, got {p}")
    if M < 1:
        raise ValueError(f"precision exponent must be positive, got {M}")
    pm = p**M
    if pm > PRECISION_CAP:
        raise PrecisionCapError(f"p^M = {pm} exceeds the cap {PRECISION_CAP}")
    return pm


@lru_cache(maxsize=None)
def _gamma_product(n: int, p: int, pm: int) -> int:
    # (-1)^n * prod_{0<j<n, p!|j} j mod pm, for 0 <= n < pm
    acc = 1
    for j in range(1, n):
        if j % p:
            acc = acc * j % pm
    if n % 2:
        acc = pm - acc if acc else 0
    return acc % pm


def gamma_p_int(n: int, p: int, M: int) -> GammaValue:
    """Gamma_p at a nonnegative integer, reduced into [0, p^M) first (Lipschitz)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    pm = _check_modulus(p, M)
    return GammaValue(residue=_gamma_product(n % pm, p, pm), p=p, M=M)


def gamma_p(x: Rational, p: int, M: int) -> GammaValue:
    """Gamma_p at a p-adic integer rational, via its integer representative mod p^M."""
    pm = _check_modulus(p, M)
    x = Fraction(x)
    if x.denominator % p == 0:
        raise PadicDenominatorError(f"{x} is not a p-adic integer for p = {p}")
    return GammaValue(residue=_gamma_product(residue(x, p, M), p, pm), p=p, M=M)


def gamma_ratio(x: Rational, p: int, M: int) -> int:
    """Residue mod p^M of Gamma_p(x+1)/Gamma_p(x).

    Equals -x when x is a p-adic unit and -1 when p | x, which the tests check;
    the implementation just divides the two values.
    """
    pm = _check_modulus(p, M)
    num = gamma_p(Fraction(x) + 1, p, M).residue
    den = gamma_p(x, p, M).residue
    return num * mod_inverse(den, pm) % pm


def pochhammer_factorization(x: Rational, p: int, r: int, M: int) -> tuple[int, int]:
    """Predicted p-power exponent and unit part of the rising factorial (x)_{p^r}.

    Returns (E, unit) with E = sum of p^{j-1} for j = 1..r and
    unit = (-1)^r * x^{*r} * prod_{j=1..r} Gamma_p(y_j + p^j)/Gamma_p(y_j)  (mod p^M)
    where y_j = x^{*(r-j)}, so that (x)_{p^r} = p^E * unit up to p^M-precision in
    the unit. Peeling the multiples of p out of (y)_{p^m} leaves (y*)_{p^(m-1)}
    and a Gamma_p ratio based at y; unrolling that r times pins each ratio to the
    dash iterate it was peeled from, which is what makes the identity exact
    (anchoring every ratio at x itself drifts by a unit factor once r > 1).
    Requires the r-th dash iterate of x to be a p-adic unit, otherwise the split
    into p-power and unit would be wrong, and p^{r+M} under the precision cap.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    _check_modulus(p, M)
    if p**(r + M) > PRECISION_CAP:
        raise PrecisionCapError(f"p^(r+M) = {p**(r+M)} exceeds the cap {PRECISION_CAP}")
    x = Fraction(x)
    if x.denominator % p == 0:
        raise PadicDenominatorError(f"{x} is not a p-adic integer for p = {p}")
    iterates = [x]
    for _ in range(r):
        iterates.append(dash(iterates[-1], p))
    xsr = iterates[r]
    if valuation(xsr, p) != 0:
        raise ValueError(f"the r-th dash iterate {xsr} of {x} is not a p-adic unit")

    pm = p**M
    unit = residue(Fraction(-1) ** r * xsr, p, M)
    for j in range(1, r + 1):
        y = iterates[r - j]
        ratio = gamma_p(y + p**j, p, M).residue * mod_inverse(gamma_p(y, p, M).residue, pm)
        unit = unit * ratio % pm
    E = sum(p ** (j - 1) for j in range(1, r + 1))
    return E, unit
