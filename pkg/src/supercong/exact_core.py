"""Exact rational arithmetic with p-adic valuations, residues and congruence tests.

Everything downstream (dash iterates, Gamma_p, hypergeometric sums) reduces to the
four operations here: valuation, residue, congruent, mod_inverse. All values are
fractions.Fraction; there is no floating point anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class PrimeRequiredError(ValueError):
    """An argument that must be prime is not."""


class PadicDenominatorError(ValueError):
    """p divides the denominator, so the value is not a p-adic integer."""


class NonInvertibleError(ValueError):
    """gcd(n, modulus) != 1, no modular inverse exists."""


class _Infinite:
    """The valuation of zero. Compares greater than every integer, equal to itself."""

    __slots__ = ()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Infinite)

    def __ne__(self, other: object) -> bool:
        return not isinstance(other, _Infinite)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, _Infinite)):
            return False
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if isinstance(other, (int, _Infinite)):
            return isinstance(other, _Infinite)
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if isinstance(other, (int, _Infinite)):
            return not isinstance(other, _Infinite)
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if isinstance(other, (int, _Infinite)):
            return True
        return NotImplemented

    def __hash__(self) -> int:
        return hash("padic-valuation-infinite")

    def __repr__(self) -> str:
        return "INFINITE"

    def __reduce__(self):
        # unpickle to the module singleton so identity checks survive process pools
        return (_infinite_instance, ())


def _infinite_instance() -> _Infinite:
    return INFINITE


INFINITE = _Infinite()

Valuation = int | _Infinite


def is_prime(n: int) -> bool:
    """Deterministic trial division, adequate for desk-scale inputs."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(q: Rational, p: int) -> Valuation:
    """p-adic valuation of q; INFINITE for q = 0, possibly negative otherwise."""
    if not is_prime(p):
        raise PrimeRequiredError(f"valuation needs a prime, got {p}")
    q = Fraction(q)
    if q == 0:
        return INFINITE
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


def mod_inverse(n: int, modulus: int) -> int:
    """Inverse of n modulo modulus, in [0, modulus)."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    try:
        return pow(n, -1, modulus)
    except ValueError as exc:
        raise NonInvertibleError(f"{n} is not invertible mod {modulus}") from exc


def residue(q: Rational, p: int, m: int) -> int:
    """Least nonnegative residue of q modulo p^m, the unique t in [0, p^m) with v_p(q - t) >= m."""
    if not is_prime(p):
        raise PrimeRequiredError(f"residue needs a prime, got {p}")
    if m < 1:
        raise ValueError(f"exponent must be positive, got {m}")
    q = Fraction(q)
    if q.denominator % p == 0:
        raise PadicDenominatorError(f"{q} is not a p-adic integer for p = {p}")
    pm = p**m
    return q.numerator * mod_inverse(q.denominator, pm) % pm


def congruent(a: Rational, b: Rational, p: int, m: int) -> bool:
    """True iff v_p(a - b) >= m. Exact equality passes every exponent."""
    if m < 1:
        raise ValueError(f"exponent must be positive, got {m}")
    return valuation(Fraction(a) - Fraction(b), p) >= m


@dataclass(frozen=True)
class PAdicContext:
    """A prime p, a congruence level r, and a working-precision exponent m >= r."""

    p: int
    r: int
    m: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise PrimeRequiredError(f"p must be prime, got {self.p}")
        if self.p < 3:
            raise ValueError("p must be an odd prime")
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")

    @property
    def working_modulus(self) -> int:
        return self.p**self.m

    def valuation(self, q: Rational) -> Valuation:
        return valuation(q, self.p)

    def least_residue(self, q: Rational) -> int:
        """<q> mod p^r, the level the claims of interest live at."""
        return residue(q, self.p, self.r)

    def residue(self, q: Rational, m: int | None = None) -> int:
        return residue(q, self.p, self.m if m is None else m)

    def congruent(self, a: Rational, b: Rational, m: int | None = None) -> bool:
        return congruent(a, b, self.p, self.m if m is None else m)
