"""Exact scalar arithmetic and discrete value domains.

Every quantity in this package is an exact rational (`fractions.Fraction`);
nothing ever touches floating point.  A :class:`DomainSpec` describes the
discrete subset of the rationals a frieze may take its entries from, knows
its smallest nonzero modulus, and can enumerate all nonzero members inside
a bounded disc -- which is what turns the finiteness theory into an
effective search.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

#: Exact rational scalar used for all frieze entries.
Scalar = Fraction

_SCALAR_RE = re.compile(r"[+-]?\d+(?:/(\d+))?")


def as_scalar(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction, or ``"p/q"`` string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return scalar_from_str(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def scalar_from_str(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a rational, rejecting q = 0."""
    stripped = text.strip()
    match = _SCALAR_RE.fullmatch(stripped)
    if match is None:
        raise ValueError(f"malformed rational {text!r}: expected 'p' or 'p/q'")
    if match.group(1) is not None and int(match.group(1)) == 0:
        raise ValueError(f"malformed rational {text!r}: zero denominator")
    return Fraction(stripped)


def scalar_to_str(value: int | str | Fraction) -> str:
    """Format a rational as ``"p"`` (integers) or ``"p/q"`` (lowest terms)."""
    x = as_scalar(value)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def gcd_nat(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers; gcd(0, 0) = 0."""
    if a < 0 or b < 0:
        raise ValueError("gcd_nat expects nonnegative integers")
    return math.gcd(a, b)


def is_prime(n: int) -> bool:
    """Trial-division primality test; inputs here are small divisors."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, in increasing order."""
    if n < 1:
        raise ValueError("prime_factors expects a positive integer")
    factors = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            factors.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def p_valuation(p: int, n: int) -> int:
    """Largest e such that p**e divides n, for a prime p and n >= 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if n < 0:
        raise ValueError("p_valuation expects a positive integer")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@dataclass(frozen=True)
class DomainSpec:
    """A discrete set of rationals that frieze entries may be drawn from.

    Two shapes are supported: a scaled integer lattice ``{k*factor}`` with
    multipliers k ranging over the positive integers (``signed=False``) or
    all nonzero integers (``signed=True``), and an explicit finite set.
    The four public constructors cover the kinds used throughout; scaling
    by a nonzero rational stays inside the representation.
    """

    factor: Fraction | None = None
    signed: bool = False
    values: frozenset[Fraction] | None = None

    def __post_init__(self) -> None:
        if (self.factor is None) == (self.values is None):
            raise ValueError("DomainSpec needs exactly one of factor/values")
        if self.factor is not None and self.factor == 0:
            raise ValueError("lattice factor must be nonzero")
        if self.values is not None and not any(v != 0 for v in self.values):
            raise ValueError("explicit domain needs at least one nonzero value")

    # -- constructors ------------------------------------------------------

    @classmethod
    def positive_integers(cls) -> DomainSpec:
        return cls(factor=Fraction(1), signed=False)

    @classmethod
    def nonzero_integers(cls) -> DomainSpec:
        return cls(factor=Fraction(1), signed=True)

    @classmethod
    def scaled_integers(cls, factor: int | str | Fraction) -> DomainSpec:
        """All nonzero integer multiples of ``factor``."""
        return cls(factor=as_scalar(factor), signed=True)

    @classmethod
    def finite_set(cls, values) -> DomainSpec:
        return cls(values=frozenset(as_scalar(v) for v in values))

    # -- queries -----------------------------------------------------------

    @property
    def kind(self) -> str:
        if self.values is not None:
            return "explicit-finite-set"
        if self.factor == 1:
            return "nonzero-integers" if self.signed else "positive-integers"
        return "scaled-integers" if self.signed else "scaled-positive-integers"

    @property
    def min_modulus(self) -> Fraction:
        """inf{|x| : x in the domain, x != 0}; strictly positive."""
        if self.values is not None:
            return min(abs(v) for v in self.values if v != 0)
        return abs(self.factor)

    def __contains__(self, value) -> bool:
        x = as_scalar(value)
        if self.values is not None:
            return x in self.values
        k = x / self.factor
        if k.denominator != 1:
            return False
        return k != 0 if self.signed else k >= 1

    def enumerate_bounded(self, bound: int | str | Fraction) -> list[Fraction]:
        """All nonzero members x with |x| <= bound, sorted ascending."""
        b = as_scalar(bound)
        if b < 0:
            raise ValueError("bound must be nonnegative")
        if self.values is not None:
            return sorted(v for v in self.values if v != 0 and abs(v) <= b)
        step = abs(self.factor)
        kmax = int(b / step)
        if self.signed:
            members = [k * step for k in range(-kmax, 0)]
            members += [k * step for k in range(1, kmax + 1)]
            return members
        sign = 1 if self.factor > 0 else -1
        return sorted(k * sign * step for k in range(1, kmax + 1))

    def scaled(self, z: int | str | Fraction) -> DomainSpec:
        """The domain ``z * R`` for a nonzero rational z."""
        factor = as_scalar(z)
        if factor == 0:
            raise ValueError("scaling factor must be nonzero")
        if self.values is not None:
            return DomainSpec(values=frozenset(v * factor for v in self.values))
        return DomainSpec(factor=self.factor * factor, signed=self.signed)

    # -- CLI grammar -------------------------------------------------------

    def spec_string(self) -> str:
        """Render in the CLI flag grammar (``nat``, ``scaled:p/q``, ...)."""
        if self.values is not None:
            return "set:" + ",".join(scalar_to_str(v) for v in sorted(self.values))
        if self.factor == 1:
            return "nonzero-int" if self.signed else "nat"
        tag = "scaled" if self.signed else "scaled-nat"
        return f"{tag}:{scalar_to_str(self.factor)}"


def parse_domain(text: str) -> DomainSpec:
    """Parse the CLI domain grammar: nat | nonzero-int | scaled:p/q | set:v1,v2,..."""
    text = text.strip()
    if text == "nat":
        return DomainSpec.positive_integers()
    if text == "nonzero-int":
        return DomainSpec.nonzero_integers()
    if text.startswith("scaled-nat:"):
        return DomainSpec(factor=scalar_from_str(text[11:]), signed=False)
    if text.startswith("scaled:"):
        return DomainSpec.scaled_integers(scalar_from_str(text[7:]))
    if text.startswith("set:"):
        items = [s for s in text[4:].split(",") if s.strip()]
        if not items:
            raise ValueError("empty domain set")
        return DomainSpec.finite_set(items)
    raise ValueError(f"unknown domain {text!r}")


def domain_enumerate_bounded(domain: DomainSpec, bound) -> list[Fraction]:
    """Nonzero members of ``domain`` with absolute value at most ``bound``."""
    return domain.enumerate_bounded(bound)
