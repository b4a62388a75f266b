"""Exact scalar helpers shared by every exact computation in the package.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.  ``str(Fraction)`` already gives
the canonical ``"num/den"`` form used in all outputs (``"0"``, ``"3"``,
``"-5/192"``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb

Rat = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rat(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational of the form p or p/q: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def fmt_rat(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class Params:
    """The positive parameter pair (a, b) indexing every family."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = as_rat(self.a), as_rat(self.b)
        if a <= 0 or b <= 0:
            raise ValueError(f"parameters must be positive, got a={a}, b={b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def of(cls, a, b) -> Params:
        return cls(as_rat(a), as_rat(b))

    def swapped(self) -> Params:
        return Params(self.b, self.a)

    @property
    def mean(self) -> Fraction:
        """a/(a+b), the mean of the beta law with these parameters."""
        return self.a / (self.a + self.b)

    @property
    def integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def __str__(self):
        return f"(a={self.a}, b={self.b})"


def pochhammer_ratios(params: Params, rmax: int) -> list[Fraction]:
    """[(a)_r/(a+b)_r for r = 0..rmax]."""
    a, c = params.a, params.a + params.b
    out = [Fraction(1)]
    for k in range(rmax):
        out.append(out[-1] * (a + k) / (c + k))
    return out


def pochhammer_ratio(params: Params, r: int) -> Fraction:
    """(a)_r/(a+b)_r, i.e. B(a+r, b)/B(a, b), the r-th beta moment."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return pochhammer_ratios(params, r)[r]


def rising(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


def binom(n: int, k: int) -> Fraction:
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


def gen_binom(u, k: int) -> Fraction:
    """u(u-1)...(u-k+1)/k! for rational u."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    u = as_rat(u)
    out = Fraction(1)
    for j in range(k):
        out = out * (u - j) / (j + 1)
    return out


def nu2(n: int) -> int:
    if n < 1:
        raise ValueError("nu2 needs a positive integer")
    return (n & -n).bit_length() - 1


class FactorizationBudgetError(RuntimeError):
    """Raised when trial division would exceed the configured budget."""


Factorization = list  # sorted list of (prime, exponent) pairs

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def factorize(n: int, max_trial: int = 10**7) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division on a mod-30 wheel.

    Denominators of hypergeometric Bernoulli numbers are smooth, so the loop
    normally ends long before ``max_trial``.  A cofactor that would need
    divisors beyond ``max_trial`` raises :class:`FactorizationBudgetError`.
    """
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    pairs: list[tuple[int, int]] = []

    def strip(p):
        nonlocal n
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))

    for p in (2, 3, 5):
        strip(p)
    d, i = 7, 0
    while d * d <= n:
        if d > max_trial:
            raise FactorizationBudgetError(
                f"unfactored cofactor of {n.bit_length()} bits exceeds trial budget {max_trial}"
            )
        strip(d)
        d += _WHEEL[i]
        i = (i + 1) % 8
    if n > 1:
        pairs.append((n, 1))
    return pairs


def unfactor(pairs) -> int:
    out = 1
    for p, e in pairs:
        out *= p**e
    return out
