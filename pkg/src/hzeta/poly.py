"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import as_rat, binom


def _trim(cs):
    cs = list(cs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return tuple(cs) if cs else (Fraction(0),)


@dataclass(frozen=True)
class Poly:
    """Coefficients lowest degree first; trailing zeros are trimmed so equality is exact."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(as_rat(c) for c in self.coeffs))

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c=1) -> Poly:
        return cls((0,) * n + (c,))

    X = None  # set below

    @property
    def degree(self) -> int:
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_rat(other)
            return Poly(tuple(c * x for x in self.coeffs))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x):
        if isinstance(x, Poly):
            return self.compose(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        acc = Poly.const(0)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, h) -> Poly:
        """p(x + h), by binomial expansion."""
        h = as_rat(h)
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if c:
                hp = Fraction(1)
                for j in range(k, -1, -1):
                    out[j] += c * binom(k, j) * hp
                    hp *= h
        return Poly(tuple(out))

    def reflect(self) -> Poly:
        """p(1 - x)."""
        return self.compose(Poly((1, -1)))

    def derivative(self) -> Poly:
        if len(self.coeffs) == 1:
            return Poly.const(0)
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0 and self.degree >= 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _coerce(x) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


Poly.X = Poly((0, 1))
