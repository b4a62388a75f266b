"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import Params, as_rat, pochhammer_ratios

DEFAULT_ORDER = 64


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class Series:
    """Coefficients c[0..N] of a power series known exactly through z^N.

    ``coeffs[k]`` is the plain coefficient of z^k (not divided by k!).
    """

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_rat(c) for c in self.coeffs))
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant term")

    @classmethod
    def of(cls, coeffs, order: int | None = None) -> Series:
        """Build a series, zero-padding (or truncating) to ``order`` if given."""
        cs = list(coeffs)
        if order is not None:
            cs = (cs + [0] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.of([1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        c = as_rat(other)
        return Series(tuple(c * x for x in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return series_div(self, other)

    def __add__(self, other: Series) -> Series:
        _check_orders(self, other)
        return Series(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Series) -> Series:
        _check_orders(self, other)
        return Series(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def derivative(self) -> Series:
        """Coefficient-wise derivative; the result has order N-1."""
        if self.order == 0:
            return Series((Fraction(0),))
        return Series(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise SeriesError(f"cannot extend an order-{self.order} series to order {order}")
        return Series(self.coeffs[: order + 1])

    def negate_argument(self) -> Series:
        """f(-z)."""
        return Series(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def egf(self) -> list[Fraction]:
        """Exponential-generating coefficients k!*c[k]."""
        return [factorial(k) * c for k, c in enumerate(self.coeffs)]

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def _check_orders(f: Series, g: Series):
    if f.order != g.order:
        raise SeriesError(f"order mismatch: {f.order} vs {g.order}")


def phi_series(params: Params, order: int = DEFAULT_ORDER) -> Series:
    """Taylor coefficients of 1F1(a; a+b; z) through z^order."""
    if order < 0:
        raise SeriesError("order must be nonnegative")
    ratios = pochhammer_ratios(params, order)
    fact = 1
    out = []
    for k, r in enumerate(ratios):
        if k:
            fact *= k
        out.append(r / fact)
    return Series(tuple(out))


def exp_series(order: int, scale=1) -> Series:
    scale = as_rat(scale)
    out = [Fraction(1)]
    for k in range(1, order + 1):
        out.append(out[-1] * scale / k)
    return Series(tuple(out))


def series_mul(f: Series, g: Series) -> Series:
    _check_orders(f, g)
    n = f.order
    fc, gc = f.coeffs, g.coeffs
    return Series(tuple(sum((fc[i] * gc[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)))


def series_inv(f: Series) -> Series:
    f0 = f.coeffs[0]
    if f0 == 0:
        raise SeriesError("cannot invert a series with zero constant term")
    fc = f.coeffs
    inv0 = 1 / f0
    g = [inv0]
    for n in range(1, f.order + 1):
        s = sum((fc[k] * g[n - k] for k in range(1, n + 1)), Fraction(0))
        g.append(-s * inv0)
    return Series(tuple(g))


def series_div(f: Series, g: Series) -> Series:
    _check_orders(f, g)
    return series_mul(f, series_inv(g))


def series_log(f: Series) -> Series:
    """log f for f(0) = 1, from L' = f'/f solved term by term."""
    fc = f.coeffs
    if fc[0] != 1:
        raise SeriesError("series_log needs constant term 1")
    out = [Fraction(0)]
    for n in range(1, f.order + 1):
        s = sum((k * out[k] * fc[n - k] for k in range(1, n)), Fraction(0))
        out.append((n * fc[n] - s) / n)
    return Series(tuple(out))
