"""Exact values of the hypergeometric zeta function at integers p >= 2.

Three independent routes produce the same table:

* ``linear``: the beta-function linear recurrence, solved for the newest
  value, with every beta ratio written as a Pochhammer ratio;
* ``quadratic``: the Riccati-type quadratic recurrence seeded with zeta(2);
* ``series``: coefficients of the power series Phi_{a,b+1}/Phi_{a,b}.

A fourth route (``bernoulli``) reads the values off the reciprocal series
and is provided by :mod:`hzeta.bernoulli`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .exact import Params, as_rat, pochhammer_ratios
from .series import phi_series, series_div

METHODS = ("linear", "quadratic", "series", "bernoulli")


@dataclass
class ZetaTable:
    params: Params
    pmax: int
    values: dict = field(default_factory=dict)
    method: str = "linear"

    def __getitem__(self, p: int) -> Fraction:
        return self.values[p]

    def same_values(self, other: ZetaTable) -> bool:
        return self.values == other.values

    def to_dict(self) -> dict:
        return {
            "a": str(self.params.a),
            "b": str(self.params.b),
            "method": self.method,
            "values": {str(p): str(v) for p, v in sorted(self.values.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> ZetaTable:
        values = {int(p): as_rat(v) for p, v in d["values"].items()}
        return cls(Params.of(d["a"], d["b"]), max(values), values, d["method"])

    def to_csv_rows(self) -> list[tuple[int, str]]:
        return [(p, str(v)) for p, v in sorted(self.values.items())]


def zeta_one_b(b) -> Fraction:
    """The value b/(1+b) suggested for zeta_{1,b}(1).

    Informational only; no recurrence in this package consumes it.
    """
    b = as_rat(b)
    return b / (1 + b)


def zeta_closed_small(params: Params) -> tuple[Fraction, Fraction, Fraction]:
    """Closed forms of zeta(2), zeta(3), zeta(4) as rational functions of a, b."""
    a, b = params.a, params.b
    s = a + b
    z2 = -a * b / (s**2 * (1 + s))
    z3 = a * b * (a - b) / (s**3 * (s + 1) * (s + 2))
    p4 = a**2 + a**3 - 4 * a * b - 2 * a**2 * b + b**2 - 2 * a * b**2 + b**3
    z4 = -a * b * p4 / (s**4 * (s + 1) ** 2 * (s + 2) * (s + 3))
    return z2, z3, z4


def _check_pmax(pmax: int):
    if pmax < 2:
        raise ValueError(f"pmax must be at least 2, got {pmax}")


def zeta_linear(params: Params, pmax: int) -> ZetaTable:
    """zeta(p), 2 <= p <= pmax, from the beta linear recurrence.

    Solved form: with r(k) = (a)_k/(a+b)_k = B(a+k, b)/B(a, b),

        zeta(p) = -b r(p-1) / ((a+b)(a+b+p-1)(p-2)!)
                  - sum_{j=1}^{p-2} r(j)/j! * zeta(p-j)
    """
    _check_pmax(pmax)
    a, b = params.a, params.b
    s = a + b
    r = pochhammer_ratios(params, pmax)
    rfact = [r[k] / factorial(k) for k in range(pmax + 1)]
    values: dict[int, Fraction] = {}
    for p in range(2, pmax + 1):
        head = -b * r[p - 1] / (s * (s + p - 1) * factorial(p - 2))
        tail = sum((rfact[j] * values[p - j] for j in range(1, p - 1)), Fraction(0))
        values[p] = head - tail
    return ZetaTable(params, pmax, values, "linear")


def zeta_quadratic(params: Params, pmax: int, seed2: Fraction | None = None) -> ZetaTable:
    """zeta(p) from the quadratic recurrence, for p >= 1:

        (a+b+p+1) zeta(p+2) = sum_{k=1}^{p-1} zeta(k+1) zeta(p-k+1)
                              - (a-b)/(a+b) zeta(p+1)

    The convolution stops at k = p-1, so no zeta(1) term ever enters.
    """
    _check_pmax(pmax)
    if seed2 is None:
        seed2 = zeta_closed_small(params)[0]
    a, b = params.a, params.b
    skew = (a - b) / (a + b)
    values = {2: as_rat(seed2)}
    for p in range(1, pmax - 1):
        conv = sum((values[k + 1] * values[p - k + 1] for k in range(1, p)), Fraction(0))
        values[p + 2] = (conv - skew * values[p + 1]) / (a + b + p + 1)
    return ZetaTable(params, pmax, values, "quadratic")


def zeta_series_ratio(params: Params, pmax: int) -> ZetaTable:
    """zeta(k+1) = b/(a+b) * [z^k] Phi_{a,b+1}(z)/Phi_{a,b}(z)."""
    _check_pmax(pmax)
    a, b = params.a, params.b
    order = pmax - 1
    ratio = series_div(phi_series(Params(a, b + 1), order), phi_series(params, order))
    scale = b / (a + b)
    values = {k + 1: scale * ratio[k] for k in range(1, order + 1)}
    return ZetaTable(params, pmax, values, "series")


def zeta_table(params: Params, pmax: int, method: str = "linear") -> ZetaTable:
    if method == "linear":
        return zeta_linear(params, pmax)
    if method == "quadratic":
        return zeta_quadratic(params, pmax)
    if method in ("series", "series-ratio"):
        return zeta_series_ratio(params, pmax)
    if method == "bernoulli":
        from .bernoulli import zeta_from_bernoulli

        return zeta_from_bernoulli(params, pmax)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def beta_moment_form_check(params: Params, nmax: int, table: ZetaTable | None = None) -> dict[int, bool]:
    """The moment/cumulant form of the linear recurrence, for 2 <= n <= nmax:

        (n-1)! sum_{j=2}^n r(n-j)/(n-j)! zeta(j) = a/(a+b) r(n-1) - r(n)

    (the beta-function identity divided through by B(a, b)).
    """
    if table is None or table.pmax < nmax:
        table = zeta_linear(params, nmax)
    r = pochhammer_ratios(params, nmax)
    mean = params.mean
    out = {}
    for n in range(2, nmax + 1):
        lhs = factorial(n - 1) * sum(
            (r[n - j] / factorial(n - j) * table[j] for j in range(2, n + 1)), Fraction(0)
        )
        out[n] = lhs == mean * r[n - 1] - r[n]
    return out


def linear_theorem_residuals(params: Params, table: ZetaTable) -> dict[int, Fraction]:
    """Left minus right side of the unsolved linear recurrence, divided by B(a,b):

        sum_{l=1}^p r(p-l) p!/(p-l)! zeta(l+1) + b p r(p) / ((a+b)(a+b+p))

    for 1 <= p <= pmax-1.  Every entry is zero for a correct table.
    """
    a, b = params.a, params.b
    s = a + b
    r = pochhammer_ratios(params, table.pmax)
    out = {}
    for p in range(1, table.pmax):
        lhs = sum(
            (r[p - l] * factorial(p) / factorial(p - l) * table[l + 1] for l in range(1, p + 1)),
            Fraction(0),
        )
        out[p] = lhs + b * p * r[p] / (s * (s + p))
    return out

