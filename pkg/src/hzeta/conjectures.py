"""Scans of the arithmetic of denominators of B_n^{(b)} = B_n^{(1,b)}."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bernoulli import bern_numbers, iter_bern_numbers
from .exact import Params, factorize, nu2


def denom_seq(b: int, nmax: int) -> list[int]:
    """Reduced denominators of B_0^{(b)}..B_nmax^{(b)}; a zero value has denominator 1."""
    return bern_numbers(Params.of(1, b), nmax).denominators()


def alpha_predicted(b: int) -> int:
    v = nu2(b)
    return 2**v if b % 4 == 0 else v + 1


@dataclass
class AlphaResult:
    b: int
    observed: int | None
    predicted: int
    conclusive: bool

    @property
    def agree(self) -> bool:
        return self.conclusive and self.observed == self.predicted


def alpha_check(b: int, nmax: int | None = None) -> AlphaResult:
    """Length of the initial run of odd denominators, against the conjectured formula.

    Terms are generated only until the first even denominator; if none shows
    up by ``nmax`` (default 4b + 64) the result is marked inconclusive.
    """
    if nmax is None:
        nmax = 4 * b + 64
    predicted = alpha_predicted(b)
    for n, x in enumerate(iter_bern_numbers(Params.of(1, b))):
        if x.denominator % 2 == 0:
            return AlphaResult(b, n, predicted, True)
        if n >= nmax:
            break
    return AlphaResult(b, None, predicted, False)


@dataclass(frozen=True)
class Violation:
    b: int
    n: int
    prime: int


def prime_bound_check(b: int, nmax: int) -> list[Violation]:
    """Every prime p dividing den(B_n^{(b)}) should satisfy p <= n + b."""
    out = []
    for n, d in enumerate(denom_seq(b, nmax)):
        for p, _ in factorize(d):
            if p > n + b:
                out.append(Violation(b, n, p))
    return out


def vsc_denominator(two_n: int) -> int:
    """prod of primes p with (p-1) | 2n."""
    out = 1
    for d in range(1, two_n + 1):
        if two_n % d == 0 and _is_prime(d + 1):
            out *= d + 1
    return out


def _is_prime(m: int) -> bool:
    return m >= 2 and factorize(m) == [(m, 1)]


def vsc_check(nmax: int) -> list[int]:
    """Indices n <= nmax where den(B_{2n}) differs from the von Staudt-Clausen product."""
    dens = denom_seq(1, 2 * nmax)
    return [n for n in range(1, nmax + 1) if dens[2 * n] != vsc_denominator(2 * n)]


def non_squarefree_denominators(b: int, nmax: int) -> list[tuple[int, int]]:
    """(n, den) pairs whose denominator has a repeated prime factor."""
    out = []
    for n, d in enumerate(denom_seq(b, nmax)):
        if any(e > 1 for _, e in factorize(d)):
            out.append((n, d))
    return out


@dataclass
class ConjReport:
    b_range: tuple
    n_range: tuple
    alpha: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    vsc_failures: list = field(default_factory=list)

    @property
    def alpha_disagreements(self) -> list[AlphaResult]:
        return [r for r in self.alpha if not r.agree]

    @property
    def ok(self) -> bool:
        return not (self.violations or self.vsc_failures or self.alpha_disagreements)

    def to_dict(self) -> dict:
        return {
            "b_range": list(self.b_range),
            "n_range": list(self.n_range),
            "alpha": [
                {"b": r.b, "observed": r.observed, "predicted": r.predicted, "conclusive": r.conclusive}
                for r in self.alpha
            ],
            "alpha_disagreements": [r.b for r in self.alpha_disagreements],
            "violations": [{"b": v.b, "n": v.n, "prime": v.prime} for v in self.violations],
            "vsc_failures": list(self.vsc_failures),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def conjecture_scan(bmax: int, nmax: int, alpha_nmax: int | None = None,
                    vsc_nmax: int | None = None) -> ConjReport:
    """Run all three scans for 1 <= b <= bmax.

    The prime bound is checked for n <= nmax; alpha uses a per-b cap of
    ``alpha_nmax`` or 4b + 64; von Staudt-Clausen runs to 2n <= max(nmax, 2).
    """
    report = ConjReport((1, bmax), (0, nmax))
    for b in range(1, bmax + 1):
        report.alpha.append(alpha_check(b, alpha_nmax))
        report.violations.extend(prime_bound_check(b, nmax))
    report.vsc_failures = vsc_check(vsc_nmax if vsc_nmax is not None else max(1, nmax // 2))
    return report
