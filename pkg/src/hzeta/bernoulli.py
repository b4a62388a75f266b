"""Hypergeometric Bernoulli numbers and polynomials, and the identities tying them
to the beta law and the hypergeometric zeta values.

The random variables of the probabilistic picture are never sampled.  The beta
variable is represented by its moments r(p) = (a)_p/(a+b)_p and the zero-built
variable Z_{a,b} by its moments B_n^{(a,b)}; every identity below is checked
exactly on those sequences.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .exact import Params, as_rat, binom, gen_binom, pochhammer_ratios, rising
from .poly import Poly
from .series import phi_series, series_inv
from .zeta import ZetaTable, zeta_linear


@dataclass
class BernTable:
    params: Params
    nmax: int
    numbers: list

    def __getitem__(self, n: int) -> Fraction:
        return self.numbers[n]

    def __len__(self):
        return len(self.numbers)

    def denominators(self) -> list[int]:
        return [x.denominator for x in self.numbers]

    def to_dict(self) -> dict:
        return {
            "a": str(self.params.a),
            "b": str(self.params.b),
            "bernoulli": [str(x) for x in self.numbers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass
class CheckReport:
    """Per-index outcome of an exact identity check."""

    name: str
    results: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    @property
    def failures(self) -> list:
        return [k for k, v in self.results.items() if not v]

    def __bool__(self):
        return self.ok


def bern_numbers(params: Params, nmax: int) -> BernTable:
    """B_n^{(a,b)} = n! [z^n] 1/Phi_{a,b}(z), for n = 0..nmax."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    inv = series_inv(phi_series(params, nmax))
    return BernTable(params, nmax, inv.egf())


def iter_bern_numbers(params: Params):
    """Yield B_0, B_1, ... without a fixed truncation order.

    Same Cauchy inversion as :func:`bern_numbers`, grown one term at a time;
    used by scans that stop at the first interesting index.
    """
    a, c = params.a, params.a + params.b
    phi = [Fraction(1)]  # (a)_k/(a+b)_k/k!
    inv = [Fraction(1)]
    yield Fraction(1)
    n = 0
    fact = 1
    while True:
        n += 1
        phi.append(phi[-1] * (a + n - 1) / ((c + n - 1) * n))
        g = -sum((phi[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0))
        inv.append(g)
        fact *= n
        yield fact * g


def bern_howard(b: int, nmax: int) -> BernTable:
    """Howard's A_{b,n} from sum_{r=0}^{n} C(n+b, r) A_{b,r} = 0 (n > 0), A_{b,0} = 1."""
    if b < 1 or int(b) != b:
        raise ValueError("Howard's recurrence needs a positive integer b")
    b = int(b)
    out = [Fraction(1)]
    for n in range(1, nmax + 1):
        s = sum((binom(n + b, r) * out[r] for r in range(n)), Fraction(0))
        out.append(-s / binom(n + b, n))
    return BernTable(Params.of(1, b), nmax, out)


def zeta_from_bernoulli(params: Params, pmax: int) -> ZetaTable:
    """zeta(p) = kappa_Z(p)/(p-1)!, with kappa_Z the cumulants of the moment sequence B_n."""
    table = bern_numbers(params, pmax)
    kappas = moments_to_cumulants(table.numbers)
    values = {p: kappas[p] / factorial(p - 1) for p in range(2, pmax + 1)}
    return ZetaTable(params, pmax, values, "bernoulli")


def zeta_from_bernoulli_check(params: Params, nmax: int, zeta: ZetaTable | None = None,
                              bern: BernTable | None = None) -> CheckReport:
    """(n-1)! sum_{j=2}^n B_{n-j}/(n-j)! zeta(j) = a/(a+b) B_{n-1} + B_n, for 2 <= n <= nmax."""
    if zeta is None or zeta.pmax < nmax:
        zeta = zeta_linear(params, max(nmax, 2))
    if bern is None or bern.nmax < nmax:
        bern = bern_numbers(params, nmax)
    mean = params.mean
    rep = CheckReport("zeta-bernoulli linear recurrence")
    for n in range(2, nmax + 1):
        lhs = factorial(n - 1) * sum(
            (bern[n - j] / factorial(n - j) * zeta[j] for j in range(2, n + 1)), Fraction(0)
        )
        rep.results[n] = lhs == mean * bern[n - 1] + bern[n]
    return rep


def bern_zeta_relation_check(b: int, nmax: int) -> CheckReport:
    """B_n^{(b)} = -n! zeta_{1,b}(n)/b for n >= 2, with B_0 = 1 and B_1 = -1/(1+b)."""
    params = Params.of(1, b)
    bern = bern_numbers(params, nmax)
    zeta = zeta_linear(params, max(nmax, 2))
    bb = params.b
    rep = CheckReport("Bernoulli-zeta relation")
    rep.results[0] = bern[0] == 1
    if nmax >= 1:
        rep.results[1] = bern[1] == -1 / (1 + bb)
    for n in range(2, nmax + 1):
        rep.results[n] = bern[n] == -factorial(n) * zeta[n] / bb
    return rep


def _appell(moments, n: int) -> Poly:
    """sum_k C(n,k) m_k x^{n-k}, i.e. E(x + X)^n for a variable with moments m."""
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = binom(n, k) * moments[k]
    return Poly(tuple(coeffs))


def bern_poly(params: Params, n: int, bern: BernTable | None = None) -> Poly:
    """B_n^{(a,b)}(x) = sum_k C(n,k) B_k x^{n-k}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if bern is None or bern.nmax < n:
        bern = bern_numbers(params, n)
    return _appell(bern.numbers, n)


def companion_poly(params: Params, n: int) -> Poly:
    """C_n^{(a,b)}(z) = E(z + beta_{a,b})^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _appell(pochhammer_ratios(params, n), n)


def bern_polys(params: Params, nmax: int) -> list[Poly]:
    bern = bern_numbers(params, nmax)
    return [_appell(bern.numbers, n) for n in range(nmax + 1)]


def companion_polys(params: Params, nmax: int) -> list[Poly]:
    r = pochhammer_ratios(params, nmax)
    return [_appell(r, n) for n in range(nmax + 1)]


def zero_variable_cumulants(params: Params, nmax: int, zeta: ZetaTable | None = None) -> list[Fraction]:
    """[kappa_Z(1), ..., kappa_Z(nmax)] in the cumulant convention
    kappa_Z(1) = -a/(a+b), kappa_Z(j+1) = j! zeta(j+1).

    Index 0 of the returned list is kappa(1).
    """
    if zeta is None or zeta.pmax < nmax:
        zeta = zeta_linear(params, max(nmax, 2))
    return [-params.mean] + [factorial(j - 1) * zeta[j] for j in range(2, nmax + 1)]


def conjugate_recurrence_check(params: Params, nmax: int) -> CheckReport:
    """For 0 <= n < nmax, as exact polynomial identities:

        B_{n+1}(z) - z B_n(z) =   sum_j C(n,j) kappa_Z(j+1) B_{n-j}(z)
        C_{n+1}(z) - z C_n(z) = - sum_j C(n,j) kappa_Z(j+1) C_{n-j}(z)

    Results are keyed ("B", n) and ("C", n).
    """
    kappa = zero_variable_cumulants(params, max(nmax, 2))
    bs = bern_polys(params, nmax)
    cs = companion_polys(params, nmax)
    z = Poly.X
    rep = CheckReport("conjugate recurrences")
    for n in range(nmax):
        rb = sum((binom(n, j) * kappa[j] * bs[n - j] for j in range(n + 1)), Poly.const(0))
        rc = sum((binom(n, j) * kappa[j] * cs[n - j] for j in range(n + 1)), Poly.const(0))
        rep.results[("B", n)] = bs[n + 1] - z * bs[n] == rb
        rep.results[("C", n)] = cs[n + 1] - z * cs[n] == -rc
    return rep


def dilcher_check(b: int, kmax: int) -> CheckReport:
    """B_k(x+1) = sum_{p=0}^{b-1} C(k,p) B_{k-p}(x) + C(k,b) x^{k-b}, for B = B^{(1,b)}."""
    if b < 1 or int(b) != b:
        raise ValueError("the difference recursion needs a positive integer b")
    b = int(b)
    polys = bern_polys(Params.of(1, b), kmax)
    rep = CheckReport(f"difference recursion b={b}")
    for k in range(kmax + 1):
        rhs = sum((binom(k, p) * polys[k - p] for p in range(min(b - 1, k) + 1)), Poly.const(0))
        if k >= b:
            rhs = rhs + Poly.monomial(k - b, binom(k, b))
        rep.results[k] = polys[k].shift(1) == rhs
    return rep


def symmetry_check(params: Params, nmax: int) -> CheckReport:
    """B_n^{(a,b)}(1-x) = (-1)^n B_n^{(b,a)}(x)."""
    left = bern_polys(params, nmax)
    right = bern_polys(params.swapped(), nmax)
    rep = CheckReport("reflection symmetry")
    for n in range(nmax + 1):
        rep.results[n] = left[n].reflect() == (-1) ** n * right[n]
    return rep


def change_of_basis_check(params: Params, nmax: int) -> CheckReport:
    """sum_k C(n,k) r(n-k) B_k(x) = x^n for every rational (a, b).

    For positive-integer a, b the binomial form

        sum_k C(a+b+n-1, k) C(a-1+n-k, a-1) B_k(x) = (a+b)_n x^n / n!

    is checked as well, under the keys ("binomial", n).
    """
    polys = bern_polys(params, nmax)
    r = pochhammer_ratios(params, nmax)
    rep = CheckReport("change of basis")
    for n in range(nmax + 1):
        lhs = sum((binom(n, k) * r[n - k] * polys[k] for k in range(n + 1)), Poly.const(0))
        rep.results[n] = lhs == Poly.monomial(n)
    if params.integral:
        a, b = params.a, params.b
        for n in range(nmax + 1):
            lhs = sum(
                (gen_binom(a + b + n - 1, k) * gen_binom(a - 1 + n - k, int(a) - 1) * polys[k]
                 for k in range(n + 1)),
                Poly.const(0),
            )
            rep.results[("binomial", n)] = lhs == Poly.monomial(n, rising(a + b, n) / factorial(n))
    return rep


def conjugacy_check(params: Params, nmax: int) -> CheckReport:
    """E(beta + Z)^n = delta_n: sum_k C(n,k) B_k r(n-k) is 1 at n = 0 and 0 after."""
    bern = bern_numbers(params, nmax)
    r = pochhammer_ratios(params, nmax)
    rep = CheckReport("conjugacy")
    for n in range(nmax + 1):
        s = sum((binom(n, k) * bern[k] * r[n - k] for k in range(n + 1)), Fraction(0))
        rep.results[n] = s == (1 if n == 0 else 0)
    return rep


def appell_check(params: Params, nmax: int) -> CheckReport:
    """d/dx B_n(x) = n B_{n-1}(x) and likewise for the companion family."""
    bs = bern_polys(params, nmax)
    cs = companion_polys(params, nmax)
    rep = CheckReport("Appell property")
    for n in range(1, nmax + 1):
        rep.results[("B", n)] = bs[n].derivative() == n * bs[n - 1]
        rep.results[("C", n)] = cs[n].derivative() == n * cs[n - 1]
    return rep


@dataclass
class CumulantSeq:
    """kappas[0] holds kappa(1)."""

    kappas: list

    def __getitem__(self, n: int) -> Fraction:
        """kappa(n), 1-based."""
        if n < 1:
            raise IndexError("cumulants are indexed from 1")
        return self.kappas[n - 1]

    def __len__(self):
        return len(self.kappas)

    def __neg__(self):
        return CumulantSeq([-k for k in self.kappas])

    def __eq__(self, other):
        return isinstance(other, CumulantSeq) and self.kappas == other.kappas


def moments_to_cumulants(moments) -> CumulantSeq:
    """kappa(n) = m_n - sum_{j=1}^{n-1} C(n-1, j-1) kappa(j) m_{n-j}, for n = 1..len-1."""
    m = [as_rat(x) for x in moments]
    if not m or m[0] != 1:
        raise ValueError("moment sequence must start with m_0 = 1")
    kappa: list[Fraction] = []
    for n in range(1, len(m)):
        s = sum((binom(n - 1, j - 1) * kappa[j - 1] * m[n - j] for j in range(1, n)), Fraction(0))
        kappa.append(m[n] - s)
    return CumulantSeq(kappa)


def cumulants_to_moments(cumulants: CumulantSeq) -> list[Fraction]:
    """Inverse of :func:`moments_to_cumulants`; returns [m_0 = 1, m_1, ...]."""
    k = list(cumulants.kappas)
    m = [Fraction(1)]
    for n in range(1, len(k) + 1):
        m.append(k[n - 1] + sum((binom(n - 1, j - 1) * k[j - 1] * m[n - j] for j in range(1, n)), Fraction(0)))
    return m


def beta_cumulants(params: Params, nmax: int) -> CumulantSeq:
    return moments_to_cumulants(pochhammer_ratios(params, nmax))


def cumulant_check(params: Params, nmax: int, zeta: ZetaTable | None = None) -> CheckReport:
    """Beta cumulants are a/(a+b), -(p-1)! zeta(p); the zero variable's are their negation."""
    if zeta is None or zeta.pmax < nmax:
        zeta = zeta_linear(params, max(nmax, 2))
    kb = beta_cumulants(params, nmax)
    kz = moments_to_cumulants(bern_numbers(params, nmax).numbers)
    rep = CheckReport("cumulants")
    if nmax >= 1:
        rep.results[("beta", 1)] = kb[1] == params.mean
    for p in range(2, nmax + 1):
        rep.results[("beta", p)] = kb[p] == -factorial(p - 1) * zeta[p]
    rep.results["negation"] = kz == -kb
    return rep
