"""Complex zeros of Phi_{a,b}(z) = 1F1(a; a+b; z) and numerical zeta sums over them.

Evaluation runs on mpmath multiprecision numbers.  The Taylor series of
Phi has terms as large as e^|z| while values near a zero are tiny, so every
evaluation raises the working precision by roughly 1.5 |z| log2(e) bits and
then checks the largest partial term against the result before trusting it.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
from mpmath import mp

from .exact import Params

LOG2E = 1.4426950408889634
DEFAULT_PRECISION_BITS = 256


class PrecisionError(ArithmeticError):
    """The cancellation guard found the working precision insufficient."""


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class FloatCfg:
    precision_bits: int = DEFAULT_PRECISION_BITS
    newton_tol: float = 1e-30
    max_iter: int = 100

    def __post_init__(self):
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")
        if not self.newton_tol > 0:
            raise ValueError("newton_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be positive")

    @classmethod
    def from_env(cls, **overrides) -> FloatCfg:
        """Defaults, with HZETA_PRECISION_BITS overriding the precision."""
        env = os.environ.get("HZETA_PRECISION_BITS")
        if env and "precision_bits" not in overrides:
            overrides["precision_bits"] = int(env)
        return cls(**overrides)


@dataclass
class ZeroRecord:
    index: int
    value: mpmath.mpc
    seed: mpmath.mpc
    residual: mpmath.mpf
    iterations: int

    def to_dict(self, digits: int) -> dict:
        return {
            "n": self.index,
            "re": mpmath.nstr(self.value.real, digits),
            "im": mpmath.nstr(self.value.imag, digits),
            "residual": mpmath.nstr(self.residual, 5),
        }


def _mpf(x):
    """Exact-as-possible conversion of a Fraction at the current precision."""
    return mpmath.mpf(x.numerator) / x.denominator


def _fast_path(params: Params) -> bool:
    return params.a == 1 and params.b.denominator == 1


def _taylor(a, c, z, wp):
    """sum_k (a)_k/(c)_k z^k/k! at precision wp; returns (value, largest |term|)."""
    t = mpmath.mpc(1)
    s = mpmath.mpc(1)
    big = mpmath.mpf(1)
    k = 0
    az = abs(z)
    tiny = mpmath.ldexp(1, -wp - 8)
    while True:
        t = t * (a + k) / (c + k) * z / (k + 1)
        k += 1
        s += t
        at = abs(t)
        if at > big:
            big = at
        if k > az and at <= tiny * big:
            return s, big


def _guard(value, abs_err, prec):
    floor = mpmath.ldexp(1, -prec)
    if abs_err > mpmath.ldexp(max(abs(value), floor), -20):
        raise PrecisionError(
            f"cancellation left error ~{mpmath.nstr(abs_err, 3)} against value {mpmath.nstr(abs(value), 3)}"
        )


def _phi_taylor(a, b, z, prec):
    """Taylor route; Kummer's transformation e^z Phi_{b,a}(-z) when Re z < 0."""
    wp = prec + int(1.5 * float(abs(z)) * LOG2E) + 64
    with mp.workprec(wp):
        z = mpmath.mpc(z)
        av, bv = _mpf(a), _mpf(b)
        if z.real < 0:
            s, big = _taylor(bv, av + bv, -z, wp)
            scale = mpmath.exp(z)
            value = scale * s
            err = abs(scale) * big * mpmath.ldexp(1, -wp + 4)
        else:
            value, big = _taylor(av, av + bv, z, wp)
            err = big * mpmath.ldexp(1, -wp + 4)
        _guard(value, err, prec)
    return value


def _phi_closed(b: int, z, prec):
    """Phi_{1,b}(z) = b!/z^b (e^z - sum_{k<b} z^k/k!), used for |z| >= 1."""
    zf = complex(z)
    lead = max(zf.real * LOG2E, b * math.log2(abs(zf) + 1.0), 0.0)
    wp = prec + 64 + int(lead)
    with mp.workprec(wp):
        z = mpmath.mpc(z)
        e = mpmath.exp(z)
        big = abs(e)
        term = mpmath.mpc(1)
        poly = mpmath.mpc(0)
        for k in range(b):
            if k:
                term = term * z / k
            poly += term
            big = max(big, abs(term))
        scale = math.factorial(b) / z**b
        value = scale * (e - poly)
        _guard(value, abs(scale) * big * mpmath.ldexp(1, -wp + 4), prec)
    return value


def phi_eval(params: Params, z, cfg: FloatCfg = FloatCfg(), fast: bool = True) -> mpmath.mpc:
    """Phi_{a,b}(z) at cfg.precision_bits.

    For a = 1 and integer b (with |z| >= 1) the elementary closed form is used
    unless ``fast`` is False.  Raises :class:`PrecisionError` when the
    cancellation guard trips.
    """
    prec = cfg.precision_bits
    with mp.workprec(prec + 16):
        z = mpmath.mpc(z)
    if fast and _fast_path(params) and abs(z) >= 1:
        v = _phi_closed(int(params.b), z, prec)
    else:
        v = _phi_taylor(params.a, params.b, z, prec)
    with mp.workprec(prec):
        return +v


def phi_deriv(params: Params, z, cfg: FloatCfg = FloatCfg(), fast: bool = True) -> mpmath.mpc:
    """Phi'_{a,b}(z).

    Generic route: a/(a+b) Phi_{a+1,b}(z).  When the closed form applies, the
    contiguous relation Phi' = Phi - b/(a+b) Phi_{a,b+1} keeps both terms on it.
    """
    a, b = params.a, params.b
    prec = cfg.precision_bits
    with mp.workprec(prec + 16):
        zz = mpmath.mpc(z)
    if fast and _fast_path(params) and abs(zz) >= 1:
        bi = int(b)
        with mp.workprec(prec + 16):
            v = _phi_closed(bi, zz, prec) - mpmath.mpf(bi) / (bi + 1) * _phi_closed(bi + 1, zz, prec)
    else:
        with mp.workprec(prec + 16):
            v = _mpf(a / (a + b)) * _phi_taylor(a + 1, b, zz, prec)
    with mp.workprec(prec):
        return +v


def _log_arg(d, branch: int) -> Fraction:
    """Principal argument of -(branch * i)^d as pi*(branch*d/2 + 1 - 2k).

    Returns the exact rational coefficient c with arg = c*pi, in (-1, 1].
    """
    half = Fraction(branch) * d / 2
    k = math.ceil(half / 2)
    return half + 1 - 2 * k


def zero_seed(params: Params, n: int, branch: int = 1, prec: int = 53) -> mpmath.mpc:
    """Large-zero asymptotics

        z ~ +-(2n+a) pi i + Log(-Gamma(a)/Gamma(b) (+-2 n pi i)^(b-a))

    with the principal logarithm.  ``branch`` is +1 or -1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    a, b = params.a, params.b
    d = b - a
    with mp.workprec(prec + 16):
        av, bv, dv = _mpf(a), _mpf(b), _mpf(d)
        re = mpmath.loggamma(av) - mpmath.loggamma(bv) + dv * mpmath.log(2 * mpmath.pi * n)
        im = _mpf(_log_arg(d, branch)) * mpmath.pi
        z = mpmath.mpc(re, branch * (2 * n + av) * mpmath.pi + im)
    with mp.workprec(prec):
        return +z


def seeds_array(params: Params, ns: np.ndarray, branch: int = 1) -> np.ndarray:
    """Vectorised double-precision :func:`zero_seed` for tail sums."""
    a, b = float(params.a), float(params.b)
    d = b - a
    ns = np.asarray(ns, dtype=float)
    re = math.lgamma(a) - math.lgamma(b) + d * np.log(2 * math.pi * ns)
    im = float(_log_arg(params.b - params.a, branch)) * math.pi
    return re + 1j * (branch * (2 * ns + a) * math.pi + im)


def find_zero(params: Params, seed, cfg: FloatCfg = FloatCfg(), index: int = 0,
              basin: float = 4 * math.pi, max_step: float = 1.0) -> ZeroRecord:
    """Newton iteration z <- z - Phi(z)/Phi'(z) from ``seed``.

    The residual target is ``cfg.newton_tol`` or 2^-(prec-16), whichever is
    larger.  Steps longer than ``max_step`` are shortened.  Iterates that stray more
    than ``basin`` from the seed abort the search; zeros are about 2 pi apart,
    so such a run is headed for a different zero or for the region where the
    series becomes expensive.
    """
    prec = cfg.precision_bits
    with mp.workprec(prec):
        seed = mpmath.mpc(seed)
        z = seed
        # a residual below ~2^-prec cannot be resolved; clamp so low precisions still converge
        tol = max(mpmath.mpf(cfg.newton_tol), mpmath.ldexp(1, -(prec - 16)))
        small = mpmath.ldexp(1, -int(prec * 0.45))
        settled = False
        for it in range(1, cfg.max_iter + 1):
            f = phi_eval(params, z, cfg)
            step = f / phi_deriv(params, z, cfg)
            if abs(step) > max_step:
                step = step * (max_step / abs(step))
            z = z - step
            if abs(z - seed) > basin:
                raise ConvergenceError(
                    f"Newton from {mpmath.nstr(seed, 8)} left the basin radius {basin:g}"
                )
            if settled:
                res = abs(phi_eval(params, z, cfg))
                if res < tol:
                    return ZeroRecord(index, z, seed, res, it)
            settled = abs(step) <= small * max(1, abs(z))
        res = abs(phi_eval(params, z, cfg))
        if res < tol:
            return ZeroRecord(index, z, seed, res, cfg.max_iter)
    raise ConvergenceError(
        f"Newton from {mpmath.nstr(seed, 8)} did not converge in {cfg.max_iter} steps "
        f"(last residual {mpmath.nstr(res, 3)})"
    )


def fixed_point_zero(b: int, z0, cfg: FloatCfg = FloatCfg(), max_iter: int = 2000) -> mpmath.mpc:
    """Zero of Phi_{1,b} via z <- Log(sum_{k<b} z^k/k!) + 2 pi i m on a fixed branch m.

    The branch m is chosen from ``z0``.  Independent of Newton and of the
    Taylor series; used to cross-check refined zeros.
    """
    prec = cfg.precision_bits
    with mp.workprec(prec + 32):
        z = mpmath.mpc(z0)

        def trunc_exp(w):
            term, acc = mpmath.mpc(1), mpmath.mpc(0)
            for k in range(b):
                if k:
                    term = term * w / k
                acc += term
            return acc

        m = int(mpmath.nint((z.imag - mpmath.im(mpmath.log(trunc_exp(z)))) / (2 * mpmath.pi)))
        shift = 2j * mpmath.pi * m
        eps = mpmath.ldexp(1, -prec)
        for _ in range(max_iter):
            new = mpmath.log(trunc_exp(z)) + shift
            if abs(new - z) <= eps * abs(new):
                z = new
                break
            z = new
        else:
            raise ConvergenceError("fixed-point iteration did not settle")
    with mp.workprec(prec):
        return +z


def _asymptotic_seeds(params: Params, nmax: int, prec: int) -> list:
    """Upper half-plane seeds from both branches, near-duplicates merged, sorted by Im."""
    cands = []
    for n in range(1, nmax + 1):
        cands.append(zero_seed(params, n, 1, prec))
        cands.append(mpmath.conj(zero_seed(params, n, -1, prec)))
    cands.sort(key=lambda w: float(w.imag))
    out = []
    for w in cands:
        if w.imag > 0 and not any(abs(w - u) < 0.5 for u in out[-3:]):
            out.append(w)
    return out


class ZeroListError(RuntimeError):
    pass


class _Collector:
    def __init__(self, params, cfg):
        self.params, self.cfg = params, cfg
        self.found: list[ZeroRecord] = []

    def known(self, z) -> bool:
        return any(abs(z - f.value) < 1e-12 * max(1, abs(f.value)) for f in self.found)

    def refine(self, seed) -> ZeroRecord | None:
        """Refine a seed; None if Newton fails or lands off the upper half-plane."""
        try:
            rec = find_zero(self.params, seed, self.cfg)
        except (ConvergenceError, PrecisionError):
            return None
        if rec.value.imag <= 0:
            return None
        if not self.known(rec.value):
            self.found.append(rec)
            self.found.sort(key=lambda r: r.value.imag)
        return rec

    def extend_down(self):
        """Extrapolate below the lowest pair, z_1 - (z_2 - z_1), until Im <= 0."""
        while len(self.found) >= 2:
            z1, z2 = self.found[0].value, self.found[1].value
            seed = z1 - (z2 - z1)
            if seed.imag <= 0:
                return
            before = len(self.found)
            rec = self.refine(seed)
            if rec is None or len(self.found) == before or rec.value.imag >= z1.imag:
                return

    def fill_gaps(self):
        """Refine extrapolated seeds inside gaps much wider than their neighbours."""
        changed = True
        while changed:
            changed = False
            vals = [r.value for r in self.found]
            for i in range(1, len(vals) - 1):
                gap = vals[i + 1].imag - vals[i].imag
                ref = min(vals[i].imag - vals[i - 1].imag,
                          vals[i + 2].imag - vals[i + 1].imag if i + 2 < len(vals) else gap)
                if gap > 1.5 * ref:
                    before = len(self.found)
                    self.refine(vals[i] + (vals[i] - vals[i - 1]))
                    if len(self.found) > before:
                        changed = True
                        break


def zero_list(params: Params, N: int, cfg: FloatCfg = FloatCfg()) -> list[ZeroRecord]:
    """The first N zeros in the upper half-plane, ordered by imaginary part.

    Seeds come from both asymptotic branches (the lower one conjugated),
    near-duplicates merged.  The asymptotics are poor for small n when a or
    b is large, so zeros below the lowest refined pair are reached by
    extrapolating z_1 - (z_2 - z_1), and unusually wide gaps are filled the
    same way.  Coincident refined zeros are reported once.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    col = _Collector(params, cfg)
    nmax = N + 1
    seeds = _asymptotic_seeds(params, nmax, cfg.precision_bits)
    failed = []
    for i, s in enumerate(seeds):
        if col.refine(s) is None:
            failed.append(i)
    col.extend_down()
    col.fill_gaps()
    extra = 0
    while len(col.found) < N and extra < 8:
        # lost seeds at low n leave the list short; push the asymptotics higher
        extra += 1
        nmax += 1
        for s in (zero_seed(params, nmax, 1, cfg.precision_bits),
                  mpmath.conj(zero_seed(params, nmax, -1, cfg.precision_bits))):
            col.refine(s)
        col.fill_gaps()
    if len(col.found) < N:
        first_bad = failed[0] + 1 if failed else len(col.found) + 1
        raise ZeroListError(
            f"only {len(col.found)} distinct zeros found, {N} requested (first failing seed #{first_bad})"
        )
    out = col.found[:N]
    for k, rec in enumerate(out, start=1):
        rec.index = k
    return out


@dataclass
class ZetaEstimate:
    s: int
    value: float
    refined_part: float
    tail_part: float
    remainder_bound: float
    N: int
    M: int

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "value": repr(self.value),
            "refined_part": repr(self.refined_part),
            "tail_part": repr(self.tail_part),
            "remainder_bound": repr(self.remainder_bound),
            "pairs": self.N,
            "tail": self.M,
        }


def default_tail(N: int) -> int:
    return max(10**4, 200 * N)


def zeta_truncated(params: Params, s: int, N: int, M: int | None = None,
                   cfg: FloatCfg = FloatCfg(), zeros: list[ZeroRecord] | None = None) -> ZetaEstimate:
    """sum over zeros of z^-s, paired with conjugates.

    Refined zeros 1..N, asymptotic seeds N+1..M, and a reported bound
    2 / ((2 pi)^s (s-1) M^(s-1)) for everything beyond M.
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    if M is None:
        M = default_tail(N)
    if M < N:
        raise ValueError("tail end M must be at least N")
    if zeros is None or len(zeros) < N:
        zeros = zero_list(params, N, cfg)
    zeros = zeros[:N]
    with mp.workprec(cfg.precision_bits):
        refined = mpmath.fsum(2 * mpmath.re(r.value ** (-s)) for r in zeros)
    refined = float(refined)

    tail = 0.0
    if M > N:
        last = complex(zeros[-1].value)
        cands = range(max(1, N - 3), N + 4)
        offsets = {n - N: abs(complex(seeds_array(params, np.array([n]))[0]) - last) for n in cands}
        d = min(offsets, key=offsets.get)
        ks = np.arange(N + 1, M + 1, dtype=float)
        w = seeds_array(params, ks + d)
        tail = float(np.sum(2.0 * np.real(w ** (-s))))
    bound = 2.0 / ((2 * math.pi) ** s * (s - 1) * M ** (s - 1))
    return ZetaEstimate(s, refined + tail, refined, tail, bound, N, M)
