"""Hypergeometric zeta values, hypergeometric Bernoulli numbers and the zeros of 1F1(a; a+b; z)."""

from __future__ import annotations

from .bernoulli import BernTable, bern_numbers, bern_poly, companion_poly
from .conjectures import conjecture_scan
from .exact import Params, parse_rat
from .series import Series, phi_series
from .zeros import FloatCfg, phi_eval, zero_list, zeta_truncated
from .zeta import ZetaTable, zeta_linear, zeta_quadratic, zeta_series_ratio, zeta_table

__all__ = [
    "BernTable", "FloatCfg", "Params", "Series", "ZetaTable",
    "bern_numbers", "bern_poly", "companion_poly", "conjecture_scan",
    "parse_rat", "phi_eval", "phi_series", "zero_list", "zeta_linear",
    "zeta_quadratic", "zeta_series_ratio", "zeta_table", "zeta_truncated",
]
