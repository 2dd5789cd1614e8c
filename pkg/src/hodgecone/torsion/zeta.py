"""Spectral zeta value and derivative at s = 0 from eigenvalues and heat coefficients.

The Mellin integral is split at t = 1.  For t > 1 the eigenvalue sum gives
sum E_1(lambda) directly.  For t < 1 the supplied small-time coefficients
``a_k t^((k-n)/2)`` are continued termwise and the remainder
``theta(t) - sum a_k t^((k-n)/2)`` is integrated numerically down to a cutoff
``t_min`` below which the truncated eigenvalue list no longer represents the
heat trace.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy import integrate, optimize, special

from ..errors import InsufficientTruncation

EULER_GAMMA = float(np.euler_gamma)


@dataclass(frozen=True)
class ZetaResult:
    zeta0: float
    dzeta0: float
    zeta0_error: float
    dzeta0_error: float
    t_min: float
    truncation: float
    error_budget: dict

    @property
    def log_det(self) -> float:
        return -self.dzeta0

    def to_json(self) -> dict:
        return {
            "zeta0": self.zeta0, "dzeta0": self.dzeta0,
            "zeta0_error": self.zeta0_error, "dzeta0_error": self.dzeta0_error,
            "log_det": self.log_det, "t_min": self.t_min, "truncation": self.truncation,
            "error_budget": dict(sorted(self.error_budget.items())),
        }


def _as_pairs(eigs) -> tuple[np.ndarray, np.ndarray]:
    lam, mult = [], []
    for e in eigs:
        if isinstance(e, (tuple, list)):
            lam.append(float(e[0]))
            mult.append(float(e[1]))
        else:
            lam.append(float(e))
            mult.append(1.0)
    lam = np.asarray(lam)
    if lam.size and (np.any(lam <= 0) or np.any(np.diff(lam) < 0)):
        raise ValueError("eigenvalues must be positive and sorted")
    return lam, np.asarray(mult)


def zeta_from_eigenvalues(eigs: Sequence, heat_coeffs: Sequence[float], kernel_dim: int,
                          dim: int, truncation: Optional[float] = None,
                          tol: Optional[float] = None) -> ZetaResult:
    """zeta(0) and zeta'(0) of an operator with the given positive spectrum.

    ``eigs`` holds the nonzero eigenvalues (plain values or ``(value, mult)``
    pairs), complete up to ``truncation`` (default: the largest one).
    ``heat_coeffs[k]`` multiplies ``t^((k-dim)/2)`` in the small-time expansion
    of the full heat trace, zero modes included; at least ``dim + 1`` are needed.
    """
    lam, mult = _as_pairs(eigs)
    if lam.size == 0:
        raise InsufficientTruncation("empty eigenvalue list")
    coeffs = [float(a) for a in heat_coeffs]
    if len(coeffs) < dim + 1:
        raise ValueError(f"need heat coefficients up to t^0 (at least {dim + 1})")
    cutoff = float(lam[-1] if truncation is None else truncation)
    betas = [(k - dim) / 2 for k in range(len(coeffs))]
    a0 = coeffs[0]
    half = dim / 2

    def weyl_tail(t):
        # heat trace of the eigenvalues above the cutoff, from the leading Weyl term
        return abs(a0) * t ** (-half) * special.gammaincc(half, cutoff * t)

    def theta(t):
        return float(np.dot(mult, np.exp(-lam * t)))

    def remainder(t):
        asym = math.fsum(a * t ** b for a, b in zip(coeffs, betas))
        return theta(t) + kernel_dim - asym

    floor = 1e-14
    if weyl_tail(1.0) > floor:
        raise InsufficientTruncation("eigenvalue list too short: heat trace not resolved even at t = 1")
    t_min = optimize.brentq(lambda u: math.log(weyl_tail(math.exp(u)) + 1e-300) - math.log(floor),
                            math.log(1e-14), 0.0, xtol=1e-6)
    t_min = math.exp(t_min) * 1.01

    long_part = float(np.dot(mult, special.exp1(lam)))
    analytic = math.fsum(a / b for a, b in zip(coeffs, betas) if b != 0)
    a_n = coeffs[dim]
    rem_int, rem_quad_err = integrate.quad(lambda u: remainder(math.exp(u)), math.log(t_min), 0.0,
                                           epsabs=1e-13, epsrel=1e-12, limit=200)
    dzeta = math.fsum([long_part, analytic, (a_n - kernel_dim) * EULER_GAMMA, rem_int])

    # error budget
    beta_next = (len(coeffs) - dim) / 2
    r_min = max(abs(remainder(t_min)), abs(remainder(2 * t_min)) * 2 ** (-beta_next))
    small_t = r_min / beta_next
    mid_tail, _ = integrate.quad(lambda u: weyl_tail(math.exp(u)), math.log(t_min), 0.0, limit=200)
    long_tail, _ = integrate.quad(
        lambda x: abs(a0) / special.gamma(half) * x ** (half - 1) * special.exp1(x),
        cutoff, np.inf, limit=200)
    rounding = 64 * np.finfo(float).eps * max(1.0, abs(long_part), abs(analytic), theta(t_min) * 1e-3)
    budget = {"small_t_remainder": small_t, "heat_trace_tail": mid_tail,
              "eigenvalue_tail": long_tail, "quadrature": rem_quad_err, "rounding": rounding}
    err = math.fsum(budget.values())
    if tol is not None and err > tol:
        raise InsufficientTruncation(f"error bar {err:.3g} exceeds requested {tol:.3g}")
    return ZetaResult(a_n - kernel_dim, dzeta, 0.0, err, t_min, cutoff, budget)
