"""Model resolvent kernel on an exact cone, mode by mode.

For every positive indicial root nu the radial Green's function of
-(kappa d/dkappa)^2 + nu^2 + kappa^2 is g_nu(kappa, kappa') =
I_nu(min) K_nu(max); the model kernel sums rank(nu) * g_nu over the roots.
Only traces of the eigenprojectors enter, never eigenfunctions on N.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy import integrate, special

from ..errors import InsufficientTruncation
from ..indicial import certified_radius, indicial_set
from ..spectral_data import INF, CrossSection
from .bessel import (REL_ERROR, bessel_i_prime, bessel_k_prime, log_bessel_i, log_bessel_k,
                     bessel_i, bessel_k)


def mode_green(nu: float, kappa: float, kappa_prime: float) -> float:
    """g_nu(kappa, kappa') = I_nu(min) K_nu(max), formed in log space."""
    lo, hi = (kappa, kappa_prime) if kappa <= kappa_prime else (kappa_prime, kappa)
    return math.exp(log_bessel_i(nu, lo) + log_bessel_k(nu, hi))


@dataclass(frozen=True)
class ModeKernel:
    nu: float
    rank: int = 1

    def __post_init__(self):
        if not self.nu > 0:
            raise ValueError("mode order must be positive")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")

    def __call__(self, kappa: float, kappa_prime: float) -> float:
        """g_nu(kappa, kappa'), without the rank factor."""
        if not (kappa > 0 and kappa_prime > 0):
            raise ValueError("kappa and kappa' must be positive")
        return mode_green(self.nu, kappa, kappa_prime)

    def weighted(self, kappa: float, kappa_prime: float) -> float:
        return self.rank * self(kappa, kappa_prime)


@dataclass(frozen=True)
class ModelKernelResult:
    q: int
    kappa: float
    kappa_prime: float
    radius: float
    modes: tuple  # ModeKernel per positive root nu <= radius
    values: tuple  # rank * g_nu per mode
    total: float
    tail_bound: float

    def rows(self) -> list[dict]:
        return [{"nu": m.nu, "rank": m.rank, "g": v / m.rank, "weighted": v}
                for m, v in zip(self.modes, self.values)]

    def to_json(self) -> dict:
        return {"q": self.q, "kappa": self.kappa, "kappa_prime": self.kappa_prime,
                "radius": self.radius, "total": self.total, "tail_bound": self.tail_bound,
                "modes": self.rows()}


def _tail_term(nu: float, ratio: float) -> float:
    # I_nu(a)/I_nu(b) <= (a/b)^nu for a < b, and I_nu K_nu <= 1/(2 nu)
    return math.exp(nu * math.log(ratio)) / (2 * nu)


def model_kernel(cs: CrossSection, q: int, kappa: float, kappa_prime: float, radius: float,
                 tol: Optional[float] = None) -> ModelKernelResult:
    """Sum of rank(nu) g_nu(kappa, kappa') over the indicial roots 0 < nu <= radius.

    The tail bound uses g_nu <= (min/max)^nu / (2 nu): it is summed exactly
    over the certified roots beyond ``radius`` and continued geometrically
    from the last unit shell past the certified radius.
    """
    if not (kappa > 0 and kappa_prime > 0):
        raise ValueError("kappa and kappa' must be positive")
    if kappa == kappa_prime:
        raise ValueError("the model kernel is not evaluated on the diagonal")
    cert = certified_radius(cs, q)
    if not cert > radius:
        raise InsufficientTruncation(
            f"spectra certify roots only up to {float(cert):.6g}; the tail past {radius} needs more")
    ratio = min(kappa, kappa_prime) / max(kappa, kappa_prime)
    reach = min(float(cert), 2 * float(radius) + 10) if cert != INF else 2 * float(radius) + 10
    merged = [m for m in indicial_set(cs, q, reach).merged() if m.value > 0]
    modes, values, tail, last_shell = [], [], [], []
    for m in merged:
        nu = float(m.value)
        if nu <= radius:
            k = ModeKernel(nu, m.multiplicity)
            modes.append(k)
            values.append(k.weighted(kappa, kappa_prime))
        else:
            t = m.multiplicity * _tail_term(nu, ratio)
            tail.append(t)
            if nu > reach - 1:
                last_shell.append(t)
    beyond = _beyond_estimate(math.fsum(last_shell), reach, ratio, cs.dim)
    tail_bound = math.fsum(tail) + beyond
    total = math.fsum(values)
    tail_bound += REL_ERROR * abs(total)
    if tol is not None and tail_bound > tol:
        raise InsufficientTruncation(f"tail bound {tail_bound:.3g} exceeds the tolerance {tol:.3g}")
    return ModelKernelResult(q, float(kappa), float(kappa_prime), float(radius),
                             tuple(modes), tuple(values), total, tail_bound)


def _beyond_estimate(shell: float, reach: float, ratio: float, dim: int) -> float:
    """Continue the last unit shell past ``reach``: ratio^k decay, Weyl growth (nu/reach)^dim."""
    if shell == 0:
        return 0.0
    out, k = 0.0, 0
    while True:
        k += 1
        term = shell * ratio**k * ((reach + k) / reach) ** dim
        out += term
        if term < 1e-17 * out or k > 100_000:
            return out


# ---------------------------------------------------------------- verification ops

@dataclass(frozen=True)
class OdeCheck:
    nu: float
    kappa_prime: float
    steps: tuple
    residuals: tuple  # max |residual| per step
    orders: tuple  # log2 of successive residual ratios

    @property
    def order(self) -> float:
        return self.orders[-1]


def _ode_residual(nu: float, kappa_prime: float, grid: np.ndarray, h: float) -> np.ndarray:
    g = np.array([[mode_green(nu, k + s * h, kappa_prime) for s in (-1, 0, 1)] for k in grid])
    second = (g[:, 0] - 2 * g[:, 1] + g[:, 2]) / h**2
    first = (g[:, 2] - g[:, 0]) / (2 * h)
    # -(kappa d/dkappa)^2 g = -kappa^2 g'' - kappa g'
    return -(grid**2) * second - grid * first + (nu**2 + grid**2) * g[:, 1]


def verify_mode_ode(nu: float, kappa_prime: float, h: float = 1e-2,
                    interval: Sequence[float] = (0.1, 1.8), points: int = 41) -> OdeCheck:
    """Finite-difference residual of the mode ODE applied to g_nu(., kappa') at h, h/2, h/4."""
    a, b = interval
    if not 0 < a < b:
        raise ValueError("interval must lie in (0, inf)")
    if a - h <= kappa_prime <= b + h:
        raise ValueError("grid touches the diagonal kappa = kappa'")
    grid = np.linspace(a, b, points)
    steps = (h, h / 2, h / 4)
    res = tuple(float(np.max(np.abs(_ode_residual(nu, kappa_prime, grid, s)))) for s in steps)
    orders = tuple(math.log2(res[i] / res[i + 1]) for i in range(2))
    return OdeCheck(float(nu), float(kappa_prime), steps, res, orders)


def wronskian_jump(nu: float, kappa0: float) -> float:
    """Jump of d/dkappa g_nu(kappa, kappa0) across kappa = kappa0 (right minus left)."""
    if not kappa0 > 0:
        raise ValueError("kappa0 must be positive")
    right = bessel_i(nu, kappa0).value * bessel_k_prime(nu, kappa0).value
    left = bessel_i_prime(nu, kappa0).value * bessel_k(nu, kappa0).value
    return right - left


@dataclass(frozen=True)
class ZfLimitReport:
    nu: float
    s: float
    limit: float
    kappas: tuple
    deviations: tuple

    @property
    def monotone_below(self) -> bool:
        """Deviation strictly decreases along the kappas below 0.1."""
        d = [dv for k, dv in zip(self.kappas, self.deviations) if k < 0.1]
        return all(y < x for x, y in zip(d, d[1:]))


def zf_limit(nu: float, s: float) -> float:
    return math.exp(-nu * abs(math.log(s))) / (2 * nu)


def zf_limit_check(nu: float, s: float,
                   kappas: Sequence[float] = (1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4)) -> ZfLimitReport:
    """|g_nu(kappa, s kappa) - e^{-nu |log s|}/(2 nu)| along kappa -> 0."""
    if not (nu > 0 and s > 0):
        raise ValueError("nu and s must be positive")
    ks = tuple(float(k) for k in kappas)
    if any(b >= a for a, b in zip(ks, ks[1:])):
        raise ValueError("kappas must decrease")
    lim = zf_limit(nu, s)
    dev = tuple(abs(mode_green(nu, k, s * k) - lim) for k in ks)
    return ZfLimitReport(float(nu), float(s), lim, ks, dev)


@dataclass(frozen=True)
class MomentCheck:
    nu: float
    quadrature: float
    quadrature_error: float
    closed_form: float

    @property
    def rel_error(self) -> float:
        return abs(self.quadrature - self.closed_form) / abs(self.closed_form)


def ktilde_moment(nu: float) -> MomentCheck:
    """int_0^inf kappa^nu K_nu(kappa) / (Gamma(nu) 2^(nu-1)) dkappa against sqrt(pi) Gamma(nu+1/2)/Gamma(nu)."""
    if not nu > 0:
        raise ValueError("nu must be positive")
    norm = math.lgamma(nu) + (nu - 1) * math.log(2)

    def f(k):
        if k == 0:
            return 1.0  # kappa^nu K_nu(kappa) -> Gamma(nu) 2^(nu-1)
        return math.exp(nu * math.log(k) + math.log(special.kve(nu, k)) - k - norm)

    total, err = 0.0, 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        for lo, hi in ((0.0, 1.0), (1.0, 20.0), (20.0, np.inf)):
            try:
                val, e = integrate.quad(f, lo, hi, epsabs=0.0, epsrel=1e-13, limit=200)
            except integrate.IntegrationWarning as exc:
                raise ArithmeticError(f"moment quadrature did not converge on [{lo}, {hi}]: {exc}") from None
            total += val
            err += e
    closed = math.exp(0.5 * math.log(math.pi) + math.lgamma(nu + 0.5) - math.lgamma(nu))
    if not total > 0:
        raise ArithmeticError("moment vanished")
    return MomentCheck(float(nu), total, err, closed)
