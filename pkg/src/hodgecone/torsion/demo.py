"""Spectral convergence of a conic degeneration, radially separated (functions, n = 3).

Omega_0 is a cone of slope ``a`` over the round S^2 near its tip, capped off
smoothly by a spherical cap.  M is a rotationally symmetric space with a
smooth pole that becomes the cone of slope ``a`` outside rho = 9/8.  Omega_eps
replaces the tip region r < 9 eps / 8 of Omega_0 by the eps-scaled copy of M.
Joins use a quintic C^2 blend over the collar [7/8, 9/8].
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .radial import RadialProblem, radial_eigenvalues

COLLAR = (7 / 8, 9 / 8)


def smoothstep5(t):
    """Quintic 0 -> 1 blend with two vanishing derivatives at both ends."""
    t = np.clip(t, 0.0, 1.0)
    return t * t * t * (10 - 15 * t + 6 * t * t)


def _blend(r, inner: Callable, outer: Callable):
    lo, hi = COLLAR
    s = smoothstep5((r - lo) / (hi - lo))
    return (1 - s) * inner(r) + s * outer(r)


@dataclass(frozen=True)
class GluedFamily:
    slope: float
    length: float  # right end of Omega_0 (the cap's pole)
    pole: float  # rho coordinate of the pole of M
    omega0: Callable
    model: Callable

    def profile(self, eps: float) -> tuple[Callable, tuple]:
        """Profile and domain of Omega_eps (eps = 0 gives Omega_0)."""
        if eps == 0:
            return self.omega0, (0.0, self.length)
        cut = COLLAR[1] * eps
        if cut >= COLLAR[0]:
            raise ValueError("epsilon too large for the gluing collar")

        def f(r):
            r = np.asarray(r, dtype=float)
            return np.where(r < cut, eps * self.model(r / eps), self.omega0(r))

        return f, (eps * self.pole, self.length)


def glued_profiles(slope: float) -> GluedFamily:
    """Warping functions for Omega_0 and for the model end M with cone slope ``slope``."""
    a = float(slope)
    if not 0 < a <= 1:
        raise ValueError("cone slope must lie in (0, 1]")
    length = 1 + math.pi - math.asin(a)

    def cap(r):
        return np.sin(length - r)

    def omega0(r):
        r = np.asarray(r, dtype=float)
        return np.where(r <= COLLAR[0], a * r,
                        np.where(r >= COLLAR[1], cap(r), _blend(r, lambda x: a * x, cap)))

    if a == 1:
        pole = 0.0

        def model(rho):
            return np.asarray(rho, dtype=float)
    else:
        radius = a / math.sqrt(1 - a * a)
        pole = 1 - radius * math.acos(a)

        def cap_m(rho):
            return radius * np.sin((rho - pole) / radius)

        def model(rho):
            rho = np.asarray(rho, dtype=float)
            return np.where(rho <= COLLAR[0], cap_m(rho),
                            np.where(rho >= COLLAR[1], a * rho,
                                     _blend(rho, cap_m, lambda x: a * x)))

    return GluedFamily(a, length, pole, omega0, model)


@dataclass(frozen=True)
class ConvergenceTable:
    slope: float
    epsilons: tuple
    modes: tuple  # (l, j) labels of the tracked eigenvalues
    limit: np.ndarray  # Omega_0 eigenvalues of the tracked modes
    limit_error: np.ndarray
    values: np.ndarray  # shape (len(epsilons), len(modes))
    errors: np.ndarray
    ratios: np.ndarray  # Richardson ratios, shape like values
    smallest_nonconstant: np.ndarray  # per epsilon, bottom of the spectrum above the constant mode

    @property
    def distances(self) -> np.ndarray:
        return np.abs(self.values - self.limit[None, :])

    @property
    def multiplicities(self) -> tuple:
        return tuple(2 * l + 1 for l, _ in self.modes)

    @property
    def combined_error(self) -> np.ndarray:
        return self.errors + self.limit_error[None, :]

    def resolved(self, factor: float = 3.0) -> np.ndarray:
        """Entries whose distance to the limit exceeds ``factor`` times the discretization error."""
        return self.distances > factor * self.combined_error

    def monotone(self) -> np.ndarray:
        """Per mode: does the distance to the limit strictly decrease along epsilons?"""
        d = self.distances
        return np.all(np.diff(d, axis=0) < 0, axis=0)

    def rows(self) -> list[dict]:
        out = []
        for i, eps in enumerate(self.epsilons):
            for k, (l, j) in enumerate(self.modes):
                out.append({
                    "epsilon": eps, "l": l, "j": j,
                    "multiplicity": 2 * l + 1,
                    "eigenvalue": float(self.values[i, k]),
                    "limit": float(self.limit[k]),
                    "distance": float(self.distances[i, k]),
                    "discretization_error": float(self.combined_error[i, k]),
                    "resolved": bool(self.resolved()[i, k]),
                    "richardson_ratio": float(self.ratios[i, k]),
                })
        return out


def _mode_problem(family: GluedFamily, eps: float, l: int, h: float) -> RadialProblem:
    f, dom = family.profile(eps)
    left = "cone" if eps == 0 and family.slope != 1 else "pole"
    return RadialProblem(f, dom, l * (l + 1), h, 3, left, "pole")


def spectral_convergence_demo(slope: float = 0.8, epsilons: Sequence[float] = (0.2, 0.1, 0.05, 0.025),
                              k: int = 5, h: float = 1e-3, max_l: int = 4,
                              per_mode: int = 4) -> ConvergenceTable:
    """Track the k smallest nonzero Omega_0 eigenvalues of functions along Omega_eps.

    Modes are labelled (l, j): angular degree l on S^2 (multiplicity 2l + 1)
    and radial index j.  Each eigenvalue is extrapolated from steps h, h/2, h/4.
    """
    eps_list = tuple(float(e) for e in epsilons)
    if any(b >= a for a, b in zip(eps_list, eps_list[1:])):
        raise ValueError("epsilons must be decreasing")
    fam = glued_profiles(slope)

    # pick the tracked modes from the limit spectrum
    limit = {}
    for l in range(max_l + 1):
        res = radial_eigenvalues(_mode_problem(fam, 0.0, l, h), per_mode)
        for j, (v, e) in enumerate(zip(res.eigenvalues, res.error)):
            if l == 0 and j == 0:
                continue  # constant mode
            limit[(l, j)] = (v, e)
    modes = tuple(sorted(limit, key=lambda m: limit[m][0])[:k])
    largest_l = max(m[0] for m in modes)
    if largest_l == max_l:
        raise ValueError("increase max_l: the tracked window reaches the highest angular mode")

    shape = (len(eps_list), len(modes))
    values, errors, ratios = np.empty(shape), np.empty(shape), np.empty(shape)
    bottoms = np.empty(len(eps_list))
    for i, eps in enumerate(eps_list):
        cache = {}
        for l in sorted({m[0] for m in modes} | {0}):
            need = max([m[1] for m in modes if m[0] == l] + [1]) + 1
            cache[l] = radial_eigenvalues(_mode_problem(fam, eps, l, h), need)
        for c, (l, j) in enumerate(modes):
            values[i, c] = cache[l].eigenvalues[j]
            errors[i, c] = cache[l].error[j]
            ratios[i, c] = cache[l].ratio[j]
        bottoms[i] = min(cache[0].eigenvalues[1], *(cache[l].eigenvalues[0] for l in cache if l > 0))
    lim = np.array([limit[m][0] for m in modes])
    lim_err = np.array([limit[m][1] for m in modes])
    return ConvergenceTable(float(slope), eps_list, modes, lim, lim_err, values, errors, ratios, bottoms)
