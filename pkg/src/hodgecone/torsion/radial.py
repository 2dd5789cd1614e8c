"""Radial Sturm-Liouville eigenvalues on warped products dr^2 + f(r)^2 h.

Separating variables on a warped product of total dimension ``dim`` with a
cross-section eigenvalue ``mu_mode`` gives

    -u'' - (dim - 1) f'/f u' + mu_mode / f^2 u = lambda u,

which is symmetric with respect to the weight w = f^(dim - 1).  The operator is
discretized by cell-centred finite volumes.  Where f vanishes the face weight
is zero, so no boundary condition is imposed there and the discrete problem
selects the bounded (Friedrichs) solutions; an end where f stays positive gets
a zero-flux (Neumann) condition.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

END_TAGS = ("pole", "cone", "wall")
_BISECTION_TOL = 2 * np.finfo(float).tiny


@dataclass(frozen=True)
class RadialProblem:
    """Radial problem on ``domain`` for the warping function ``profile``.

    ``left`` / ``right`` tag the ends: ``pole`` (f ~ distance, smooth point),
    ``cone`` (f ~ a * distance with 0 < a), ``wall`` (f > 0, zero flux).
    """

    profile: Callable[[np.ndarray], np.ndarray]
    domain: tuple
    mu_mode: float = 0.0
    h: float = 1e-2
    dim: int = 3
    left: str = "pole"
    right: str = "pole"

    def __post_init__(self):
        r0, r1 = self.domain
        if not r1 > r0:
            raise ValueError("empty domain")
        if self.mu_mode < 0:
            raise ValueError("mu_mode must be nonnegative")
        if not 0 < self.h < (r1 - r0):
            raise ValueError("grid step must be positive and smaller than the domain")
        for tag in (self.left, self.right):
            if tag not in END_TAGS:
                raise ValueError(f"unknown end tag {tag!r}")

    def with_step(self, h: float) -> "RadialProblem":
        return RadialProblem(self.profile, self.domain, self.mu_mode, h, self.dim, self.left, self.right)


def end_slope(problem: RadialProblem, side: str) -> tuple[float, float]:
    """Least-squares fit f ~ c + s * distance near one end; returns (c, s)."""
    r0, r1 = problem.domain
    span = r1 - r0
    d = span * np.array([1e-5, 2e-5, 4e-5, 8e-5])
    pts = r0 + d if side == "left" else r1 - d
    f = np.asarray(problem.profile(pts), dtype=float)
    s, c = np.polyfit(d, f, 1)
    return float(c), float(s)


def check_end_tags(problem: RadialProblem, tol: float = 1e-3) -> None:
    """Raise ValueError if a tag contradicts the profile's behaviour at that end."""
    scale = float(np.max(np.abs(problem.profile(np.linspace(*problem.domain, 64)[1:-1]))))
    for side, tag in (("left", problem.left), ("right", problem.right)):
        c, s = end_slope(problem, side)
        if tag == "wall":
            if not c > tol * scale:
                raise ValueError(f"{side} end tagged 'wall' but the profile vanishes there")
            continue
        if abs(c) > tol * scale:
            raise ValueError(f"{side} end tagged {tag!r} but the profile does not vanish there")
        if tag == "pole" and abs(s - 1) > tol * 10:
            raise ValueError(f"{side} end tagged 'pole' but the slope is {s:.6g}, not 1")
        if tag == "cone" and not s > 0:
            raise ValueError(f"{side} end tagged 'cone' but the slope is {s:.6g}")


def discretize(problem: RadialProblem) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Symmetric tridiagonal (diagonal, offdiagonal) and the cell centres."""
    r0, r1 = problem.domain
    ncell = int(round((r1 - r0) / problem.h))
    h = (r1 - r0) / ncell
    faces = r0 + h * np.arange(ncell + 1)
    centres = faces[:-1] + h / 2
    fc = np.asarray(problem.profile(centres), dtype=float)
    if np.any(~np.isfinite(fc)) or np.any(fc <= 0):
        raise ValueError("profile must be positive in the interior (indefinite discretization)")
    p = problem.dim - 1
    wc = fc ** p
    wf = np.abs(np.asarray(problem.profile(faces), dtype=float)) ** p
    # zero flux through both end faces
    wf[0] = wf[-1] = 0.0
    diag = (wf[:-1] + wf[1:]) / (h * h * wc) + problem.mu_mode / fc ** 2
    off = -wf[1:-1] / (h * h * np.sqrt(wc[:-1] * wc[1:]))
    return diag, off, centres


def raw_eigenvalues(problem: RadialProblem, count: int) -> np.ndarray:
    diag, off, _ = discretize(problem)
    # bisection to full precision; the default stopping rule is eps * ||T||, about 1e-8 here
    return eigh_tridiagonal(diag, off, eigvals_only=True, select="i",
                            select_range=(0, count - 1), tol=_BISECTION_TOL)


@dataclass(frozen=True)
class RadialResult:
    eigenvalues: np.ndarray  # Richardson-extrapolated
    raw: tuple  # eigenvalues at h, h/2, h/4
    error: np.ndarray  # estimated error of the extrapolated values
    ratio: np.ndarray  # (l_h - l_h/2) / (l_h/2 - l_h/4), ~4 for a second-order scheme
    h: float


def radial_eigenvalues(problem: RadialProblem, count: int, check_tags: bool = True) -> RadialResult:
    """``count`` smallest eigenvalues, extrapolated from steps h, h/2, h/4."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if check_tags:
        check_end_tags(problem)
    levels = tuple(raw_eigenvalues(problem.with_step(problem.h / 2 ** i), count) for i in range(3))
    a, b, c = levels
    d1, d2 = a - b, b - c
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(d2 != 0, d1 / d2, np.nan)
    extrap = c + (c - b) / 3
    # spread between the two successive extrapolations bounds the finer one
    err = np.abs(extrap - (b + (b - a) / 3))
    return RadialResult(extrap, levels, err, ratio, problem.h)
