"""Spectral conditions on the cross-section needed for the torsion limit along a degeneration."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import LedgerError
from ..spectral_data import CrossSection, spectrum_bottom, spectrum_meets


def _require_odd(cs: CrossSection) -> None:
    if cs.n % 2 == 0:
        raise ValueError("torsion pipeline requires odd n")


@dataclass(frozen=True)
class WittReport:
    passed: bool
    degree: int
    harmonic_dim: int
    bottom: object

    def to_json(self) -> dict:
        return {"passed": self.passed, "degree": self.degree,
                "harmonic_dim": self.harmonic_dim, "bottom": float(self.bottom)}


def check_modified_witt(cs: CrossSection) -> WittReport:
    """Middle-degree spectrum of the cross-section must avoid [0, 3/4]."""
    _require_odd(cs)
    m = (cs.n - 1) // 2
    hits = spectrum_meets(cs, m, 0, Fraction(3, 4))
    return WittReport(not hits, m, cs.harmonic(m), spectrum_bottom(cs, m))


@dataclass(frozen=True)
class ResonanceVerdict:
    guaranteed: bool
    reason: str

    def __str__(self):
        return ("guaranteed" if self.guaranteed else "not-guaranteed") + f" ({self.reason})"


def check_no_resonance_sufficient(cs: CrossSection, q: int) -> ResonanceVerdict:
    """Sufficient spectral criteria for the absence of zero-resonances in degree q."""
    n = cs.n
    if n % 2:
        if 2 * q not in (n - 1, n + 1):
            return ResonanceVerdict(True, "degree away from (n +- 1)/2")
        witt = check_modified_witt(cs)
        if witt.passed:
            return ResonanceVerdict(True, "modified Witt condition holds")
        return ResonanceVerdict(False, "modified Witt condition fails")
    half = n // 2
    if abs(q - half) > 1:
        return ResonanceVerdict(True, "|q - n/2| > 1")
    if q == half - 1:
        ok = cs.harmonic(half - 1) == 0
        return ResonanceVerdict(ok, f"b_{half - 1}(N) = {cs.harmonic(half - 1)}")
    if q == half + 1:
        ok = cs.harmonic(half) == 0
        return ResonanceVerdict(ok, f"b_{half}(N) = {cs.harmonic(half)}")
    hits = spectrum_meets(cs, half, 0, 1)
    return ResonanceVerdict(not hits, f"degree-{half} spectrum {'meets' if hits else 'avoids'} [0, 1]")


@dataclass(frozen=True)
class GapReport:
    betti_ok: bool
    middle_ok: bool
    exact_ok: bool
    failing_betti: tuple = ()

    @property
    def condition_a(self) -> bool:
        return self.betti_ok

    @property
    def condition_b(self) -> bool:
        return self.middle_ok and self.exact_ok

    @property
    def passed(self) -> bool:
        return self.condition_a and self.condition_b

    def to_json(self) -> dict:
        return {
            "a_betti_vanish": self.betti_ok,
            "b_middle_degree": self.middle_ok,
            "b_exact_below_middle": self.exact_ok,
            "failing_betti_degrees": list(self.failing_betti),
            "passed": self.passed,
        }


def check_gap_conditions(cs: CrossSection) -> GapReport:
    """Conditions under which no small eigenvalues appear in the degeneration.

    a) b_q(N) = 0 for 1 <= q <= n - 2;
    b) the degree-(n-1)/2 spectrum avoids [0, 15/4) and the exact spectrum in
       degree (n-3)/2 avoids [0, 7/4).
    """
    _require_odd(cs)
    n = cs.n
    bad = tuple(q for q in range(1, n - 1) if cs.harmonic(q) != 0)
    m = (n - 1) // 2
    middle = not spectrum_meets(cs, m, 0, Fraction(15, 4), closed_hi=False)
    exact = not spectrum_meets(cs, m - 1, 0, Fraction(7, 4), closed_hi=False,
                               parts=("exact",), include_harmonic=False)
    return GapReport(not bad, middle, exact, bad)


def small_eig_count(kernel_dims, q: int | None = None) -> int:
    """Number of eigenvalues tending to 0: k(Omega_0) + k_L2(M) - k(Omega_eps0).

    Degree 0 never has small eigenvalues.
    """
    a, b, c = kernel_dims
    if min(a, b, c) < 0:
        raise LedgerError("kernel dimensions must be nonnegative")
    count = a + b - c
    if count < 0:
        raise LedgerError(f"inconsistent kernel dimensions {tuple(kernel_dims)}: negative count")
    return 0 if q == 0 else count
