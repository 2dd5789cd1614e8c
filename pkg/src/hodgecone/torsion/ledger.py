"""Assembly of log-determinants and torsion along a conic degeneration."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..errors import LedgerError
from .conditions import small_eig_count


@dataclass(frozen=True)
class DegreeEntry:
    """Inputs for one form degree q."""

    zeta_M_at_0: float
    log_det_Omega0: float
    log_det_M: float
    kernel_dims: tuple
    # epsilon -> small eigenvalues at that epsilon
    small_eigs: Mapping[float, tuple] = field(default_factory=dict)


@dataclass(frozen=True)
class DegenerationLedger:
    n: int
    degrees: Mapping[int, DegreeEntry]

    def __post_init__(self):
        for q, entry in self.degrees.items():
            count = small_eig_count(entry.kernel_dims, q)
            for eps, eigs in entry.small_eigs.items():
                if len(eigs) != count:
                    raise LedgerError(
                        f"degree {q}: {len(eigs)} small eigenvalues at epsilon={eps}, expected {count}")
                if any(not mu > 0 for mu in eigs):
                    raise LedgerError(f"degree {q}: small eigenvalues must be positive")

    def small_count(self, q: int) -> int:
        return small_eig_count(self.degrees[q].kernel_dims, q)


def torsion_from_log_dets(log_dets: Sequence[float]) -> float:
    """log T = 1/2 sum_q (-1)^(q+1) q log det Delta_q."""
    return 0.5 * math.fsum((-1) ** (q + 1) * q * c for q, c in enumerate(log_dets))


@dataclass(frozen=True)
class LogDetExpansion:
    epsilon: float
    per_degree: dict
    log_eps_coefficient: float
    small_eig_term: float
    log_T_Omega0: float
    log_T_M: float
    log_T: float
    epsilon_independent: bool

    def to_json(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "per_degree": {str(q): v for q, v in sorted(self.per_degree.items())},
            "log_eps_coefficient": self.log_eps_coefficient,
            "small_eig_term": self.small_eig_term,
            "log_T_Omega0": self.log_T_Omega0,
            "log_T_M": self.log_T_M,
            "log_T": self.log_T,
            "epsilon_independent": self.epsilon_independent,
        }


def _small_eigs_at(entry: DegreeEntry, count: int, epsilon: float, q: int) -> tuple:
    if count == 0:
        return ()
    for eps, eigs in entry.small_eigs.items():
        if math.isclose(eps, epsilon, rel_tol=1e-12, abs_tol=0.0):
            return tuple(eigs)
    raise LedgerError(f"degree {q}: no small eigenvalues recorded at epsilon={epsilon}")


def assemble_log_det_expansion(ledger: DegenerationLedger, epsilon: float) -> LogDetExpansion:
    """Leading-order log det of every degree at ``epsilon`` and the resulting torsion.

    Per degree: -2 log(eps) zeta_q(0) + sum log mu_i + log det(Omega_0) + log det(M);
    the torsion is the weighted sum 1/2 sum (-1)^(q+1) q of these.
    """
    n = ledger.n
    if n % 2 == 0:
        raise ValueError("torsion pipeline requires odd n")
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    missing = [q for q in range(n + 1) if q not in ledger.degrees]
    if missing:
        raise LedgerError(f"incomplete ledger: degrees {missing} missing")
    log_eps = math.log(epsilon)
    per = {}
    for q in range(n + 1):
        e = ledger.degrees[q]
        mus = _small_eigs_at(e, ledger.small_count(q), epsilon, q)
        small = math.fsum(math.log(mu) for mu in mus)
        eps_term = -2.0 * log_eps * e.zeta_M_at_0
        per[q] = {
            "log_eps_term": eps_term,
            "small_eig_term": small,
            "log_det_Omega0": e.log_det_Omega0,
            "log_det_M": e.log_det_M,
            "log_det": math.fsum([eps_term, small, e.log_det_Omega0, e.log_det_M]),
        }
    w = [0.5 * (-1) ** (q + 1) * q for q in range(n + 1)]
    coeff = math.fsum((-1) ** q * q * ledger.degrees[q].zeta_M_at_0 for q in range(n + 1))
    small_total = math.fsum(w[q] * per[q]["small_eig_term"] for q in range(n + 1))
    t0 = torsion_from_log_dets([ledger.degrees[q].log_det_Omega0 for q in range(n + 1)])
    tm = torsion_from_log_dets([ledger.degrees[q].log_det_M for q in range(n + 1)])
    # grouped by term type; equals the weighted per-degree sum up to rounding
    total = math.fsum([coeff * log_eps, small_total, t0, tm])
    independent = all(ledger.degrees[q].zeta_M_at_0 == 0 and ledger.small_count(q) == 0
                      for q in range(n + 1))
    return LogDetExpansion(epsilon, per, coeff, small_total, t0, tm, total, independent)


# ---------------------------------------------------------------- JSON

def ledger_from_dict(doc) -> DegenerationLedger:
    try:
        n = int(doc["n"])
        degrees = {}
        for key, d in doc["degrees"].items():
            small = {float(k): tuple(float(x) for x in v) for k, v in d.get("small_eigs", {}).items()}
            degrees[int(key)] = DegreeEntry(
                float(d["zeta_M_at_0"]), float(d["log_det_Omega0"]), float(d["log_det_M"]),
                tuple(int(k) for k in d["kernel_dims"]), small)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise LedgerError(f"malformed ledger: {exc!r}") from None
    return DegenerationLedger(n, degrees)


def load_ledger(text: str) -> DegenerationLedger:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LedgerError(f"malformed JSON: {exc}") from None
    return ledger_from_dict(doc)
