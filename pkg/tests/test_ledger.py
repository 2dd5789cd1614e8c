import json
import math
import random

import pytest

from hodgecone.errors import LedgerError
from hodgecone.torsion import (DegenerationLedger, DegreeEntry, assemble_log_det_expansion,
                               torsion_from_log_dets)
from hodgecone.torsion.ledger import load_ledger


def _ledger(n, zetas=None, kernels=None, small=None, seed=1):
    rng = random.Random(seed)
    degrees = {}
    for q in range(n + 1):
        degrees[q] = DegreeEntry(
            0.0 if zetas is None else zetas[q],
            rng.uniform(-3, 3), rng.uniform(-3, 3),
            (0, 0, 0) if kernels is None else kernels[q],
            {} if small is None else small.get(q, {}))
    return DegenerationLedger(n, degrees)


def test_torsion_weights():
    assert torsion_from_log_dets([5.0, 1.0, 1.0, 1.0]) == pytest.approx(0.5 * (1 - 2 + 3))


def test_identity_without_degeneration_terms():
    led = _ledger(5)
    a = assemble_log_det_expansion(led, 0.1)
    b = assemble_log_det_expansion(led, 1e-9)
    assert a.epsilon_independent and a.log_T == b.log_T == a.log_T_Omega0 + a.log_T_M


def test_log_eps_coefficient():
    n = 3
    zetas = [0.5, -1.0, 2.0, 0.25]
    led = _ledger(n, zetas=zetas)
    out = assemble_log_det_expansion(led, 0.01)
    assert out.log_eps_coefficient == pytest.approx(sum((-1) ** q * q * z for q, z in enumerate(zetas)))
    assert not out.epsilon_independent
    # the grouped total equals the weighted per-degree sum
    weighted = 0.5 * math.fsum((-1) ** (q + 1) * q * out.per_degree[q]["log_det"] for q in range(n + 1))
    assert out.log_T == pytest.approx(weighted, abs=1e-12)


def test_small_eigenvalues_enter_with_their_logs():
    n = 3
    kernels = [(0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0)]
    led = _ledger(n, kernels=kernels, small={1: {0.1: (0.02,)}})
    out = assemble_log_det_expansion(led, 0.1)
    assert out.per_degree[1]["small_eig_term"] == pytest.approx(math.log(0.02))
    assert out.small_eig_term == pytest.approx(0.5 * math.log(0.02))
    with pytest.raises(LedgerError, match="no small eigenvalues"):
        assemble_log_det_expansion(led, 0.2)


def test_ledger_validation():
    with pytest.raises(LedgerError, match="expected 1"):
        _ledger(3, kernels=[(0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0)], small={1: {0.1: ()}})
    with pytest.raises(LedgerError, match="positive"):
        _ledger(3, kernels=[(0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0)], small={1: {0.1: (-1.0,)}})
    led = DegenerationLedger(3, {0: DegreeEntry(0.0, 0.0, 0.0, (0, 0, 0))})
    with pytest.raises(LedgerError, match="incomplete"):
        assemble_log_det_expansion(led, 0.1)
    with pytest.raises(ValueError, match="odd"):
        assemble_log_det_expansion(_ledger(4), 0.1)
    with pytest.raises(ValueError):
        assemble_log_det_expansion(_ledger(3), 0.0)


def test_json_loading():
    doc = {"n": 3, "degrees": {str(q): {"zeta_M_at_0": 0, "log_det_Omega0": q, "log_det_M": -q,
                                        "kernel_dims": [0, 0, 0]} for q in range(4)}}
    led = load_ledger(json.dumps(doc))
    out = assemble_log_det_expansion(led, 0.3)
    assert out.log_T == pytest.approx(0.0)
    assert json.loads(json.dumps(out.to_json()))["epsilon_independent"] is True
    with pytest.raises(LedgerError):
        load_ledger("{")
    with pytest.raises(LedgerError):
        load_ledger(json.dumps({"n": 3}))
