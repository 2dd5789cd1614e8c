import json
import math
from fractions import Fraction

import pytest

from hodgecone.errors import InsufficientTruncation, SpectralDataError
from hodgecone.spectral_data import (CrossSection, FormSpectrum, circle_preset, dump_cross_section,
                                     from_lists, load_cross_section, min_eigenvalues,
                                     sphere_coexact_eigenvalue, sphere_exact_eigenvalue,
                                     sphere_jmax_for_radius, sphere_preset, spectrum_bottom,
                                     spectrum_meets)


def test_sphere_eigenvalue_formulas():
    # S^2: functions l(l+1); exact 1-forms share them, coexact 1-forms too
    assert [sphere_coexact_eigenvalue(3, 0, j) for j in (1, 2, 3)] == [2, 6, 12]
    assert [sphere_exact_eigenvalue(3, 1, j) for j in (1, 2, 3)] == [2, 6, 12]
    # S^3 coexact 1-forms: (j + 1)^2
    assert [sphere_coexact_eigenvalue(4, 1, j) for j in (1, 2, 3)] == [4, 9, 16]


def test_sphere_multiplicities():
    s2 = sphere_preset(3, 5)
    assert [m for _, m in s2.spectrum(0).coexact] == [3, 5, 7, 9, 11]
    s3 = sphere_preset(4, 4)
    # coexact 1-forms on S^3 at (j+1)^2 have multiplicity 2 j (j + 2)
    assert [m for _, m in s3.spectrum(1).coexact] == [2 * j * (j + 2) for j in range(1, 5)]
    # functions on S^3: (j+1)^2
    assert [m for _, m in s3.spectrum(0).coexact] == [(j + 1) ** 2 for j in range(1, 5)]


def test_sphere_preset_structure():
    cs = sphere_preset(5, 3)
    assert cs.dim == 4 and cs.n == 5
    assert cs.betti == (1, 0, 0, 0, 1)
    for p in range(1, 5):
        assert cs.spectrum(p).exact == cs.spectrum(p - 1).coexact


def test_min_eigenvalues_on_s2():
    cs = sphere_preset(3, 4)
    lam, mu, gamma = min_eigenvalues(cs, 1)
    assert (lam, mu, gamma) == (2, 2, 2)
    lam, mu, gamma = min_eigenvalues(cs, 0)
    assert lam == math.inf and mu == 0 and gamma == 0
    with pytest.raises(SpectralDataError):
        min_eigenvalues(cs, 5)


def test_min_eigenvalues_enumerated_example():
    # exact 1-forms start at 3, coexact 1-forms at 4, H^0 = R
    cs = from_lists(2, (1, 0, 1), {1: [(Fraction(3), 1), (Fraction(9), 1)],
                                   2: [(Fraction(4), 2), (Fraction(10), 1)]})
    assert min_eigenvalues(cs, 1) == (3, 3, 4)
    assert min_eigenvalues(cs, 0)[1] == 0


def test_bottom_and_meets():
    cs = sphere_preset(3, 3)
    assert spectrum_bottom(cs, 0) == 0 and spectrum_bottom(cs, 1) == 2
    assert spectrum_meets(cs, 1, 0, 2)
    assert not spectrum_meets(cs, 1, 0, 2, closed_hi=False)
    with pytest.raises(InsufficientTruncation):
        spectrum_meets(cs, 1, 13, 100)


def test_validation_errors():
    with pytest.raises(SpectralDataError):
        FormSpectrum(exact=[(Fraction(2), 1), (Fraction(1), 1)])
    with pytest.raises(SpectralDataError):
        FormSpectrum(exact=[(Fraction(-1), 1)])
    with pytest.raises(SpectralDataError):
        FormSpectrum(exact=[(Fraction(1), 0)])
    with pytest.raises(SpectralDataError):
        CrossSection(2, (1, 0, 0), {})
    with pytest.raises(SpectralDataError):
        from_lists(2, (1, 0), {})
    bad = {0: FormSpectrum((), [(Fraction(2), 1)], 1), 1: FormSpectrum([(Fraction(3), 1)], (), 1)}
    with pytest.raises(SpectralDataError, match="pairing"):
        CrossSection(1, (1, 1), bad)


def test_json_round_trip():
    cs = sphere_preset(4, 3)
    text = dump_cross_section(cs)
    assert load_cross_section(text) == cs
    assert json.loads(text) == json.loads(dump_cross_section(load_cross_section(text)))


def test_json_rejects_garbage():
    with pytest.raises(SpectralDataError):
        load_cross_section("{not json")
    with pytest.raises(SpectralDataError):
        load_cross_section(json.dumps({"dim": 2}))


def test_rescaling_divides_eigenvalues():
    cs = sphere_preset(3, 3).rescaled(2)
    assert cs.spectrum(1).exact[0][0] == Fraction(1, 2)


def test_circle_preset():
    cs = circle_preset(2 * math.pi, 4)
    assert [e for e, _ in cs.spectrum(1).exact] == pytest.approx([1, 4, 9, 16])
    assert cs.betti == (1, 1)


def test_jmax_for_radius():
    assert sphere_jmax_for_radius(4.5) == 7
    with pytest.raises(SpectralDataError):
        sphere_jmax_for_radius(math.inf)


def test_harmonic_dim_defaults_to_betti():
    doc = {"dim": 1, "betti": [1, 1], "spectra": {
        "0": {"coexact": [["1", 2]], "truncation": "1"},
        "1": {"exact": [["1", 2]], "truncation": "1"}}}
    cs = load_cross_section(json.dumps(doc))
    assert cs.harmonic(0) == cs.harmonic(1) == 1
    doc["spectra"]["1"]["harmonic_dim"] = 0
    with pytest.raises(SpectralDataError, match="harmonic_dim"):
        load_cross_section(json.dumps(doc))
