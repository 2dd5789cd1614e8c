"""Hodge-decomposed form spectra of a closed cross-section.

A `CrossSection` stores, for each form degree p, the Laplacian spectrum split
into the exact part (image of d), the coexact part (image of the codifferential)
and the harmonic dimension.  Presets cover round spheres and circles; arbitrary
spectra are read from JSON.

Eigenvalues are `Fraction` when they come from a preset or a JSON literal and
`float` otherwise.  Each degree carries a cutoff ``truncation`` below which
both lists are complete.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InsufficientTruncation, SpectralDataError
from .exact import FLOAT_TOL

INF = math.inf


@dataclass(frozen=True)
class FormSpectrum:
    """Spectrum of the form Laplacian in one degree.

    ``exact`` and ``coexact`` are sorted tuples of ``(eigenvalue, multiplicity)``.
    Both lists contain every eigenvalue ``<= truncation``.
    """

    exact: tuple = ()
    coexact: tuple = ()
    harmonic_dim: int = 0
    truncation: Fraction | float = INF

    def __post_init__(self):
        object.__setattr__(self, "exact", _normalize_list(self.exact, "exact"))
        object.__setattr__(self, "coexact", _normalize_list(self.coexact, "coexact"))
        if not isinstance(self.harmonic_dim, int) or self.harmonic_dim < 0:
            raise SpectralDataError("harmonic_dim must be a nonnegative integer")
        t = self.truncation
        if not isinstance(t, (int, Fraction, float)) or t != t or t <= 0:
            raise SpectralDataError("truncation must be a positive number")
        if isinstance(t, int):
            object.__setattr__(self, "truncation", Fraction(t))


def _normalize_list(entries, label: str) -> tuple:
    out = []
    for item in entries:
        try:
            eig, mult = item
        except (TypeError, ValueError):
            raise SpectralDataError(f"{label} entries must be [eigenvalue, multiplicity] pairs")
        if isinstance(eig, bool) or not isinstance(eig, (int, Fraction, float)):
            raise SpectralDataError(f"{label} eigenvalue {eig!r} is not a number")
        if isinstance(eig, int):
            eig = Fraction(eig)
        if not eig > 0 or eig != eig:
            raise SpectralDataError("eigenvalues must be positive")
        if isinstance(eig, float) and math.isinf(eig):
            raise SpectralDataError("eigenvalues must be finite")
        if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
            raise SpectralDataError("multiplicities must be integers >= 1")
        out.append((eig, mult))
    for a, b in zip(out, out[1:]):
        if not a[0] < b[0]:
            raise SpectralDataError(f"{label} list must be strictly ascending")
    return tuple(out)


@dataclass(frozen=True)
class CrossSection:
    """Closed cross-section of dimension ``dim`` with its form spectra."""

    dim: int
    betti: tuple
    spectra: Mapping[int, FormSpectrum] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise SpectralDataError("dim must be an integer >= 1")
        betti = tuple(self.betti)
        object.__setattr__(self, "betti", betti)
        object.__setattr__(self, "spectra", dict(sorted(self.spectra.items())))
        if len(betti) != self.dim + 1:
            raise SpectralDataError(f"expected {self.dim + 1} Betti numbers, got {len(betti)}")
        if any((not isinstance(b, int)) or b < 0 for b in betti):
            raise SpectralDataError("Betti numbers must be nonnegative integers")
        for p in range(self.dim + 1):
            if betti[p] != betti[self.dim - p]:
                raise SpectralDataError(f"Poincare duality fails: b_{p} != b_{self.dim - p}")
        for p, spec in self.spectra.items():
            if not 0 <= p <= self.dim:
                raise SpectralDataError(f"degree {p} outside 0..{self.dim}")
            if spec.harmonic_dim != betti[p]:
                raise SpectralDataError(f"harmonic_dim of degree {p} differs from b_{p}")
            if p == 0 and spec.exact:
                raise SpectralDataError("there are no exact 0-forms")
            if p == self.dim and spec.coexact:
                raise SpectralDataError("there are no coexact forms of top degree")
        for p in range(1, self.dim + 1):
            if p in self.spectra and p - 1 in self.spectra:
                _check_pairing(self.spectra[p - 1], self.spectra[p], p)

    @property
    def n(self) -> int:
        """Dimension of the cone over this cross-section."""
        return self.dim + 1

    def spectrum(self, p: int) -> FormSpectrum:
        if p not in self.spectra:
            raise SpectralDataError(f"no spectrum supplied for degree {p}")
        return self.spectra[p]

    def structurally_empty(self, p: int, part: str) -> bool:
        """True when the list is empty for every closed manifold of this dimension."""
        if p < 0 or p > self.dim:
            return True
        return (part == "exact" and p == 0) or (part == "coexact" and p == self.dim)

    def eigen_list(self, p: int, part: str) -> tuple:
        """Entries of one part; degrees outside 0..dim give an empty list."""
        if p < 0 or p > self.dim:
            return ()
        return getattr(self.spectrum(p), part)

    def list_cutoff(self, p: int, part: str) -> Fraction | float:
        """Eigenvalue level up to which ``eigen_list(p, part)`` is complete."""
        if self.structurally_empty(p, part):
            return INF
        return self.spectrum(p).truncation

    def harmonic(self, p: int) -> int:
        if p < 0 or p > self.dim:
            return 0
        return self.betti[p]

    def rescaled(self, factor) -> "CrossSection":
        """Cross-section for the metric factor**2 * h: eigenvalues divide by factor**2."""
        s = factor * factor
        spectra = {}
        for p, sp in self.spectra.items():
            spectra[p] = FormSpectrum(
                exact=tuple((e / s, m) for e, m in sp.exact),
                coexact=tuple((e / s, m) for e, m in sp.coexact),
                harmonic_dim=sp.harmonic_dim,
                truncation=sp.truncation / s,
            )
        return CrossSection(self.dim, self.betti, spectra)


def _same(a, b) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return abs(float(a) - float(b)) <= FLOAT_TOL
    return a == b


def _check_pairing(lower: FormSpectrum, upper: FormSpectrum, p: int) -> None:
    cut = min(lower.truncation, upper.truncation)
    left = [e for e in upper.exact if e[0] <= cut]
    right = [e for e in lower.coexact if e[0] <= cut]
    ok = len(left) == len(right) and all(
        _same(a[0], b[0]) and a[1] == b[1] for a, b in zip(left, right))
    if not ok:
        raise SpectralDataError(
            f"pairing violated: exact spectrum of degree {p} differs from "
            f"coexact spectrum of degree {p - 1}")


# ---------------------------------------------------------------- presets

def _sphere_coexact_multiplicity(m: int, p: int, k: int) -> int:
    """Multiplicity of the k-th coexact p-form eigenvalue on the round S^m."""
    num = math.factorial(k + m - 1) * (2 * k + m - 1)
    den = (math.factorial(p) * math.factorial(m - p - 1) * math.factorial(k - 1)
           * (k + p) * (k + m - p - 1))
    mult, rem = divmod(num, den)
    assert rem == 0
    return mult


def sphere_coexact_eigenvalue(n: int, p: int, j: int) -> int:
    """j-th coexact eigenvalue on p-forms of S^{n-1}, j >= 1."""
    return (j + p) * (j + n - p - 2)


def sphere_exact_eigenvalue(n: int, p: int, j: int) -> int:
    """j-th exact eigenvalue on p-forms of S^{n-1}, j >= 1 (zero is excluded)."""
    return (p - 1 + j) * (n - p - 1 + j)


def sphere_preset(n: int, jmax: int) -> CrossSection:
    """Round unit sphere S^{n-1} with the first ``jmax`` levels of every list."""
    if not isinstance(n, int) or n < 2:
        raise SpectralDataError("sphere preset needs n >= 2")
    if not isinstance(jmax, int) or jmax < 1:
        raise SpectralDataError("jmax must be >= 1")
    m = n - 1
    coexact = {}
    for p in range(m):
        coexact[p] = tuple(
            (Fraction(sphere_coexact_eigenvalue(n, p, j)), _sphere_coexact_multiplicity(m, p, j))
            for j in range(1, jmax + 1))
    spectra = {}
    for p in range(m + 1):
        ex = coexact.get(p - 1, ())
        co = coexact.get(p, ())
        cut = min(lst[-1][0] for lst in (ex, co) if lst)
        spectra[p] = FormSpectrum(ex, co, 1 if p in (0, m) else 0, cut)
    betti = tuple(1 if p in (0, m) else 0 for p in range(m + 1))
    return CrossSection(m, betti, spectra)


def circle_preset(length: float, jmax: int) -> CrossSection:
    """Circle of the given length; Fourier modes (2 pi j / L)^2, each twice."""
    if not length > 0:
        raise SpectralDataError("circle length must be positive")
    if not isinstance(jmax, int) or jmax < 1:
        raise SpectralDataError("jmax must be >= 1")
    eigs = tuple(((2 * math.pi * j / length) ** 2, 2) for j in range(1, jmax + 1))
    cut = eigs[-1][0]
    spectra = {0: FormSpectrum((), eigs, 1, cut), 1: FormSpectrum(eigs, (), 1, cut)}
    return CrossSection(1, (1, 1), spectra)


def sphere_jmax_for_radius(radius: float) -> int:
    """A jmax whose sphere lists certify all indicial roots up to ``radius``.

    Every j-th sphere eigenvalue is at least j**2, and roots of modulus <= R only
    involve eigenvalues <= (R + 1)**2.
    """
    if math.isinf(radius):
        raise SpectralDataError("a finite radius is required")
    return max(1, math.ceil(radius) + 2)


# ---------------------------------------------------------------- queries

def min_eigenvalues(cs: CrossSection, p: int):
    """Return ``(lambda_p, mu_p, gamma_p)``.

    lambda_p is the bottom of the exact spectrum, mu_p the bottom of the
    spectrum on the orthogonal complement of the coexact forms, gamma_p the
    bottom on the complement of the exact forms.  Empty subspaces give +inf.
    """
    if not 0 <= p <= cs.dim:
        raise SpectralDataError(f"degree {p} outside 0..{cs.dim}")
    return _min_triple(cs, p)


def _bottom(cs: CrossSection, p: int, part: str):
    lst = cs.eigen_list(p, part)
    if lst:
        return lst[0][0]
    if cs.structurally_empty(p, part) or cs.list_cutoff(p, part) == INF:
        return INF
    raise InsufficientTruncation(
        f"{part} spectrum of degree {p} is empty below its cutoff {cs.list_cutoff(p, part)}")


def _min_triple(cs: CrossSection, p: int):
    """min_eigenvalues without the range check; out-of-range degrees give +inf."""
    lam = _bottom(cs, p, "exact")
    harm = cs.harmonic(p) > 0
    mu = Fraction(0) if harm else lam
    gamma = Fraction(0) if harm else _bottom(cs, p, "coexact")
    return lam, mu, gamma


def spectrum_bottom(cs: CrossSection, p: int):
    """Smallest eigenvalue of the full Laplacian on p-forms (0 if harmonic)."""
    if cs.harmonic(p) > 0:
        return Fraction(0)
    return min(_bottom(cs, p, "exact"), _bottom(cs, p, "coexact"))


def spectrum_meets(cs: CrossSection, p: int, lo, hi, *, closed_hi: bool = True,
                   parts=("exact", "coexact"), include_harmonic: bool = True) -> bool:
    """Whether the chosen parts of the degree-p spectrum meet [lo, hi] (or [lo, hi))."""
    if include_harmonic and cs.harmonic(p) > 0 and lo <= 0:
        return True
    for part in parts:
        for eig, _ in cs.eigen_list(p, part):
            if eig >= lo and (eig <= hi if closed_hi else eig < hi):
                return True
    for part in parts:
        if cs.list_cutoff(p, part) < hi:
            raise InsufficientTruncation(
                f"{part} spectrum of degree {p} is not certified up to {hi}")
    return False


# ---------------------------------------------------------------- JSON

def _parse_number(x, what: str):
    if isinstance(x, bool):
        raise SpectralDataError(f"{what}: expected a number, got {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, float):
        return x
    if isinstance(x, str):
        if x.strip().lower() in ("inf", "infinity", "+inf"):
            return INF
        try:
            return Fraction(x)
        except ValueError:
            pass
    raise SpectralDataError(f"{what}: expected a number, got {x!r}")


def cross_section_from_dict(doc) -> CrossSection:
    if not isinstance(doc, dict):
        raise SpectralDataError("document must be a JSON object")
    missing = {"dim", "betti", "spectra"} - set(doc)
    if missing:
        raise SpectralDataError(f"missing keys: {sorted(missing)}")
    dim, betti, spectra_doc = doc["dim"], doc["betti"], doc["spectra"]
    if isinstance(dim, Fraction) and dim.denominator == 1:
        dim = int(dim)
    if not isinstance(dim, int):
        raise SpectralDataError("dim must be an integer")
    if not isinstance(betti, list):
        raise SpectralDataError("betti must be a list")
    betti = [_as_int(b, "betti") for b in betti]
    if not isinstance(spectra_doc, dict):
        raise SpectralDataError("spectra must be an object keyed by degree")
    spectra = {}
    for key, sd in spectra_doc.items():
        try:
            p = int(key)
        except ValueError:
            raise SpectralDataError(f"degree key {key!r} is not an integer")
        if not isinstance(sd, dict):
            raise SpectralDataError(f"spectrum of degree {p} must be an object")
        unknown = set(sd) - {"exact", "coexact", "harmonic_dim", "truncation"}
        if unknown:
            raise SpectralDataError(f"unknown keys in degree {p}: {sorted(unknown)}")
        lists = {}
        for part in ("exact", "coexact"):
            raw = sd.get(part, [])
            if not isinstance(raw, list):
                raise SpectralDataError(f"{part} of degree {p} must be a list")
            entries = []
            for e in raw:
                if not isinstance(e, list) or len(e) != 2:
                    raise SpectralDataError(f"{part} entries must be [eigenvalue, multiplicity] pairs")
                entries.append((_parse_number(e[0], "eigenvalue"), _as_int(e[1], "multiplicity")))
            lists[part] = entries
        if "truncation" not in sd:
            raise SpectralDataError(f"degree {p} lacks a truncation")
        spectra[p] = FormSpectrum(
            lists["exact"], lists["coexact"],
            # harmonic_dim is optional: it defaults to the Betti number of the degree
            _as_int(sd.get("harmonic_dim", betti[p] if 0 <= p < len(betti) else 0), "harmonic_dim"),
            _parse_number(sd["truncation"], "truncation"))
    return CrossSection(dim, tuple(betti), spectra)


def _as_int(x, what: str) -> int:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    raise SpectralDataError(f"{what} must be an integer, got {x!r}")


def load_cross_section(document: str) -> CrossSection:
    """Parse a JSON document; numeric literals are kept as exact rationals."""
    try:
        doc = json.loads(document, parse_float=Fraction, parse_int=Fraction,
                         parse_constant=lambda s: {"Infinity": INF}.get(s, s))
    except json.JSONDecodeError as exc:
        raise SpectralDataError(f"malformed JSON: {exc}") from None
    return cross_section_from_dict(doc)


def _number_to_json(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def cross_section_to_dict(cs: CrossSection) -> dict:
    spectra = {}
    for p, sp in cs.spectra.items():
        spectra[str(p)] = {
            "exact": [[_number_to_json(e), m] for e, m in sp.exact],
            "coexact": [[_number_to_json(e), m] for e, m in sp.coexact],
            "harmonic_dim": sp.harmonic_dim,
            "truncation": _number_to_json(sp.truncation),
        }
    return {"dim": cs.dim, "betti": list(cs.betti), "spectra": spectra}


def dump_cross_section(cs: CrossSection) -> str:
    """Canonical JSON: sorted keys, ascending eigenvalues, exact rationals as 'p/q'."""
    return json.dumps(cross_section_to_dict(cs), sort_keys=True, separators=(",", ":"))


def from_lists(dim: int, betti: Sequence[int], exact: Mapping[int, Sequence],
               truncation: Mapping[int, object] | None = None) -> CrossSection:
    """Build a cross-section from exact lists only; coexact(p) is exact(p+1)."""
    if len(betti) != dim + 1:
        raise SpectralDataError(f"expected {dim + 1} Betti numbers, got {len(betti)}")
    spectra = {}
    for p in range(dim + 1):
        ex = tuple(exact.get(p, ())) if p > 0 else ()
        co = tuple(exact.get(p + 1, ())) if p < dim else ()
        cut = INF if truncation is None else truncation.get(p, INF)
        spectra[p] = FormSpectrum(ex, co, betti[p], cut)
    return CrossSection(dim, tuple(betti), spectra)
