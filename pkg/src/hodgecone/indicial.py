"""Indicial roots of the b-Hodge Laplacian on a cone over a cross-section.

For degree q on an n-dimensional cone the indicial set splits into four
families built from the cross-section spectra:

* ``I1``: ``+-sqrt((n/2-q-1)^2 + a)`` with a in {0 (harmonic q-forms)} + coexact(q)
* ``I2``: ``+-sqrt((n/2-q+1)^2 + a)`` with a in {0 (harmonic (q-1)-forms)} + exact(q-1)
* ``I3``: ``+-(sqrt((n/2-q)^2 + a) - 1)`` with a in exact(q)
* ``I4``: ``+-(sqrt((n/2-q)^2 + a) + 1)`` with a in exact(q)

Values are kept exact (`QuadraticSurd`) whenever the radicand is rational.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GuardViolation, InsufficientTruncation
from .exact import (RootValue, is_exact, make_root_value, simplify,
                    values_equal)
from .spectral_data import INF, CrossSection, _min_triple, spectrum_meets

FAMILIES = ("I1", "I2", "I3", "I4")

# family -> (inner offset sigma, outer shift, source degree offset, source part)
_FAMILY_DATA = {
    "I1": (-1, 0, 0, "coexact"),
    "I2": (1, 0, -1, "exact"),
    "I3": (0, -1, 0, "exact"),
    "I4": (0, 1, 0, "exact"),
}


def center(n: int, q: int) -> Fraction:
    """n/2 - q as an exact rational."""
    return Fraction(n, 2) - q


@dataclass(frozen=True)
class IndicialRoot:
    sign: int
    inner_offset: int
    radicand_addend: Fraction | float
    outer_shift: int
    family: str
    multiplicity: int
    base: Fraction  # n/2 - q + inner_offset
    value: RootValue = field(compare=False)

    @property
    def magnitude(self) -> RootValue:
        return abs(self.value)

    def to_dict(self) -> dict:
        return {
            "value": float(self.value),
            "value_exact": str(simplify(self.value)) if is_exact(self.value) else None,
            "exact": {
                "sign": self.sign,
                "sigma": self.inner_offset,
                "alpha2": _num_str(self.radicand_addend),
                "delta": self.outer_shift,
                "family": self.family,
            },
            "mult": self.multiplicity,
        }


def _num_str(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return repr(float(x))


@dataclass(frozen=True)
class MergedRoot:
    """One distinct indicial value with its per-family multiplicities."""

    value: RootValue
    multiplicity: int
    by_family: dict

    def to_dict(self) -> dict:
        return {
            "value": float(self.value),
            "value_exact": str(simplify(self.value)) if is_exact(self.value) else None,
            "mult": self.multiplicity,
            "families": dict(sorted(self.by_family.items())),
        }


def _root_key(r: IndicialRoot):
    return (float(r.value), r.family, r.sign, float(r.radicand_addend))


@dataclass(frozen=True)
class IndicialSet:
    roots: tuple
    q: int
    n: int
    truncation: Fraction | float

    def family(self, name: str) -> tuple:
        return tuple(r for r in self.roots if r.family == name)

    def merged(self) -> list[MergedRoot]:
        groups: list[list[IndicialRoot]] = []
        for r in self.roots:
            if groups and values_equal(groups[-1][0].value, r.value):
                groups[-1].append(r)
            else:
                groups.append([r])
        out = []
        for g in groups:
            fam: dict[str, int] = {}
            for r in g:
                fam[r.family] = fam.get(r.family, 0) + r.multiplicity
            out.append(MergedRoot(simplify(g[0].value), sum(fam.values()), fam))
        return out

    def values(self) -> list:
        return [m.value for m in self.merged()]

    def family_values(self, name: str) -> list:
        vals = []
        for r in self.family(name):
            if not vals or not values_equal(vals[-1], r.value):
                vals.append(simplify(r.value))
        return vals

    def nonnegative(self) -> list:
        return [v for v in self.values() if v >= 0]

    def subset(self, keep) -> "IndicialSet":
        return IndicialSet(tuple(r for r in self.roots if keep(r)), self.q, self.n, self.truncation)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "radius": _radius_json(self.truncation),
            "families": {f: [r.to_dict() for r in self.family(f)] for f in FAMILIES},
            "merged": [m.to_dict() for m in self.merged()],
        }


def _radius_json(r):
    return "inf" if r == INF else float(r)


def _family_sources(cs: CrossSection, q: int, name: str):
    """(alpha^2, multiplicity) pairs feeding a family, harmonic branch first."""
    _, _, deg_off, part = _FAMILY_DATA[name]
    p = q + deg_off
    out = []
    if name in ("I1", "I2") and cs.harmonic(p) > 0:
        out.append((Fraction(0), cs.harmonic(p)))
    out.extend(cs.eigen_list(p, part))
    return out


def _family_cutoff(cs: CrossSection, q: int, name: str):
    _, _, deg_off, part = _FAMILY_DATA[name]
    return cs.list_cutoff(q + deg_off, part)


def _required_level(n: int, q: int, name: str, radius):
    """Largest alpha^2 that can produce a root of modulus <= radius in this family."""
    sigma, shift, _, _ = _FAMILY_DATA[name]
    c = center(n, q) + sigma
    reach = radius + 1 if name == "I3" else radius - shift
    if reach < 0:
        return None
    return reach * reach - c * c


def family_radius(cs: CrossSection, q: int, name: str):
    """Largest R for which one family is certified complete up to modulus R."""
    sigma, shift, _, _ = _FAMILY_DATA[name]
    cut = _family_cutoff(cs, q, name)
    if cut == INF:
        return INF
    c = center(cs.n, q) + sigma
    s = math.sqrt(float(c * c + cut))
    reach = max(s - 1 if name == "I3" else s + shift, 0.0)
    # stay clear of rounding at the boundary so the radius re-certifies
    return max(reach - 1e-9 * max(1.0, reach), 0.0)


def certified_radius(cs: CrossSection, q: int):
    """Largest R for which the spectra certify every root of modulus <= R."""
    return min(family_radius(cs, q, f) for f in FAMILIES)


def _check_truncation(cs: CrossSection, q: int, radius, families=FAMILIES) -> None:
    for name in families:
        cut = _family_cutoff(cs, q, name)
        if cut == INF:
            continue
        if radius == INF:
            raise InsufficientTruncation(f"family {name} is truncated at {cut}; a finite radius is required")
        need = _required_level(cs.n, q, name, radius)
        if need is not None and cut < need:
            raise InsufficientTruncation(
                f"family {name} needs eigenvalues up to {float(need):.6g}, "
                f"spectrum is complete only up to {float(cut):.6g}")


def _check_degree(cs: CrossSection, q: int) -> None:
    if not isinstance(q, int) or not 0 <= q <= cs.n:
        raise ValueError(f"q must be an integer in 0..{cs.n}")


def indicial_set(cs: CrossSection, q: int, radius, families=FAMILIES) -> IndicialSet:
    """All roots of the four families with |value| <= radius.

    ``families`` restricts the enumeration (and the truncation check) to a
    subset of the four families.
    """
    _check_degree(cs, q)
    if not radius >= 0:
        raise ValueError("radius must be nonnegative")
    _check_truncation(cs, q, radius, families)
    n = cs.n
    roots = []
    for name in families:
        sigma, shift, _, _ = _FAMILY_DATA[name]
        base = center(n, q) + sigma
        for alpha2, mult in _family_sources(cs, q, name):
            rad = base * base + alpha2
            approx = math.sqrt(float(rad))
            if abs(approx + shift) > float(radius) + 1e-6:
                if approx > 1:
                    break  # sources are sorted, magnitudes only grow from here
                continue
            for sign in (1, -1):
                v = make_root_value(sign, rad, shift)
                if v == 0 and sign == -1:
                    continue  # the zero root is its own mirror image
                if abs(v) <= radius:
                    roots.append(IndicialRoot(sign, sigma, alpha2, shift, name, mult, base, v))
    roots.sort(key=_root_key)
    return IndicialSet(tuple(roots), q, n, radius)


def full_indicial_set(cs: CrossSection, q: int) -> IndicialSet:
    """Indicial set up to the largest radius the spectra certify."""
    return indicial_set(cs, q, certified_radius(cs, q))


def nu0(cs: CrossSection, q: int, indicial: IndicialSet | None = None):
    """Smallest nonnegative indicial root; 0 means the zero-root hypothesis fails.

    ``indicial`` may pass in an already computed ``full_indicial_set(cs, q)``.
    """
    iset = full_indicial_set(cs, q) if indicial is None else indicial
    nonneg = iset.nonnegative()
    if not nonneg:
        raise InsufficientTruncation(
            f"no nonnegative root within the certified radius {iset.truncation}")
    return nonneg[0]


def _sqrt_shift(rad, shift):
    if rad == INF:
        return INF
    return simplify(make_root_value(1, rad, shift))


def nu0_min_formula(cs: CrossSection, q: int):
    """Closed-form smallest nonnegative root, valid when lambda_q > 1 - (n/2-q)^2."""
    _check_degree(cs, q)
    n = cs.n
    c = center(n, q)
    lam_q, _, gamma_q = _min_triple(cs, q)
    _, mu_prev, _ = _min_triple(cs, q - 1)
    if not lam_q > 1 - c * c:
        raise GuardViolation(
            f"lambda_{q} = {lam_q} does not exceed 1 - (n/2-q)^2 = {1 - c * c}; use nu0 instead")
    terms = [
        _sqrt_shift(c * c + lam_q, -1),
        _sqrt_shift((c - 1) ** 2 + gamma_q, 0),
        _sqrt_shift((c + 1) ** 2 + mu_prev, 0),
    ]
    return min(terms)


@dataclass(frozen=True)
class HypothesisCheck:
    """Zero-root hypothesis checked bullet by bullet and through nu0."""

    bullets: tuple  # (label, applicable, passed)
    bullet_verdict: bool
    nu0: object
    nu0_verdict: bool

    @property
    def passed(self) -> bool:
        return self.bullet_verdict and self.nu0_verdict

    @property
    def consistent(self) -> bool:
        return self.bullet_verdict == self.nu0_verdict

    @property
    def failing(self) -> list:
        return [b[0] for b in self.bullets if b[1] and not b[2]]

    def to_dict(self) -> dict:
        return {
            "bullets": [{"condition": b[0], "applicable": b[1], "passed": b[2]} for b in self.bullets],
            "bullet_verdict": self.bullet_verdict,
            "nu0": float(self.nu0),
            "nu0_verdict": self.nu0_verdict,
            "consistent": self.consistent,
        }


def check_hypothesis_0notindroot(cs: CrossSection, q: int,
                                 indicial: IndicialSet | None = None) -> HypothesisCheck:
    """Check that 0 is not an indicial root, both by its three criteria and via nu0."""
    _check_degree(cs, q)
    n = cs.n
    c = center(n, q)
    bullets = []
    applicable = abs(c) <= Fraction(1, 2)
    ok = True
    if applicable:
        level = 1 - c * c
        ok = not spectrum_meets(cs, q, level, level, parts=("exact",), include_harmonic=False)
    bullets.append(("1-(n/2-q)^2 not an exact eigenvalue in degree q", applicable, ok))
    applicable = c == 1
    bullets.append((f"H^{q}(N) = 0", applicable, (not applicable) or cs.harmonic(q) == 0))
    applicable = c == -1
    bullets.append((f"H^{q - 1}(N) = 0", applicable, (not applicable) or cs.harmonic(q - 1) == 0))
    verdict = all(b[2] for b in bullets)
    v = nu0(cs, q, indicial)
    return HypothesisCheck(tuple(bullets), verdict, v, bool(v > 0))
