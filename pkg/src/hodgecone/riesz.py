"""L^p boundedness intervals for the Riesz transform on q-forms.

The decay indices nu_d, nu_delta, nu_D are read off the indicial set of the
cone Laplacian with the roots belonging to the indicial sets of d and delta
removed, family by family.  Together with nu0 and the kernel decay index they
give the interval of p for which (d + delta) Delta_q^{-1/2} is L^p bounded.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import GuardViolation, InsufficientTruncation
from .exact import (FLOAT_TOL, divide_or_inf, is_exact, make_root_value, positive_part, simplify,
                    values_equal)
from .indicial import (IndicialSet, _check_degree, center,
                       check_hypothesis_0notindroot, family_radius, full_indicial_set, indicial_set)
from .spectral_data import INF, CrossSection, _min_triple


# ---------------------------------------------------------------- value types

@dataclass(frozen=True)
class DecayIndex:
    """A decay index: an attained value, an empty set, or a certified lower bound."""

    value: object = None
    lower_bound: object = None

    @classmethod
    def empty(cls) -> "DecayIndex":
        return cls()

    @property
    def is_empty(self) -> bool:
        return self.value is None and self.lower_bound is None

    @property
    def is_bound(self) -> bool:
        return self.value is None and self.lower_bound is not None

    def __float__(self) -> float:
        if self.value is not None:
            return float(self.value)
        if self.lower_bound is not None:
            return float(self.lower_bound)
        return INF

    def to_json(self):
        if self.value is not None:
            return _num_json(self.value)
        if self.lower_bound is not None:
            return {"lower_bound": float(self.lower_bound)}
        return "empty"

    def __str__(self):
        if self.value is not None:
            return str(self.value)
        if self.lower_bound is not None:
            return f">= {float(self.lower_bound):.6g}"
        return "empty"


def _index_min(a: DecayIndex, b: DecayIndex) -> DecayIndex:
    """min with empty sets treated as absent."""
    if a.is_empty:
        return b
    if b.is_empty:
        return a
    if a.value is not None and b.value is not None:
        return a if a.value <= b.value else b
    known = a if a.value is not None else b if b.value is not None else None
    bound = min(x.lower_bound for x in (a, b) if x.value is None)
    if known is not None and known.value <= bound:
        return known
    return DecayIndex(lower_bound=bound)


def _num_json(x):
    if isinstance(x, Fraction):
        return {"exact": str(x), "decimal": float(x)}
    if is_exact(x):
        x = simplify(x)
        if isinstance(x, Fraction):
            return {"exact": str(x), "decimal": float(x)}
        return {"exact": str(x), "decimal": float(x)}
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return float(x)


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi); endpoints are Fractions when rational, else floats."""

    lo: object
    hi: object

    def contains(self, p) -> bool:
        return self.lo < p < self.hi

    def issubset(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def to_json(self) -> dict:
        return {"lo": _num_json(self.lo), "hi": _num_json(self.hi)}

    def __str__(self):
        def fmt(x):
            return "inf" if x == INF else str(x) if isinstance(x, Fraction) else f"{float(x):.10g}"
        return f"({fmt(self.lo)}, {fmt(self.hi)})"


@dataclass(frozen=True)
class Assumption:
    name: str
    status: str  # pass | fail | unknown
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class TopologyInput:
    """Global inputs the cross-section spectrum cannot determine.

    ``None`` in an injectivity field means unknown.
    """

    e_injective_q_plus_1: Optional[bool] = None
    e_injective_n_minus_q_plus_1: Optional[bool] = None
    kernel_dim: int = 0
    kernel_decay: Optional[float] = None
    n0: float = INF

    def __post_init__(self):
        if not isinstance(self.kernel_dim, int) or self.kernel_dim < 0:
            raise ValueError("kernel_dim must be a nonnegative integer")
        if self.kernel_dim > 0 and self.kernel_decay is not None and not self.kernel_decay > 1:
            raise ValueError("kernel_decay must exceed 1 (no zero-resonance regime)")
        if not self.n0 >= 3:
            raise ValueError("order of conicity n0 must be >= 3")


# ---------------------------------------------------------------- d and delta

def _branch_values(cs: CrossSection, q: int, sign: int, shift: int) -> list:
    c = center(cs.n, q)
    return [make_root_value(sign, c * c + a, shift) for a, _ in cs.eigen_list(q, "exact")]


class _ValuePool:
    """Membership test for root values: hashing for exact ones, tolerance for floats."""

    def __init__(self, values):
        self.exact = {simplify(v) for v in values if is_exact(v)}
        self.approx = sorted(float(v) for v in values if not is_exact(v))

    def __contains__(self, v) -> bool:
        if is_exact(v) and simplify(v) in self.exact:
            return True
        if not self.approx and is_exact(v):
            return False
        x = float(v)
        i = bisect.bisect_left(self.approx, x - FLOAT_TOL)
        if i < len(self.approx) and self.approx[i] <= x + FLOAT_TOL:
            return True
        # an exact value may only be near a float member
        return not is_exact(v) and any(values_equal(v, w) for w in self.exact)


def _membership(cs: CrossSection, q: int):
    """Predicates telling whether a root lies in the d- or delta-part of its family."""
    c = center(cs.n, q)
    neg3 = _ValuePool(_branch_values(cs, q, -1, -1))
    pos4 = _ValuePool(_branch_values(cs, q, 1, 1))

    def common(r):
        return r.value in (neg3 if r.family == "I3" else pos4)

    def in_d(r) -> bool:
        if r.family == "I1":
            return values_equal(r.value, -(c - 1))
        if r.family == "I2":
            return True
        return common(r)

    def in_delta(r) -> bool:
        if r.family == "I1":
            return True
        if r.family == "I2":
            return values_equal(r.value, c + 1)
        return common(r)

    return in_d, in_delta


def indicial_sets_d_delta(cs: CrossSection, q: int, radius) -> tuple[IndicialSet, IndicialSet]:
    """The indicial sets of d and delta as family-filtered subsets of the full set."""
    full = indicial_set(cs, q, radius)
    in_d, in_delta = _membership(cs, q)
    return full.subset(in_d), full.subset(in_delta)


# families whose roots can survive the removal of the d- (resp. delta-) part
_RELEVANT = {"d": ("I1", "I3", "I4"), "delta": ("I2", "I3", "I4")}


def _decay_index(cs: CrossSection, q: int, which: str, member) -> DecayIndex:
    fams = _RELEVANT[which]
    radius = min(family_radius(cs, q, f) for f in fams)
    iset = indicial_set(cs, q, radius, families=fams)
    negatives = [r.value for r in iset.roots if r.value < 0 and not member(r)]
    if negatives:
        return DecayIndex(value=simplify(-max(negatives)))
    if radius == INF:
        return DecayIndex.empty()
    return DecayIndex(lower_bound=radius)


def nu_indices(cs: CrossSection, q: int) -> tuple[DecayIndex, DecayIndex, DecayIndex]:
    """(nu_d, nu_delta, nu_D) from the family-wise set differences."""
    _check_degree(cs, q)
    in_d, in_delta = _membership(cs, q)
    nd = _decay_index(cs, q, "d", in_d)
    ndelta = _decay_index(cs, q, "delta", in_delta)
    return nd, ndelta, _index_min(nd, ndelta)


def _sqrt_plus(rad, shift):
    if rad == INF:
        return INF
    return simplify(make_root_value(1, rad, shift))


def nu_D_min_formula(cs: CrossSection, q: int, variant: str = "derived"):
    """Closed-form nu_D from bottoms of spectra, valid when lambda_q > 1 - (n/2-q)^2.

    ``variant="derived"`` switches the (q-1)-branch to lambda_{q-1} once
    q >= n/2 + 1, which is what the family-wise definition produces.
    ``variant="literal"`` switches only once q - 1 > n/2 + 1.
    """
    if variant not in ("derived", "literal"):
        raise ValueError("variant must be 'derived' or 'literal'")
    _check_degree(cs, q)
    n = cs.n
    c = center(n, q)
    half = Fraction(n, 2)
    lam_q, _, gamma_q = _min_triple(cs, q)
    lam_next = _min_triple(cs, q + 1)[0]
    lam_prev, mu_prev, _ = _min_triple(cs, q - 1)
    if not lam_q > 1 - c * c:
        raise GuardViolation(f"lambda_{q} = {lam_q} does not exceed {1 - c * c}")
    gamma_p = gamma_q if q > half - 1 else lam_next
    if variant == "derived":
        mu_p = mu_prev if q < half + 1 else lam_prev
    else:
        mu_p = mu_prev if q - 1 <= half + 1 else lam_prev
    return min([
        _sqrt_plus(c * c + lam_q, 1),
        _sqrt_plus((c - 1) ** 2 + gamma_p, 0),
        _sqrt_plus((c + 1) ** 2 + mu_p, 0),
    ])


# ---------------------------------------------------------------- nu_ker

def nu_ker(nu0, topo: TopologyInput, indicial: Optional[IndicialSet] = None):
    """Kernel decay index, capped at nu0 + 2.

    With a nonzero L^2 kernel the supplied decay is snapped down to the
    largest nonnegative indicial root not exceeding it (when ``indicial`` is
    given).
    """
    if not nu0 > 0:
        raise ValueError("nu_ker requires nu0 > 0")
    cap = simplify(nu0 + 2)
    if topo.kernel_dim == 0:
        return cap
    if topo.kernel_decay is None:
        raise ValueError("kernel decay required")
    decay = topo.kernel_decay
    if decay < nu0:
        raise ValueError("kernel decay cannot be below nu0")
    if indicial is not None:
        below = [v for v in indicial.nonnegative() if v <= decay]
        if float(indicial.truncation) < decay and decay < cap:
            raise InsufficientTruncation("indicial set does not reach the kernel decay")
        decay = below[-1] if below else nu0
        if not decay > 1:
            raise ValueError("snapped kernel decay must exceed 1 (no zero-resonance regime)")
    return cap if cap <= decay else simplify(decay)


# ---------------------------------------------------------------- intervals

def sufficient_interval(n: int, nu0, nu_ker_value) -> Interval:
    half = Fraction(n, 2)
    lo = divide_or_inf(n, n - positive_part(half + 1 - nu_ker_value))
    hi = divide_or_inf(n, positive_part(half - nu0))
    return Interval(simplify(lo), simplify(hi))


def case2_interval(n: int, nu_D_value, nu_ker_value) -> Interval:
    half = Fraction(n, 2)
    lo = divide_or_inf(n, n - positive_part(half + 1 - nu_ker_value))
    hi = divide_or_inf(n, positive_part(half - min(nu_D_value, nu_ker_value)))
    return Interval(simplify(lo), simplify(hi))


@dataclass(frozen=True)
class RieszReport:
    n: int
    q: int
    nu0: object
    nu_d: Optional[DecayIndex]
    nu_delta: Optional[DecayIndex]
    nu_D: Optional[DecayIndex]
    nu_ker: object
    sufficient_interval: Optional[Interval]
    sharp_interval: Optional[Interval]
    sharp_status: str  # certified | not certified | hypothesis failure
    case: Optional[int]
    candidates: dict = field(default_factory=dict)
    assumptions: tuple = ()
    radius: object = INF

    @property
    def hypothesis_ok(self) -> bool:
        return self.sharp_status != "hypothesis failure"

    def to_json(self) -> dict:
        def idx(x):
            return None if x is None else x.to_json()
        return {
            "n": self.n,
            "q": self.q,
            "nu0": _num_json(self.nu0),
            "nu_d": idx(self.nu_d),
            "nu_delta": idx(self.nu_delta),
            "nu_D": idx(self.nu_D),
            "nu_ker": None if self.nu_ker is None else _num_json(self.nu_ker),
            "sufficient_interval": None if self.sufficient_interval is None else self.sufficient_interval.to_json(),
            "sharp_interval": None if self.sharp_interval is None else self.sharp_interval.to_json(),
            "sharp_status": self.sharp_status,
            "case": self.case,
            "candidates": {k: v.to_json() for k, v in sorted(self.candidates.items())},
            "assumptions": [a.to_json() for a in self.assumptions],
            "truncation_radius": "inf" if self.radius == INF else float(self.radius),
        }


def _tri(flag: Optional[bool]) -> str:
    return "unknown" if flag is None else ("yes" if flag else "no")


def riesz_interval(cs: CrossSection, q: int, topo: TopologyInput) -> RieszReport:
    """Sufficient and, when certifiable, sharp L^p interval for the Riesz transform on q-forms."""
    from .torsion.conditions import check_no_resonance_sufficient

    _check_degree(cs, q)
    n = cs.n
    half = Fraction(n, 2)
    iset = full_indicial_set(cs, q)
    hyp = check_hypothesis_0notindroot(cs, q, iset)
    audit = [Assumption("0 not an indicial root", "pass" if hyp.passed else "fail",
                        "; ".join(hyp.failing) or f"nu0 = {hyp.nu0}")]
    res = check_no_resonance_sufficient(cs, q)
    audit.append(Assumption(
        "no zero-resonance", "pass" if res.guaranteed else "unknown",
        "guaranteed by the cross-section spectrum" if res.guaranteed
        else "input assumption, not verified: " + res.reason))
    if not hyp.passed:
        return RieszReport(n, q, hyp.nu0, None, None, None, None, None, None,
                           "hypothesis failure", None, {}, tuple(audit))

    v0 = hyp.nu0
    vk = nu_ker(v0, topo, iset)
    audit.append(Assumption(
        "kernel decay", "pass" if topo.kernel_dim == 0 else "unknown",
        "trivial L^2 kernel" if topo.kernel_dim == 0
        else f"user-supplied decay {topo.kernel_decay}, snapped to {vk}"))
    suff = sufficient_interval(n, v0, vk)

    conic_ok = topo.n0 > v0 + 2 or v0 >= half
    audit.append(Assumption("order of conicity", "pass" if conic_ok else "fail",
                            f"n0 = {topo.n0}, nu0 + 2 = {float(v0 + 2):.6g}"))

    low_branch = q < half - 1
    high_branch = q > half + 1
    if low_branch or high_branch:
        # ker e_k is the image of H^(k-1)(N), so b_(k-1)(N) = 0 forces injectivity
        k = q + 1 if low_branch else n - q + 1
        flag = topo.e_injective_q_plus_1 if low_branch else topo.e_injective_n_minus_q_plus_1
        detail = _tri(flag)
        if cs.harmonic(k - 1) == 0:
            if flag is False:
                raise ValueError(f"e_{k} cannot be non-injective when b_{k - 1}(N) = 0")
            flag, detail = True, f"implied by b_{k - 1}(N) = 0"
        audit.append(Assumption(f"e_{k} injective",
                                {None: "unknown", True: "pass", False: "fail"}[flag], detail))
    else:
        flag = True

    nd, ndelta, nD = nu_indices(cs, q)

    def case2():
        if nD.is_empty:
            eff = vk
        elif nD.value is not None:
            eff = min(nD.value, vk)
        elif nD.lower_bound >= vk or nD.lower_bound >= half:
            eff = vk if nD.lower_bound >= vk else half
        else:
            raise InsufficientTruncation(
                f"nu_D is only known to be >= {nD.lower_bound}; extend the spectra")
        return case2_interval(n, eff, vk)

    candidates = {}
    if flag is None:
        candidates = {"case 1": suff, "case 2": case2()}
        case, sharp, status = None, None, "not certified"
    else:
        case = 1 if flag is False else 2
        sharp = suff if case == 1 else case2()
        status = "certified"
    if not conic_ok:
        if sharp is not None:
            candidates.setdefault(f"case {case}", sharp)
        sharp, status = None, "not certified"
    return RieszReport(n, q, v0, nd, ndelta, nD, vk, suff, sharp, status, case,
                       candidates, tuple(audit), iset.truncation)


def generic_degree_interval(n: int, q: int, kernel_present: bool) -> Interval:
    """Degree-only interval, valid whenever |q - n/2| > 1."""
    gap = abs(Fraction(n, 2) - q)
    if gap <= 1:
        raise ValueError("degree out of range: needs |q - n/2| > 1")
    half = Fraction(n, 2)
    hi = Fraction(n) / (half + 1 - gap) if half + 1 - gap > 0 else INF
    if kernel_present:
        lo = min(Fraction(2), Fraction(n) / (half - 2 + gap))
    else:
        lo = Fraction(n) / (half + gap)
    return Interval(lo, hi)


@dataclass(frozen=True)
class SobolevExponents:
    p: Fraction
    p_prime: Fraction
    assumptions: tuple = ()

    def to_json(self) -> dict:
        return {"p": _num_json(self.p), "p_prime": _num_json(self.p_prime),
                "assumptions": [a.to_json() for a in self.assumptions]}


def sobolev_exponents(n: int, nu0=None, nu_ker_value=None) -> SobolevExponents:
    """Conjugate exponents 2n/(n+2) and 2n/(n-2), with the hypothesis audit."""
    if not isinstance(n, int) or n < 3:
        raise ValueError("Sobolev exponents need n >= 3")
    audit = (
        Assumption("nu0 > 0", "unknown" if nu0 is None else ("pass" if nu0 > 0 else "fail"),
                   "" if nu0 is None else f"nu0 = {nu0}"),
        Assumption("nu_ker > 2", "unknown" if nu_ker_value is None else
                   ("pass" if nu_ker_value > 2 else "fail"),
                   "" if nu_ker_value is None else f"nu_ker = {nu_ker_value}"),
    )
    return SobolevExponents(Fraction(2 * n, n + 2), Fraction(2 * n, n - 2), audit)
