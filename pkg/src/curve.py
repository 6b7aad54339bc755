"""
Curve-Level Invariants

sig_{b/p}(C) and η_p(C) of the link of a complex scheme, the closed
forms for Δ and c, the step-function profile of the signature over
(0, 1/2) with the generic nullity nul(C), the hand formulas at p = 3 for
three one-parameter-pair families, and the even-type bound checks.
"""
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Optional, Tuple

import numpy as np
from sympy import isprime, nextprime

from cg import INF, InvariantPair, zero_structure
from errors import (
    BadParametersError,
    NotEvenTypeError,
    ProfileInconsistencyError,
)
from exact import char_data, format_rational
from graph import Role, build_gamma, build_gamma_plus
from scheme import Kind, stats

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)

# Sign(A_Γ) for every curve tree
GAMMA_SIGNATURE = 2


@dataclass(frozen=True)
class CurveData:
    """Everything a sig_eta evaluation needs, computed once per scheme"""
    stats: object
    gamma: object
    gamma_plus: object
    delta: int
    c: Tuple[int, ...]
    c_plus: Tuple[int, ...]

    @property
    def max_entry(self):
        return max(abs(x) for x in self.c_plus)


@lru_cache(maxsize=256)
def curve_data(scheme):
    gamma = build_gamma(scheme)
    data = char_data(gamma)
    gamma_plus = build_gamma_plus(gamma)
    c_plus = list(data.c) + [0] * (gamma_plus.size - gamma.size)
    for arrow in gamma_plus.arrows:
        c_plus[arrow.head] = 2 * arrow.sign
    return CurveData(
        stats=stats(scheme),
        gamma=gamma,
        gamma_plus=gamma_plus,
        delta=data.delta,
        c=data.c,
        c_plus=tuple(c_plus),
    )


def c_plus(scheme):
    """c extended by ±2 at the arrowheads of Γ⁺"""
    return curve_data(scheme).c_plus


@lru_cache(maxsize=4096)
def _zero_structure(scheme, p):
    data = curve_data(scheme)
    return zero_structure(data.gamma, data.gamma_plus, data.c_plus, p)


def _evaluate(scheme, p, b):
    data = curve_data(scheme)
    zs = _zero_structure(scheme, p)
    cp = np.array(data.c_plus, dtype=object)
    left = (b * cp) % p
    right = (-b * cp) % p
    quad = data.gamma_plus.form(left, right)
    sigma = (Fraction(2, p * p) * (quad + b * (p - 2 * b) * data.delta)
             + zs.sign - zs.e - GAMMA_SIGNATURE)
    eta = zs.frak_e + zs.nullity + len(zs.frak_z) - 2 * zs.z
    return InvariantPair(sigma, eta).integral()


def sig_eta(scheme, p, b):
    """
    sig_{b/p}(C) and η_p(C)

    Parameters
    ----------
    scheme : ComplexScheme
    p : int
        odd prime
    b : int
        1 <= b <= (p - 1) / 2

    Returns
    -------
    InvariantPair
        integers

    Raises
    ------
    BadParametersError
    """
    if isinstance(p, bool) or not isinstance(p, int) or p == 2 or not isprime(p):
        raise BadParametersError(f"p = {p} is not an odd prime")
    if not 1 <= b <= (p - 1) // 2:
        raise BadParametersError(f"b = {b} outside 1..{(p - 1) // 2}")
    return _evaluate(scheme, p, b)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def closed_form_delta(scheme):
    st = stats(scheme)
    total = st.l + 2 * (st.pi_minus - st.pi_plus)
    if scheme.kind is Kind.ODD:
        total += st.lambda_minus - st.lambda_plus
    return -4 * total


def closed_form_c(scheme):
    """
    c over v(Γ) from the scheme counts alone, in vertex order
    (u1, u2, u3, regions, ovals)
    """
    st = stats(scheme)
    diff = st.lambda_minus - st.lambda_plus
    odd = scheme.kind is Kind.ODD

    if odd:
        c = [-2 - 4 * diff, 2 * diff, 1 + 2 * diff]
    else:
        c = [-4 * diff, 2 * diff, 2 * diff]

    for r in st.regions:
        inner = r.lambda_minus - r.lambda_plus
        value = 1 + 2 * inner if odd else 2 * inner
        c.append((-1) ** r.parity * value)

    for o in st.ovals:
        arrow = (-1) ** (o.parity + 1) * o.epsilon
        value = 4 + 4 * (o.pi_minus - o.pi_plus)
        if odd:
            value -= 2 * o.epsilon
        c.append(arrow * value)
    return tuple(c)


# ---------------------------------------------------------------------------
# Step-function profile
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProfileInterval:
    lo: Fraction
    hi: Fraction
    sig: int
    eta: int

    def line(self):
        return f"({_ratio(self.lo)}, {_ratio(self.hi)}) --> ({self.sig}, {self.eta})"


@dataclass(frozen=True)
class ProfilePoint:
    x: Fraction
    sig: int
    eta: Optional[int] = None  # only for x = b/p with p prime

    def line(self):
        if self.eta is None:
            return f"{_ratio(self.x)} --> ({self.sig})"
        return f"{_ratio(self.x)} --> ({self.sig}, {self.eta})"


def _ratio(x):
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SignatureProfile:
    scheme: object
    intervals: Tuple[ProfileInterval, ...]
    points: Tuple[ProfilePoint, ...]
    nul: int

    @property
    def breakpoints(self):
        return tuple(pt.x for pt in self.points)

    def lines(self):
        """Listing in increasing order: interval, point, interval, ..."""
        out = [self.intervals[0].line()]
        for pt, iv in zip(self.points, self.intervals[1:]):
            out.append(pt.line())
            out.append(iv.line())
        return out

    def sig_at(self, x):
        """Value of the step function at a rational x in (0, 1/2)"""
        x = Fraction(x)
        if not 0 < x < HALF:
            raise BadParametersError(f"{x} is not in (0, 1/2)")
        k = bisect_right(self.breakpoints, x)
        if k and self.points[k - 1].x == x:
            return self.points[k - 1].sig
        return self.intervals[k].sig

    def to_dict(self):
        return {
            "scheme": str(self.scheme),
            "nul": self.nul,
            "intervals": [
                {"lo": format_rational(iv.lo), "hi": format_rational(iv.hi),
                 "sig": iv.sig, "eta": iv.eta}
                for iv in self.intervals
            ],
            "points": [
                {"x": format_rational(pt.x), "sig": pt.sig, "eta": pt.eta}
                for pt in self.points
            ],
            "lines": self.lines(),
        }


def candidate_breakpoints(scheme):
    """All k/d in (0, 1/2) with d the absolute value of a nonzero c⁺ entry"""
    dens = {abs(x) for x in curve_data(scheme).c_plus if x}
    return sorted({Fraction(k, d) for d in dens for k in range(1, (d + 1) // 2)})


def interval_samples(lo, hi, bound, count=2):
    """
    Sample points b/p strictly inside (lo, hi) with p an odd prime > bound

    Primes start above max(bound, 1/(hi - lo)) so that every prime used
    leaves an integer b with lo < b/p < hi.
    """
    start = max(int(bound), floor(1 / (hi - lo)))
    samples = []
    p = start
    while len(samples) < count:
        p = int(nextprime(p))
        b = floor(lo * p) + 1
        samples.append((p, b))
    return samples


def generic_nullity(scheme):
    """nul(C), the nullity away from the finitely many exceptional primes"""
    zs = _zero_structure(scheme, INF)
    return zs.frak_e + zs.nullity + len(zs.frak_z) - 2 * zs.z


@lru_cache(maxsize=64)
def profile(scheme):
    """
    Step-function profile of x -> sig_x(C) on (0, 1/2)

    Interval values come from two sig_eta evaluations at b/p with p
    larger than every |c⁺| entry. Prime-denominator breakpoints carry
    their own (sig, η_p); composite ones carry the average of the two
    one-sided values and are dropped when the signature does not jump.

    Returns
    -------
    SignatureProfile

    Raises
    ------
    ProfileInconsistencyError
        two samples in one interval disagree, or a one-sided average is
        not an integer
    """
    data = curve_data(scheme)
    nul = generic_nullity(scheme)
    cuts = candidate_breakpoints(scheme)
    ends = [Fraction(0)] + cuts + [HALF]

    raw = []
    for lo, hi in zip(ends, ends[1:]):
        values = {_evaluate(scheme, p, b) for p, b in interval_samples(lo, hi, data.max_entry)}
        if len(values) != 1:
            raise ProfileInconsistencyError(
                f"samples in ({_ratio(lo)}, {_ratio(hi)}) disagree: {sorted(values, key=str)}")
        (value,) = values
        if value.eta != nul:
            raise ProfileInconsistencyError(f"generic nullity {value.eta} != nul {nul}")
        raw.append(ProfileInterval(lo, hi, value.sig, value.eta))

    intervals, points = [], []
    current = raw[0]
    for x, right in zip(cuts, raw[1:]):
        if isprime(x.denominator):
            value = _evaluate(scheme, x.denominator, x.numerator)
            point = ProfilePoint(x, value.sig, value.eta)
        else:
            if current.sig == right.sig:
                current = ProfileInterval(current.lo, right.hi, current.sig, current.eta)
                continue
            twice = current.sig + right.sig
            if twice % 2:
                raise ProfileInconsistencyError(f"odd jump at {_ratio(x)}")
            point = ProfilePoint(x, twice // 2)
        intervals.append(current)
        points.append(point)
        current = right
    intervals.append(current)

    return SignatureProfile(scheme, tuple(intervals), tuple(points), nul)


def mirror_symmetric(prof):
    """
    sig_x = sig_{1/2 - x} as a step function

    One-sided limits must mirror everywhere. Breakpoint values are
    compared only when x and 1/2 - x are of the same kind: a prime
    denominator carries its own value, a composite one the average of
    its limits, and the two need not agree.
    """
    cuts = list(prof.breakpoints)

    def left(x):
        return prof.intervals[bisect_left(cuts, x)].sig

    def right(x):
        return prof.intervals[bisect_right(cuts, x)].sig

    ends = set(cuts) | {HALF - x for x in cuts} | {HALF}
    if any(left(x) != right(HALF - x) for x in ends):
        return False
    for x in cuts:
        y = HALF - x
        if isprime(x.denominator) == isprime(y.denominator) and prof.sig_at(x) != prof.sig_at(y):
            return False
    return True


# ---------------------------------------------------------------------------
# Hand formulas at p = 3
# ---------------------------------------------------------------------------

HAND_FAMILIES = {
    "A": "J 1-<{}>",
    "B": "J 1+<{}>",
    "C": "J 1+<1+<{}>>",
}


def family_scheme_text(family, alpha, beta):
    """Scheme string of a hand-formula family; zero counts are left out"""
    inner = " ".join(t for t, n in ((f"{alpha}-", alpha), (f"{beta}+", beta)) if n)
    return HAND_FAMILIES[family].format(inner)


def hand_formula(family, alpha, beta):
    """
    sig_{1/3} and η_3 for J 1⁻⟨α⁻ β⁺⟩ (A), J 1⁺⟨α⁻ β⁺⟩ (B), J 1⁺⟨1⁺⟨α⁻ β⁺⟩⟩ (C)

    Returns
    -------
    (int, int)

    Raises
    ------
    BadParametersError
    """
    if family not in HAND_FAMILIES:
        raise BadParametersError(f"unknown family {family!r}")
    if alpha < 0 or beta < 0 or alpha + beta == 0:
        raise BadParametersError("need alpha, beta >= 0 and alpha + beta > 0")

    case = (alpha - beta) % 3  # 0: α≡β, 1: α≡β+1, 2: α≡β-1
    d = beta - alpha
    if family == "A":
        sig = [8 * d // 3 - 2, 8 * (d + 1) // 3 - 4, 8 * (d - 1) // 3][case]
        eta = alpha + beta - 1
    elif family == "B":
        tail = beta - 3 * alpha
        sig = [-8 * d // 3 + tail + 1,
               -8 * (d + 1) // 3 + tail + 3,
               -8 * (d - 1) // 3 + tail - 2][case]
        eta = 1 if case == 2 else 0
    else:
        sig = [-8 * d // 3 - 2, 8 * (-d - 1) // 3 + 1, 8 * (-d + 1) // 3 - 5][case]
        eta = alpha + beta if case == 0 else alpha + beta - 1
    return sig, eta


# ---------------------------------------------------------------------------
# Even type
# ---------------------------------------------------------------------------

def _require_even(scheme):
    if scheme.kind is not Kind.EVEN:
        raise NotEvenTypeError(f"{scheme} is of odd type")


def even_sig(scheme):
    """
    sig(C) = sig_{1/4}(C) for a non-empty even-type scheme

    Raises
    ------
    NotEvenTypeError
    ProfileInconsistencyError
        the step function jumps at 1/4
    """
    _require_even(scheme)
    prof = profile(scheme)
    if QUARTER in prof.breakpoints:
        raise ProfileInconsistencyError("signature jumps at 1/4")
    return prof.sig_at(QUARTER)


@dataclass(frozen=True)
class EvenBoundsReport:
    scheme: str
    case: str
    sig: int
    nul: int
    l: int
    n: int
    n_plus: int
    n_zero: int
    n_minus: int
    pi_plus: int
    pi_minus: int
    sigma_limit: int
    eta_limit: int
    lhs: int
    rhs: int
    bound_ok: bool
    parity_ok: bool

    @property
    def passed(self):
        return self.bound_ok and self.parity_ok


def even_bounds_check(scheme):
    """
    Bound on (sig, nul) of a non-empty even-type scheme

    With σ₋₁ = 2(Π⁺ − Π⁻) − n − n₀ − 2n₋ (one less when l is odd and there
    are several outer ovals) and η₋₁ = l − n₊ − n₋ − 1, + 1 or + 0 in the
    cases l even / l odd with one outer oval / l odd with several, the
    checks are |sig − σ₋₁| + nul <= η₋₁ and sig + nul ≡ l − 1 (mod 2).
    """
    _require_even(scheme)
    st = stats(scheme)
    sig = even_sig(scheme)
    nul = profile(scheme).nul

    if st.l % 2 == 0:
        case, shift, offset = "l_even", 0, -1
    elif st.outer_ovals == 1:
        case, shift, offset = "l_odd_one_outer", 0, 1
    else:
        case, shift, offset = "l_odd_many_outer", 1, 0

    sigma_limit = 2 * (st.pi_plus - st.pi_minus) - st.n - st.n_zero - 2 * st.n_minus - shift
    eta_limit = st.l - st.n_plus - st.n_minus + offset
    lhs = abs(sig - sigma_limit) + nul
    return EvenBoundsReport(
        scheme=str(scheme),
        case=case,
        sig=sig,
        nul=nul,
        l=st.l,
        n=st.n,
        n_plus=st.n_plus,
        n_zero=st.n_zero,
        n_minus=st.n_minus,
        pi_plus=st.pi_plus,
        pi_minus=st.pi_minus,
        sigma_limit=sigma_limit,
        eta_limit=eta_limit,
        lhs=lhs,
        rhs=eta_limit,
        bound_ok=lhs <= eta_limit,
        parity_ok=(sig + nul - (st.l - 1)) % 2 == 0,
    )


# ---------------------------------------------------------------------------
# Shape of 𝔷
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    scheme: str
    p: int
    frak_z: Tuple[str, ...]
    frak_z_edges: Tuple[Tuple[int, int], ...]
    violations: Tuple[str, ...]

    @property
    def conforms(self):
        return not self.violations


def structure_check(scheme, p):
    """
    Compare 𝔷_{c,p} with its predicted shape

    Odd type: no edges, only region vertices and possibly u3. Even type
    with Λ⁻ ≢ Λ⁺: no edges, only non-outer regions. Even type with
    Λ⁻ ≡ Λ⁺: u1, u2, u3 and their two edges, plus R1 and the edge u1–R1
    exactly when Π⁺_o − Π⁻_o ≡ 1 for every outer oval o; all other
    vertices are non-outer regions.
    """
    data = curve_data(scheme)
    st = data.stats
    zs = _zero_structure(scheme, p)
    vertices = data.gamma.vertices
    members = set(zs.frak_z)
    edges = {tuple(sorted(e)) for e in zs.frak_z_edges}
    violations = []

    def is_region(v, outer_ok):
        return vertices[v].role is Role.REGION and (outer_ok or vertices[v].ref != 0)

    if scheme.kind is Kind.ODD:
        if edges:
            violations.append(f"edges present: {sorted(edges)}")
        for v in sorted(members):
            if not (is_region(v, True) or vertices[v].role is Role.U3):
                violations.append(f"vertex {vertices[v].label} not a region or u3")
    elif (st.lambda_minus - st.lambda_plus) % p:
        if edges:
            violations.append(f"edges present: {sorted(edges)}")
        for v in sorted(members):
            if not is_region(v, False):
                violations.append(f"vertex {vertices[v].label} not a non-outer region")
    else:
        expected_edges = {(0, 1), (0, 2)}
        outer = [o for o in st.ovals if o.parent is None]
        with_r1 = all((o.pi_plus - o.pi_minus - 1) % p == 0 for o in outer)
        for v in (0, 1, 2):
            if v not in members:
                violations.append(f"missing {vertices[v].label}")
        if with_r1:
            expected_edges.add((0, 3))
            if 3 not in members:
                violations.append("missing outer region")
        elif 3 in members:
            violations.append("outer region present")
        if edges != expected_edges:
            violations.append(f"edges {sorted(edges)} != {sorted(expected_edges)}")
        for v in sorted(members - {0, 1, 2, 3}):
            if not is_region(v, False):
                violations.append(f"vertex {vertices[v].label} not a non-outer region")

    return StructureReport(
        scheme=str(scheme),
        p=p,
        frak_z=tuple(vertices[v].label for v in sorted(members)),
        frak_z_edges=tuple(sorted(edges)),
        violations=tuple(violations),
    )
