"""
Prohibition Verdicts for (scheme, degree)

Two independent restrictions on complex schemes of dividing curves of
degree m: the Rohlin-Mishachev identity for Δ, and the bound
|sig_{b/p}| + η_p <= (m-1)(m-2)/2 over every odd prime p and every b.
The bound is decided by a finite scan: profile intervals stand for all
non-exceptional primes at once, and the finitely many exceptional primes
(those dividing a nonzero c⁺ entry) are scanned individually.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import floor
from typing import Optional, Tuple

from sympy import nextprime, primefactors, primerange

from curve import interval_samples, curve_data, profile, sig_eta
from errors import BadParametersError
from exact import format_rational
from scheme import parse_scheme


class Verdict(Enum):
    NOT_PROHIBITED = "not_prohibited"
    PROHIBITED = "prohibited"
    PARITY_MISMATCH = "parity_mismatch"


@dataclass(frozen=True)
class Witness:
    p: int
    b: int
    sig: int
    eta: int
    bound: int

    @property
    def lhs(self):
        return abs(self.sig) + self.eta


@dataclass(frozen=True)
class ScanEntry:
    kind: str        # interval | point | exceptional
    where: str       # "(lo, hi)" or "b/p"
    p: int
    b: int
    sig: int
    eta: int
    lhs: int


@dataclass(frozen=True)
class ProhibitionReport:
    scheme: str
    m: int
    rm_pass: bool
    verdict: Verdict
    bound: int
    witness: Optional[Witness]
    scan: Tuple[ScanEntry, ...]

    def to_dict(self):
        return {
            "scheme": self.scheme,
            "m": self.m,
            "rm_pass": self.rm_pass,
            "verdict": self.verdict.value,
            "bound": self.bound,
            "witness": None if self.witness is None else {
                "p": self.witness.p,
                "b": self.witness.b,
                "sig": self.witness.sig,
                "eta": self.witness.eta,
                "bound": self.witness.bound,
            },
            "scan": [
                {"kind": e.kind, "where": e.where, "p": e.p, "b": e.b,
                 "sig": e.sig, "eta": e.eta, "lhs": e.lhs}
                for e in self.scan
            ],
        }


def _check_degree(m):
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise BadParametersError(f"degree must be a positive integer, got {m}")


def type_matches(scheme, m):
    """Odd-type schemes belong to odd degrees and even-type ones to even degrees"""
    return scheme.is_odd == (m % 2 == 1)


def rohlin_mishachev(scheme, m):
    """-Δ = m² - 1 (m odd) or m² (m even), with matching type parity"""
    _check_degree(m)
    if not type_matches(scheme, m):
        return False
    target = m * m - 1 if m % 2 else m * m
    return -curve_data(scheme).delta == target


def genus_bound(m):
    return (m - 1) * (m - 2) // 2


def exceptional_primes(scheme):
    """Odd primes dividing some nonzero c⁺ entry"""
    primes = set()
    for x in curve_data(scheme).c_plus:
        if x:
            primes.update(int(q) for q in primefactors(abs(x)) if q != 2)
    return sorted(primes)


def _scan(scheme, prof):
    entries = []
    bound = curve_data(scheme).max_entry
    for iv in prof.intervals:
        p, b = interval_samples(iv.lo, iv.hi, bound, count=1)[0]
        entries.append(ScanEntry(
            "interval", f"({format_rational(iv.lo)}, {format_rational(iv.hi)})",
            p, b, iv.sig, iv.eta, abs(iv.sig) + iv.eta))

    prime_points = set()
    for pt in prof.points:
        if pt.eta is None:
            continue
        p, b = pt.x.denominator, pt.x.numerator
        prime_points.add((p, b))
        entries.append(ScanEntry("point", format_rational(pt.x), p, b,
                                 pt.sig, pt.eta, abs(pt.sig) + pt.eta))

    for p in exceptional_primes(scheme):
        eta = sig_eta(scheme, p, 1).eta
        for b in range(1, (p - 1) // 2 + 1):
            if (p, b) in prime_points:
                continue
            sig = prof.sig_at(Fraction(b, p))
            entries.append(ScanEntry("exceptional", f"{b}/{p}", p, b, sig, eta, abs(sig) + eta))
    return entries


def _first_interval_hit(violating, exceptional, limit):
    """Smallest (p, b), p non-exceptional and p < limit, with b/p inside a violating interval"""
    p = 2
    while True:
        p = int(nextprime(p))
        if limit is not None and p >= limit:
            return None
        if p in exceptional:
            continue
        hits = []
        for iv in violating:
            b = floor(iv.lo * p) + 1
            if Fraction(b, p) < iv.hi:
                hits.append(b)
        if hits:
            return p, min(hits)


def mt_check(scheme, m):
    """
    Complete scan of the signature bound for degree m

    Returns
    -------
    ProhibitionReport
        PROHIBITED carries the smallest (p, b) violating the bound; the
        Rohlin-Mishachev outcome is reported alongside and does not
        affect the scan
    """
    _check_degree(m)
    bound = genus_bound(m)
    rm_pass = rohlin_mishachev(scheme, m)
    if not type_matches(scheme, m):
        return ProhibitionReport(str(scheme), m, rm_pass, Verdict.PARITY_MISMATCH, bound, None, ())

    prof = profile(scheme)
    entries = _scan(scheme, prof)

    best = min(((e.p, e.b) for e in entries if e.kind != "interval" and e.lhs > bound),
               default=None)
    violating = [iv for iv in prof.intervals if abs(iv.sig) + iv.eta > bound]
    if violating:
        hit = _first_interval_hit(violating, set(exceptional_primes(scheme)),
                                  None if best is None else best[0] + 1)
        if hit is not None and (best is None or hit < best):
            best = hit

    if best is None:
        return ProhibitionReport(str(scheme), m, rm_pass, Verdict.NOT_PROHIBITED, bound,
                                 None, tuple(entries))
    value = sig_eta(scheme, *best)
    witness = Witness(best[0], best[1], value.sig, value.eta, bound)
    return ProhibitionReport(str(scheme), m, rm_pass, Verdict.PROHIBITED, bound,
                             witness, tuple(entries))


def brute_force_check(scheme, m, max_prime):
    """
    First (p, b) in increasing order with p <= max_prime violating the bound,
    by direct evaluation at every point; None if there is none
    """
    bound = genus_bound(m)
    for p in primerange(3, max_prime + 1):
        for b in range(1, (p - 1) // 2 + 1):
            value = sig_eta(scheme, int(p), b)
            if abs(value.sig) + value.eta > bound:
                return Witness(int(p), b, value.sig, value.eta, bound)
    return None


FAMILIES = ("odd_nest", "double_nest")


def family_parameters(name, k):
    """(alpha, beta) of the degree-(2k+1) M-scheme families"""
    if isinstance(k, bool) or not isinstance(k, int):
        raise BadParametersError(f"k must be an integer, got {k!r}")
    if name == "odd_nest":
        if k < 4 or k % 3 != 1:
            raise BadParametersError("odd_nest needs k >= 4 and k = 1 mod 3")
        return (5 * k * k - k - 4) // 6, (7 * k * k - 5 * k - 2) // 6
    if name == "double_nest":
        if k < 5 or k % 3 == 1:
            raise BadParametersError("double_nest needs k >= 5 and k != 1 mod 3")
        return (7 * k * k - 5 * k - 6) // 6, (5 * k * k - k - 6) // 6
    raise BadParametersError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def family(name, k):
    """
    M-scheme of degree 2k + 1 from one of the two infinite families

    odd_nest:    J 1-<α- β+>       α = (5k² - k - 4)/6, β = (7k² - 5k - 2)/6
    double_nest: J 1+<1+<α- β+>>   α = (7k² - 5k - 6)/6, β = (5k² - k - 6)/6
    """
    alpha, beta = family_parameters(name, k)
    if name == "odd_nest":
        return parse_scheme(f"J 1-<{alpha}- {beta}+>")
    return parse_scheme(f"J 1+<1+<{alpha}- {beta}+>>")
