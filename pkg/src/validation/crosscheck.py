"""
Cross-Check Validation (random schemes, both types)

For every scheme of a seeded random corpus:
- closed-form Δ and c equal the values solved from A_Γ
- c·A_Γ = −2s, c⁺·A_Γ⁺ vanishes on v(Γ), Sign(A_Γ) = 2 (tree and dense)
- for p in Corpus.crosscheck_primes and every b: sig + η ≡ β₀ − 1 (mod 2),
  η <= β₀ − 1, η independent of b, curve evaluation equals the graph-link
  engine at a = 2b, and 𝔷 has its predicted shape
- the profile is consistent; nul = 0 for odd type and the profile is
  mirror symmetric about 1/4 for even type

Two further sections compare the prohibition scan with brute force
evaluation at every p <= Corpus.brute_max_prime, and round-trip random
schemes through render/parse.

Acceptance gate: zero failures, each section inside its time budget
"""
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
from tqdm import tqdm

sys.path.insert(0, str(Path(__file__).parent.parent))

from cg import graphlink_sigma_eta
from config import Corpus, Gates, Seeds
from curve import (
    GAMMA_SIGNATURE,
    closed_form_c,
    closed_form_delta,
    curve_data,
    mirror_symmetric,
    profile,
    sig_eta,
    structure_check,
)
from errors import CurveSigError
from exact import inertia, tree_inertia
from graph import plumbing_matrix
from prohibit import brute_force_check, mt_check
from scheme import Kind, parse_scheme, render_scheme
from validation.corpus import random_scheme
from validation.suite import banner, finish_suite, main, new_log, run_section


def scheme_properties(scheme, primes):
    """
    Every per-scheme property of the cross-check

    Returns
    -------
    checks : int
    failures : list of dict
    """
    failures = []
    checks = 0

    def expect(ok, check, **details):
        nonlocal checks
        checks += 1
        if not ok:
            failures.append(dict({"scheme": str(scheme), "check": check}, **details))

    data = curve_data(scheme)
    gamma, gamma_plus = data.gamma, data.gamma_plus
    st = data.stats

    expect(closed_form_delta(scheme) == data.delta, "closed_form_delta",
           closed=closed_form_delta(scheme), solved=data.delta)
    expect(closed_form_c(scheme) == data.c, "closed_form_c",
           closed=list(closed_form_c(scheme)), solved=list(data.c))
    s = gamma.arrow_vector()
    expect(list(gamma.apply(data.c)) == [-2 * x for x in s], "c_times_A")
    restricted = gamma_plus.apply(data.c_plus)[:gamma.size]
    expect(not any(restricted), "c_plus_characteristic")
    expect(tree_inertia(gamma).sign == GAMMA_SIGNATURE, "tree_signature")
    expect(inertia(plumbing_matrix(gamma)).sign == GAMMA_SIGNATURE, "dense_signature")

    for p in primes:
        etas = set()
        for b in range(1, (p - 1) // 2 + 1):
            value = sig_eta(scheme, p, b)
            etas.add(value.eta)
            expect((value.sig + value.eta - (st.beta0 - 1)) % 2 == 0, "parity",
                   p=p, b=b, sig=value.sig, eta=value.eta)
            expect(value.eta <= st.beta0 - 1, "nullity_bound", p=p, b=b, eta=value.eta)
            link = graphlink_sigma_eta(gamma, 2 * b, p)
            expect(Fraction(link.sigma) == value.sig and link.eta == value.eta,
                   "graph_link_engine", p=p, b=b,
                   curve=[value.sig, value.eta], link=[str(link.sigma), link.eta])
        expect(len(etas) == 1, "eta_independent_of_b", p=p, etas=sorted(etas))
        report = structure_check(scheme, p)
        expect(report.conforms, "frak_z_shape", p=p, violations=list(report.violations))

    prof = profile(scheme)
    if scheme.kind is Kind.ODD:
        expect(prof.nul == 0, "odd_nul", nul=prof.nul)
    else:
        expect(mirror_symmetric(prof), "mirror_symmetry")
    return checks, failures


def check_corpus(schemes):
    checks, failures = 0, []
    for scheme in tqdm(schemes, desc="cross-check"):
        try:
            n, bad = scheme_properties(scheme, Corpus.crosscheck_primes)
        except CurveSigError as e:
            n, bad = 1, [{"scheme": str(scheme), "check": "raised", "error": str(e)}]
        checks += n
        failures += bad
    return checks, failures


def check_scan_completeness(cases):
    """mt_check's witness against the first direct violation with p <= brute_max_prime"""
    failures = []
    for scheme, m in tqdm(cases, desc="scan vs brute force"):
        report = mt_check(scheme, m)
        brute = brute_force_check(scheme, m, Corpus.brute_max_prime)
        w = report.witness
        if w is None or w.p > Corpus.brute_max_prime:
            expected = None
        else:
            expected = (w.p, w.b)
        got = None if brute is None else (brute.p, brute.b)
        if got != expected:
            failures.append({"scheme": str(scheme), "m": m,
                             "scan": expected, "brute": got})
    return len(cases), failures


def check_roundtrip(schemes):
    failures = []
    for scheme in schemes:
        text = render_scheme(scheme)
        again = parse_scheme(text)
        if again != scheme or render_scheme(again) != text:
            failures.append({"scheme": text, "reparsed": render_scheme(again)})
    return len(schemes), failures


def run_crosscheck():
    """
    Run the cross-check, scan-completeness and round-trip sections

    Returns
    -------
    results : dict
    passed : bool
    """
    rng = np.random.default_rng(Seeds.master)

    banner("CROSS-CHECK VALIDATION (random complex schemes)")
    print(f"\nSchemes: {Corpus.crosscheck_schemes} (l <= {Corpus.crosscheck_max_ovals}, "
          f"depth <= {Corpus.crosscheck_max_depth})")
    print(f"Primes: {Corpus.crosscheck_primes}")
    log = new_log("crosscheck")

    schemes = [random_scheme(rng, Corpus.crosscheck_max_ovals, Corpus.crosscheck_max_depth)
               for _ in range(Corpus.crosscheck_schemes)]
    odd = sum(1 for s in schemes if s.kind is Kind.ODD)
    print(f"Corpus: {odd} odd, {len(schemes) - odd} even")

    # small degrees of the matching type, so that both verdicts occur
    cases = []
    for scheme in schemes[:Corpus.brute_schemes]:
        start = 1 if scheme.is_odd else 2
        cases.append((scheme, start + 2 * int(rng.integers(0, 3))))

    trips = [random_scheme(rng, Corpus.roundtrip_max_ovals, Corpus.roundtrip_max_depth)
             for _ in range(Corpus.crosscheck_schemes)]

    sections = [
        run_section("crosscheck", Gates.crosscheck_s, lambda: check_corpus(schemes), log),
        run_section("scan_completeness", Gates.scan_completeness_s,
                    lambda: check_scan_completeness(cases), log),
        run_section("roundtrip", Gates.roundtrip_s, lambda: check_roundtrip(trips), log),
    ]
    return finish_suite("crosscheck", sections, log,
                        corpus={"schemes": len(schemes), "odd": odd, "even": len(schemes) - odd})


if __name__ == "__main__":
    main(run_crosscheck, "Cross-check validation")
