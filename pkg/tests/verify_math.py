"""
Mathematical Verification: Definitions → Numbers

Recomputes sig_{b/p} and η_p from the plumbing matrix alone, with sympy
rationals: dense inverse for c and Δ, characteristic polynomials for
every signature and nullity. None of the tree routines are used. The
results are compared with the library and with the golden values.
The Casson-Gordon pair of generic weighted trees gets the same
treatment: its own zero-vertex counting and dense inertia.
"""
import json
import sys
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np
from sympy import Matrix, Rational, symbols, zeros

from harness import run_tests

from cg import cg_sigma_eta
from config import Seeds
from curve import sig_eta
from graph import build_gamma, plumbing_matrix, tree_from_weights
from scheme import parse_scheme

GOLDEN = Path(__file__).parent / "golden" / "sample_profile.json"
PRIMES = (3, 5, 7, 11, 13)
SCHEMES = ("J", "J 1-<2-> 2+", "1+<1->", "J 1-<1+>", "J 1+<1+<2- 1+>>", "2+<1-> 1-")

t = symbols("t")


def signature_nullity(M):
    """(Sign, nullity) of a symmetric sympy matrix via Descartes' rule"""
    if M.rows == 0:
        return 0, 0
    coeffs = M.charpoly(t).all_coeffs()
    nullity = 0
    while coeffs[-1] == 0:
        coeffs.pop()
        nullity += 1

    def changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    degree = len(coeffs) - 1
    positive = changes(coeffs)
    negative = changes([c * (-1) ** (degree - i) for i, c in enumerate(coeffs)])
    return positive - negative, nullity


@lru_cache(maxsize=None)
def dense_data(text):
    """c⁺, Δ, A_Γ, A_Γ⁺ and Sign(A_Γ) from sympy rationals"""
    g = build_gamma(parse_scheme(text))
    n = g.size
    A = Matrix(plumbing_matrix(g).tolist())
    s = Matrix([g.arrow_vector()])
    Ainv = A.inv()
    c = -2 * s * Ainv
    delta = 2 * (s * Ainv * s.T)[0, 0]
    assert all(v.is_integer for v in c) and delta.is_integer

    N = n + len(g.arrows)
    Ap = zeros(N, N)
    Ap[:n, :n] = A
    for k, arrow in enumerate(g.arrows):
        Ap[arrow.tail, n + k] = Ap[n + k, arrow.tail] = 1
    cp = [int(v) for v in c] + [2 * a.sign for a in g.arrows]
    return A, Ap, cp, delta, signature_nullity(A)[0], n


def dense_invariants(text, p, b):
    """
    sig and η of a scheme straight from the definitions

    c = -2 s A⁻¹, Δ = 2 s A⁻¹ sᵗ; Γ⁺ adds one vertex per arrow with
    c⁺ = 2·sign there; z counts Γ-vertices with c⁺ ≡ 0, 𝔷 those whose
    Γ⁺-neighbours all vanish too, e the Γ⁺-edges with no vanishing end.
    """
    A, Ap, cp, delta, sign_gamma, n = dense_data(text)
    N = len(cp)
    zero = [v % p == 0 for v in cp]
    edges = [(i, j) for i in range(N) for j in range(i + 1, N) if Ap[i, j] != 0]
    Z = [v for v in range(n) if zero[v]]
    frak = [v for v in Z if all(zero[w] for w in range(N) if w != v and Ap[v, w] != 0)]
    e = sum(1 for i, j in edges if not zero[i] and not zero[j])
    frak_e = len(edges) - e

    sign_frak, nullity_frak = signature_nullity(A.extract(frak, frak))

    x = Matrix([[(b * v) % p for v in cp]])
    y = Matrix([[(-b * v) % p for v in cp]])
    quad = (x * Ap * y.T)[0, 0]
    sig = Rational(2, p * p) * (quad + b * (p - 2 * b) * delta) + sign_frak - e - sign_gamma
    eta = frak_e + nullity_frak + len(frak) - 2 * len(Z)
    return sig, eta


def verify_against_library():
    """Dense recompute equals sig_eta on every (scheme, p, b)"""
    mismatches = []
    for text in SCHEMES:
        scheme = parse_scheme(text)
        for p in PRIMES:
            for b in range(1, (p - 1) // 2 + 1):
                dense = dense_invariants(text, p, b)
                value = sig_eta(scheme, p, b)
                if dense != (value.sig, value.eta):
                    mismatches.append((text, p, b, dense, (value.sig, value.eta)))
    return mismatches


def test_dense_recompute_matches_library():
    assert verify_against_library() == []


def test_dense_recompute_golden_value():
    with open(GOLDEN) as f:
        ref = json.load(f)["invariants"]
    assert dense_invariants("J 1-<2-> 2+", ref["p"], ref["b"]) == (ref["sig"], ref["eta"])


def dense_cg(weights, edges, c, p):
    """
    Casson-Gordon (σ, η) of a weighted tree read straight off the formula

    σ = (2/p²) r(c) A r(-c)ᵗ + Sign(A_𝔷) - e - Sign(A),
    η = nullity(A_𝔷) + |𝔷| - 2|Z| + n - e - 1, with Z the vertices where
    c ≡ 0, 𝔷 those of Z with every neighbour in Z, e the edges with no
    end in Z.
    """
    n = len(weights)
    A = zeros(n, n)
    for v, w in enumerate(weights):
        A[v, v] = w
    for i, j in edges:
        A[i, j] = A[j, i] = 1
    zero = [x % p == 0 for x in c]
    Z = [v for v in range(n) if zero[v]]
    frak = [v for v in Z if all(zero[w] for w in range(n) if w != v and A[v, w] != 0)]
    e = sum(1 for i, j in edges if not zero[i] and not zero[j])

    x = Matrix([[v % p for v in c]])
    y = Matrix([[-v % p for v in c]])
    sign_frak, nullity_frak = signature_nullity(A.extract(frak, frak))
    sigma = Rational(2, p * p) * (x * A * y.T)[0, 0] + sign_frak - e - signature_nullity(A)[0]
    eta = nullity_frak + len(frak) - 2 * len(Z) + n - e - 1
    return Fraction(int(sigma.p), int(sigma.q)), eta, len(frak)


def random_cg_cases(count, p, max_vertices=6):
    """Random nonsingular trees with det ≡ 0 (mod p) and c = w·adj(A), c ≢ 0"""
    rng = np.random.default_rng(Seeds.master + 3)
    cases = []
    while len(cases) < count:
        n = int(rng.integers(2, max_vertices + 1))
        weights = [int(w) for w in rng.integers(-3, 4, size=n)]
        edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
        A = zeros(n, n)
        for v, w in enumerate(weights):
            A[v, v] = w
        for i, j in edges:
            A[i, j] = A[j, i] = 1
        det = A.det()
        if det == 0 or det % p:
            continue
        w = Matrix([[int(x) for x in rng.integers(-2, 3, size=n)]])
        c = [int(v) for v in w * A.adjugate()]
        if all(v % p == 0 for v in c):
            continue
        cases.append((weights, edges, c))
    return cases


def test_cg_matches_formula_on_random_trees():
    seen_e = 0
    for p in (3, 5):
        for weights, edges, c in random_cg_cases(25, p):
            sigma, eta, _ = dense_cg(weights, edges, c, p)
            value = cg_sigma_eta(tree_from_weights(weights, edges), c, p)
            assert (value.sigma, value.eta) == (sigma, eta), (weights, edges, c, p)
            seen_e += any(c[i] % p and c[j] % p for i, j in edges)
    assert seen_e > 0


def test_cg_matches_formula_with_nonempty_frak_z():
    # vertex 3 and its only neighbour 1 vanish mod 3; edge (0, 4) has no zero end
    weights = [2, 1, 3, -2, 2]
    edges = [(0, 1), (1, 2), (1, 3), (0, 4)]
    c = [1, 0, -1, 0, 1]
    sigma, eta, frak = dense_cg(weights, edges, c, 3)
    assert frak == 1
    value = cg_sigma_eta(tree_from_weights(weights, edges), c, 3)
    assert (value.sigma, value.eta) == (sigma, eta)


def test_dense_signature_of_gamma():
    for text in SCHEMES:
        g = build_gamma(parse_scheme(text))
        assert signature_nullity(Matrix(plumbing_matrix(g).tolist())) == (2, 0)


def main():
    """Run all mathematical verifications"""
    return run_tests(globals(), "MATHEMATICAL VERIFICATION SUITE")


if __name__ == "__main__":
    sys.exit(main())
