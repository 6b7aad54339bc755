"""
Exact-Inertia Oracle

Congruence diagonalisation (exact.inertia) against an independent count:
the characteristic polynomial of a symmetric matrix has only real roots,
so Descartes' rule of signs counts its positive and negative roots
exactly. Also checks that inertia is invariant under PᵗAP for unimodular
P, and that the leaf-elimination tree routine agrees with the dense one
on random weighted forests.

Acceptance gate: zero failures inside Gates.inertia_oracle_s
"""
import sys
from pathlib import Path

import numpy as np
from sympy import Matrix, symbols
from tqdm import tqdm

sys.path.insert(0, str(Path(__file__).parent.parent))

from config import Corpus, Gates, Seeds
from exact import Inertia, inertia, tree_inertia
from graph import plumbing_matrix, tree_from_weights
from validation.corpus import random_symmetric, random_unimodular
from validation.suite import banner, finish_suite, main, new_log, run_section

x = symbols("x")


def _sign_changes(coeffs):
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def charpoly_inertia(M):
    """(n+, n0, n-) from the characteristic polynomial by Descartes' rule"""
    coeffs = Matrix(M.tolist()).charpoly(x).all_coeffs()
    n_zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        n_zero += 1
    n_plus = _sign_changes(coeffs)
    degree = len(coeffs) - 1
    mirrored = [c * (-1) ** (degree - i) for i, c in enumerate(coeffs)]
    return Inertia(n_plus, n_zero, _sign_changes(mirrored))


def check_matrices(rng):
    failures = []
    for _ in tqdm(range(Corpus.inertia_matrices), desc="inertia oracle"):
        dim = int(rng.integers(1, Corpus.inertia_max_dim + 1))
        M = random_symmetric(rng, dim, Corpus.inertia_entry_bound)
        got = inertia(M)
        want = charpoly_inertia(M)
        if got != want:
            failures.append({"matrix": M.tolist(), "congruence": list(_triple(got)),
                             "charpoly": list(_triple(want))})
            continue
        P = random_unimodular(rng, dim)
        moved = inertia(P.T.astype(object) @ M.astype(object) @ P.astype(object))
        if moved != got:
            failures.append({"matrix": M.tolist(), "P": P.tolist(),
                             "congruent": list(_triple(moved))})
    return 2 * Corpus.inertia_matrices, failures


def check_trees(rng):
    failures = []
    for _ in range(Corpus.inertia_matrices):
        n = int(rng.integers(1, 2 * Corpus.inertia_max_dim + 1))
        weights = [int(w) for w in rng.integers(-3, 4, size=n)]
        edges = [(int(rng.integers(0, i)), i) for i in range(1, n)]
        g = tree_from_weights(weights, edges)
        subset = [v for v in range(n) if rng.random() < 0.7]
        A = plumbing_matrix(g)
        dense = inertia(A[np.ix_(subset, subset)])
        tree = tree_inertia(g, subset)
        if dense != tree:
            failures.append({"weights": weights, "edges": edges, "subset": subset,
                             "dense": list(_triple(dense)), "tree": list(_triple(tree))})
    return Corpus.inertia_matrices, failures


def _triple(value):
    return value.n_plus, value.n_zero, value.n_minus


def run_inertia_oracle():
    """
    Returns
    -------
    results : dict
    passed : bool
    """
    rng = np.random.default_rng(Seeds.master + 2)

    banner("EXACT-INERTIA ORACLE")
    print(f"\nMatrices: {Corpus.inertia_matrices} (dim <= {Corpus.inertia_max_dim}, "
          f"|entries| <= {Corpus.inertia_entry_bound})")
    log = new_log("inertia_oracle")

    sections = [
        run_section("charpoly_oracle", Gates.inertia_oracle_s, lambda: check_matrices(rng), log),
        run_section("tree_inertia", Gates.inertia_oracle_s, lambda: check_trees(rng), log),
    ]
    return finish_suite("inertia_oracle", sections, log)


if __name__ == "__main__":
    main(run_inertia_oracle, "Exact-inertia oracle")
