"""
Random Corpora for the Property Suites

Schemes and symmetric integer matrices drawn from a numpy Generator, so
every suite seeded from Seeds.master sees the same corpus on every run.
"""
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

from scheme import ComplexScheme, Kind, Oval


def random_scheme(rng, max_ovals, max_depth, kind=None):
    """
    Random complex scheme with at most `max_ovals` ovals nested at most
    `max_depth` deep

    Parameters
    ----------
    rng : numpy.random.Generator
    max_ovals : int
    max_depth : int
        number of nesting levels (1 = no oval inside another)
    kind : Kind, optional
        drawn uniformly when omitted; even-type schemes get at least one oval

    Returns
    -------
    ComplexScheme
    """
    if kind is None:
        kind = Kind.ODD if rng.random() < 0.5 else Kind.EVEN
    low = 1 if kind is Kind.EVEN else 0
    count = int(rng.integers(low, max_ovals + 1))

    parents, depths, signs = [], [], []
    for i in range(count):
        options = [None] + [j for j in range(i) if depths[j] < max_depth - 1]
        parent = options[int(rng.integers(len(options)))]
        parents.append(parent)
        depths.append(0 if parent is None else depths[parent] + 1)
        signs.append(1 if rng.random() < 0.5 else -1)

    def build(i):
        return Oval(signs[i], tuple(build(j) for j in range(count) if parents[j] == i))

    return ComplexScheme(kind, tuple(build(i) for i in range(count) if parents[i] is None))


def random_symmetric(rng, dim, bound):
    """Symmetric integer matrix with entries in [-bound, bound]"""
    M = rng.integers(-bound, bound + 1, size=(dim, dim))
    upper = np.triu(M)
    return upper + np.triu(M, 1).T


def random_unimodular(rng, dim, steps=None):
    """Integer matrix of determinant ±1 built from elementary row operations"""
    P = np.eye(dim, dtype=np.int64)
    if dim < 2:
        return -P if rng.random() < 0.5 else P
    for _ in range(steps or 2 * dim):
        i, j = rng.choice(dim, size=2, replace=False)
        P[i] += int(rng.integers(-2, 3)) * P[j]
    return P
