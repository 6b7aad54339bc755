"""
Exact Rational Linear Algebra

Matrices are numpy object arrays of `fractions.Fraction`; nothing here
touches floating point. Dense routines (Gauss-Jordan, congruence
diagonalisation) handle arbitrary matrices; the tree routines eliminate
leaves of a plumbing tree one at a time and run in linear time, which
is what keeps curve computations with hundreds of vertices fast.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from errors import (
    MalformedTreeError,
    NonIntegralCharDataError,
    NotSymmetricError,
    SingularMatrixError,
)
from graph import plumbing_matrix


def fraction_matrix(A):
    """Copy any 2-D integer/rational array-like into a Fraction object array"""
    A = np.asarray(A, dtype=object)
    if A.size == 0:
        return np.empty((0, 0), dtype=object)
    if A.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {A.shape}")
    return np.array([[Fraction(x) for x in row] for row in A], dtype=object).reshape(A.shape)


def fraction_vector(b):
    return np.array([Fraction(x) for x in b], dtype=object)


def format_rational(x):
    """'p/q' for non-integers, 'p' when the denominator is 1"""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Dense routines
# ---------------------------------------------------------------------------

def _gauss_jordan(A, B):
    """Solve A·X = B for square A (both Fraction object arrays)"""
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError(f"matrix is not square (shape = {A.shape})")
    XB = np.hstack((A, B))

    for i in range(n):
        for j in range(i, n):
            if XB[j, i] != 0:
                if i != j:
                    XB[[i, j]] = XB[[j, i]]
                break
        else:
            raise SingularMatrixError("matrix is singular")

        XB[i, :] /= XB[i, i]
        for j in range(n):
            if j != i and XB[j, i] != 0:
                XB[j, :] -= XB[j, i] * XB[i, :]

    return XB[:, n:]


def solve(A, b):
    """
    Exact solution of A·x = b

    Raises
    ------
    SingularMatrixError
    """
    A = fraction_matrix(A)
    b = fraction_vector(b).reshape(-1, 1)
    return _gauss_jordan(A, b)[:, 0]


def inverse(A):
    A = fraction_matrix(A)
    n = A.shape[0]
    I = np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object)
    return _gauss_jordan(A, I.reshape(n, n)) if n else I.reshape(0, 0)


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def sign(self):
        return self.n_plus - self.n_minus

    @property
    def nullity(self):
        return self.n_zero

    @property
    def dim(self):
        return self.n_plus + self.n_zero + self.n_minus


def inertia(A):
    """
    Inertia of a symmetric rational matrix by congruence diagonalisation

    The pivot is the remaining diagonal entry of largest magnitude (lowest
    index on ties). When every remaining diagonal entry is zero but some
    off-diagonal entry b is not, the 2x2 block [[0, b], [b, 0]] is split
    off, contributing one positive and one negative square.

    Raises
    ------
    NotSymmetricError
    """
    M = fraction_matrix(A)
    if M.shape[0] != M.shape[1] or np.any(M != M.T):
        raise NotSymmetricError("inertia needs a symmetric matrix")

    n_plus = n_minus = n_zero = 0
    active = list(range(M.shape[0]))
    while active:
        best = None
        for i in active:
            if M[i, i] != 0 and (best is None or abs(M[i, i]) > abs(M[best, best])):
                best = i
        if best is not None:
            d = M[best, best]
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            active = [r for r in active if r != best]
            if active:
                col = M[active, best]
                M[np.ix_(active, active)] -= np.outer(col, col) / d
            continue

        pair = next(((i, j) for i in active for j in active if i < j and M[i, j] != 0), None)
        if pair is None:
            n_zero += len(active)
            break
        i, j = pair
        b = M[i, j]
        n_plus += 1
        n_minus += 1
        active = [r for r in active if r not in pair]
        if active:
            ci, cj = M[active, i], M[active, j]
            M[np.ix_(active, active)] -= (np.outer(ci, cj) + np.outer(cj, ci)) / b

    return Inertia(n_plus, n_zero, n_minus)


# ---------------------------------------------------------------------------
# Tree routines
# ---------------------------------------------------------------------------

def _rooted_order(g, root=0):
    """Preorder of the tree from `root` and the parent of each vertex"""
    parent = [None] * g.size
    order, stack, seen = [], [root], {root}
    while stack:
        v = stack.pop()
        order.append(v)
        for w in g.neighbours[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append(w)
    return order, parent


def tree_solve(g, b):
    """
    Solve A_Γ·x = b by eliminating leaves towards vertex 0

    Falls back to dense Gauss-Jordan if a non-root pivot vanishes.

    Parameters
    ----------
    g : PlumbingTree
    b : sequence of rationals, one per vertex

    Returns
    -------
    numpy.ndarray of Fraction
    """
    order, parent = _rooted_order(g)
    d = [Fraction(w) for w in g.weights]
    r = [Fraction(x) for x in b]

    for v in reversed(order[1:]):
        if d[v] == 0:
            return solve(plumbing_matrix(g), b)
        p = parent[v]
        d[p] -= 1 / d[v]
        r[p] -= r[v] / d[v]

    root = order[0]
    if d[root] == 0:
        raise SingularMatrixError("plumbing matrix is singular")

    x = [Fraction(0)] * g.size
    x[root] = r[root] / d[root]
    for v in order[1:]:
        x[v] = (r[v] - x[parent[v]]) / d[v]
    return np.array(x, dtype=object)


def tree_inertia(g, subset=None):
    """
    Inertia of the plumbing matrix of the sub-forest of `g` induced on `subset`

    Leaves are eliminated one at a time. A leaf with zero pivot pairs off
    with its neighbour as a hyperbolic block, which detaches the
    neighbour's other edges without changing any other pivot.

    Parameters
    ----------
    g : PlumbingTree
    subset : iterable of vertex ids, optional
        defaults to every vertex

    Returns
    -------
    Inertia
    """
    alive = set(range(g.size)) if subset is None else set(subset)
    adj = {v: {w for w in g.neighbours[v] if w in alive} for v in alive}
    d = {v: Fraction(g.vertices[v].weight) for v in alive}
    n_plus = n_minus = n_zero = 0

    stack = sorted((v for v in alive if len(adj[v]) <= 1), reverse=True)
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        if not adj[v]:
            if d[v] > 0:
                n_plus += 1
            elif d[v] < 0:
                n_minus += 1
            else:
                n_zero += 1
            alive.discard(v)
            continue

        (u,) = adj[v]
        if d[v] != 0:
            if d[v] > 0:
                n_plus += 1
            else:
                n_minus += 1
            d[u] -= 1 / d[v]
            adj[u].discard(v)
            alive.discard(v)
            if len(adj[u]) <= 1:
                stack.append(u)
            continue

        n_plus += 1
        n_minus += 1
        alive.discard(v)
        alive.discard(u)
        for w in adj[u] - {v}:
            adj[w].discard(u)
            if len(adj[w]) <= 1:
                stack.append(w)

    if alive:
        raise MalformedTreeError("subset does not induce a forest")
    return Inertia(n_plus, n_zero, n_minus)


# ---------------------------------------------------------------------------
# Characteristic data and linking numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharData:
    """Δ = 2·s·A⁻¹·sᵗ and c = −2·s·A⁻¹ for the arrow vector s"""
    delta: int
    c: tuple
    s: tuple


def _as_integer(x, what):
    if x.denominator != 1:
        raise NonIntegralCharDataError(f"{what} = {format_rational(x)} is not an integer")
    return x.numerator


def char_data(g):
    """
    Characteristic data of a plumbing tree without arrowhead vertices

    Raises
    ------
    SingularMatrixError
    NonIntegralCharDataError
        Δ or some c entry is not an integer, or c·A_Γ ≠ −2s
    """
    if g.core != g.size:
        raise MalformedTreeError("char_data expects a tree without arrowhead vertices")
    s = g.arrow_vector()
    x = tree_solve(g, s)
    c = tuple(_as_integer(-2 * xi, f"c[{i}]") for i, xi in enumerate(x))
    delta = _as_integer(2 * sum(si * xi for si, xi in zip(s, x)), "Δ")
    if list(g.apply(c)) != [-2 * si for si in s]:
        raise NonIntegralCharDataError("c·A_Γ ≠ −2s")
    return CharData(delta=delta, c=c, s=tuple(s))


def linking_matrix(g):
    """
    Fiber linking numbers −A_Γ⁻¹

    Entry (i, j) is the linking number of circle fibers over spheres i
    and j (distinct fibers when i = j).
    """
    return -inverse(plumbing_matrix(g))


def fiber_linking(g, i, j):
    """Single entry of −A_Γ⁻¹ from one tree solve"""
    unit = [0] * g.size
    unit[j] = 1
    return -tree_solve(g, unit)[i]
