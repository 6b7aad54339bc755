"""
Casson-Gordon invariants of graph manifolds and signatures of graph links

Both invariants read off the same zero structure of a vector on the
tree: which vertices vanish mod p (or vanish outright at p = ∞), which
of those have only vanishing neighbours, and how many edges join two
non-vanishing vertices.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from sympy import isprime

from errors import (
    BadParametersError,
    EmptyLinkError,
    NonIntegralInvariantError,
    NonOddPrimeError,
    NotCharacteristicError,
    UndefinedResidueError,
    ZeroVectorError,
)
from exact import tree_inertia, tree_solve
from graph import build_gamma_plus

INF = math.inf


def check_odd_prime(p):
    if isinstance(p, bool) or not isinstance(p, int) or p == 2 or not isprime(p):
        raise NonOddPrimeError(f"p = {p} is not an odd prime")


def residue(x, p):
    """
    r_p(x): the representative in [0, p) of a rational with p-coprime denominator

    Raises
    ------
    UndefinedResidueError
        the denominator of x is divisible by p
    """
    x = Fraction(x)
    if x.denominator % p == 0:
        raise UndefinedResidueError(f"{x} has no residue mod {p}")
    return (x.numerator * pow(x.denominator, -1, p)) % p


def vanishes(x, p):
    """x ≡ 0 mod p, or x = 0 when p is ∞"""
    if p == INF:
        return x == 0
    return residue(x, p) == 0


@dataclass(frozen=True)
class ZeroStructure:
    """
    z, 𝔷, e and 𝔈 of a vector on Γ⁺ at a prime (or ∞)

    `zero_vertices` are the Γ-vertices that vanish (z = their count);
    `frak_z` those with no non-vanishing Γ⁺-neighbour; `sign` and
    `nullity` belong to the plumbing matrix of the forest 𝔷.
    """
    p: Union[int, float]
    zero_vertices: Tuple[int, ...]
    frak_z: Tuple[int, ...]
    frak_z_edges: Tuple[Tuple[int, int], ...]
    e: int
    frak_e: int
    sign: int
    nullity: int

    @property
    def z(self):
        return len(self.zero_vertices)


def zero_structure(gamma, gamma_plus, c_plus, p):
    """
    Parameters
    ----------
    gamma : PlumbingTree
        Γ; its vertices are the first vertices of `gamma_plus`
    gamma_plus : PlumbingTree
        Γ⁺ (pass `gamma` again when there are no arrowheads)
    c_plus : sequence of rationals indexed by v(Γ⁺)
    p : odd prime or INF

    Returns
    -------
    ZeroStructure
    """
    zero = [vanishes(x, p) for x in c_plus]
    zero_vertices = tuple(v for v in range(gamma.size) if zero[v])
    frak = tuple(v for v in zero_vertices if all(zero[w] for w in gamma_plus.neighbours[v]))
    members = set(frak)
    frak_edges = tuple((i, j) for i, j in gamma.edges if i in members and j in members)
    e = sum(1 for i, j in gamma_plus.edges if not zero[i] and not zero[j])
    form = tree_inertia(gamma, frak)
    return ZeroStructure(
        p=p,
        zero_vertices=zero_vertices,
        frak_z=frak,
        frak_z_edges=frak_edges,
        e=e,
        frak_e=len(gamma_plus.edges) - e,
        sign=form.sign,
        nullity=form.nullity,
    )


@dataclass(frozen=True)
class InvariantPair:
    sigma: Union[int, Fraction]
    eta: int

    @property
    def sig(self):
        """Curve-level name of sigma"""
        return self.sigma

    def integral(self):
        """Same pair with sigma as an int; raises if sigma is not integral"""
        sigma = Fraction(self.sigma)
        if sigma.denominator != 1:
            raise NonIntegralInvariantError(f"sigma = {sigma} is not an integer")
        return InvariantPair(sigma.numerator, int(self.eta))


def is_characteristic(gamma, c, p):
    """Per-vertex flags: (c·A_Γ)_v ≡ 0 mod p"""
    return [residue(x, p) == 0 for x in gamma.apply(c)]


def cg_sigma_eta(gamma, c, p):
    """
    Casson-Gordon signature and nullity of M_Γ for a p-characteristic vector

    Parameters
    ----------
    gamma : PlumbingTree
    c : sequence of int
    p : odd prime

    Returns
    -------
    InvariantPair
        sigma is an exact rational

    Raises
    ------
    NonOddPrimeError, NotCharacteristicError, ZeroVectorError
    """
    check_odd_prime(p)
    c = [int(x) for x in c]
    flags = is_characteristic(gamma, c, p)
    if not all(flags):
        bad = [v for v, ok in enumerate(flags) if not ok]
        raise NotCharacteristicError(f"c·A_Γ is not 0 mod {p} at vertices {bad}")
    if all(x % p == 0 for x in c):
        raise ZeroVectorError(f"c vanishes mod {p}")

    zs = zero_structure(gamma, gamma, c, p)
    x = [x % p for x in c]
    y = [-x % p for x in c]
    sigma = (Fraction(2, p * p) * gamma.form(x, y)
             + zs.sign - zs.e - tree_inertia(gamma).sign)
    eta = zs.nullity + len(zs.frak_z) - 2 * zs.z + gamma.size - zs.e - 1
    return InvariantPair(sigma, eta)


def graphlink_sigma_eta(gamma, a, p):
    """
    Signature σ_{a/p} and nullity η_p of the graph link of a decorated tree

    Parameters
    ----------
    gamma : PlumbingTree
        nonsingular tree with at least one (unconverted) arrow
    a : int
        0 < a < p
    p : odd prime

    Returns
    -------
    InvariantPair
        sigma is an exact rational

    Raises
    ------
    NonOddPrimeError, BadParametersError, EmptyLinkError,
    SingularMatrixError, UndefinedResidueError
    """
    check_odd_prime(p)
    if not 0 < a < p:
        raise BadParametersError(f"need 0 < a < p, got a = {a}, p = {p}")
    if not gamma.arrows:
        raise EmptyLinkError("tree carries no arrows")

    s = gamma.arrow_vector()
    x = tree_solve(gamma, s)
    delta = sum(si * xi for si, xi in zip(s, x))
    gp = build_gamma_plus(gamma)
    u_plus = [Fraction(0)] * gp.size
    for v in range(gamma.size):
        u_plus[v] = -x[v]
    for arrow in gp.arrows:
        u_plus[arrow.head] = Fraction(arrow.sign)

    left = [residue(a * u, p) for u in u_plus]
    right = [residue(-a * u, p) for u in u_plus]
    zs = zero_structure(gamma, gp, u_plus, p)
    sigma = (Fraction(2, p * p) * (gp.form(left, right) + a * (p - a) * delta)
             - tree_inertia(gamma).sign + zs.sign - zs.e)
    eta = zs.nullity + len(zs.frak_z) - 2 * zs.z + gp.size - zs.e - 1
    return InvariantPair(sigma, eta)
