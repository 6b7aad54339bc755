"""
Decorated plumbing trees

Γ(C) has three fixed vertices u1, u2, u3, one vertex per complement
region weighted by twice its Euler characteristic, and one weight-0
vertex per oval joining the two regions the oval separates. Arrows
mark the tails of link components. Γ⁺ turns every arrow into an edge to
a weight-0 arrowhead vertex; Γ̂ adds one arrow on every region vertex.

Vertex ids are positions: u1, u2, u3, regions in preorder (outer region
first), ovals in preorder, arrowheads last.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

from errors import MalformedTreeError
from scheme import stats


class Role(Enum):
    U1 = "u1"
    U2 = "u2"
    U3 = "u3"
    REGION = "region"
    OVAL = "oval"
    ARROWHEAD = "arrowhead"
    GENERIC = "generic"


@dataclass(frozen=True)
class Vertex:
    id: int
    weight: int
    role: Role
    ref: Optional[int] = None  # region / oval / arrow index for curve-derived roles

    @property
    def label(self):
        return f"{self.id}:{self.weight}({self.role.value})"


@dataclass(frozen=True)
class Arrow:
    tail: int
    sign: int
    head: Optional[int] = None  # arrowhead vertex once converted (Γ⁺)


@dataclass(frozen=True)
class PlumbingTree:
    """Integer-weighted tree with vertex roles and signed arrows"""
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Tuple[int, int], ...]
    arrows: Tuple[Arrow, ...] = field(default=())

    def __post_init__(self):
        n = len(self.vertices)
        if n == 0:
            raise MalformedTreeError("tree has no vertices")
        for pos, v in enumerate(self.vertices):
            if v.id != pos:
                raise MalformedTreeError(f"vertex id {v.id} at position {pos}")
        if len(self.edges) != n - 1:
            raise MalformedTreeError(f"{n} vertices need {n - 1} edges, got {len(self.edges)}")
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise MalformedTreeError(f"bad edge ({i}, {j})")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise MalformedTreeError(f"duplicate edge ({i}, {j})")
            seen.add(key)
        for a in self.arrows:
            if not 0 <= a.tail < n or a.sign not in (1, -1):
                raise MalformedTreeError(f"bad arrow {a}")
        if len(self.component_of(0)) != n:
            raise MalformedTreeError("tree is not connected")

    @property
    def size(self):
        return len(self.vertices)

    @cached_property
    def core(self):
        """Number of non-arrowhead vertices (they come first)"""
        return sum(1 for v in self.vertices if v.role is not Role.ARROWHEAD)

    @cached_property
    def weights(self):
        return np.array([v.weight for v in self.vertices], dtype=object)

    @cached_property
    def neighbours(self):
        adj = [[] for _ in self.vertices]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(a) for a in adj)

    def component_of(self, start, allowed=None):
        """Vertex ids reachable from `start` (optionally inside `allowed`)"""
        stack, found = [start], {start}
        while stack:
            v = stack.pop()
            for w in self.neighbours[v]:
                if w not in found and (allowed is None or w in allowed):
                    found.add(w)
                    stack.append(w)
        return found

    def arrow_vector(self):
        """s: signed arrow-tail counts on the core vertices"""
        s = [0] * self.core
        for a in self.arrows:
            s[a.tail] += a.sign
        return s

    def apply(self, x):
        """A·x using the tree structure"""
        x = np.asarray(x, dtype=object)
        out = self.weights * x
        for i, j in self.edges:
            out[i] += x[j]
            out[j] += x[i]
        return out

    def form(self, x, y):
        """Bilinear form x·A·yᵗ using the tree structure"""
        x = np.asarray(x, dtype=object)
        y = np.asarray(y, dtype=object)
        total = np.sum(self.weights * x * y)
        for i, j in self.edges:
            total += x[i] * y[j] + x[j] * y[i]
        return total


def plumbing_matrix(g):
    """
    Plumbing matrix A_Γ

    Returns
    -------
    numpy.ndarray (dtype=object)
        weights on the diagonal, 1 for each edge, 0 elsewhere
    """
    n = g.size
    A = np.zeros((n, n), dtype=object)
    for v in g.vertices:
        A[v.id, v.id] = v.weight
    for i, j in g.edges:
        A[i, j] = 1
        A[j, i] = 1
    return A


def tree_from_weights(weights, edges, arrows=()):
    """Generic tree from 0-indexed weights, edge pairs and (tail, sign) arrows"""
    vertices = tuple(Vertex(i, int(w), Role.GENERIC) for i, w in enumerate(weights))
    return PlumbingTree(
        vertices,
        tuple((int(i), int(j)) for i, j in edges),
        tuple(Arrow(int(t), int(s)) for t, s in arrows),
    )


def _curve_skeleton(scheme):
    st = stats(scheme)
    l = st.l
    region_id = lambda r: 3 + r
    oval_id = lambda i: 4 + l + i

    vertices = [Vertex(0, 1, Role.U1), Vertex(1, 2, Role.U2), Vertex(2, 2, Role.U3)]
    vertices += [Vertex(region_id(r.index), 2 * r.euler, Role.REGION, r.index) for r in st.regions]
    vertices += [Vertex(oval_id(o.index), 0, Role.OVAL, o.index) for o in st.ovals]

    edges = [(0, 1), (0, 2), (0, region_id(0))]
    for o in st.ovals:
        outside = 0 if o.parent is None else o.parent + 1
        edges.append((region_id(outside), oval_id(o.index)))
        edges.append((oval_id(o.index), region_id(o.index + 1)))

    arrows = [Arrow(1, 1)] if scheme.is_odd else []
    for o in st.ovals:
        arrows.append(Arrow(oval_id(o.index), (-1) ** (o.parity + 1) * o.epsilon))
    return st, vertices, edges, arrows


def build_gamma(scheme):
    """
    Γ(C) for a complex scheme

    Parameters
    ----------
    scheme : ComplexScheme

    Returns
    -------
    PlumbingTree
        2l + 4 vertices; one arrow per component of the curve
    """
    _, vertices, edges, arrows = _curve_skeleton(scheme)
    return PlumbingTree(tuple(vertices), tuple(edges), tuple(arrows))


def build_gamma_hat(scheme):
    """Γ(C) with an extra arrow of sign (-1)^pari(R) on every region vertex"""
    st, vertices, edges, arrows = _curve_skeleton(scheme)
    arrows += [Arrow(3 + r.index, (-1) ** r.parity) for r in st.regions]
    return PlumbingTree(tuple(vertices), tuple(edges), tuple(arrows))


def build_gamma_plus(g):
    """
    Γ⁺: every unconverted arrow becomes an edge to a new weight-0 arrowhead

    Arrow metadata is kept with the head id filled in.
    """
    vertices = list(g.vertices)
    edges = list(g.edges)
    arrows = []
    for k, a in enumerate(g.arrows):
        if a.head is not None:
            arrows.append(a)
            continue
        head = len(vertices)
        vertices.append(Vertex(head, 0, Role.ARROWHEAD, k))
        edges.append((a.tail, head))
        arrows.append(Arrow(a.tail, a.sign, head))
    return PlumbingTree(tuple(vertices), tuple(edges), tuple(arrows))


def to_dot(g):
    """DOT rendering; unconverted arrows become dashed edges to '+'/'−' nodes"""
    lines = ["graph plumbing {"]
    for v in g.vertices:
        lines.append(f'  {v.id} [label="{v.label}"];')
    for i, j in g.edges:
        lines.append(f"  {i} -- {j};")
    for k, a in enumerate(g.arrows):
        if a.head is not None:
            continue
        mark = "+" if a.sign > 0 else "−"
        lines.append(f'  a{k} [label="{mark}", shape=plaintext];')
        lines.append(f"  {a.tail} -- a{k} [style=dashed];")
    lines.append("}")
    return "\n".join(lines)


def to_json(g):
    arrows = []
    for a in g.arrows:
        entry = {"tail": a.tail, "sign": a.sign}
        if a.head is not None:
            entry["head"] = a.head
        arrows.append(entry)
    return {
        "vertices": [{"id": v.id, "weight": v.weight, "role": v.role.value} for v in g.vertices],
        "edges": [[i, j] for i, j in g.edges],
        "arrows": arrows,
    }
