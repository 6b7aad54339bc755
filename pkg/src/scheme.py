"""
Complex schemes of real plane curves in Viro notation

A scheme is a nesting forest of signed ovals plus a flag recording
whether the curve has a one-sided component J (odd degree). This module
parses and renders the ASCII notation (`J 1-<2-> 2+`) and computes the
numerical characteristics every later stage consumes: injective-pair
counts, oval/region parities, region Euler characteristics and the
odd-oval counts used for even-type bounds.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import groupby
from typing import Optional, Tuple

from errors import EmptySchemeError, SchemeSyntaxError


class Kind(Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class Oval:
    """An oval with sign ε(o) and the ovals immediately inside it"""
    epsilon: int
    children: Tuple["Oval", ...] = field(default=())

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError(f"oval sign must be +1 or -1, got {self.epsilon}")


@dataclass(frozen=True)
class ComplexScheme:
    """Nesting forest of depth-0 ovals plus the odd/even type flag"""
    kind: Kind
    top: Tuple[Oval, ...] = field(default=())

    def __post_init__(self):
        if self.kind is Kind.EVEN and not self.top:
            raise EmptySchemeError("even-type scheme must contain at least one oval")

    @property
    def is_odd(self):
        return self.kind is Kind.ODD

    def __str__(self):
        return render_scheme(self)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

class _Parser:
    WHITESPACE = " \t\r\n"
    DIGITS = "0123456789"

    def __init__(self, text):
        self.text = text
        self.text_len = len(text)
        self.i = 0

    def more(self):
        return self.i < self.text_len

    def current(self):
        return self.text[self.i]

    def advance(self):
        self.i += 1

    def skip_whitespace(self):
        while self.more() and self.current() in self.WHITESPACE:
            self.advance()

    def parse(self):
        odd = False
        top = []
        self.skip_whitespace()
        while self.more():
            if self.current() == "J":
                if odd:
                    raise SchemeSyntaxError("J may appear only once", self.i)
                odd = True
                self.advance()
            else:
                top.extend(self.read_group())
            self.skip_whitespace()
        kind = Kind.ODD if odd else Kind.EVEN
        if kind is Kind.EVEN and not top:
            raise EmptySchemeError("even-type scheme must contain at least one oval")
        return ComplexScheme(kind, tuple(top))

    def read_group(self):
        count = self.read_count()
        self.skip_whitespace()
        sign = self.read_sign()
        self.skip_whitespace()
        children = ()
        if self.more() and self.current() == "<":
            self.advance()
            children = self.read_inner()
        return [Oval(sign, children)] * count

    def read_inner(self):
        opened = self.i - 1
        items = []
        self.skip_whitespace()
        while True:
            if not self.more():
                raise SchemeSyntaxError("unclosed '<'", opened)
            char = self.current()
            if char == ">":
                if not items:
                    raise SchemeSyntaxError("empty '<>'", self.i)
                self.advance()
                return tuple(items)
            if char == "J":
                raise SchemeSyntaxError("J is only allowed at top level", self.i)
            items.extend(self.read_group())
            self.skip_whitespace()

    def read_count(self):
        start = self.i
        while self.more() and self.current() in self.DIGITS:
            self.advance()
        if start == self.i:
            found = repr(self.current()) if self.more() else "end of input"
            raise SchemeSyntaxError(f"expected oval count, found {found}", start)
        count = int(self.text[start:self.i])
        if count == 0:
            raise SchemeSyntaxError("oval count must be positive", start)
        return count

    def read_sign(self):
        if not self.more():
            raise SchemeSyntaxError("expected '+' or '-', found end of input", self.i)
        char = self.current()
        if char not in "+-":
            raise SchemeSyntaxError(f"expected '+' or '-', found {char!r}", self.i)
        self.advance()
        return 1 if char == "+" else -1


def parse_scheme(text):
    """
    Parse a scheme in ASCII Viro notation

    Parameters
    ----------
    text : str
        e.g. "J 1-<2-> 2+"; whitespace between tokens is ignored

    Returns
    -------
    ComplexScheme

    Raises
    ------
    SchemeSyntaxError
        malformed input, with the offending position
    EmptySchemeError
        no J and no ovals
    """
    return _Parser(text).parse()


def _render_ovals(ovals):
    parts = []
    for oval, run in groupby(ovals):
        token = f"{len(list(run))}{'+' if oval.epsilon > 0 else '-'}"
        if oval.children:
            token += f"<{_render_ovals(oval.children)}>"
        parts.append(token)
    return " ".join(parts)


def render_scheme(scheme):
    """Canonical notation: J first, single spaces, equal neighbours collapsed into counts"""
    parts = []
    if scheme.is_odd:
        parts.append("J")
    if scheme.top:
        parts.append(_render_ovals(scheme.top))
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Numerical characteristics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OvalStats:
    index: int
    epsilon: int
    depth: int
    parent: Optional[int]
    n_children: int
    parity: int
    pi_plus: int
    pi_minus: int


@dataclass(frozen=True)
class RegionStats:
    """
    Complement region. Region 0 is the outer region R1; region i + 1 is
    the region immediately inside oval i.
    """
    index: int
    oval: Optional[int]
    parity: int
    lambda_plus: int
    lambda_minus: int
    euler: int


@dataclass(frozen=True)
class SchemeStats:
    kind: Kind
    l: int
    lambda_plus: int
    lambda_minus: int
    pi_plus: int
    pi_minus: int
    beta0: int
    outer_ovals: int
    n: int
    n_plus: int
    n_zero: int
    n_minus: int
    ovals: Tuple[OvalStats, ...]
    regions: Tuple[RegionStats, ...]

    def summary(self):
        """Scalar counts as a plain dict (for JSON and tables)"""
        return {
            "kind": self.kind.value,
            "l": self.l,
            "lambda_plus": self.lambda_plus,
            "lambda_minus": self.lambda_minus,
            "pi_plus": self.pi_plus,
            "pi_minus": self.pi_minus,
            "beta0": self.beta0,
            "outer_ovals": self.outer_ovals,
            "n": self.n,
            "n_plus": self.n_plus,
            "n_zero": self.n_zero,
            "n_minus": self.n_minus,
        }


def preorder(scheme):
    """
    Flatten the nesting forest

    Returns
    -------
    list of (Oval, depth, parent_index)
        ovals in preorder; parent_index is None for depth-0 ovals
    """
    flat = []

    def visit(oval, depth, parent):
        index = len(flat)
        flat.append((oval, depth, parent))
        for child in oval.children:
            visit(child, depth + 1, index)

    for oval in scheme.top:
        visit(oval, 0, None)
    return flat


def _pair_sign(eps_a, eps_b):
    # Nested ovals form a positive pair iff their signs differ.
    return 1 if eps_a != eps_b else -1


def stats(scheme):
    """
    Numerical characteristics of a complex scheme

    Parameters
    ----------
    scheme : ComplexScheme

    Returns
    -------
    SchemeStats
        global counts plus per-oval and per-region records in preorder
    """
    flat = preorder(scheme)
    l = len(flat)

    pi_plus = [0] * l
    pi_minus = [0] * l
    ancestors = []
    for i, (oval, depth, parent) in enumerate(flat):
        chain = []
        j = parent
        while j is not None:
            chain.append(j)
            j = flat[j][2]
        ancestors.append(chain)
        for j in chain:
            if _pair_sign(oval.epsilon, flat[j][0].epsilon) > 0:
                pi_plus[i] += 1
                pi_plus[j] += 1
            else:
                pi_minus[i] += 1
                pi_minus[j] += 1

    oval_stats = tuple(
        OvalStats(
            index=i,
            epsilon=oval.epsilon,
            depth=depth,
            parent=parent,
            n_children=len(oval.children),
            parity=depth % 2,
            pi_plus=pi_plus[i],
            pi_minus=pi_minus[i],
        )
        for i, (oval, depth, parent) in enumerate(flat)
    )

    regions = [RegionStats(0, None, 0, 0, 0, 1 - len(scheme.top))]
    for i, (oval, depth, _) in enumerate(flat):
        encircling = [i] + ancestors[i]
        lam_plus = sum(1 for j in encircling if flat[j][0].epsilon > 0)
        regions.append(RegionStats(
            index=i + 1,
            oval=i,
            parity=(depth + 1) % 2,
            lambda_plus=lam_plus,
            lambda_minus=len(encircling) - lam_plus,
            euler=1 - len(oval.children),
        ))

    odd_ovals = [o for o in oval_stats if o.parity == 1]
    lambda_plus = sum(1 for o in oval_stats if o.epsilon > 0)

    return SchemeStats(
        kind=scheme.kind,
        l=l,
        lambda_plus=lambda_plus,
        lambda_minus=l - lambda_plus,
        pi_plus=sum(pi_plus) // 2,
        pi_minus=sum(pi_minus) // 2,
        beta0=l + 1 if scheme.is_odd else l,
        outer_ovals=len(scheme.top),
        n=len(odd_ovals),
        n_plus=sum(1 for o in odd_ovals if o.n_children == 0),
        n_zero=sum(1 for o in odd_ovals if o.n_children == 1),
        n_minus=sum(1 for o in odd_ovals if o.n_children > 1),
        ovals=oval_stats,
        regions=tuple(regions),
    )
