"""Temperley-Lieb diagrams and linear combinations of them.

A diagram on n strands is a crossingless perfect matching of 2n marked
points on a rectangle: bottom points 0..n-1 left to right, then top
points n..2n-1 right to left (the labels walk the boundary
counterclockwise, so "noncrossing" is the usual chord condition).  The
identity pairs q with 2n-1-q.

``TLElement`` is a formal sum of diagrams with Laurent-polynomial
coefficients over one shared polynomial denominator; keeping the
denominator common is what makes repeated projector arithmetic cheap.
Multiplication stacks the second factor on top of the first and turns
every closed bubble into a factor of the loop value -A^2 - A^-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import LaurentPoly, RatFunc, loop_weight, poly_gcd, quantum_integer


@dataclass(frozen=True)
class TLDiagram:
    n: int
    pairs: tuple

    @staticmethod
    def make(n: int, pairs) -> "TLDiagram":
        norm = tuple(sorted(tuple(sorted(p)) for p in pairs))
        points = [x for p in norm for x in p]
        if sorted(points) != list(range(2 * n)):
            raise ValueError(f"not a perfect matching of {2 * n} points: {pairs}")
        for a, b in norm:
            for c, d in norm:
                if a < c < b < d:
                    raise ValueError(f"chords ({a},{b}) and ({c},{d}) cross")
        return TLDiagram(n, norm)

    def __str__(self):
        return "TL" + str(list(map(list, self.pairs)))


def identity(n: int) -> TLDiagram:
    return TLDiagram.make(n, [(q, 2 * n - 1 - q) for q in range(n)])


def hook(n: int, i: int) -> TLDiagram:
    """The generator joining bottom (and top) neighbours i-1, i."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"hook index {i} out of range for {n} strands")
    pairs = [(i - 1, i), (2 * n - 1 - i, 2 * n - i)]
    pairs += [(q, 2 * n - 1 - q) for q in range(n) if q not in (i - 1, i)]
    return TLDiagram.make(n, pairs)


def _resolve(edges):
    """Split a degree-<=2 multigraph into paths and cycles.

    Returns (paths, n_cycles) where each path is its pair of endpoint
    nodes.  Parallel edges are honoured, so a 2-cycle counts as a cycle.
    """
    inc: dict = {}
    for eid, (u, v) in enumerate(edges):
        inc.setdefault(u, []).append(eid)
        inc.setdefault(v, []).append(eid)
    used = [False] * len(edges)
    paths = []
    for node, eids in inc.items():
        if len(eids) != 1:
            continue
        eid = eids[0]
        if used[eid]:
            continue
        cur = node
        while True:
            used[eid] = True
            u, v = edges[eid]
            cur = v if cur == u else u
            nxt = [e for e in inc[cur] if not used[e]]
            if not nxt:
                break
            eid = nxt[0]
        paths.append((node, cur))
    cycles = 0
    for eid0 in range(len(edges)):
        if used[eid0]:
            continue
        cycles += 1
        eid, (cur, _) = eid0, edges[eid0]
        while not used[eid]:
            used[eid] = True
            u, v = edges[eid]
            cur = v if cur == u else u
            rest = [e for e in inc[cur] if not used[e]]
            if not rest:
                break
            eid = rest[0]
    return paths, cycles


def compose(d1: TLDiagram, d2: TLDiagram):
    """Stack d2 on top of d1; returns (diagram, closed bubble count)."""
    if d1.n != d2.n:
        raise ValueError(f"strand mismatch: {d1.n} vs {d2.n}")
    n = d1.n

    def node1(p):
        return ("b", p) if p < n else ("m", 2 * n - 1 - p)

    def node2(p):
        return ("m", p) if p < n else ("t", p)

    edges = [(node1(a), node1(b)) for a, b in d1.pairs]
    edges += [(node2(a), node2(b)) for a, b in d2.pairs]
    paths, cycles = _resolve(edges)
    # endpoints are ("b", q) or ("t", t) nodes, and both carry the result label
    out = [(u[1], v[1]) for u, v in paths]
    return TLDiagram.make(n, out), cycles


def closure_count(d: TLDiagram) -> int:
    """Number of circles after joining each bottom point to the top
    point directly above it around the side of the rectangle."""
    edges = list(d.pairs) + [(q, 2 * d.n - 1 - q) for q in range(d.n)]
    _, cycles = _resolve(edges)
    return cycles


class TLElement:
    """A linear combination of TL diagrams over a common denominator."""

    __slots__ = ("n", "terms", "den")

    def __init__(self, n: int, terms: dict, den: LaurentPoly):
        self.n = n
        self.terms = {d: c for d, c in terms.items() if not c.is_zero()}
        self.den = den

    @staticmethod
    def from_diagram(d: TLDiagram) -> "TLElement":
        return TLElement(d.n, {d: LaurentPoly.one()}, LaurentPoly.one())

    @staticmethod
    def identity_element(n: int) -> "TLElement":
        return TLElement.from_diagram(identity(n))

    @staticmethod
    def hook_element(n: int, i: int) -> "TLElement":
        return TLElement.from_diagram(hook(n, i))

    def __add__(self, other: "TLElement") -> "TLElement":
        if self.n != other.n:
            raise ValueError("strand mismatch")
        g = poly_gcd(self.den, other.den)
        s1, s2 = other.den // g, self.den // g
        terms = {d: c * s1 for d, c in self.terms.items()}
        for d, c in other.terms.items():
            terms[d] = terms.get(d, LaurentPoly.zero()) + c * s2
        return TLElement(self.n, terms, self.den * s1)

    def scale(self, num: LaurentPoly, den: LaurentPoly | None = None) -> "TLElement":
        terms = {d: c * num for d, c in self.terms.items()}
        return TLElement(self.n, terms, self.den if den is None else self.den * den)

    def __mul__(self, other: "TLElement") -> "TLElement":
        if self.n != other.n:
            raise ValueError("strand mismatch")
        delta = loop_weight()
        terms: dict = {}
        for da, ca in self.terms.items():
            for db, cb in other.terms.items():
                comp, bubbles = compose(da, db)
                c = ca * cb
                for _ in range(bubbles):
                    c = c * delta
                terms[comp] = terms.get(comp, LaurentPoly.zero()) + c
        return TLElement(self.n, terms, self.den * other.den)

    def closure(self) -> RatFunc:
        delta = loop_weight()
        total = LaurentPoly.zero()
        for d, c in self.terms.items():
            total = total + c * delta**closure_count(d)
        return RatFunc(total, self.den)

    def coefficient(self, d: TLDiagram) -> RatFunc:
        return RatFunc(self.terms.get(d, LaurentPoly.zero()), self.den)

    def normalized(self) -> "TLElement":
        if not self.terms:
            return TLElement(self.n, {}, LaurentPoly.one())
        g = self.den
        for c in self.terms.values():
            g = poly_gcd(g, c)
            if g.is_one():
                break
        terms = {d: c // g for d, c in self.terms.items()}
        den = self.den // g
        # fold the remaining unit (leading coefficient and A-power) away
        lead = den.coefficient(den.max_exponent())
        unit = LaurentPoly.monomial(den.min_exponent(), lead)
        den = den // unit
        terms = {d: _div_unit(c, unit) for d, c in terms.items()}
        return TLElement(self.n, terms, den)

    def __eq__(self, other):
        if not isinstance(other, TLElement) or self.n != other.n:
            return NotImplemented if not isinstance(other, TLElement) else False
        a, b = self.normalized(), other.normalized()
        return a.terms == b.terms and a.den == b.den

    def __hash__(self):
        raise TypeError("TLElement is not hashable")

    def __str__(self):
        body = " + ".join(f"({c})*{d}" for d, c in sorted(self.terms.items(), key=str))
        return f"[{body or '0'}] / ({self.den})"


def _div_unit(c: LaurentPoly, unit: LaurentPoly) -> LaurentPoly:
    q, r = divmod(c, unit)
    assert r.is_zero()
    return q


def extend(elem: TLElement) -> TLElement:
    """Add one through strand on the right: n strands -> n+1."""
    n = elem.n
    terms = {}
    for d, c in elem.terms.items():
        pairs = [
            tuple(p if p < n else p + 2 for p in pair) for pair in d.pairs
        ]
        pairs.append((n, n + 1))
        terms[TLDiagram.make(n + 1, pairs)] = c
    return TLElement(n + 1, terms, elem.den)


@lru_cache(maxsize=None)
def jones_wenzl(n: int) -> TLElement:
    """The n-strand projector.

    Characterized by: coefficient 1 on the identity, and composing with
    any hook on either side gives zero.  Computed by the two-term
    recursion whose mixing coefficient is [n-1]/[n]; its closure is the
    loop evaluation (-1)^n [n+1].
    """
    if n < 0:
        raise ValueError("negative strand count")
    if n == 0:
        empty = TLDiagram.make(0, ())
        return TLElement(0, {empty: LaurentPoly.one()}, LaurentPoly.one())
    if n == 1:
        return TLElement.identity_element(1)
    e = extend(jones_wenzl(n - 1))
    u = TLElement.hook_element(n, n - 1)
    correction = (e * u * e).scale(quantum_integer(n - 1), quantum_integer(n))
    return (e + correction).normalized()
