"""
Metric triangles: recognition, quasi-medians and classification.
"""
from collections import Counter
from enum import Enum

import numpy as np

from cbgraph.concurrency import parallel_map


class MetricTriangle(object):
    """
    Vertices u, v, w with pairwise interval intersections reduced to the
    shared endpoint. ``sides`` are the three side lengths, largest first.
    A quasi-median may collapse to a single vertex, giving sides (0, 0, 0).
    """
    def __init__(self, d, u, v, w):
        self.u = u
        self.v = v
        self.w = w
        self.sides = tuple(sorted((d(u, v), d(v, w), d(u, w)), reverse=True))

    @property
    def vertices(self):
        return (self.u, self.v, self.w)

    def size(self):
        return self.sides[0]

    def is_equilateral(self):
        return self.sides[0] == self.sides[2]

    def __repr__(self):
        return "MetricTriangle(%s, %s, %s; type %s)" % (self.u, self.v, self.w, self.sides)


def _meets_only_at(d, apex, a, b):
    both = d.interval_mask(apex, a) & d.interval_mask(apex, b)
    return int(both.sum()) == 1


def is_metric_triangle(d, u, v, w):
    if u == v == w:
        return True
    if len({u, v, w}) < 3:
        return False
    return (_meets_only_at(d, u, v, w) and _meets_only_at(d, v, u, w)
            and _meets_only_at(d, w, u, v))


def _farthest(d, origin, mask):
    candidates = np.flatnonzero(mask)
    best = candidates[np.argmax(d.dist[origin, candidates])]
    return int(best)


def quasi_median(d, x, y, z):
    """
    Greedy quasi-median: u in I(x,y)&I(x,z) farthest from x, then v in
    I(y,u)&I(y,z) farthest from y, then w in I(z,u)&I(z,v) farthest from
    z. Ties go to the smallest id.
    """
    u = _farthest(d, x, d.interval_mask(x, y) & d.interval_mask(x, z))
    v = _farthest(d, y, d.interval_mask(y, u) & d.interval_mask(y, z))
    w = _farthest(d, z, d.interval_mask(z, u) & d.interval_mask(z, v))
    return MetricTriangle(d, u, v, w)


def concatenation_holds(d, x, y, z, t):
    """The three geodesic concatenations through the quasi-median t of x, y, z"""
    u, v, w = t.vertices
    return (d(x, y) == d(x, u) + d(u, v) + d(v, y)
            and d(y, z) == d(y, v) + d(v, w) + d(w, z)
            and d(z, x) == d(z, w) + d(w, u) + d(u, x))


def enumerate_metric_triangles(d, threads=1):
    def scan(u):
        found = []
        for v in range(u + 1, d.n):
            for w in range(v + 1, d.n):
                if is_metric_triangle(d, u, v, w):
                    found.append(MetricTriangle(d, u, v, w))
        return found

    triangles = []
    for chunk in parallel_map(scan, range(d.n), threads):
        triangles.extend(chunk)
    return triangles


class TriangleKind(Enum):
    STRONGLY_EQUILATERAL = 'STRONGLY_EQUILATERAL'
    PENTAGON_221 = 'PENTAGON_221'
    OTHER = 'OTHER'


class TriangleClass(object):
    def __init__(self, kind, size=None, pentagon=None, witness=None):
        self.kind = kind
        self.size = size
        self.pentagon = pentagon
        self.witness = witness

    def describe(self, name=str):
        if self.kind == TriangleKind.STRONGLY_EQUILATERAL:
            return "STRONGLY_EQUILATERAL(%s)" % self.size
        if self.kind == TriangleKind.PENTAGON_221:
            return "PENTAGON_221(%s)" % ", ".join(map(name, self.pentagon))
        if self.witness is None:
            return "OTHER"
        if self.witness[0] == 'unequal sides':
            return "OTHER(sides %s)" % ",".join(map(str, self.witness[1]))
        return "OTHER(apex %s, %s)" % tuple(map(name, self.witness))

    def __repr__(self):
        return self.describe()


def _sides_with_apex(t):
    u, v, w = t.vertices
    return ((u, v, w), (v, u, w), (w, u, v))


def strongly_equilateral_violation(d, t):
    """First (apex, x) with x in the opposite interval at the wrong distance"""
    if not t.is_equilateral():
        return ('unequal sides', t.sides)
    k = t.size()
    for apex, a, b in _sides_with_apex(t):
        for x in sorted(d.interval(a, b)):
            if d(apex, x) != k:
                return (apex, x)
    return None


def pentagon_221(d, t):
    """
    For a triangle of type (2,2,1) with edge ab opposite c, returns the
    pentagon a b x c y with x~b,c and y~a,c, or None.
    """
    if t.sides != (2, 2, 1):
        return None
    g = d.graph
    for c, a, b in _sides_with_apex(t):
        if not g.has_edge(a, b):
            continue
        for x in sorted(g.neighbor_set(b) & g.neighbor_set(c)):
            for y in sorted(g.neighbor_set(a) & g.neighbor_set(c)):
                cycle = (a, b, x, c, y)
                if len(set(cycle)) == 5 and not g.has_edge(a, x) and not g.has_edge(b, y) \
                        and not g.has_edge(x, y):
                    return cycle
    return None


def classify(d, t):
    if strongly_equilateral_violation(d, t) is None:
        return TriangleClass(TriangleKind.STRONGLY_EQUILATERAL, size=t.size())
    pentagon = pentagon_221(d, t)
    if pentagon is not None:
        return TriangleClass(TriangleKind.PENTAGON_221, size=t.size(), pentagon=pentagon)
    return TriangleClass(TriangleKind.OTHER, size=t.size(), witness=strongly_equilateral_violation(d, t))


def check_almost_equilateral(d, t):
    """
    For each apex u with d(u,v) >= d(u,w): d(u,v) <= d(u,w)+1 and every
    x in I(v,w) has d(u,w) <= d(u,x) <= d(u,v). Returns the first
    offending (apex, x) or None; x is None when the side lengths differ
    by more than one.
    """
    for apex, a, b in _sides_with_apex(t):
        far, near = (a, b) if d(apex, a) >= d(apex, b) else (b, a)
        if d(apex, far) > d(apex, near) + 1:
            return (apex, None)
        for x in sorted(d.interval(a, b)):
            if not d(apex, near) <= d(apex, x) <= d(apex, far):
                return (apex, x)
    return None


def forbidden_type(t):
    """Name of the excluded side pattern the triangle realizes, if any"""
    k1, k2, k3 = t.sides
    if k1 >= 2 and k2 == k3 == k1 - 1:
        return '(k,k-1,k-1)'
    if k1 >= 3 and k1 == k2 and k3 == k1 - 1:
        return '(k,k,k-1)'
    return None


def histogram(d, threads=1):
    """Counts of (class, type) over all metric triangles of the graph"""
    counts = Counter()
    problems = []
    for t in enumerate_metric_triangles(d, threads):
        c = classify(d, t)
        counts[(c.kind.value, t.sides)] += 1
        if c.kind == TriangleKind.OTHER:
            problems.append((t, c))
        elif check_almost_equilateral(d, t) is not None or forbidden_type(t) is not None:
            problems.append((t, c))
    return counts, problems
