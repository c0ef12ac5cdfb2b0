"""
Isometric cycles, the forbidden PT / PP1 / PP2 patterns, pentagon pairs
and the block structure of triangle-free graphs with convex balls.
"""
from collections import Counter
from enum import Enum

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from cbgraph import log
from cbgraph.graph import all_pairs_distances
from cbgraph.system import DisjointPentagons, HasTriangle, PreconditionViolated


class Pentagon(object):
    """Five vertices in cyclic order spanning an induced 5-cycle"""
    def __init__(self, vertices, g=None):
        self.vertices = tuple(vertices)
        if len(self.vertices) != 5 or len(set(self.vertices)) != 5:
            raise PreconditionViolated("A pentagon needs five distinct vertices, got %s" % (self.vertices,))
        if g is not None and not is_pentagon(g, self.vertices):
            raise PreconditionViolated("%s is not an induced 5-cycle" % (self.vertices,))

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return 5

    def vertex_set(self):
        return frozenset(self.vertices)

    def __repr__(self):
        return "Pentagon%s" % (self.vertices,)


def is_pentagon(g, cycle):
    for i in range(5):
        if not g.has_edge(cycle[i], cycle[(i + 1) % 5]):
            return False
        if g.has_edge(cycle[i], cycle[(i + 2) % 5]):
            return False
    return True


def iter_isometric_cycles(d, length):
    """
    Yields every isometric cycle of the given length once, as a tuple
    starting at its smallest vertex with p[1] < p[-1].
    """
    g = d.graph
    dist = d.dist
    path = []

    def fits(w):
        j = len(path)
        for i in range(j):
            gap = j - i
            if dist[path[i], w] != min(gap, length - gap):
                return False
        return True

    def extend():
        if len(path) == length:
            if path[1] < path[-1]:
                yield tuple(path)
            return
        for w in g.neighbors(path[-1]):
            if w <= path[0] or w in path:
                continue
            if fits(w):
                path.append(w)
                for c in extend():
                    yield c
                path.pop()

    for start in range(d.n):
        path.append(start)
        for c in extend():
            yield c
        path.pop()


def enumerate_isometric_cycles(d, max_len=None):
    if max_len is None:
        max_len = 2 * d.diameter() + 1
    if max_len < 3:
        raise PreconditionViolated("max_len must be at least 3, got %s" % max_len)
    cycles = []
    for length in range(3, min(max_len, d.n) + 1):
        cycles.extend(iter_isometric_cycles(d, length))
    return cycles


def pentagons(d):
    """Induced 5-cycles; in any graph these are exactly the isometric ones"""
    return [Pentagon(c) for c in iter_isometric_cycles(d, 5)]


def first_bad_isometric_cycle(d, allowed=(3, 5)):
    for length in range(3, min(2 * d.diameter() + 1, d.n) + 1):
        if length in allowed:
            continue
        for c in iter_isometric_cycles(d, length):
            return c
    return None


def _cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def pattern_pt():
    """Pentagon 0,1,2,4,5 and triangle 2,3,4 glued along the edge 2-4"""
    p = nx.Graph(_cycle_edges(6))
    p.add_edge(2, 4)
    return p


def pattern_pp1():
    """Pentagons 0-1-2-3-4 and 4-5-6-7-3 glued along the edge 3-4"""
    p = nx.Graph(_cycle_edges(5))
    p.add_edges_from([(4, 5), (5, 6), (6, 7), (7, 3)])
    return p


def pattern_pp2():
    """Hexagon 0..5 with a middle vertex 6 adjacent to 1 and 4"""
    p = nx.Graph(_cycle_edges(6))
    p.add_edges_from([(6, 1), (6, 4)])
    return p


def induced_embeddings(g, pattern):
    """Vertex sets of induced subgraphs of g isomorphic to pattern, each once"""
    matcher = GraphMatcher(g.to_networkx(), pattern)
    seen = set()
    found = []
    for mapping in matcher.subgraph_isomorphisms_iter():
        vertices = frozenset(mapping)
        if vertices in seen:
            continue
        seen.add(vertices)
        found.append(tuple(sorted(vertices)))
    found.sort()
    return found


class ForbiddenKind(Enum):
    ISO_CYCLE_BAD_LEN = 'ISO_CYCLE_BAD_LEN'
    ISO_PT = 'ISO_PT'
    PP1_DIAM_GT3 = 'PP1_DIAM_GT3'
    PP2_DIAM_GT2 = 'PP2_DIAM_GT2'


class SubstructureReport(object):
    def __init__(self):
        self.isometric_cycle_lengths = Counter()
        self.forbidden = []

    def add(self, kind, vertices):
        self.forbidden.append((kind, tuple(vertices)))

    def is_cb(self):
        return len(self.forbidden) == 0

    def describe(self, name=str):
        if self.is_cb():
            return "no forbidden substructure"
        kind, vertices = self.forbidden[0]
        return "%s at %s" % (kind.value, ",".join(map(name, vertices)))


def recognize_structural(d, stop_at_first=False):
    """
    Structural CB test: no isometric cycle of length 4 or at least 6,
    no isometric PT, every induced PP1 of ambient diameter at most 3
    and every induced PP2 of ambient diameter 2.
    """
    report = SubstructureReport()
    g = d.graph
    diam = d.diameter()

    for c in enumerate_isometric_cycles(d, max(3, 2 * diam + 1)):
        report.isometric_cycle_lengths[len(c)] += 1
        if len(c) == 4 or len(c) >= 6:
            report.add(ForbiddenKind.ISO_CYCLE_BAD_LEN, c)
            if stop_at_first:
                return report

    if diam >= 3:
        pt = pattern_pt()
        pt_dist = dict(nx.all_pairs_shortest_path_length(pt))
        matcher = GraphMatcher(g.to_networkx(), pt)
        seen = set()
        for mapping in matcher.subgraph_isomorphisms_iter():
            vertices = frozenset(mapping)
            if vertices in seen:
                continue
            seen.add(vertices)
            if all(d(a, b) == pt_dist[mapping[a]][mapping[b]] for a in mapping for b in mapping):
                report.add(ForbiddenKind.ISO_PT, sorted(vertices))
                if stop_at_first:
                    return report

        if diam > 3:
            for vertices in induced_embeddings(g, pattern_pp1()):
                if d.diameter(vertices) > 3:
                    report.add(ForbiddenKind.PP1_DIAM_GT3, vertices)
                    if stop_at_first:
                        return report

    if diam > 2:
        for vertices in induced_embeddings(g, pattern_pp2()):
            if d.diameter(vertices) > 2:
                report.add(ForbiddenKind.PP2_DIAM_GT2, vertices)
                if stop_at_first:
                    return report

    return report


def universal_vertex(g, p):
    """Smallest vertex adjacent to all five vertices of p, or None"""
    candidates = g.neighbor_set(p.vertices[0])
    for v in p.vertices[1:]:
        candidates = candidates & g.neighbor_set(v)
    return min(candidates) if candidates else None


class PairKind(Enum):
    DIAM2 = 'DIAM2'
    UNIVERSAL_VERTEX = 'UNIVERSAL_VERTEX'
    NEITHER = 'NEITHER'


class PentagonPairResult(object):
    def __init__(self, kind, vertex=None, which=None):
        self.kind = kind
        self.vertex = vertex
        self.which = which

    def __repr__(self):
        if self.kind == PairKind.UNIVERSAL_VERTEX:
            return "UNIVERSAL_VERTEX(%s, p%s)" % (self.vertex, self.which)
        return self.kind.value


def analyze_pentagon_pair(d, p1, p2):
    """
    Two pentagons sharing at least two vertices: their union has diameter
    2, or one of them (``which`` = 1 or 2) has a universal vertex.
    """
    if len(p1.vertex_set() & p2.vertex_set()) < 2:
        raise DisjointPentagons("%s and %s share fewer than two vertices" % (p1, p2))
    if d.diameter(p1.vertex_set() | p2.vertex_set()) == 2:
        return PentagonPairResult(PairKind.DIAM2)
    for which, p in ((1, p1), (2, p2)):
        v = universal_vertex(d.graph, p)
        if v is not None:
            return PentagonPairResult(PairKind.UNIVERSAL_VERTEX, v, which)
    return PentagonPairResult(PairKind.NEITHER)


def intersecting_pentagon_pairs(d):
    ps = pentagons(d)
    pairs = []
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if len(ps[i].vertex_set() & ps[j].vertex_set()) >= 2:
                pairs.append((ps[i], ps[j]))
    return pairs


class TriangleFreeClass(Enum):
    MOORE_DIAM2 = 'MOORE_DIAM2'
    WEDGE_DECOMPOSABLE = 'WEDGE_DECOMPOSABLE'
    NOT_CB = 'NOT_CB'


class TriangleFreeResult(object):
    def __init__(self, kind, degree=None, blocks=None):
        self.kind = kind
        self.degree = degree
        self.blocks = blocks or []

    def __repr__(self):
        if self.kind == TriangleFreeClass.MOORE_DIAM2:
            return "MOORE_DIAM2(%s)" % self.degree
        return self.kind.value


def moore_degree(g):
    """
    Degree k when g is a Moore graph of diameter 2 (k-regular, girth 5,
    diameter 2, k^2+1 vertices), otherwise None.
    """
    if g.n < 5:
        return None
    k = g.degree(0)
    if any(g.degree(v) != k for v in range(g.n)) or g.n != k * k + 1:
        return None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = len(g.neighbor_set(u) & g.neighbor_set(v))
            # girth 5 and diameter 2
            if g.has_edge(u, v):
                if common:
                    return None
            elif common != 1:
                return None
    return k


def classify_triangle_free(d):
    g = d.graph
    for u, v in g.edges():
        if g.neighbor_set(u) & g.neighbor_set(v):
            raise HasTriangle("Edge %s-%s lies in a triangle" % (u, v))

    if g.n <= 2:
        return TriangleFreeResult(TriangleFreeClass.WEDGE_DECOMPOSABLE,
                                  blocks=[tuple(range(g.n))] if g.n == 2 else [])

    blocks = sorted(tuple(sorted(b)) for b in nx.biconnected_components(g.to_networkx()))
    if len(blocks) == 1 and len(blocks[0]) == g.n:
        k = moore_degree(g)
        if k is not None:
            return TriangleFreeResult(TriangleFreeClass.MOORE_DIAM2, degree=k, blocks=blocks)
        return TriangleFreeResult(TriangleFreeClass.NOT_CB, blocks=blocks)

    for b in blocks:
        # bridges are the degenerate blocks of trees
        if len(b) == 2:
            continue
        sub, _ = g.induced(b)
        if moore_degree(sub) is None:
            log.CB_INFO("Block %s is not a Moore graph of diameter 2" % (b,))
            return TriangleFreeResult(TriangleFreeClass.NOT_CB, blocks=blocks)
    return TriangleFreeResult(TriangleFreeClass.WEDGE_DECOMPOSABLE, blocks=blocks)


def structural_report(g):
    return recognize_structural(all_pairs_distances(g))
