"""
Clique-paths between a vertex and a clique, their local normality
axioms, the fellow traveler scans, the path shortening procedure
behind falsification by fellow travelers, and almost convexity.
"""
import itertools
import random

import numpy as np
import networkx as nx
from scipy.sparse.csgraph import shortest_path

from cbgraph import log
from cbgraph.concurrency import parallel_map
from cbgraph.conditions import _pentagon_tops
from cbgraph.system import EmptyLevel, NotUniformDistance, AlreadyGeodesic, PreconditionViolated


class CliquePath(object):
    """
    Sequence of cliques C0={source}, ..., Ck=sink. Levels past k repeat
    the sink.
    """
    def __init__(self, source, cliques):
        self.source = source
        self.cliques = [frozenset(c) for c in cliques]

    @property
    def sink(self):
        return self.cliques[-1]

    def __len__(self):
        return len(self.cliques) - 1

    def level(self, i):
        return self.cliques[min(i, len(self.cliques) - 1)]

    def sizes(self):
        return [len(c) for c in self.cliques]

    def __eq__(self, other):
        return isinstance(other, CliquePath) and self.cliques == other.cliques

    def __repr__(self):
        return "CliquePath(%s)" % " -> ".join("{%s}" % ",".join(map(str, sorted(c))) for c in self.cliques)


def _descend(d, u, top, k):
    levels = [None] * (k + 1)
    levels[k] = frozenset(top)
    for i in range(k, 0, -1):
        below = d.joint_ball(levels[i], 1) & d.ball(u, i - 1)
        if not below:
            raise EmptyLevel("Level %s between %s and %s is empty" % (i - 1, u, sorted(top)), i - 1)
        levels[i - 1] = below
    return CliquePath(u, levels)


def clique_path(d, u, v):
    """C(k)={v} and C(i-1) = B*_1(C(i)) & B_{i-1}(u)"""
    return _descend(d, u, [v], d(u, v))


def clique_path_to_set(d, u, clique):
    """Same descent from a clique at uniform distance from u; None if a level empties"""
    clique = frozenset(clique)
    if not clique:
        raise NotUniformDistance("Empty target set")
    ks = set(d(u, c) for c in clique)
    if len(ks) != 1:
        raise NotUniformDistance("%s is not at uniform distance from %s" % (sorted(clique), u))
    try:
        return _descend(d, u, clique, ks.pop())
    except EmptyLevel:
        return None


class NormalAxiomReport(object):
    """Per-axiom verdict; ``failures[axiom]`` is the first failing index or None"""
    AXIOMS = ('i', 'ii', 'iii', 'iv')

    def __init__(self):
        self.failures = dict((a, None) for a in self.AXIOMS)

    def fail(self, axiom, index):
        if self.failures[axiom] is None:
            self.failures[axiom] = index

    def holds(self, axiom=None):
        if axiom is not None:
            return self.failures[axiom] is None
        return all(f is None for f in self.failures.values())

    def __bool__(self):
        return self.holds()

    def __repr__(self):
        return "NormalAxiomReport(%s)" % ", ".join("%s=%s" % (a, "ok" if f is None else f) for a, f in sorted(self.failures.items()))


def _no_edges_between(g, a, b):
    return not any(g.has_edge(x, y) for x in a for y in b)


def is_normal(d, path):
    cliques = path.cliques if isinstance(path, CliquePath) else [frozenset(c) for c in path]
    g = d.graph
    report = NormalAxiomReport()
    k = len(cliques) - 1

    if k == 0 and not g.is_clique(cliques[0]):
        report.fail('i', 0)
    for i in range(k):
        if cliques[i] & cliques[i + 1] or not g.is_clique(cliques[i] | cliques[i + 1]):
            report.fail('i', i)
    for i in range(1, k):
        if cliques[i - 1] & cliques[i + 1] or not _no_edges_between(g, cliques[i - 1], cliques[i + 1]):
            report.fail('ii', i)
    for i in range(3, k + 1):
        if not d.is_uniform_distance(cliques[i], cliques[i - 3], 3):
            report.fail('iii', i)
    for i in range(1, k):
        if cliques[i] != d.joint_ball(cliques[i + 1], 1) & d.ball_around_set(cliques[i - 1], 1):
            report.fail('iv', i)
    return report


def _candidate_cliques(d, current, previous, older):
    """Nonempty cliques C adjacent to all of ``current`` passing (ii) and (iii)"""
    g = d.graph
    common = None
    for x in current:
        common = g.neighbor_set(x) if common is None else common & g.neighbor_set(x)
    common = set(common) - current
    if previous is not None:
        common = set(z for z in common
                     if z not in previous and not any(g.has_edge(z, p) for p in previous))
    if older is not None:
        common = set(z for z in common if all(d(z, o) == 3 for o in older))
    if not common:
        return []
    sub = g.to_networkx().subgraph(sorted(common))
    return [frozenset(c) for c in nx.enumerate_all_cliques(sub)]


def enumerate_normal_paths(d, u, v, max_length=None):
    """
    Every normal clique-path from {u} to {v} of length at most
    max_length (default 2*diam+1), found by level-wise backtracking.
    """
    if max_length is None:
        max_length = 2 * d.diameter() + 1
    target = frozenset([v])
    found = []
    if u == v:
        return [CliquePath(u, [target])]

    levels = [frozenset([u])]

    def extend():
        i = len(levels) - 1
        if i >= max_length:
            return
        previous = levels[i - 1] if i >= 1 else None
        older = levels[i - 2] if i >= 2 else None
        for nxt in _candidate_cliques(d, levels[i], previous, older):
            if i >= 1 and levels[i] != d.joint_ball(nxt, 1) & d.ball_around_set(levels[i - 1], 1):
                continue
            levels.append(nxt)
            if nxt == target:
                found.append(CliquePath(u, list(levels)))
            extend()
            levels.pop()

    extend()
    return found


def normal_vertex_path(d, u, v, seed=0):
    """
    A vertex path through the levels of the clique-path from u to v.
    Seed 0 picks the smallest id per level, other seeds pick at random.
    """
    path = clique_path(d, u, v)
    rng = random.Random(seed) if seed else None
    result = []
    for c in path.cliques:
        members = sorted(c)
        result.append(rng.choice(members) if rng else members[0])
    return result


def level_distance(d, p1, p2):
    """max over i of max d(x, y) with x in level i of p1 and y in level i of p2"""
    best = 0
    for i in range(max(len(p1), len(p2)) + 1):
        a = np.fromiter(p1.level(i), dtype=np.intp)
        b = np.fromiter(p2.level(i), dtype=np.intp)
        best = max(best, int(d.dist[np.ix_(a, b)].max()))
    return best


class FellowTravelerStats(object):
    def __init__(self):
        self.max_ratio = 0.0
        self.max_distance = 0
        self.quadruple = None
        self.count = 0

    def add(self, quadruple, distance, ratio):
        self.count += 1
        self.max_distance = max(self.max_distance, distance)
        if ratio is not None and ratio > self.max_ratio:
            self.max_ratio = ratio
            self.quadruple = quadruple

    def __repr__(self):
        return "FellowTravelerStats(max_ratio=%s, max_distance=%s, quadruple=%s, count=%s)" % (
            self.max_ratio, self.max_distance, self.quadruple, self.count)


class PathCache(object):
    """Memoized clique-paths of a fixed graph"""
    def __init__(self, d):
        self.d = d
        self._paths = {}

    def get(self, u, v):
        p = self._paths.get((u, v))
        if p is None:
            p = clique_path(self.d, u, v)
            self._paths[(u, v)] = p
        return p


def fellow_traveler_scan(d, quadruples, threads=1, cache=None):
    """
    Ratio max_i d(C_i, C'_i) / max(d(u,u'), d(v,v')) over the given
    (u, v, u', v') quadruples; quadruples with identical endpoints count
    towards ``max_distance`` only.
    """
    cache = cache or PathCache(d)
    stats = FellowTravelerStats()

    def measure(q):
        u, v, up, vp = q
        distance = level_distance(d, cache.get(u, v), cache.get(up, vp))
        denom = max(d(u, up), d(v, vp))
        return q, distance, (float(distance) / denom if denom else None)

    for q, distance, ratio in parallel_map(measure, list(quadruples), threads):
        stats.add(q, distance, ratio)
    return stats


def all_quadruples(n):
    return itertools.product(range(n), repeat=4)


def sampled_quadruples(n, samples, seed):
    rng = random.Random(seed)
    for _ in range(samples):
        yield tuple(rng.randrange(n) for _ in range(4))


def same_source_quadruples(d):
    """u = u', v ~ v'"""
    g = d.graph
    return [(u, v, u, vp) for u in range(d.n) for v in range(d.n) for vp in g.neighbors(v)]


def same_sink_quadruples(d, strict):
    """
    u ~ u', v = v'; with ``strict`` d(u,v) > d(u',v), otherwise
    d(u,v) = d(u',v).
    """
    g = d.graph
    quads = []
    for u in range(d.n):
        for up in g.neighbors(u):
            for v in range(d.n):
                if (d(u, v) > d(up, v)) if strict else (d(u, v) == d(up, v)):
                    quads.append((u, v, up, v))
    return quads


FELLOW_BOUNDS = (
    ('general', 7),
    ('same_source', 3),
    ('same_sink_strict', 1),
    ('same_sink_equal', 4),
)


def fellow_traveler_report(d, quadruples=None, threads=1):
    """Runs the general scan and the three specialized scans"""
    cache = PathCache(d)
    if quadruples is None:
        quadruples = all_quadruples(d.n)
    results = {}
    results['general'] = fellow_traveler_scan(d, quadruples, threads, cache)
    results['same_source'] = fellow_traveler_scan(d, same_source_quadruples(d), threads, cache)
    results['same_sink_strict'] = fellow_traveler_scan(d, same_sink_quadruples(d, True), threads, cache)
    results['same_sink_equal'] = fellow_traveler_scan(d, same_sink_quadruples(d, False), threads, cache)
    return results


def fellow_bounds_hold(results):
    if results['general'].max_ratio > 7:
        return False
    for name, bound in FELLOW_BOUNDS[1:]:
        if results[name].max_distance > bound:
            return False
    return True


def _check_walk(g, path):
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise PreconditionViolated("%s-%s is not an edge" % (a, b))


def _follow_geodesic(d, u, prefix, target):
    """
    A geodesic from u to ``target`` that 1-fellow travels the geodesic
    ``prefix`` (which ends next to a common neighbor of its last vertex
    and target, one step farther from u).
    """
    g = d.graph
    last = prefix[-1]
    if last == target:
        return list(prefix)
    if len(prefix) == 1:
        raise PreconditionViolated("Distinct targets at distance 0 from %s" % u)
    if not g.has_edge(last, target):
        raise PreconditionViolated("Neighbors %s and %s toward %s are not adjacent" % (last, target, u))
    before = prefix[-2]
    if g.has_edge(before, target):
        return list(prefix[:-1]) + [target]
    level = len(prefix) - 2
    row = d.dist[u]
    bridges = sorted(z for z in g.neighbor_set(last) & g.neighbor_set(target) if row[z] == level)
    if not bridges:
        raise PreconditionViolated("No common neighbor of %s and %s at distance %s from %s" % (last, target, level, u))
    return _follow_geodesic(d, u, prefix[:-1], bridges[0]) + [target]


def fftp_shorten(d, path):
    """
    Strictly shorter path with the same endpoints which 2-fellow travels
    the given non-geodesic path, built at the first index i0 >= 1 with
    d(u, path[i0+1]) <= i0.
    """
    g = d.graph
    path = list(path)
    _check_walk(g, path)
    u = path[0]
    k = len(path) - 1
    if k == d(u, path[-1]):
        raise AlreadyGeodesic("Path of length %s is already a geodesic" % k)

    i0 = next(i for i in range(1, k) if d(u, path[i + 1]) <= i)
    rest = path[i0 + 2:]

    if i0 == 1:
        if path[2] == u:
            return path[2:]
        return [u] + path[2:]

    w, v, vp = path[i0 - 1], path[i0], path[i0 + 1]
    prefix = path[:i0]

    if d(u, vp) == i0 - 1:
        return _follow_geodesic(d, u, prefix, vp) + rest

    row = d.dist[u]
    # triangle move
    tops = sorted(z for z in g.neighbor_set(v) & g.neighbor_set(vp) if row[z] == i0 - 1)
    if tops:
        wp = w if w in tops else tops[0]
        return _follow_geodesic(d, u, prefix, wp) + [vp] + rest

    # pentagon move around v
    pentagon = _pentagon_tops(d, u, v, vp, w, i0)
    if not pentagon:
        raise PreconditionViolated("Neither a triangle nor a pentagon closes %s-%s toward %s" % (v, vp, u))
    wp, z = pentagon[0]
    return _follow_geodesic(d, u, path[:i0 - 1], z) + [wp, vp] + rest


def async_fellow_K(d, p1, p2):
    """
    Least K such that a monotone matching of p1 and p2, with steps
    (+1,0), (0,+1) or (+1,+1), keeps matched vertices within K.
    """
    if not len(p1) or not len(p2):
        raise PreconditionViolated("Paths must not be empty")
    if p1[0] != p2[0] or p1[-1] != p2[-1]:
        log.CB_WARNING("Comparing paths with different endpoints")
    dist = d.dist[np.ix_(list(p1), list(p2))]
    p, q = dist.shape
    ret = np.empty((p, q), dtype=np.int64)
    ret[0, 0] = dist[0, 0]
    for i in range(1, p):
        ret[i, 0] = max(ret[i - 1, 0], dist[i, 0])
    for j in range(1, q):
        ret[0, j] = max(ret[0, j - 1], dist[0, j])
    for i in range(1, p):
        for j in range(1, q):
            ret[i, j] = max(min(ret[i - 1, j], ret[i, j - 1], ret[i - 1, j - 1]), dist[i, j])
    return int(ret[-1, -1])


def non_geodesic_paths(d, max_len):
    """Walks of length 2..max_len, backtracks included, that are not geodesics"""
    g = d.graph

    def walks(prefix, remaining):
        if len(prefix) >= 3 and len(prefix) - 1 > d(prefix[0], prefix[-1]):
            yield tuple(prefix)
        if remaining == 0:
            return
        for w in g.neighbors(prefix[-1]):
            prefix.append(w)
            for p in walks(prefix, remaining - 1):
                yield p
            prefix.pop()

    for start in range(d.n):
        for p in walks([start], max_len):
            yield p


def almost_convexity_constant(d, k):
    """
    max over v, n and x, y in S_n(v) with d(x,y) <= k of the length of a
    shortest x-y path inside B_n(v); infinity when one does not exist.
    """
    g = d.graph
    adjacency = g.sparse_adjacency()
    worst = 0
    for v in range(d.n):
        for n in range(1, d.eccentricity(v) + 1):
            sphere = sorted(d.sphere(v, n))
            pairs = [(x, y) for i, x in enumerate(sphere) for y in sphere[i + 1:] if d(x, y) <= k]
            if not pairs:
                continue
            ball = np.flatnonzero(d.dist[v] <= n)
            inside = shortest_path(adjacency[ball][:, ball], directed=False, unweighted=True)
            index = dict((int(b), i) for i, b in enumerate(ball))
            for x, y in pairs:
                length = inside[index[x], index[y]]
                if np.isinf(length):
                    return float('inf')
                worst = max(worst, int(length))
    return worst
