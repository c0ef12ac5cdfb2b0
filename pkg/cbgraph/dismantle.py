"""
BFS orders, domination in graph powers, cores, and convex sets
stabilized by automorphisms.
"""
import random

import numpy as np
import networkx as nx

from cbgraph import log
from cbgraph.concurrency import first_witness
from cbgraph.graph import all_pairs_distances
from cbgraph.system import BadParameters, NotFound, PreconditionViolated


class BfsOrder(object):
    """
    Vertex order of a breadth-first search from ``base`` together with the
    parent map; ``parent[base] == base``.
    """
    def __init__(self, base, order, parent):
        self.base = base
        self.order = list(order)
        self.parent = dict(parent)
        self.position = {v: i for i, v in enumerate(self.order)}

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __repr__(self):
        return "BfsOrder(base=%s, order=%s)" % (self.base, self.order)

    def violation(self, d):
        """First vertex breaking the BFS order axioms, or None"""
        row = d.dist[self.base]
        g = d.graph
        if sorted(self.order) != list(range(d.n)) or self.order[0] != self.base:
            return self.base
        for i in range(1, len(self.order)):
            v = self.order[i]
            p = self.parent[v]
            if row[self.order[i - 1]] > row[v]:
                return v
            if self.position[p] >= i or not g.has_edge(p, v) or row[p] != row[v] - 1:
                return v
            earlier = [w for w in g.neighbors(v) if row[w] == row[v] - 1]
            if min(earlier, key=self.position.get) != p:
                return v
        return None


def bfs_order(g, base=0, tiebreak_seed=0):
    """
    BFS from ``base``. Seed 0 visits neighbors in ascending id order;
    other seeds shuffle each neighbor list, permuting the order within
    layers. A vertex's parent is the earliest visited neighbor of the
    previous layer.
    """
    if not 0 <= base < g.n:
        raise BadParameters("Base vertex %s out of range" % base)
    rng = random.Random(tiebreak_seed) if tiebreak_seed else None
    order = [base]
    parent = {base: base}
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        nbrs = list(g.neighbors(u))
        if rng is not None:
            rng.shuffle(nbrs)
        for w in nbrs:
            if w not in parent:
                parent[w] = u
                order.append(w)
    if len(order) != g.n:
        raise PreconditionViolated("BFS from %s reaches %s of %s vertices" % (base, len(order), g.n))
    return BfsOrder(base, order, parent)


def verify_dismantling(d, order, p=1, threads=1):
    """
    Checks that ``order`` dismantles the p-th power: every vertex after the
    first has an earlier neighbor (in G^p) whose closed neighborhood among
    the vertices up to v contains v's. Returns the first violator or None.
    """
    if p < 1:
        raise BadParameters("Power must be at least 1, got %s" % p)
    order = list(order)
    closed = d.dist <= p
    pos = np.empty(d.n, dtype=np.intp)
    pos[order] = np.arange(len(order))

    def dominated(i):
        v = order[i]
        prefix = pos <= i
        mine = closed[v] & prefix
        earlier = np.flatnonzero(closed[v] & (pos < i))
        if len(earlier) == 0:
            return v
        escapes = (mine[None, :] & ~closed[earlier]).any(axis=1)
        return None if (~escapes).any() else v

    return first_witness(dominated, range(1, len(order)), threads)


def dismantling_failure(d, bases=None, seeds=3, powers=(2,), threads=1):
    """
    Runs verify_dismantling over BFS orders from every base and seed.
    :return first failing (base, seed, p, vertex) or None
    """
    if bases is None:
        bases = range(d.n)
    for base in bases:
        for seed in range(seeds):
            order = bfs_order(d.graph, base, seed)
            for p in powers:
                v = verify_dismantling(d, order.order, p, threads)
                if v is not None:
                    return base, seed, p, v
    return None


def _dominator(closed, alive, v):
    mine = closed[v] & alive
    cands = np.flatnonzero(mine)
    cands = cands[cands != v]
    if len(cands) == 0:
        return None
    ok = ~(mine[None, :] & ~closed[cands]).any(axis=1)
    hits = cands[ok]
    return int(hits[0]) if len(hits) else None


def compute_core(g):
    """
    Repeatedly removes the smallest dominated vertex (closed neighborhood
    contained in that of another remaining vertex) until none is left.
    """
    if g.n == 0:
        return frozenset()
    closed = g.sparse_adjacency().toarray().astype(bool)
    np.fill_diagonal(closed, True)
    alive = np.ones(g.n, dtype=bool)
    removed = 0
    changed = True
    while changed:
        changed = False
        for v in np.flatnonzero(alive):
            w = _dominator(closed, alive, v)
            if w is not None:
                alive[v] = False
                removed += 1
                changed = True
                break
    log.CB_INFO("Core has %s vertices (%s dominated vertices removed)" % (int(alive.sum()), removed))
    return frozenset(np.flatnonzero(alive).tolist())


class CoreReport(object):
    def __init__(self, core, blocks, diameters):
        self.core = core
        self.blocks = blocks
        self.diameters = diameters

    def blocks_within(self, bound=2):
        return all(dm <= bound for dm in self.diameters)

    def __repr__(self):
        return "CoreReport(core=%s, block_diameters=%s)" % (sorted(self.core), self.diameters)


def core_report(g):
    """The core and the diameters of its 2-connected blocks"""
    core = compute_core(g)
    sub, order = g.induced(core)
    blocks = []
    diameters = []
    if sub.n > 1:
        sd = all_pairs_distances(sub)
        for b in sorted(tuple(sorted(b)) for b in nx.biconnected_components(sub.to_networkx())):
            blocks.append(tuple(order[i] for i in b))
            diameters.append(sd.diameter(b))
    return CoreReport(core, blocks, diameters)


class Automorphism(object):
    """Vertex permutation preserving adjacency and non-adjacency"""
    def __init__(self, g, perm):
        perm = list(perm)
        if sorted(perm) != list(range(g.n)):
            raise BadParameters("%s is not a permutation of 0..%s" % (perm, g.n - 1))
        for u, v in g.edges():
            if not g.has_edge(perm[u], perm[v]):
                raise BadParameters("Permutation maps edge %s-%s to a non-edge" % (u, v))
        self.perm = perm

    def __call__(self, v):
        return self.perm[v]

    def image(self, vertices):
        return frozenset(self.perm[v] for v in vertices)

    def stabilizes(self, vertices):
        vertices = frozenset(vertices)
        return self.image(vertices) == vertices

    def orbits(self):
        seen = set()
        orbits = []
        for v in range(len(self.perm)):
            if v in seen:
                continue
            orbit = []
            w = v
            while w not in seen:
                seen.add(w)
                orbit.append(w)
                w = self.perm[w]
            orbits.append(frozenset(orbit))
        return orbits

    @staticmethod
    def identity(g):
        return Automorphism(g, range(g.n))


def stabilized_convex_set(d, f):
    """
    Smallest convex f-invariant set of diameter at most 2, least in sorted
    order among the smallest. Every such set contains an orbit and hence
    the hull of that orbit, which is itself convex and f-invariant; the
    hulls of single orbits therefore contain every minimum.
    """
    best = None
    for orbit in f.orbits():
        if d.diameter(orbit) > 2:
            continue
        hull = d.convex_hull(orbit)
        if d.diameter(hull) > 2:
            continue
        key = (len(hull), sorted(hull))
        if best is None or key < best:
            best = key
    if best is None:
        raise NotFound("No convex set of diameter at most 2 is stabilized")
    return frozenset(best[1])


def stabilized_cliques(g, f):
    return [frozenset(c) for c in nx.enumerate_all_cliques(g.to_networkx()) if f.stabilizes(c)]


def stabilized_pentagons(d, f):
    from cbgraph.substructures import pentagons
    return [p for p in pentagons(d) if f.stabilizes(p.vertex_set())]
