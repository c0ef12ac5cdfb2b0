"""
Helly independence, Helly numbers h(G) and h_2(G), simplices, and the
exchange procedure turning an h-independent set into one of diameter at
most 2 and the same size.
"""
import itertools

import numpy as np

from cbgraph import log
from cbgraph.concurrency import parallel_map
from cbgraph.system import BadParameters, NotHIndependent, PreconditionViolated
from cbgraph.triangles import is_metric_triangle


def _hull_mask(d, vertices):
    mask = np.zeros(d.n, dtype=bool)
    mask[list(d.convex_hull(vertices))] = True
    return mask


def is_h_independent(d, vertices):
    """
    The hulls of A minus one element have an empty common intersection.
    The hull of the empty set is empty, so singletons qualify.
    """
    vertices = sorted(set(vertices))
    if not vertices:
        raise BadParameters("h-independence of an empty set")
    common = np.ones(d.n, dtype=bool)
    for a in vertices:
        common &= _hull_mask(d, [b for b in vertices if b != a])
        if not common.any():
            return True
    return False


def is_simplex(d, vertices):
    """Every triple is an equilateral metric triangle and I(u,w), I(v,x) are disjoint for distinct u,v,w,x"""
    vertices = sorted(set(vertices))
    if len(vertices) < 2:
        raise BadParameters("A simplex check needs at least two vertices")
    for u, v, w in itertools.combinations(vertices, 3):
        if not (is_metric_triangle(d, u, v, w) and d(u, v) == d(v, w) == d(u, w)):
            return False
    for quad in itertools.combinations(vertices, 4):
        a, b, c, e = quad
        for (p, q), (r, s) in (((a, b), (c, e)), ((a, c), (b, e)), ((a, e), (b, c))):
            if (d.interval_mask(p, q) & d.interval_mask(r, s)).any():
                return False
    return True


class HellyCertificate(object):
    """
    ``h`` with a witness set of that size, and ``h2`` likewise restricted
    to sets of diameter at most 2. ``capped`` means the search stopped at
    the cap and h is only a lower bound.
    """
    def __init__(self, h, witness, h2, witness2, capped=False):
        self.h = h
        self.witness = witness
        self.h2 = h2
        self.witness2 = witness2
        self.capped = capped

    def __repr__(self):
        return "HellyCertificate(h=%s%s, h2=%s)" % (self.h, "+" if self.capped else "", self.h2)


def _level_search(d, accepts, cap, threads):
    """
    Levels of a subset-closed family: level k holds its k-sets as sorted
    tuples. Sets grow by vertices larger than their maximum.
    """
    if d.n == 0:
        raise BadParameters("Subset search on an empty graph")
    levels = [[(v,) for v in range(d.n)]]
    while levels[-1] and len(levels[-1][0]) < cap:
        current = set(levels[-1])

        def extend(s):
            grown = []
            for x in range(s[-1] + 1, d.n):
                t = s + (x,)
                # every subset must already be in the family
                if all(t[:i] + t[i + 1:] in current for i in range(len(t) - 1)) and accepts(t):
                    grown.append(t)
            return grown

        nxt = []
        for chunk in parallel_map(extend, levels[-1], threads):
            nxt.extend(chunk)
        log.CB_INFO("%s sets of size %s" % (len(nxt), len(levels[-1][0]) + 1))
        levels.append(nxt)
    if not levels[-1]:
        levels.pop()
    return levels


def h_independent_levels(d, cap=8, threads=1):
    if cap < 2:
        raise BadParameters("Helly search cap must be at least 2, got %s" % cap)
    return _level_search(d, lambda s: is_h_independent(d, s), cap, threads)


def helly_number(d, cap=8, threads=1):
    """
    Exact h(G) and h_2(G) when no h-independent set of size ``cap``
    exists, otherwise a capped lower bound.
    """
    levels = h_independent_levels(d, cap, threads)
    top = levels[-1]
    h = len(top[0])
    h2, witness2 = 1, levels[0][0]
    for level in levels:
        for s in level:
            if d.diameter(s) <= 2:
                h2, witness2 = len(s), s
                break
    capped = h >= cap
    if capped:
        log.CB_WARNING("Helly search reached the cap %s; h is only a lower bound" % cap)
    return HellyCertificate(h, top[0], h2, witness2, capped)


def maximal_h_independent_sets(d, cap=8, threads=1):
    """h-independent sets of the search not contained in a larger one"""
    levels = h_independent_levels(d, cap, threads)
    maximal = []
    for i, level in enumerate(levels):
        covered = set()
        if i + 1 < len(levels):
            for t in levels[i + 1]:
                for j in range(len(t)):
                    covered.add(t[:j] + t[j + 1:])
        maximal.extend(s for s in level if s not in covered)
    return maximal


def simplex_number(d, cap=8, max_diameter=None, threads=1):
    """
    sigma(G), or sigma_k(G) with max_diameter=k.
    :return (size, witness, capped)
    """
    if cap < 2:
        raise BadParameters("Simplex search cap must be at least 2, got %s" % cap)

    def accepts(s):
        if max_diameter is not None and d.diameter(s) > max_diameter:
            return False
        return is_simplex(d, s)

    levels = _level_search(d, accepts, cap, threads)
    top = levels[-1]
    return len(top[0]), top[0], len(top[0]) >= cap


def delta(d, z, vertices):
    return sum(d(z, v) for v in vertices if v != z)


def total_delta(d, vertices):
    return min(delta(d, z, vertices) for z in vertices)


def exchange(d, vertices, u, v, x):
    """
    With x in I(u,v) and in the hull of A minus u, replaces v by x. The
    result is h-independent of the same size whenever A is.
    """
    vertices = frozenset(vertices)
    if u not in vertices or v not in vertices or u == v:
        raise PreconditionViolated("%s and %s must be distinct members of the set" % (u, v))
    if x not in d.interval(u, v) or x not in d.convex_hull(vertices - {u}):
        raise PreconditionViolated("%s is not in I(%s,%s) and the hull of the rest" % (x, u, v))
    return (vertices - {v}) | {x}


def _pull_in(d, vertices):
    """One exchange moving a member closer to a minimal vertex, or None"""
    score = total_delta(d, vertices)
    for z in sorted(vertices):
        if delta(d, z, vertices) != score:
            continue
        hull = d.convex_hull(vertices - {z})
        for u in sorted(vertices - {z}):
            candidates = (d.interval(u, z) & hull) - {u}
            if candidates:
                x = min(candidates, key=lambda c: (d(z, c), c))
                return exchange(d, vertices, z, u, x)
    return None


def _clique_in_hull(d, vertices):
    """
    For a distance-minimal h-independent simplex: the edge v x toward u
    plus the common neighbors of v and x lying on geodesics to the other
    members form a clique of at least the same size.
    """
    g = d.graph
    ordered = sorted(vertices)
    u, v = ordered[0], ordered[1]
    x = min(w for w in g.neighbors(v) if d(w, u) == d(v, u) - 1)
    imprints = set()
    for w in ordered[2:]:
        on_both = d.interval_mask(v, w) & d.interval_mask(x, w)
        imprints |= set(z for z in g.neighbor_set(v) & g.neighbor_set(x) if on_both[z])
    clique = [v, x] + sorted(imprints)[:len(ordered) - 2]
    if len(clique) < len(ordered) or not g.is_clique(clique):
        raise PreconditionViolated("No clique of size %s on the edge %s-%s" % (len(ordered), v, x))
    return frozenset(clique)


def reduce_h_independent(d, vertices):
    """
    Same-size h-independent set of diameter at most 2: exchanges pull
    members toward a minimal vertex while the total distance potential
    drops; a remaining simplex of larger diameter is replaced by a clique.
    """
    current = frozenset(vertices)
    if not is_h_independent(d, current):
        raise NotHIndependent("%s is not h-independent" % sorted(current))
    size = len(current)
    score = total_delta(d, current)
    steps = 0
    while d.diameter(current) > 2:
        nxt = _pull_in(d, current)
        if nxt is None:
            break
        new_score = total_delta(d, nxt)
        if new_score >= score or len(nxt) != size:
            raise PreconditionViolated("Exchange from %s did not decrease the potential" % sorted(current))
        current, score = nxt, new_score
        steps += 1
    if d.diameter(current) > 2:
        if not is_simplex(d, current):
            raise PreconditionViolated("Reduced set %s is neither of diameter 2 nor a simplex" % sorted(current))
        current = _clique_in_hull(d, current)
    log.CB_INFO("Reduced an h-independent set of size %s in %s exchanges" % (size, steps))
    if not is_h_independent(d, current):
        raise PreconditionViolated("Reduced set %s lost h-independence" % sorted(current))
    return current
