"""
The triangle-pentagon complex of a graph, a contraction procedure for
closed walks, GF(2) first homology, and the layer-by-layer construction
of the universal cover around a base vertex.
"""
import itertools
from enum import Enum

import networkx as nx
from networkx.utils import UnionFind

from cbgraph import log
from cbgraph.conditions import ConditionId, _pentagon_tops, check_inc, check_tpc
from cbgraph.convexity import ConvexityWitness, has_k_convex_balls, _first_violation
from cbgraph.graph import Graph, all_pairs_distances
from cbgraph.system import BadParameters, LocalConditionsFail, MarginTooSmall, PreconditionViolated


class TwoComplex(object):
    """1-skeleton plus the induced triangles and induced pentagons as 2-cells"""
    def __init__(self, skeleton, triangles, pentagons):
        self.skeleton = skeleton
        self.triangles = triangles
        self.pentagons = pentagons

    def cells(self):
        return [tuple(t) + (t[0],) for t in self.triangles] + \
               [tuple(p.vertices) + (p.vertices[0],) for p in self.pentagons]

    def __repr__(self):
        return "TwoComplex(n=%s, m=%s, triangles=%s, pentagons=%s)" % (
            self.skeleton.n, self.skeleton.num_edges(), len(self.triangles), len(self.pentagons))


def build_complex(g, d=None):
    from cbgraph.substructures import pentagons
    if d is None:
        d = all_pairs_distances(g)
    triangles = []
    for u, v in g.edges():
        for w in sorted(g.neighbor_set(u) & g.neighbor_set(v)):
            if w > v:
                triangles.append((u, v, w))
    return TwoComplex(g, triangles, pentagons(d))


def gf2_rank(rows, n_cols):
    """Rank over GF(2) of rows given as int bitsets"""
    work = list(rows)
    rank = 0
    for col in range(n_cols):
        pivot = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def h1_rank_gf2(x):
    """
    Dimension of the cycle space modulo the span of the 2-cell boundaries.
    Zero is necessary for simple connectivity, not sufficient.
    """
    g = x.skeleton
    if not g.is_connected():
        raise PreconditionViolated("The skeleton must be connected")
    edge_index = {e: i for i, e in enumerate(g.edges())}
    rows = []
    for cell in x.cells():
        bits = 0
        for a, b in zip(cell, cell[1:]):
            bits ^= 1 << edge_index[(min(a, b), max(a, b))]
        rows.append(bits)
    cycle_rank = g.num_edges() - g.n + 1
    return cycle_rank - gf2_rank(rows, len(edge_index))


class Contraction(Enum):
    CONSTANT = 'CONSTANT'
    STUCK = 'STUCK'


class ContractionResult(object):
    def __init__(self, outcome, cycle, steps):
        self.outcome = outcome
        self.cycle = cycle
        self.steps = steps

    def __bool__(self):
        return self.outcome == Contraction.CONSTANT

    def __repr__(self):
        if self.outcome == Contraction.STUCK:
            return "STUCK(%s)" % ",".join(map(str, self.cycle))
        return "CONSTANT"


def _potential(d, base, cycle):
    row = d.dist[base]
    k = len(cycle)
    return sum(5 ** (int(row[cycle[i]]) + int(row[cycle[(i + 1) % k]])) for i in range(k))


def _normalize(cycle):
    """Drops repeated consecutive vertices and backtracks a-b-a of a closed walk"""
    cycle = list(cycle)
    changed = True
    while changed and len(cycle) > 1:
        changed = False
        k = len(cycle)
        for i in range(k):
            if cycle[i] == cycle[(i + 1) % k]:
                del cycle[i]
                changed = True
                break
            if k > 2 and cycle[(i - 1) % k] == cycle[(i + 1) % k]:
                # a-b-a becomes a
                for j in sorted((i, (i + 1) % k), reverse=True):
                    del cycle[j]
                changed = True
                break
            if k == 2:
                del cycle[1]
                changed = True
                break
    return cycle


def contract_cycle(d, cycle, base):
    """
    Rewrites a closed walk toward the constant walk at ``base``: shortcut
    through the two lower neighbors of a farthest vertex, a triangle move,
    or a pentagon move. Each move strictly lowers the potential
    sum 5^(d(b,u_i)+d(b,u_i+1)). STUCK means no move applies; it does not
    prove the walk is not null-homotopic.
    """
    g = d.graph
    cycle = list(cycle)
    for i in range(len(cycle)):
        a, b = cycle[i], cycle[(i + 1) % len(cycle)]
        if a != b and not g.has_edge(a, b):
            raise BadParameters("%s-%s is not an edge of the closed walk" % (a, b))
    row = d.dist[base]
    steps = 0
    while True:
        cycle = _normalize(cycle)
        if len(cycle) == 1:
            return ContractionResult(Contraction.CONSTANT, cycle, steps)
        before = _potential(d, base, cycle)
        far = max(range(len(cycle)), key=lambda i: (row[cycle[i]], -i))
        cycle = cycle[far:] + cycle[:far]
        r = int(row[cycle[0]])
        prev, nxt = cycle[-1], cycle[1]
        if row[prev] == r - 1 and row[nxt] == r - 1:
            if not g.has_edge(prev, nxt):
                return ContractionResult(Contraction.STUCK, cycle, steps)
            cycle = cycle[1:]
        else:
            if row[nxt] != r:
                cycle = [cycle[0]] + cycle[1:][::-1]
                nxt = cycle[1]
            x, y = cycle[0], nxt
            tc = [z for z in sorted(g.neighbor_set(x) & g.neighbor_set(y)) if row[z] == r - 1]
            if tc:
                cycle = [x, tc[0]] + cycle[1:]
            else:
                detour = None
                if r >= 2:
                    for w in sorted(g.neighbors(x)):
                        if row[w] != r - 1:
                            continue
                        tops = _pentagon_tops(d, base, x, y, w, r)
                        if tops:
                            wp, z = tops[0]
                            detour = [w, z, wp]
                            break
                if detour is None:
                    return ContractionResult(Contraction.STUCK, cycle, steps)
                cycle = [x] + detour + cycle[1:]
        steps += 1
        if _potential(d, base, _normalize(cycle)) >= before:
            raise PreconditionViolated("Contraction step did not lower the potential")


def cycle_basis(g):
    return nx.cycle_basis(g.to_networkx())


def first_stuck_cycle(d, base=0, cycles=None):
    """Contracts every cycle of a basis (or the given ones); the first STUCK result or None"""
    if cycles is None:
        cycles = cycle_basis(d.graph)
    for c in cycles:
        result = contract_cycle(d, c, base)
        if not result:
            return result
    return None


class CoverState(object):
    """
    Truncated universal cover B~_0..B~_R. Cover vertex t has image
    ``images[t]`` in G and height ``heights[t]``; ``layers[i]`` lists the
    vertices of height i. ``pending`` holds the pairs (w~, z) that would
    seed layer R+1.
    """
    def __init__(self, graph, base_image):
        self.graph = graph
        self.base_image = base_image
        self.images = [base_image]
        self.heights = [0]
        self.adj = [set()]
        self.layers = [[0]]
        self.pending = []

    @property
    def radius(self):
        return len(self.layers) - 1

    @property
    def n(self):
        return len(self.images)

    def add_vertex(self, image, height):
        self.images.append(image)
        self.heights.append(height)
        self.adj.append(set())
        while len(self.layers) <= height:
            self.layers.append([])
        self.layers[height].append(self.n - 1)
        return self.n - 1

    def add_edge(self, a, b):
        self.adj[a].add(b)
        self.adj[b].add(a)

    def below(self, height):
        return [t for t in range(self.n) if self.heights[t] <= height]

    def to_graph(self, max_height=None):
        """The 1-skeleton, optionally cut at a height; vertex ids are kept when not cut"""
        if max_height is None:
            edges = [(a, b) for a in range(self.n) for b in self.adj[a] if a < b]
            return Graph(self.n, edges), list(range(self.n))
        full, _ = self.to_graph()
        return full.induced(self.below(max_height))

    def __repr__(self):
        return "CoverState(base=%s, R=%s, vertices=%s)" % (self.base_image, self.radius, self.n)


def _pending_pairs(state, layer):
    g = state.graph
    pairs = []
    for t in layer:
        seen = set(state.images[s] for s in state.adj[t]) | {state.images[t]}
        for z in g.neighbors(state.images[t]):
            if z not in seen:
                pairs.append((t, z))
    return pairs


def _lower_neighbors(state, t, height):
    return set(s for s in state.adj[t] if state.heights[s] <= height)


def _attach_layer(state, i, validate):
    g = state.graph
    pairs = _pending_pairs(state, state.layers[i])
    uf = UnionFind(range(len(pairs)))
    by_image = {}
    for idx, (t, z) in enumerate(pairs):
        by_image.setdefault(z, []).append(idx)

    for z, idxs in by_image.items():
        for a, b in itertools.combinations(idxs, 2):
            ta, tb = pairs[a][0], pairs[b][0]
            if tb not in state.adj[ta]:
                continue
            if _lower_neighbors(state, ta, i - 1) & _lower_neighbors(state, tb, i - 1):
                uf.union(a, b)
            elif validate:
                raise LocalConditionsFail(
                    "Adjacent cover vertices %s and %s reach the same image without a common lower neighbor" % (ta, tb),
                    witness=(state.images[ta], state.images[tb], z))

    classes = {}
    order = []
    for idx in range(len(pairs)):
        root = uf[idx]
        if root not in classes:
            classes[root] = []
            order.append(root)
        classes[root].append(idx)

    if validate:
        for root in order:
            members = [pairs[idx][0] for idx in classes[root]]
            for a, b in itertools.combinations(members, 2):
                if a != b and b not in state.adj[a]:
                    raise LocalConditionsFail(
                        "An identification class mixes non-adjacent cover vertices %s and %s" % (a, b),
                        witness=(state.images[a], state.images[b], pairs[root][1]))

    # new vertices numbered by class discovery order
    vertex_of = {}
    members_of = {}
    lower_of = {}
    for root in order:
        z = pairs[root][1]
        t = state.add_vertex(z, i + 1)
        vertex_of[root] = t
        members_of[t] = set(pairs[idx][0] for idx in classes[root])
        lower = set()
        for w in members_of[t]:
            state.add_edge(w, t)
            lower |= _lower_neighbors(state, w, i - 1)
        lower_of[t] = lower

    new = [vertex_of[root] for root in order]
    by_new_image = {}
    for t in new:
        by_new_image.setdefault(state.images[t], []).append(t)
    for a in new:
        for zp in g.neighbors(state.images[a]):
            for b in by_new_image.get(zp, []):
                if b <= a:
                    continue
                if members_of[a] & members_of[b] or lower_of[a] & lower_of[b]:
                    state.add_edge(a, b)
    return len(new)


def build_universal_cover(g, base_image=0, radius=3, validate=True, d=None):
    """
    Builds B~_0..B~_radius of the universal cover of the triangle-pentagon
    complex of g. With validate set, balls of radius at most 3 must be
    convex and the class structure is checked while building.
    """
    if not 0 <= base_image < g.n:
        raise BadParameters("Base vertex %s out of range" % base_image)
    if radius < 0:
        raise BadParameters("Radius must be non-negative, got %s" % radius)
    if validate:
        if d is None:
            d = all_pairs_distances(g)
        witness = has_k_convex_balls(d, None, max_radius=3)
        if not witness.verdict:
            raise LocalConditionsFail("Balls of radius at most 3 are not convex: %s" % witness.describe(),
                                      witness=witness)
    state = CoverState(g, base_image)
    for i in range(radius):
        added = _attach_layer(state, i, validate)
        log.CB_INFO("Cover layer %s: %s vertices" % (i + 1, added))
        if added == 0:
            while len(state.layers) <= radius:
                state.layers.append([])
            break
    state.pending = _pending_pairs(state, state.layers[radius]) if state.layers[radius] else []
    return state


class CoverInvariantReport(object):
    """First failure per property, or None when it holds"""
    PROPERTIES = ('layers', 'local_conditions', 'interior_balls', 'pentagon_closure', 'boundary_balls')

    def __init__(self):
        self.failures = dict((p, None) for p in self.PROPERTIES)

    def fail(self, prop, where):
        if self.failures[prop] is None:
            self.failures[prop] = where

    def holds(self, prop=None):
        if prop is not None:
            return self.failures[prop] is None
        return all(v is None for v in self.failures.values())

    def __bool__(self):
        return self.holds()

    def __repr__(self):
        return "CoverInvariantReport(%s)" % ", ".join(
            "%s=%s" % (p, "ok" if self.failures[p] is None else self.failures[p]) for p in self.PROPERTIES)


def _local_isomorphism(state, g, t, ball):
    """Whether the image map restricted to ``ball`` is injective and preserves adjacency both ways"""
    images = [state.images[s] for s in ball]
    if len(set(images)) != len(images):
        return False
    for a, b in itertools.combinations(ball, 2):
        if (b in state.adj[a]) != g.has_edge(state.images[a], state.images[b]):
            return False
    return True


def verify_cover_invariants(state):
    """
    Checks the inductive properties on the cover cut at height R-1:
    layered balls, INC and TPC toward the base, local
    isomorphisms on unit balls, and closure of virtual 5-cycles.
    """
    report = CoverInvariantReport()
    g = state.graph
    top = state.radius - 1
    if top < 0:
        return report
    sub, order = state.to_graph(top)
    index = {t: i for i, t in enumerate(order)}
    sd = all_pairs_distances(sub)
    base = index[0]

    def adj(t):
        return [s for s in state.adj[t] if state.heights[s] <= top]

    for t in order:
        if sd(base, index[t]) != state.heights[t]:
            report.fail('layers', t)
            break

    for t in order:
        if t == 0:
            continue
        if not check_inc(sd, ConditionId.INC, index[t], base):
            report.fail('local_conditions', ('INC', t))
            break
    for a, b in sub.edges():
        if sd(base, a) == sd(base, b) and sd(base, a) >= 1:
            if not check_tpc(sd, ConditionId.TPC0, base, a, b):
                report.fail('local_conditions', ('TPC', order[a], order[b]))
                break

    for t in order:
        ball = [t] + adj(t)
        if state.heights[t] <= top - 1:
            neighborhood = g.closed_neighborhood(state.images[t])
            if set(state.images[s] for s in ball) != neighborhood or not _local_isomorphism(state, g, t, ball):
                report.fail('interior_balls', t)
        elif not _local_isomorphism(state, g, t, ball):
            report.fail('boundary_balls', t)

    for w in order:
        nbrs = adj(w)
        for x, y in itertools.permutations(nbrs, 2):
            for u in adj(x):
                for v in adj(y):
                    five = (u, x, w, y, v)
                    if len(set(five)) < 5:
                        continue
                    ims = [state.images[s] for s in five]
                    if len(set(ims)) == 5 and g.has_edge(ims[0], ims[4]) and v not in state.adj[u]:
                        report.fail('pentagon_closure', five)
    return report


def cover_is_cb_up_to(state, r):
    """
    Convexity of the balls of radius at most r centered at height at most
    R-2r, inside the truncated cover.
    """
    if r < 1 or r > state.radius - 3:
        raise MarginTooSmall("Radius %s needs 1 <= r <= R-3 = %s" % (r, state.radius - 3))
    full, _ = state.to_graph()
    cd = all_pairs_distances(full)
    for c in state.below(state.radius - 2 * r):
        for rho in range(1, r + 1):
            found = _first_violation(cd, cd.ball(c, rho))
            if found is not None:
                x, y, z = found
                return ConvexityWitness(False, center=c, radius=rho, pair=(x, y), outside=z, method='COVER')
    return ConvexityWitness(True, method='COVER')


def reproduces(state, g):
    """Whether the image map is an isomorphism from the cover onto g"""
    if sorted(state.images) != list(range(g.n)):
        return False
    edges = set()
    for a in range(state.n):
        for b in state.adj[a]:
            ia, ib = state.images[a], state.images[b]
            edges.add((min(ia, ib), max(ia, ib)))
    return edges == set(g.edges()) and sum(len(a) for a in state.adj) // 2 == g.num_edges()
