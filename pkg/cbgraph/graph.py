"""
Finite simple undirected graphs over dense vertex ids, and the metric
vocabulary built on top of them: distances, intervals, balls, joint
balls, convex hulls, powers and isometric subgraphs.
"""
import numpy as np
import networkx as nx
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from cbgraph import log
from cbgraph.concurrency import distance_table_fits
from cbgraph.system import DisconnectedGraph, BadParameters


class Graph(object):
    """
    Immutable simple graph with vertices 0..n-1.
    ``labels`` maps names of distinguished vertices to ids.
    """
    def __init__(self, n, edges=(), labels=None):
        if n < 0:
            raise BadParameters("Vertex count must be non-negative, got %s" % n)
        self.n = n
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameters("Edge (%s, %s) outside of vertex range 0..%s" % (u, v, n - 1))
            if u == v:
                raise BadParameters("Loop at vertex %s" % u)
            adj[u].add(v)
            adj[v].add(u)
        self.adjacency = [tuple(sorted(a)) for a in adj]
        self._adjsets = [frozenset(a) for a in adj]
        self.labels = dict(labels or {})
        self._nx = None

    def __repr__(self):
        return "Graph(n=%s, m=%s)" % (self.n, self.num_edges())

    def neighbors(self, v):
        return self.adjacency[v]

    def neighbor_set(self, v):
        return self._adjsets[v]

    def closed_neighborhood(self, v):
        return self._adjsets[v] | {v}

    def has_edge(self, u, v):
        return v in self._adjsets[u]

    def degree(self, v):
        return len(self.adjacency[v])

    def edges(self):
        """Edges (u, v) with u < v in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def num_edges(self):
        return sum(len(a) for a in self.adjacency) // 2

    def is_clique(self, vertices):
        vertices = list(vertices)
        for i in range(len(vertices)):
            for j in range(i + 1, len(vertices)):
                if not self.has_edge(vertices[i], vertices[j]):
                    return False
        return True

    def is_connected(self):
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def induced(self, vertices):
        """
        Induced subgraph, relabeled densely in ascending id order.
        :return (subgraph, list mapping new id -> old id)
        """
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u in order for v in self.adjacency[u]
                 if v in index and u < v]
        return Graph(len(order), edges), order

    def sparse_adjacency(self):
        rows = [u for u in range(self.n) for _ in self.adjacency[u]]
        cols = [v for u in range(self.n) for v in self.adjacency[u]]
        data = np.ones(len(rows), dtype=np.int8)
        return csr_matrix((data, (rows, cols)), shape=(self.n, self.n))

    def to_networkx(self):
        """Shared networkx view of the graph; callers must not mutate it"""
        if self._nx is None:
            g = nx.Graph()
            g.add_nodes_from(range(self.n))
            g.add_edges_from(self.edges())
            self._nx = g
        return self._nx

    @staticmethod
    def from_networkx(nxg, labels=None):
        """
        Relabels an arbitrary networkx graph onto 0..n-1, in sorted node
        order when the nodes are sortable and insertion order otherwise.
        """
        nodes = list(nxg.nodes())
        try:
            nodes = sorted(nodes)
        except TypeError:
            pass
        index = {v: i for i, v in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in nxg.edges() if u != v]
        mapped = {}
        for name, v in (labels or {}).items():
            mapped[name] = index[v]
        return Graph(len(nodes), edges, mapped)

    def relabel(self, perm, labels=None):
        """Graph with vertex v renamed to perm[v]"""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()],
                     labels if labels is not None else {k: perm[v] for k, v in self.labels.items()})


class DistanceOracle(object):
    """
    All-pairs hop distances of a connected graph with the metric queries
    used throughout the toolkit. Every set-valued query returns a frozenset.
    """
    def __init__(self, graph, dist):
        self.graph = graph
        self.n = graph.n
        self.dist = dist
        self._hulls = {}

    def __call__(self, u, v):
        return int(self.dist[u, v])

    def diameter(self, vertices=None):
        if vertices is None:
            return int(self.dist.max()) if self.n else 0
        idx = np.fromiter(vertices, dtype=np.intp)
        if len(idx) == 0:
            return 0
        return int(self.dist[np.ix_(idx, idx)].max())

    def eccentricity(self, v):
        return int(self.dist[v].max())

    def interval_mask(self, u, v):
        return self.dist[u] + self.dist[v] == self.dist[u, v]

    def interval(self, u, v):
        return frozenset(np.flatnonzero(self.interval_mask(u, v)).tolist())

    def ball(self, v, r):
        return frozenset(np.flatnonzero(self.dist[v] <= r).tolist())

    def sphere(self, v, r):
        return frozenset(np.flatnonzero(self.dist[v] == r).tolist())

    def ball_around_set(self, vertices, r):
        idx = np.fromiter(vertices, dtype=np.intp)
        if len(idx) == 0:
            return frozenset()
        return frozenset(np.flatnonzero(self.dist[idx].min(axis=0) <= r).tolist())

    def joint_ball(self, vertices, k):
        """B*_k(S): vertices at distance at most k from every member of S"""
        idx = np.fromiter(vertices, dtype=np.intp)
        if len(idx) == 0:
            raise BadParameters("Joint ball of an empty set")
        return frozenset(np.flatnonzero(self.dist[idx].max(axis=0) <= k).tolist())

    def set_distance(self, a, b):
        return int(min(self.dist[x, y] for x in a for y in b))

    def is_uniform_distance(self, a, b, k):
        return all(self.dist[x, y] == k for x in a for y in b)

    def convex_hull_mask(self, vertices):
        members = np.zeros(self.n, dtype=bool)
        frontier = sorted(set(vertices))
        members[frontier] = True
        while frontier:
            inside = np.flatnonzero(members)
            added = np.zeros(self.n, dtype=bool)
            rows = self.dist[inside]
            for u in frontier:
                on_geodesic = (self.dist[u][None, :] + rows) == self.dist[u, inside][:, None]
                added |= on_geodesic.any(axis=0)
            new = added & ~members
            members |= new
            frontier = np.flatnonzero(new).tolist()
        return members

    def convex_hull(self, vertices):
        """
        Least convex superset of the given vertices; hull of the empty set
        is empty. Results are memoized per vertex set.
        """
        key = frozenset(vertices)
        hull = self._hulls.get(key)
        if hull is None:
            hull = frozenset(np.flatnonzero(self.convex_hull_mask(key)).tolist())
            self._hulls[key] = hull
        return hull


def all_pairs_distances(g):
    """
    Hop distances of a connected graph.
    Raises DisconnectedGraph when some pair is unreachable.
    """
    if g.n == 0:
        return DistanceOracle(g, np.zeros((0, 0), dtype=np.int32))
    distance_table_fits(g.n)
    raw = shortest_path(g.sparse_adjacency(), method='D', directed=False, unweighted=True)
    if np.isinf(raw).any():
        u, v = np.argwhere(np.isinf(raw))[0]
        raise DisconnectedGraph("Vertices %s and %s are not connected" % (u, v))
    return DistanceOracle(g, raw.astype(np.int32))


def power_graph(g, p, d=None):
    """p-th power: same vertices, u~v iff 1 <= d(u,v) <= p"""
    if p < 1:
        raise BadParameters("Power must be at least 1, got %s" % p)
    if p == 1:
        return Graph(g.n, g.edges(), g.labels)
    if d is None:
        d = all_pairs_distances(g)
    us, vs = np.nonzero((d.dist >= 1) & (d.dist <= p))
    return Graph(g.n, [(int(u), int(v)) for u, v in zip(us, vs) if u < v], g.labels)


def is_isometric_subgraph(g, vertices, d=None):
    """Whether distances in the induced subgraph equal the ambient ones"""
    if d is None:
        d = all_pairs_distances(g)
    sub, order = g.induced(vertices)
    try:
        sub_d = all_pairs_distances(sub)
    except DisconnectedGraph:
        log.CB_WARNING("Induced subgraph on %s is disconnected" % order)
        return False
    idx = np.array(order, dtype=np.intp)
    return bool((sub_d.dist == d.dist[np.ix_(idx, idx)]).all())
