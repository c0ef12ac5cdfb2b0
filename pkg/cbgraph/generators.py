"""
Deterministic constructors for the named graphs of the toolkit (Moore
graphs, the forbidden patterns, the drawn examples, circulants, the
triangular G_k family) and seeded random corpora.

Drawn examples are guarded: each construction re-checks the properties
its drawing asserts and raises PreconditionViolated when they fail.
"""
import random

import networkx as nx

from cbgraph import log
from cbgraph.graph import Graph, all_pairs_distances
from cbgraph.system import UnknownFamily, BadParameters, PreconditionViolated


class FamilySpec(object):
    """A family name plus its parameters, as typed on the command line"""
    def __init__(self, name, params=()):
        self.name = name
        self.params = list(params)

    def __repr__(self):
        if self.params:
            return "%s(%s)" % (self.name, ", ".join(map(str, self.params)))
        return self.name


def _named(edges, labeled=()):
    """
    Builds a graph from edges over arbitrary hashable names. Vertices are
    numbered in first-appearance order. ``labeled`` lists the names exposed
    in the label map, or maps label -> name.
    """
    index = {}
    for a, b in edges:
        for name in (a, b):
            if name not in index:
                index[name] = len(index)
    if not isinstance(labeled, dict):
        labeled = {str(name): name for name in labeled}
    labels = {label: index[name] for label, name in labeled.items()}
    return Graph(len(index), [(index[a], index[b]) for a, b in edges], labels)


def _guard(name, condition, message):
    if not condition:
        raise PreconditionViolated("Construction of %s fails its check: %s" % (name, message))


def _guard_cb(name, g):
    from cbgraph.convexity import has_convex_balls
    witness = has_convex_balls(all_pairs_distances(g))
    _guard(name, witness.verdict, "balls are not convex (%s)" % witness.describe())


def _ints(params, count, family):
    if len(params) != count:
        raise BadParameters("%s takes %s parameter(s), got %s" % (family, count, len(params)))
    try:
        return [int(p) for p in params]
    except (TypeError, ValueError):
        raise BadParameters("%s parameters must be integers, got %s" % (family, list(params)))


def cycle(n):
    if n < 3:
        raise BadParameters("A cycle needs at least 3 vertices, got %s" % n)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def clique(n):
    if n < 1:
        raise BadParameters("A clique needs at least 1 vertex, got %s" % n)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n):
    if n < 1:
        raise BadParameters("A path needs at least 1 vertex, got %s" % n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def wedge(g1, g2, at1=0, at2=0):
    """One-point union identifying vertex at1 of g1 with vertex at2 of g2"""
    if not (0 <= at1 < g1.n and 0 <= at2 < g2.n):
        raise BadParameters("Wedge point out of range")
    mapping = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == at2:
            mapping[v] = at1
        else:
            mapping[v] = nxt
            nxt += 1
    edges = g1.edges() + [(mapping[a], mapping[b]) for a, b in g2.edges()]
    return Graph(nxt, edges)


def wedge_of_cycles(*lengths):
    if not lengths:
        raise BadParameters("wedge needs at least one cycle length")
    g = cycle(lengths[0])
    for length in lengths[1:]:
        g = wedge(g, cycle(length))
    return g


def petersen():
    """
    Outer cycle 1..5, spokes i -> i+5, inner pentagram 6-8-10-7-9.
    Vertex i of the drawing is id i-1; h1..h4 mark an h-independent set.
    """
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
             (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
             (6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    g = Graph(10, [(a - 1, b - 1) for a, b in edges],
              {'h1': 0, 'h2': 1, 'h3': 7, 'h4': 9})
    from cbgraph.substructures import moore_degree
    _guard('petersen', moore_degree(g) == 3, "not a Moore graph of degree 3")
    return g


def hoffman_singleton():
    g = Graph.from_networkx(nx.hoffman_singleton_graph())
    from cbgraph.substructures import moore_degree
    _guard('hoffman_singleton', g.num_edges() == 175 and moore_degree(g) == 7,
           "not a Moore graph of degree 7 with 175 edges")
    return g


def pt():
    from cbgraph.substructures import pattern_pt
    return Graph.from_networkx(pattern_pt())


def pp1():
    from cbgraph.substructures import pattern_pp1
    return Graph.from_networkx(pattern_pp1())


def pp2():
    from cbgraph.substructures import pattern_pp2
    return Graph.from_networkx(pattern_pp2())


def ctreex():
    """
    Graph with convex balls where x, y sit at distance 3 from v, TC(v,xy)
    fails, and the neighbors w of x and w' of y toward v have no common
    neighbor in B_1(v).
    """
    edges = [('x', 'w'), ('x', 'y'), ('x', 12),
             ('w', 12), ('w', 13), ('w', 21),
             (12, 13), (12, 21), (12, 22),
             (13, 21), (13, 14), (13, 22), (13, "w'"),
             (21, 22), (21, 14), (21, 'v'),
             ('v', 22),
             (22, 14), (22, "w'"),
             (14, 'y'), (14, "w'"),
             ('y', "w'")]
    g = _named(edges, ('x', 'y', 'w', "w'", 'v'))
    d = all_pairs_distances(g)
    lb = g.labels
    v, x, y, w, wp = lb['v'], lb['x'], lb['y'], lb['w'], lb["w'"]
    _guard('ctreex', d(v, x) == 3 and d(v, y) == 3, "d(v,x) = d(v,y) = 3")
    _guard('ctreex', not (g.neighbor_set(x) & g.neighbor_set(y)), "x and y have a common neighbor")
    near = d.ball(v, 1)
    _guard('ctreex', not (g.neighbor_set(w) & g.neighbor_set(wp) & near),
           "w and w' have a common neighbor in B_1(v)")
    _guard_cb('ctreex', g)
    return g


def diameter3notwm():
    """
    Two pentagons d-e-a-b-c and d-e-f-g-h sharing the edge d-e, made
    CB by s (universal for d-e-f-g-h) and t. Diameter 3.
    """
    edges = [('e', 'a'), ('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'e'),
             ('e', 'f'), ('f', 'g'), ('g', 'h'), ('h', 'd'),
             ('s', 'g'), ('s', 'f'), ('s', 'e'), ('s', 'd'), ('s', 'h'), ('s', 't'), ('s', 'c'),
             ('t', 'c'), ('t', 'f'), ('t', 'b')]
    g = _named(edges, 'abcdefghst')
    _guard('diameter3notwm', all_pairs_distances(g).diameter() == 3, "diameter is 3")
    _guard_cb('diameter3notwm', g)
    return g


def pentagon_chain(sections=2):
    """
    Finite truncation of the infinite chain of pentagons glued path-like.
    Each section adds a pentagon and a vertex joining it to the previous
    one; the first vertex s caps the first pentagon.
    """
    if sections < 2:
        raise BadParameters("A pentagon chain needs at least 2 sections, got %s" % sections)
    edges = []
    counter = [0]

    def fresh():
        counter[0] += 1
        return counter[0] - 1

    def pentagon():
        vs = [fresh() for _ in range(5)]
        edges.extend((vs[i], vs[(i + 1) % 5]) for i in range(5))
        return vs

    left = pentagon()
    s = fresh()
    edges.extend([(s, left[0]), (s, left[1])])
    for _ in range(sections - 1):
        right = pentagon()
        edges.extend([(left[4], right[0]), (left[3], right[4]), (left[4], right[4]),
                      (s, left[4]), (s, right[4])])
        joint = fresh()
        edges.extend((joint, t) for t in (left[4], right[4], right[3], right[2]))
        left = [right[3], right[4], right[0], right[1], right[2]]
        s = joint

    g = Graph(counter[0], edges)
    _guard_cb('pentagon_chain', g)
    return g


def circulant(n, *connections):
    """Cayley graph of Z_n with the given connection set"""
    if n < 1:
        raise BadParameters("Circulant needs n >= 1, got %s" % n)
    if not connections:
        raise BadParameters("Circulant needs a non-empty connection set")
    offsets = sorted(set(c % n for c in connections) - {0})
    g = Graph.from_networkx(nx.circulant_graph(n, offsets))
    if not g.is_connected():
        raise BadParameters("Circulant(%s, %s) is disconnected" % (n, offsets))
    return g


def rotation(n, shift):
    """Permutation v -> v + shift mod n, an automorphism of every circulant on Z_n"""
    return [(v + shift) % n for v in range(n)]


def g_k(k):
    """
    Triangular grid of side k glued under an inverted triangular grid of
    side k+1, topped by a path to v. Labels u, v, x, y: u is adjacent to
    x and y in the k-th power and d(u,v) = 3k-1 in the graph.
    """
    if k < 2:
        raise BadParameters("G_k needs k >= 2, got %s" % k)
    edges = []

    def low(x, y):
        # bottom row of the lower triangle is row 0 of the upper one
        return ('up', x, 0) if y == k else ('low', x, y)

    for y in range(1, k + 1):
        for x in range(1, y + 1):
            if x > 1:
                edges.append((low(x, y), low(x - 1, y)))
                edges.append((low(x, y), low(x - 1, y - 1)))
            if x < y:
                edges.append((low(x, y), low(x, y - 1)))

    for y in range(0, k + 2):
        for x in range(0, k + 2 - y):
            if x > 0:
                edges.append((('up', x, y), ('up', x - 1, y)))
            if y > 0:
                edges.append((('up', x, y), ('up', x, y - 1)))
                edges.append((('up', x, y), ('up', x + 1, y - 1)))

    tail = ('up', 0, k + 1)
    for i in range(k - 1):
        edges.append((tail, ('top', i)))
        tail = ('top', i)

    u, x, y = ('low', 1, 1), ('up', 0, 0), ('up', k + 1, 0)
    g = _named(edges, {'u': u, 'v': tail, 'x': x, 'y': y})

    d = all_pairs_distances(g)
    lb = g.labels
    _guard('g_k', d(lb['u'], lb['x']) == k and d(lb['u'], lb['y']) == k, "d(u,x) = d(u,y) = k")
    _guard('g_k', d(lb['u'], lb['v']) == 3 * k - 1, "d(u,v) = 3k-1")
    _guard('g_k', d(lb['x'], lb['v']) == 2 * k and d(lb['y'], lb['v']) == 2 * k, "d(x,v) = d(y,v) = 2k")
    _guard('g_k', d(lb['x'], lb['y']) == k + 1, "d(x,y) = k+1")
    return g


def cliquepath():
    """Small CB graph whose clique-path from u to v has level sizes 1,3,1,2,1"""
    edges = [('u', 11), ('u', 12), ('u', 13), (11, 12), (12, 13), (11, 13),
             (12, 22), (22, 21), (21, 11), (11, 22), (22, 13), (13, 23), (23, 22),
             (22, 31), (31, 'v'), ('v', 32), (32, 23), (21, 31), (31, 32), (32, 22)]
    g = _named(edges, ('u', 'v'))
    _guard('cliquepath', all_pairs_distances(g)(g.labels['u'], g.labels['v']) == 4, "d(u,v) = 4")
    return g


def gnp(n, percent, seed):
    """Connected G(n, p) sample, p given in percent; resampled until connected"""
    if n < 1 or not 0 < percent <= 100:
        raise BadParameters("gnp needs n >= 1 and 0 < percent <= 100")
    rng = random.Random(seed)
    for _ in range(1000):
        nxg = nx.gnp_random_graph(n, percent / 100.0, seed=rng.randrange(2 ** 31))
        if nx.is_connected(nxg):
            return Graph.from_networkx(nxg)
    raise BadParameters("No connected G(%s, %s%%) sample in 1000 attempts" % (n, percent))


FAMILIES = {
    'petersen': (petersen, 0),
    'hoffman_singleton': (hoffman_singleton, 0),
    'pt': (pt, 0),
    'pp1': (pp1, 0),
    'pp2': (pp2, 0),
    'ctreex': (ctreex, 0),
    'diameter3notwm': (diameter3notwm, 0),
    'cliquepath': (cliquepath, 0),
    'pentagon_chain': (pentagon_chain, 1),
    'g_k': (g_k, 1),
    'cycle': (cycle, 1),
    'clique': (clique, 1),
    'path': (path, 1),
    'gnp': (gnp, 3),
    # variadic
    'circulant': (circulant, None),
    'wedge': (wedge_of_cycles, None),
}


def _flatten(params):
    tokens = []
    for p in params:
        if isinstance(p, str):
            tokens.extend(t for t in p.split(',') if t)
        else:
            tokens.append(p)
    return tokens


def make(family, params=()):
    """
    Builds a named graph. ``family`` is a name or a FamilySpec;
    comma-separated parameter tokens are split.
    """
    if isinstance(family, FamilySpec):
        family, params = family.name, family.params
    if family not in FAMILIES:
        raise UnknownFamily("Unknown family %s (known: %s)" % (family, ", ".join(sorted(FAMILIES))))
    constructor, arity = FAMILIES[family]
    tokens = _flatten(params)
    if arity is None:
        if not tokens:
            raise BadParameters("%s needs parameters" % family)
        values = _ints(tokens, len(tokens), family)
    else:
        values = _ints(tokens, arity, family)
    g = constructor(*values)
    log.CB_INFO("Generated %s: %s vertices, %s edges" % (FamilySpec(family, values), g.n, g.num_edges()))
    return g


def named_verdicts():
    """Named graphs with their expected CB verdict"""
    return [
        (FamilySpec('petersen'), True),
        (FamilySpec('hoffman_singleton'), True),
        (FamilySpec('cycle', [5]), True),
        (FamilySpec('circulant', [9, 1, 2]), True),
        (FamilySpec('ctreex'), True),
        (FamilySpec('diameter3notwm'), True),
        (FamilySpec('pentagon_chain', [2]), True),
        (FamilySpec('pentagon_chain', [3]), True),
        (FamilySpec('pentagon_chain', [4]), True),
        (FamilySpec('pentagon_chain', [5]), True),
        (FamilySpec('pt'), False),
        (FamilySpec('pp1'), False),
        (FamilySpec('cycle', [4]), False),
        (FamilySpec('cycle', [6]), False),
        (FamilySpec('cycle', [7]), False),
        (FamilySpec('cycle', [8]), False),
    ]


DENSITIES = (0.15, 0.25, 0.35, 0.5, 0.7)


def random_corpus(n_max, count, seed=0):
    """
    ``count`` connected G(n, p) samples with 3 <= n <= n_max over a spread
    of densities, identical for a given seed.
    """
    if not 3 <= n_max <= 14:
        raise BadParameters("random_corpus needs 3 <= n_max <= 14, got %s" % n_max)
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < count:
        n = rng.randint(3, n_max)
        p = rng.choice(DENSITIES)
        nxg = nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 31))
        if nx.is_connected(nxg):
            corpus.append(Graph.from_networkx(nxg))
    return corpus


def atlas_connected(max_n=7):
    """Every connected graph on 1..max_n vertices, up to isomorphism"""
    if not 1 <= max_n <= 7:
        raise BadParameters("The graph atlas covers 1..7 vertices, got %s" % max_n)
    return [Graph.from_networkx(nxg) for nxg in nx.graph_atlas_g()
            if 1 <= nxg.number_of_nodes() <= max_n and nx.is_connected(nxg)]


def cb_only(graphs, threads=1):
    """The members of a corpus with convex balls"""
    from cbgraph.convexity import has_convex_balls
    return [g for g in graphs if has_convex_balls(all_pairs_distances(g), threads=threads).verdict]
