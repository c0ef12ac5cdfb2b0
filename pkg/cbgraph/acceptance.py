"""
The corpus suite: recognizer agreement, named verdicts, dismantling,
combing, path shortening, metric triangles, Helly numbers, covers,
power non-modularity and stabilized sets, each checked over built-in
corpora.
"""
import random

from joblib import Parallel, delayed

from cbgraph import log
from cbgraph import generators
from cbgraph import combing
from cbgraph import cover
from cbgraph import dismantle
from cbgraph import helly
from cbgraph import triangles
from cbgraph.conditions import ConditionId, check_qc, global_condition, recognize_all
from cbgraph.convexity import has_convex_balls, has_k_convex_balls, is_convex
from cbgraph.graph import all_pairs_distances, power_graph
from cbgraph.system import CBGraphError, EmptyLevel

# walks enumerated per graph by the path shortening criterion
WALK_BUDGET = 200000


class CriterionResult(object):
    def __init__(self, number, name, passed, checked=0, detail=None):
        self.number = number
        self.name = name
        self.passed = passed
        self.checked = checked
        self.detail = detail

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return "CriterionResult(%s %s: %s)" % (self.number, self.name, self.passed)


class Corpus(object):
    """
    Named graphs, every small connected graph, and seeded random graphs.
    ``entries`` are (name, graph) pairs; ``cb`` the ones with convex balls.
    """
    def __init__(self, atlas_max_n=7, size=500, max_n=12, seed=0, sections=(2, 3, 4, 5)):
        self.sections = list(sections)
        self.entries = []
        for spec, _ in self.named_specs():
            self.entries.append((repr(spec), generators.make(spec)))
        for k in (2, 3, 4):
            self.entries.append(('g_k(%s)' % k, generators.g_k(k)))
        self.entries.append(('cliquepath', generators.cliquepath()))
        for i, g in enumerate(generators.atlas_connected(atlas_max_n)):
            self.entries.append(('atlas#%s' % i, g))
        for i, g in enumerate(generators.random_corpus(max_n, size, seed)):
            self.entries.append(('random#%s' % i, g))
        self.cb = []
        log.CB_INFO("Corpus has %s graphs" % len(self.entries))

    def named_specs(self):
        specs = []
        for spec, expected in generators.named_verdicts():
            if spec.name == 'pentagon_chain':
                continue
            specs.append((spec, expected))
        for s in self.sections:
            specs.append((generators.FamilySpec('pentagon_chain', [s]), True))
        return specs

    def cb_upto(self, n):
        return [(name, g) for name, g in self.cb if g.n <= n]


def _recognition_row(g):
    d = all_pairs_distances(g)
    verdicts = tuple(r.verdict for r in recognize_all(d))
    k2 = has_k_convex_balls(d, 2).verdict
    inc = global_condition(d, ConditionId.INC).holds
    incplus = global_condition(d, ConditionId.INCPLUS).holds
    return verdicts, k2, inc, incplus


def recognizer_agreement(corpus, threads=1):
    rows = Parallel(n_jobs=threads)(delayed(_recognition_row)(g) for _, g in corpus.entries)
    corpus.cb = []
    for (name, g), (verdicts, k2, inc, incplus) in zip(corpus.entries, rows):
        if len(set(verdicts)) != 1:
            return CriterionResult(1, 'recognizer equivalence', False, len(rows),
                                   "%s: methods disagree %s" % (name, verdicts))
        if not (k2 == inc == incplus):
            return CriterionResult(1, 'recognizer equivalence', False, len(rows),
                                   "%s: 2-convex balls %s, INC %s, INC+ %s" % (name, k2, inc, incplus))
        if verdicts[0]:
            corpus.cb.append((name, g))
    log.CB_INFO("%s of %s corpus graphs have convex balls" % (len(corpus.cb), len(corpus.entries)))
    return CriterionResult(1, 'recognizer equivalence', True, len(rows))


def named_verdicts(corpus, threads=1):
    checked = 0
    for spec, expected in corpus.named_specs():
        d = all_pairs_distances(generators.make(spec))
        witness = has_convex_balls(d, threads=threads)
        checked += 1
        if witness.verdict != expected:
            return CriterionResult(2, 'named verdicts', False, checked, "%s: expected %s" % (spec, expected))
        if not expected and witness.pair is None:
            return CriterionResult(2, 'named verdicts', False, checked, "%s: no witness" % spec)
    return CriterionResult(2, 'named verdicts', True, checked)


def dismantling(corpus, seeds=3, powers=(2, 3, 4), seed=0, threads=1):
    rng = random.Random(seed)
    for name, g in corpus.cb:
        d = all_pairs_distances(g)
        bases = range(g.n) if g.n <= 12 else sorted(rng.sample(range(g.n), 10))
        failure = dismantle.dismantling_failure(d, bases, seeds, powers, threads)
        if failure is not None:
            return CriterionResult(3, 'dismantling', False, len(corpus.cb),
                                   "%s: base %s seed %s power %s vertex %s" % ((name,) + failure))
    return CriterionResult(3, 'dismantling', True, len(corpus.cb))


def bicombing(corpus, threads=1):
    graphs = corpus.cb_upto(10)
    for name, g in graphs:
        d = all_pairs_distances(g)
        for u in range(g.n):
            for v in range(g.n):
                try:
                    path = combing.clique_path(d, u, v)
                except EmptyLevel as e:
                    return CriterionResult(4, 'bicombing', False, len(graphs), "%s: %s" % (name, e))
                if not combing.is_normal(d, path):
                    return CriterionResult(4, 'bicombing', False, len(graphs),
                                           "%s: clique-path %s-%s not normal" % (name, u, v))
                if combing.enumerate_normal_paths(d, u, v) != [path]:
                    return CriterionResult(4, 'bicombing', False, len(graphs),
                                           "%s: normal clique-path %s-%s not unique" % (name, u, v))
    scanned = [('petersen', generators.petersen())] + graphs
    for name, g in scanned:
        d = all_pairs_distances(g)
        results = combing.fellow_traveler_report(d, threads=threads)
        if not combing.fellow_bounds_hold(results):
            return CriterionResult(4, 'bicombing', False, len(graphs),
                                   "%s: fellow traveler bounds fail %s" % (name, results))
    return CriterionResult(4, 'bicombing', True, len(graphs))


def _walk_length(g, max_len):
    top = max(g.degree(v) for v in range(g.n))
    length = max_len
    while length > 2 and g.n * max(top, 1) ** length > WALK_BUDGET:
        length -= 1
    if length < max_len:
        log.CB_WARNING("Scanning walks up to length %s only (degree %s)" % (length, top))
    return length


def path_shortening(corpus, max_len=6):
    graphs = corpus.cb_upto(10)
    paths = 0
    for name, g in graphs:
        d = all_pairs_distances(g)
        for walk in combing.non_geodesic_paths(d, _walk_length(g, max_len)):
            paths += 1
            try:
                shorter = combing.fftp_shorten(d, walk)
            except CBGraphError as e:
                return CriterionResult(5, 'path shortening', False, paths, "%s: %s on %s" % (name, e, walk))
            if len(shorter) >= len(walk) or shorter[0] != walk[0] or shorter[-1] != walk[-1]:
                return CriterionResult(5, 'path shortening', False, paths,
                                       "%s: %s shortened to %s" % (name, walk, shorter))
            if combing.async_fellow_K(d, walk, shorter) > 2:
                return CriterionResult(5, 'path shortening', False, paths,
                                       "%s: %s and %s do not 2-fellow travel" % (name, walk, shorter))
    return CriterionResult(5, 'path shortening', True, paths)


def metric_triangles(corpus, threads=1):
    for name, g in corpus.cb:
        d = all_pairs_distances(g)
        _, problems = triangles.histogram(d, threads)
        if problems:
            t, c = problems[0]
            return CriterionResult(6, 'metric triangles', False, len(corpus.cb), "%s: %s is %s" % (name, t, c))
    return CriterionResult(6, 'metric triangles', True, len(corpus.cb))


def helly_numbers(corpus, cap=8, threads=1):
    d = all_pairs_distances(generators.petersen())
    cert = helly.helly_number(d, cap, threads)
    if not cert.h == cert.h2 == 4:
        return CriterionResult(7, 'helly', False, 1, "petersen: %s" % cert)
    graphs = corpus.cb_upto(10)
    for name, g in graphs:
        d = all_pairs_distances(g)
        cert = helly.helly_number(d, cap, threads)
        if cert.h != cert.h2:
            return CriterionResult(7, 'helly', False, len(graphs), "%s: %s" % (name, cert))
        for s in helly.maximal_h_independent_sets(d, cap, threads):
            reduced = helly.reduce_h_independent(d, s)
            if len(reduced) != len(s) or d.diameter(reduced) > 2:
                return CriterionResult(7, 'helly', False, len(graphs),
                                       "%s: %s reduced to %s" % (name, s, sorted(reduced)))
    return CriterionResult(7, 'helly', True, len(graphs) + 1)


def covers(corpus):
    g = generators.petersen()
    state = cover.build_universal_cover(g, 0, 3)
    if not cover.reproduces(state, g):
        return CriterionResult(8, 'cover', False, 1, "petersen cover at R=3 is %s" % state)

    c13 = generators.cycle(13)
    state = cover.build_universal_cover(c13, 0, 6)
    full, _ = state.to_graph()
    if state.n != 13 or full.num_edges() != 12:
        return CriterionResult(8, 'cover', False, 2, "C13 cover at R=6 is %s" % state)
    report = cover.verify_cover_invariants(state)
    if not report.holds():
        return CriterionResult(8, 'cover', False, 2, "C13: %s" % report)
    if not cover.cover_is_cb_up_to(state, 3).verdict:
        return CriterionResult(8, 'cover', False, 2, "C13 cover balls are not convex")

    checked = 2
    for name, g in corpus.cb:
        d = all_pairs_distances(g)
        if g.n < 2 or cover.h1_rank_gf2(cover.build_complex(g, d)) != 0:
            continue
        if cover.first_stuck_cycle(d) is not None:
            continue
        checked += 1
        state = cover.build_universal_cover(g, 0, d.diameter(), d=d)
        if not cover.reproduces(state, g):
            return CriterionResult(8, 'cover', False, checked, "%s: cover at R=diameter differs" % name)
    return CriterionResult(8, 'cover', True, checked)


def power_non_modularity():
    for k in (2, 3, 4):
        g = generators.g_k(k)
        if not has_convex_balls(all_pairs_distances(g)).verdict:
            return CriterionResult(9, 'power non-modularity', False, k - 1, "G_%s has non-convex balls" % k)
        dk = all_pairs_distances(power_graph(g, k))
        lb = g.labels
        if check_qc(dk, lb['v'], lb['x'], lb['y'], lb['u']):
            return CriterionResult(9, 'power non-modularity', False, k - 1,
                                   "QC holds in the %s-th power of G_%s" % (k, k))
    return CriterionResult(9, 'power non-modularity', True, 3)


def stabilized_sets():
    g = generators.circulant(9, 1, 2)
    d = all_pairs_distances(g)
    f = dismantle.Automorphism(g, generators.rotation(9, 3))
    if dismantle.stabilized_cliques(g, f):
        return CriterionResult(10, 'stabilized sets', False, 1, "a clique is stabilized")
    if dismantle.stabilized_pentagons(d, f):
        return CriterionResult(10, 'stabilized sets', False, 1, "a pentagon is stabilized")
    s = dismantle.stabilized_convex_set(d, f)
    if d.diameter(s) > 2 or not is_convex(d, s) or not f.stabilizes(s):
        return CriterionResult(10, 'stabilized sets', False, 1, "%s is not a valid stabilized set" % sorted(s))
    return CriterionResult(10, 'stabilized sets', True, 1, "stabilized set %s" % sorted(s))


def run_all(corpus, args):
    """Criteria in order; the recognizer pass also fills ``corpus.cb``"""
    results = [recognizer_agreement(corpus, args.threads)]
    if not results[0].passed:
        log.CB_WARNING("Recognizers disagree; later criteria use the direct verdicts")
        corpus.cb = [(name, g) for name, g in corpus.entries
                     if has_convex_balls(all_pairs_distances(g)).verdict]
    results.append(named_verdicts(corpus, args.threads))
    results.append(dismantling(corpus, args.seeds, (2, 3, 4), args.seed, args.threads))
    results.append(bicombing(corpus, args.threads))
    results.append(path_shortening(corpus, args.max_len))
    results.append(metric_triangles(corpus, args.threads))
    results.append(helly_numbers(corpus, args.cap, args.threads))
    results.append(covers(corpus))
    results.append(power_non_modularity())
    results.append(stabilized_sets())
    return results
