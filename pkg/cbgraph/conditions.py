"""
Local metric conditions on a distance oracle: triangle (TC), quadrangle
(QC), the pentagon family (PC0, PC1, PC2, PC+), the interval-clique
family (INC0, INC, INC+) and their triangle-or-pentagon combinations.

Every checker works at a single locus and raises PreconditionViolated
when the locus is not admissible. ``global_report`` sweeps all loci.
"""
from enum import Enum

import numpy as np

from cbgraph import log
from cbgraph.concurrency import first_witness
from cbgraph.convexity import ConvexityWitness, has_convex_balls
from cbgraph.system import PreconditionViolated, BadParameters


class ConditionId(Enum):
    TC = 'TC'
    QC = 'QC'
    PC0 = 'PC0'
    PC1 = 'PC1'
    PC2 = 'PC2'
    PCPLUS = 'PC+'
    INC0 = 'INC0'
    INC = 'INC'
    INCPLUS = 'INC+'
    TPC0 = 'TPC0'
    TPC1 = 'TPC1'
    TPC2 = 'TPC2'
    TPCPLUS = 'TPC+'


PC_VARIANTS = (ConditionId.PC0, ConditionId.PC1, ConditionId.PC2, ConditionId.PCPLUS)
INC_VARIANTS = (ConditionId.INC0, ConditionId.INC, ConditionId.INCPLUS)
TPC_VARIANTS = {
    ConditionId.TPC0: ConditionId.PC0,
    ConditionId.TPC1: ConditionId.PC1,
    ConditionId.TPC2: ConditionId.PC2,
    ConditionId.TPCPLUS: ConditionId.PCPLUS,
}
EDGE_CONDITIONS = (ConditionId.TC,) + PC_VARIANTS + tuple(TPC_VARIANTS)


class ConditionWitness(object):
    """
    Verdict of a condition over all admissible loci. ``locus`` is the
    first failing locus: (v, x, y) for edge conditions, (v, x, y, u) for
    QC and (u, v) for the INC family; ``k`` its distance parameter.
    """
    def __init__(self, condition, holds, locus=None, k=None, loci=0):
        self.condition = condition
        self.holds = holds
        self.locus = locus
        self.k = k
        self.loci = loci

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return "ConditionWitness(%s, %s, locus=%s, k=%s)" % (self.condition.value, self.holds, self.locus, self.k)

    def describe(self, name=str):
        if self.holds:
            return "holds on %s loci" % self.loci
        return "fails at %s (k=%s)" % (",".join(map(name, self.locus)), self.k)


def _layer_neighbors(d, x, v, level):
    g = d.graph
    row = d.dist[v]
    return [w for w in g.neighbors(x) if row[w] == level]


def _edge_distance(d, v, x, y, min_k):
    k = d(v, x)
    if d(v, y) != k or not d.graph.has_edge(x, y) or k < min_k:
        raise PreconditionViolated("(%s; %s, %s) needs x~y and d(v,x)=d(v,y)>=%s" % (v, x, y, min_k))
    return k


def check_tc(d, v, x, y):
    k = _edge_distance(d, v, x, y, 1)
    row = d.dist[v]
    g = d.graph
    return any(row[z] < k for z in g.neighbor_set(x) & g.neighbor_set(y))


def check_qc(d, v, x, y, u):
    g = d.graph
    k = d(v, x)
    if (d(v, y) != k or d(v, u) != k + 1 or x == y or g.has_edge(x, y)
            or not g.has_edge(u, x) or not g.has_edge(u, y)):
        raise PreconditionViolated("(%s; %s, %s, %s) is not a quadrangle locus" % (v, x, y, u))
    row = d.dist[v]
    return any(row[z] <= k - 1 and not g.has_edge(z, u)
               for z in g.neighbor_set(x) & g.neighbor_set(y))


def _pentagon_tops(d, v, x, y, w, k):
    """Pairs (w', z) closing x w z w' y into a pentagon with z in B_{k-2}(v)"""
    g = d.graph
    row = d.dist[v]
    if g.has_edge(w, y):
        return []
    tops = []
    for wp in _layer_neighbors(d, y, v, k - 1):
        if g.has_edge(wp, x) or g.has_edge(wp, w):
            continue
        for z in sorted(g.neighbor_set(w) & g.neighbor_set(wp)):
            if row[z] == k - 2:
                tops.append((wp, z))
    return tops


def _pc_oriented(d, variant, v, x, y, k):
    ws = _layer_neighbors(d, x, v, k - 1)
    if variant == ConditionId.PC0:
        return any(_pentagon_tops(d, v, x, y, w, k) for w in ws)
    if variant == ConditionId.PC1:
        return all(_pentagon_tops(d, v, x, y, w, k) for w in ws)
    # PC+: one (w', z) for every w
    common = None
    for w in ws:
        tops = set(_pentagon_tops(d, v, x, y, w, k))
        common = tops if common is None else common & tops
        if not common:
            return False
    return common is not None


def check_pc(d, variant, v, x, y):
    """
    PC0 and PC2 are symmetric in x, y. PC1 and PC+ quantify over the
    neighbors of x toward v, as stated at the ordered locus (v; x, y).
    """
    k = _edge_distance(d, v, x, y, 2)
    if variant == ConditionId.PC2:
        near = d.dist[v] <= k - 2
        return bool(np.array_equal((d.dist[x] <= 2) & near, (d.dist[y] <= 2) & near))
    if variant not in PC_VARIANTS:
        raise BadParameters("%s is not a pentagon condition" % variant)
    return _pc_oriented(d, variant, v, x, y, k)


def check_tpc(d, variant, v, x, y):
    if check_tc(d, v, x, y):
        return True
    if d(v, x) < 2:
        return False
    return check_pc(d, TPC_VARIANTS[variant], v, x, y)


def _toward(d, u, v):
    """Neighbors of u in I(u, v)"""
    return _layer_neighbors(d, u, v, d(u, v) - 1)


def check_inc(d, variant, u, v):
    if u == v:
        raise PreconditionViolated("INC needs distinct vertices, got %s twice" % u)
    g = d.graph
    ws = _toward(d, u, v)
    if not g.is_clique(ws):
        return False
    k = d(u, v)
    if variant == ConditionId.INC0 or k < 2:
        return True
    row = d.dist[v]
    if variant == ConditionId.INC:
        for i in range(len(ws)):
            for j in range(i + 1, len(ws)):
                common = g.neighbor_set(ws[i]) & g.neighbor_set(ws[j])
                if not any(row[z] == k - 2 for z in common):
                    return False
        return True
    if variant == ConditionId.INCPLUS:
        common = g.neighbor_set(ws[0])
        for w in ws[1:]:
            common = common & g.neighbor_set(w)
        return any(row[z] == k - 2 and d(u, z) == 2 for z in common)
    raise BadParameters("%s is not an interval-clique condition" % variant)


def check(d, condition, locus):
    """Re-evaluates a single condition at a recorded locus"""
    if condition == ConditionId.TC:
        return check_tc(d, *locus)
    if condition == ConditionId.QC:
        return check_qc(d, *locus)
    if condition in PC_VARIANTS:
        return check_pc(d, condition, *locus)
    if condition in TPC_VARIANTS:
        return check_tpc(d, condition, *locus)
    return check_inc(d, condition, *locus)


def edge_loci(d, v, min_k=1, max_dist=None):
    """Ordered loci (v; x, y) with x~y equidistant from v, edges in (x, y) order"""
    row = d.dist[v]
    loci = []
    for x, y in d.graph.edges():
        k = int(row[x])
        if k == row[y] and k >= min_k and (max_dist is None or k <= max_dist):
            loci.append((x, y, k))
    return loci


def qc_loci(d, v, max_dist=None):
    g = d.graph
    row = d.dist[v]
    loci = []
    for u in range(d.n):
        k = int(row[u]) - 1
        if k < 1 or (max_dist is not None and k > max_dist):
            continue
        below = [x for x in g.neighbors(u) if row[x] == k]
        for i in range(len(below)):
            for j in range(i + 1, len(below)):
                if not g.has_edge(below[i], below[j]):
                    loci.append((below[i], below[j], u, k))
    loci.sort()
    return loci


def _scan_edge_condition(d, condition, max_dist, threads):
    oriented = condition in (ConditionId.PC1, ConditionId.PCPLUS, ConditionId.TPC1, ConditionId.TPCPLUS)
    min_k = 2 if condition in PC_VARIANTS else 1

    def scan(v):
        for x, y, k in edge_loci(d, v, min_k, max_dist):
            orientations = ((x, y), (y, x)) if oriented else ((x, y),)
            for a, b in orientations:
                if not check(d, condition, (v, a, b)):
                    return ConditionWitness(condition, False, (v, a, b), k)
        return None

    found = first_witness(scan, range(d.n), threads)
    if found is not None:
        return found
    per_locus = 2 if oriented else 1
    loci = sum(per_locus * len(edge_loci(d, v, min_k, max_dist)) for v in range(d.n))
    return ConditionWitness(condition, True, loci=loci)


def _scan_qc(d, max_dist, threads):
    def scan(v):
        for x, y, u, k in qc_loci(d, v, max_dist):
            if not check_qc(d, v, x, y, u):
                return ConditionWitness(ConditionId.QC, False, (v, x, y, u), k)
        return None

    found = first_witness(scan, range(d.n), threads)
    if found is not None:
        return found
    return ConditionWitness(ConditionId.QC, True, loci=sum(len(qc_loci(d, v, max_dist)) for v in range(d.n)))


def _scan_inc(d, condition, max_dist, threads):
    def scan(u):
        for v in range(d.n):
            if v == u:
                continue
            k = d(u, v)
            if max_dist is not None and k > max_dist:
                continue
            if not check_inc(d, condition, u, v):
                return ConditionWitness(condition, False, (u, v), k)
        return None

    found = first_witness(scan, range(d.n), threads)
    if found is not None:
        return found
    off_diagonal = d.dist > 0
    if max_dist is not None:
        off_diagonal &= d.dist <= max_dist
    return ConditionWitness(condition, True, loci=int(off_diagonal.sum()))


def global_condition(d, condition, max_dist=None, threads=1):
    """
    Whether ``condition`` holds at every admissible locus with distance
    parameter at most max_dist (unbounded by default).
    """
    if condition == ConditionId.QC:
        return _scan_qc(d, max_dist, threads)
    if condition in INC_VARIANTS:
        return _scan_inc(d, condition, max_dist, threads)
    return _scan_edge_condition(d, condition, max_dist, threads)


def global_report(d, max_dist=None, threads=1):
    return [global_condition(d, c, max_dist, threads) for c in ConditionId]


class RecognitionMethod(Enum):
    DIRECT = 'DIRECT'
    INC_TPC0 = 'INC_TPC0'
    INC_TPC1 = 'INC_TPC1'
    INC_TPC2 = 'INC_TPC2'
    INCP_TPCP = 'INCP_TPCP'
    STRUCTURAL = 'STRUCTURAL'
    WELL_BRIDGED = 'WELL_BRIDGED'


DEFAULT_METHODS = (
    RecognitionMethod.DIRECT,
    RecognitionMethod.INC_TPC0,
    RecognitionMethod.INC_TPC1,
    RecognitionMethod.INC_TPC2,
    RecognitionMethod.INCP_TPCP,
    RecognitionMethod.STRUCTURAL,
)

LOCAL_PAIRS = {
    RecognitionMethod.INC_TPC0: (ConditionId.INC, ConditionId.TPC0),
    RecognitionMethod.INC_TPC1: (ConditionId.INC, ConditionId.TPC1),
    RecognitionMethod.INC_TPC2: (ConditionId.INC, ConditionId.TPC2),
    RecognitionMethod.INCP_TPCP: (ConditionId.INCPLUS, ConditionId.TPCPLUS),
}


def recognize_cb(d, method=RecognitionMethod.DIRECT, threads=1):
    """
    CB verdict by one of the equivalent characterizations. Failures
    carry the condition witness or substructure report in ``detail``.
    """
    if method == RecognitionMethod.DIRECT:
        return has_convex_balls(d, threads=threads)

    if method in LOCAL_PAIRS:
        for condition in LOCAL_PAIRS[method]:
            cw = global_condition(d, condition, threads=threads)
            if not cw.holds:
                return ConvexityWitness(False, method=method.value, detail=cw)
        return ConvexityWitness(True, method=method.value)

    from cbgraph import substructures

    if method == RecognitionMethod.STRUCTURAL:
        report = substructures.recognize_structural(d)
        return ConvexityWitness(report.is_cb(), method=method.value, detail=report)

    if method == RecognitionMethod.WELL_BRIDGED:
        bad = substructures.first_bad_isometric_cycle(d, allowed=(3, 5))
        if bad is not None:
            return ConvexityWitness(False, method=method.value, detail=bad)
        cw = global_condition(d, ConditionId.INC0, threads=threads)
        return ConvexityWitness(cw.holds, method=method.value, detail=None if cw.holds else cw)

    raise BadParameters("Unknown recognition method %s" % method)


def recognize_all(d, methods=DEFAULT_METHODS, threads=1):
    results = [recognize_cb(d, m, threads) for m in methods]
    verdicts = set(r.verdict for r in results)
    if len(verdicts) > 1:
        log.CB_ERROR("Recognizers disagree: %s" % ", ".join("%s=%s" % (r.method, r.verdict) for r in results))
    return results
