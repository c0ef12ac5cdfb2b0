from cbgraph import types
from cbgraph import dismantle
from cbgraph.arghelpers import rerun_command
from cbgraph.system import ExitException, NotFound
from cbgraph.types import format_value
from stages.dataset import resolve_vertex


def parse_perm(text, ids, n):
    """
    Images of the vertices in increasing id order, as input ids, or
    shift:k. Returns the permutation on dense ids.
    """
    if text.startswith('shift:'):
        try:
            k = int(text[len('shift:'):])
        except ValueError:
            raise ExitException("Bad shift in --perm %s" % text)
        return [(v + k) % n for v in range(n)]
    try:
        images = [int(t) for t in text.split(',') if t.strip()]
    except ValueError:
        raise ExitException("--perm must list integers, got %s" % text)
    return [ids.to_dense(v) for v in images]


class CBDismantleStage(types.CB_Stage):
    def process(self, args, outputs):
        d = outputs['d']
        report = outputs['report']
        operand = outputs['operand']
        relabel = outputs['relabel']
        ids = outputs['ids']

        if args.base is not None:
            bases = [resolve_vertex(d.graph, relabel, str(args.base))]
        else:
            bases = list(range(d.n))

        report.add('bases', len(bases))
        report.add('seeds', args.seeds)
        report.add('powers', args.power)

        failure = dismantle.dismantling_failure(d, bases, args.seeds, args.power, args.threads)
        report.conclude(failure is None)
        if failure is not None:
            base, seed, p, v = failure
            order = dismantle.bfs_order(d.graph, base, seed)
            report.add('order', ids.many(order.order))
            report.fail('dismantling', "BFS order from %s (seed %s) fails at %s in power %s" % (ids(base), seed, ids(v), p),
                        rerun_command('dismantle', [operand], {'base': ids.name(base),
                                                               'power': p, 'seeds': seed + 1}))
        else:
            report.add('order', ids.many(dismantle.bfs_order(d.graph, bases[0], 0).order))


class CBCoreStage(types.CB_Stage):
    """Core of the graph and the diameters of its blocks"""
    def process(self, args, outputs):
        g = outputs['graph']
        report = outputs['report']
        ids = outputs['ids']

        core = dismantle.core_report(g)
        report.add('core', ids.sorted(core.core))
        report.add('core_size', len(core.core))
        report.add('blocks', len(core.blocks))
        report.add('block_diameters', core.diameters)
        report.conclude(core.blocks_within(2))
        if report.verdict is False:
            worst = max(range(len(core.blocks)), key=lambda i: core.diameters[i])
            report.fail('block', "%s has diameter %s" % (format_value(ids.sorted(core.blocks[worst])), core.diameters[worst]))


class CBStabilizeStage(types.CB_Stage):
    def process(self, args, outputs):
        g = outputs['graph']
        d = outputs['d']
        report = outputs['report']
        ids = outputs['ids']

        f = dismantle.Automorphism(g, parse_perm(args.perm, ids, g.n))
        report.add('orbits', len(f.orbits()))
        report.add('stabilized_cliques', len(dismantle.stabilized_cliques(g, f)))
        report.add('stabilized_pentagons', len(dismantle.stabilized_pentagons(d, f)))
        try:
            s = dismantle.stabilized_convex_set(d, f)
        except NotFound as e:
            report.fail('stabilized_set', str(e))
            return
        report.add('stabilized_set', ids.sorted(s))
        report.add('stabilized_set.diameter', d.diameter(s) if len(s) > 1 else 0)
        report.conclude(True)
