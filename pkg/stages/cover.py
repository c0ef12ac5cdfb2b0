from cbgraph import io
from cbgraph import log
from cbgraph import types
from cbgraph import cover
from cbgraph.convexity import ConvexityWitness
from cbgraph.arghelpers import rerun_command
from cbgraph.system import LocalConditionsFail, PreconditionViolated
from cbgraph.types import format_value
from stages.dataset import resolve_vertex


def describe_local_failure(e, ids):
    if isinstance(e.witness, ConvexityWitness):
        return "balls of radius at most 3 are not convex: %s" % e.witness.describe(ids.name)
    if e.witness is None:
        return str(e)
    return "%s (images %s)" % (e, format_value(ids.many(e.witness)))


class CBCoverStage(types.CB_Stage):
    def process(self, args, outputs):
        g = outputs['graph']
        d = outputs['d']
        report = outputs['report']
        operand = outputs['operand']
        ids = outputs['ids']

        base = resolve_vertex(g, outputs['relabel'], str(args.base)) if args.base is not None else 0

        x = cover.build_complex(g, d)
        report.add('triangles', len(x.triangles))
        report.add('pentagons', len(x.pentagons))
        report.add('h1_rank_gf2', cover.h1_rank_gf2(x))
        try:
            stuck = cover.first_stuck_cycle(d, base)
            report.add('basis_contracts', stuck is None)
        except PreconditionViolated as e:
            log.CB_WARNING("Cycle contraction stopped: %s" % e)
            report.add('basis_contracts', False)

        try:
            state = cover.build_universal_cover(g, base, args.radius, validate=not args.no_validate, d=d)
        except LocalConditionsFail as e:
            report.fail('local_conditions', describe_local_failure(e, ids),
                        rerun_command('check', [operand]))
            return

        report.add('radius', state.radius)
        report.add('cover_vertices', state.n)
        report.add('layer_sizes', [len(layer) for layer in state.layers])
        report.add('reproduces', cover.reproduces(state, g))

        invariants = cover.verify_cover_invariants(state)
        for prop in cover.CoverInvariantReport.PROPERTIES:
            report.add('invariant.%s' % prop, invariants.holds(prop))
        report.conclude(invariants.holds())
        for prop in cover.CoverInvariantReport.PROPERTIES:
            if not invariants.holds(prop):
                report.fail('invariant.%s' % prop, "at %s" % format_value(invariants.failures[prop]),
                            rerun_command('cover', [operand], {'base': args.base, 'radius': args.radius,
                                                                'no_validate': args.no_validate}))

        r = min(3, state.radius - 3)
        if r >= 1:
            witness = cover.cover_is_cb_up_to(state, r)
            report.add('cover_cb_up_to', r)
            report.add('cover_cb', witness.verdict)
            report.conclude(witness.verdict)
            if not witness.verdict:
                report.fail('cover_cb', witness.describe())
        else:
            log.CB_INFO("Radius %s leaves no margin for the ball convexity check" % state.radius)

        if args.emit:
            full, _ = state.to_graph()
            io.write_graph(full, args.emit, header="cover of %s at base %s, R=%s" % (operand, ids(base), state.radius),
                           cover=(ids.many(state.images), state.heights))
