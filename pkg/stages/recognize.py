from cbgraph import log
from cbgraph import types
from cbgraph import substructures
from cbgraph import triangles
from cbgraph.arghelpers import rerun_command
from cbgraph.conditions import (ConditionId, DEFAULT_METHODS, RecognitionMethod,
                                global_condition, global_report, recognize_all)
from cbgraph.convexity import has_convex_balls
from cbgraph.system import ExitException, HasTriangle
from cbgraph.types import format_value
from stages.dataset import original_ids


def describe_detail(detail, ids):
    if hasattr(detail, 'describe'):
        return detail.describe(ids.name)
    if isinstance(detail, (list, tuple)):
        return format_value(ids.many(detail))
    return format_value(detail)


def condition_rerun(operand, cw):
    return rerun_command('conditions', [operand, cw.condition.value], {'max_dist': cw.k})


def parse_condition(name):
    for c in ConditionId:
        if c.value.lower() == name.lower() or c.name.lower() == name.lower():
            return c
    raise ExitException("Unknown condition %s (known: %s)" % (name, ", ".join(c.value for c in ConditionId)))


class CBCheckStage(types.CB_Stage):
    def process(self, args, outputs):
        d = outputs['d']
        report = outputs['report']
        operand = outputs['operand']
        ids = outputs['ids']

        methods = DEFAULT_METHODS
        if args.all_methods:
            methods = methods + (RecognitionMethod.WELL_BRIDGED,)
        results = recognize_all(d, methods, args.threads)

        direct = results[0]
        if args.debug_direct:
            direct = has_convex_balls(d, debug=True, threads=args.threads)

        agree = sum(1 for r in results if r.verdict == direct.verdict)
        report.add('cb', direct.verdict)
        report.add('method_agreement', '%s/%s' % (agree, len(results)))
        for r in results:
            report.add('method.%s' % r.method, r.verdict)
        report.conclude(direct.verdict)

        if not direct.verdict:
            report.fail('DIRECT', direct.describe(ids.name), rerun_command('check', [operand], {'debug_direct': True}))
        for r in results[1:]:
            if r.verdict:
                continue
            rerun = None
            if hasattr(r.detail, 'condition'):
                rerun = condition_rerun(operand, r.detail)
            elif r.method == RecognitionMethod.STRUCTURAL.value:
                rerun = rerun_command('substructures', [operand])
            report.fail(r.method, describe_detail(r.detail, ids), rerun)
        if agree != len(results):
            report.fail('agreement', "recognizers disagree", rerun_command('check', [operand]))


class CBConditionsStage(types.CB_Stage):
    """
    Without condition operands, reports every condition (no verdict).
    With them, the verdict is whether all the named conditions hold.
    """
    def process(self, args, outputs):
        d = outputs['d']
        report = outputs['report']
        operand = outputs['operand']
        ids = outputs['ids']
        named = [parse_condition(n) for n in args.operands[1:]]

        if named:
            results = [global_condition(d, c, args.max_dist, args.threads) for c in named]
        else:
            results = global_report(d, args.max_dist, args.threads)

        report.add('max_dist', args.max_dist)
        for cw in results:
            report.add(cw.condition.value, cw.holds)
            if cw.holds:
                report.add('%s.loci' % cw.condition.value, cw.loci)
            elif named:
                report.fail(cw.condition.value, cw.describe(ids.name), condition_rerun(operand, cw))
            else:
                report.witnesses.append((cw.condition.value, cw.describe(ids.name), condition_rerun(operand, cw)))
        if named:
            report.conclude(all(cw.holds for cw in results))


class CBSubstructuresStage(types.CB_Stage):
    def process(self, args, outputs):
        d = outputs['d']
        g = outputs['graph']
        report = outputs['report']
        operand = outputs['operand']
        ids = outputs['ids']

        sr = substructures.recognize_structural(d)
        for length in sorted(sr.isometric_cycle_lengths):
            report.add('isometric_cycles.%s' % length, sr.isometric_cycle_lengths[length])
        report.add('pentagons', len(substructures.pentagons(d)))
        report.add('forbidden', len(sr.forbidden))

        kinds = {}
        pairs = substructures.intersecting_pentagon_pairs(d)
        for p1, p2 in pairs:
            result = substructures.analyze_pentagon_pair(d, p1, p2)
            kinds[result.kind.value] = kinds.get(result.kind.value, 0) + 1
            if result.kind == substructures.PairKind.NEITHER and 'pentagon_pair' not in [w[0] for w in report.witnesses]:
                report.fail('pentagon_pair', "%s and %s" % (format_value(ids.many(p1)), format_value(ids.many(p2))))
        for kind in sorted(kinds):
            report.add('pentagon_pairs.%s' % kind, kinds[kind])

        try:
            tf = substructures.classify_triangle_free(d)
            report.add('triangle_free', repr(tf))
            if tf.kind == substructures.TriangleFreeClass.NOT_CB:
                report.add('triangle_free.blocks', len(tf.blocks))
        except HasTriangle as e:
            log.CB_INFO(str(e))
            report.add('triangle_free', False)

        report.conclude(sr.is_cb())
        for kind, vertices in sr.forbidden[:1]:
            report.fail(kind.value, format_value(ids.many(vertices)), rerun_command('substructures', [operand]))
        if g.n and not sr.forbidden:
            log.CB_INFO("No forbidden substructure")


class CBTrianglesStage(types.CB_Stage):
    """
    Histogram of metric triangles by class and side lengths. Three vertex
    operands also report their quasi-median.
    """
    def process(self, args, outputs):
        d = outputs['d']
        report = outputs['report']
        operand = outputs['operand']
        vertices = outputs['vertices']
        ids = outputs['ids']

        if vertices:
            if len(vertices) != 3:
                raise ExitException("triangles takes zero or three vertices, got %s" % len(vertices))
            t = triangles.quasi_median(d, *vertices)
            report.add('quasi_median', ids.many(t.vertices))
            report.add('quasi_median.sides', t.sides)
            report.add('quasi_median.class', triangles.classify(d, t).describe(ids.name))

        counts, problems = triangles.histogram(d, args.threads)
        report.add('metric_triangles', sum(counts.values()))
        for (kind, sides) in sorted(counts):
            report.add('type.%s.%s' % (kind, "-".join(map(str, sides))), counts[(kind, sides)])
        report.conclude(not problems)
        for t, c in problems[:1]:
            forbidden = triangles.forbidden_type(t)
            description = "%s classified %s" % (format_value(ids.many(t.vertices)), c.describe(ids.name))
            if forbidden:
                description += " of excluded type %s" % forbidden
            report.fail('triangle', description,
                        rerun_command('triangles', [operand] + original_ids(ids, t.vertices)))
