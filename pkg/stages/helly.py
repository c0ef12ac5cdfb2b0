from cbgraph import types
from cbgraph import helly
from cbgraph.arghelpers import rerun_command
from cbgraph.system import NotHIndependent
from cbgraph.types import format_value
from stages.dataset import original_ids


class CBHellyStage(types.CB_Stage):
    """
    h(G) and h2(G) with witnesses. Vertex operands instead test that set
    and reduce it to diameter at most 2.
    """
    def process(self, args, outputs):
        d = outputs['d']
        report = outputs['report']
        operand = outputs['operand']
        vertices = outputs['vertices']
        ids = outputs['ids']

        if vertices:
            report.add('set', ids.sorted(set(vertices)))
            report.add('h_independent', helly.is_h_independent(d, vertices))
            if len(set(vertices)) >= 2:
                report.add('simplex', helly.is_simplex(d, vertices))
            try:
                reduced = helly.reduce_h_independent(d, vertices)
            except NotHIndependent:
                report.fail('reduce', "%s is not h-independent" % format_value(ids.sorted(set(vertices))))
                return
            report.add('reduced', ids.sorted(reduced))
            report.add('reduced.diameter', d.diameter(reduced) if len(reduced) > 1 else 0)
            report.conclude(True)
            return

        cert = helly.helly_number(d, args.cap, args.threads)
        report.add('h', cert.h)
        report.add('h.witness', ids.many(cert.witness))
        report.add('h2', cert.h2)
        report.add('h2.witness', ids.many(cert.witness2))
        report.add('capped', cert.capped)

        if args.compare_simplex:
            sigma, witness, capped = helly.simplex_number(d, args.cap, threads=args.threads)
            sigma2, witness2, _ = helly.simplex_number(d, args.cap, max_diameter=2, threads=args.threads)
            report.add('sigma', sigma)
            report.add('sigma.witness', ids.many(witness))
            report.add('sigma2', sigma2)
            report.add('sigma2.witness', ids.many(witness2))
            report.add('sigma2_equals_h2', sigma2 == cert.h2)

        report.conclude(cert.h == cert.h2)
        if report.verdict is False:
            report.fail('h', "h-independent %s has no diameter-2 counterpart of size %s" % (format_value(ids.many(cert.witness)), cert.h),
                        rerun_command('helly', [operand] + original_ids(ids, cert.witness)))
