from cbgraph import io
from cbgraph import types
from cbgraph import generators
from cbgraph.graph import all_pairs_distances


class CBGenerateStage(types.CB_Stage):
    """Writes a named graph as an edge list plus its label sidecar"""
    def process(self, args, outputs):
        report = types.CB_Report(args.command)
        outputs['report'] = report

        spec = generators.FamilySpec(args.operands[0], args.operands[1:])
        g = generators.make(spec)
        report.set_graph(g, all_pairs_distances(g))
        report.add('family', spec.name)
        report.add('params', spec.params)
        report.add('labels', ["%s:%s" % kv for kv in sorted(g.labels.items(), key=lambda kv: (kv[1], kv[0]))])
        report.add('output', args.output)

        io.write_graph(g, args.output, header="%s" % spec)

        # stdout carries the edge list
        outputs['quiet_report'] = args.output == '-'
