import sys

from cbgraph import log
from cbgraph import types


class CBReportStage(types.CB_Stage):
    def process(self, args, outputs):
        report = outputs['report']
        if outputs.get('quiet_report'):
            log.CB_INFO("Report not printed, standard output carries the edge list")
            return

        sys.stdout.write(report.render(args.format))
        sys.stdout.flush()
