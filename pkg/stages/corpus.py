from cbgraph import log
from cbgraph import types
from cbgraph import acceptance


class CBCorpusStage(types.CB_Stage):
    """Runs the corpus suite and reports one verdict per criterion"""
    def process(self, args, outputs):
        report = types.CB_Report(args.command)
        outputs['report'] = report

        corpus = acceptance.Corpus(args.atlas_max_n, args.corpus_size, args.corpus_max_n,
                                   args.seed, args.sections)
        report.add('graphs', len(corpus.entries))

        for result in acceptance.run_all(corpus, args):
            key = 'criterion.%s' % result.number
            report.add(key, result.passed)
            report.add('%s.checked' % key, result.checked)
            log.CB_INFO("Criterion %s (%s): %s" % (result.number, result.name, "pass" if result.passed else "FAIL"))
            report.conclude(result.passed)
            if not result.passed:
                report.fail(key, "%s: %s" % (result.name, result.detail))
        report.add('cb_graphs', len(corpus.cb))
