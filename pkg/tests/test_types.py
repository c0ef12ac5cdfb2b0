import unittest
from argparse import Namespace

from cbgraph import types
from cbgraph.arghelpers import rerun_command, args_to_dict, double_quote


class RecordingStage(types.CB_Stage):
    def process(self, args, outputs):
        outputs.setdefault('report', types.CB_Report('test'))
        outputs.setdefault('visited', []).append(self.name)


class TestTypes(unittest.TestCase):
    def test_report(self):
        report = types.CB_Report('check')
        self.assertIsNone(report.verdict)
        self.assertEqual(report.exit_code(), 0)

        report.add('sizes', [1, 3, 1])
        report.add('set', frozenset([3, 1]))
        report.add('ratio', 0.5)
        report.add('flag', None)
        report.conclude(True)
        self.assertEqual(report.to_kv(), "command=check\nsizes=1,3,1\nset=1,3\nratio=0.5000\nflag=none\nverdict=true\n")

        report.fail('DIRECT', "ball B_1(0)", "run.sh check g.el --debug-direct")
        report.conclude(True)
        self.assertFalse(report.verdict)
        self.assertEqual(report.exit_code(), 1)
        kv = report.to_kv()
        self.assertIn("verdict=false\n", kv)
        self.assertIn("rerun.DIRECT=run.sh check g.el --debug-direct\n", kv)

    def test_timings_only_in_text(self):
        report = types.CB_Report('core')
        report.timings['core'] = 0.25
        self.assertNotIn('timings', report.render('kv'))
        self.assertIn('timings: core 0.250s', report.render('text'))

    def test_stage_pipeline(self):
        args = Namespace()
        first = RecordingStage('load', args)
        first.connect(RecordingStage('check', args)).connect(RecordingStage('report', args))
        self.assertEqual(first.last_stage().name, 'report')

        outputs = first.run()
        self.assertEqual(outputs['visited'], ['load', 'check', 'report'])
        self.assertEqual(sorted(outputs['report'].timings), ['check', 'load', 'report'])

    def test_missing_report(self):
        class Empty(types.CB_Stage):
            def process(self, args, outputs):
                pass

        with self.assertRaises(Exception):
            Empty('empty', Namespace()).run()

    def test_rerun(self):
        self.assertEqual(rerun_command('conditions', ['pt.el', 'TPC0'], {'max_dist': 2}),
                         'run.sh conditions pt.el TPC0 --max-dist 2')
        self.assertEqual(rerun_command('dismantle', ['g.el'], {'power': [2, 3], 'exhaustive': False, 'base': None}),
                         'run.sh dismantle g.el --power 2,3')
        self.assertEqual(rerun_command('check', ['my graph.el'], {'debug_direct': True}),
                         'run.sh check "my graph.el" --debug-direct')
        self.assertEqual(double_quote(''), '""')

    def test_args_to_dict(self):
        args = Namespace(radius=3, radius_is_set=True, format='kv')
        self.assertEqual(args_to_dict(args), {'format': 'kv', 'radius': 3})


if __name__ == '__main__':
    unittest.main()
