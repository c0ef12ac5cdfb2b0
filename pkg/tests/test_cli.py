import io
import json
import os
import shutil
import tempfile
import unittest
from unittest import mock

import run
from cbgraph import combing

ASSETS = os.path.join(os.path.dirname(__file__), 'assets')
COMMON = ['--format', 'kv', '--quiet', '--threads', '1']


def run_cli(*argv, stdin=None):
    """:return (exit code, standard output)"""
    out = io.StringIO()
    with mock.patch('sys.stdout', out):
        if stdin is not None:
            with mock.patch('sys.stdin', io.StringIO(stdin)):
                code = run.main(list(argv) + COMMON)
        else:
            code = run.main(list(argv) + COMMON)
    return code, out.getvalue()


def kv(text):
    return dict(line.split('=', 1) for line in text.splitlines() if '=' in line)


class TestCli(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_check(self):
        code, out = run_cli('check', 'petersen')
        self.assertEqual(code, 0)
        values = kv(out)
        self.assertEqual(values['cb'], 'true')
        self.assertEqual(values['method_agreement'], '6/6')
        self.assertEqual(values['n'], '10')
        self.assertEqual(values['verdict'], 'true')

    def test_check_failure(self):
        path = os.path.join(ASSETS, 'pt.el')
        code, out = run_cli('check', path)
        self.assertEqual(code, 1)
        values = kv(out)
        self.assertEqual(values['cb'], 'false')
        self.assertIn('witness.DIRECT', values)
        self.assertTrue(values['rerun.DIRECT'].startswith('run.sh check %s' % path))
        self.assertIn('--debug-direct', values['rerun.DIRECT'])

    def test_kv_is_deterministic(self):
        first = run_cli('conditions', 'cycle:6')
        second = run_cli('conditions', 'cycle:6')
        self.assertEqual(first, second)
        self.assertNotIn('verdict', kv(first[1]))

    def test_named_conditions(self):
        code, out = run_cli('conditions', 'cycle:6', 'INC0')
        self.assertEqual(code, 1)
        code, out = run_cli('conditions', 'petersen', 'INC', 'TPC0')
        self.assertEqual(code, 0)
        code, out = run_cli('conditions', 'petersen', 'nonsense')
        self.assertEqual(code, 2)

    def test_stdin(self):
        code, out = run_cli('check', '-', stdin="0 1\n1 2\n2 0\n")
        self.assertEqual(code, 0)
        self.assertEqual(kv(out)['m'], '3')

    def test_gen(self):
        code, out = run_cli('gen', 'cycle', '5', '-o', '-')
        self.assertEqual(code, 0)
        self.assertEqual(out, "# cycle(5)\n0 1\n0 4\n1 2\n2 3\n3 4\n")

        path = os.path.join(self.tmpdir, 'petersen.el')
        code, _ = run_cli('gen', 'petersen', '-o', path)
        self.assertEqual(code, 0)
        self.assertTrue(os.path.isfile(path))
        self.assertTrue(os.path.isfile(os.path.join(self.tmpdir, 'petersen.labels')))

        code, out = run_cli('helly', path, 'h1', 'h2', 'h3', 'h4')
        self.assertEqual(code, 0)
        self.assertEqual(kv(out)['h_independent'], 'true')

    def test_sparse_ids(self):
        path = os.path.join(ASSETS, 'pentagon_sparse.el')
        code, out = run_cli('comb', path, 'base', 'apex')
        self.assertEqual(code, 0)
        code, out = run_cli('comb', path, '10', '99')
        self.assertEqual(code, 2)

    def test_sparse_ids_come_back_out(self):
        path = os.path.join(ASSETS, 'pentagon_sparse.el')
        code, out = run_cli('comb', path, '10', '30')
        self.assertEqual(code, 0)
        values = kv(out)
        self.assertEqual(values['relabel'], '10:0,20:1,30:2,40:3,50:4')
        self.assertEqual(values['vertex_path'], '10,20,30')
        self.assertEqual(values['clique_path'], '{10} -> {20} -> {30}')

        code, out = run_cli('fftp', path, '10', '20', '30', '40')
        self.assertEqual(code, 0)
        self.assertEqual(kv(out)['shorter'], '10,50,40')

        code, out = run_cli('triangles', path, '10', '20', '40')
        self.assertEqual(sorted(kv(out)['quasi_median'].split(',')), ['10', '20', '40'])

        code, out = run_cli('core', path)
        self.assertEqual(kv(out)['core'], '10,20,30,40,50')

        code, out = run_cli('stabilize', path, '--perm', '20,30,40,50,10')
        self.assertEqual(code, 0)
        self.assertEqual(kv(out)['stabilized_set'], '10,20,30,40,50')

        code, out = run_cli('dismantle', path, '--power', '1', '--base', '10', '--seeds', '1')
        self.assertEqual(code, 1)
        values = kv(out)
        self.assertIn('from 10 ', values['witness.dismantling'])
        self.assertIn('--base 10', values['rerun.dismantling'])

    def test_sparse_ids_in_witnesses(self):
        path = os.path.join(ASSETS, 'hexagon_sparse.el')
        code, out = run_cli('conditions', path, 'INC0')
        self.assertEqual(code, 1)
        values = kv(out)
        self.assertEqual(values['relabel'], '100:0,200:1,300:2,400:3,500:4,600:5')
        self.assertIn('fails at 100,400', values['witness.INC0'])

        code, out = run_cli('check', path)
        self.assertEqual(code, 1)
        values = kv(out)
        self.assertIn('B_2(100)', values['witness.DIRECT'])
        self.assertIn('x=200 y=500', values['witness.DIRECT'])

    def test_dense_ids_report_no_relabel(self):
        code, out = run_cli('comb', os.path.join(ASSETS, 'pt.el'), '0', '3')
        self.assertNotIn('relabel', kv(out))

    def test_helly_number(self):
        code, out = run_cli('helly', 'cycle:5')
        self.assertEqual(code, 0)
        self.assertEqual(kv(out)['h'], '3')

    def test_dismantle(self):
        code, out = run_cli('dismantle', 'cycle:5', '--power', '1', '--base', '0', '--seeds', '1')
        self.assertEqual(code, 1)
        self.assertIn('--power 1', kv(out)['rerun.dismantling'])
        code, out = run_cli('dismantle', 'petersen', '--power', '2,3')
        self.assertEqual(code, 0)

    def test_core(self):
        code, out = run_cli('core', 'path:5')
        self.assertEqual(code, 0)
        self.assertEqual(kv(out)['core_size'], '1')

    def test_stabilize(self):
        code, out = run_cli('stabilize', 'circulant:9,1,2', '--perm', 'shift:3')
        self.assertEqual(code, 0)
        values = kv(out)
        self.assertEqual(values['stabilized_cliques'], '0')
        self.assertEqual(values['stabilized_pentagons'], '0')
        code, out = run_cli('stabilize', 'cycle:8', '--perm', 'shift:1')
        self.assertEqual(code, 1)

    def test_cover(self):
        emit = os.path.join(self.tmpdir, 'cover.el')
        code, out = run_cli('cover', 'cycle:13', '--radius', '6', '--emit', emit)
        self.assertEqual(code, 0)
        values = kv(out)
        self.assertEqual(values['cover_vertices'], '13')
        self.assertEqual(values['reproduces'], 'false')
        self.assertEqual(values['h1_rank_gf2'], '1')
        self.assertTrue(os.path.isfile(os.path.join(self.tmpdir, 'cover.map')))

        code, out = run_cli('cover', os.path.join(ASSETS, 'pt.el'))
        self.assertEqual(code, 1)
        self.assertIn('witness.local_conditions', kv(out))

    def test_fellow(self):
        code, out = run_cli('fellow', 'petersen', '--exhaustive')
        self.assertEqual(code, 0)
        values = kv(out)
        self.assertEqual(values['general.count'], '10000')
        self.assertEqual(values['almost_convexity.k2'], '2')

    def test_fellow_distance_bound_without_quadruple(self):
        results = {}
        for name, _ in combing.FELLOW_BOUNDS:
            results[name] = combing.FellowTravelerStats()
        results['same_source'].max_distance = 5
        with mock.patch('cbgraph.combing.fellow_traveler_report', return_value=results):
            code, out = run_cli('fellow', 'cycle:5')
        self.assertEqual(code, 1)
        values = kv(out)
        self.assertEqual(values['witness.same_source'], 'level distance 5 exceeds 3')
        self.assertNotIn('witness.general', values)
        self.assertFalse([k for k in values if k.startswith('rerun.')])

    def test_fftp(self):
        code, out = run_cli('fftp', 'cycle:5', '0', '1', '2', '3')
        self.assertEqual(code, 0)
        self.assertEqual(kv(out)['shorter'], '0,4,3')
        # a geodesic cannot be shortened
        self.assertEqual(run_cli('fftp', 'cycle:5', '0', '1', '2')[0], 2)
        code, out = run_cli('fftp', 'petersen', '--max-len', '3')
        self.assertEqual(code, 0)

    def test_triangles(self):
        code, out = run_cli('triangles', 'petersen')
        self.assertEqual(code, 0)
        values = kv(out)
        self.assertEqual(values['metric_triangles'], '80')
        self.assertEqual(values['type.PENTAGON_221.2-2-1'], '60')
        self.assertEqual(values['type.STRONGLY_EQUILATERAL.2-2-2'], '20')

        code, out = run_cli('triangles', 'cycle:7')
        self.assertEqual(code, 1)
        self.assertTrue(kv(out)['rerun.triangle'].startswith('run.sh triangles cycle:7'))

    def test_substructures(self):
        code, out = run_cli('substructures', 'petersen')
        self.assertEqual(code, 0)
        values = kv(out)
        self.assertEqual(values['isometric_cycles.5'], '12')
        self.assertEqual(values['triangle_free'], 'MOORE_DIAM2(3)')

        code, out = run_cli('substructures', 'pt')
        self.assertEqual(code, 1)
        self.assertIn('witness.ISO_PT', kv(out))

    def test_json_log(self):
        path = os.path.join(self.tmpdir, 'run.json')
        code, _ = run_cli('check', 'cycle:5', '--log-json', path)
        self.assertEqual(code, 0)
        with open(path) as f:
            log = json.load(f)
        self.assertTrue(log['success'])
        self.assertEqual(log['exitCode'], 0)
        self.assertEqual(log['graph'], {'n': 5, 'm': 5, 'diameter': 2})
        self.assertEqual([s['name'] for s in log['stages']], ['load', 'check', 'report'])

    def test_bad_input(self):
        self.assertEqual(run_cli('check', 'no_such_file.el')[0], 2)
        self.assertEqual(run_cli('check', 'cycle:2')[0], 2)
        self.assertEqual(run_cli('check', 'dodecahedron:3')[0], 2)

        with mock.patch('sys.stderr', io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                run_cli('check')
            self.assertEqual(cm.exception.code, 2)
            with self.assertRaises(SystemExit) as cm:
                run_cli('frobnicate', 'petersen')
            self.assertEqual(cm.exception.code, 2)
            with self.assertRaises(SystemExit) as cm:
                run_cli('corpus', '--corpus-max-n', '20')
            self.assertEqual(cm.exception.code, 2)


if __name__ == '__main__':
    unittest.main()
