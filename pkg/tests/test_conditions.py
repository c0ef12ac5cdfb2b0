import unittest

from hypothesis import given, settings

from cbgraph import generators
from cbgraph import conditions
from cbgraph.conditions import ConditionId, RecognitionMethod
from cbgraph.graph import all_pairs_distances, power_graph
from cbgraph.system import PreconditionViolated

from graph_strategies import connected_graphs


class TestConditions(unittest.TestCase):
    def setUp(self):
        self.c5 = all_pairs_distances(generators.cycle(5))
        self.petersen = all_pairs_distances(generators.petersen())

    def test_local_checks(self):
        d = self.c5
        # the far edge of a pentagon has no common neighbor
        self.assertFalse(conditions.check_tc(d, 0, 2, 3))
        self.assertTrue(conditions.check_pc(d, ConditionId.PC0, 0, 2, 3))
        self.assertTrue(conditions.check_pc(d, ConditionId.PC2, 0, 2, 3))
        self.assertTrue(conditions.check_tpc(d, ConditionId.TPC0, 0, 2, 3))
        self.assertTrue(conditions.check_inc(d, ConditionId.INC, 0, 2))

        with self.assertRaises(PreconditionViolated):
            conditions.check_tc(d, 0, 1, 2)
        with self.assertRaises(PreconditionViolated):
            conditions.check_qc(d, 0, 1, 4, 2)
        with self.assertRaises(PreconditionViolated):
            conditions.check_inc(d, ConditionId.INC0, 3, 3)

    def test_check_dispatch(self):
        d = self.c5
        self.assertFalse(conditions.check(d, ConditionId.TC, (0, 2, 3)))
        self.assertTrue(conditions.check(d, ConditionId.TPC1, (0, 2, 3)))
        self.assertTrue(conditions.check(d, ConditionId.INCPLUS, (0, 2)))

    def test_petersen(self):
        d = self.petersen
        self.assertFalse(conditions.global_condition(d, ConditionId.TC).holds)
        # no two vertices share two neighbors, so there is no quadrangle locus
        qc = conditions.global_condition(d, ConditionId.QC)
        self.assertTrue(qc.holds)
        self.assertEqual(qc.loci, 0)
        for c in (ConditionId.INC0, ConditionId.INC, ConditionId.INCPLUS,
                  ConditionId.TPC0, ConditionId.TPC1, ConditionId.TPC2, ConditionId.TPCPLUS):
            self.assertTrue(conditions.global_condition(d, c).holds, c.value)

    def test_loci_counts(self):
        d = self.petersen
        # every vertex sees six edges inside its sphere of radius 2
        self.assertEqual(conditions.global_condition(d, ConditionId.TPC0).loci, 60)
        self.assertEqual(conditions.global_condition(d, ConditionId.TPC1).loci, 120)
        self.assertEqual(conditions.global_condition(d, ConditionId.INC).loci, 90)
        self.assertEqual(conditions.global_condition(d, ConditionId.INC, max_dist=1).loci, 30)

    def test_report_independent_of_threads(self):
        for d in (self.petersen, all_pairs_distances(generators.cycle(6))):
            one = [(w.condition, w.holds, w.loci, w.locus) for w in conditions.global_report(d, threads=1)]
            three = [(w.condition, w.holds, w.loci, w.locus) for w in conditions.global_report(d, threads=3)]
            self.assertEqual(one, three)

    def test_hexagon_interval_not_clique(self):
        d = all_pairs_distances(generators.cycle(6))
        w = conditions.global_condition(d, ConditionId.INC0)
        self.assertFalse(w)
        self.assertEqual(w.locus, (0, 3))
        self.assertEqual(w.k, 3)
        self.assertIn("fails at 0,3", w.describe())

    def test_quadrangle_fails_in_power(self):
        for k in (2, 3):
            g = generators.g_k(k)
            lb = g.labels
            dk = all_pairs_distances(power_graph(g, k))
            self.assertFalse(conditions.check_qc(dk, lb['v'], lb['x'], lb['y'], lb['u']))

    def test_max_dist(self):
        d = all_pairs_distances(generators.cycle(6))
        self.assertTrue(conditions.global_condition(d, ConditionId.INC0, max_dist=2).holds)

    def test_named_recognizers(self):
        for spec, expected in generators.named_verdicts():
            if spec.name == 'hoffman_singleton':
                continue
            d = all_pairs_distances(generators.make(spec))
            methods = conditions.DEFAULT_METHODS + (RecognitionMethod.WELL_BRIDGED,)
            for r in conditions.recognize_all(d, methods):
                self.assertEqual(r.verdict, expected, "%s by %s" % (spec, r.method))

    def test_failure_detail(self):
        d = all_pairs_distances(generators.pt())
        r = conditions.recognize_cb(d, RecognitionMethod.INC_TPC0)
        self.assertFalse(r.verdict)
        self.assertEqual(r.method, 'INC_TPC0')
        self.assertFalse(r.detail.holds)

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(max_n=8))
    def test_recognizers_agree(self, g):
        d = all_pairs_distances(g)
        verdicts = set(r.verdict for r in conditions.recognize_all(d))
        self.assertEqual(len(verdicts), 1)


if __name__ == '__main__':
    unittest.main()
