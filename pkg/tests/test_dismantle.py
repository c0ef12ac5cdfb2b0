import unittest

from cbgraph import generators
from cbgraph import dismantle
from cbgraph.dismantle import Automorphism
from cbgraph.convexity import is_convex
from cbgraph.graph import Graph, all_pairs_distances
from cbgraph.system import BadParameters, NotFound, PreconditionViolated


class TestBfs(unittest.TestCase):
    def test_path(self):
        g = generators.path(3)
        order = dismantle.bfs_order(g, 0)
        self.assertEqual(order.order, [0, 1, 2])
        self.assertEqual(order.parent, {0: 0, 1: 0, 2: 1})
        self.assertIsNone(order.violation(all_pairs_distances(g)))

    def test_seeded_orders(self):
        g = generators.petersen()
        d = all_pairs_distances(g)
        for seed in range(5):
            order = dismantle.bfs_order(g, 3, seed)
            self.assertEqual(order.order[0], 3)
            self.assertIsNone(order.violation(d))

    def test_errors(self):
        with self.assertRaises(BadParameters):
            dismantle.bfs_order(generators.path(3), 5)
        with self.assertRaises(PreconditionViolated):
            dismantle.bfs_order(Graph(3, [(0, 1)]), 0)


class TestDismantling(unittest.TestCase):
    def test_pentagon(self):
        d = all_pairs_distances(generators.cycle(5))
        order = dismantle.bfs_order(d.graph, 0)
        self.assertEqual(order.order, [0, 1, 4, 2, 3])
        self.assertEqual(dismantle.verify_dismantling(d, order.order, 1), 3)
        self.assertIsNone(dismantle.verify_dismantling(d, order.order, 2))

    def test_petersen_powers(self):
        d = all_pairs_distances(generators.petersen())
        self.assertIsNone(dismantle.dismantling_failure(d, powers=(2, 3, 4)))

    def test_power_parameter(self):
        d = all_pairs_distances(generators.cycle(5))
        with self.assertRaises(BadParameters):
            dismantle.verify_dismantling(d, range(5), 0)

    def test_failure_tuple(self):
        d = all_pairs_distances(generators.cycle(6))
        base, seed, p, v = dismantle.dismantling_failure(d, bases=[0], seeds=1, powers=(1,))
        self.assertEqual((base, seed, p), (0, 0, 1))
        self.assertEqual(v, 3)


class TestCores(unittest.TestCase):
    def test_cores(self):
        self.assertEqual(len(dismantle.compute_core(generators.path(5))), 1)
        self.assertEqual(dismantle.compute_core(generators.cycle(5)), frozenset(range(5)))
        self.assertEqual(len(dismantle.compute_core(generators.petersen())), 10)

    def test_report(self):
        r = dismantle.core_report(generators.petersen())
        self.assertEqual(r.diameters, [2])
        self.assertTrue(r.blocks_within(2))

        r = dismantle.core_report(generators.path(3))
        self.assertEqual(r.blocks, [])
        self.assertTrue(r.blocks_within(2))


class TestStabilized(unittest.TestCase):
    def test_automorphism(self):
        g = generators.cycle(5)
        f = Automorphism(g, generators.rotation(5, 1))
        self.assertEqual(f.orbits(), [frozenset(range(5))])
        self.assertTrue(f.stabilizes(range(5)))
        self.assertFalse(f.stabilizes([0]))
        with self.assertRaises(BadParameters):
            Automorphism(g, [0, 2, 1, 3, 4])
        with self.assertRaises(BadParameters):
            Automorphism(g, [0, 0, 1, 2, 3])

    def test_convex_sets(self):
        g = generators.cycle(5)
        d = all_pairs_distances(g)
        self.assertEqual(dismantle.stabilized_convex_set(d, Automorphism.identity(g)), frozenset([0]))
        self.assertEqual(dismantle.stabilized_convex_set(d, Automorphism(g, generators.rotation(5, 1))),
                         frozenset(range(5)))

    def test_circulant(self):
        g = generators.circulant(9, 1, 2)
        d = all_pairs_distances(g)
        f = Automorphism(g, generators.rotation(9, 3))
        self.assertEqual(dismantle.stabilized_cliques(g, f), [])
        self.assertEqual(dismantle.stabilized_pentagons(d, f), [])

        s = dismantle.stabilized_convex_set(d, f)
        self.assertTrue(f.stabilizes(s))
        self.assertTrue(is_convex(d, s).verdict)
        self.assertLessEqual(d.diameter(s), 2)

    def test_not_found(self):
        g = generators.cycle(8)
        d = all_pairs_distances(g)
        with self.assertRaises(NotFound):
            dismantle.stabilized_convex_set(d, Automorphism(g, generators.rotation(8, 1)))


if __name__ == '__main__':
    unittest.main()
