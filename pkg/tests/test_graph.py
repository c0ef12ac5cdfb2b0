import unittest

from hypothesis import given, settings

from cbgraph import generators
from cbgraph.graph import Graph, all_pairs_distances, power_graph, is_isometric_subgraph
from cbgraph.system import DisconnectedGraph, BadParameters

from graph_strategies import connected_graphs


class TestGraph(unittest.TestCase):
    def setUp(self):
        self.c5 = generators.cycle(5)
        self.c6 = generators.cycle(6)

    def test_basics(self):
        g = self.c5
        self.assertEqual(g.n, 5)
        self.assertEqual(g.num_edges(), 5)
        self.assertEqual(g.neighbors(0), (1, 4))
        self.assertTrue(g.has_edge(4, 0))
        self.assertFalse(g.has_edge(0, 2))
        self.assertEqual(g.closed_neighborhood(2), {1, 2, 3})
        self.assertTrue(g.is_clique([0, 1]))
        self.assertFalse(g.is_clique([0, 1, 2]))
        self.assertTrue(g.is_connected())
        self.assertFalse(Graph(3, [(0, 1)]).is_connected())

    def test_bad_edges(self):
        with self.assertRaises(BadParameters):
            Graph(2, [(0, 0)])
        with self.assertRaises(BadParameters):
            Graph(2, [(0, 2)])

    def test_induced(self):
        sub, order = self.c6.induced([5, 0, 1])
        self.assertEqual(order, [0, 1, 5])
        self.assertEqual(sub.edges(), [(0, 1), (0, 2)])

    def test_networkx(self):
        g = generators.petersen()
        back = Graph.from_networkx(g.to_networkx())
        self.assertEqual(back.edges(), g.edges())

    def test_distances(self):
        d = all_pairs_distances(self.c6)
        self.assertEqual(d(0, 3), 3)
        self.assertEqual(d.diameter(), 3)
        self.assertEqual(d.diameter([0, 1, 2]), 2)
        self.assertEqual(d.interval(0, 3), frozenset(range(6)))
        self.assertEqual(d.interval(0, 2), frozenset([0, 1, 2]))
        self.assertEqual(d.ball(0, 1), frozenset([5, 0, 1]))
        self.assertEqual(d.sphere(0, 2), frozenset([2, 4]))
        self.assertEqual(d.joint_ball([2, 4], 1), frozenset([3]))
        self.assertEqual(d.ball_around_set([0, 3], 1), frozenset(range(6)))
        self.assertEqual(d.set_distance([0, 1], [3, 4]), 2)
        self.assertTrue(d.is_uniform_distance([0], [2, 4], 2))

        with self.assertRaises(BadParameters):
            d.joint_ball([], 1)

    def test_disconnected(self):
        with self.assertRaises(DisconnectedGraph):
            all_pairs_distances(Graph(4, [(0, 1), (2, 3)]))

    def test_convex_hull(self):
        d = all_pairs_distances(self.c6)
        self.assertEqual(d.convex_hull([]), frozenset())
        self.assertEqual(d.convex_hull([0, 2]), frozenset([0, 1, 2]))

        # three pairwise distance-2 vertices pull in the whole hexagon
        hull = d.convex_hull([0, 2, 4])
        self.assertEqual(hull, frozenset(range(6)))
        self.assertEqual(d.diameter(hull), 3)
        self.assertEqual(d.diameter([0, 2, 4]), 2)

    def test_power(self):
        p2 = power_graph(self.c6, 2)
        self.assertEqual(p2.num_edges(), 12)
        self.assertTrue(p2.has_edge(0, 2))
        self.assertFalse(p2.has_edge(0, 3))
        self.assertEqual(power_graph(self.c6, 1).edges(), self.c6.edges())
        with self.assertRaises(BadParameters):
            power_graph(self.c6, 0)

    def test_isometric(self):
        g = generators.petersen()
        self.assertTrue(is_isometric_subgraph(g, [0, 1, 2, 3, 4]))
        c6 = self.c6
        self.assertTrue(is_isometric_subgraph(c6, [0, 1, 2, 3]))
        self.assertFalse(is_isometric_subgraph(c6, [0, 1, 2, 3, 4]))
        self.assertFalse(is_isometric_subgraph(c6, [0, 2]))

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs())
    def test_hull_is_convex_superset(self, g):
        d = all_pairs_distances(g)
        s = list(range(0, g.n, 2))
        hull = d.convex_hull(s)
        self.assertTrue(set(s) <= hull)
        for x in hull:
            for y in hull:
                self.assertTrue(d.interval(x, y) <= hull)

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs())
    def test_interval_symmetric(self, g):
        d = all_pairs_distances(g)
        for u in range(g.n):
            self.assertEqual(d.interval(u, 0), d.interval(0, u))
            self.assertEqual(d(u, 0), d(0, u))


if __name__ == '__main__':
    unittest.main()
