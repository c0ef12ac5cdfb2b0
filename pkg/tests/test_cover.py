import unittest

from cbgraph import generators
from cbgraph import cover
from cbgraph.cover import Contraction
from cbgraph.graph import all_pairs_distances
from cbgraph.system import BadParameters, LocalConditionsFail, MarginTooSmall


class TestComplex(unittest.TestCase):
    def test_cells(self):
        x = cover.build_complex(generators.cycle(5))
        self.assertEqual((len(x.triangles), len(x.pentagons)), (0, 1))

        x = cover.build_complex(generators.petersen())
        self.assertEqual((len(x.triangles), len(x.pentagons)), (0, 12))

        x = cover.build_complex(generators.clique(4))
        self.assertEqual((len(x.triangles), len(x.pentagons)), (4, 0))
        self.assertEqual(len(x.cells()), 4)

    def test_gf2(self):
        self.assertEqual(cover.gf2_rank([0b011, 0b110, 0b101], 3), 2)
        self.assertEqual(cover.gf2_rank([0b001, 0b010, 0b100], 3), 3)
        self.assertEqual(cover.gf2_rank([], 3), 0)

    def test_h1(self):
        self.assertEqual(cover.h1_rank_gf2(cover.build_complex(generators.path(6))), 0)
        self.assertEqual(cover.h1_rank_gf2(cover.build_complex(generators.cycle(13))), 1)
        self.assertEqual(cover.h1_rank_gf2(cover.build_complex(generators.petersen())), 0)


class TestContraction(unittest.TestCase):
    def test_triangle(self):
        d = all_pairs_distances(generators.clique(3))
        self.assertEqual(cover.contract_cycle(d, [0, 1, 2], 0).outcome, Contraction.CONSTANT)

    def test_pentagon(self):
        d = all_pairs_distances(generators.cycle(5))
        result = cover.contract_cycle(d, [0, 1, 2, 3, 4], 0)
        self.assertTrue(result)
        self.assertEqual(result.cycle, [0])
        self.assertIsNone(cover.first_stuck_cycle(d))

    def test_long_cycle(self):
        d = all_pairs_distances(generators.cycle(13))
        result = cover.contract_cycle(d, list(range(13)), 0)
        self.assertEqual(result.outcome, Contraction.STUCK)
        self.assertFalse(cover.first_stuck_cycle(d) is None)

    def test_single_vertex(self):
        d = all_pairs_distances(generators.cycle(5))
        self.assertEqual(cover.contract_cycle(d, [3], 0).outcome, Contraction.CONSTANT)

    def test_not_a_walk(self):
        d = all_pairs_distances(generators.cycle(5))
        with self.assertRaises(BadParameters):
            cover.contract_cycle(d, [0, 2, 4], 0)


class TestUniversalCover(unittest.TestCase):
    def test_long_cycle_unrolls(self):
        g = generators.cycle(13)
        state = cover.build_universal_cover(g, 0, 6)
        full, _ = state.to_graph()
        self.assertEqual(state.n, 13)
        self.assertEqual(full.num_edges(), 12)
        self.assertEqual([len(layer) for layer in state.layers], [1, 2, 2, 2, 2, 2, 2])
        self.assertFalse(cover.reproduces(state, g))
        self.assertTrue(cover.verify_cover_invariants(state).holds())
        self.assertTrue(cover.cover_is_cb_up_to(state, 3).verdict)

    def test_petersen_closes(self):
        g = generators.petersen()
        state = cover.build_universal_cover(g, 0, 3)
        self.assertTrue(cover.reproduces(state, g))
        self.assertEqual(state.layers[3], [])
        self.assertEqual(state.pending, [])

        state = cover.build_universal_cover(g, 0, 5)
        self.assertTrue(cover.reproduces(state, g))
        self.assertTrue(cover.cover_is_cb_up_to(state, 2).verdict)

    def test_margin(self):
        state = cover.build_universal_cover(generators.cycle(13), 0, 4)
        with self.assertRaises(MarginTooSmall):
            cover.cover_is_cb_up_to(state, 2)
        with self.assertRaises(MarginTooSmall):
            cover.cover_is_cb_up_to(state, 0)

    def test_pt(self):
        g = generators.pt()
        with self.assertRaises(LocalConditionsFail):
            cover.build_universal_cover(g, 0, 4)

        state = cover.build_universal_cover(g, 0, 4, validate=False)
        report = cover.verify_cover_invariants(state)
        self.assertFalse(report.holds('interior_balls'))
        self.assertFalse(report)

    def test_parameters(self):
        g = generators.cycle(5)
        with self.assertRaises(BadParameters):
            cover.build_universal_cover(g, 7, 3)
        with self.assertRaises(BadParameters):
            cover.build_universal_cover(g, 0, -1)


if __name__ == '__main__':
    unittest.main()
