import unittest

from cbgraph import generators
from cbgraph import substructures
from cbgraph.substructures import ForbiddenKind, PairKind, TriangleFreeClass, Pentagon
from cbgraph.graph import all_pairs_distances
from cbgraph.system import DisjointPentagons, HasTriangle, PreconditionViolated


class TestSubstructures(unittest.TestCase):
    def setUp(self):
        self.petersen = all_pairs_distances(generators.petersen())

    def test_isometric_cycles(self):
        cycles = substructures.enumerate_isometric_cycles(self.petersen)
        self.assertEqual(len(cycles), 12)
        self.assertTrue(all(len(c) == 5 for c in cycles))
        for c in cycles:
            self.assertEqual(c[0], min(c))
            self.assertLess(c[1], c[-1])

        c5 = all_pairs_distances(generators.cycle(5))
        self.assertEqual(substructures.enumerate_isometric_cycles(c5), [(0, 1, 2, 3, 4)])
        self.assertEqual(len(substructures.pentagons(c5)), 1)

        with self.assertRaises(PreconditionViolated):
            substructures.enumerate_isometric_cycles(c5, 2)

    def test_pentagon(self):
        g = generators.cycle(5)
        p = Pentagon((0, 1, 2, 3, 4), g)
        self.assertEqual(p.vertex_set(), frozenset(range(5)))
        with self.assertRaises(PreconditionViolated):
            Pentagon((0, 2, 1, 3, 4), g)
        with self.assertRaises(PreconditionViolated):
            Pentagon((0, 1, 2, 3))

    def test_structural(self):
        report = substructures.recognize_structural(self.petersen)
        self.assertTrue(report.is_cb())
        self.assertEqual(report.isometric_cycle_lengths[5], 12)

        report = substructures.structural_report(generators.pt())
        self.assertFalse(report.is_cb())
        self.assertEqual(report.forbidden[0][0], ForbiddenKind.ISO_PT)
        self.assertIn("ISO_PT", report.describe())

        report = substructures.structural_report(generators.cycle(6))
        self.assertEqual(report.forbidden[0], (ForbiddenKind.ISO_CYCLE_BAD_LEN, (0, 1, 2, 3, 4, 5)))

        report = substructures.structural_report(generators.pp1())
        self.assertIn(ForbiddenKind.PP1_DIAM_GT3, [kind for kind, _ in report.forbidden])

    def test_embeddings(self):
        g = generators.pp2()
        found = substructures.induced_embeddings(g, substructures.pattern_pp2())
        self.assertEqual(found, [tuple(range(7))])
        self.assertEqual(substructures.induced_embeddings(generators.cycle(5), substructures.pattern_pt()), [])

    def test_pentagon_pairs(self):
        d = self.petersen
        pairs = substructures.intersecting_pentagon_pairs(d)
        self.assertTrue(len(pairs) > 0)
        for p1, p2 in pairs:
            self.assertEqual(substructures.analyze_pentagon_pair(d, p1, p2).kind, PairKind.DIAM2)

        outer = Pentagon((0, 1, 2, 3, 4))
        inner = Pentagon((5, 7, 9, 6, 8))
        with self.assertRaises(DisjointPentagons):
            substructures.analyze_pentagon_pair(d, outer, inner)

    def test_universal_vertex(self):
        g = generators.diameter3notwm()
        d = all_pairs_distances(g)
        lb = g.labels
        p = Pentagon([lb[c] for c in 'defgh'], g)
        self.assertEqual(substructures.universal_vertex(g, p), lb['s'])
        self.assertIsNone(substructures.universal_vertex(g, Pentagon([lb[c] for c in 'deabc'], g)))
        self.assertEqual(d.diameter(), 3)

    def test_triangle_free(self):
        r = substructures.classify_triangle_free(self.petersen)
        self.assertEqual(r.kind, TriangleFreeClass.MOORE_DIAM2)
        self.assertEqual(r.degree, 3)

        r = substructures.classify_triangle_free(all_pairs_distances(generators.cycle(5)))
        self.assertEqual((r.kind, r.degree), (TriangleFreeClass.MOORE_DIAM2, 2))

        r = substructures.classify_triangle_free(all_pairs_distances(generators.path(4)))
        self.assertEqual(r.kind, TriangleFreeClass.WEDGE_DECOMPOSABLE)

        r = substructures.classify_triangle_free(all_pairs_distances(generators.wedge_of_cycles(5, 5)))
        self.assertEqual(r.kind, TriangleFreeClass.WEDGE_DECOMPOSABLE)
        self.assertEqual(len(r.blocks), 2)

        r = substructures.classify_triangle_free(all_pairs_distances(generators.cycle(6)))
        self.assertEqual(r.kind, TriangleFreeClass.NOT_CB)

        with self.assertRaises(HasTriangle):
            substructures.classify_triangle_free(all_pairs_distances(generators.clique(3)))

    def test_moore(self):
        self.assertEqual(substructures.moore_degree(generators.petersen()), 3)
        self.assertIsNone(substructures.moore_degree(generators.cycle(6)))


if __name__ == '__main__':
    unittest.main()
