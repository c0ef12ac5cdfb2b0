import os
import shutil
import tempfile
import unittest

from cbgraph import io
from cbgraph.graph import Graph
from cbgraph.system import GraphFormatError

ASSETS = os.path.join(os.path.dirname(__file__), 'assets')


class TestIO(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_parse(self):
        g, relabel = io.parse_edgelist(["# comment", "", "0 1", "1 2", "2 1", "7"])
        self.assertEqual(g.n, 4)
        self.assertEqual(g.edges(), [(0, 1), (1, 2)])
        self.assertEqual(relabel, {0: 0, 1: 1, 2: 2, 7: 3})
        self.assertEqual(g.degree(3), 0)

    def test_parse_errors(self):
        with self.assertRaises(GraphFormatError):
            io.parse_edgelist(["0 0"])
        with self.assertRaises(GraphFormatError):
            io.parse_edgelist(["0 a"])
        with self.assertRaises(GraphFormatError):
            io.parse_edgelist(["0 1 2"])
        with self.assertRaises(GraphFormatError):
            io.parse_edgelist(["-1 2"])

    def test_load_with_labels(self):
        g, relabel = io.load_graph(os.path.join(ASSETS, 'pentagon_sparse.el'))
        self.assertEqual(g.n, 5)
        self.assertEqual(g.num_edges(), 5)
        self.assertEqual(relabel[30], 2)
        self.assertEqual(g.labels, {'apex': 2, 'base': 0})

    def test_missing_file(self):
        with self.assertRaises(GraphFormatError):
            io.load_graph(os.path.join(self.tmpdir, 'nothing.el'))

    def test_unknown_label_vertex(self):
        with self.assertRaises(GraphFormatError):
            io.parse_labels(["a 99"], {0: 0})

    def test_write_and_load(self):
        g = Graph(4, [(0, 1), (1, 2)], {'end': 2})
        path = os.path.join(self.tmpdir, 'g.el')
        io.write_graph(g, path, header="test", cover=([0, 1, 0, 1], [0, 1, 2, 3]))

        with open(path) as f:
            text = f.read()
        self.assertTrue(text.startswith("# test\n"))
        self.assertIn("3\n", text)

        with open(io.cover_map_path(path)) as f:
            self.assertEqual(f.readline(), "0 0 0\n")

        back, _ = io.load_graph(path)
        self.assertEqual(back.n, 4)
        self.assertEqual(back.edges(), g.edges())
        self.assertEqual(back.labels, {'end': 2})


if __name__ == '__main__':
    unittest.main()
