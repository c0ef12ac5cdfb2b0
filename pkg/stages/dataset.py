from cbgraph import io
from cbgraph import log
from cbgraph import types
from cbgraph import generators
from cbgraph.graph import all_pairs_distances
from cbgraph.system import ExitException, GraphFormatError


def resolve_graph(operand):
    """
    An edge list path, "-" for standard input, or family[:params] such as
    circulant:9,1,2. Files take precedence over family names.
    :return (Graph, original id -> dense id map or None)
    """
    if operand == '-' or io.file_exists(operand):
        return io.load_graph(operand)
    family, _, params = operand.partition(':')
    if ':' in operand or family in generators.FAMILIES:
        return generators.make(family, [params] if params else []), None
    raise GraphFormatError("File %s does not exist" % operand)


def resolve_vertex(g, relabel, token):
    """A label name from the sidecar, or an id of the input file"""
    if token in g.labels:
        return g.labels[token]
    try:
        v = int(token)
    except ValueError:
        raise ExitException("%s is neither a vertex id nor a label (labels: %s)" % (token, ", ".join(sorted(g.labels)) or "none"))
    if relabel is not None:
        if v not in relabel:
            raise ExitException("Vertex %s is not in the graph" % v)
        return relabel[v]
    if not 0 <= v < g.n:
        raise ExitException("Vertex %s out of range 0..%s" % (v, g.n - 1))
    return v


class CBLoadGraphStage(types.CB_Stage):
    def process(self, args, outputs):
        report = types.CB_Report(args.command)
        outputs['report'] = report

        operand = args.operands[0]
        g, relabel = resolve_graph(operand)
        if g.n == 0:
            raise GraphFormatError("%s has no vertices" % operand)

        log.CB_INFO("Loaded %s: %s vertices, %s edges" % (operand, g.n, g.num_edges()))
        d = all_pairs_distances(g)
        report.set_graph(g, d)
        ids = VertexIds(relabel)
        if not ids.is_identity():
            report.add('relabel', ids.describe())

        outputs['graph'] = g
        outputs['d'] = d
        outputs['relabel'] = relabel
        outputs['ids'] = ids
        outputs['operand'] = operand
        outputs['vertices'] = [resolve_vertex(g, relabel, t) for t in args.operands[1:]] \
            if self.params.get('vertex_operands') else []


class VertexIds(object):
    """
    Dense vertex ids of the loaded graph back to the ids of the input file.
    The identity for generated graphs and for files numbered 0..n-1.
    """
    def __init__(self, relabel=None):
        self.relabel = relabel
        self.inverse = {}
        if relabel is not None:
            self.inverse = dict((dense, orig) for orig, dense in relabel.items() if orig != dense)

    def __call__(self, v):
        return self.inverse.get(v, v)

    def many(self, vertices):
        return [self(v) for v in vertices]

    def sorted(self, vertices):
        return sorted(self.many(vertices))

    def name(self, v):
        return str(self(v))

    def is_identity(self):
        return not self.inverse

    def to_dense(self, v):
        if self.relabel is None:
            return v
        if v not in self.relabel:
            raise ExitException("Vertex %s is not in the graph" % v)
        return self.relabel[v]

    def describe(self):
        """input-id:dense-id pairs of every renamed vertex"""
        return ",".join("%s:%s" % (self.inverse[v], v) for v in sorted(self.inverse))


def original_ids(ids, vertices):
    """Dense ids back to the ids of the input file, as strings for re-run commands"""
    return [ids.name(v) for v in vertices]
