import os
import sys

from cbgraph import context
from cbgraph import log
from cbgraph.graph import Graph
from cbgraph.system import GraphFormatError


def file_exists(path_file):
    return os.path.isfile(path_file)


def labels_path(edgelist_path):
    return os.path.splitext(edgelist_path)[0] + context.labels_extension


def cover_map_path(edgelist_path):
    return os.path.splitext(edgelist_path)[0] + context.cover_map_extension


def _parse_id(token, lineno):
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError("Line %s: '%s' is not an integer vertex id" % (lineno, token))
    if value < 0:
        raise GraphFormatError("Line %s: negative vertex id %s" % (lineno, value))
    return value


def parse_edgelist(lines):
    """
    Parses "u v" edge lines and "v" isolated-vertex lines; '#' starts a
    comment line. Loops are rejected, duplicate edges merged.
    :return (Graph, dict original id -> dense id)
    """
    vertices = set()
    edges = set()
    duplicates = 0
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            vertices.add(_parse_id(tokens[0], lineno))
        elif len(tokens) == 2:
            u, v = _parse_id(tokens[0], lineno), _parse_id(tokens[1], lineno)
            if u == v:
                raise GraphFormatError("Line %s: loop at vertex %s" % (lineno, u))
            vertices.add(u)
            vertices.add(v)
            e = (min(u, v), max(u, v))
            if e in edges:
                duplicates += 1
            edges.add(e)
        else:
            raise GraphFormatError("Line %s: expected 1 or 2 ids, got %s" % (lineno, len(tokens)))

    if duplicates:
        log.CB_WARNING("Merged %s duplicate edges" % duplicates)

    relabel = {v: i for i, v in enumerate(sorted(vertices))}
    changed = [v for v in relabel if relabel[v] != v]
    if changed:
        log.CB_INFO("Relabeled %s vertices onto 0..%s" % (len(changed), len(relabel) - 1))
    g = Graph(len(relabel), [(relabel[u], relabel[v]) for u, v in sorted(edges)])
    return g, relabel


def parse_labels(lines, relabel=None):
    labels = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError("Label line %s: expected 'name id'" % lineno)
        v = _parse_id(tokens[1], lineno)
        if relabel is not None:
            if v not in relabel:
                raise GraphFormatError("Label line %s: unknown vertex %s" % (lineno, v))
            v = relabel[v]
        labels[tokens[0]] = v
    return labels


def load_graph(path):
    """
    Loads an edge list, plus its label sidecar when present.
    "-" reads standard input.
    """
    if path == '-':
        g, relabel = parse_edgelist(sys.stdin.readlines())
    else:
        if not file_exists(path):
            raise GraphFormatError("File %s does not exist" % path)
        with open(path) as f:
            g, relabel = parse_edgelist(f)
        lp = labels_path(path)
        if file_exists(lp):
            with open(lp) as f:
                g.labels = parse_labels(f, relabel)
            log.CB_INFO("Loaded %s vertex labels from %s" % (len(g.labels), lp))
    return g, relabel


def format_edgelist(g, header=None):
    out = []
    if header:
        out.append("# %s" % header)
    for v in range(g.n):
        if g.degree(v) == 0:
            out.append("%s" % v)
    for u, v in g.edges():
        out.append("%s %s" % (u, v))
    return "\n".join(out) + "\n"


def format_labels(labels):
    return "".join("%s %s\n" % (name, v) for name, v in sorted(labels.items(), key=lambda kv: (kv[1], kv[0])))


def format_cover_map(images, heights):
    return "".join("%s %s %s\n" % (v, images[v], heights[v]) for v in range(len(images)))


def write_graph(g, path, header=None, cover=None):
    """
    Writes an edge list to path ("-" for standard output). The label
    sidecar and, for covers, the "cover-vertex image-vertex height"
    sidecar are written next to it.
    """
    text = format_edgelist(g, header)
    if path == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
        return

    with open(path, 'w') as f:
        f.write(text)
    if g.labels:
        with open(labels_path(path), 'w') as f:
            f.write(format_labels(g.labels))
    if cover is not None:
        images, heights = cover
        with open(cover_map_path(path), 'w') as f:
            f.write(format_cover_map(images, heights))
    log.CB_INFO("Wrote %s" % path)
