from cbgraph import log
from cbgraph import system


def format_value(value):
    if value is True:
        return 'true'
    if value is False:
        return 'false'
    if value is None:
        return 'none'
    if isinstance(value, float):
        return '%.4f' % value
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return ",".join(format_value(v) for v in items)
    return str(value)


class CB_Report(object):
    """
    Result of one command: graph summary, ordered key/value results,
    witnesses with the command line reproducing them, and stage timings.
    ``verdict`` is None for commands that do not test a property.
    """
    def __init__(self, command):
        self.command = command
        self.graph = None
        self.values = []
        self.witnesses = []
        self.timings = {}
        self.verdict = None

    def set_graph(self, g, d):
        self.graph = (g.n, g.num_edges(), d.diameter() if g.n else 0)
        log.logger.log_json_graph(*self.graph)

    def add(self, key, value):
        self.values.append((key, value))

    def conclude(self, holds):
        if not holds:
            self.verdict = False
        elif self.verdict is None:
            self.verdict = True

    def fail(self, key, description, rerun=None):
        self.verdict = False
        self.witnesses.append((key, description, rerun))

    def exit_code(self):
        return 1 if self.verdict is False else 0

    def to_kv(self):
        lines = ["command=%s" % self.command]
        if self.graph is not None:
            lines.extend(["n=%s" % self.graph[0], "m=%s" % self.graph[1], "diameter=%s" % self.graph[2]])
        for key, value in self.values:
            lines.append("%s=%s" % (key, format_value(value)))
        if self.verdict is not None:
            lines.append("verdict=%s" % format_value(self.verdict))
        for key, description, rerun in self.witnesses:
            lines.append("witness.%s=%s" % (key, description))
            if rerun:
                lines.append("rerun.%s=%s" % (key, rerun))
        return "\n".join(lines) + "\n"

    def to_text(self):
        lines = ["%s" % self.command]
        if self.graph is not None:
            lines.append("  graph: %s vertices, %s edges, diameter %s" % self.graph)
        width = max([len(k) for k, _ in self.values] + [0])
        for key, value in self.values:
            lines.append("  %s : %s" % (key.ljust(width), format_value(value)))
        if self.verdict is not None:
            lines.append("  verdict: %s" % ("holds" if self.verdict else "FAILS"))
        for key, description, rerun in self.witnesses:
            lines.append("  witness (%s): %s" % (key, description))
            if rerun:
                lines.append("    reproduce with: %s" % rerun)
        if self.timings:
            lines.append("  timings: %s" % ", ".join("%s %.3fs" % kv for kv in self.timings.items()))
        return "\n".join(lines) + "\n"

    def render(self, fmt):
        return self.to_kv() if fmt == 'kv' else self.to_text()


class CB_Stage:
    def __init__(self, name, args, **params):
        self.name = name
        self.args = args
        self.params = params
        self.next_stage = None
        self.prev_stage = None

    def connect(self, stage):
        self.next_stage = stage
        stage.prev_stage = self
        return stage

    def run(self, outputs=None):
        if outputs is None:
            outputs = {}
        start_time = system.now_raw()
        log.logger.log_json_stage_run(self.name, start_time)

        log.CB_INFO('Running %s stage' % self.name)

        self.process(self.args, outputs)

        # The report should always be populated at this point
        if outputs.get('report') is None:
            raise Exception("Assert violation: report is missing from outputs dictionary.")

        system.benchmark(start_time, self.name, outputs['report'].timings)
        log.CB_INFO('Finished %s stage' % self.name)

        if self.next_stage is not None:
            self.next_stage.run(outputs)
        return outputs

    def last_stage(self):
        if self.next_stage:
            return self.next_stage.last_stage()
        else:
            return self

    def process(self, args, outputs):
        raise NotImplementedError
