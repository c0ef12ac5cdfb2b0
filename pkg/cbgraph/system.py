import datetime

from cbgraph import log


class CBGraphError(Exception):
    """Base class of every error raised by the graph toolkit."""
    exit_code = 2


class GraphFormatError(CBGraphError):
    pass


class DisconnectedGraph(CBGraphError):
    pass


class PreconditionViolated(CBGraphError):
    pass


class EmptyLevel(CBGraphError):
    def __init__(self, msg, level):
        super().__init__(msg)
        self.level = level


class NotUniformDistance(CBGraphError):
    pass


class AlreadyGeodesic(CBGraphError):
    pass


class NotFound(CBGraphError):
    pass


class NotHIndependent(CBGraphError):
    pass


class LocalConditionsFail(CBGraphError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class MarginTooSmall(CBGraphError):
    pass


class UnknownFamily(CBGraphError):
    pass


class BadParameters(CBGraphError):
    pass


class DisjointPentagons(CBGraphError):
    pass


class HasTriangle(CBGraphError):
    pass


class ExitException(Exception):
    pass


def now():
    """Return the current time"""
    return datetime.datetime.now().strftime('%a %b %d %H:%M:%S %Z %Y')


def now_raw():
    return datetime.datetime.now()


def benchmark(start, label, timings=None):
    """
    Logs the running time of a step started at ``start``
    :param timings optional dict collecting ``label -> seconds``
    :return: the running time in seconds
    """
    delta = round((datetime.datetime.now() - start).total_seconds(), 3)
    log.CB_INFO('%s runtime: %s seconds' % (label, delta))
    if timings is not None:
        timings[label] = delta
    return delta
