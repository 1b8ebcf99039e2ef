"""
Runs bound and structure checks over a stream of graphs, optionally in a
pool of worker processes.  Results come back in input order.
"""
import collections
import multiprocessing

from .bounds import evaluate_profile, is_violation
from .graph import degree_profile
from .logger import Logger
from .matching import matching_number
from .structure import all_properties_hold, gallai_edmonds, \
    verify_ge_properties

CHUNK_SIZE = 16

BoundSweepResult = collections.namedtuple("BoundSweepResult",
                                          ["graph", "nu", "profile",
                                           "reports"])

StructureSweepResult = collections.namedtuple("StructureSweepResult",
                                              ["graph", "decomposition",
                                               "report", "all_true"])


class Sweep(object):
    """
    Base class for the sweeps.  Subclasses define _work, a picklable
    module level function applied to each (graph, settings) pair.
    """
    def __init__(self, jobs=1):
        self.jobs = max(1, int(jobs))
        self.counts = collections.Counter()
        self.log = Logger()

    def set_logger(self, logger):
        """
        Set a custom logger.  This should be based on the logging Python
        library.
        """
        self.log = logger

    def run(self, graphs):
        """
        Yields one result per graph, in the order the graphs are given.
        """
        work = ((g, self._settings()) for g in graphs)
        if self.jobs == 1:
            results = (self._work(item) for item in work)
            for result in results:
                self._tally(result)
                yield result
            return

        self.log.debug("Starting %d worker processes" % self.jobs)
        pool = multiprocessing.Pool(self.jobs)
        try:
            for result in pool.imap(self._work, work, CHUNK_SIZE):
                self._tally(result)
                yield result
            pool.close()
        finally:
            pool.terminate()
            pool.join()

    def _settings(self):
        return None

    def _tally(self, result):
        self.counts["graphs_checked"] += 1


class BoundSweep(Sweep):
    """
    Evaluates a list of BoundSpecs on every graph.
    """
    def __init__(self, bounds, jobs=1):
        super(BoundSweep, self).__init__(jobs)
        self.bounds = list(bounds)
        self._work = _evaluate_bounds

    def _settings(self):
        return self.bounds

    def _tally(self, result):
        super(BoundSweep, self)._tally(result)
        for spec, report in result.reports:
            if is_violation(report):
                self.counts["violations"] += 1
                self.log.debug("Violation of %s: slack %s" %
                               (spec.name, report.slack))
            if report.tight:
                self.counts["tight"] += 1


class StructureSweep(Sweep):
    """
    Computes and checks the Gallai-Edmonds decomposition of every graph.
    """
    def __init__(self, jobs=1):
        super(StructureSweep, self).__init__(jobs)
        self._work = _check_structure

    def _tally(self, result):
        super(StructureSweep, self)._tally(result)
        if not result.all_true:
            self.counts["violations"] += 1


#
# Private functions to do the work
#

def _evaluate_bounds(item):
    g, bounds = item
    nu = matching_number(g)
    profile = degree_profile(g)
    reports = [(spec, evaluate_profile(spec, profile, nu)) for spec in bounds]
    return BoundSweepResult(graph=g, nu=nu, profile=profile, reports=reports)


def _check_structure(item):
    g, _ = item
    decomposition = gallai_edmonds(g)
    report = verify_ge_properties(g, decomposition)
    return StructureSweepResult(graph=g, decomposition=decomposition,
                                report=report,
                                all_true=all_properties_hold(report))
