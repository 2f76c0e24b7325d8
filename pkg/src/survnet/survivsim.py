"""Failure injection for generated topologies.

Each trial removes a fixed number of distinct nodes or links chosen
uniformly at random and checks whether the survivors stay connected.
Trial ``i`` draws from a generator seeded with ``seed ^ i``, so the
outcome of a trial does not depend on the order trials are run in.
"""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
import itertools
import math
import typing as t

import numpy

from .connectivity import vertex_connectivity
from .topology import Topology, is_connected, remove_edges, remove_nodes

EXHAUSTIVE_BUDGET = 10 ** 6

MODES = ("node", "link")

CSV_HEADER = "mode,f,trials,survived,fraction,kappa"


class TrialConfig(object):
    """Parameters of a failure-injection experiment.

    Parameters
    ----------
    failures : int
        Number of elements failed simultaneously in each trial.
    mode : str
        ``node`` or ``link``.
    trials : int
        Number of trials, at least 1.
    seed : int
        Unsigned 64-bit seed.

    Raises
    ------
    ValueError
        Raised if any parameter is out of range.
    """

    def __init__(self, failures, mode="node", trials=1000, seed=0):
        if mode not in MODES:
            raise ValueError(
                "Failure mode must be one of {}, got {}.".format(", ".join(MODES), mode)
            )
        for name, value in (("Failure count", failures), ("Trial count", trials),
                            ("Seed", seed)):
            if isinstance(value, bool) or int(value) != value:
                raise ValueError("{} must be an integer, got {}.".format(name, value))
        if failures < 0:
            raise ValueError("Failure count must be >= 0, got {}.".format(failures))
        if trials < 1:
            raise ValueError("Trial count must be >= 1, got {}.".format(trials))
        if not 0 <= seed < 2 ** 64:
            raise ValueError(
                "Seed must be an unsigned 64-bit integer, got {}.".format(seed)
            )
        self.failures = int(failures)
        self.mode = mode
        self.trials = int(trials)
        self.seed = int(seed)

    def __repr__(self):
        return "<TrialConfig {} failures of {}s, {} trials, seed {}>".format(
            self.failures, self.mode, self.trials, self.seed
        )

    def check(self, topology):
        """Checks the config against a topology."""
        if self.mode == "node" and self.failures > topology.n - 2:
            raise ValueError(
                "Node mode needs at least two survivors: f={} but n={}.".format(
                    self.failures, topology.n
                )
            )
        if self.mode == "link" and self.failures > len(topology.edge_set):
            raise ValueError(
                "Cannot fail {} links of a topology with {} links.".format(
                    self.failures, len(topology.edge_set)
                )
            )
        return


class SurvivabilityReport(t.NamedTuple):
    survived: int
    trials: int
    fraction: float
    kappa: int


def _survives(topology, mode, failed):
    if mode == "node":
        return is_connected(remove_nodes(topology, failed))
    return is_connected(remove_edges(topology, failed))


def run_trial(topology, config, trial):
    """Runs one trial, True if the topology survives."""
    rng = numpy.random.default_rng(config.seed ^ trial)
    if config.mode == "node":
        elements = topology.nodes
    else:
        elements = topology.edges
    picks = rng.choice(len(elements), size=config.failures, replace=False)
    failed = [elements[int(i)] for i in picks]
    return _survives(topology, config.mode, failed)


def _run_trials(topology, config, start, stop):
    return sum(run_trial(topology, config, i) for i in range(start, stop))


def simulate(topology, config, workers=None):
    """Estimates the probability that a topology survives random failures.

    Parameters
    ----------
    topology : survnet.topology.Topology
        Graph under test.
    config : TrialConfig
        Failure count, mode, number of trials and seed.
    workers : int, optional
        If given, trials are split over a process pool of this size. The
        report is identical to the sequential run.

    Returns
    -------
    report : SurvivabilityReport

    Raises
    ------
    ValueError
        Raised if the failure count does not fit the topology.
    """
    if not isinstance(topology, Topology):
        raise TypeError("simulate requires a Topology.")
    config.check(topology)
    kappa = vertex_connectivity(topology).kappa
    if workers and workers > 1:
        bounds = numpy.linspace(0, config.trials, workers + 1).astype(int)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(_run_trials, topology, config, int(a), int(b))
                for a, b in zip(bounds[:-1], bounds[1:])
            ]
            survived = sum(f.result() for f in futures)
    else:
        survived = _run_trials(topology, config, 0, config.trials)
    return SurvivabilityReport(
        int(survived), config.trials, survived / config.trials, kappa
    )


def exhaustive_survivability(topology, failures, mode="node"):
    """Exact fraction of failure sets the topology survives.

    Parameters
    ----------
    topology : survnet.topology.Topology
    failures : int
        Size of each failure set.
    mode : str, optional
        ``node`` or ``link``.

    Returns
    -------
    fraction : fractions.Fraction

    Raises
    ------
    ValueError
        Raised if there are more than `EXHAUSTIVE_BUDGET` failure sets
        or the failure count does not fit the topology.
    """
    TrialConfig(failures, mode=mode).check(topology)
    elements = topology.nodes if mode == "node" else topology.edges
    total = math.comb(len(elements), failures)
    if total > EXHAUSTIVE_BUDGET:
        raise ValueError(
            "{} failure sets exceed the exhaustive budget of {}.".format(
                total, EXHAUSTIVE_BUDGET
            )
        )
    survived = sum(
        _survives(topology, mode, failed)
        for failed in itertools.combinations(elements, failures)
    )
    return Fraction(survived, total)


def report_csv(report, config):
    """Report as CSV text with a fixed header."""
    return "{}\n{},{},{},{},{:.6f},{}\n".format(
        CSV_HEADER,
        config.mode,
        config.failures,
        report.trials,
        report.survived,
        report.fraction,
        report.kappa,
    )


def format_report(report, config):
    return (
        "{} mode, {} failures: {} of {} trials connected "
        "(fraction {:.6f}, kappa {})\n"
    ).format(
        config.mode,
        config.failures,
        report.survived,
        report.trials,
        report.fraction,
        report.kappa,
    )
