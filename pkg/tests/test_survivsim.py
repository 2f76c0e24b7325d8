"""Tests for failure-injection simulation."""

from fractions import Fraction
import math
import unittest
import warnings

from survnet import generators, survivsim
from survnet.connectivity import vertex_connectivity
from survnet.generators import GeneratorParams
from survnet.survivsim import TrialConfig
from survnet.survnet_warnings import ConnectivityShortfallWarning
from survnet.topology import Topology

K34 = Topology(7, [(i, j) for i in (1, 2, 3) for j in (4, 5, 6, 7)],
               method='bipartite', k=3)


def cycle(n):
    return Topology(n, [(i, i % n + 1) for i in range(1, n + 1)])


class TrialConfigTestCase(unittest.TestCase):

    def test_invalid(self):
        for kwargs in [dict(failures=-1), dict(failures=1, trials=0),
                       dict(failures=1, mode='edge'), dict(failures=1, seed=-1),
                       dict(failures=1, seed=2 ** 64),
                       dict(failures=1.5), dict(failures=1, trials=10.5),
                       dict(failures=1, seed=0.5)]:
            with self.assertRaises(ValueError):
                TrialConfig(**kwargs)

    def test_too_many_node_failures(self):
        with self.assertRaises(ValueError):
            survivsim.simulate(K34, TrialConfig(6, mode='node'))

    def test_too_many_link_failures(self):
        with self.assertRaises(ValueError):
            survivsim.simulate(K34, TrialConfig(13, mode='link'))


class SimulateTestCase(unittest.TestCase):
    """Tests for simulate."""

    def test_below_kappa_always_survives(self):
        for seed in (0, 1, 2 ** 63 + 5):
            report = survivsim.simulate(
                K34, TrialConfig(2, mode='node', trials=1000, seed=seed))
            self.assertEqual(report.survived, 1000)
            self.assertEqual(report.fraction, 1.0)
            self.assertEqual(report.kappa, 3)

    def test_three_failures_converge(self):
        report = survivsim.simulate(
            K34, TrialConfig(3, mode='node', trials=10000, seed=1))
        self.assertAlmostEqual(report.fraction, 34 / 35, delta=0.01)

    def test_three_sigma_over_seeds(self):
        p, trials = 34 / 35, 2000
        bound = 3 * math.sqrt(p * (1 - p) / trials)
        # Seeds 2^32 apart draw from disjoint trial streams.
        inside = sum(
            abs(survivsim.simulate(
                K34, TrialConfig(3, mode='node', trials=trials, seed=run << 32)
            ).fraction - p) <= bound
            for run in range(40)
        )
        self.assertGreaterEqual(inside, 38)

    def test_single_link_always_fails(self):
        t = Topology(2, [(1, 2)])
        report = survivsim.simulate(t, TrialConfig(1, mode='link', trials=50))
        self.assertEqual(report.fraction, 0.0)

    def test_deterministic(self):
        config = TrialConfig(2, mode='link', trials=500, seed=99)
        first = survivsim.simulate(cycle(8), config)
        second = survivsim.simulate(cycle(8), config)
        self.assertEqual(first, second)

    def test_workers_match_sequential(self):
        config = TrialConfig(3, mode='node', trials=400, seed=3)
        self.assertEqual(survivsim.simulate(K34, config),
                         survivsim.simulate(K34, config, workers=2))

    def test_trial_outcomes_are_order_independent(self):
        config = TrialConfig(3, mode='node', trials=50, seed=8)
        forward = [survivsim.run_trial(K34, config, i) for i in range(50)]
        backward = [survivsim.run_trial(K34, config, i) for i in reversed(range(50))]
        self.assertEqual(forward, backward[::-1])

    def test_guarantee_for_generated_topologies(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', ConnectivityShortfallWarning)
            for n in range(3, 11):
                for k in range(1, n):
                    for method in ('bipartite', 'sequential', 'harary'):
                        t = generators.generate(method, n=n, k=k)
                        kappa = vertex_connectivity(t).kappa
                        f = min(kappa - 1, n - 2)
                        if f < 0:
                            continue
                        report = survivsim.simulate(
                            t, TrialConfig(f, mode='node', trials=20, seed=n * k))
                        self.assertEqual(report.survived, report.trials)


class ExhaustiveTestCase(unittest.TestCase):
    """Tests for exhaustive_survivability."""

    def test_k34_triples(self):
        self.assertEqual(survivsim.exhaustive_survivability(K34, 3), Fraction(34, 35))

    def test_no_failures(self):
        self.assertEqual(survivsim.exhaustive_survivability(K34, 0), 1)
        self.assertEqual(
            survivsim.exhaustive_survivability(Topology(3, [(1, 2)]), 0), 0)

    def test_cycle_pairs(self):
        self.assertEqual(survivsim.exhaustive_survivability(cycle(7), 2),
                         Fraction(1, 3))

    def test_link_mode(self):
        # Any single link may fail in a cycle, no two may.
        self.assertEqual(
            survivsim.exhaustive_survivability(cycle(5), 1, mode='link'), 1)
        self.assertEqual(
            survivsim.exhaustive_survivability(cycle(5), 2, mode='link'), 0)

    def test_budget(self):
        t = generators.generate_sequential(GeneratorParams(40, 20))
        with self.assertRaises(ValueError):
            survivsim.exhaustive_survivability(t, 10, mode='link')


class ReportFormatTestCase(unittest.TestCase):

    def test_csv(self):
        config = TrialConfig(2, mode='node', trials=1000, seed=1)
        report = survivsim.simulate(K34, config)
        self.assertEqual(survivsim.report_csv(report, config),
                         'mode,f,trials,survived,fraction,kappa\n'
                         'node,2,1000,1000,1.000000,3\n')
