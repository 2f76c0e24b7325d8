"""Tests for the survnet command line."""

import contextlib
import io
import json
import pathlib
import tempfile
import unittest

from survnet import cli

TEST_FILE_FOLDER = pathlib.Path(__file__).parent / 'testing_files'
SEVEN_NODES = str(TEST_FILE_FOLDER / 'seven_nodes.csv')
K34_EDGELIST = str(TEST_FILE_FOLDER / 'k34.edgelist')


def run_cli(*argv):
    """Runs main, returning the exit code, stdout and stderr."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


class NumberCommandTestCase(unittest.TestCase):

    def test_seven_nodes(self):
        code, out, _ = run_cli('number', SEVEN_NODES)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out.splitlines(), [
            'label,accumulated_cost,number',
            'F,13,1', 'C,15,2', 'D,18,3', 'A,19,4', 'B,20,5', 'E,22,6',
            'G,25,7',
        ])

    def test_asymmetric_matrix(self):
        code, out, _ = run_cli(
            'number', str(TEST_FILE_FOLDER / 'asymmetric.csv'))
        self.assertEqual(code, cli.EXIT_INPUT_ERROR)
        self.assertEqual(out, '')

    def test_missing_file(self):
        code, _, _ = run_cli('number', str(TEST_FILE_FOLDER / 'missing.csv'))
        self.assertEqual(code, cli.EXIT_INPUT_ERROR)


class GenerateCommandTestCase(unittest.TestCase):

    def test_edge_list_is_reproducible(self):
        with tempfile.TemporaryDirectory() as tmp:
            first = pathlib.Path(tmp) / 'first.edgelist'
            second = pathlib.Path(tmp) / 'second.edgelist'
            code, out, _ = run_cli('generate', '-n', '7', '-k', '3',
                                   '-o', str(first))
            self.assertEqual(code, cli.EXIT_OK)
            run_cli('generate', '-n', '7', '-k', '3', '-o', str(second))
            self.assertEqual(first.read_bytes(), second.read_bytes())
            with open(K34_EDGELIST) as inf:
                self.assertEqual(first.read_text(), inf.read())
        self.assertIn('links: 12', out)
        self.assertIn('kappa: 3', out)

    def test_with_matrix(self):
        code, out, err = run_cli('generate', '-k', '3', SEVEN_NODES)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertTrue(out.startswith('7 3 bipartite\n'))
        self.assertIn('total_cost: 34', err)

    def test_dot_labels(self):
        code, out, _ = run_cli('generate', '-k', '3', SEVEN_NODES, '--out', 'dot')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn('1 [label="F"];', out)
        self.assertIn('1 -- 4;', out)

    def test_hypercube(self):
        code, out, err = run_cli('generate', '--method', 'hypercube', '-k', '2')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out.splitlines()[0], '4 2 hypercube')
        self.assertIn('links: 4', err)

    def test_shortfall_warning(self):
        code, _, err = run_cli('generate', '-n', '6', '-k', '4')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn('warning: achieved connectivity 2 < requested 4', err)

    def test_invalid_k(self):
        code, out, _ = run_cli('generate', '-n', '5', '-k', '5')
        self.assertEqual(code, cli.EXIT_INPUT_ERROR)
        self.assertEqual(out, '')

    def test_matrix_size_mismatch(self):
        code, _, _ = run_cli('generate', '-n', '6', '-k', '3', SEVEN_NODES)
        self.assertEqual(code, cli.EXIT_INPUT_ERROR)


class VerifyCommandTestCase(unittest.TestCase):

    def test_verified(self):
        code, out, _ = run_cli('verify', K34_EDGELIST, '-k', '3')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn('verdict: k-connected', out)
        self.assertEqual(out.count('path: '), 3)

    def test_refuted(self):
        code, out, _ = run_cli('verify', K34_EDGELIST, '-k', '4')
        self.assertEqual(code, cli.EXIT_UNVERIFIED)
        self.assertIn('verdict: not k-connected', out)
        self.assertIn('witness_cut: ', out)

    def test_labels(self):
        code, out, _ = run_cli('verify', K34_EDGELIST, '-k', '3',
                               '--labels', SEVEN_NODES)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn('F', out)

    def test_edgeless(self):
        code, _, _ = run_cli(
            'verify', str(TEST_FILE_FOLDER / 'empty.edgelist'), '-k', '1')
        self.assertEqual(code, cli.EXIT_UNVERIFIED)

    def test_k_out_of_range(self):
        code, _, _ = run_cli('verify', K34_EDGELIST, '-k', '7')
        self.assertEqual(code, cli.EXIT_INPUT_ERROR)


class CompareCommandTestCase(unittest.TestCase):

    def test_seven_three(self):
        code, out, _ = run_cli('compare', '-n', '7', '-k', '3', SEVEN_NODES)
        self.assertEqual(code, cli.EXIT_OK)
        lines = out.splitlines()
        self.assertTrue(lines[0].startswith('method'))
        bipartite = lines[1].split()
        self.assertEqual(bipartite[:5], ['bipartite', '12', '12', '3', '34'])
        self.assertEqual(
            len([line for line in lines if line.startswith('finding: ')]), 2)

    def test_csv(self):
        code, out, _ = run_cli('compare', '-n', '7', '-k', '3', '--format', 'csv')
        self.assertEqual(code, cli.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'method,links,formula,kappa,total_cost,flags')
        self.assertTrue(lines[1].startswith('bipartite,12,12,3,,'))

    def test_hypercube_row(self):
        code, out, _ = run_cli('compare', '-n', '8', '-k', '3', '--format', 'csv')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn('hypercube,12,12,3,', out)

    def test_zero_k(self):
        code, _, _ = run_cli('compare', '-n', '7', '-k', '0')
        self.assertEqual(code, cli.EXIT_INPUT_ERROR)


class SimulateCommandTestCase(unittest.TestCase):

    def test_below_kappa(self):
        code, out, _ = run_cli('simulate', K34_EDGELIST, '-f', '2',
                               '--trials', '200', '--seed', '1')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out, 'mode,f,trials,survived,fraction,kappa\n'
                              'node,2,200,200,1.000000,3\n')

    def test_text_format(self):
        code, out, _ = run_cli('simulate', K34_EDGELIST, '-f', '2',
                               '--trials', '10', '--format', 'text')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn('10 of 10 trials connected', out)

    def test_too_many_failures(self):
        code, _, _ = run_cli('simulate', K34_EDGELIST, '-f', '6')
        self.assertEqual(code, cli.EXIT_INPUT_ERROR)


class ManifestTestCase(unittest.TestCase):

    def test_manifest_lists_outputs(self):
        with tempfile.TemporaryDirectory() as tmp:
            output = pathlib.Path(tmp) / 'k34.edgelist'
            manifest = pathlib.Path(tmp) / 'run.json'
            code, _, _ = run_cli('--manifest', str(manifest), 'generate',
                                 '-n', '7', '-k', '3', '-o', str(output))
            self.assertEqual(code, cli.EXIT_OK)
            record = json.loads(manifest.read_text())
        self.assertEqual(record['command'], 'generate')
        self.assertEqual(record['outputs'], [str(output), str(manifest)])
        self.assertEqual(record['inputs']['k'], 3)
        self.assertEqual(record['version'], cli.__version__)

    def test_no_manifest_on_error(self):
        with tempfile.TemporaryDirectory() as tmp:
            manifest = pathlib.Path(tmp) / 'run.json'
            code, _, _ = run_cli('--manifest', str(manifest), 'generate',
                                 '-n', '5', '-k', '5')
            self.assertEqual(code, cli.EXIT_INPUT_ERROR)
            self.assertFalse(manifest.exists())
