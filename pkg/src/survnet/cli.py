"""Command-line front end for survnet.

Exit codes: 0 on success or a verified topology, 1 when verification
fails, 2 on invalid input.
"""

import argparse
import json
import logging
import pathlib
import sys

from . import __version__
from .analysis import (
    audit_inequalities,
    compare,
    comparison_csv,
    format_comparison_table,
    link_count_formula,
    total_cost,
)
from .connectivity import format_certificate, is_k_connected, vertex_connectivity
from .costmodel import accumulated_costs, load_cost_matrix, number_nodes
from .data import METHOD_DATA
from .generators import generate
from .survivsim import TrialConfig, format_report, report_csv, simulate
from .topology import load_edge_list

EXIT_OK = 0
EXIT_UNVERIFIED = 1
EXIT_INPUT_ERROR = 2

logger = logging.getLogger("survnet")


class RunManifest(object):
    """Record of one command run.

    Parameters
    ----------
    command : str
        Sub-command name.
    inputs : dict
        Input file paths and parameters.
    outputs : [str], optional
        Paths of every artifact written.
    """

    def __init__(self, command, inputs, outputs=None):
        self.command = command
        self.inputs = dict(inputs)
        self.outputs = list(outputs) if outputs else []
        self.version = __version__

    def __repr__(self):
        return "<RunManifest ({}) with {} outputs>".format(
            self.command, len(self.outputs)
        )

    def as_dict(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "version": self.version,
        }

    def write(self, path):
        with open(str(path), "w") as outf:
            outf.write(json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n")
        return


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(str(path), "w") as outf:
            outf.write(text)
    return


def _number_table(matrix):
    totals = accumulated_costs(matrix)
    numbering = number_nodes(matrix)
    return [
        (label, totals[label], numbering.rank_of(label))
        for label in numbering.ordered_labels
    ]


def cmd_number(args):
    """Prints the label, accumulated cost and number of every node."""
    matrix = load_cost_matrix(args.matrix)
    rows = _number_table(matrix)
    if args.format == "csv":
        lines = ["label,accumulated_cost,number"]
        lines.extend("{},{:g},{}".format(*row) for row in rows)
    else:
        width = max(len("label"), max(len(row[0]) for row in rows))
        lines = [
            "{:<{w}}  {:>16}  {:>6}".format(
                "label", "accumulated_cost", "number", w=width
            )
        ]
        lines.extend(
            "{:<{w}}  {:>16g}  {:>6}".format(label, cost, rank, w=width)
            for label, cost, rank in rows
        )
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK, []


def cmd_generate(args):
    """Builds a topology, writes it and reports its links and connectivity."""
    matrix = load_cost_matrix(args.matrix) if args.matrix else None
    n = args.n
    if matrix is not None:
        if n is not None and n != matrix.n:
            raise ValueError(
                "-n {} does not match the {} nodes of the cost matrix.".format(n, matrix.n)
            )
        n = matrix.n
    if n is None and args.method != "hypercube":
        raise ValueError(
            "The {} construction needs -n or a cost matrix.".format(args.method)
        )
    topology = generate(args.method, n=n, k=args.k)
    numbering = number_nodes(matrix) if matrix is not None else None
    if args.out == "dot":
        text = topology.to_dot(numbering=numbering)
    else:
        text = topology.edge_list
    _write_text(args.output, text)
    summary = sys.stderr if args.output == "-" else sys.stdout
    kappa = vertex_connectivity(topology).kappa
    formula = link_count_formula(args.method, topology.n, topology.k)
    print("links: {}".format(len(topology.edge_set)), file=summary)
    print("formula: {}".format(formula), file=summary)
    print("kappa: {}".format(kappa), file=summary)
    if matrix is not None:
        print(
            "total_cost: {:g}".format(total_cost(topology, matrix, numbering)),
            file=summary,
        )
    if kappa < topology.k:
        print(
            "warning: achieved connectivity {} < requested {}".format(kappa, topology.k),
            file=summary,
        )
    outputs = [] if args.output == "-" else [str(args.output)]
    return EXIT_OK, outputs


def cmd_verify(args):
    """Checks k-connectivity of an edge list and prints the certificate."""
    topology = load_edge_list(args.edgelist)
    numbering = number_nodes(load_cost_matrix(args.labels)) if args.labels else None
    if numbering is not None and len(numbering) != topology.n:
        raise ValueError(
            "The label matrix has {} nodes, the topology {}.".format(
                len(numbering), topology.n
            )
        )
    verdict = is_k_connected(topology, args.k)
    print("k: {}".format(args.k))
    verdict_text = "k-connected" if verdict.verified else "not k-connected"
    print("verdict: {}".format(verdict_text))
    sys.stdout.write(format_certificate(verdict.report, numbering=numbering))
    return (EXIT_OK if verdict.verified else EXIT_UNVERIFIED), []


def cmd_compare(args):
    """Prints the comparison of every applicable construction."""
    matrix = load_cost_matrix(args.matrix) if args.matrix else None
    rows = compare(args.n, args.k, matrix)
    if args.format == "csv":
        sys.stdout.write(comparison_csv(rows))
    else:
        sys.stdout.write(format_comparison_table(rows))
        for row in rows:
            entry = METHOD_DATA[row.method]
            print("{}: {}, links {}".format(row.method, entry["name"], entry["formula"]))
    for finding in audit_inequalities().findings:
        print("finding: {}".format(finding))
    return EXIT_OK, []


def cmd_simulate(args):
    """Runs a failure-injection experiment on an edge list."""
    topology = load_edge_list(args.edgelist)
    config = TrialConfig(args.f, mode=args.mode, trials=args.trials, seed=args.seed)
    report = simulate(topology, config, workers=args.workers)
    if args.format == "csv":
        sys.stdout.write(report_csv(report, config))
    else:
        sys.stdout.write(format_report(report, config))
    return EXIT_OK, []


def _positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("must be >= 1, got {}".format(value))
    return number


def build_parser():
    parser = argparse.ArgumentParser(
        prog="survnet",
        description="Synthesise and verify k-connected survivable network topologies.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--manifest", help="Write a JSON run manifest to this path")
    subparsers = parser.add_subparsers(dest="command", required=True)

    number = subparsers.add_parser("number", help="Number nodes by accumulated cost")
    number.add_argument("matrix", help="Cost matrix CSV file")
    number.add_argument("--format", choices=("table", "csv"), default="csv")
    number.set_defaults(func=cmd_number)

    gen = subparsers.add_parser("generate", help="Generate a topology")
    gen.add_argument(
        "--method",
        choices=("bipartite", "sequential", "harary", "hypercube"),
        default="bipartite",
    )
    gen.add_argument("-n", type=int, help="Number of nodes")
    gen.add_argument("-k", type=int, required=True, help="Requested connectivity")
    gen.add_argument("matrix", nargs="?", help="Optional cost matrix CSV file")
    gen.add_argument("--out", choices=("edgelist", "dot"), default="edgelist")
    gen.add_argument("-o", "--output", default="-", help="Output path, - for stdout")
    gen.set_defaults(func=cmd_generate)

    verify = subparsers.add_parser("verify", help="Verify k-connectivity")
    verify.add_argument("edgelist", help="Edge-list file")
    verify.add_argument("-k", type=int, required=True, help="Required connectivity")
    verify.add_argument("--labels", help="Cost matrix CSV used to print node labels")
    verify.set_defaults(func=cmd_verify)

    comp = subparsers.add_parser("compare", help="Compare the constructions")
    comp.add_argument("-n", type=int, required=True, help="Number of nodes")
    comp.add_argument("-k", type=int, required=True, help="Requested connectivity")
    comp.add_argument("matrix", nargs="?", help="Optional cost matrix CSV file")
    comp.add_argument("--format", choices=("table", "csv"), default="table")
    comp.set_defaults(func=cmd_compare)

    sim = subparsers.add_parser("simulate", help="Simulate random failures")
    sim.add_argument("edgelist", help="Edge-list file")
    sim.add_argument("--mode", choices=("node", "link"), default="node")
    sim.add_argument("-f", type=int, required=True, help="Simultaneous failures")
    sim.add_argument("--trials", type=_positive_int, default=1000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--workers", type=int, help="Process pool size")
    sim.add_argument("--format", choices=("text", "csv"), default="csv")
    sim.set_defaults(func=cmd_simulate)
    return parser


def _inputs(args):
    return {
        key: (str(value) if isinstance(value, pathlib.PurePath) else value)
        for key, value in sorted(vars(args).items())
        if key not in ("func", "manifest", "verbose")
    }


def main(argv=None):
    """Runs the command line, returning the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    logging.captureWarnings(True)
    logger.debug("running %s with %s", args.command, _inputs(args))
    try:
        code, outputs = args.func(args)
    except (ValueError, OSError) as error:
        logger.error("%s", error)
        return EXIT_INPUT_ERROR
    finally:
        logging.captureWarnings(False)
    if args.manifest:
        RunManifest(args.command, _inputs(args), outputs + [args.manifest]).write(
            args.manifest
        )
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
