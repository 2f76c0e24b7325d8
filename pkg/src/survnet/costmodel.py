"""Link-cost matrices and the accumulated-cost node numbering."""

from collections import OrderedDict
from collections.abc import Mapping
import csv
import io
import math
import pathlib

import numpy


class CostMatrixError(ValueError):
    """Raised when a cost matrix is malformed or fails validation."""

    pass


def load_cost_matrix(source, path=True):
    """Converts a cost matrix CSV file into a `CostMatrix`.

    Parameters
    ----------
    source : str or pathlib.Path
        Either a path to a CSV file or a string containing the CSV data.
    path : bool, optional
        If `true`, flags `source` as a path and not a CSV string.

    Returns
    -------
    cost_matrix : CostMatrix
        The validated matrix.

    Raises
    ------
    CostMatrixError
        Raised if the CSV cannot be parsed or the matrix is not
        square, symmetric, zero on the diagonal and nonnegative.
    """
    parser = CostMatrixParser(source, path=path)
    return parser.make_cost_matrix()


class CostMatrixParser(object):
    """Parses the plain-text CSV cost matrix format.

    Notes
    -----
    The first line is a header ``label,L1,...,Ln`` and every following
    line is ``Li,c_i1,...,c_in``. Whitespace around commas is ignored and
    blank lines are skipped.

    Parameters
    ----------
    source : str or pathlib.Path
        Either a path to a CSV file or a string containing CSV data.
    path : bool, optional
        If `true`, flags `source` as a path and not a CSV string.

    Attributes
    ----------
    id : str
        File stem of the source, empty for string input.
    labels : [str]
        Column labels taken from the header.
    rows : [[float]]
        Parsed cost rows in file order.
    """

    def __init__(self, source, path=True):
        if path:
            csv_path = pathlib.PurePath(source)
            with open(str(csv_path), "r") as inf:
                csv_str = inf.read()
            self.id = csv_path.stem
        else:
            csv_str = source
            self.id = ""
        self.csv_lines = [
            [cell.strip() for cell in row]
            for row in csv.reader(io.StringIO(csv_str))
            if any(cell.strip() for cell in row)
        ]
        self.labels = []
        self.rows = []
        self.parse_csv()

    def parse_csv(self):
        """Runs the parser over the header and every data row."""
        if not self.csv_lines:
            raise CostMatrixError("Empty cost matrix, check input CSV.")
        header = self.csv_lines[0]
        if len(header) < 2 or header[0].lower() != "label":
            raise CostMatrixError(
                'Malformed header, expected "label,<L1>,...,<Ln>" but got '
                '"{}".'.format(",".join(header))
            )
        self.labels = header[1:]
        data_lines = self.csv_lines[1:]
        if len(data_lines) != len(self.labels):
            raise CostMatrixError(
                "Header names {} labels but {} data rows were found.".format(
                    len(self.labels), len(data_lines)
                )
            )
        for position, line in enumerate(data_lines):
            self.rows.append(self.proc_row(position, line))
        return

    def proc_row(self, position, line):
        """Checks the row label and converts the row costs to floats."""
        expected = self.labels[position]
        if line[0] != expected:
            raise CostMatrixError(
                'Row {} is labelled "{}", expected "{}" to match the '
                "header order.".format(position + 1, line[0], expected)
            )
        values = line[1:]
        if len(values) != len(self.labels):
            raise CostMatrixError(
                "Row {} has {} costs, expected {}.".format(
                    expected, len(values), len(self.labels)
                )
            )
        costs = []
        for column, value in zip(self.labels, values):
            try:
                costs.append(float(value))
            except ValueError:
                raise CostMatrixError(
                    'Cost for row {} column {} is not a number: "{}".'.format(
                        expected, column, value
                    )
                ) from None
        return costs

    def make_cost_matrix(self):
        """Builds the validated `CostMatrix`."""
        return CostMatrix(self.labels, self.rows)


class CostMatrix(object):
    """Symmetric table of nonnegative link costs between labelled nodes.

    Parameters
    ----------
    labels : [str]
        Node labels in matrix order. Must be unique and non-empty.
    costs : array_like
        An n x n table, `costs[i][j]` is the cost of a link between
        `labels[i]` and `labels[j]`.

    Attributes
    ----------
    labels : (str, ...)
        Node labels in matrix order.
    costs : numpy.ndarray
        Read-only float array of link costs.

    Raises
    ------
    CostMatrixError
        Raised if any matrix invariant is violated. The message names the
        offending entry.
    """

    def __init__(self, labels, costs):
        labels = tuple(str(x) for x in labels)
        for label in labels:
            if not label:
                raise CostMatrixError("Node labels must be non-empty.")
        duplicates = sorted(set(x for x in labels if labels.count(x) > 1))
        if duplicates:
            raise CostMatrixError(
                "Node labels must be unique, repeated: {}.".format(
                    ", ".join(duplicates)
                )
            )
        try:
            array = numpy.array(costs, dtype=float)
        except (TypeError, ValueError):
            raise CostMatrixError("Costs must form a numeric table.") from None
        n = len(labels)
        if n < 2:
            raise CostMatrixError(
                "A cost matrix needs at least 2 nodes, got {}.".format(n)
            )
        if array.shape != (n, n):
            raise CostMatrixError(
                "Costs must be a {0}x{0} table for {0} labels, got shape {1}.".format(
                    n, array.shape
                )
            )
        self._validate(labels, array)
        array.setflags(write=False)
        self._labels = labels
        self._costs = array
        self._index = {label: i for i, label in enumerate(labels)}

    @staticmethod
    def _validate(labels, array):
        n = len(labels)
        for i in range(n):
            for j in range(n):
                value = array[i, j]
                if not numpy.isfinite(value) or value < 0:
                    raise CostMatrixError(
                        "Cost for row {} column {} must be finite and "
                        "nonnegative, got {}.".format(labels[i], labels[j], value)
                    )
            if array[i, i] != 0:
                raise CostMatrixError(
                    "Diagonal cost for row {0} column {0} must be 0, got "
                    "{1}.".format(labels[i], array[i, i])
                )
        for i in range(n):
            for j in range(i + 1, n):
                if array[i, j] != array[j, i]:
                    raise CostMatrixError(
                        "Cost matrix is not symmetric: row {0} column {1} = "
                        "{2} but row {1} column {0} = {3}.".format(
                            labels[i], labels[j], array[i, j], array[j, i]
                        )
                    )
        return

    def __repr__(self):
        return "<CostMatrix containing {} nodes: {}>".format(
            len(self), ", ".join(self._labels)
        )

    def __len__(self):
        return len(self._labels)

    def __eq__(self, other):
        if not isinstance(other, CostMatrix):
            return NotImplemented
        return self._labels == other._labels and numpy.array_equal(
            self._costs, other._costs
        )

    def __hash__(self):
        return hash((self._labels, self._costs.tobytes()))

    @property
    def labels(self):
        return self._labels

    @property
    def costs(self):
        return self._costs

    @property
    def n(self):
        return len(self._labels)

    def index(self, label):
        """Position of `label` in the matrix."""
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(
                "{} is not a node label of this cost matrix.".format(label)
            ) from None

    def cost(self, a, b):
        """Cost of the link between labels `a` and `b`."""
        return float(self._costs[self.index(a), self.index(b)])

    def to_csv(self):
        """Writes the matrix in the CSV format read by `load_cost_matrix`."""
        lines = [",".join(("label",) + self._labels)]
        for label, row in zip(self._labels, self._costs):
            lines.append(",".join([label] + ["{:g}".format(x) for x in row]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_networkx(cls, graph, weight="weight"):
        """Builds a cost matrix from a complete weighted networkx graph.

        Parameters
        ----------
        graph : networkx.Graph
            Every pair of distinct nodes must be joined by an edge that
            carries `weight`.
        weight : str, optional
            Edge attribute holding the link cost.
        """
        nodes = list(graph.nodes)
        costs = numpy.zeros((len(nodes), len(nodes)))
        for i, a in enumerate(nodes):
            for j, b in enumerate(nodes):
                if i == j:
                    continue
                if not graph.has_edge(a, b):
                    raise CostMatrixError(
                        "No link cost between {} and {}.".format(a, b)
                    )
                costs[i, j] = graph.edges[a, b][weight]
        return cls([str(x) for x in nodes], costs)


class AccumulatedCosts(Mapping):
    """Read-only mapping from node label to the sum of its cost row."""

    def __init__(self, totals):
        self._totals = OrderedDict(totals)

    def __getitem__(self, label):
        return self._totals[label]

    def __iter__(self):
        return iter(self._totals)

    def __len__(self):
        return len(self._totals)

    def __repr__(self):
        return "<AccumulatedCosts {}>".format(
            ", ".join("{}: {:g}".format(k, v) for k, v in self._totals.items())
        )


def accumulated_costs(m):
    """Computes the accumulated cost of every node.

    Parameters
    ----------
    m : CostMatrix
        A validated cost matrix.

    Returns
    -------
    accumulated : AccumulatedCosts
        Correctly rounded row sum of the matrix for each label, in matrix
        order. Rows holding the same costs in any order get equal totals.
    """
    if not isinstance(m, CostMatrix):
        raise TypeError("accumulated_costs requires a CostMatrix.")
    return AccumulatedCosts(
        (label, math.fsum(row)) for label, row in zip(m.labels, m.costs)
    )


class Numbering(object):
    """Bijection between node labels and ranks 1..n.

    Parameters
    ----------
    ordered_labels : [str]
        Labels in rank order, the first label receives rank 1.

    Attributes
    ----------
    rank : dict
        Label to rank.
    inverse : dict
        Rank to label.
    """

    def __init__(self, ordered_labels):
        ordered_labels = tuple(ordered_labels)
        if len(set(ordered_labels)) != len(ordered_labels):
            raise ValueError("A numbering cannot assign two ranks to one label.")
        self._order = ordered_labels
        self.rank = {label: i + 1 for i, label in enumerate(ordered_labels)}
        self.inverse = {i + 1: label for i, label in enumerate(ordered_labels)}

    def __repr__(self):
        return "<Numbering {}>".format(
            ", ".join("{}->{}".format(x, self.rank[x]) for x in self._order)
        )

    def __len__(self):
        return len(self._order)

    def __eq__(self, other):
        if not isinstance(other, Numbering):
            return NotImplemented
        return self._order == other._order

    def __hash__(self):
        return hash(self._order)

    @property
    def ordered_labels(self):
        return self._order

    def rank_of(self, label):
        return self.rank[label]

    def label_of(self, rank):
        return self.inverse[rank]

    def relabel_edges(self, edges):
        """Maps rank pairs to label pairs."""
        return [(self.inverse[u], self.inverse[v]) for u, v in edges]


def number_nodes(m):
    """Numbers the nodes by ascending accumulated cost.

    Notes
    -----
    Equal accumulated costs keep their order in `m.labels`, so the
    numbering is deterministic.

    Parameters
    ----------
    m : CostMatrix
        A validated cost matrix.

    Returns
    -------
    numbering : Numbering
        Rank 1 is the cheapest node.
    """
    totals = accumulated_costs(m)
    positions = sorted(
        range(len(m.labels)), key=lambda i: (totals[m.labels[i]], i)
    )
    return Numbering([m.labels[i] for i in positions])
