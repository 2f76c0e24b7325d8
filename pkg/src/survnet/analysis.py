"""Cost accounting and link-count comparison of the constructions."""

import itertools
import typing as t
import warnings

from .costmodel import CostMatrix, number_nodes
from .connectivity import vertex_connectivity
from .generators import GeneratorParams, generate
from .survnet_warnings import FractionalLinkCountWarning

METHOD_ORDER = ("bipartite", "sequential", "harary", "hypercube")

CSV_HEADER = "method,links,formula,kappa,total_cost,flags"


class ComparisonRow(t.NamedTuple):
    """One construction evaluated for a given (n, k).

    Attributes
    ----------
    method : str
        Construction tag.
    link_count : int
        Number of edges actually constructed.
    formula_value : int
        Closed-form link count.
    achieved_kappa : int
        Vertex connectivity of the constructed topology.
    total_cost : float or None
        Sum of link costs, `None` when no cost matrix was supplied.
    flags : tuple of str
        Evaluated comparisons and warnings for this row.
    """

    method: str
    link_count: int
    formula_value: int
    achieved_kappa: int
    total_cost: t.Optional[float]
    flags: t.Tuple[str, ...]


class InequalityAudit(t.NamedTuple):
    """Outcome of checking the link-count inequalities over a grid.

    Attributes
    ----------
    max_n : int
        Largest node count checked.
    cases : int
        Number of (n, k) pairs checked.
    sequential_strict_above_k1 : bool
        k(n-k) < kn - k(k+1)/2 for every k > 1.
    sequential_equal_at_k1 : bool
        The two counts are equal for every k = 1.
    sign_flips_at_half : bool
        k(n-k) < kn/2 exactly when k > n/2, and > exactly when k < n/2.
    """

    max_n: int
    cases: int
    sequential_strict_above_k1: bool
    sequential_equal_at_k1: bool
    sign_flips_at_half: bool

    @property
    def findings(self):
        lines = []
        if self.sequential_equal_at_k1 and self.sequential_strict_above_k1:
            lines.append(
                "bipartite links < sequential links for every k > 1, equal at k = 1"
            )
        else:
            lines.append("bipartite vs sequential inequality violated on the grid")
        if self.sign_flips_at_half:
            lines.append(
                "k(n-k) < kn/2 exactly when k > n/2, "
                "k(n-k) > kn/2 exactly when k < n/2"
            )
        else:
            lines.append("k(n-k) vs kn/2 sign does not flip at k = n/2 on the grid")
        return tuple(lines)


def total_cost(topology, m, numbering):
    """Sums the matrix cost of every edge of a ranked topology.

    Parameters
    ----------
    topology : survnet.topology.Topology
        Graph on ranks 1..n.
    m : survnet.costmodel.CostMatrix
        Link costs by label.
    numbering : survnet.costmodel.Numbering
        Maps ranks to labels of `m`.

    Returns
    -------
    cost : float

    Raises
    ------
    ValueError
        Raised if the topology, matrix and numbering sizes differ or the
        numbering does not cover the matrix labels.
    """
    if not isinstance(m, CostMatrix):
        raise TypeError("total_cost requires a CostMatrix.")
    if not topology.n == m.n == len(numbering):
        raise ValueError(
            "Dimension mismatch: topology has {} nodes, matrix {} and numbering {}.".format(
                topology.n, m.n, len(numbering)
            )
        )
    if set(numbering.ordered_labels) != set(m.labels):
        raise ValueError("The numbering does not match the cost matrix labels.")
    index = [None] + [m.index(numbering.label_of(r)) for r in range(1, m.n + 1)]
    return float(sum(m.costs[index[u], index[v]] for u, v in topology.edges))


def link_count_formula(method, n, k):
    """Closed-form link count of a construction.

    Notes
    -----
    The Harary count is ceil(kn/2); a `FractionalLinkCountWarning` is
    emitted when kn is odd. For k = 1 it is n - 1, the fewest links that
    connect n nodes.

    Parameters
    ----------
    method : str
        One of ``bipartite``, ``sequential``, ``harary`` (alias
        ``steiglitz``) or ``hypercube``.
    n : int
        Node count. The hypercube needs n = 2^k.
    k : int
        Requested connectivity.

    Returns
    -------
    links : int
    """
    if method == "hypercube":
        if k < 1 or n != 2 ** k:
            raise ValueError(
                "The hypercube formula needs k >= 1 and n = 2^k, got n={} k={}.".format(
                    n, k
                )
            )
        return k * 2 ** (k - 1)
    GeneratorParams(n, k)
    if method == "bipartite":
        return k * (n - k)
    if method == "sequential":
        return k * n - k * (k + 1) // 2
    if method in ("harary", "steiglitz"):
        if k == 1:
            return n - 1
        if (k * n) % 2:
            warnings.warn(
                "kn/2 = {}/2 is fractional, rounded up to {}.".format(
                    k * n, (k * n + 1) // 2
                ),
                FractionalLinkCountWarning,
            )
        return (k * n + 1) // 2
    raise ValueError("Unknown construction method {}.".format(method))


def _bipartite_flags(n, k, links):
    flags = []
    sequential = k * n - k * (k + 1) // 2
    if links < sequential:
        flags.append("links<sequential")
    elif links == sequential:
        flags.append("links=sequential")
    # Sign against the unrounded kn/2, compared as 2k(n-k) vs kn.
    if 2 * links < k * n:
        flags.append("links<kn/2")
    elif 2 * links > k * n:
        flags.append("links>kn/2")
    else:
        flags.append("links=kn/2")
    return flags


def compare(n, k, m=None):
    """Builds every applicable construction and compares them.

    Parameters
    ----------
    n : int
        Node count.
    k : int
        Requested connectivity.
    m : survnet.costmodel.CostMatrix, optional
        If supplied, each row carries the total link cost under the
        accumulated-cost numbering of `m`.

    Returns
    -------
    rows : [ComparisonRow]
        In the order bipartite, sequential, harary, hypercube. The
        hypercube row is only present when n = 2^k.
    """
    GeneratorParams(n, k)
    numbering = None
    if m is not None:
        if m.n != n:
            raise ValueError(
                "The cost matrix has {} nodes, expected {}.".format(m.n, n)
            )
        numbering = number_nodes(m)
    rows = []
    for method in METHOD_ORDER:
        if method == "hypercube" and n != 2 ** k:
            continue
        topology = generate(method, n=n, k=k)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", FractionalLinkCountWarning)
            formula = link_count_formula(method, n, k)
        links = len(topology.edge_set)
        kappa = vertex_connectivity(topology).kappa
        flags = []
        if method == "bipartite":
            flags.extend(_bipartite_flags(n, k, links))
        if method == "harary" and k > 1 and (k * n) % 2:
            flags.append("kn/2 rounded up")
        if "connectivity_shortfall" in topology.tags:
            flags.append("k>n/2")
        if kappa < k:
            flags.append("kappa<k")
        cost = None
        if numbering is not None:
            cost = total_cost(topology, m, numbering)
        rows.append(ComparisonRow(method, links, formula, kappa, cost, tuple(flags)))
    return rows


def audit_inequalities(max_n=32):
    """Checks the link-count inequalities for 2 <= n <= max_n, 1 <= k < n."""
    cases = 0
    strict = True
    equal_at_one = True
    sign_flips = True
    for n in range(2, max_n + 1):
        for k in range(1, n):
            cases += 1
            bipartite = k * (n - k)
            sequential = k * n - k * (k + 1) // 2
            if sequential - bipartite != k * (k - 1) // 2:
                strict = False
            if k == 1 and bipartite != sequential:
                equal_at_one = False
            if k > 1 and not bipartite < sequential:
                strict = False
            difference = 2 * bipartite - k * n
            if (difference < 0) != (2 * k > n) or (difference > 0) != (2 * k < n):
                sign_flips = False
    return InequalityAudit(max_n, cases, strict, equal_at_one, sign_flips)


def _cost_text(cost):
    return "" if cost is None else "{:g}".format(cost)


def comparison_csv(rows):
    """Comparison rows as CSV text with a fixed header."""
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                [
                    row.method,
                    str(row.link_count),
                    str(row.formula_value),
                    str(row.achieved_kappa),
                    _cost_text(row.total_cost),
                    ";".join(row.flags),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def format_comparison_table(rows):
    """Comparison rows as an aligned plain-text table."""
    header = ("method", "links", "formula", "kappa", "total_cost", "flags")
    body = [
        (
            row.method,
            str(row.link_count),
            str(row.formula_value),
            str(row.achieved_kappa),
            _cost_text(row.total_cost) or "-",
            "; ".join(row.flags) or "-",
        )
        for row in rows
    ]
    widths = [
        max(len(line[i]) for line in itertools.chain([header], body))
        for i in range(len(header))
    ]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in itertools.chain([header], body)
    ]
    return "\n".join(lines) + "\n"

