"""Exact vertex connectivity with Menger certificates.

Local connectivity between two nodes is the maximum flow in the
node-split network: every node other than the two terminals becomes an
``in -> out`` arc of capacity 1 and every edge becomes a pair of arcs
between ``out`` and ``in`` copies. The flow decomposes into internally
vertex-disjoint paths and the residual graph yields a minimum vertex cut.
"""

from collections import deque
import itertools
import typing as t

from .topology import Topology, is_connected, reachable_from, remove_nodes

BRUTE_FORCE_LIMIT = 12

_IN, _OUT = 0, 1


class LocalConnectivity(t.NamedTuple):
    """Maximum number of disjoint paths between `source` and `sink`."""

    source: int
    sink: int
    value: int
    paths: t.Tuple[t.Tuple[int, ...], ...]
    cut: t.FrozenSet[int]


class ConnectivityReport(t.NamedTuple):
    """Vertex connectivity of a topology with its certificates.

    Attributes
    ----------
    kappa : int
        Vertex connectivity.
    witness_cut : frozenset or None
        Nodes whose removal disconnects the graph, `None` for complete
        graphs and empty for disconnected graphs.
    pair : (int, int)
        The certifying node pair. For a disconnected graph these are
        representatives of two different components.
    sample_paths : tuple of tuples
        `kappa` internally vertex-disjoint paths between `pair`.
    """

    kappa: int
    witness_cut: t.Optional[t.FrozenSet[int]]
    pair: t.Tuple[int, int]
    sample_paths: t.Tuple[t.Tuple[int, ...], ...]


class KConnectivityVerdict(t.NamedTuple):
    verified: bool
    k: int
    report: ConnectivityReport

    @property
    def certificate(self):
        """Disjoint paths when verified, otherwise the witness cut."""
        if self.verified:
            return self.report.sample_paths
        return self.report.witness_cut


class _SplitNetwork(object):
    """Residual network of the node-split flow problem for one node pair."""

    def __init__(self, topology, source, sink):
        self.source = (source, _OUT)
        self.sink = (sink, _IN)
        self.terminals = (source, sink)
        unbounded = max(topology.n, 1)
        self.residual = {}
        self.original = {}
        for v in topology.nodes:
            if v not in self.terminals:
                self._add_arc((v, _IN), (v, _OUT), 1)
        for a, b in topology.edges:
            for x, y in ((a, b), (b, a)):
                direct = (x, y) == (source, sink)
                self._add_arc((x, _OUT), (y, _IN), 1 if direct else unbounded)

    def _add_arc(self, x, y, capacity):
        self.residual.setdefault(x, {})
        self.residual.setdefault(y, {})
        self.residual[x][y] = self.residual[x].get(y, 0) + capacity
        self.residual[y].setdefault(x, 0)
        self.original[(x, y)] = capacity

    def _augmenting_path(self):
        parent = {self.source: None}
        queue = deque([self.source])
        while queue:
            x = queue.popleft()
            for y in sorted(self.residual[x]):
                if y not in parent and self.residual[x][y] > 0:
                    parent[y] = x
                    if y == self.sink:
                        return parent
                    queue.append(y)
        return None

    def max_flow(self):
        """Saturates the network one unit augmenting path at a time."""
        value = 0
        if self.source not in self.residual or self.sink not in self.residual:
            return value
        while True:
            parent = self._augmenting_path()
            if parent is None:
                return value
            y = self.sink
            while parent[y] is not None:
                x = parent[y]
                self.residual[x][y] -= 1
                self.residual[y][x] += 1
                y = x
            value += 1

    def _flow_arcs(self):
        flow = {}
        for (x, y), capacity in self.original.items():
            carried = capacity - self.residual[x][y]
            if carried > 0:
                flow.setdefault(x, {})[y] = carried
        return flow

    def decompose(self, value):
        """Splits the flow into `value` source to sink node sequences."""
        flow = self._flow_arcs()
        source, sink = self.terminals
        paths = []
        for _ in range(value):
            path = [source]
            x = self.source
            while x != self.sink:
                y = min(flow[x])
                flow[x][y] -= 1
                if flow[x][y] == 0:
                    del flow[x][y]
                node = y[0]
                if node == sink:
                    path.append(sink)
                    break
                path.append(node)
                out = (node, _OUT)
                flow[y][out] -= 1
                if flow[y][out] == 0:
                    del flow[y][out]
                x = out
            paths.append(tuple(path))
        return tuple(sorted(paths, key=lambda p: (len(p), p)))

    def minimum_cut(self):
        """Split nodes whose ``in`` copy is reachable in the residual graph
        but whose ``out`` copy is not."""
        reached = {self.source}
        queue = deque([self.source])
        while queue:
            x = queue.popleft()
            for y, capacity in self.residual.get(x, {}).items():
                if capacity > 0 and y not in reached:
                    reached.add(y)
                    queue.append(y)
        return frozenset(
            node
            for node, side in reached
            if side == _IN and (node, _OUT) not in reached and node not in self.terminals
        )


def _check_node(topology, v):
    if v not in topology.adjacency:
        raise ValueError("Node {} is not in the topology.".format(v))


def local_connectivity(topology, s, u):
    """Maximum number of internally vertex-disjoint paths between two nodes.

    Parameters
    ----------
    topology : Topology
    s : int
        First node.
    u : int
        Second node, distinct from `s`.

    Returns
    -------
    local : LocalConnectivity
        The flow value, the decomposed path family and, for
        non-adjacent pairs, a minimum s-u vertex cut.

    Raises
    ------
    ValueError
        Raised if `s` equals `u` or either node is not in the topology.
    """
    if not isinstance(topology, Topology):
        raise TypeError("local_connectivity requires a Topology.")
    _check_node(topology, s)
    _check_node(topology, u)
    if s == u:
        raise ValueError(
            "Local connectivity needs two distinct nodes, got {} twice.".format(s)
        )
    network = _SplitNetwork(topology, s, u)
    value = network.max_flow()
    paths = network.decompose(value)
    _check_paths(topology, s, u, paths)
    cut = frozenset() if topology.has_edge(s, u) else network.minimum_cut()
    return LocalConnectivity(s, u, value, paths, cut)


def _check_paths(topology, s, u, paths):
    internal = set()
    for path in paths:
        if path[0] != s or path[-1] != u or len(set(path)) != len(path):
            raise RuntimeError("Path {} is not a simple {}-{} path.".format(path, s, u))
        for a, b in zip(path, path[1:]):
            if not topology.has_edge(a, b):
                raise RuntimeError(
                    "Path {} uses a missing edge {} {}.".format(path, a, b)
                )
        middle = set(path[1:-1])
        if internal & middle:
            raise RuntimeError(
                "Paths between {} and {} share internal nodes.".format(s, u)
            )
        internal |= middle
    return


def vertex_connectivity(topology):
    """Computes the vertex connectivity of a topology.

    Notes
    -----
    Complete graphs have connectivity n - 1 by convention. Otherwise the
    minimum of the local connectivity over all non-adjacent pairs is
    taken, ties going to the lexicographically smallest pair. The
    witness cut is re-checked by traversal.

    Parameters
    ----------
    topology : Topology
        Graph with at least 2 nodes.

    Returns
    -------
    report : ConnectivityReport

    Raises
    ------
    ValueError
        Raised if the topology has fewer than 2 nodes.
    """
    if not isinstance(topology, Topology):
        raise TypeError("vertex_connectivity requires a Topology.")
    if topology.n < 2:
        raise ValueError(
            "Vertex connectivity needs at least 2 nodes, got {}.".format(topology.n)
        )
    nodes = topology.nodes
    reached = reachable_from(topology, nodes[0])
    if len(reached) != topology.n:
        other = min(v for v in nodes if v not in reached)
        return ConnectivityReport(0, frozenset(), (nodes[0], other), ())
    if topology.is_complete():
        local = local_connectivity(topology, nodes[0], nodes[1])
        return ConnectivityReport(
            topology.n - 1, None, (nodes[0], nodes[1]), local.paths
        )
    best = None
    for s, u in itertools.combinations(nodes, 2):
        if topology.has_edge(s, u):
            continue
        local = local_connectivity(topology, s, u)
        if best is None or local.value < best.value:
            best = local
    cut = best.cut
    if len(cut) != best.value or is_connected(remove_nodes(topology, cut)):
        raise RuntimeError(
            "Witness cut {} does not disconnect the topology.".format(sorted(cut))
        )
    return ConnectivityReport(best.value, cut, (best.source, best.sink), best.paths)


def is_k_connected(topology, k):
    """Decides whether a topology is k-connected.

    Parameters
    ----------
    topology : Topology
    k : int
        Required connectivity, 1 <= k <= n - 1.

    Returns
    -------
    verdict : KConnectivityVerdict
        `verified` is True when the connectivity is at least `k`. The
        `certificate` is then a family of disjoint paths, otherwise a
        witness cut with fewer than `k` nodes.
    """
    if not 1 <= k <= topology.n - 1:
        raise ValueError(
            "k must satisfy 1 <= k <= n - 1 = {}, got {}.".format(topology.n - 1, k)
        )
    report = vertex_connectivity(topology)
    return KConnectivityVerdict(report.kappa >= k, k, report)


def brute_force_connectivity(topology):
    """Vertex connectivity by enumerating node subsets.

    Finds the smallest node set whose removal disconnects the rest,
    returning n - 1 when no set of at most n - 2 nodes does.

    Raises
    ------
    ValueError
        Raised for graphs with fewer than 2 or more than
        `BRUTE_FORCE_LIMIT` nodes.
    """
    if topology.n > BRUTE_FORCE_LIMIT:
        raise ValueError(
            "Brute force connectivity is limited to {} nodes, got {}.".format(
                BRUTE_FORCE_LIMIT, topology.n
            )
        )
    if topology.n < 2:
        raise ValueError(
            "Vertex connectivity needs at least 2 nodes, got {}.".format(topology.n)
        )
    nodes = topology.nodes
    for size in range(topology.n - 1):
        for subset in itertools.combinations(nodes, size):
            if not is_connected(remove_nodes(topology, subset)):
                return size
    return topology.n - 1


def format_certificate(report, numbering=None):
    """Structured text for a connectivity report.

    Parameters
    ----------
    report : ConnectivityReport
    numbering : survnet.costmodel.Numbering, optional
        If supplied, nodes are printed with their original labels.
    """

    def name(v):
        return numbering.label_of(v) if numbering is not None else str(v)

    lines = ["kappa: {}".format(report.kappa)]
    lines.append("pair: {} {}".format(*[name(v) for v in report.pair]))
    if report.witness_cut is None:
        lines.append("witness_cut: none (complete graph)")
    else:
        cut = " ".join(name(v) for v in sorted(report.witness_cut))
        lines.append("witness_cut: {}".format(cut).rstrip())
    for path in report.sample_paths:
        lines.append("path: {}".format(" ".join(name(v) for v in path)))
    return "\n".join(lines) + "\n"
