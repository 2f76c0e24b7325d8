"""Undirected simple graphs on ranked nodes and their text formats."""

from collections import deque
import pathlib

import networkx


METHOD_TAGS = ("bipartite", "sequential", "harary", "hypercube", "external")


class EdgeListError(ValueError):
    """Raised when an edge-list file cannot be parsed."""

    pass


def _canonical_edge(u, v):
    return (u, v) if u < v else (v, u)


class Topology(object):
    """An undirected simple graph produced by one construction method.

    Notes
    -----
    Edges are stored once in canonical ``(u, v)`` form with ``u < v``.
    The nodes and edges of a `Topology` are not modified after
    construction, operations such as `remove_nodes` return a new object.
    `tags` is the one mutable attribute: it is filled at construction and
    left to callers for their own annotations. It does not take part in
    equality or hashing.

    Parameters
    ----------
    n : int
        Number of nodes. Unless `nodes` is given the nodes are 1..n.
    edges : iterable of (int, int)
        Unordered node pairs.
    method : str, optional
        Tag of the construction that produced the graph.
    k : int, optional
        Connectivity the construction was asked for, 0 when unknown.
    nodes : iterable of int, optional
        Explicit node identities, used by induced subgraphs which keep
        the identities of the original graph.
    tags : dict, optional
        Initial metadata, copied into `tags`.

    Attributes
    ----------
    method : str
        Construction tag, one of `METHOD_TAGS`.
    k : int
        Requested connectivity.
    tags : dict
        Free-form metadata, for example connectivity shortfall warnings.

    Raises
    ------
    ValueError
        Raised for self-loops, duplicate edges, endpoints that are not
        nodes or an unknown method tag.
    """

    def __init__(self, n, edges, method="external", k=0, nodes=None, tags=None):
        if method not in METHOD_TAGS:
            raise ValueError(
                "Unknown method tag {}, expected one of {}.".format(
                    method, ", ".join(METHOD_TAGS)
                )
            )
        if nodes is None:
            if n < 0:
                raise ValueError("Node count must be >= 0, got {}.".format(n))
            node_set = frozenset(range(1, n + 1))
        else:
            node_set = frozenset(nodes)
            if len(node_set) != n:
                raise ValueError(
                    "Node count {} does not match {} explicit nodes.".format(
                        n, len(node_set)
                    )
                )
        edge_set = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError("Self-loop on node {} is not allowed.".format(u))
            for x in (u, v):
                if x not in node_set:
                    raise ValueError(
                        "Edge endpoint {} is not a node of the topology.".format(x)
                    )
            edge = _canonical_edge(u, v)
            if edge in edge_set:
                raise ValueError("Duplicate edge {} {}.".format(*edge))
            edge_set.add(edge)
        self._nodes = node_set
        self._edges = frozenset(edge_set)
        self.method = method
        self.k = k
        self.tags = dict(tags) if tags else {}
        self._adjacency = None

    def __repr__(self):
        return "<Topology ({}) containing {} nodes and {} edges>".format(
            self.method, self.n, len(self._edges)
        )

    def __len__(self):
        return len(self._nodes)

    def __eq__(self, other):
        if not isinstance(other, Topology):
            return NotImplemented
        return (self._nodes, self._edges) == (other._nodes, other._edges)

    def __hash__(self):
        return hash((self._nodes, self._edges))

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_adjacency"] = None
        return state

    @property
    def n(self):
        return len(self._nodes)

    @property
    def nodes(self):
        """Sorted node identities."""
        return sorted(self._nodes)

    @property
    def edges(self):
        """Canonical edges sorted lexicographically."""
        return sorted(self._edges)

    @property
    def edge_set(self):
        return self._edges

    @property
    def adjacency(self):
        """Dictionary of node to sorted neighbour list."""
        if self._adjacency is None:
            adjacency = {v: [] for v in sorted(self._nodes)}
            for u, v in sorted(self._edges):
                adjacency[u].append(v)
                adjacency[v].append(u)
            for v in adjacency:
                adjacency[v].sort()
            self._adjacency = adjacency
        return self._adjacency

    def has_edge(self, u, v):
        return _canonical_edge(u, v) in self._edges

    def is_complete(self):
        return len(self._edges) == self.n * (self.n - 1) // 2

    @property
    def edge_list(self):
        """Canonical edge-list text.

        Notes
        -----
        The first line is ``n k method`` followed by one ``u v`` line per
        edge in lexicographic order. Only graphs on nodes 1..n can be
        written in this format.
        """
        if self._nodes != frozenset(range(1, self.n + 1)):
            raise ValueError("Edge lists can only be written for nodes 1..n.")
        lines = ["{} {} {}".format(self.n, self.k, self.method)]
        lines.extend("{} {}".format(u, v) for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def to_dot(self, numbering=None):
        """Writes the topology as an undirected DOT graph.

        Parameters
        ----------
        numbering : survnet.costmodel.Numbering, optional
            If supplied, node labels are the original node symbols.

        Returns
        -------
        dot_str : str
            DOT source text.
        """
        lines = ['graph "{}" {{'.format(self.method)]
        for v in self.nodes:
            label = numbering.label_of(v) if numbering is not None else str(v)
            lines.append('  {} [label="{}"];'.format(v, label))
        lines.extend("  {} -- {};".format(u, v) for u, v in self.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_networkx(self):
        """Returns the topology as a `networkx.Graph`."""
        graph = networkx.Graph(method=self.method, k=self.k)
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(self.edges)
        return graph

    @classmethod
    def from_networkx(cls, graph, method="external", k=0):
        """Builds a topology from a networkx graph.

        Notes
        -----
        Nodes are relabelled 1..n in sorted order of the original node
        identifiers.
        """
        order = sorted(graph.nodes)
        relabel = {x: i + 1 for i, x in enumerate(order)}
        edges = [(relabel[a], relabel[b]) for a, b in graph.edges if a != b]
        return cls(len(order), edges, method=method, k=k)


class Partition(object):
    """The split of ranks 1..n into V1 = {1..k} and V2 = {k+1..n}."""

    def __init__(self, n, k):
        if not 1 <= k < n:
            raise ValueError(
                "Partition needs 1 <= k < n, got n={} k={}.".format(n, k)
            )
        self.v1 = frozenset(range(1, k + 1))
        self.v2 = frozenset(range(k + 1, n + 1))

    def __repr__(self):
        return "<Partition |V1|={} |V2|={}>".format(len(self.v1), len(self.v2))


def partition(n, k):
    """Partitions the ranked node set for the bipartite construction."""
    return Partition(n, k)


def degree(t, v):
    """Number of edges incident on node `v`.

    Raises
    ------
    ValueError
        Raised if `v` is not a node of `t`.
    """
    if v not in t.adjacency:
        raise ValueError("Node {} is not in the topology.".format(v))
    return len(t.adjacency[v])


def min_degree(t):
    if t.n == 0:
        raise ValueError("Minimum degree of an empty topology is undefined.")
    return min(len(x) for x in t.adjacency.values())


def is_connected(t):
    """True if every node is reachable from the smallest node.

    Raises
    ------
    ValueError
        Raised if the topology has no nodes.
    """
    if t.n == 0:
        raise ValueError("Connectivity of an empty topology is undefined.")
    return len(reachable_from(t, t.nodes[0])) == t.n


def reachable_from(t, start):
    """Set of nodes reached by a breadth-first traversal from `start`."""
    adjacency = t.adjacency
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def remove_nodes(t, s):
    """Induced subgraph on the nodes of `t` outside `s`.

    Notes
    -----
    Surviving nodes keep their identities. Removing every node gives an
    empty topology, connectivity checks on it raise `ValueError`.
    """
    removed = frozenset(s)
    unknown = removed - set(t.nodes)
    if unknown:
        raise ValueError(
            "Cannot remove nodes that are not in the topology: {}.".format(
                " ".join(str(x) for x in sorted(unknown))
            )
        )
    if not removed:
        return t
    kept = [v for v in t.nodes if v not in removed]
    edges = [(u, v) for u, v in t.edges if u not in removed and v not in removed]
    return Topology(len(kept), edges, method=t.method, k=t.k, nodes=kept)


def remove_edges(t, edges):
    """Topology with the given edges deleted and every node kept."""
    removed = set(_canonical_edge(u, v) for u, v in edges)
    unknown = removed - t.edge_set
    if unknown:
        raise ValueError(
            "Cannot remove edges that are not in the topology: {}.".format(
                ", ".join("{} {}".format(*e) for e in sorted(unknown))
            )
        )
    kept = [e for e in t.edges if e not in removed]
    return Topology(t.n, kept, method=t.method, k=t.k, nodes=t.nodes)


def load_edge_list(source, path=True):
    """Converts edge-list text into a `Topology`.

    Parameters
    ----------
    source : str or pathlib.Path
        Either a path to an edge-list file or a string of edge-list text.
    path : bool, optional
        If `true`, flags `source` as a path and not edge-list text.

    Returns
    -------
    topology : Topology

    Raises
    ------
    EdgeListError
        Raised if the header or an edge line is malformed or describes
        an invalid graph.
    """
    if path:
        with open(str(pathlib.PurePath(source)), "r") as inf:
            text = inf.read()
    else:
        text = source
    lines = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise EdgeListError("Empty edge list, expected an 'n k method' header.")
    number, header = lines[0]
    if len(header) != 3:
        raise EdgeListError(
            "Line {}: expected header 'n k method', got '{}'.".format(
                number, " ".join(header)
            )
        )
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListError(
            "Line {}: n and k must be integers.".format(number)
        ) from None
    edges = []
    for number, fields in lines[1:]:
        if len(fields) != 2:
            raise EdgeListError(
                "Line {}: expected 'u v', got '{}'.".format(number, " ".join(fields))
            )
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise EdgeListError(
                "Line {}: node identifiers must be integers.".format(number)
            ) from None
    try:
        return Topology(n, edges, method=header[2], k=k)
    except ValueError as error:
        raise EdgeListError(str(error)) from None
