"""Constructions of k-connected topologies on ranked nodes.

The bipartite construction joins the k cheapest ranks to every other
rank. The comparators are the standard families with the link counts
quoted for earlier methods: a sequential construction where each of the
first k ranks links to all higher ranks, the Harary circulant for
equispaced nodes on a circle, and the Gray code hypercube.
"""

import networkx

from .costmodel import number_nodes
from .survnet_warnings import warn_shortfall
from .topology import Topology


class GeneratorParams(object):
    """Node count and requested connectivity for a construction.

    Parameters
    ----------
    n : int
        Number of nodes, at least 2.
    k : int
        Requested connectivity, 1 <= k <= n - 1.

    Raises
    ------
    ValueError
        Raised if the parameters are out of range.
    """

    def __init__(self, n, k):
        for value in (n, k):
            if isinstance(value, bool) or int(value) != value:
                raise ValueError("n and k must be integers, got {}.".format(value))
        n, k = int(n), int(k)
        if n < 2:
            raise ValueError("The number of nodes must be >= 2, got {}.".format(n))
        if not 1 <= k <= n - 1:
            raise ValueError(
                "The connectivity must satisfy 1 <= k <= n - 1, got n={} k={}.".format(
                    n, k
                )
            )
        self.n = n
        self.k = k

    def __repr__(self):
        return "<GeneratorParams n={} k={}>".format(self.n, self.k)


def generate_bipartite(p):
    """Builds the complete bipartite graph K(k, n - k) on ranks 1..n.

    Notes
    -----
    When k > n/2 the graph is only (n - k)-connected. Generation still
    succeeds, but a `ConnectivityShortfallWarning` is emitted and the
    shortfall is recorded in ``topology.tags["connectivity_shortfall"]``.

    Parameters
    ----------
    p : GeneratorParams

    Returns
    -------
    topology : Topology
        Edges {i, j} for 1 <= i <= k < j <= n.
    """
    n, k = p.n, p.k
    edges = [(i, j) for i in range(1, k + 1) for j in range(k + 1, n + 1)]
    tags = {}
    if k > n // 2:
        tags["connectivity_shortfall"] = {"requested": k, "expected": n - k}
        warn_shortfall(k, n - k, "bipartite")
    return Topology(n, edges, method="bipartite", k=k, tags=tags)


def generate_sequential(p):
    """Links each of the first k ranks to every higher rank.

    Uses (n-1) + (n-2) + ... + (n-k) links.
    """
    n, k = p.n, p.k
    edges = [(i, j) for i in range(1, k + 1) for j in range(i + 1, n + 1)]
    return Topology(n, edges, method="sequential", k=k)


def generate_harary(p):
    """Builds the Harary graph H(k, n) on ranks 1..n.

    Notes
    -----
    For even k every node links to its k/2 nearest neighbours on each
    side of the circle. Odd k adds diameters for even n, and for odd n
    the (n + 1)/2 near-diameters of the standard completion, giving
    ceil(kn/2) links. For k = 1 the path 1..n is returned, since
    ceil(n/2) links cannot connect more than three nodes.

    Parameters
    ----------
    p : GeneratorParams

    Returns
    -------
    topology : Topology
    """
    graph = networkx.hkn_harary_graph(p.k, p.n)
    edges = [(a + 1, b + 1) for a, b in graph.edges]
    return Topology(p.n, edges, method="harary", k=p.k)


def generate_hypercube(k):
    """Builds the hypercube Q(k) on ranks 1..2^k.

    Ranks i and j are adjacent when the k-bit codes of i - 1 and j - 1
    differ in exactly one bit.

    Raises
    ------
    ValueError
        Raised if k < 1.
    """
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise ValueError(
            "Hypercube dimension must be an integer >= 1, got {}.".format(k)
        )
    k = int(k)
    n = 2 ** k
    edges = [
        (code + 1, (code ^ (1 << bit)) + 1)
        for code in range(n)
        for bit in range(k)
        if code < code ^ (1 << bit)
    ]
    return Topology(n, edges, method="hypercube", k=k)


GENERATORS = {
    "bipartite": generate_bipartite,
    "sequential": generate_sequential,
    "harary": generate_harary,
}


def generate(method, n=None, k=None):
    """Dispatches to the generator for `method`.

    The hypercube only needs `k`, `n` is checked against 2^k when given.
    """
    if method == "hypercube":
        if k is None:
            raise ValueError("The hypercube construction needs k.")
        if n is not None and n != 2 ** k:
            raise ValueError(
                "The hypercube construction needs n = 2^k, got n={} k={}.".format(n, k)
            )
        return generate_hypercube(k)
    if method not in GENERATORS:
        raise ValueError(
            "Unknown construction method {}, expected one of {}.".format(
                method, ", ".join(list(GENERATORS) + ["hypercube"])
            )
        )
    if n is None or k is None:
        raise ValueError("The {} construction needs both n and k.".format(method))
    return GENERATORS[method](GeneratorParams(n, k))


def design_topology(m, k, method="bipartite"):
    """Numbers the nodes of a cost matrix and builds a topology on the ranks.

    Parameters
    ----------
    m : survnet.costmodel.CostMatrix
        Link costs between labelled nodes.
    k : int
        Requested connectivity.
    method : str, optional
        Construction tag, the bipartite construction by default.

    Returns
    -------
    topology : Topology
        Graph on ranks 1..n.
    numbering : survnet.costmodel.Numbering
        Maps ranks back to the labels of `m`.
    """
    numbering = number_nodes(m)
    topology = generate(method, n=m.n, k=k)
    return topology, numbering
