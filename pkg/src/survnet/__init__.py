from .costmodel import (CostMatrix, Numbering, accumulated_costs,
                        load_cost_matrix, number_nodes)
from .topology import Topology, load_edge_list
from .generators import (GeneratorParams, design_topology, generate_bipartite,
                         generate_harary, generate_hypercube,
                         generate_sequential)
from .connectivity import (brute_force_connectivity, is_k_connected,
                           local_connectivity, vertex_connectivity)
from .analysis import compare, link_count_formula, total_cost
from .survivsim import TrialConfig, exhaustive_survivability, simulate


__version__ = "0.1.0"
