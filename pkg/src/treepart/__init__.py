"""Tree partitioning of transmission networks.

Pick lines to switch off so that a chosen clustering of the grid becomes a
tree partition, refining the bridge-block decomposition while keeping the
maximum line congestion as low as possible. Works with DC and AC power flow
engines; the global selection stage is solved exactly as a MILP under DC.
"""

from ._accel import backend
from .acflow import AcSolution, ConvergenceError, congestion_ac, solve_ac
from .caseio import (
    ParseError,
    RawCase,
    Snapshot,
    load_case,
    load_snapshot,
    parse_matpower,
    save_snapshot,
    snapshot_from_case,
    to_network,
    write_report,
)
from .clustering import (
    WeightedGraph,
    ensure_connected_clusters,
    fastgreedy_partition,
    flow_weighted_graph,
    modularity,
    spectral_partition,
)
from .dcflow import (
    CongestionReport,
    CongestionUndefinedError,
    DcSolution,
    UnbalancedInjectionsError,
    congestion,
    gamma_of_switch,
    solve_dc,
)
from .grid import (
    BridgeBlockDecomposition,
    DisconnectedError,
    Network,
    Partition,
    ReducedGraph,
    SwitchSet,
    TreepartError,
    apply_switch,
    bridge_block_decomposition,
    cross_edges,
    enumerate_spanning_trees,
    find_bridges,
    is_tree_partition,
    kirchhoff_tree_count,
    make_network,
)
from .pipeline import TreePartitionReport, evaluate_only, recursive, two_stage
from .switching import (
    MilpModel,
    SwitchingInstance,
    SwitchingSolution,
    build_milp,
    dump_lp,
    make_instance,
    solve_bruteforce,
    solve_milp,
)

__version__ = "0.1.0"

__all__ = [
    "AcSolution", "BridgeBlockDecomposition", "CongestionReport",
    "CongestionUndefinedError", "ConvergenceError", "DcSolution",
    "DisconnectedError", "MilpModel", "Network", "ParseError", "Partition",
    "RawCase", "ReducedGraph", "Snapshot", "SwitchSet", "SwitchingInstance",
    "SwitchingSolution", "TreePartitionReport", "TreepartError",
    "UnbalancedInjectionsError", "apply_switch", "backend",
    "bridge_block_decomposition", "build_milp", "congestion", "congestion_ac",
    "cross_edges", "dump_lp", "ensure_connected_clusters",
    "enumerate_spanning_trees", "evaluate_only", "fastgreedy_partition",
    "find_bridges", "flow_weighted_graph", "gamma_of_switch",
    "is_tree_partition", "kirchhoff_tree_count", "load_case", "load_snapshot",
    "make_instance", "make_network", "modularity", "parse_matpower",
    "recursive", "save_snapshot", "snapshot_from_case", "solve_ac",
    "solve_bruteforce", "solve_dc", "solve_milp", "spectral_partition",
    "to_network", "two_stage", "write_report", "WeightedGraph",
]
