"""Regular partitions of root systems."""
from ..blocks import BlockPartition, check_partition, is_partition
from .combinat import (check_int_partition, integer_partitions, stirling2,
                       stirling_count_upper, windows)
from .graph import (GraphReport, PartitionGraph, build_partition_graph,
                    check_graph_properties, reconstruct_from_graph)
from .partition import (coarsen, finest_partition, is_regular_partition,
                        partition_from_int_partition, regularity_violation,
                        row_blocks, set_partitions)
from .search import (DEFAULT_NODE_BUDGET, EnumerationReport, enumerate_regular_partitions,
                     search_regular_partitions)

__all__ = [
    "BlockPartition", "check_partition", "is_partition",
    "check_int_partition", "integer_partitions", "stirling2", "stirling_count_upper", "windows",
    "GraphReport", "PartitionGraph", "build_partition_graph", "check_graph_properties",
    "reconstruct_from_graph",
    "coarsen", "finest_partition", "is_regular_partition", "partition_from_int_partition",
    "regularity_violation", "row_blocks", "set_partitions",
    "DEFAULT_NODE_BUDGET", "EnumerationReport", "enumerate_regular_partitions",
    "search_regular_partitions",
]
