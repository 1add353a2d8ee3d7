"""Regular partitions of root systems and regular decompositions of sl(n+1)."""
from .blocks import BlockPartition
from .errors import BudgetExceeded, CapacityError
from .rootsys import RootSystem, RootSystemType, build_root_system

__version__ = "0.1.0"

__all__ = ["BlockPartition", "BudgetExceeded", "CapacityError", "RootSystem",
           "RootSystemType", "build_root_system"]
