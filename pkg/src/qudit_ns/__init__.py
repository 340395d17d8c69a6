"""Exact noiseless-subsystem dimensions for collective rotation channels on qudits."""

from .optimizer import (
    Method,
    Optimum,
    check_local_optimality,
    maximize,
    maximize_brute,
    maximize_local,
    maximize_qubit_closed,
    maximize_qutrit_closed,
    maximum_chain,
    move_ratio,
    next_maximum,
)
from .partitions import (
    Partition,
    PartitionError,
    count_partitions,
    enumerate_partitions,
    make_partition,
    neighbor_moves,
    successors,
)
from .radicals import QutritThresholds, qutrit_thresholds
from .rates import RateSeries, balanced_rate_series, code_rate, log_big
from .schur_weyl import (
    BudgetExceeded,
    DecompositionTable,
    IrrepBlock,
    decomposition,
    irrep_dimension,
    multiplicity,
    ssyt_count_brute,
    syt_count_hook,
)

__version__ = "0.1.0"
