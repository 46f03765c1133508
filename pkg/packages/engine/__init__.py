from .counter import count_ap_optimized, count_generic, count_table, projected_work
from .oracle import count_oracle, enumerate_partitions, iter_partitions, verify_witness

__all__ = [
    "count_ap_optimized",
    "count_generic",
    "count_table",
    "projected_work",
    "count_oracle",
    "enumerate_partitions",
    "iter_partitions",
    "verify_witness",
]
