from ._stallings import (
    Graph,
    check_balance_theorem,
    positivize,
    random_subgroup,
    reduce,
    run_search,
    screen_pair,
    shnc_check,
    subgroup_graph,
)

__all__ = [
    "Graph",
    "check_balance_theorem",
    "positivize",
    "random_subgroup",
    "reduce",
    "run_search",
    "screen_pair",
    "shnc_check",
    "subgroup_graph",
]
