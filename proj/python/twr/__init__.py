"""Time-windowed repairman and deliveryman planning.

Thin wrapper over the native module; everything interesting lives in C++.
"""

from ._twr import (
    DeliveryResult,
    DeliverymanOracleResult,
    Edge,
    Instance,
    InstanceFile,
    MetricKind,
    OracleBudget,
    OrderItem,
    ParseError,
    RandomParams,
    Rat,
    RepairmanOracleResult,
    Request,
    Run,
    ServiceEvent,
    SolutionFile,
    SolutionKind,
    SolveMode,
    Tour,
    TrimmedInstance,
    VerifyReport,
    Violation,
    brute_deliveryman,
    brute_repairman,
    build_metric,
    delivery_bounded,
    delivery_graph,
    delivery_tree,
    fixed_order_min_speed,
    format_instance,
    format_solution,
    generate_partition,
    generate_random,
    parse_instance,
    parse_solution,
    run_profit,
    solve_repairman,
    total_profit,
    trim_earliest_half,
    trim_unit,
    verify_run,
    window12,
    windowg,
    windowgd,
)

__all__ = [name for name in dir() if not name.startswith("_")]
