"""Advisor engine for picking one app per category with optimal trade-offs.

Builds Pareto-optimal app combinations over any subset of five metrics
(power, CPU, memory, network, rating), exactly by exhaustive enumeration or
approximately with NSGA-II, and supports the decision afterwards: trade-off
tables, constraint filtering, baseline comparison, and reference values.
"""

from .analysis import (
    Constraint,
    FilterResult,
    ImprovementReport,
    PositionReport,
    ReferenceValues,
    TradeoffRow,
    filter_front,
    improvement_report,
    position_app,
    reference_values,
    tradeoff_table,
    user_solution,
)
from .exhaustive import (
    FrontEntry,
    ParetoFront,
    Provenance,
    front_equal,
    solve_exhaustive,
)
from .model import (
    CONTEXTS,
    DEFAULT_BATTERY,
    AppRecord,
    BatteryParams,
    CategoryCatalog,
    InstanceSpec,
    MetricDirection,
    MetricId,
    all_instances,
    context_preset,
    instance_from_id,
    instance_from_metrics,
    validate_catalog,
)
from .nsga2 import (
    Individual,
    Nsga2Params,
    binary_tournament,
    crowding_distance,
    fast_nondominated_sort,
    flip_mutation,
    nsga2_solve,
    per_gene_mutation_rate,
    single_point_crossover,
)
from .objectives import (
    DisplayTransform,
    ObjectiveVector,
    battery_life_hours,
    energy_joules,
    evaluate_solution,
)
from .pareto import (
    DirectedPoint,
    ReducedCatalog,
    dominates,
    nondominated_filter,
    reduce_search_space,
    search_space_size,
)

__version__ = "0.1.0"
