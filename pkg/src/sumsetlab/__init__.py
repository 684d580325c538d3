"""sumsetlab: exact sumset-growth experiments on integer lattices.

Core objects are finite subsets of Z^d (LatticeSet).  The package computes
Minkowski sumsets and coordinate compressions, searches for the largest
affine cube inside a set (its exponential dimension), certifies the sharp
linear lower bound on |A+A| with exact rational coefficient systems,
minimises the underlying weighted grid inequality numerically, and ships
generators for the extremal families plus block-decomposition and
root-superadditivity checks.
"""

from .blocks import (
    BlockDecomposition,
    BlockInstanceError,
    FiberCheckReport,
    block_decomposition,
    blocks_to_instance,
    check_all_fiber_inclusions,
    check_fiber_inclusions,
)
from .certificates import (
    FAMILY_IDS,
    Certificate,
    averaging_coefficient,
    certify_case,
    certify_range,
    decomposition_count,
    exceptional_pairs,
    f1_odd,
    f_even,
    family_vector,
    growth_constant,
    redistribute,
    strong_coefficient,
    strong_vector,
)
from .cubes import (
    CubeWitness,
    DimensionResult,
    SearchBudgetExceeded,
    affine_rank,
    cube_dimension,
    find_cube,
    validate_witness,
)
from .exactmath import (
    IntegerRowBasis,
    compare_root_sum,
    format_rational,
    integer_rank,
    is_perfect_power,
    nth_root_floor,
    parse_rational,
)
from .extremal import (
    FAMILY_KINDS,
    FamilySpec,
    MainBoundReport,
    RootSumReport,
    TranspositionCubeReport,
    family_limit,
    lehmer_code,
    lehmer_image,
    predicted_counts,
    random_downset,
    root_sum_check,
    transposition_cube,
    transposition_cube_report,
    verify_main_bound,
)
from .extremal import generate as generate_family
from .inequality import (
    FamilyCheck,
    GridAssignment,
    MinRatioResult,
    WeightAssignment,
    check_family,
    downset_indicators,
    level_sums,
    min_ratio_search,
    minimal_grid,
    monotone_envelope,
    random_assignment,
    ratio,
)
from .lattice import (
    DimensionMismatchError,
    DoublingReport,
    EmptySetError,
    LatticeError,
    LatticeSet,
    Point,
    box,
    compress_all,
    compress_coordinate,
    doubling,
    is_down_set,
    minkowski_sum,
    unit_cube,
)
from .pointio import (
    PointFileReport,
    PointFormatError,
    dump_points,
    dumps_points,
    load_points,
    loads_points,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "BlockInstanceError",
    "Certificate",
    "CubeWitness",
    "DimensionMismatchError",
    "DimensionResult",
    "DoublingReport",
    "EmptySetError",
    "FAMILY_IDS",
    "FAMILY_KINDS",
    "FamilyCheck",
    "FamilySpec",
    "FiberCheckReport",
    "GridAssignment",
    "IntegerRowBasis",
    "LatticeError",
    "LatticeSet",
    "MainBoundReport",
    "MinRatioResult",
    "Point",
    "PointFileReport",
    "PointFormatError",
    "RootSumReport",
    "SearchBudgetExceeded",
    "TranspositionCubeReport",
    "WeightAssignment",
    "affine_rank",
    "averaging_coefficient",
    "block_decomposition",
    "blocks_to_instance",
    "box",
    "certify_case",
    "certify_range",
    "check_all_fiber_inclusions",
    "check_family",
    "check_fiber_inclusions",
    "compare_root_sum",
    "compress_all",
    "compress_coordinate",
    "cube_dimension",
    "decomposition_count",
    "doubling",
    "downset_indicators",
    "dump_points",
    "dumps_points",
    "exceptional_pairs",
    "f1_odd",
    "f_even",
    "family_limit",
    "family_vector",
    "find_cube",
    "format_rational",
    "generate_family",
    "growth_constant",
    "integer_rank",
    "is_down_set",
    "is_perfect_power",
    "lehmer_code",
    "lehmer_image",
    "level_sums",
    "load_points",
    "loads_points",
    "min_ratio_search",
    "minimal_grid",
    "minkowski_sum",
    "monotone_envelope",
    "random_assignment",
    "nth_root_floor",
    "parse_rational",
    "predicted_counts",
    "random_downset",
    "ratio",
    "redistribute",
    "root_sum_check",
    "strong_coefficient",
    "strong_vector",
    "transposition_cube",
    "transposition_cube_report",
    "unit_cube",
    "validate_witness",
    "verify_main_bound",
    "__version__",
]
