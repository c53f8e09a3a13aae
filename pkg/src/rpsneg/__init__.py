"""Random permutation sets: negation of permutation mass functions,
with RPS entropy and distance to measure each negation step."""

from .errors import (
    CapacityError,
    CountOverflowError,
    DomainError,
    FrameMismatchError,
    NumericalError,
    RPSError,
    ValidationError,
)
from .mass import (
    BasicProbabilityAssignment,
    PermutationMassFunction,
    ProbabilityDistribution,
    pm_from_assignments,
    pm_from_dense,
    pm_from_labels,
    uniform_pm,
)
from .measures import (
    RDMatrix,
    ordered_degree,
    rd_matrix,
    rps_distance,
    rps_distance_matrix_free,
    rps_entropy,
    uniform_entropy,
)
from .negation import (
    NegationParameters,
    closed_form_iterate,
    fixed_point_mass,
    iterate_negation,
    negate_pm,
    yager_negate,
    yin_negate,
)
from .pes import (
    EventSpaceIndex,
    Frame,
    enumerate_pes,
    f_of,
    jaccard,
    perm_count,
    pes_cardinality,
    rank_in_event,
)
from .trace import (
    NegationTrace,
    build_trace,
    detect_convergence,
    predicted_convergence,
    theoretical_distance_series,
)

__version__ = "0.1.0"
