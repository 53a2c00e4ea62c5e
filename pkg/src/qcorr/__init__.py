"""Entropic correlations, D-correlation and discord of bipartite quantum states."""

from .correlations import (
    CorrelationReport,
    analytic_d,
    classify_family,
    compare_d,
    conditional_entropy,
    correlation_report,
    d_correlation,
    is_ppt,
    mutual_entropy,
    relative_entropy,
    von_neumann_entropy,
)
from .discord import (
    MeasurementBasis,
    OptimizerConfig,
    classical_correlation,
    discord,
    symmetric_discord,
)
from .linalg import DomainError, ValidationError, partial_trace, partial_transpose
from .states import (
    bell_diagonal,
    bell_family_eps,
    horodecki3,
    horodecki_general,
    max_entangled,
)

__version__ = "0.1.0"

__all__ = [
    "CorrelationReport",
    "DomainError",
    "MeasurementBasis",
    "OptimizerConfig",
    "ValidationError",
    "analytic_d",
    "bell_diagonal",
    "bell_family_eps",
    "classical_correlation",
    "classify_family",
    "compare_d",
    "conditional_entropy",
    "correlation_report",
    "d_correlation",
    "discord",
    "horodecki3",
    "horodecki_general",
    "is_ppt",
    "max_entangled",
    "mutual_entropy",
    "partial_trace",
    "partial_transpose",
    "relative_entropy",
    "symmetric_discord",
    "von_neumann_entropy",
]
