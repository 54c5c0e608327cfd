"""Relational k-means: k-means clustering from a distance matrix alone."""

from .core import (
    Clustering,
    SingleRunResult,
    clustering_value,
    iterate,
    reassign,
    run_single,
    squared_centroid_distances,
    validate_squared_distances,
)
from .errors import (
    ConvergenceError,
    DimensionError,
    FieldParseError,
    FormatError,
    InputFormatError,
    InvariantError,
    RelKMeansError,
    ShapeError,
    ValidationError,
)
from .io import NamedDataset, format_input, parse_input, read_input, square_distances, write_output
from .search import (
    AttemptRecord,
    SearchOutcome,
    SearchParams,
    derive_seed,
    random_clustering,
    run_search,
)
from .spread import SpreadResult, beta_spread, gram_matrix, min_eigenvalue

__version__ = "0.1.0"
