"""IO-polynomials of permutations: enumeration, closed forms, exact certificates."""

__version__ = "0.1.0"

from .errors import ConsistencyError, ParseError, UsageError
from .perm import Partition, Permutation, partitions
from .polynomial import IntPolynomial
from .stirling import f_cyclic_closed, hultman, stirling_first
from .iopoly import f_of_partition, f_poly, g_poly
from .analysis import certify_real_rooted, hermite_biehler_check, interlaces, is_log_concave

__all__ = [
    "ConsistencyError", "ParseError", "UsageError",
    "Partition", "Permutation", "partitions", "IntPolynomial",
    "f_cyclic_closed", "hultman", "stirling_first",
    "f_of_partition", "f_poly", "g_poly",
    "certify_real_rooted", "hermite_biehler_check", "interlaces", "is_log_concave",
]
