"""Regularized multiple zeta and zeta-star values as polynomials in T.

Core layers:

- `combinatorics`: set partitions, partition coefficients, Bell/Stirling.
- `indices`: indices, binary words, harmonic and shuffle products.
- `regularize`: the four regularization maps into polynomials in T.
- `series`: truncated power series and the conversion endomorphisms.
- `numerics`: multiprecision evaluation with rigorous error bounds.
- `identities`: both sides of every verified identity, plus the suite.
- `service` / `cli`: HTTP front end and its thin command-line client.

Index syntax is "k1,k2,...,kr"; the final entry is the one that must exceed 1
for the nested series to converge.
"""

__version__ = "0.1.0"

from .combinatorics import (
    SetPartition,
    PartitionShape,
    bell_complete,
    bell_number,
    bell_partial,
    coeff_c,
    coeff_c_star,
    enum_restricted_partitions,
    enum_set_partitions,
    stirling_first_unsigned,
    stirling_second,
)
from .errors import AccuracyError, CapacityError, DomainError, MzvStarError
from .identities import (
    IdentityReport,
    example1_rows,
    partition_sum,
    run_suite,
    symmetric_sum,
    verify,
    zeta_part,
)
from .indices import (
    BinaryWord,
    Index,
    IndexCombination,
    WordCombination,
    contractions,
    harmonic_product,
    index_to_word,
    shuffle_product,
    word_to_index,
)
from .numerics import BoundedValue, PrecisionConfig, ZetaEvaluator, mzsv, mzv, zeta_single
from .regularize import reg_harm, reg_harm_star, reg_poly, reg_shuffle, reg_star_shuffle
from .series import TPoly, TruncSeries, a_series, rho, rho_bar_star, rho_bar_star_inverse
from .symbols import SymbolCombination, e_poly

__all__ = [
    "__version__",
    "AccuracyError",
    "BinaryWord",
    "BoundedValue",
    "CapacityError",
    "DomainError",
    "Index",
    "IndexCombination",
    "IdentityReport",
    "MzvStarError",
    "PartitionShape",
    "PrecisionConfig",
    "SetPartition",
    "SymbolCombination",
    "TPoly",
    "TruncSeries",
    "WordCombination",
    "ZetaEvaluator",
    "a_series",
    "bell_complete",
    "bell_number",
    "bell_partial",
    "coeff_c",
    "coeff_c_star",
    "contractions",
    "e_poly",
    "enum_restricted_partitions",
    "enum_set_partitions",
    "example1_rows",
    "harmonic_product",
    "index_to_word",
    "mzsv",
    "mzv",
    "partition_sum",
    "reg_harm",
    "reg_harm_star",
    "reg_poly",
    "reg_shuffle",
    "reg_star_shuffle",
    "rho",
    "rho_bar_star",
    "rho_bar_star_inverse",
    "run_suite",
    "shuffle_product",
    "stirling_first_unsigned",
    "stirling_second",
    "symmetric_sum",
    "verify",
    "word_to_index",
    "zeta_part",
    "zeta_single",
]
