"""Exact walk enumeration on weighted graphs and lattice windows.

All counts are exact: integers come back as Python ints of any size, and
polynomial weights in the formal step weights a, b come back as
{(a_power, b_power): coefficient} dicts.
"""

from ._latticewalk import (
    Graph,
    add_uniform_loops,
    bessel_P_coeffs,
    bessel_coeffs,
    biproduct,
    cartesian_product,
    cayley_counts,
    check_identity,
    check_semiregular,
    closed_P,
    closed_P_ab,
    closed_R,
    closed_R2,
    closed_R_ab,
    closed_RxP,
    closed_composite_R,
    closed_composite_R_ab,
    conjugacy_class_size,
    count_composite_walks,
    count_walks,
    count_walks_oracle,
    exterior_bipower,
    exterior_power,
    factorial,
    identity_names,
    parity_product,
    partitions_of,
    quotient_counts,
    sn_character,
    symmetric_bipower,
    symmetric_power,
    wave_count,
)

__all__ = [
    "Graph",
    "add_uniform_loops",
    "bessel_P_coeffs",
    "bessel_coeffs",
    "biproduct",
    "cartesian_product",
    "cayley_counts",
    "check_identity",
    "check_semiregular",
    "closed_P",
    "closed_P_ab",
    "closed_R",
    "closed_R2",
    "closed_R_ab",
    "closed_RxP",
    "closed_composite_R",
    "closed_composite_R_ab",
    "conjugacy_class_size",
    "count_composite_walks",
    "count_walks",
    "count_walks_oracle",
    "exterior_bipower",
    "exterior_power",
    "factorial",
    "identity_names",
    "parity_product",
    "partitions_of",
    "quotient_counts",
    "sn_character",
    "symmetric_bipower",
    "symmetric_power",
    "wave_count",
]
