"""Pairwise balanced designs, clique partitions and bounds on their block-size sums."""

from .algebra import FiniteField, NotPrimePower, PrimePower, gf_construct, prime_power_decompose
from .bounds import (
    BoundValue,
    best_sigma_lower,
    bound_A,
    bound_B,
    bound_C,
    large_block_free_lower,
    max_valency_lower,
    scp_knkm_bounds,
    sigma_lower_dbe,
)
from .classical import (
    affine_plane,
    augmented_affine_plane,
    one_factorization,
    projective_plane,
    proper_edge_coloring_complete,
    resolvable_design,
)
from .design import Design, Resolution, sigma, validate_pbd, valencies
from .graphs import CliquePartition, Graph, complete_minus_clique, partition_sigma, validate_partition
from .solver import SolverLimits, exact_cp, exact_S, exact_S_prime, exact_scp

__version__ = "0.1.0"

__all__ = [
    "BoundValue",
    "CliquePartition",
    "Design",
    "FiniteField",
    "Graph",
    "NotPrimePower",
    "PrimePower",
    "Resolution",
    "SolverLimits",
    "affine_plane",
    "augmented_affine_plane",
    "best_sigma_lower",
    "bound_A",
    "bound_B",
    "bound_C",
    "complete_minus_clique",
    "exact_S",
    "exact_S_prime",
    "exact_cp",
    "exact_scp",
    "gf_construct",
    "large_block_free_lower",
    "max_valency_lower",
    "one_factorization",
    "partition_sigma",
    "prime_power_decompose",
    "projective_plane",
    "proper_edge_coloring_complete",
    "resolvable_design",
    "scp_knkm_bounds",
    "sigma",
    "sigma_lower_dbe",
    "valencies",
    "validate_partition",
    "validate_pbd",
]
