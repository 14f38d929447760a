"""Seeds, quivers, mutations and bounded searches over the exchange graph."""
from .exchange import MutationError, mutate_matrix
from .modular import Fingerprint, FingerprintSampler, ModularClusterVariables, enumerate_modular
from .quiver import Quiver
from .search import (
    NotFound,
    enumerate_cluster_variables,
    enumerate_seeds,
    quiver_isomorphic,
    read_sequence,
    search_sequence,
    write_sequence,
)
from .seed import Seed, exchange_monomials, generic_seed, is_laurent_in, mutate_seed, mutate_sequence

__all__ = [
    "Fingerprint", "FingerprintSampler", "ModularClusterVariables", "MutationError", "NotFound",
    "enumerate_modular", "Quiver", "Seed", "enumerate_cluster_variables", "enumerate_seeds",
    "exchange_monomials", "generic_seed", "is_laurent_in", "mutate_matrix", "mutate_seed",
    "mutate_sequence", "quiver_isomorphic", "read_sequence", "search_sequence", "write_sequence",
]
