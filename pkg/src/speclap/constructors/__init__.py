from .association import (
    Association,
    association_counts,
    association_laplacian,
    association_phi,
    association_system,
    cohesion_count,
    cohesion_estimate,
)
from .cayley import AbelianGroup, cayley_graph, cayley_spectrum, cayley_system
from .quantum import (
    ScatteringDatum,
    indefinite_form,
    quantum_system,
    random_upq,
    swap_halves,
    upq_defect,
)
from .sampling import haar_unitary, random_hermitian_system, random_system, random_unitary_system
from .walk import walk_system

__all__ = [
    "AbelianGroup",
    "Association",
    "ScatteringDatum",
    "association_counts",
    "association_laplacian",
    "association_phi",
    "association_system",
    "cayley_graph",
    "cayley_spectrum",
    "cayley_system",
    "cohesion_count",
    "cohesion_estimate",
    "haar_unitary",
    "indefinite_form",
    "quantum_system",
    "random_hermitian_system",
    "random_system",
    "random_unitary_system",
    "random_upq",
    "swap_halves",
    "upq_defect",
    "walk_system",
]
