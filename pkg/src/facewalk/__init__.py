"""Gray codes on face lattices of polytopes: generators, strips, oracles."""

from facewalk.posetcore import (
    EMPTY,
    CoverGraph,
    Listing,
    Report,
    brute_force_hamiltonian,
    check_euler,
    check_hamiltonian,
    f_vector,
)

__all__ = [
    "EMPTY",
    "CoverGraph",
    "Listing",
    "Report",
    "brute_force_hamiltonian",
    "check_euler",
    "check_hamiltonian",
    "f_vector",
]
