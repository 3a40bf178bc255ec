"""Spin-chain control algebra: Jordan-Wigner generator chains, Lie-algebra
closures, and higher-dimensional Bloch-sphere rotations.

The package builds the anticommuting chain operators and the gate buses
they induce, computes dynamical Lie-algebra closures to decide which
group a gate set generates, and maps concrete pulse schedules both to a
2^n x 2^n unitary and to the (2n+1)-dimensional rotation it induces on
the chain's rotation frame.
"""

from .pauli import (
    DimensionMismatchError,
    PauliParseError,
    PauliString,
    PauliWord,
    commutator,
    parse_pauli,
)
from .operators import (
    CarReport,
    PauliSum,
    annihilation_operator,
    bilinear,
    creation_operator,
    verify_car,
)
from .generators import (
    GateBus,
    GeneratorRef,
    build_bus,
    chirality,
    gamma_frame,
    majorana,
    majorana_bilinear,
    parse_generator,
    subset_product,
    third_order_gate,
)
from .closure import (
    ClosureReport,
    UniversalityResult,
    check_universality,
    classify_dimension,
    closure_general,
    closure_strings,
)
from .dense import (
    MembershipResult,
    PulseSchedule,
    ResourceLimitError,
    adjoint_rotation,
    exp_pulse,
    pauli_decompose,
    random_schedule,
    rotation_json_dict,
    run_schedule,
    so_membership,
    to_matrix,
    unitarity_residual,
)

__version__ = "0.1.0"

__all__ = [
    "CarReport",
    "ClosureReport",
    "DimensionMismatchError",
    "GateBus",
    "GeneratorRef",
    "MembershipResult",
    "PauliParseError",
    "PauliString",
    "PauliSum",
    "PauliWord",
    "PulseSchedule",
    "ResourceLimitError",
    "UniversalityResult",
    "adjoint_rotation",
    "annihilation_operator",
    "bilinear",
    "build_bus",
    "check_universality",
    "chirality",
    "classify_dimension",
    "closure_general",
    "closure_strings",
    "commutator",
    "creation_operator",
    "exp_pulse",
    "gamma_frame",
    "majorana",
    "majorana_bilinear",
    "parse_generator",
    "parse_pauli",
    "pauli_decompose",
    "random_schedule",
    "rotation_json_dict",
    "run_schedule",
    "so_membership",
    "subset_product",
    "third_order_gate",
    "to_matrix",
    "unitarity_residual",
    "verify_car",
]
