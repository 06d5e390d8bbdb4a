"""Entanglement of accelerated observers: Unruh-state construction for
fermion and scalar field modes, the local Wigner rotation picked up by a
uniformly accelerated spin, and the negativity / mutual-information
diagnostics that quantify what each mechanism destroys.
"""

from .entanglement import (
    BipartitePure,
    ClosedFormMutualInfo,
    MutualInfoReport,
    NegativityReport,
    ScalarPairReport,
    apply_wigner_to_rob,
    closed_form_mutual_information,
    closed_form_negativity,
    mutual_information,
    negativity,
    scalar_entanglement_report,
    spin_bell_state,
)
from .fock import (
    ModeLabel,
    ModeRegistry,
    StateVector,
    boson_ladder,
    fermion_ladder,
    schmidt_coefficients,
)
from .frame import (
    ConnectionForm,
    RindlerPoint,
    Tetrad,
    christoffels_at,
    connection_one_form,
    metric_at,
    rindler_to_minkowski,
    tetrad_at,
    torsion_residual,
)
from .linalg import (
    eig_hermitian,
    partial_trace,
    partial_transpose,
    von_neumann_entropy,
)
from .rindler import (
    OccupationResult,
    UnruhParams,
    UnruhState,
    fermion_bogoliubov,
    fermion_excited,
    fermion_registry,
    fermion_unruh_vacuum,
    occupation_I,
    scalar_excited,
    scalar_registry,
    scalar_unruh_vacuum,
)
from .wigner import (
    LittleGroupResult,
    MomentumState,
    SpinorMatrix,
    accumulate,
    boost_spin_half,
    kinematics,
    little_group_oracle,
    wigner_coefficients,
    wigner_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BipartitePure",
    "ClosedFormMutualInfo",
    "ConnectionForm",
    "LittleGroupResult",
    "ModeLabel",
    "ModeRegistry",
    "MomentumState",
    "MutualInfoReport",
    "NegativityReport",
    "OccupationResult",
    "RindlerPoint",
    "ScalarPairReport",
    "SpinorMatrix",
    "StateVector",
    "Tetrad",
    "UnruhParams",
    "UnruhState",
    "accumulate",
    "apply_wigner_to_rob",
    "boost_spin_half",
    "christoffels_at",
    "closed_form_mutual_information",
    "closed_form_negativity",
    "connection_one_form",
    "eig_hermitian",
    "fermion_bogoliubov",
    "fermion_excited",
    "fermion_ladder",
    "fermion_registry",
    "fermion_unruh_vacuum",
    "kinematics",
    "little_group_oracle",
    "metric_at",
    "mutual_information",
    "negativity",
    "occupation_I",
    "partial_trace",
    "partial_transpose",
    "rindler_to_minkowski",
    "scalar_entanglement_report",
    "scalar_excited",
    "scalar_registry",
    "scalar_unruh_vacuum",
    "schmidt_coefficients",
    "spin_bell_state",
    "tetrad_at",
    "torsion_residual",
    "von_neumann_entropy",
    "wigner_coefficients",
    "wigner_matrix",
    "boson_ladder",
]
