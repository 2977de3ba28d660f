"""Finite orthomodular lattices, contextual states, and measurement models.

The package splits into exact combinatorics (``lattice``, ``analysis``,
``states``), numerical quantum models that produce such lattices and their
probabilities (``quantum``, ``wigner``), a seeded detection protocol
(``protocol``), and a reporting CLI (``cli``).
"""

from .analysis import (
    CenterReport,
    Decomposition,
    center,
    check_incompatible_lemma,
    compatibility_relation,
    compatible_decomposition,
    compatible_via_definition,
    incompatibility_witness,
    is_compatible,
    is_irreducible,
    require_orthomodular,
)
from .errors import (
    BadDensityMatrix,
    BadOrtho,
    BadProjector,
    ClosureTooLarge,
    CycleError,
    DimensionMismatch,
    NoComplement,
    NotALattice,
    NotAState,
    NotClosed,
    NotOrthomodular,
    NotUnique,
    OrthologicError,
    ParseError,
    PreconditionFailed,
    TooLarge,
    UnknownName,
)
from .lattice import (
    CATALOG_NAMES,
    Lattice,
    PropertyReport,
    catalog,
    classify,
    covers,
    direct_product,
    find_order_isomorphism,
    generated_sublattice,
    is_distributive_subset,
    is_order_isomorphic,
    lattice_from_covers,
    lattice_from_leq,
    parse_lattice,
    serialize_lattice,
)
from .protocol import ProtocolConfig, ProtocolStats, run_detection_protocol
from .quantum import (
    InquirySequence,
    ProjectorLattice,
    basis_projector,
    born_state,
    detectability,
    infer_complement,
    infer_order,
    isolated_check,
    ket_projector,
    maximally_mixed,
    projector_lattice,
    qubit_z_lattice,
    qubit_zx_lattice,
    qutrit_commuting_lattice,
    random_density_matrix,
    sequence_probability,
    standard_projector,
    validate_density_matrix,
    validate_projector,
    x_minus,
    x_plus,
    z0,
    z1,
)
from .states import (
    DispersionFreeReport,
    LatticeState,
    enumerate_dispersion_free,
    is_dispersion_free,
    is_state,
    unary_nogo_certify,
    unary_nogo_evaluate,
)
from .wigner import (
    ClassRelationReport,
    Scenario,
    class_m,
    class_n,
    cnot_scenario,
    full_question,
    identity_scenario,
    interaction_equivalence,
    scenario_from_json,
    scenario_preset,
    swap_scenario,
    tradeoff,
    verify_class_relations,
    verify_cross_implication,
)

__version__ = "0.1.0"
