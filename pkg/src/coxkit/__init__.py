"""coxkit: exact verification of diagram combinatorics, Kac-Moody realization
machinery, Lie bialgebra doubles, and quantum Weyl group operator identities.
"""

from .scalars import LaurentPoly, PoleError, QScalar, Rational, q_factorial, q_integer
from .sparse import LinearSolution, SparseMatrix, invert, kron, solve_linear
from .series import TruncatedSeries, series_compose, series_exp
from .diagrams import (
    Chain,
    Diagram,
    NestedSet,
    canonical_section,
    chain_to_nested_set,
    chains_equivalent,
    enumerate_chains,
    enumerate_nested_sets,
    orthogonal_union,
    vertical_decompose,
    vertical_union,
)
from .braids import (
    INFINITE,
    BraidWord,
    LabelledDiagram,
    coxeter_labels_from_gcm,
    evaluate_word,
    verify_braid_relation,
)
from .realizations import (
    DiagrammaticVerdict,
    Realization,
    RealizationMorphism,
    canonical_realization,
    cartan_diagrammatic_test,
    invariant_form,
    minimal_realization,
    morphism_space,
    symmetrizer,
)
from .liebialg import (
    DYModule,
    LieBialgebra,
    SplitPair,
    check_cybe,
    drinfeld_double,
    dy_r_matrix,
    dy_tensor,
    manin_triple_check,
    omega_is_morphism,
    verify_bialgebra,
    verify_dy,
)
from .hopf import HopfAlgebra, QuantumDouble, quantum_double, quasitriangularity_report, verify_hopf
from .hopfdy import HopfDYModule, hopf_dy_braiding, hopf_dy_tensor, verify_hopf_dy
from .qweyl import (
    QuantumGroupData,
    WeightModule,
    build_rank2_module,
    build_sl2_module,
    check_coproduct_identity,
    classical_limit_comparison,
    coproduct_action,
    highest_weight_submodule,
    quantum_weyl_operator,
    rank1_r_matrix,
    recorded_conventions,
    validate_weight_module,
)
from .associator import check_associator_axioms, omega_leg_additivity
from .coxverify import (
    CoxeterWitness,
    LaxDAlgebra,
    MatrixAlgebra,
    braid_reps_from_witness,
    verify_coproduct_axiom,
    verify_lax_d_algebra,
    verify_witness_braid_relations,
)

__version__ = "0.1.0"
