"""uqcat: exact computational algebra for diagonal Nichols algebras, small and
unrolled quantum group module categories, the singlet fusion ring, and
lattice-graded braided categories.

Everything is computed over exact cyclotomic scalars; no floating point
enters any verified identity.
"""

from .cyclotomic import (
    CycNum,
    cyclotomic_polynomial,
    exp_pi_i,
    cyc_pow,
    gauss_binomial,
    q_factorial,
    q_int,
    root_of_unity,
    sym_q_int,
)
from .grading import (
    Bicharacter,
    BraidedObject,
    Degree,
    GradingGroup,
    cartan_a2_object,
    diagonal_object,
    fermionic2_object,
    parabolic2_object,
    rank1_object,
)
from .lattice import DiscriminantForm, Lattice, smith_normal_form, triplet_lattice
from .nichols import (
    NicholsData,
    ResourceLimit,
    braided_coproduct,
    check_bialgebra_axiom,
    is_sufficiently_unrolled,
    nichols_dimensions,
    quantum_symmetrizer,
    total_dimension,
)
from .labels import SingletLabel, parse_label
from .fusion import Decomposition, check_ring_laws, cross_check, fuse, groth_class
from .repcat import (
    BorelModule,
    WeightModule,
    borel_tensor,
    decompose,
    decompose_tensor,
    dual_verma,
    ext1_dim,
    hom_dim,
    module_for_label,
    projective,
    simple_atypical,
    socle_filtration,
    tensor,
    typical,
    verma,
)
from .hopf import (
    HopfPresentation,
    build_ugl11,
    build_uq,
    build_uq_h_sl2,
    build_uq_sl2,
    build_usp,
    check_gl11_change_of_variables,
    check_sl2_substitution,
    radford_biproduct,
)
from .yd import (
    MonodromyError,
    UprollSpec,
    YDModule,
    induce_over,
    is_local_over,
    linking_from_yd,
    uproll,
    yd_braiding,
    yd_check,
    yd_trivial,
    yd_verma,
)

__version__ = "0.1.0"
