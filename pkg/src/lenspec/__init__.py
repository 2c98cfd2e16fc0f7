"""lenspec: exact and certified-interval computations around geodesic length
spectra of arithmetic locally symmetric spaces.

Submodules:
  rootsys   -- root systems, Weyl-group quantities, the length functional
  galmod    -- character lattices as integer lattices with finite group actions
  algnum    -- exact (multi-)quadratic arithmetic, intervals, relation detection
  quatarith -- quaternion algebras over Q, trace spectra, spectrum inclusion
  etale     -- etale-algebra embedding criteria and charpoly truncation
  cli       -- command-line front-end and the packaged experiments
"""

from .algnum import (
    DEFAULT_PRECISION,
    IndependenceVerdict,
    Interval,
    MultiQuadraticElement,
    MultiQuadraticField,
    QuadraticElement,
    RelationWitness,
    WeakContainmentWitness,
    certify_relation,
    find_integer_relation,
    lll_reduce,
    log_abs,
    multiplicatively_independent,
    quad_eigenvalue,
    weak_containment_search,
)
from .errors import DomainError, LenspecError, PrecisionError, UnsupportedError
from .etale import (
    CSAProfile,
    EtaleProfile,
    ReciprocalPolynomial,
    embeds_in_csa_global,
    embeds_in_csa_local,
    same_maximal_etale,
    truncate_reciprocal_charpoly,
)
from .galmod import (
    FamilyDecomposition,
    GaloisModule,
    LocalRankProfile,
    dirichlet_rank,
    fixed_sublattice_rank,
    independence_check,
    is_q_irreducible,
    unscramble_exponent,
    weyl_weight_module,
)
from .quatarith import (
    NormOneElement,
    QuaternionAlgebra,
    TraceSpectrum,
    adjoint_trace,
    algebra_from_ramset,
    embeds_quadratic_field,
    enumerate_norm_one,
    hilbert_symbol,
    ramification_set,
    spectrum_commensurable_inclusion,
    trace_spectrum,
)
from .rootsys import (
    LengthValue,
    RootSystem,
    TorusElement,
    bn_cn_pair_lengths,
    build_root_system,
    hyperbolic_weyl_order,
    length_lambda,
    torus_root_values,
    weyl_conjugacy_classes,
    weyl_order,
)

__version__ = "0.1.0"
