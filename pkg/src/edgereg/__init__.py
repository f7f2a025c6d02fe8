"""Regularity of powers of edge ideals of edge-weighted graphs.

An exact multigraded Betti engine for monomial ideals, closed-form
predictors for weighted paths and cycles, integral-closure checks and
the generator-ordering machinery for cycles with one heavy edge.
"""

from .betti import (
    BettiTable,
    ResourceCapExceeded,
    betti_table,
    betti_table_quotient,
    is_betti_splitting,
    koszul_betti,
    lcm_lattice,
    multigraded_betti,
    regularity,
    regularity_quotient,
    split_by_variable,
    verify_polarization_invariance,
)
from .closure import ideal_integral_closure, in_newton_polyhedron, is_integrally_closed_algebraic
from .formulas import (
    AmbiguousFormula,
    CyclePowerQuery,
    NotIntegrallyClosed,
    predict,
    predict_reg_cycle_power,
    predict_reg_path_power,
    predict_reg_regular_sequence,
    trivial_cycle_additive,
)
from .graphs import (
    WeightedGraph,
    build_cycle,
    build_path,
    edge_ideal,
    forbidden_pattern,
    is_integrally_closed_combinatorial,
)
from .monomials import (
    MonomialIdeal,
    ideal_colon_ideal,
    ideal_colon_mono,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    polarize,
)
from .powers import (
    TheoremViolation,
    colon_tail,
    edge_factorize,
    find_li_witness,
    ordered_generators,
    predicted_colon_tail,
)
from .sweep import Report, SweepConfig, run_verification_sweep

__version__ = "0.1.0"
