"""Exact computations with rook monoids and totally propagating partition algebras."""

from .scalars import Rational, XI, XiPoly, falling_factorial
from .formal import FormalSum
from .linalg import (
    ExactMatrix,
    commutant_dimension,
    mat_mul,
    nullspace,
    rank,
    simultaneous_eigenspace,
)
from .combinat import (
    bell,
    content,
    corner_set,
    f_lambda,
    is_standard_spt,
    max_entry_less,
    partitions,
    partitions_upto,
    set_partitions,
    standard_tableaux,
    stirling2,
)
from .rook import (
    RookElement,
    enumerate_rook,
    factor_to_word,
    generator,
    jm_x,
    jm_x_tilde,
    kappa,
    kappa_tilde,
    rook_mul,
    support_data,
)
from .diagram import (
    AlgebraElement,
    PartitionDiagram,
    build_dp,
    build_dpcd,
    build_dtilde,
    compose,
    diagram_product,
    embed_half,
    enumerate_monoid,
    from_orbit,
    is_coarser,
    is_half,
    is_totally_propagating,
    orbit_product_general,
    orbit_product_tppa,
    to_orbit,
)
from .seminormal import RookIrrep, act_p1, act_si, restriction_multiplicities, verify_jm_action
from .characters import (
    check_frobenius,
    chi_star,
    chi_sym,
    kronecker_with_defining,
    mod_induce,
    mod_restrict,
    tensor_multiplicities,
)
from .bratteli import GradedGraph, GraphPath, ihat, path_to_tableau, rhat, rook_tower, tableau_to_path
from .rsk import insert, path_to_spt, spt_to_path, uninsert
from .tensor import TensorSpace, phi_diagram, phi_element, phi_orbit, psi_element, psi_rook, schur_weyl_report
from .jm import (
    build_m,
    build_m_tilde,
    build_z,
    build_z_tilde,
    gt_decompose,
    tower_lift,
    verify_centrality,
    verify_operator_identity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
