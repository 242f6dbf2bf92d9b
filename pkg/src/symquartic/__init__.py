"""Exact-arithmetic membership decisions for cones of symmetric quartic
forms: nonnegativity, sums of squares, their common large-n limits, and
verifiable primal/dual certificates."""

from .algebra import MultiPoly, RatFunc, SymMat2, UniPoly, disc_binary_quartic
from .dualcone import (
    DualFunctional,
    boundary_family_functional,
    certify_boundary,
    dual_blocks,
    dual_membership,
    kernel_system_rows,
    pair,
    point_eval_functional,
    special_functional,
)
from .identities import (
    BoundaryParams,
    boundary_family_form,
    disc_poly,
    q1_poly,
    q2_poly,
    second_case_form,
    verify_disc_factorization,
    verify_second_case_double_root,
)
from .partitions import PARTITIONS_4, Partition, partitions_of, w_grid
from .positivity import (
    BoundaryVerdict,
    NonnegVerdict,
    boundary_status_limit,
    is_nonneg,
    is_nonneg_limit,
    is_strictly_positive,
)
from .sos import (
    SosCertificate,
    SosVerdict,
    expand_certificate,
    find_separating_functional,
    sos_membership,
    sos_membership_limit,
)
from .specht import (
    QBlocks,
    Tableau,
    brute_symmetrize,
    q_blocks,
    sigma_prime_generators,
    sigma_prime_rank,
    specht_polynomial,
)
from .symfunc import (
    LIMIT,
    NoLimitError,
    SymFormP,
    SymFuncM,
    evaluate,
    form_from_dict,
    m_to_p,
    p_to_m,
    phi_alpha_coeffs,
    restrict_alpha,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryParams",
    "BoundaryVerdict",
    "DualFunctional",
    "LIMIT",
    "MultiPoly",
    "NoLimitError",
    "NonnegVerdict",
    "PARTITIONS_4",
    "Partition",
    "QBlocks",
    "RatFunc",
    "SosCertificate",
    "SosVerdict",
    "SymFormP",
    "SymFuncM",
    "SymMat2",
    "Tableau",
    "UniPoly",
    "boundary_family_form",
    "boundary_family_functional",
    "boundary_status_limit",
    "brute_symmetrize",
    "certify_boundary",
    "disc_binary_quartic",
    "disc_poly",
    "dual_blocks",
    "dual_membership",
    "evaluate",
    "expand_certificate",
    "find_separating_functional",
    "form_from_dict",
    "is_nonneg",
    "is_nonneg_limit",
    "is_strictly_positive",
    "kernel_system_rows",
    "m_to_p",
    "p_to_m",
    "pair",
    "partitions_of",
    "phi_alpha_coeffs",
    "point_eval_functional",
    "q1_poly",
    "q2_poly",
    "q_blocks",
    "restrict_alpha",
    "second_case_form",
    "sigma_prime_generators",
    "sigma_prime_rank",
    "sos_membership",
    "sos_membership_limit",
    "special_functional",
    "specht_polynomial",
    "verify_disc_factorization",
    "verify_second_case_double_root",
    "w_grid",
]
