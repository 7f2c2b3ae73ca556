"""Orthogonal polynomial families of the -1 scheme and their coupling data.

Thin re-export of the compiled extension. Matrices come back as numpy
arrays, orthogonality data and residual checks as plain dicts.
"""

from ._m1poly import (
    Conv2Direction,
    EvalMethod,
    GenFunForm,
    NumericError,
    TwoVarBasis,
    __version__,
    bannai_ito_eval,
    bi_ortho,
    bigjacobi_eval,
    bigjacobi_gram,
    bilinear_genfun_residual,
    cg_coefficient,
    cg_matrix,
    chihara_eval,
    chihara_genfun,
    chihara_gram,
    conv1_inverse_residual,
    conv1_residual,
    conv2_residual,
    coupled_basis_realization,
    dualhahn_eval,
    dualhahn_ortho,
    hyp_pfq,
    mu_factorial,
    mu_number,
    racah_coefficient,
    twovar_gram,
)

__all__ = [
    "Conv2Direction",
    "EvalMethod",
    "GenFunForm",
    "NumericError",
    "TwoVarBasis",
    "__version__",
    "bannai_ito_eval",
    "bi_ortho",
    "bigjacobi_eval",
    "bigjacobi_gram",
    "bilinear_genfun_residual",
    "cg_coefficient",
    "cg_matrix",
    "chihara_eval",
    "chihara_genfun",
    "chihara_gram",
    "conv1_inverse_residual",
    "conv1_residual",
    "conv2_residual",
    "coupled_basis_realization",
    "dualhahn_eval",
    "dualhahn_ortho",
    "hyp_pfq",
    "mu_factorial",
    "mu_number",
    "racah_coefficient",
    "twovar_gram",
]
