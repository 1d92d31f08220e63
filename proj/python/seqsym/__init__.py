"""Sequential matrices over Z/(n^2+1)Z: dihedral symmetries, Jacobi symbols
and Zolotarev permutation checks.

The heavy lifting lives in the compiled extension; this package just
re-exports it.
"""

from ._core import (
    Permutation,
    ResidueMatrix,
    SignMatrix,
    apply,
    apply_sign,
    check_basic_symmetry,
    check_corollary_jacobi,
    check_corollary_unit_indicator,
    check_cycle_structure,
    check_jacobi_theorem,
    check_lemma,
    check_realizations,
    check_theorem1,
    check_value_table,
    check_zolotarev,
    compose,
    dihedral_elements,
    induced_permutation,
    inverse,
    jacobi,
    jacobi_matrix,
    legendre_euler,
    mult_perm,
    parse_residue,
    parse_sign,
    qr_bruteforce,
    realize_by_products,
    render_residue,
    render_sign,
    scalar_mul,
    sequential,
    transpose,
    verification_names,
    verify,
)

__all__ = [
    "Permutation",
    "ResidueMatrix",
    "SignMatrix",
    "apply",
    "apply_sign",
    "check_basic_symmetry",
    "check_corollary_jacobi",
    "check_corollary_unit_indicator",
    "check_cycle_structure",
    "check_jacobi_theorem",
    "check_lemma",
    "check_realizations",
    "check_theorem1",
    "check_value_table",
    "check_zolotarev",
    "compose",
    "dihedral_elements",
    "induced_permutation",
    "inverse",
    "jacobi",
    "jacobi_matrix",
    "legendre_euler",
    "mult_perm",
    "parse_residue",
    "parse_sign",
    "qr_bruteforce",
    "realize_by_products",
    "render_residue",
    "render_sign",
    "scalar_mul",
    "sequential",
    "transpose",
    "verification_names",
    "verify",
]

__version__ = "0.1.0"
