"""Exact-arithmetic kernel for Hopf quasigroups, Yetter-Drinfeld
quasimodules and their braided category structure.

Everything is computed over exact rationals; axiom checks are exact
identities of structure-constant tensors, never floating point."""

from hqgkit._core import (
    AutPair,
    DimensionError,
    HopfAutomorphism,
    HopfCoquasigroup,
    HopfQuasigroup,
    LinearMap,
    Loop,
    ParseError,
    PreconditionError,
    SingularMatrixError,
    ValidationError,
    YdqModule,
    ab_flexible,
    antipode_properties,
    apply,
    automorphism_from_loop_perm,
    braiding,
    braiding_inverse,
    builtin_loop,
    check_automorphism,
    check_compat,
    check_coquasigroup,
    check_hopf_quasigroup,
    check_module,
    check_plain_ydq,
    check_quasi_comodule,
    classify,
    compose,
    conjugate,
    dualize,
    g_inv,
    g_mul,
    hopf_from_json,
    hopf_predicates,
    inverse_map,
    invert,
    is_ydq_morphism,
    loop_algebra,
    make_canonical,
    solve_morphism_space,
    swap,
    tensor_map,
    tensor_ydq,
    unit_module,
    validate_loop,
    verify_braiding_morphism,
    verify_hexagons,
    verify_naturality,
    verify_phi_braiding,
    verify_t_category,
    ydq_equal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
