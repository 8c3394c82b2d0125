"""Exact arithmetic: rationals, prime fields, polynomials, matrices, Groebner bases."""
from .rings import QQ, GF, FpElement, IncompatibleRings, DEFAULT_PRIME, is_prime
from .poly import MultiPoly, poly_arith, grevlex_key, homogeneous_monomials, linear_form
from .matrix import (PolyMatrix, determinant, minors, symmetric_minors, rank_at_point,
                     rank_mod_p, batched_rank_mod_p, nullspace_mod_p)
from .groebner import (IdealBasis, groebner, GroebnerBudgetExhausted, GroebnerStats,
                       normal_form, in_ideal, saturate_last_variable, is_groebner_basis,
                       default_budget, DEFAULT_BUDGET)
from .hilbert import (HilbertData, EMPTY, hilbert_dim_degree, hilbert_numerator,
                      monomial_dim_degree, hilbert_function)
from .univariate import squarefree_part, univariate_gcd

__all__ = [
    "QQ", "GF", "FpElement", "IncompatibleRings", "DEFAULT_PRIME", "is_prime",
    "MultiPoly", "poly_arith", "grevlex_key", "homogeneous_monomials", "linear_form",
    "PolyMatrix", "determinant", "minors", "symmetric_minors", "rank_at_point",
    "rank_mod_p", "batched_rank_mod_p", "nullspace_mod_p",
    "IdealBasis", "groebner", "GroebnerBudgetExhausted", "GroebnerStats", "normal_form",
    "in_ideal", "saturate_last_variable", "is_groebner_basis", "default_budget",
    "DEFAULT_BUDGET",
    "HilbertData", "EMPTY", "hilbert_dim_degree", "hilbert_numerator",
    "monomial_dim_degree", "hilbert_function",
    "squarefree_part", "univariate_gcd",
]
