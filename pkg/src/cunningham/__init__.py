"""Exact toolkit for polynomial and integer Cunningham-style chains.

A chain iterates f -> x*f + eps over the integer polynomials (or p -> 2p+eps
over primes).  The package factors exactly over the rationals, certifies
irreducibility, generates the built-in seed families with predictable chain
lengths, and scans a conjectured reducibility pattern.
"""

from .certify import (
    Certificate,
    IrreducibilityVerdict,
    brauer_check,
    decide_irreducible,
    degree_set_prune,
    eisenstein_check,
    mod_p_certificate,
)
from .chains import (
    ChainEntry,
    ChainLength,
    ChainReport,
    FamilyParams,
    auxiliary_F,
    chain_length,
    chain_report,
    closed_form_term,
    family_seed,
    infinite_seed,
    min_root_modulus,
    product_formula_kind1,
    proof_gadget_g,
)
from .cli import format_polynomial, parse_polynomial
from .conjecture import ConjectureScan, conjecture_params, conjecture_poly, conjecture_scan
from .factorize import (
    Factorization,
    Quadrinomial,
    exponent_gcd_reduce,
    factor_over_rationals,
    hensel_lift,
    is_binomial_product,
    mignotte_bound,
    rational_roots,
    split_reciprocal_parts,
    squarefree_decompose,
    two_part_split_check,
)
from .intchains import IntChain, int_chain_length, search_int_chains
from .polyz import Polynomial, X, descartes_sign_changes, gcd
from .primes import is_probable_prime

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "ChainEntry",
    "ChainLength",
    "ChainReport",
    "ConjectureScan",
    "FamilyParams",
    "Factorization",
    "IntChain",
    "IrreducibilityVerdict",
    "Polynomial",
    "Quadrinomial",
    "X",
    "auxiliary_F",
    "brauer_check",
    "chain_length",
    "chain_report",
    "closed_form_term",
    "conjecture_params",
    "conjecture_poly",
    "conjecture_scan",
    "decide_irreducible",
    "degree_set_prune",
    "descartes_sign_changes",
    "eisenstein_check",
    "exponent_gcd_reduce",
    "factor_over_rationals",
    "family_seed",
    "format_polynomial",
    "gcd",
    "hensel_lift",
    "infinite_seed",
    "int_chain_length",
    "is_binomial_product",
    "is_probable_prime",
    "mignotte_bound",
    "min_root_modulus",
    "mod_p_certificate",
    "parse_polynomial",
    "product_formula_kind1",
    "proof_gadget_g",
    "rational_roots",
    "search_int_chains",
    "split_reciprocal_parts",
    "squarefree_decompose",
    "two_part_split_check",
]
