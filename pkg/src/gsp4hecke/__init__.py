"""Exact spherical Hecke algebra of PGSp4 at an odd prime.

Laurent-polynomial arithmetic, spherical transforms and volumes, basis
decompositions, bounds on H, the quaternionic-symplectic dictionary and an
amplifier simulator.
"""

from .algebra import ONE, ZERO, LaurentPoly, RationalFn, div_exact, parse, print_canonical
from .amplifier import EigenvalueProfile, build_amplifier, lambda1, lambda2, lambda_sigma, ratio_sweep
from .bounds import HNormBound, basic_h_bound, cross_prime_bound, element_h_bound, good_primes
from .hecke import HeckeElement, decompose, eval_expr, multiply_basis, parse_expr, to_satake
from .linsolve import solve_exact, solve_linear
from .padic import QuatMod, find_alpha_hat, hensel_rs, psi, smith_normal_form, verify_dictionary
from .rootdatum import TorusExponent, WeylElement, norm_star_G, orbit, weyl_group
from .spherical import basic_transform, spherical_value, volume

__all__ = [
    "ONE", "ZERO", "LaurentPoly", "RationalFn", "div_exact", "parse", "print_canonical",
    "EigenvalueProfile", "build_amplifier", "lambda1", "lambda2", "lambda_sigma", "ratio_sweep",
    "HNormBound", "basic_h_bound", "cross_prime_bound", "element_h_bound", "good_primes",
    "HeckeElement", "decompose", "eval_expr", "multiply_basis", "parse_expr", "to_satake",
    "solve_exact", "solve_linear",
    "QuatMod", "find_alpha_hat", "hensel_rs", "psi", "smith_normal_form", "verify_dictionary",
    "TorusExponent", "WeylElement", "norm_star_G", "orbit", "weyl_group",
    "basic_transform", "spherical_value", "volume",
]
