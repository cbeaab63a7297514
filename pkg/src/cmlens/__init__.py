"""Changemaker vectors, the triangular-cost coin game, relevant knot coefficients,
lens-space lattice embeddings and the E8-changemaker test."""

from .core import (CapacityError, Changemaker, InvalidInput, derived_scalars,
                   even_equal_partition, is_changemaker, reachable_sums)
from .coin_game import (SigmaRelevantTable, count_plans, t_sigma, t_sigma_rational,
                        v_sigma, v_sigma_table, verify_structure)
from .knot import (LaurentPoly, RelevantView, VSequence, conversion_window, extract_relevant,
                   torsion_coeffs, torus_alexander, torus_v)
from .surgery import (FamilyX, MissingBound, SlopeCandidate, check_slope_vs_l1, check_thm61,
                      count_bound, family_recover_s, family_sigma, feasible_r, reconstruct_sigma,
                      slope_window, verify_family_T)
from .lattice import (HJExpansion, complement_basis, embed_linear, hj_expansion, linear_gram,
                      realize)
from .e8 import (E8Changemaker, E8Vector, Short_set, c_and_C, classify_poincare, e8_roots,
                 is_e8_changemaker, pi_set, short_set)
from .kernels import BACKEND

__version__ = "0.1.0"
