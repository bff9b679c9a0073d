"""Modular knots: indefinite forms, L/R words, Lorenz braids, Burau matrices
and Alexander polynomials, all in exact integer arithmetic."""

from .alexander import (AlexanderPoly, alexander, alexander_degree_formula, alexander_of_spec,
                        alexander_of_word, alexander_raw, alexander_unreduced_check,
                        family_A_oracle, family_B_oracle, genus, symmetry_defect,
                        torus_alexander)
from .braid import (Braid, LorenzSpec, braid_index, braid_from_tspec, braid_permutation,
                    components, cycles, exponent_sum, lorenz_braid, lorenz_permutation,
                    modular_braid, modular_permutation, permutation_braid, spec_from_word,
                    tbraid_from_spec, trip_number, word_from_spec)
from .burau import (burau, burau_generator, burau_lorenz, eigenvalue_one_multiplicity,
                    permutation_matrix, reduced_burau_generator)
from .enumeration import (DegreeReport, degree_report, enumerate_specs, full_table,
                          partition_count)
from .errors import *  # noqa: F401,F403
from .invariants import hz_class_number, linking_with_trefoil, rademacher, sqrt_word
from .laurent import (BivariatePoly, LaurentMatrix, LaurentPoly, lp_div_exact, mat_det,
                      mat_det_packed, q_cyclotomic_bracket)
from .quad import (PeriodicCF, QuadraticForm, QuadraticSurd, cf_expand, discriminant,
                   form_from_period, principal_root, surd_from_period, tv_product)
from .words import (bernoulli_rational, christoffel_lower, dual_word, expand_powers,
                    flip_word, is_lyndon, is_primitive, lyndon_canonical, markov_left,
                    markov_right, max_rotation_index, parse_word, period_from_word, ranks,
                    substitute, trip_count, word_from_period)

__version__ = "0.1.0"
