"""Exact computation of Kronecker and reduced Kronecker coefficients,
Kronecker tableaux, coefficient families, plane partitions, and the
quasipolynomials governing the families.

Three independent pathways (character oracle, tableau enumeration,
generating-function expansion) compute the same numbers and
cross-validate each other; see the ``verify`` suites.
"""

__version__ = "0.1.0"

from .characters import (CharacterTable, ScaleExceededError, character_table,
                         dimension, kronecker_coeff, kronecker_product,
                         lr_coeff, mn_character, oracle_cap, set_oracle_cap)
from .families import (ColouredPart, alphabet_B, alphabet_C, bij_family1,
                       bij_family2, bij_family3, canonical_coloured,
                       coloured_weight, diag_stable, enumerate_coloured,
                       family1, family2, family3, format_coloured_partition,
                       inv_bij_family3, monotonicity_check,
                       parse_coloured_partition, saturation_check)
from .partitions import (as_partition, conjugate, contains, format_partition,
                         intersect, is_alpha_lattice, pad, parse_partition,
                         part_at, partitions_of, z_weight)
from .planepart import (box_series, count_pp, enumerate_pp,
                        family3_convolution, lemma2_transform,
                        macmahon_series, pp_weight)
from .reduced import (evaluation_point, kron_at, reduced_kron, stab,
                      stability_threshold, stabilization_sequence)
from .series import (Quasipolynomial, cyclotomic, f_series, family_quasipoly,
                     g_series, h_series, inv_product_series, lcm_upto,
                     minimal_period, numerator_polynomial, quasipoly_eval,
                     quasipoly_extract)
from .tableaux import (KroneckerTableau, TwoRowRuleError,
                       count_kron_tableaux, enumerate_kron_tableaux,
                       is_kronecker_tableau, iter_skew_fillings,
                       two_row_multiplicity)
