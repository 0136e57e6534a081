"""Exact computations in braid groups, free groups and the Artin representation."""
from __future__ import annotations

from .braid_core import (
    BraidWord,
    band_generator,
    commutator,
    concat,
    conjugate,
    cyclic_generator,
    delta,
    exponent_sum,
    free_reduce,
    full_twist,
    generator,
    half_twist,
    invert,
    parse_braid,
    set_max_word_length,
    word_length_limit,
)
from .commutator import (
    SWord,
    commutator_expression,
    conjugacy_chain_witness,
    in_commutator_subgroup,
    parse_sword,
    perfectness_witness,
    rewrite_in_S,
    s_letter,
)
from .errors import BraidCheckError, DomainError, ParseError, ResourceError, UnsupportedError
from .free_group import (
    ArtinCertificate,
    FreeEndo,
    FreeWord,
    apply_endo,
    artin_conditions,
    boundary_word,
    compose,
    conjugate_in_free,
    conjugation,
    fg_conjugate,
    fg_invert,
    fg_multiply,
    is_inner,
    parse_free,
)
from .garside import GarsideNormalForm, is_trivial, normal_form, verify_conjugation, words_equal
from .harness import Report, emit_report, run_suite
from .matrix_rep import (
    Matrix2,
    check_braid_relations,
    check_homomorphism_b4_b3,
    evaluate_word,
    image_abelian,
    lemma_general_hypotheses,
)
from .perm import Permutation
from .representations import (
    OuterClass,
    artin,
    center_power_detect,
    in_kernel_gamma,
    mu,
    outer_equal,
    stabilizer_check,
)

__version__ = "0.1.0"
