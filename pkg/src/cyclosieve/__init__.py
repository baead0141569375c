"""Exact verification of cyclic-sieving and dihedral fixed-point identities
for jeu-de-taquin promotion, Kazhdan-Lusztig cells, ribbon tableaux, and
Catalan-family actions."""

from .tableaux import (
    CapExceeded,
    Composition,
    Partition,
    Tableau,
    conjugate,
    css,
    descent_set,
    dominance_leq,
    enumerate_cst,
    enumerate_rst,
    enumerate_syt,
    extended_descent_set,
    hook_length,
    syt_count,
)
from .jeudetaquin import (
    demote,
    demote_rst,
    evacuate,
    evacuate_rst,
    is_semistandardizable,
    promote,
    promote_power,
    promote_rst,
    semistandardize,
    standardize,
)
from .permutations import (
    Permutation,
    bruhat_leq,
    cycle_type,
    identity,
    left_right_descents,
    long_cycle,
    long_element,
    reading_word,
    rsk,
    rsk_inverse,
    simple,
)
from .qpolys import (
    IntPolynomial,
    charge,
    kappa,
    kostka_foulkes,
    mn_character,
    q_binomial,
    q_catalan,
    q_factorial,
    q_hook_formula,
    q_int,
    schur_evaluate,
    schur_principal_specialization,
)
from .cyclotomic import CyclotomicElement, as_integer, cyclotomic_polynomial, eval_at_root, zeta

__all__ = [name for name in dir() if not name.startswith("_")]
