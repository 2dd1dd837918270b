"""operadalg: exact computer algebra for truncated symmetric operads and
graded Perm-type associative algebras.

Everything is exact (rationals or GF(p)); nothing here touches floating
point except the explicitly labeled growth heuristic in ``series``.
"""

from .fields import Field, QQ, GF, GFScalar, field_from_name
from .linalg import (
    Subspace,
    image,
    kernel,
    rref,
    solve,
    subspace_intersect,
    subspace_sum,
)
from .symgroup import (
    Permutation,
    adjacent_transposition,
    block_substitution,
    cycle,
    identity_perm,
    is_alternating,
    phi_doubleprime,
    sigma_prime,
    symmetric_group,
    transposition,
    verify_sign_lemma,
)
from .operad import (
    TruncatedOperad,
    Violation,
    basis_vector_type,
    bullet_product,
    bullet_right_torsion,
    check_axioms,
    classify_symmetry,
    full_graded_subset,
    generator_defect,
    graded_subset,
    ideal_product,
    is_central,
    left_torsion,
    non_primeness_witnesses,
    operad_ideal_closure,
    right_torsion,
    sigma_closure,
    triv_sign_split,
    truncation_suboperad,
)
from .algebra import (
    GradedAlgebra,
    algebra_torsion_left,
    algebra_torsion_right,
    all_even_typing,
    all_odd_typing,
    check_associativity,
    check_gperm,
    check_graded_commutative,
    check_pgc,
    check_pgperm,
    commutator_ideal,
    free_gperm,
    graded_ideal_data,
    ideal_mult,
    strip_typing,
    subring_truncation,
    two_sided_closure,
    veronese_2,
    with_typing,
)
from .functors import (
    diff_algebras,
    diff_operads,
    f_a_triv,
    forget_F,
    g_a_triv,
    g_sigma_sign,
    g_sigma_triv,
    roundtrip_report,
)
from .series import RationalSeries, gk_estimate, gk_heuristic, hilbert, rational_fit
from .catalog import (
    build_com,
    build_ex63_algebra,
    build_ex64_algebra,
    build_ex64_operad,
    build_free_gperm,
    build_massey_algebra,
    build_massey_operad,
    build_ope,
    build_polynomial_algebra,
)
from .fileformat import dump, load
from . import errors

__version__ = "0.1.0"
