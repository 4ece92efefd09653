# init file for package

from .paths import path_basis, is_path, basis_index
from .words import BraidWord, parse_word, random_balanced_word, reduced_words
from .matrix import RepMatrix, nullspace, VARIANTS
from .bhmv import (rho_gen, rho_gen_inverse, rho_word, pure_braid_gen, pure_braid_word, dehn_twist_scalar,
                   rho_dehn_spectrum, generator_blocks, twist_check, galois_check, nonempty_basis)
from .relations import verify_relations, verify_generators
from .rt import (RTContext, conformal_weight, rt_braiding_block, printed_braiding_block, freeze_signs,
                 rt_rho_gen, rt_rho_word, rt_braid_residual, rt_unitarity_deviation, rt_embedding,
                 check_equivalence, block_discrepancy)
