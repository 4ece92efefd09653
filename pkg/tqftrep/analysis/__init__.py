# init file for package

from .order import (OrderResult, is_scalar, candidate_set, ratio_certificate, numeric_screen,
                    minimal_polynomial, projective_order, expected_generator_order, order_rule)
from .image import (infinite_image_report, bfs_closure, unitarity_premise, subgroup_criterion,
                    word_certificate, suggested_words, generator_order_table)
from .irreducible import irreducibility, common_eigenvector
from .scan import SCAN_COLUMNS, scan_row, scan_levels
