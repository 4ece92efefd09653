# init file for package

from .golden import (printed_v31, printed_v42, V42_SUSPECT_ENTRIES, V31_PRINTED_ORDER, reorder,
                     golden_v31, tl_six_term, v42_discrepancies)
from .suite import paper_check, oracle_check, dehn_twist_check, CHECKS
