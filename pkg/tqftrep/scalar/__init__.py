# init file for package

from .cyclotomic import CycloScalar, cyclo_new, galois_apply, is_root_of_unity, embed, euler_phi
from .laurent import LaurentPoly, LaurentRatio, LOOP, qint_poly, qfact_poly
from .theory import TheoryCtx, level_conductor, THEORIES
