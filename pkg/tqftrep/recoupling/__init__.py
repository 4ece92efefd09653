# init file for package

from .coefficients import (ColorTriple, qint, qfact, bracket, delta_i, internal_colors, admissible,
                           twist_coeff, theta, tet, sixj, fusion_matrix, lemma_battery)
from .graphs import TrivalentGraph, count_labelings, theta_graph, caterpillar
