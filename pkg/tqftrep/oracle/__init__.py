# init file for package

from .diagrams import TLDiagram, TLElement, all_diagrams, tl_mul
from .jones_wenzl import JonesWenzl, jones_wenzl
from .networks import Network, jw_closure, theta_shape, tet_shape, eval_closed, bubble_coefficient
