from .quiver import Grid, Primed, Quiver, standard_quiver, extended_quiver, rho_sequence
from .seed import ASeed, XSeed
from .plane_partition import PlanePartition, GTPattern
from .polynomial import IntPolynomial, CyclotomicInt
from .matrix import RatMatrix
