from .confspace import DecoratedConfiguration, random_configuration
from .tropical import TropicalPoint, GZVector
from .csp import verify_csp, CSPReport
