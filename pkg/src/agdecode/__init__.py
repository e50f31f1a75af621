"""List decoding of one-point AG codes with interpolation by module Groebner bases."""

from .code import CodeSpec, build_code, check_assumption1, compute_hr, dim_LDQ, encode
from .cost import (bound_module_gb, compare_report, count_bh_system,
                   count_gs_equations)
from .curve import Curve, FunElem
from .curvefile import CurveData, load_curve, parse_curve
from .decoder import a_priori_radius, list_decode, root_find, verify_root
from .errors import CurveError, InvariantError, Issue, SearchSpaceTooLarge
from .field import GF, CostCounter, FieldError
from .groebner import OrderSpec, algorithm_g, brute_force_minimal, quotient_dim
from .interpolation import (ZPoly, build_generators, interpolate, interpolation_basis,
                            verify_multiplicity)
from .local import AtLeast, Place, enumerate_places, expand_function, valuation_at
from .semigroup import NumericalSemigroup

__version__ = "0.1.0"
