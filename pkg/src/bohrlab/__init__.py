"""Numerical laboratory for the Bohr phenomenon of analytic functions
omitting two values, built on the modular covering map of the disk."""

__version__ = "0.1.0"

from .bohr import (BASE_SLACK, BohrRadiusResult, InequalityCheck,
                   LittlewoodReport, TheoremReport, bohr_operator,
                   bohr_radius_solve, cauchy_tail_bound,
                   classical_bohr_check, littlewood_check,
                   main_theorem_check, von_neumann_check)
from .errors import (BohrlabError, BracketError, DegenerateSpec, DomainError,
                     HypothesisViolation, NonPositiveCoefficient,
                     NonzeroInnerConstant, SingularDerivative,
                     ZeroConstantTerm)
from .generators import (Factor, LargeFunctionSpec, SchwarzFunction,
                         identity_schwarz, make_large_function,
                         random_large_function, random_mobius_bounded,
                         random_polynomial, random_schwarz)
from .geometry import (Cover, DistanceEstimate, boundary_distance,
                       density_distance_check, disk_identity_cover,
                       hyperbolic_density, q_cover, spec_cover)
from .harmonic import HarmonicPair, build_pair, harmonic_bohr_check
from .modular import (E_HALF_PI, E_PI, CoveringParameter, a_coeffs,
                      collision_search, j_coeffs_exact, j_eval, j_deriv,
                      j_max_modulus, j_series, q_eval, q_series,
                      univalence_probe)
from .series import EvalPoint, TruncatedSeries, exp_series, geometric_series
from .sweeps import SUITE_NAMES, run_suite
