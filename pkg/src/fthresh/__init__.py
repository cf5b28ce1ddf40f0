"""F-thresholds of monomial ideals on normal affine toric rings, in exact arithmetic."""
from .cones import Cone, DualPair, gorenstein_data, hilbert_basis, is_simplicial, is_smooth
from .errors import FthreshError
from .ideals import (MonomialIdeal, is_m_primary, make_ideal, maximal_monomial_ideal,
                     newton_polyhedron)
from .oracle import NuQuery, OracleConfig, convergence_table, nu, nu_search
from .thresholds import (JumpingChain, ThresholdValue, f_threshold, f_threshold_candidates,
                         fpt, jumping_coefficients, lambda_value, mu_value, regularity_probe)

__version__ = "0.1.0"
