"""Mean length of classical confidence intervals as a function of sample size.

Submodules: ``specfun`` (special functions), ``dist`` (distribution models),
``crossing`` (gamma CDF crossings and critical levels), ``cilength``
(intervals and mean lengths), ``bounds`` (gamma-ratio bounds, E_n),
``mc`` (seeded Monte Carlo), ``nef`` (natural exponential families),
``verify`` (certification suites) and ``cli``.
"""

from .bounds import e_n, e_n_bound_comparison, gamma_ratio, lemma2_check
from .cilength import CiFamily, LengthCurve, monotonicity_scan
from .crossing import (CrossingReport, OrderedGammaPair, alpha_star_gamma_scale,
                       alpha_star_normal_variance, cdf_crossing, density_crossings)
from .dist import GammaSpec, chi_square_as_scaled_gamma
from .errors import AttainableRangeError, ConvergenceError, DomainError, StructuralError
from .mc import McConfig, McReport, coverage_curve, simulate

__version__ = "0.1.0"
