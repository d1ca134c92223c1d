"""
Exact tools for Hamburger and Stieltjes moment sequences: Hankel minors,
orthogonal-polynomial data at the origin, determinacy diagnostics, and
rigidity constructions (prepend regions, indeterminate extensions,
single-entry perturbation intervals).
"""

from .core import (DEFAULT_PRECISION, AtomicMeasure, Kind, MomentSequence, Rat, Real, as_rat, convex_combine,
                   desymmetrize, load_sequence, moments_from_atoms, perturb_entry, save_sequence, symmetrize,
                   to_real, trim)
from .corpus import corpus_get, list_corpus
from .determinacy import (DiagParams, IndexWindow, RatioData, SeriesDiag, SeriesVerdict, Status, Verdict,
                          index_convexity_check, index_estimate, indeterminacy_diag, ratio_criterion,
                          series_diag, stieltjes_index_estimate)
from .errors import (ConstructionError, DegenerateError, DomainError, KindError, MomentError,
                     NotAMomentPrefixError, NotSymmetricError, PrecisionError, ShapeError, SingularPivotError,
                     TruncationError)
from .hankel import (FMatrix, GammaPolynomial, MinorTable, PsdStatus, PsdVerdict, bordered_minor, f_matrix,
                     gamma_polynomial, hadamard_check, max_order, minor, psd_prefix, stieltjes_prefix_check,
                     sylvester_identity_check)
from .orthopoly import (AbcdDerivatives, Recurrence, ZeroData, abcd_derivatives, eval_monic,
                        moments_from_recurrence, nevanlinna_truncated, parseval_partial,
                        recurrence_from_moments, zero_data)
from .rigidity import (Classification, PerturbInterval, Placement, PrependRegion, RigidityReport,
                       extend_indeterminate, perturb_interval, prepend, prepend_region, rigidity_report,
                       stieltjes_extend, zeroth_moment_slack)

__version__ = "0.1.0"
