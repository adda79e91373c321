"""Schatten-q perturbation bounds for truncated SVD estimation.

Tools to compute truncated Schatten norms, evaluate sharp perturbation
bounds for the best rank-r approximation of a noisy matrix, construct
adversarial instances that attain those bounds, and reproduce the
accompanying Monte Carlo studies.
"""

from .bounds import (BoundCheck, BoundReport, PerturbationInstance,
                     bound_rank_spectral, bound_refined_projection,
                     bound_report, bound_sin_theta_thm5, bound_thm1,
                     bound_thm2, bound_triangle, bound_wedin_reconstruction,
                     bound_wedin_sin_theta, estimate_low_rank,
                     estimation_constant, projection_error, sin_theta_errors)
from .constructions import (MinimaxPair, TightnessParams, decaying_noise,
                            example1_spectrum, minimax_pair,
                            tightness_expected_error, tightness_instance)
from .estimator import RankTruncatedSVD
from .experiments import (ExperimentConfig, ExperimentResult, emit_csv,
                          ordering_checks, run_estimation_sweep,
                          run_projection_sweep, run_sweep)
from .linalg import (SvdFactors, load_matrix, projector, residual,
                     sample_gaussian, sample_haar_frame, save_matrix, svd,
                     truncate)
from .norms import (KaramataResult, SchattenIndex, dual_witness,
                    karamata_holds, ky_fan, schatten_norm,
                    truncated_schatten_norm, vector_schatten)
from .subspaces import (PrincipalAngles, principal_angles, procrustes_align,
                        projection_distance, sin_theta_distance)
from .verification import CheckResult, run_scope

__version__ = "0.1.0"

__all__ = [
    "BoundCheck", "BoundReport", "CheckResult", "ExperimentConfig",
    "ExperimentResult", "KaramataResult", "MinimaxPair", "PerturbationInstance",
    "PrincipalAngles", "RankTruncatedSVD", "SchattenIndex", "SvdFactors",
    "TightnessParams", "bound_rank_spectral", "bound_refined_projection",
    "bound_report", "bound_sin_theta_thm5", "bound_thm1", "bound_thm2",
    "bound_triangle", "bound_wedin_reconstruction", "bound_wedin_sin_theta",
    "decaying_noise", "dual_witness", "emit_csv", "estimate_low_rank",
    "estimation_constant", "example1_spectrum", "karamata_holds", "ky_fan",
    "load_matrix", "minimax_pair", "ordering_checks", "principal_angles",
    "procrustes_align", "projection_distance", "projection_error",
    "projector", "residual", "run_estimation_sweep", "run_projection_sweep",
    "run_scope", "run_sweep", "sample_gaussian", "sample_haar_frame",
    "save_matrix", "schatten_norm", "sin_theta_distance", "sin_theta_errors",
    "svd", "tightness_expected_error", "tightness_instance",
    "truncate", "truncated_schatten_norm", "vector_schatten",
]
