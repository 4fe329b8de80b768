"""
Módulo de verificação - suítes de propriedades executadas pelo comando verify
"""

from .checks import (
    IMAGE_CHECKS, CheckOutcome, check_oracle_equivalence, check_rank_lemma, check_tie_break,
    run_image_checks
)
from .random_data import random_upper_triangular, trial_image, trial_matrix, trial_rng
from .report_models import CheckSummary, VerificationReport
from .runner import random_images, run_verification

__all__ = [
    'IMAGE_CHECKS', 'CheckOutcome', 'check_oracle_equivalence', 'check_rank_lemma',
    'check_tie_break', 'run_image_checks',
    'random_upper_triangular', 'trial_image', 'trial_matrix', 'trial_rng',
    'CheckSummary', 'VerificationReport', 'random_images', 'run_verification',
]
