from .report import (
    ConditionReport,
    Criterion,
    Inequality,
    InequalityTrail,
    Status,
    not_applicable,
)
from .characterization import bicase_iff, degree2_iff, degree2_reports, special_case_iff
from .sufficient import ball_conditions, cnpos_check, interlacing_check, main3_partial_sums
from .necessary import PERM_MAX_K, nec_sum_check, perm_necessary
from .suite import IFF_CRITERIA, NECESSARY_CRITERIA, RATIO_CRITERIA, ratio_criteria
