from .exceptions import (
    HausdorffError,
    InputError,
    DomainError,
    ParseError,
    UnsupportedFormError,
    PreconditionError,
    BudgetError,
    InconsistencyError,
)
from .exact import binomial, rat_from_string, rat_to_string, to_rational
from .poly import (
    Poly,
    RationalSeq,
    PartialFractions,
    PoleTerm,
    poly_from_shift_roots,
    partial_fractions,
    reconstruct_check,
    coefficient_sum_identity,
)
from .oracle import (
    Property,
    Verdict,
    Budget,
    Witness,
    DiffReport,
    forward_diff_1d,
    forward_diff_general,
    mixed_diff_2d,
    scan_1d,
    scan_2d,
)
from .weight import (
    SignStatus,
    ProofRoute,
    WeightExpression,
    SignReport,
    weight_from_partial_fractions,
    moment_reconstruct,
    sign_analyze,
    partial_sum_sign_test,
    dump_weight_csv,
    ca_exp_spotcheck,
)

import hausdorff.typing
import hausdorff.criteria
from .net2d import BiCompNet, BiPolyNet, CAJCMNet, bicomp_iff, bipoly_iff, cajcm_classify
import hausdorff.cli

_debug = False
