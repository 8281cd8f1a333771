"""Calkin-Wilf trees of quadratic surds: left-positive paths and continued fractions."""

from ._kernel import BACKEND
from .cf import (
    CfExpansion,
    DirectionRun,
    Orientation,
    QuadraticPoly,
    cf_expand,
    check_convergent_identity,
    check_run_identities,
    convergents,
    direction_runs,
    galois_check,
    is_reduced_surd,
    lpp_cf_agreement_sqrt,
    reduced_from_poly,
    sqrt_cf,
)
from .core import (
    QuadraticSurd,
    SignedSurd,
    conjugate,
    floor_surd,
    left_child,
    left_parent,
    make_surd,
    neg_conjugate,
    normalize,
    reciprocal,
    right_child,
    right_parent,
    same_value,
    shift,
)
from .errors import *  # noqa: F403
from .lpp import (
    LppTrace,
    Step,
    check_unique_parentage,
    irrationality_certificate,
    lpp_step,
    palindrome_checks,
    trace_lpp,
)
from .notation import format_surd, parse_rational, parse_surd
from .oracle import oracle_cf, oracle_floor
from .render import build_tree, classic_cw_sequence, emit

__version__ = "0.1.0"
