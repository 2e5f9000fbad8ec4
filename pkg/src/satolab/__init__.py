"""Exact experiments on the Sato-Tate distribution of y^2 = x^3 + ax + b over F_q."""

from .beurling import IntervalJ, SelbergPolynomial, chi_hat, paired_coeff, selberg
from .chebyshev import cos_combination, lucas_w, u_poly
from .classnumber import HurwitzValue, QuadForm, hurwitz, reduced_forms
from .curves import (
    CurveParams,
    TraceHistogram,
    aut_size,
    orbit,
    point_count,
    trace_histogram,
    verify_deuring,
)
from .ff import FieldContext, FieldElement, field_for_q, make_field
from .modforms import dim_sk, miller_basis, trace_tk_mf
from .satotate import (
    AngleInterval,
    DiscrepancyRow,
    count_NI,
    discrepancy_table,
    exponent_fit,
    moment_sum,
    mu_st,
    sandwich,
)
from .traceformula import ESBreakdown, curve_cheb_sum_bound, hurwitz_cheb_sum, trace_tk_es

__version__ = "0.1.0"
