"""BCH codes over GF(q): field towers, cyclotomic cosets, leader formulas, duals and distances."""

from __future__ import annotations

from .codes import (
    BchCode,
    DefiningSet,
    ParamsReport,
    bch_code,
    bose_distance,
    defining_set,
    dimension_closed_form,
    dualize,
    dually_bch_closed_form,
    generator_polynomial,
    is_dually_bch_direct,
    params_report,
    tilde_code,
    tilde_dual_narrow_sense,
)
from .cosets import CosetContext, all_cosets, coset_of, k_largest_leaders, leader_of, leader_table, mult_order
from .errors import BchAtlasError
from .leaders import FamilyTag, family_length

__version__ = "0.1.0"
