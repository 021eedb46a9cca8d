from __future__ import annotations

import json
from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bch_atlas.codes import (
    REPORT_FIELDS,
    DefiningSet,
    bch_code,
    bose_distance,
    defining_set,
    dimension_closed_form,
    dual_mask,
    dualize,
    dually_bch_closed_form,
    generator_polynomial,
    is_dually_bch_direct,
    params_report,
    tilde_code,
    tilde_dual_narrow_sense,
)
from bch_atlas.cosets import CosetContext, leader_table
from bch_atlas.errors import DeltaOutOfRange, IntegralityViolation, RangeWraparound, Unsupported
from bch_atlas.gf import Poly, build_tower, minimal_polynomial, tower_for
from bch_atlas.leaders import FamilyTag, anti_delta, family_length, primitive_delta, proj_delta1

P, A, J = FamilyTag.PRIMITIVE, FamilyTag.ANTI, FamilyTag.PROJECTIVE


def ctx(q, n):
    return CosetContext.of(q, n)


def test_defining_set_examples():
    T = defining_set(ctx(2, 63), 5)
    assert len(T) == 12 and 63 - len(T) == 51
    assert T.coset_leaders == (1, 3)
    assert bch_code(A, 2, 4, 9).dimension == 53
    assert bch_code(A, 2, 5, 149).dimension == 16


def test_defining_set_rejects_bad_ranges():
    with pytest.raises(DeltaOutOfRange):
        defining_set(ctx(2, 15), 2, b=0)
    with pytest.raises(DeltaOutOfRange):
        defining_set(ctx(2, 15), 1)
    with pytest.raises(RangeWraparound):
        defining_set(ctx(2, 15), 10, b=8)


def test_generator_examples():
    t = build_tower(2, 1, 4)
    assert generator_polynomial(bch_code(P, 2, 4, 2), t) == minimal_polynomial(t, 15, 1)
    assert generator_polynomial(bch_code(P, 2, 4, 2), t).coeffs == (1, 1, 0, 0, 1)
    code = bch_code(P, 2, 4, 7, tower=t)
    assert code.dimension == 5 and code.generator.degree == 10
    assert code.generator.divides(Poly.x_pow_minus_one(t.mid, 15))


def _set(q, n, residues):
    c = ctx(q, n)
    mask = np.zeros(n, dtype=bool)
    mask[list(residues)] = True
    return DefiningSet(c, 1, 2, mask, ())


def test_dualize_extremes():
    assert dualize(_set(2, 15, [])) == frozenset(range(15))
    assert dualize(_set(2, 15, range(15))) == frozenset()


def test_dually_direct_examples():
    assert is_dually_bch_direct(bch_code(P, 2, 6, 4)).verdict is False
    assert is_dually_bch_direct(bch_code(P, 2, 6, 3)).verdict is True
    assert is_dually_bch_direct(bch_code(A, 3, 2, 10, b=2)).verdict is True


def test_dually_zero_code_flag():
    v = is_dually_bch_direct(tilde_code(2, 15, 15))
    assert v.verdict and v.zero_code
    assert not is_dually_bch_direct(bch_code(P, 2, 4, 15)).zero_code


def test_dually_closed_form_examples():
    assert dually_bch_closed_form(P, 3, 4, 2, 2) is False
    assert dually_bch_closed_form(P, 2, 6, 2, 2) is True
    assert dually_bch_closed_form(J, 4, 5, 233, 2) is True
    with pytest.raises(Unsupported):
        dually_bch_closed_form(A, 2, 5, 100, 2)


def test_bose_examples():
    # C_1 u C_3 misses 5; adding C_5 extends the run to 1..6
    assert bose_distance(defining_set(ctx(2, 15), 5)) == 5
    assert bose_distance(defining_set(ctx(2, 15), 6)) == 7
    assert bose_distance(defining_set(ctx(2, 15), 7)) == 7
    assert bose_distance(defining_set(ctx(2, 63), 29)) >= 29


def test_tilde_examples():
    assert tilde_code(2, 63, 2).dimension == 56
    assert tilde_code(2, 63, 3).dimension == 56
    assert tilde_code(3, 80, 2).dimension == 75
    for delta, want in [(3, True), (4, False), (28, True), (27, False), (31, True), (32, False)]:
        assert tilde_dual_narrow_sense(2, 6, delta) is want
        assert tilde_dual_narrow_sense(2, 6, delta, method="direct") is want


def test_dimension_examples():
    assert dimension_closed_form(A, 2, 4, 9).k == 53
    assert dimension_closed_form(A, 2, 5, 31).k == 206
    assert dimension_closed_form(A, 2, 5, 11).k == 291
    assert dimension_closed_form(J, 4, 5, 233).k == 6
    assert dimension_closed_form(J, 4, 5, 229).k == 11
    with pytest.raises(Unsupported):
        dimension_closed_form(J, 4, 5, 100)


def test_params_report_examples():
    r = params_report(A, 2, 5, 149)
    assert (r.dim_oracle, r.dim_formula, r.dual_dim) == (16, 16, 325)
    assert "claimed dual distance window [3, 4]" in r.notes
    assert "dual distance window confirmed" in r.notes
    assert r.d_exact is not None and r.d_exact >= 149
    assert params_report(A, 3, 3, 101, exhaustive=False).dim_oracle == 10
    r = params_report(J, 4, 5, 229, exhaustive=False)
    assert r.dim_oracle == r.dim_formula == 11


def test_params_report_json_layout():
    d = params_report(A, 2, 4, 9).to_dict()
    assert tuple(d) == REPORT_FIELDS
    assert json.loads(json.dumps(d)) == d
    assert d["s"] == 4 and d["m"] == 8


def test_label_reading_is_recorded():
    # an example label equals the dimension of the code at a special distance
    r = params_report(A, 2, 4, 69, exhaustive=False, dual_search=False)
    assert any("special delta 5" in note for note in r.notes)


# ------------------------------------------------------------------ properties

SMALL = [(P, 2, 4), (P, 2, 6), (P, 3, 3), (A, 2, 4), (A, 3, 2), (A, 2, 5), (J, 3, 4), (J, 4, 4), (J, 4, 5), (P, 4, 3)]


@given(st.sampled_from(SMALL), st.data())
def test_dimension_and_closure(case, data):
    family, q, p = case
    n, _ = family_length(family, q, p)
    b = data.draw(st.integers(1, 3))
    delta = data.draw(st.integers(2, n - b + 1))
    code = bch_code(family, q, p, delta, b)
    T = code.defining_set
    assert code.dimension + len(T) == n
    dual = dualize(T)
    assert len(dual) == n - len(T) == code.dimension
    for r in T.residues:
        assert (r * q) % n in T
    for r in dual:
        assert (r * q) % n in dual
    assert set(range(b, b + delta - 1)) <= set(T.residues)


@pytest.mark.parametrize("q,m,delta", [(2, 4, 5), (2, 4, 7), (3, 2, 4), (2, 5, 7), (4, 2, 6), (3, 3, 5)])
def test_generator_roots_are_exactly_T(q, m, delta):
    n = q**m - 1
    t = tower_for(q, n)
    code = bch_code(P, q, m, delta, tower=t)
    g = code.generator
    assert g.degree == len(code.defining_set)
    for i in range(n):
        root = g(t.top(t.beta_pow(i))).code == 0
        assert root == (i in code.defining_set)


def test_generator_of_tilde_has_factor_x_minus_1():
    t = tower_for(2, 15)
    code = tilde_code(2, 15, 3, tower=t)
    assert code.generator(t.top(1)).code == 0
    assert code.dimension == 15 - 5


DUALLY_GRID = [(P, 2, 6), (P, 3, 4), (P, 2, 7), (A, 2, 4), (A, 3, 2), (A, 3, 3), (J, 3, 4), (J, 4, 4), (J, 4, 5), (J, 5, 4)]


@given(st.sampled_from(DUALLY_GRID), st.integers(1, 2), st.data())
def test_dually_closed_form_matches_direct(case, b, data):
    family, q, p = case
    n, _ = family_length(family, q, p)
    delta = data.draw(st.integers(2, n - b + 1 if b == 2 else n - 1))
    try:
        f = dually_bch_closed_form(family, q, p, delta, b)
    except Unsupported:
        return
    assert f == is_dually_bch_direct(bch_code(family, q, p, delta, b)).verdict


def test_dually_witness_reproduces_dual():
    for family, q, p in DUALLY_GRID:
        n, _ = family_length(family, q, p)
        tab = leader_table(ctx(q, n))
        for delta in range(2, n, 7):
            code = bch_code(family, q, p, delta, table=tab)
            v = is_dually_bch_direct(code, tab)
            if v.verdict and not v.zero_code:
                witness = defining_set(ctx(q, n), v.delta, max(v.b, 1), tab) if v.b else None
                if witness is not None:
                    assert np.array_equal(witness.mask, dual_mask(code.defining_set))


@pytest.mark.parametrize("q,m", [(3, 4), (3, 5), (4, 4), (4, 5), (5, 4)])
def test_top_leader_in_dual_for_small_delta_b2(q, m):
    n = (q**m - 1) // (q - 1)
    top = proj_delta1(q, m).value
    tab = leader_table(ctx(q, n))
    for delta in range(2, q):
        assert top in dualize(bch_code(J, q, m, delta, 2, table=tab).defining_set)


@pytest.mark.parametrize("q,s", [(2, 8), (2, 10)])
def test_tilde_dual_in_band_is_single_full_coset(q, s):
    n, _ = family_length(A, q, s)
    tab = leader_table(ctx(q, n))
    d1, d2 = anti_delta(q, s, 1).value, anti_delta(q, s, 2).value
    assert gcd((q ** (s - 1) + 1) // (q + 1), n) == 1
    for delta in (d2 + 1, (d1 + d2) // 2, d1):
        code = tilde_code(q, n, delta, family=A, table=tab)
        dual = sorted(dualize(code.defining_set))
        assert len(dual) == 2 * s
        assert len({int(tab.leader[r]) for r in dual}) == 1


@pytest.mark.parametrize("q,s", [(2, 4), (2, 5), (3, 3), (3, 4), (2, 6), (2, 7), (4, 3)])
def test_range_dimensions_match_oracle(q, s):
    n, _ = family_length(A, q, s)
    tab = leader_table(ctx(q, n))
    hits = 0
    for delta in range(2, min(n, q ** (s + 1)) + 1):
        try:
            f = dimension_closed_form(A, q, s, delta, source="low")
        except Unsupported:
            continue
        assert f.k == n - int(tab.cumulative_size[delta - 1]), (delta, f)
        hits += 1
    assert hits


@pytest.mark.parametrize(
    "q,s",
    [(2, 5), (2, 4), (2, 7), (2, 6), (3, 4), (4, 4)]
    + [pytest.param(3, 3, marks=pytest.mark.xfail(strict=True, reason="a = q-2 branch disagrees"))],
)
def test_special_dimensions_match_oracle(q, s):
    n, _ = family_length(A, q, s)
    tab = leader_table(ctx(q, n))
    from bch_atlas.codes import _special_deltas

    for delta in _special_deltas(q, s):
        f = dimension_closed_form(A, q, s, delta, source="special")
        assert f.k == n - int(tab.cumulative_size[delta - 1]), (delta, f)


@pytest.mark.parametrize("q,m", [(2, 6), (3, 4), (2, 8)])
def test_primitive_run_dimension(q, m):
    """The stated dimension misses the C_0-free count by one at every rank."""
    n = q**m - 1
    tab = leader_table(ctx(q, n))
    for i in range(3, 5):
        try:
            delta = primitive_delta(q, m, i).value
        except Exception:
            continue
        f = dimension_closed_form(P, q, m, delta)
        assert f.k + 1 == n - int(tab.cumulative_size[delta - 1])


def test_integrality_violation_surfaces():
    with pytest.raises(IntegralityViolation):
        anti_delta(3, 6, 2)
