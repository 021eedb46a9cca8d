"""BCH codes: defining sets, dimensions, generators, duals and dually-BCH tests."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd

import numpy as np

from .cosets import CosetContext, LeaderTable, leader_table
from .errors import (
    DeltaOutOfRange,
    IntegralityViolation,
    LengthMismatch,
    RangeWraparound,
    Unsupported,
    WrongFamily,
)
from .gf import FieldTower, Poly, minimal_polynomial, prime_power, tower_for
from .leaders import FamilyTag, anti_delta, family_length, primitive_delta, primitive_max_rank, proj_delta1, proj_delta2


@dataclass(frozen=True, eq=False)
class DefiningSet:
    """Union of the cosets of b, ..., b + delta - 2 (plus C_0 for tilde codes)."""

    ctx: CosetContext
    b: int
    delta: int
    mask: np.ndarray
    coset_leaders: tuple[int, ...]
    with_zero: bool = False

    @cached_property
    def residues(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.nonzero(self.mask)[0])

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, r: int) -> bool:
        return bool(self.mask[r % self.ctx.n])


def _table(ctx: CosetContext, table: LeaderTable | None) -> LeaderTable:
    if table is None:
        return leader_table(ctx)
    if table.ctx != ctx:
        raise LengthMismatch("leader table built for a different context")
    return table


def _union_mask(tab: LeaderTable, leaders) -> np.ndarray:
    mask = np.isin(tab.leader, np.asarray(sorted(leaders), dtype=np.int64))
    mask.flags.writeable = False
    return mask


def defining_set(ctx: CosetContext, delta: int, b: int = 1, table: LeaderTable | None = None) -> DefiningSet:
    n = ctx.n
    if not 2 <= delta <= n:
        raise DeltaOutOfRange(f"delta={delta} outside [2, {n}]")
    if b < 1:
        raise DeltaOutOfRange(f"b={b}: starting exponent must be positive")
    if b + delta - 2 > n - 1:
        raise RangeWraparound(f"range {b}..{b + delta - 2} wraps modulo {n}")
    tab = _table(ctx, table)
    leaders = tuple(sorted({int(x) for x in tab.leader[b : b + delta - 1]}))
    return DefiningSet(ctx, b, delta, _union_mask(tab, leaders), leaders)


@dataclass(frozen=True, eq=False)
class BchCode:
    family: FamilyTag
    ctx: CosetContext
    b: int
    delta: int
    defining_set: DefiningSet
    generator: Poly | None = None

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def dimension(self) -> int:
        return self.ctx.n - len(self.defining_set)

    @property
    def tilde(self) -> bool:
        return self.defining_set.with_zero


def family_context(family: FamilyTag, q: int, param: int) -> CosetContext:
    prime_power(q)
    n, _ = family_length(FamilyTag(family), q, param)
    return CosetContext.of(q, n)


def bch_code(
    family: FamilyTag | str,
    q: int,
    param: int,
    delta: int,
    b: int = 1,
    table: LeaderTable | None = None,
    tower: FieldTower | None = None,
) -> BchCode:
    """Build C_(q,n,delta,b) for a family; the generator is attached when a tower is given."""
    family = FamilyTag(family)
    ctx = family_context(family, q, param) if table is None else table.ctx
    T = defining_set(ctx, delta, b, table)
    code = BchCode(family, ctx, b, delta, T)
    if tower is not None:
        code = BchCode(family, ctx, b, delta, T, generator_polynomial(code, tower))
    return code


def _tower_for_ctx(ctx: CosetContext, tower: FieldTower | None) -> FieldTower:
    if tower is None:
        return tower_for(ctx.q, ctx.n)
    if tower.q != ctx.q:
        raise LengthMismatch(f"tower over GF({tower.q}) for a code over GF({ctx.q})")
    return tower.for_length(ctx.n) if tower.n != ctx.n else tower


def generator_polynomial(code: BchCode, tower: FieldTower | None = None) -> Poly:
    """Product of the distinct minimal polynomials of the leaders in T."""
    tower = _tower_for_ctx(code.ctx, tower)
    leaders = list(code.defining_set.coset_leaders)
    if code.defining_set.with_zero and 0 not in leaders:
        leaders = [0] + leaders
    polys = [minimal_polynomial(tower, code.n, r) for r in leaders]
    return reduce(lambda f, g: f * g, polys, Poly(tower.mid, (1,)))


# ---------------------------------------------------------------------------
# Duals
# ---------------------------------------------------------------------------


def dual_mask(T: DefiningSet | np.ndarray) -> np.ndarray:
    mask = T.mask if isinstance(T, DefiningSet) else np.asarray(T, dtype=bool)
    n = len(mask)
    neg = (-np.arange(n)) % n
    return ~mask[neg]


def dualize(T: DefiningSet) -> frozenset[int]:
    """T-perp = { r : -r mod n not in T }."""
    return frozenset(int(x) for x in np.nonzero(dual_mask(T))[0])


@dataclass(frozen=True)
class DuallyBchVerdict:
    verdict: bool
    b: int | None = None
    delta: int | None = None
    breaking_residue: int | None = None
    zero_code: bool = False

    @property
    def narrow(self) -> bool:
        """Witness starts at 0 or 1."""
        return self.verdict and self.b in (0, 1)


def _runs(mask: np.ndarray) -> list[tuple[int, int]]:
    """Maximal [start, stop) runs of True in mask, without wraparound."""
    padded = np.concatenate(([False], mask, [False])).astype(np.int8)
    edges = np.diff(padded)
    starts = np.nonzero(edges == 1)[0]
    stops = np.nonzero(edges == -1)[0]
    return list(zip(starts.tolist(), stops.tolist()))


def consecutive_cover(mask: np.ndarray, tab: LeaderTable) -> DuallyBchVerdict:
    """Is the coset-closed set ``mask`` a union of cosets of a consecutive range?"""
    if not mask.any():
        return DuallyBchVerdict(True, zero_code=True)
    wanted = int((mask & tab.is_leader).sum())
    best_run, best_cov = None, -1
    for start, stop in _runs(mask):
        lead = tab.leader[start:stop]
        uniq, first = np.unique(lead, return_index=True)
        if len(uniq) == wanted:
            length = int(first.max()) + 1
            return DuallyBchVerdict(True, b=start, delta=length + 1)
        if len(uniq) > best_cov:
            best_run, best_cov = (start, stop), len(uniq)
    covered = set(np.unique(tab.leader[best_run[0] : best_run[1]]).tolist())
    missing = [int(x) for x in np.nonzero(mask & tab.is_leader)[0] if int(x) not in covered]
    return DuallyBchVerdict(False, breaking_residue=min(missing))


def is_dually_bch_direct(code: BchCode, table: LeaderTable | None = None) -> DuallyBchVerdict:
    tab = _table(code.ctx, table)
    return consecutive_cover(dual_mask(code.defining_set), tab)


def _family_top(family: FamilyTag, q: int, param: int) -> int:
    if family is FamilyTag.PRIMITIVE:
        return primitive_delta(q, param, 1).value
    if family is FamilyTag.ANTI:
        return anti_delta(q, param, 1).value
    return proj_delta1(q, param).value


def dually_bch_closed_form(family: FamilyTag | str, q: int, param: int, delta: int, b: int) -> bool:
    family = FamilyTag(family)
    n, m = family_length(family, q, param)
    if b not in (1, 2):
        raise Unsupported(f"b={b} is not characterized")
    if family is FamilyTag.PRIMITIVE:
        if q == 2 and m < 6 or q >= 3 and m < 2:
            raise Unsupported(f"primitive q={q}, m={m} is not characterized")
        r = (m - 1) // 2
        if b == 1:
            if q == 2:
                return delta in (2, 3) or 2 ** (m - 1) - 2**r <= delta <= n
            return delta == 2 or (q - 1) * q ** (m - 1) - q**r <= delta <= n
        if q == 2:
            return delta == 2 or 2 ** (m - 1) - 2**r - 1 <= delta <= n - 1
        return (q - 1) * q ** (m - 1) - q**r - 1 <= delta <= q**m - 2
    if family is FamilyTag.ANTI:
        s = param
        if s < 2:
            raise Unsupported("s must be at least 2")
        top = _family_top(family, q, s)
        if b == 1:
            if q == 2:
                return top + 1 <= delta <= n
            if m == 4:
                return delta == 2 or top <= delta <= n
            return top + 1 <= delta <= n
        if q >= 3:
            if s == 2:
                return top - 1 <= delta <= n - 1
            return top <= delta <= n - 1
        if s % 2 == 0:
            return top <= delta <= n - 1
        raise Unsupported(f"anti q=2, odd s={s}, b=2 is not characterized")
    if q < 3 or m < 4:
        raise Unsupported(f"projective q={q}, m={m} is not characterized")
    top = _family_top(family, q, m)
    if b == 1:
        return top + 1 <= delta <= n
    return top <= delta <= n - 1


def bose_distance(T: DefiningSet) -> int:
    """Largest d with b, ..., b + d - 2 all in T."""
    r = T.b
    n = T.ctx.n
    while r < n and T.mask[r]:
        r += 1
    return r - T.b + 1


# ---------------------------------------------------------------------------
# Tilde codes
# ---------------------------------------------------------------------------


def _family_param(family: FamilyTag, q: int, n: int) -> int:
    for param in range(1, 64):
        length, _ = family_length(family, q, param)
        if length == n:
            return param
        if length > n:
            break
    raise WrongFamily(f"n={n} is not a {family.value} length for q={q}")


def tilde_code(
    q: int,
    n: int,
    delta: int,
    tower: FieldTower | None = None,
    family: FamilyTag | str = FamilyTag.PRIMITIVE,
    table: LeaderTable | None = None,
) -> BchCode:
    """Code generated by (x - 1) g(x): defining set T plus C_0, with b = 1."""
    family = FamilyTag(family)
    _family_param(family, q, n)
    ctx = CosetContext.of(q, n) if table is None else table.ctx
    T = defining_set(ctx, delta, 1, table)
    mask = T.mask.copy()
    mask[0] = True
    mask.flags.writeable = False
    leaders = (0,) + tuple(x for x in T.coset_leaders if x != 0)
    Tz = DefiningSet(ctx, 1, delta, mask, leaders, with_zero=True)
    code = BchCode(family, ctx, 1, delta, Tz)
    if tower is not None:
        code = BchCode(family, ctx, 1, delta, Tz, generator_polynomial(code, tower))
    return code


def tilde_dual_narrow_sense_formula(q: int, m: int, delta: int) -> bool:
    r = (m - 1) // 2
    if q == 2:
        if m < 6:
            raise Unsupported("q=2 needs m >= 6")
        return delta in (2, 3) or 2 ** (m - 1) - 2**r <= delta <= 2 ** (m - 1) - 1
    if m < 2:
        raise Unsupported("q >= 3 needs m >= 2")
    return delta == 2 or (q - 1) * q ** (m - 1) - q**r <= delta <= (q - 1) * q ** (m - 1) - 1


def tilde_dual_narrow_sense_direct(q: int, m: int, delta: int, table: LeaderTable | None = None) -> bool:
    """Is the dual of the tilde code equal to a union C_1 u ... u C_(r-1), r >= 2?"""
    n = q**m - 1
    code = tilde_code(q, n, delta, family=FamilyTag.PRIMITIVE, table=table)
    tab = _table(code.ctx, table)
    mask = dual_mask(code.defining_set)
    if not mask.any() or mask[0]:
        return False
    r = 1
    while r < n and mask[r]:
        r += 1
    wanted = int((mask & tab.is_leader).sum())
    return len(np.unique(tab.leader[1:r])) == wanted


def tilde_dual_narrow_sense(q: int, m: int, delta: int, method: str = "formula", table: LeaderTable | None = None) -> bool:
    if method == "formula":
        return tilde_dual_narrow_sense_formula(q, m, delta)
    if method == "direct":
        return tilde_dual_narrow_sense_direct(q, m, delta, table)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Closed-form dimensions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DimensionFormula:
    k: int
    formula_id: str


def _anti_base(n: int, s: int, q: int, d: int) -> int:
    return n - 2 * s * (d - 1) + 2 * s * ((d - 1) // q)


def _anti_band(q: int, s: int, delta: int) -> DimensionFormula | None:
    """Dimensions for delta in [delta_2, delta_1]."""
    try:
        d1 = anti_delta(q, s, 1).value
        d2 = anti_delta(q, s, 2).value
    except (Unsupported, IntegralityViolation):
        return None
    if not d2 <= delta <= d1:
        return None
    if q % 2 and s in (3, 4, 6):
        band, second = {3: (4, 10), 4: (9, 17), 6: (13, 25)}[s]
    elif s > 4 and s % 2:
        band, second = s + 1, 3 * s + 1
    elif s > 4 and s != 6:
        band, second = 2 * s + 1, 4 * s + 1
    else:
        return None
    if delta == d2:
        return DimensionFormula(second, "anti-dim-second")
    return DimensionFormula(band, "anti-dim-band")


def _anti_special(q: int, s: int, delta: int) -> DimensionFormula | None:
    n = (q ** (2 * s) - 1) // (q + 1)
    base = _anti_base(n, s, q, delta)
    hits: list[tuple[int, DimensionFormula]] = []
    if s % 2 and (s >= 5 or q >= 3 and s >= 3):
        u = (q**s - 1) // (q - 1)
        a, r = divmod(delta, u)
        if r == 0 and 1 <= a <= q - 1:
            if a <= q - 3:
                k = base + s * (((delta - 1) * (q + 1)) // (q**s + 1))
                hits.append((a, DimensionFormula(k, "anti-dim-special-low")))
            elif a == q - 2:
                hits.append((a, DimensionFormula(base + s * (q + 1), "anti-dim-special-mid")))
            else:
                hits.append((a, DimensionFormula(n - s * ((q - 1) * (2 * q ** (s - 1) - 3) - 2), "anti-dim-special-top")))
        v = (q**s + 1) // (q + 1)
        a, r = divmod(delta, v)
        if r == 0 and 1 <= a <= q - 1:
            if a == 1:
                hits.append((a, DimensionFormula(base, "anti-dim-special-plus1")))
            else:
                k = n - s * (2 * delta - a - 1) + 2 * s * ((delta - 1) // q)
                hits.append((a, DimensionFormula(k, "anti-dim-special-plus")))
    elif s % 2 == 0 and s >= 4:
        w = (q**s - 1) // (q * q - 1)
        a, r = divmod(delta, w)
        if r == 0 and 1 <= a <= q - 1:
            hits.append((a, DimensionFormula(base, "anti-dim-special-even")))
    if not hits:
        return None
    hits.sort(key=lambda h: h[0])
    if len({h[1].k for h in hits}) > 1:
        raise IntegralityViolation(f"delta={delta} matches special shapes with different dimensions")
    return hits[0][1]


def _anti_low(q: int, s: int, delta: int) -> DimensionFormula | None:
    n = (q ** (2 * s) - 1) // (q + 1)
    base = _anti_base(n, s, q, delta)
    if s % 2 and (q >= 3 and s >= 3 or q == 2 and s >= 5):
        if not 2 <= delta <= q**s + 1:
            return None
        r = (q**s + 1) // (q + 1)  # integral for odd s
        if delta <= r:
            return DimensionFormula(base, "anti-dim-low-1")
        if delta <= (q - 1) * r + 1:
            k = base + s * (((delta - 1) * (q + 1)) // (q**s + 1))
            return DimensionFormula(k, "anti-dim-low-2")
        if delta <= (q ** (s + 1) - 1) // (q + 1) + 2:
            return DimensionFormula(base + s * (q - 1), "anti-dim-low-3")
        if delta >= (q - 1) * q ** (s - 1) + r + 1:
            return DimensionFormula(base + 3 * s * (q - 1), "anti-dim-low-4")
        return None
    if s % 2 == 0 and s >= 4:
        half = -(-q // 2) * q ** (s - 1)
        if 2 <= delta <= half + 1:
            if q % 2 == 0 or 2 * delta <= q**s + 1:
                return DimensionFormula(base, "anti-dim-even-low")
            return DimensionFormula(base + s, "anti-dim-even-low")
        if half + 1 <= delta and delta * (q + 1) <= q ** (s + 1) + 1:
            fl = ((delta - 1) * (q + 1)) // q**s
            if q % 2 == 0:
                k = n - 2 * s * (delta + (q - 2) // 2 - fl) + 2 * s * ((delta - 1) // q)
            else:
                k = n - 2 * s * (delta + (q - 1) // 2 - fl) + 2 * s * ((delta - 1) // q) + s
            return DimensionFormula(k, "anti-dim-even-mid")
    return None


DIMENSION_SOURCES = ("band", "special", "low")


def dimension_closed_form(
    family: FamilyTag | str, q: int, param: int, delta: int, source: str | None = None
) -> DimensionFormula:
    """Closed-form dimension of the narrow-sense code, when a formula covers delta.

    For the anti-primitive length the formulas overlap; by default the
    band formulas near the top leaders win, then the special designed
    distances, then the range formulas.  ``source`` restricts the lookup
    to one of ``DIMENSION_SOURCES``.
    """
    family = FamilyTag(family)
    if source is not None and source not in DIMENSION_SOURCES:
        raise ValueError(f"unknown dimension source {source!r}")
    n, m = family_length(family, q, param)
    if not 2 <= delta <= n:
        raise DeltaOutOfRange(f"delta={delta} outside [2, {n}]")
    found: DimensionFormula | None = None
    if family is FamilyTag.PRIMITIVE:
        for i in range(3, primitive_max_rank(m) + 1):
            if primitive_delta(q, m, i).value == delta:
                found = DimensionFormula(i * m if m % 2 else (2 * i - 1) * m // 2, "primitive-dim-run")
    elif family is FamilyTag.ANTI:
        s = param
        lookups = {"band": _anti_band, "special": _anti_special, "low": _anti_low}
        for name in DIMENSION_SOURCES if source is None else (source,):
            found = lookups[name](q, s, delta)
            if found is not None:
                break
    else:
        try:
            d1 = proj_delta1(q, m).value
            d2 = proj_delta2(q, m).value
        except Unsupported:
            d1 = d2 = None
        if d2 is not None and d2 <= delta <= d1:
            base = m // gcd(m, q - 1)
            found = DimensionFormula(base + m + 1, "proj-dim-second") if delta == d2 else DimensionFormula(base + 1, "proj-dim-band")
    if found is None:
        raise Unsupported(f"no dimension formula for {family.value} q={q} param={param} delta={delta}")
    if not 0 <= found.k <= n:
        raise IntegralityViolation(f"formula {found.formula_id} gives k={found.k} outside [0, {n}]")
    return found


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

REPORT_FIELDS = (
    "family", "q", "m", "s", "n", "b", "delta", "dim_oracle", "dim_formula", "formula_id",
    "bose", "d_lower", "d_upper", "d_exact", "dually_bch_direct", "dually_bch_formula",
    "dual_dim", "notes",
)


def json_value(v):
    """Integers beyond 2^53 become decimal strings."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v) if abs(v) > 2**53 else v
    if isinstance(v, (list, tuple)):
        return [json_value(x) for x in v]
    if isinstance(v, dict):
        return {k: json_value(x) for k, x in v.items()}
    return v


@dataclass
class ParamsReport:
    family: str
    q: int
    m: int
    s: int | None
    n: int
    b: int
    delta: int
    dim_oracle: int
    dim_formula: int | None = None
    formula_id: str | None = None
    bose: int | None = None
    d_lower: int | None = None
    d_upper: int | None = None
    d_exact: int | None = None
    dually_bch_direct: bool | None = None
    dually_bch_formula: bool | None = None
    dual_dim: int | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {k: json_value(getattr(self, k)) for k in REPORT_FIELDS}

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _dual_window_claim(family: FamilyTag, q: int, s: int, delta: int) -> tuple[int, int] | None:
    """Claimed window for the dual distance at delta in [delta_2, delta_1], if any."""
    if family is not FamilyTag.ANTI or s <= 4:
        return None
    try:
        d1, d2 = anti_delta(q, s, 1).value, anti_delta(q, s, 2).value
    except (Unsupported, IntegralityViolation):
        return None
    if not d2 <= delta <= d1:
        return None
    if s % 2:
        return (2, 2) if delta > d2 else (3, 4)
    if s == 6:
        return None
    return (3, 4)


def params_report(
    family: FamilyTag | str,
    q: int,
    param: int,
    delta: int,
    b: int = 1,
    *,
    table: LeaderTable | None = None,
    max_codewords: int | None = None,
    max_syndromes: int | None = None,
    exhaustive: bool = True,
    dual_search: bool = True,
) -> ParamsReport:
    from . import distance as dist

    family = FamilyTag(family)
    n, m = family_length(family, q, param)
    ctx = family_context(family, q, param) if table is None else table.ctx
    tab = _table(ctx, table)
    code = bch_code(family, q, param, delta, b, table=tab)
    k = code.dimension
    rep = ParamsReport(
        family=family.value, q=q, m=m, s=param if family is FamilyTag.ANTI else None,
        n=n, b=b, delta=delta, dim_oracle=k,
    )
    if b == 1:
        try:
            f = dimension_closed_form(family, q, param, delta)
            rep.dim_formula, rep.formula_id = f.k, f.formula_id
            if f.k != k:
                rep.notes.append(f"dimension formula {f.formula_id} gives {f.k}, oracle gives {k}")
        except (Unsupported, IntegralityViolation) as exc:
            rep.notes.append(f"no dimension formula: {exc}")
    rep.bose = bose_distance(code.defining_set)
    lower, upper = rep.bose, dist.sphere_packing_max_d(n, k, q) if k > 0 else n
    exact = None
    if b == 1:
        exact = dist.divisor_multiple_distance(q, n, delta)
        if exact is not None:
            rep.notes.append(f"divisor-multiple rule gives d = {exact}")
    if exhaustive and 0 < k and q**k <= (max_codewords or dist.DEFAULT_MAX_CODEWORDS) and q**k * n <= 2**31:
        try:
            d = dist.exhaustive_min_distance(code, budget=max_codewords)
            if exact is not None and d != exact:
                rep.notes.append(f"exhaustive search gives d = {d}, divisor-multiple rule gives {exact}")
            exact = d
        except Exception as exc:  # budget or field-size limits
            rep.notes.append(f"exhaustive search skipped: {exc}")
    if exact is not None:
        lower = upper = exact
    rep.d_lower, rep.d_upper, rep.d_exact = max(lower, rep.bose), upper, exact
    if k == 0:
        rep.d_lower = rep.d_upper = None
    v = is_dually_bch_direct(code, tab)
    rep.dually_bch_direct = v.verdict
    if v.zero_code:
        rep.notes.append("dual defining set is empty: dual is the whole space")
    try:
        rep.dually_bch_formula = dually_bch_closed_form(family, q, param, delta, b)
    except Unsupported:
        pass
    rep.dual_dim = n - k
    claim = _dual_window_claim(family, q, param, delta) if b == 1 else None
    if claim is not None:
        rep.notes.append(f"claimed dual distance window [{claim[0]}, {claim[1]}]")
        if dual_search:
            try:
                rows = sorted({int(tab.leader[r]) for r in np.nonzero(dual_mask(code.defining_set))[0]})
                res = dist.low_weight_search(rows, n=n, q=q, wmax=4, budget=max_syndromes)
                found = "none of weight <= 4" if res.weight is None else f"weight {res.weight} at {list(res.support)}"
                rep.notes.append(f"dual low-weight search: {found}")
                ok = res.weight is not None and claim[0] <= res.weight <= claim[1]
                rep.notes.append("dual distance window " + ("confirmed" if ok else "NOT confirmed"))
            except Exception as exc:
                rep.notes.append(f"dual low-weight search skipped: {exc}")
    if family is FamilyTag.ANTI and b == 1:
        for alt in _special_deltas(q, param):
            if alt != delta and alt <= n:
                k_alt = n - int(tab.cumulative_size[alt - 1])
                if k_alt == delta:
                    rep.notes.append(f"label {delta} equals the dimension of the code at special delta {alt}")
    return rep


def _special_deltas(q: int, s: int) -> list[int]:
    out = []
    if s % 2:
        u, v = (q**s - 1) // (q - 1), (q**s + 1) // (q + 1)
        out += [a * u for a in range(1, q)] + [a * v for a in range(1, q)]
    else:
        w = (q**s - 1) // (q * q - 1)
        out += [a * w for a in range(1, q)]
    return sorted(set(x for x in out if x >= 2))
