"""Minimum-distance oracles and bounds for cyclic codes over GF(q)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

import numpy as np

from .errors import BudgetExceeded, RedundancyTooLarge
from .gf import Field, FieldTower, PrimeField, tower_for

DEFAULT_MAX_CODEWORDS = 2**24
DEFAULT_MAX_SYNDROMES = 2**26
# bytes held by the partial codeword table during exhaustive enumeration
_TABLE_BYTES = 1 << 25


@dataclass(frozen=True)
class DistanceReport:
    lower: int
    upper: int
    methods: tuple[str, ...] = ()
    work: int = 0

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None


def _scalar_tables(F: Field) -> tuple[np.ndarray, np.ndarray]:
    q = F.size
    add = np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
    mul = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
    return add, mul


def exhaustive_min_distance(code, tower: FieldTower | None = None, budget: int | None = None) -> int:
    """Exact minimum weight over all q^k - 1 nonzero codewords m(x) g(x)."""
    from .codes import generator_polynomial

    budget = DEFAULT_MAX_CODEWORDS if budget is None else budget
    n, q, k = code.n, code.q, code.dimension
    if k <= 0:
        raise ValueError("the zero code has no minimum distance")
    if q**k > budget:
        raise BudgetExceeded(f"{q}^{k} codewords exceed budget {budget}")
    if q > 256:
        raise BudgetExceeded("field too large for byte-packed enumeration")
    g = code.generator if code.generator is not None else generator_polynomial(code, tower)
    F = g.field
    rows = np.zeros((k, n), dtype=np.uint8)
    for i in range(k):
        rows[i, i : i + len(g.coeffs)] = g.coeffs
    add, mul = _scalar_tables(F)

    def combine(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if q == 2:
            return a ^ b
        if isinstance(F, PrimeField):
            return (a.astype(np.uint16) + b) % q
        return add[a, b]

    # low part: every combination of the first k1 rows, built by doubling
    k1 = k
    while k1 > 0 and q**k1 * n > _TABLE_BYTES:
        k1 -= 1
    table = np.zeros((1, n), dtype=np.uint8)
    for i in range(k1):
        parts = [table] + [combine(table, mul[c][rows[i]][None, :]) for c in range(1, q)]
        table = np.concatenate(parts).astype(np.uint8)
    best = n + 1
    # high part: iterate the remaining rows' coefficient vectors
    k2 = k - k1
    for idx in range(q**k2):
        offset = np.zeros(n, dtype=np.uint8)
        j, t = idx, k1
        while j:
            j, c = divmod(j, q)
            if c:
                offset = combine(offset, mul[c][rows[t]]).astype(np.uint8)
            t += 1
        words = table if idx == 0 else combine(table, offset[None, :])
        w = np.count_nonzero(words, axis=1)
        if idx == 0:
            w = w[1:]
        if len(w):
            best = min(best, int(w.min()))
    return best


@dataclass(frozen=True)
class LowWeightResult:
    weight: int | None  # None: nothing of weight <= wmax
    support: tuple[int, ...] = ()
    coefficients: tuple[int, ...] = ()
    wmax: int = 0
    work: int = 0


def _columns(rows, n: int, tower: FieldTower):
    """Parity-check column j: (beta^(r j))_r as codes of the top field."""
    T = tower.top
    order = T.size - 1
    e = tower.beta_exponent
    exp = getattr(T, "_exp", None)
    cols = []
    for j in range(n):
        if exp is not None:
            cols.append(tuple(exp[(e * r * j) % order] for r in rows))
        else:
            cols.append(tuple(T.pow(tower.alpha, (e * r * j) % order) for r in rows))
    return cols


def low_weight_search(
    parity_rows,
    tower: FieldTower | None = None,
    n: int | None = None,
    wmax: int = 4,
    budget: int | None = None,
    q: int | None = None,
) -> LowWeightResult:
    """Smallest weight <= wmax of a nonzero vector c over GF(q) with sum_j c_j beta^(r j) = 0 for all rows r.

    The kernel is a cyclic code, so some minimum-weight vector has position 0
    in its support; only supports containing 0 are searched, with the
    coefficient at 0 normalised to 1.  Columns are indexed by their
    normalised value, so weight 3 costs one lookup per (position, scalar)
    and weight 4 one lookup per pair.
    """
    from .cosets import CosetContext, coset_of

    if wmax < 1 or wmax > 4:
        raise ValueError("wmax must lie in [1, 4]")
    budget = DEFAULT_MAX_SYNDROMES if budget is None else budget
    if tower is None:
        tower = tower_for(q, n)
    n = tower.n if n is None else n
    if tower.n != n:
        tower = tower.for_length(n)
    q = tower.q
    rows = sorted(set(int(r) % n for r in parity_rows))
    ctx = CosetContext.of(q, n)
    redundancy = sum(coset_of(ctx, r).size for r in rows)
    if redundancy > 64:
        raise RedundancyTooLarge(f"redundancy {redundancy} exceeds 64")
    T = tower.top
    cols = _columns(rows, n, tower)
    scalars = list(range(1, q))
    work = n

    def scale(v, c):
        return tuple(T.mul(x, c) for x in v)

    def plus(u, v):
        return tuple(T.add(x, y) for x, y in zip(u, v))

    def normalise(v):
        for x in v:
            if x:
                # leading entry lies in GF(q^m); scale by a GF(q) scalar only
                for c in scalars:
                    w = scale(v, c)
                    if w < v:
                        v = w
                return v
        return v

    zero = tuple(0 for _ in rows)
    if cols[0] == zero:
        return LowWeightResult(1, (0,), (1,), wmax, work)
    if wmax == 1:
        return LowWeightResult(None, (), (), wmax, work)
    index: dict[tuple, list[int]] = {}
    for j in range(1, n):
        index.setdefault(normalise(cols[j]), []).append(j)
    work += n * len(scalars)

    def solve(target, exclude, after):
        """Position p > after not in exclude with c*h_p = -target for some c."""
        if target == zero:
            return None
        for p in index.get(normalise(target), ()):
            if p > after and p not in exclude:
                for c in scalars:
                    if plus(target, scale(cols[p], c)) == zero:
                        return p, c
        return None

    h0 = cols[0]
    hit = solve(h0, (), 0)
    if hit:
        return LowWeightResult(2, (0, hit[0]), (1, hit[1]), wmax, work)
    if wmax == 2:
        return LowWeightResult(None, (), (), wmax, work)
    for a in range(1, n):
        for ca in scalars:
            work += 1
            v = plus(h0, scale(cols[a], ca))
            hit = solve(v, (a,), a)
            if hit:
                return LowWeightResult(3, (0, a, hit[0]), (1, ca, hit[1]), wmax, work)
    if work > budget:
        raise BudgetExceeded(f"syndrome work {work} exceeds budget {budget}")
    if wmax == 3:
        return LowWeightResult(None, (), (), wmax, work)
    for a in range(1, n):
        for ca in scalars:
            va = plus(h0, scale(cols[a], ca))
            for b in range(a + 1, n):
                for cb in scalars:
                    work += 1
                    if work > budget:
                        raise BudgetExceeded(f"syndrome work exceeds budget {budget}")
                    v = plus(va, scale(cols[b], cb))
                    hit = solve(v, (a, b), b)
                    if hit:
                        return LowWeightResult(4, (0, a, b, hit[0]), (1, ca, cb, hit[1]), wmax, work)
    return LowWeightResult(None, (), (), wmax, work)


def sphere_packing_max_d(n: int, k: int, q: int) -> int:
    """Largest d allowed by the sphere-packing and Singleton bounds."""
    if not 0 < k <= n:
        raise ValueError("need 0 < k <= n")
    cap = q ** (n - k)
    total, t = 0, 0
    while t <= n:
        total += (q - 1) ** t * comb(n, t)
        if total > cap:
            break
        t += 1
    radius = t - 1  # largest radius whose ball fits
    return min(2 * radius + 2, n - k + 1)


def divisor_multiple_distance(q: int, n: int, delta: int) -> int | None:
    """Exact distance delta when delta = a * (a divisor of n/(q-1)), 1 <= a <= q-1; else None."""
    if n % (q - 1) or gcd(n, q) != 1 or delta < 1:
        return None
    quotient = n // (q - 1)
    for a in range(1, q):
        if delta % a == 0 and quotient % (delta // a) == 0:
            return delta
    return None


__all__ = [
    "DEFAULT_MAX_CODEWORDS",
    "DEFAULT_MAX_SYNDROMES",
    "DistanceReport",
    "LowWeightResult",
    "divisor_multiple_distance",
    "exhaustive_min_distance",
    "low_weight_search",
    "sphere_packing_max_d",
]
