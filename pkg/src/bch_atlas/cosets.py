"""q-cyclotomic cosets modulo n and brute-force leader oracles.

The oracles here never consult a closed-form leader formula; they are
the ground truth the ``leaders`` and ``codes`` modules are checked
against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .errors import BudgetExceeded, NotCoprime, ResidueOutOfRange, WidthTooSmall, WrongFamily

DEFAULT_MAX_ENUM = 10**9
_CHUNK = 1 << 22


def default_max_enum() -> int:
    """Enumeration budget (n*m steps); ``BCH_ATLAS_MAX_ENUM`` overrides the default."""
    raw = os.environ.get("BCH_ATLAS_MAX_ENUM")
    return int(raw) if raw else DEFAULT_MAX_ENUM


def mult_order(q: int, n: int) -> int:
    """Smallest m >= 1 with q^m = 1 mod n."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    m, x = 1, q % n
    while x != 1:
        x = x * q % n
        m += 1
    return m


@dataclass(frozen=True)
class CosetContext:
    q: int
    n: int
    m: int

    @classmethod
    def of(cls, q: int, n: int) -> "CosetContext":
        return cls(q, n, mult_order(q, n))

    def check(self, t: int) -> None:
        if not 0 <= t < self.n:
            raise ResidueOutOfRange(f"residue {t} outside [0, {self.n})")


@dataclass(frozen=True)
class CyclotomicCoset:
    leader: int
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


def _orbit(ctx: CosetContext, t: int) -> list[int]:
    out = [t]
    x = t * ctx.q % ctx.n
    while x != t:
        out.append(x)
        x = x * ctx.q % ctx.n
    return out


def coset_of(ctx: CosetContext, t: int) -> CyclotomicCoset:
    ctx.check(t)
    elems = tuple(sorted(_orbit(ctx, t)))
    return CyclotomicCoset(elems[0], elems)


def leader_of(ctx: CosetContext, t: int) -> int:
    ctx.check(t)
    return min(_orbit(ctx, t))


def rotate_residue(ctx: CosetContext, t: int, j: int) -> int:
    """[t q^j]_n."""
    ctx.check(t)
    if not 0 <= j < ctx.m:
        raise ValueError(f"rotation {j} outside [0, {ctx.m})")
    return t * pow(ctx.q, j, ctx.n) % ctx.n


def q_digits(t: int, q: int, m: int) -> tuple[int, ...]:
    """Base-q digits of t, most significant first, exactly m of them."""
    if t < 0:
        raise ValueError("negative residue")
    if t >= q**m:
        raise WidthTooSmall(f"{t} needs more than {m} base-{q} digits")
    out = []
    for _ in range(m):
        t, r = divmod(t, q)
        out.append(r)
    return tuple(reversed(out))


def from_q_digits(digits, q: int) -> int:
    v = 0
    for d in digits:
        v = v * q + d
    return v


# ---------------------------------------------------------------------------
# Run-length forms for n = (q^m - 1)/(q - 1)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RunLengthForm:
    """Digits (0, (q-1)*n_{q-1}, ..., 1*n_1) left-padded with zeros to width m.

    ``runs[v]`` is the length of the run of digit ``v`` for v = 1..q-1;
    ``runs[0]`` is unused and kept at 0 so indices match digit values.
    """

    q: int
    m: int
    runs: tuple[int, ...]

    def digits(self) -> tuple[int, ...]:
        body: list[int] = []
        for v in range(self.q - 1, 0, -1):
            body.extend([v] * self.runs[v])
        if len(body) > self.m - 1:
            raise WidthTooSmall("runs exceed the available width")
        return (0,) * (self.m - len(body)) + tuple(body)

    @property
    def value(self) -> int:
        return from_q_digits(self.digits(), self.q)

    def prefix_sum(self, l: int) -> int:
        """sum_{i >= l} n_i."""
        return sum(self.runs[l:])


class NotMonotone:
    """Marker returned when a residue lacks the run-length shape."""

    _inst: "NotMonotone | None" = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NotMonotone"


NOT_MONOTONE = NotMonotone()


def is_projective_length(q: int, n: int) -> int | None:
    """Return m if n = (q^m - 1)/(q - 1) for some m >= 2, else None."""
    if q < 2:
        return None
    m, v = 1, 1
    while v < n:
        v = v * q + 1
        m += 1
    return m if v == n else None


def run_length_form(ctx: CosetContext, t: int) -> RunLengthForm | NotMonotone:
    m = is_projective_length(ctx.q, ctx.n)
    if m is None:
        raise WrongFamily(f"{ctx.n} is not (q^m-1)/(q-1) for q={ctx.q}")
    ctx.check(t)
    q = ctx.q
    digits = q_digits(t, q, m)
    runs = [0] * q
    i = 0
    while i < m and digits[i] == 0:
        i += 1
    if i == 0:
        return NOT_MONOTONE
    prev = q
    for d in digits[i:]:
        if d == 0 or d > prev:
            return NOT_MONOTONE
        runs[d] += 1
        prev = d
    return RunLengthForm(q, m, tuple(runs))


def rotated_run_form(form: RunLengthForm, l: int) -> RunLengthForm:
    """Predicted run-length form of [t q^j]_n for j = sum_{i >= l} n_i, 2 <= l <= q-1.

    Needs a full-width form: one leading zero and m - 1 nonzero digits.

    Runs n_{l-1}, ..., n_1 move to digits q-1, ..., q-l+1 (the last gaining
    one digit) and runs n_{q-1}, ..., n_l move to digits q-l, ..., 1 (the
    last losing one).
    """
    q = form.q
    if not 2 <= l <= q - 1:
        raise ValueError(f"l must lie in [2, {q - 1}]")
    if sum(form.runs) != form.m - 1:
        raise WidthTooSmall("rotation needs exactly one leading zero digit")
    new = [0] * q
    for i in range(1, l):
        new[q - l + i] = form.runs[i] + (1 if i == 1 else 0)
    for i in range(l, q):
        new[i - l + 1] = form.runs[i] - (1 if i == l else 0)
    return RunLengthForm(q, form.m, tuple(new))


# ---------------------------------------------------------------------------
# Full sweeps
# ---------------------------------------------------------------------------


def _check_budget(ctx: CosetContext, budget: int | None) -> None:
    budget = default_max_enum() if budget is None else budget
    if ctx.n * ctx.m > budget:
        raise BudgetExceeded(f"n*m = {ctx.n * ctx.m} exceeds budget {budget}")


def all_cosets(ctx: CosetContext, budget: int | None = None) -> list[CyclotomicCoset]:
    """Coset partition of Z_n, by a mark-visited sweep in increasing leader order."""
    _check_budget(ctx, budget)
    seen = bytearray(ctx.n)
    out = []
    for t in range(ctx.n):
        if seen[t]:
            continue
        orbit = _orbit(ctx, t)
        for x in orbit:
            seen[x] = 1
        out.append(CyclotomicCoset(t, tuple(sorted(orbit))))
    return out


@dataclass(frozen=True, eq=False)
class LeaderTable:
    """Per-residue leader and coset size, computed by brute force.

    ``leader[t]`` is CL(t) and ``size[t]`` is |C_t|, for 0 <= t < n.
    """

    ctx: CosetContext
    leader: np.ndarray
    size: np.ndarray

    @cached_property
    def is_leader(self) -> np.ndarray:
        return self.leader == np.arange(self.ctx.n)

    @cached_property
    def leaders(self) -> np.ndarray:
        """All leaders in increasing order."""
        return np.nonzero(self.is_leader)[0]

    @cached_property
    def cumulative_size(self) -> np.ndarray:
        """cum[t] = sum of |C_l| over leaders 1 <= l <= t."""
        contrib = np.where(self.is_leader, self.size, 0)
        contrib[0] = 0
        return np.cumsum(contrib)


def leader_table(ctx: CosetContext, budget: int | None = None) -> LeaderTable:
    """Minimum over all q-rotations of every residue, swept in numpy chunks."""
    _check_budget(ctx, budget)
    n, q = ctx.n, ctx.q
    if n > 2**62 // max(q, 2):
        raise BudgetExceeded("n too large for 64-bit residue sweep")
    best = np.empty(n, dtype=np.int64)
    size = np.empty(n, dtype=np.int64)
    for lo in range(0, n, _CHUNK):
        t = np.arange(lo, min(n, lo + _CHUNK), dtype=np.int64)
        r = t.copy()
        b = t.copy()
        sz = np.zeros_like(t)
        for j in range(1, ctx.m + 1):
            r = (r * q) % n
            np.minimum(b, r, out=b)
            sz[(r == t) & (sz == 0)] = j
        best[lo : lo + len(t)] = b
        size[lo : lo + len(t)] = sz
    best.flags.writeable = False
    size.flags.writeable = False
    return LeaderTable(ctx, best, size)


def k_largest_leaders(ctx: CosetContext, k: int, budget: int | None = None) -> list[tuple[int, int]]:
    """The k largest coset leaders, descending, each with its coset size."""
    if k < 1:
        raise ValueError("k must be positive")
    tab = leader_table(ctx, budget)
    top = tab.leaders[::-1][:k]
    return [(int(x), int(tab.size[x])) for x in top]
