"""Closed-form coset-leader values and leader classification predicates.

Each function evaluates a formula in exact integer arithmetic and checks
divisibility before dividing; none of them enumerates cosets.  The
brute-force counterparts live in ``cosets``.

Formula ids are short descriptive slugs: ``primitive-*`` for length
q^m - 1, ``anti-*`` for (q^(2s) - 1)/(q + 1) and ``proj-*`` for
(q^m - 1)/(q - 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import IntegralityViolation, OutOfBand, RankOutOfRange, Unsupported, WrongParity


class FamilyTag(str, enum.Enum):
    PRIMITIVE = "primitive"
    ANTI = "anti"
    PROJECTIVE = "projective"

    @classmethod
    def parse(cls, text: str) -> "FamilyTag":
        aliases = {"anti-primitive": "anti", "antiprimitive": "anti", "proj": "projective"}
        return cls(aliases.get(text.lower(), text.lower()))


def family_length(family: FamilyTag, q: int, param: int) -> tuple[int, int]:
    """Return (n, m) for a family; ``param`` is m, except s for ANTI."""
    family = FamilyTag(family)
    if family is FamilyTag.PRIMITIVE:
        return q**param - 1, param
    if family is FamilyTag.ANTI:
        return (q ** (2 * param) - 1) // (q + 1), 2 * param
    return (q**param - 1) // (q - 1), param


@dataclass(frozen=True)
class LeaderResult:
    value: int
    coset_size: int
    rank: int
    formula_id: str


class LeaderClass(str, enum.Enum):
    LEADER_HALF = "leader-half"
    LEADER_FULL = "leader-full"
    NOT_LEADER = "not-leader"


@dataclass(frozen=True)
class Classification:
    kind: LeaderClass
    size: int | None


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise IntegralityViolation(f"{what}: {num} is not divisible by {den}")
    return num // den


# ---------------------------------------------------------------------------
# n = q^m - 1
# ---------------------------------------------------------------------------


def primitive_max_rank(m: int) -> int:
    """Largest rank covered by the unified formula (ranks >= 3 need m >= 4)."""
    if m < 4:
        return 2
    return max(2, m - ((m - 1) // 2 + (m - 3) // 3))


def primitive_delta(q: int, m: int, i: int) -> LeaderResult:
    """i-th largest leader modulo q^m - 1."""
    top = (q - 1) * q ** (m - 1) - 1
    if i == 1 and m >= 1:
        return LeaderResult(top, m, 1, "primitive-top")
    if i == 2 and m >= 2:
        size = m // 2 if m % 2 == 0 else m
        return LeaderResult(top - q ** ((m - 1) // 2), size, 2, "primitive-run")
    if i >= 3 and i <= primitive_max_rank(m):
        return LeaderResult(top - q ** ((m - 1) // 2 + i - 2), m, i, "primitive-run")
    raise RankOutOfRange(f"rank {i} not covered for m={m}")


def primitive_band_classify(q: int, s: int, a: int) -> Classification:
    """Leader status of a in [q^s + 1, q^(s+1)] modulo q^(2s) - 1."""
    if not (q**s + 1 <= a <= q ** (s + 1)) or a % q == 0:
        raise OutOfBand(f"{a} outside the band or divisible by {q}")
    c, r = divmod(a, q**s + 1)
    if r == 0 and 1 <= c <= q - 1:
        return Classification(LeaderClass.LEADER_HALF, s)
    a_s, a_0 = divmod(a, q**s)
    if 1 <= a_0 < a_s <= q - 1:
        return Classification(LeaderClass.NOT_LEADER, None)
    return Classification(LeaderClass.LEADER_FULL, 2 * s)


# ---------------------------------------------------------------------------
# n = (q^(2s) - 1)/(q + 1)
# ---------------------------------------------------------------------------

# exponents (e1, e2) in ((q-1) q^e1 - q^e2 - 1)/(q+1) for small s, q odd
_ANTI_SMALL = {3: (5, 4), 4: (7, 6), 6: (11, 7)}


def anti_delta(q: int, s: int, rank: int) -> LeaderResult:
    m = 2 * s
    if rank == 1:
        if s < 2:
            raise RankOutOfRange("s must be at least 2")
        if s % 2:
            num = (q - 1) * q ** (m - 1) - q ** ((m - 2) // 2) - 1
            return LeaderResult(_exact_div(num, q + 1, "anti top"), s, 1, "anti-top-odd")
        num = (q - 1) * q ** (m - 1) - q ** (m // 2) - 1
        return LeaderResult(_exact_div(num, q + 1, "anti top"), m, 1, "anti-top-even")
    if rank != 2:
        raise RankOutOfRange(f"rank {rank} not covered for this length")
    if s % 2 and s > 4:
        num = (q - 1) * q ** (2 * s - 1) - q ** (s + 1) - 1
        return LeaderResult(_exact_div(num, q + 1, "anti second"), m, 2, "anti-second-odd")
    if s % 2 == 0 and s > 6:
        num = (q - 1) * q ** (2 * s - 1) - q ** (s + 2) - 1
        return LeaderResult(_exact_div(num, q + 1, "anti second"), m, 2, "anti-second-even")
    if s in _ANTI_SMALL and q % 2:
        e1, e2 = _ANTI_SMALL[s]
        num = (q - 1) * q**e1 - q**e2 - 1
        return LeaderResult(_exact_div(num, q + 1, f"anti second s={s}"), m, 2, f"anti-second-s{s}")
    raise Unsupported(f"second leader for q={q}, s={s} is not covered")


def anti_interval_is_leader(q: int, s: int, i: int) -> Classification:
    """Leader status of i in [ceil(q/2) q^(s-1), (q^(s+1)+1)/(q+1)) for even s."""
    if s % 2:
        raise WrongParity(f"s={s} must be even")
    if s < 4:
        raise OutOfBand("s must be at least 4")
    lo = -(-q // 2) * q ** (s - 1)
    if not (lo <= i and i * (q + 1) < q ** (s + 1) + 1) or i % q == 0:
        raise OutOfBand(f"{i} outside the interval or divisible by {q}")
    tmax = (q - 2) // 2 if q % 2 == 0 else (q - 3) // 2
    for t in range(1, tmax + 1):
        if i * (q + 1) == (q - t) * q**s + t + 1:
            return Classification(LeaderClass.NOT_LEADER, None)
    return Classification(LeaderClass.LEADER_FULL, 2 * s)


# ---------------------------------------------------------------------------
# n = (q^m - 1)/(q - 1)
# ---------------------------------------------------------------------------


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _top_exponent(q: int, m: int, t: int) -> int:
    # ceil(mt/(q-1) - 1)
    return _ceil_div(m * t - (q - 1), q - 1)


@dataclass(frozen=True)
class DigitProfile:
    q: int
    m: int
    digits: tuple[int, ...]  # a_0 .. a_{m-1}
    t1: int
    t2: int
    upsilon: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(a * self.q**i for i, a in enumerate(self.digits))


def proj_digit_profile(q: int, m: int) -> DigitProfile:
    if q < 3 or m < 4:
        raise Unsupported("digit profile needs q >= 3 and m >= 4")
    counts = [0] * m
    for t in range(1, q):
        counts[_top_exponent(q, m, t)] += 1
    t1, t2 = divmod(q - 1, m)
    upsilon = tuple(sorted({_ceil_div(m * g - t2, t2) for g in range(1, t2 + 1)})) if t2 else ()
    return DigitProfile(q, m, tuple(counts), t1, t2, upsilon)


def _proj_sum(q: int, m: int) -> int:
    return sum(q ** _top_exponent(q, m, t) for t in range(1, q))


def proj_delta1(q: int, m: int) -> LeaderResult:
    if q < 3 or m < 4:
        raise Unsupported("largest leader formula needs q >= 3 and m >= 4")
    value = _exact_div(q**m - 1 - _proj_sum(q, m), q - 1, "proj top")
    return LeaderResult(value, m // gcd(m, q - 1), 1, "proj-top")


def proj_delta2(q: int, m: int) -> LeaderResult:
    if q <= 3 or m < q:
        raise Unsupported("second leader formula needs q > 3 and m >= q")
    a, b = divmod(m - 1, q - 1)
    top = proj_delta1(q, m).value

    def res(num: int, fid: str) -> LeaderResult:
        return LeaderResult(_exact_div(num, q - 1, fid), m, 2, fid)

    if b == 0 and a >= 3:
        tail = sum(q ** (a * l - 1) for l in range(1, q - 2))
        return res(q**m - 1 - q ** (m - 1) - q ** (m - a) - tail, "proj-second-b0")
    if b == 1:
        A = (q - 1) // 2
        tail = sum(q ** (a * l) for l in range(1, A)) + sum(q ** (a * l + 1) for l in range(A, q - 1))
        return res(q**m - 1 - q ** (m - 1) - tail, "proj-second-b1")
    if b == 2:
        A = (q - 1) // 3
        if q % 3 == 0:
            v = top - q ** ((2 * A + 1) * a + 1) + q ** ((A + 1) * a)
        elif q % 3 == 1:
            v = top - q ** (2 * A * a + 1)
        else:
            v = top - q ** (A * a)
        return LeaderResult(v, m, 2, "proj-second-b2")
    if b == q - 4:
        A = q // 2
        return LeaderResult(top - q ** (A * (a + 1) - 2), m, 2, "proj-second-bq4")
    if b == q - 3:
        return LeaderResult(top - q**a, m, 2, "proj-second-bq3")
    if b == q - 2:
        tail = sum(q ** ((a + 1) * l - 1) for l in range(1, q - 2))
        return res(q**m - 1 - q ** (m - 1) - q ** (m - 1 - a) - tail, "proj-second-bq2")
    raise Unsupported(f"second leader for q={q}, m={m} (a={a}, b={b}) is not covered")


def proj_leader_necessary(q: int, m: int, i: int) -> bool:
    """Necessary digit conditions for i to be a leader modulo (q^m - 1)/(q - 1)."""
    if q <= 3:
        raise Unsupported("necessary condition needs q > 3")
    n = (q**m - 1) // (q - 1)
    if not 1 <= i < n:
        raise OutOfBand(f"{i} outside [1, {n})")
    d = [(i // q**l) % q for l in range(m)]  # d[l] = i_l
    if d[m - 1] != 0:
        return False
    a, b = divmod(m - 1, q - 1)
    if a == 0:
        return True
    eps = a + 1 if b == q - 2 else a
    if all(d[l] == q - 1 for l in range(max(0, m - 1 - eps), m - 1)):
        return all(1 <= d[l - 1] <= d[l] for l in range(1, m - 1))
    return True
