"""Exact arithmetic in GF(p), GF(q) = GF(p^e) and GF(q^m).

Every element is stored as its integer code: the digit evaluation of
its coefficient list over the immediate base field.  For a tower
GF(p) < GF(q) < GF(q^m) the codes nest, so the constant polynomial
with code ``c < q`` in GF(q^m) is the GF(q) element with code ``c``.
Addition is therefore digit-wise mod p on the base-p expansion of the
code (XOR when p = 2).

Polynomials are tuples of codes, lowest degree first, with no trailing
zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import reduce
from typing import Iterable, Sequence

from sympy import factorint, isprime

from .errors import (
    DegreeOverflow,
    DivisionByZero,
    LengthMismatch,
    MixedFields,
    NotPrime,
)

MAX_FIELD_SIZE = 2**63
# log/antilog tables are built at construction time below this size
TABLE_LIMIT = 2**20


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int

    def __post_init__(self):
        if self.p < 2 or not isprime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if self.e < 1:
            raise ValueError(f"exponent must be positive, got {self.e}")

    @property
    def q(self) -> int:
        return self.p**self.e


def prime_power(q: int) -> PrimePower:
    """Split ``q`` into ``(p, e)``; raises NotPrime if q is not a prime power."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, e),) = f.items()
    return PrimePower(int(p), int(e))


def _digits(code: int, base: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        code, r = divmod(code, base)
        out.append(r)
    return out


def _undigits(digits: Iterable[int], base: int) -> int:
    v = 0
    for d in reversed(list(digits)):
        v = v * base + d
    return v


class Field:
    """Common interface of the prime field and extension fields."""

    p: int
    size: int
    degree: int  # over the immediate base field
    base: "Field | None"

    @property
    def char(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        """Order of the multiplicative group."""
        return self.size - 1

    def contains(self, other: "Field") -> bool:
        f: Field | None = self
        while f is not None:
            if f is other:
                return True
            f = f.base
        return False

    def __call__(self, code: int) -> "Element":
        if not 0 <= code < self.size:
            raise ValueError(f"code {code} outside field of size {self.size}")
        return Element(self, code)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, place = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * place
            place *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out, place = 0, 1
        while a:
            a, d = divmod(a, p)
            out += ((-d) % p) * place
            place *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.size - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def element_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        order = self.order
        for prime in _prime_factors(self.order):
            while order % prime == 0 and self.pow(a, order // prime) == 1:
                order //= prime
        return order

    def is_generator(self, a: int) -> bool:
        if a == 0:
            return False
        return all(self.pow(a, self.order // r) != 1 for r in _prime_factors(self.order))


def _prime_factors(n: int) -> list[int]:
    if n == 1:
        return []
    return sorted(int(r) for r in factorint(n))


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or not isprime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.size = p
        self.degree = 1
        self.base = None
        self.modulus = None

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"


class ExtensionField(Field):
    """``base[x] / (modulus)`` for a monic irreducible ``modulus``.

    When ``generator`` is given and the field is small, log/antilog
    tables are built once here and used for multiplication.
    """

    def __init__(self, base: Field, modulus: Sequence[int], generator: int | None = None):
        modulus = tuple(modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.base = base
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.p = base.p
        self.size = base.size**self.degree
        if self.size > MAX_FIELD_SIZE:
            raise DegreeOverflow(f"field size {self.size} exceeds 2^63")
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if generator is not None and self.size <= TABLE_LIMIT:
            self._build_tables(generator)

    def _build_tables(self, g: int) -> None:
        exp = [0] * self.order
        log = [0] * self.size
        x = 1
        for i in range(self.order):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, g)
        if x != 1 or len(set(exp)) != self.order:
            raise ValueError(f"{g} does not generate the multiplicative group")
        self._exp, self._log = exp, log

    def digits(self, a: int) -> list[int]:
        return _digits(a, self.base.size, self.degree)

    def from_digits(self, digits: Sequence[int]) -> int:
        return _undigits(digits, self.base.size)

    def _mul_slow(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        F = self.base
        d = self.degree
        ad, bd = self.digits(a), self.digits(b)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(ad):
            if x == 0:
                continue
            for j, y in enumerate(bd):
                if y:
                    prod[i + j] = F.add(prod[i + j], F.mul(x, y))
        mod = self.modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                for t in range(d):
                    if mod[t]:
                        prod[k - d + t] = F.sub(prod[k - d + t], F.mul(c, mod[t]))
                prod[k] = 0
        return self.from_digits(prod[:d])

    def mul(self, a, b):
        if self._exp is None:
            return self._mul_slow(a, b)
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.order]

    def pow(self, a, k):
        if self._exp is None or a == 0:
            return super().pow(a, k)
        return self._exp[(self._log[a] * k) % self.order]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._exp is None:
            return super().inv(a)
        return self._exp[(-self._log[a]) % self.order]

    def __repr__(self):
        return f"GF({self.base.size}^{self.degree})"


@dataclass(frozen=True)
class Element:
    field: Field
    code: int

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected a field element, got {type(other).__name__}")
        if other.field is not self.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check(other)
        return Element(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return Element(self.field, self.field.sub(self.code, other.code))

    def __neg__(self):
        return Element(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        self._check(other)
        return Element(self.field, self.field.mul(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        return Element(self.field, self.field.div(self.code, other.code))

    def __pow__(self, k: int):
        return Element(self.field, self.field.pow(self.code, k))

    def inv(self) -> "Element":
        return Element(self.field, self.field.inv(self.code))

    @property
    def coefficients(self) -> list[int]:
        if self.field.base is None:
            return [self.code]
        return self.field.digits(self.code)


def field_arith(op: str, a: Element, b: Element | int | None = None) -> Element:
    """Dispatch ``add, sub, mul, div, pow, inv`` on field elements."""
    if op == "inv":
        return a.inv()
    if op == "pow":
        if not isinstance(b, int) or b < 0:
            raise ValueError("pow needs a non-negative integer exponent")
        return a**b
    ops = {"add": Element.__add__, "sub": Element.__sub__, "mul": Element.__mul__, "div": Element.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown field operation {op!r}")
    return ops[op](a, b)


# ---------------------------------------------------------------------------
# Polynomials over a field, as coefficient tuples of codes
# ---------------------------------------------------------------------------


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(F: Field, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    out = [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def psub(F: Field, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return padd(F, a, [F.neg(x) for x in b])


def pmul(F: Field, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out)


def pdivmod(F: Field, a: Sequence[int], b: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    if len(r) - 1 < db:
        return (), _trim(r)
    quot = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = F.mul(c, inv_lead)
        quot[k - db] = c
        for t in range(db + 1):
            if b[t]:
                r[k - db + t] = F.sub(r[k - db + t], F.mul(c, b[t]))
    return _trim(quot), _trim(r[:db])


def pmod(F: Field, a, b):
    return pdivmod(F, a, b)[1]


def pmonic(F: Field, a: Sequence[int]) -> tuple[int, ...]:
    if not a:
        return ()
    inv = F.inv(a[-1])
    return tuple(F.mul(x, inv) for x in a)


def pgcd(F: Field, a, b) -> tuple[int, ...]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, pmod(F, a, b)
    return pmonic(F, a)


def ppowmod(F: Field, a, k: int, mod) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = pmod(F, a, mod)
    while k:
        if k & 1:
            result = pmod(F, pmul(F, result, base), mod)
        base = pmod(F, pmul(F, base, base), mod)
        k >>= 1
    return result


def peval(F: Field, a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def is_irreducible(F: Field, f: Sequence[int]) -> bool:
    """Rabin-style test: gcd(f, x^(Q^k) - x) = 1 for k <= deg/2, and f | x^(Q^d) - x."""
    f = _trim(list(f))
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    Q = F.size
    x = (0, 1)
    h = x
    for k in range(1, d // 2 + 1):
        h = ppowmod(F, h, Q, f)
        if len(pgcd(F, f, psub(F, h, x))) > 1:
            return False
    for _ in range(d // 2, d):
        h = ppowmod(F, h, Q, f)
    return psub(F, h, x) == ()


def first_irreducible(F: Field, degree: int) -> tuple[int, ...]:
    """Smallest-code monic irreducible polynomial of ``degree`` over ``F``."""
    Q = F.size
    for code in range(Q**degree, 2 * Q**degree):
        f = tuple(_digits(code, Q, degree + 1))
        if f[0] == 0:
            continue  # divisible by x
        if is_irreducible(F, f):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def first_generator(F: Field) -> int:
    for code in range(1, F.size):
        if F.is_generator(code):
            return code
    raise AssertionError("no generator found")  # pragma: no cover


@dataclass(frozen=True)
class Poly:
    """Polynomial over ``field`` with coefficient codes, lowest degree first."""

    field: Field
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(list(self.coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _same(self, other: "Poly") -> None:
        if other.field is not self.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._same(other)
        return Poly(self.field, padd(self.field, self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._same(other)
        return Poly(self.field, psub(self.field, self.coeffs, other.coeffs))

    def __mul__(self, other):
        self._same(other)
        return Poly(self.field, pmul(self.field, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        self._same(other)
        q, r = pdivmod(self.field, self.coeffs, other.coeffs)
        return Poly(self.field, q), Poly(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True iff ``self`` divides ``other``."""
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        return Poly(self.field, pmonic(self.field, self.coeffs))

    def gcd(self, other: "Poly") -> "Poly":
        self._same(other)
        return Poly(self.field, pgcd(self.field, self.coeffs, other.coeffs))

    def lcm(self, other: "Poly") -> "Poly":
        self._same(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        return ((self * other) // self.gcd(other)).monic()

    def __call__(self, x: Element | int) -> Element:
        """Evaluate at ``x``; ``x`` may live in an extension of the coefficient field."""
        if isinstance(x, Element):
            if not x.field.contains(self.field):
                raise MixedFields(f"cannot evaluate over {self.field!r} at a point of {x.field!r}")
            return Element(x.field, peval(x.field, self.coeffs, x.code))
        return Element(self.field, peval(self.field, self.coeffs, x))

    @property
    def code(self) -> int:
        """Integer code: digit evaluation of the coefficients in base |field|."""
        return _undigits(self.coeffs, self.field.size)

    @classmethod
    def x_pow_minus_one(cls, field: Field, n: int) -> "Poly":
        return cls(field, (field.neg(1),) + (0,) * (n - 1) + (1,))


def poly_op(op: str, f: Poly, g):
    """Dispatch ``mul, mod, divides, lcm, eval``.

    ``divides(f, g)`` asks whether f divides g.
    """
    if op == "mul":
        return f * g
    if op == "mod":
        return f % g
    if op == "divides":
        f._same(g)
        return f.divides(g)
    if op == "lcm":
        return f.lcm(g)
    if op == "eval":
        return f(g)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_lcm(polys: Iterable[Poly]) -> Poly:
    return reduce(Poly.lcm, polys)


# ---------------------------------------------------------------------------
# Towers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldTower:
    """GF(p) < GF(q) < GF(q^m) with a fixed primitive element of the top field."""

    base: PrimePower
    m: int
    prime_field: PrimeField
    mid: Field
    top: Field
    alpha: int
    n: int
    mid_modulus: tuple[int, ...] | None = dc_field(default=None)
    top_modulus: tuple[int, ...] | None = dc_field(default=None)

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def beta_exponent(self) -> int:
        return (self.top.size - 1) // self.n

    @property
    def beta(self) -> Element:
        return self.top(self.top.pow(self.alpha, self.beta_exponent))

    def beta_pow(self, i: int) -> int:
        return self.top.pow(self.alpha, self.beta_exponent * (i % self.n))

    def for_length(self, n: int) -> "FieldTower":
        """Same fields and alpha, re-targeted to a length ``n`` dividing q^m - 1."""
        if n < 1 or (self.top.size - 1) % n:
            raise LengthMismatch(f"{n} does not divide {self.top.size - 1}")
        return FieldTower(
            self.base, self.m, self.prime_field, self.mid, self.top, self.alpha, n,
            self.mid_modulus, self.top_modulus,
        )


def build_tower(p: int, e: int, m: int, n: int | None = None) -> FieldTower:
    """Build GF(p) < GF(p^e) < GF(p^(e m)) deterministically.

    Moduli are the first irreducible polynomials in increasing integer
    code; the primitive element is the first element of full order.
    """
    pp = PrimePower(p, e)
    if m < 1:
        raise ValueError("m must be positive")
    if p ** (e * m) > MAX_FIELD_SIZE:
        raise DegreeOverflow(f"{p}^{e * m} exceeds 2^63")
    Fp = PrimeField(p)
    mid: Field = Fp
    mid_mod = None
    if e > 1:
        mid_mod = first_irreducible(Fp, e)
        probe = ExtensionField(Fp, mid_mod)
        mid = ExtensionField(Fp, mid_mod, generator=first_generator(probe))
    top: Field = mid
    top_mod = None
    if m > 1:
        top_mod = first_irreducible(mid, m)
        probe = ExtensionField(mid, top_mod)
        top = ExtensionField(mid, top_mod, generator=first_generator(probe))
    alpha = first_generator(top)
    size = top.size - 1
    if n is None:
        n = size
    if size % n:
        raise LengthMismatch(f"{n} does not divide {size}")
    return FieldTower(pp, m, Fp, mid, top, alpha, n, mid_mod, top_mod)


def tower_for(q: int, n: int) -> FieldTower:
    """Tower over GF(q) whose top field holds a primitive n-th root of unity."""
    from .cosets import mult_order

    pp = prime_power(q)
    m = mult_order(q, n) if n > 1 else 1
    return build_tower(pp.p, pp.e, m, n)


def minimal_polynomial(tower: FieldTower, n: int, i: int) -> Poly:
    """Minimal polynomial of beta^i over GF(q), with beta of order ``n``."""
    if n != tower.n:
        tower = tower.for_length(n)
    q = tower.q
    if n > 1 and not 0 <= i < n:
        raise ValueError(f"residue {i} outside [0, {n})")
    conj = []
    j = i % n if n > 1 else 0
    while True:
        conj.append(j)
        j = j * q % n if n > 1 else 0
        if j == conj[0]:
            break
    T = tower.top
    f: tuple[int, ...] = (1,)
    for j in conj:
        f = pmul(T, f, (T.neg(tower.beta_pow(j)), 1))
    if any(c >= q for c in f):
        raise AssertionError("minimal polynomial escaped the subfield")  # pragma: no cover
    return Poly(tower.mid, f)
