"""Finite fields F_q = F_p[x]/(f) with elements encoded as integers.

An element is stored as the integer whose base-p digits are the coefficients
of its polynomial residue, lowest degree first.  Index 0 is the additive
identity and index 1 the multiplicative identity.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

TABLE_LIMIT = 256
MAX_ORDER = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, m)`` with ``q == p**m``; raise if impossible."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


# -- polynomial helpers over F_p (coefficient lists, lowest degree first) --

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        a = _trim(a)
    return a


def _monic_polys(p, d):
    for low in itertools.product(range(p), repeat=d):
        # itertools varies the last entry fastest; reverse so c0 varies fastest
        yield list(reversed(low)) + [1]


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(poly, g, p):
                return False
    return True


def _poly_code(c, p):
    return sum(ci * p**i for i, ci in enumerate(c))


def smallest_irreducible(p: int, m: int) -> list[int]:
    """Least irreducible monic polynomial of degree ``m`` over F_p.

    Candidates are ordered by the integer whose base-p digits are the
    lower coefficients (c_0 least significant).
    """
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        cand = low + [1]
        if is_irreducible(cand, p):
            return cand
    raise ArithmeticError(f"no irreducible polynomial of degree {m} over F_{p}")


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """The field F_q with q = p**m, realised as F_p[x]/(modulus)."""

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise ValueError("extension degree must be >= 1")
        mod = tuple(int(c) % self.p for c in self.modulus)
        if len(mod) != self.m + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not is_irreducible(mod, self.p):
            raise ValueError(f"modulus {mod} is reducible over F_{self.p}")
        q = self.p**self.m
        if q > MAX_ORDER:
            raise OverflowError(f"field order {q} exceeds {MAX_ORDER}")
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "q", q)
        if q <= TABLE_LIMIT:
            add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
            mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
            object.__setattr__(self, "_add", add)
            object.__setattr__(self, "_mul", mul)
        else:
            object.__setattr__(self, "_add", None)
            object.__setattr__(self, "_mul", None)

    # identity is (p, m, modulus); q is derived
    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # -- digit conversion --
    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.m)]

    def from_digits(self, c) -> int:
        return _poly_code(c, self.p)

    def _add_raw(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def _mul_raw(self, a, b):
        if self.m == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        r = _poly_mod(prod, self.modulus, self.p)
        r = r + [0] * (self.m - len(r))
        return self.from_digits(r)

    # -- arithmetic on indices --
    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._add_raw(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return self._mul_raw(a, b)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self.from_digits([(-d) % self.p for d in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        return self._inverses[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    @cached_property
    def _inverses(self):
        inv = [0] * self.q
        for a in range(1, self.q):
            inv[a] = self.pow(a, self.q - 2)
        return inv

    @cached_property
    def add_table(self) -> np.ndarray:
        """Addition table as an int array (only built for q <= 256)."""
        if self._add is None:
            raise OverflowError("tables are only materialised for q <= 256")
        return np.array(self._add, dtype=np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        if self._mul is None:
            raise OverflowError("tables are only materialised for q <= 256")
        return np.array(self._mul, dtype=np.int64)

    @property
    def elements(self) -> range:
        return range(self.q)

    def element(self, rep: int) -> "FieldElement":
        return FieldElement(self, rep)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        return cls(int(data["p"]), int(data["m"]), tuple(data["modulus"]))


def make_field(p: int, m: int = 1) -> FieldSpec:
    """Field of order p**m with the least irreducible monic modulus."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p**m > MAX_ORDER:
        raise OverflowError(f"field order {p**m} exceeds {MAX_ORDER}")
    return FieldSpec(p, m, tuple(smallest_irreducible(p, m)))


def field_of_order(q: int) -> FieldSpec:
    p, m = prime_power(q)
    return make_field(p, m)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    rep: int

    def __post_init__(self):
        if not 0 <= self.rep < self.field.q:
            raise ValueError(f"{self.rep} is not an element of F_{self.field.q}")

    def _check(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.rep, other.rep))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.rep, other.rep))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.rep, other.rep))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.div(self.rep, other.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.field, self.field.pow(self.rep, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.rep))

    def __int__(self):
        return self.rep

    def __repr__(self):
        return f"F{self.field.q}({self.rep})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def automorphisms(F: FieldSpec) -> list[tuple[int, ...]]:
    """The Frobenius powers a -> a**(p**j), j = 0..m-1, as index permutations.

    Each map is checked to be additive and multiplicative; exhaustively when
    the field has tables, on a deterministic sample otherwise.
    """
    maps = []
    for j in range(F.m):
        e = F.p**j
        sigma = tuple(F.pow(a, e) for a in range(F.q))
        _check_automorphism(F, sigma)
        maps.append(sigma)
    return maps


def _check_automorphism(F, sigma):
    if sorted(sigma) != list(range(F.q)):
        raise AssertionError("field map is not a bijection")
    if F.q <= TABLE_LIMIT:
        pairs = itertools.product(range(F.q), repeat=2)
    else:
        rng = np.random.default_rng(F.q)
        pairs = rng.integers(0, F.q, size=(4096, 2)).tolist()
    for a, b in pairs:
        if sigma[F.add(a, b)] != F.add(sigma[a], sigma[b]):
            raise AssertionError("field map is not additive")
        if sigma[F.mul(a, b)] != F.mul(sigma[a], sigma[b]):
            raise AssertionError("field map is not multiplicative")
