"""Exact arithmetic in small finite fields GF(p^e), plus counting helpers.

Elements are encoded as integers 0..q-1: the element with residue
coefficients (c0, c1, ..., c_{e-1}) (low degree first) encodes to
sum(c_i * p^i).  The encoding is a bijection onto {0, ..., q-1}; 0 and 1
encode the additive and multiplicative identities.  All arithmetic is
table-driven, so every operation is O(1) after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

DEFAULT_ORDER_CEILING = 128

# Monic irreducible moduli (coefficients low-to-high) for the non-prime
# orders supported out of the box.  Prime fields always use x itself.
#
#   q=4   x^2 + x + 1        q=27  x^3 + 2x + 1
#   q=8   x^3 + x + 1        q=32  x^5 + x^2 + 1
#   q=9   x^2 + 1            q=49  x^2 + 1
#   q=16  x^4 + x + 1        q=64  x^6 + x + 1
#   q=25  x^2 + 2            q=81  x^4 + x + 2
#   q=125 x^3 + 3x + 2       q=121 x^2 + 1
#   q=128 x^7 + x + 1
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (2, 3, 0, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m, coefficients mod p."""
    a = [x % p for x in a]
    dm = len(m) - 1
    while len(_poly_trim(a)) > dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _poly_trim(a)
    return a


def _is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg(m)//2."""
    e = len(m) - 1
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for tail in range(p**d):
            div = []
            t = tail
            for _ in range(d):
                div.append(t % p)
                t //= p
            div.append(1)
            if not _poly_trim(_poly_mod(list(m), tuple(div), p)):
                return False
    return True


class GF:
    """The field GF(p^e) with table-backed arithmetic on integer codes."""

    def __init__(self, p: int, e: int, modulus: tuple[int, ...], q: int):
        self.p = p
        self.e = e
        self.modulus = modulus
        self.q = q
        self._build_tables()

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        decode = [tuple((c // p**i) % p for i in range(e)) for c in range(q)]
        encode = {vec: c for c, vec in enumerate(decode)}
        self._decode = decode

        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            va = decode[a]
            for b in range(a, q):
                vb = decode[b]
                s = encode[tuple((x + y) % p for x, y in zip(va, vb))]
                add[a][b] = add[b][a] = s
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(va):
                    if x:
                        for j, y in enumerate(vb):
                            prod[i + j] += x * y
                rem = _poly_mod(prod, self.modulus, p)
                rem += [0] * (e - len(rem))
                m = encode[tuple(rem[:e])]
                mul[a][b] = mul[b][a] = m
        self._add = add
        self._mul = mul
        self._neg = [encode[tuple((-x) % p for x in decode[a])] for a in range(q)]
        self._inv = [0] + [self.pow(a, q - 2) for a in range(1, q)]
        for a in range(1, q):
            if mul[a][self._inv[a]] != 1:
                raise ValueError(f"modulus {self.modulus} is not irreducible over GF({p})")

        self.add_table = np.array(add, dtype=np.int16)
        self.mul_table = np.array(mul, dtype=np.int16)
        self.neg_table = np.array(self._neg, dtype=np.int16)
        self.inv_table = np.array(self._inv, dtype=np.int16)

    # -- arithmetic on integer codes -------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.q)
        return self._inv[a]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        while n:
            if n & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            n >>= 1
        return r

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Residue coefficients of code a, low degree first."""
        return self._decode[a]

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for GF({self.q})")
        return FieldElement(self, code)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    def units(self) -> range:
        return range(1, self.q)

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a GF instance; totally ordered by its integer code."""

    field: GF
    code: int

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise ValueError(f"mixed-field operands: {self!r} vs {other!r}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.code, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.code))

    def __lt__(self, other):
        self._check(other)
        return self.code < other.code

    def __le__(self, other):
        self._check(other)
        return self.code <= other.code

    def __repr__(self):
        return f"{self.field!r}:{self.code}"


@lru_cache(maxsize=None)
def _make_field_cached(p: int, e: int, modulus: tuple[int, ...], q: int) -> GF:
    return GF(p, e, modulus, q)


def make_field(
    p: int,
    e: int = 1,
    modulus: tuple[int, ...] | None = None,
    ceiling: int = DEFAULT_ORDER_CEILING,
) -> GF:
    """Construct GF(p^e), validating the modulus.

    Without an explicit modulus, prime fields use x and non-prime orders
    fall back to the DEFAULT_MODULI table.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if e < 1:
        raise ValueError(f"degree must be >= 1, got {e}")
    q = p**e
    if q > ceiling:
        raise ValueError(f"field order {q} exceeds ceiling {ceiling}")
    if modulus is None:
        if e == 1:
            modulus = (0, 1)
        elif (p, e) in DEFAULT_MODULI:
            modulus = DEFAULT_MODULI[(p, e)]
        else:
            raise ValueError(f"no default modulus for GF({p}^{e}); pass one explicitly")
    modulus = tuple(c % p for c in modulus)
    if len(modulus) != e + 1 or modulus[-1] != 1:
        raise ValueError(f"modulus must be monic of degree {e}, got {modulus}")
    if not _is_irreducible(modulus, p):
        raise ValueError(f"modulus {modulus} is reducible over GF({p})")
    return _make_field_cached(p, e, modulus, q)


@lru_cache(maxsize=None)
def field_of_order(q: int, ceiling: int = DEFAULT_ORDER_CEILING) -> GF:
    """GF(q) with the default modulus; q must be a prime power."""
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                break
            return make_field(p, e, ceiling=ceiling)
    raise ValueError(f"{q} is not a prime power")


def xi_of(q: int) -> int:
    """Residue of q mod 3, mapped onto {-1, 0, 1}."""
    r = q % 3
    return -1 if r == 2 else r


def quadratic_character(gf: GF, a: int) -> int:
    """0 for a=0, +1 for nonzero squares, -1 otherwise; odd fields only."""
    if gf.p == 2:
        raise ValueError("quadratic character undefined in characteristic 2")
    if a == 0:
        return 0
    return 1 if gf.pow(a, (gf.q - 1) // 2) == 1 else -1


def count_square_values_of_f(gf: GF) -> int:
    """Count a in F_q with a^2 + a + 1 a square; needs q odd, q = -1 mod 3."""
    if xi_of(gf.q) != -1:
        raise ValueError(f"q={gf.q} is not -1 mod 3")
    if gf.p == 2:
        raise ValueError("needs odd characteristic")
    total = 0
    for a in range(gf.q):
        v = gf.add(gf.add(gf.mul(a, a), a), 1)
        if quadratic_character(gf, v) >= 0:
            total += 1
    return total


def cube_classes(gf: GF) -> list[int]:
    """For each unit u, 0 if u is a cube in F_q^*, else 1 or 2 (coset index)."""
    q = gf.q
    if (q - 1) % 3 != 0:
        return [0] * q
    cubes = {gf.pow(u, 3) for u in gf.units()}
    cls = [0] * q
    noncube_rep = next(u for u in gf.units() if u not in cubes)
    second = {gf.mul(noncube_rep, c) for c in cubes}
    for u in gf.units():
        cls[u] = 0 if u in cubes else (1 if u in second else 2)
    return cls


def triple_product_class_counts(gf: GF) -> tuple[int, int]:
    """Among products of all 3-subsets of F_q^*, count cubes vs non-cubes.

    Enumerates all C(q-1, 3) unordered triples of distinct units; needs
    q = 1 mod 3 (otherwise every unit is a cube and the split is trivial).
    """
    q = gf.q
    if xi_of(q) != 1:
        raise ValueError(f"q={q} is not 1 mod 3")
    cubes = {gf.pow(u, 3) for u in gf.units()}
    m_cube = 0
    for a, b, c in combinations(gf.units(), 3):
        if gf.mul(gf.mul(a, b), c) in cubes:
            m_cube += 1
    return m_cube, comb(q - 1, 3) - m_cube
