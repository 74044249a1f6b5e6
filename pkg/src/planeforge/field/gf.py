# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Galois fields
-------------
Exact arithmetic in GF(p^e) for the small orders used as coordinate
rings of projective planes.

Elements are encoded by a dense index in [0, q): the base-p digits of the
index are the coefficients of the representing polynomial, constant term
first. Index 0 is the additive identity and index 1 the multiplicative
identity. The modulus of an extension field is the lexicographically
smallest monic irreducible polynomial of degree e, comparing coefficients
from the constant term upward, so that encodings are reproducible by any
external tool.
"""
import functools
import itertools
import logging

import numpy as np

from planeforge.constants import MAX_FIELD_ORDER, FULL_TABLE_MAX_ORDER
from planeforge.exceptions import (NotPrimeError, DegreeError,
                                   FieldTooLargeError, DomainError,
                                   FieldZeroDivisionError, UsageError)

logger = logging.getLogger(__name__)


def is_prime(n):
    """Trial division primality test (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m over GF(p).

    Polynomials are coefficient lists, constant term first.
    """
    r = list(a)
    dm = len(m) - 1
    for shift in range(len(r) - 1 - dm, -1, -1):
        c = r[shift + dm] % p
        if c:
            for i, mi in enumerate(m):
                r[shift + i] = (r[shift + i] - c * mi) % p
    r = [c % p for c in r[:dm]]
    return r


def is_irreducible(poly, p):
    """Check irreducibility of a monic polynomial over GF(p).

    Trial division against every monic polynomial of degree 1 to
    deg(poly) // 2.

    Parameters
    ----------
    poly : sequence of int
        Coefficients, constant term first, leading coefficient 1.
    p : int
        Prime characteristic.

    Returns
    -------
    bool
    """
    e = len(poly) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


def smallest_irreducible(p, e):
    """Lexicographically smallest monic irreducible polynomial of degree e.

    Coefficient tuples (c_0, ..., c_{e-1}) are compared with the constant
    term most significant.
    """
    for low in itertools.product(range(p), repeat=e):
        candidate = list(low) + [1]
        if is_irreducible(candidate, p):
            return tuple(candidate)
    # Irreducible polynomials exist in every degree
    raise RuntimeError(f"no irreducible polynomial of degree {e} over GF({p})")


class FieldSpec:
    """Finite field GF(p^e) with table driven arithmetic over indices.

    Attributes
    ----------
    p : int
        Characteristic.
    e : int
        Extension degree.
    q : int
        Order p^e.
    modulus : tuple of int
        Monic irreducible polynomial of degree e, constant term first
        (empty for prime fields).
    """

    def __init__(self, p, e):
        if int(e) != e or e < 1:
            raise DegreeError(f"Extension degree must be a positive integer, "
                              f"got {e}")
        if int(p) != p or p < 2:
            raise NotPrimeError(f"{p} is not prime")
        p, e = int(p), int(e)
        if p > MAX_FIELD_ORDER or e > MAX_FIELD_ORDER.bit_length() or \
                p ** e > MAX_FIELD_ORDER:
            raise FieldTooLargeError(
                f"GF({p}^{e}) exceeds the maximum order {MAX_FIELD_ORDER}")
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")

        self._p = p
        self._e = e
        self._q = p ** e
        self._modulus = () if e == 1 else smallest_irreducible(p, e)

        q = self._q
        self._powers = p ** np.arange(e, dtype=np.int64)
        index = np.arange(q, dtype=np.int64)
        self._digits = (index[:, None] // self._powers[None, :]) % p

        self._exp, self._log = self._build_log_tables()

        # full tables are precomputed up to FULL_TABLE_MAX_ORDER
        self._inv_table = np.zeros(q, dtype=np.int64)
        self._inv_table[1:] = self.inv_idx(index[1:])
        self._add_table = self._mul_table = None
        if q <= FULL_TABLE_MAX_ORDER:
            self._add_table = self.add_idx(index[:, None], index[None, :])
            self._mul_table = self.mul_idx(index[:, None], index[None, :])

        logger.debug("Built GF(%d) = GF(%d^%d), modulus %s", q, p, e,
                     self.modulus_str())

    # Slow path used only while building the tables
    def _mul_slow(self, a, b):
        if self._e == 1:
            return (a * b) % self._p
        p, e = self._p, self._e
        da = self._digits[a]
        db = self._digits[b]
        prod = [0] * (2 * e - 1)
        for i in range(e):
            if da[i]:
                for j in range(e):
                    prod[i + j] += int(da[i]) * int(db[j])
        rem = _poly_mod(prod, self._modulus, p)
        rem += [0] * (e - len(rem))
        return int(np.dot(rem, self._powers))

    def _build_log_tables(self):
        q = self._q
        order = q - 1
        for g in range(1, q):
            exp = np.empty(order, dtype=np.int64)
            x = 1
            for k in range(order):
                exp[k] = x
                x = self._mul_slow(x, g)
                if x == 1 and k < order - 1:
                    break
            else:
                # g generates the multiplicative group
                log = np.zeros(q, dtype=np.int64)
                log[exp] = np.arange(order, dtype=np.int64)
                return exp, log
        raise RuntimeError(f"no primitive element found in GF({q})")

    @property
    def p(self):
        return self._p

    @property
    def e(self):
        return self._e

    @property
    def q(self):
        return self._q

    @property
    def modulus(self):
        return self._modulus

    @property
    def digits(self):
        """Coefficient vectors of every element, shape (q, e)."""
        return self._digits

    def modulus_str(self):
        if not self._modulus:
            return "-"
        terms = []
        for i in range(len(self._modulus) - 1, -1, -1):
            c = self._modulus[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c != 1:
                mono = f"{c}" if i == 0 else f"{c}*{mono}"
            terms.append(mono)
        return " + ".join(terms)

    def __len__(self):
        return self._q

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self._p, self._e, self._modulus) == \
            (other._p, other._e, other._modulus)

    def __hash__(self):
        return hash((self._p, self._e, self._modulus))

    def __repr__(self):
        if self._e == 1:
            return f"GF({self._q})"
        return f"GF({self._p}^{self._e}) mod [{self.modulus_str()}]"

    # Elements
    def element(self, index):
        return FieldElement(self, index)

    def elements(self):
        return [FieldElement(self, i) for i in range(self._q)]

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def primitive_element(self):
        """Generator of the multiplicative group used by the log tables."""
        return FieldElement(self, self._exp[1 % len(self._exp)])

    # Index level arithmetic. Every method accepts ints or integer arrays
    # and broadcasts like numpy.
    def add_idx(self, a, b):
        if self._e == 1:
            return (np.asarray(a) + np.asarray(b)) % self._p
        s = (self._digits[a] + self._digits[b]) % self._p
        return s @ self._powers

    def neg_idx(self, a):
        if self._e == 1:
            return (-np.asarray(a)) % self._p
        return ((-self._digits[a]) % self._p) @ self._powers

    def sub_idx(self, a, b):
        return self.add_idx(a, self.neg_idx(b))

    def mul_idx(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        zero = (a == 0) | (b == 0)
        prod = self._exp[(self._log[a] + self._log[b]) % (self._q - 1)]
        return np.where(zero, 0, prod)

    def inv_idx(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise FieldZeroDivisionError("inverse of zero is undefined")
        return self._exp[(-self._log[a]) % (self._q - 1)]

    @property
    def add_table(self):
        """Full addition table, shape (q, q). Only for small fields."""
        self._check_table_order()
        return self._add_table

    @property
    def mul_table(self):
        """Full multiplication table, shape (q, q). Only for small fields."""
        self._check_table_order()
        return self._mul_table

    @property
    def inv_table(self):
        """Inverse of every nonzero element; entry 0 is unused (0)."""
        return self._inv_table

    def _check_table_order(self):
        if self._q > FULL_TABLE_MAX_ORDER:
            raise UsageError(f"full tables are limited to order "
                             f"{FULL_TABLE_MAX_ORDER}, field has {self._q}")


class FieldElement:
    """Element of a FieldSpec, identified by its dense index."""

    __slots__ = ("_field", "_index")

    def __init__(self, field, index):
        index = int(index)
        if not 0 <= index < field.q:
            raise DomainError(f"index {index} outside [0, {field.q})")
        self._field = field
        self._index = index

    @property
    def field(self):
        return self._field

    @property
    def index(self):
        return self._index

    @property
    def coefficients(self):
        """Polynomial coefficients, constant term first."""
        return tuple(int(c) for c in self._field.digits[self._index])

    def _same_field(self, other):
        if not isinstance(other, FieldElement):
            raise UsageError(f"cannot combine FieldElement with "
                             f"{type(other).__name__}")
        if other._field != self._field:
            raise UsageError(f"operands belong to different fields: "
                             f"{self._field} and {other._field}")

    def __add__(self, other):
        self._same_field(other)
        return FieldElement(self._field,
                            self._field.add_idx(self._index, other._index))

    def __sub__(self, other):
        self._same_field(other)
        return FieldElement(self._field,
                            self._field.sub_idx(self._index, other._index))

    def __mul__(self, other):
        self._same_field(other)
        return FieldElement(self._field,
                            self._field.mul_idx(self._index, other._index))

    def __truediv__(self, other):
        self._same_field(other)
        return self * other.inverse()

    def __neg__(self):
        return FieldElement(self._field, self._field.neg_idx(self._index))

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = self._field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        return FieldElement(self._field, self._field.inv_idx(self._index))

    def is_zero(self):
        return self._index == 0

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self._field == other._field and self._index == other._index

    def __hash__(self):
        return hash((self._field, self._index))

    def __int__(self):
        return self._index

    __index__ = __int__

    def __repr__(self):
        return f"{self._field!r}[{self._index}]"


@functools.lru_cache(maxsize=None)
def field_new(p, e=1):
    """Build GF(p^e) with its deterministic modulus.

    Parameters
    ----------
    p : int
        Prime characteristic.
    e : int, opt
        Extension degree (default 1).

    Returns
    -------
    field : FieldSpec

    Raises
    ------
    NotPrimeError
        If p is not prime.
    DegreeError
        If e < 1.
    FieldTooLargeError
        If p^e exceeds MAX_FIELD_ORDER.
    """
    return FieldSpec(p, e)


def factor_prime_power(q):
    """Return (p, e) with q = p^e, or raise NotPrimeError."""
    q = int(q)
    if q < 2:
        raise NotPrimeError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrimeError(f"{q} is not a prime power")
    return p, e


def field_from_order(q):
    """GF(q) for a prime power q."""
    if q > MAX_FIELD_ORDER:
        raise FieldTooLargeError(
            f"GF({q}) exceeds the maximum order {MAX_FIELD_ORDER}")
    return field_new(*factor_prime_power(q))


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def mul(a, b):
    return a * b


def div(a, b):
    return a / b


def neg(a):
    return -a


def inv(a):
    """Multiplicative inverse; raises FieldZeroDivisionError for zero."""
    if not isinstance(a, FieldElement):
        raise UsageError(f"expected FieldElement, got {type(a).__name__}")
    return a.inverse()
