"""Exact arithmetic in the prime field F_p and its extensions F_{p^m}.

Field elements carry no wrapper object: an element of F_{p^m} is the bare
coefficient tuple ``(c_0, ..., c_{m-1})`` with entries in ``[0, p)``, low
degree first, relative to a monic irreducible modulus of degree ``m``.  A
:class:`FieldSpec` holds ``(p, m, modulus)`` and performs all arithmetic on
those tuples.  Residues live in ``[0, p)`` throughout, so ``-1`` is always
represented as ``p - 1``.

Specs and elements are immutable and every operation is a pure function;
they can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence, Tuple

FqElem = Tuple[int, ...]


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (small moduli only)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Dense polynomial helpers over F_p.  Coefficient lists, low degree first,
# trailing zeros trimmed.  Only used for modulus validation and search.

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _trim(out)


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _prem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by b (b nonzero); b is normalized to monic first."""
    b = _trim(list(b))
    inv = pow(b[-1], -1, p)
    b = [(c * inv) % p for c in b]
    r = _trim(list(a))
    db = len(b) - 1
    while len(r) - 1 >= db:
        c = r[-1]
        off = len(r) - 1 - db
        for t in range(db + 1):
            r[off + t] = (r[off + t] - c * b[t]) % p
        _trim(r)  # leading term is now zero, so this strictly shrinks r
    return r


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _prem(a, b, p)
    return a


def _ppowmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _prem(a, f, p)
    while e > 0:
        if e & 1:
            result = _prem(_pmul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _prem(_pmul(base, base, p), f, p)
    return result


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's deterministic irreducibility test for monic f over F_p."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    # x^(p^m) must reduce to x mod f
    h = x
    for _ in range(m):
        h = _ppowmod(h, p, f, p)
    if _psub(h, x, p):
        return False
    # gcd(x^(p^(m/q)) - x, f) must be constant for every prime q | m
    for q in _prime_divisors(m):
        h = x
        for _ in range(m // q):
            h = _ppowmod(h, p, f, p)
        g = _pgcd(_psub(h, x, p), f, p)
        if len(g) - 1 != 0:
            return False
    return True


# ---------------------------------------------------------------------------


class FieldSpec:
    """The finite field F_{p^m} for an odd prime p.

    ``modulus`` is the monic irreducible defining polynomial as a
    coefficient list of length ``m + 1``, constant term first.  For
    ``m == 1`` the canonical modulus is plain ``x`` (coefficients
    ``(0, 1)``) and elements are the 1-tuples ``(c,)``.

    Construction verifies that ``p`` is an odd prime and that the modulus
    is monic of degree exactly ``m`` and irreducible over F_p.
    """

    __slots__ = ("p", "m", "modulus", "order", "reduction")

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        if p < 3 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        mod = tuple(c % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}, got {list(modulus)}")
        if not _is_irreducible(mod, p):
            raise ValueError(f"modulus {list(mod)} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.modulus = mod
        self.order = p**m
        # reduction[t] = coefficients of x^(m+t) mod modulus, t = 0..m-2;
        # enough to fold products of degree <= 2m-2.
        reds: list[FqElem] = []
        if m > 1:
            cur = [(-c) % p for c in mod[:m]]
            reds.append(tuple(cur))
            for _ in range(m - 2):
                carry = cur[-1]
                cur = [0] + cur[:-1]
                cur = [(cur[i] + carry * reds[0][i]) % p for i in range(m)]
                reds.append(tuple(cur))
        self.reduction: tuple[FqElem, ...] = tuple(reds)

    # -- identities and coercion

    def zero(self) -> FqElem:
        return (0,) * self.m

    def one(self) -> FqElem:
        return (1,) + (0,) * (self.m - 1)

    def from_int(self, n: int) -> FqElem:
        """Embed an integer through the prime subfield."""
        return (n % self.p,) + (0,) * (self.m - 1)

    def element(self, coeffs: Iterable[int]) -> FqElem:
        """Build an element from up to m coefficients, reducing mod p."""
        vals = [c % self.p for c in coeffs]
        if len(vals) > self.m:
            raise ValueError(f"element needs at most {self.m} coefficients, got {len(vals)}")
        return tuple(vals) + (0,) * (self.m - len(vals))

    # -- arithmetic

    def add(self, a: FqElem, b: FqElem) -> FqElem:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: FqElem, b: FqElem) -> FqElem:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: FqElem) -> FqElem:
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a: FqElem, b: FqElem) -> FqElem:
        p, m = self.p, self.m
        if m == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        out = conv[:m]
        for t, red in enumerate(self.reduction):
            c = conv[m + t]
            if c:
                for i, r in enumerate(red):
                    out[i] += c * r
        return tuple(v % p for v in out)

    def scale(self, c: int, a: FqElem) -> FqElem:
        """Multiply by an F_p scalar (prime-subfield action)."""
        p = self.p
        return tuple((c * x) % p for x in a)

    def pow(self, a: FqElem, e: int) -> FqElem:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one()
        base = a
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, a: FqElem) -> FqElem:
        if not any(a):
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def elements(self) -> Iterator[FqElem]:
        """All p^m elements exactly once, ascending lexicographic
        coefficient order, starting at zero."""
        return itertools.product(range(self.p), repeat=self.m)

    # -- identity semantics

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={list(self.modulus)})"


def find_irreducible(p: int, m: int) -> FieldSpec:
    """FieldSpec with the smallest monic irreducible modulus of degree m.

    Candidates x^m + c_{m-1} x^{m-1} + ... + c_0 are scanned in increasing
    order of the integer value sum(c_i * p^i) of the non-leading
    coefficients, so the choice is deterministic across runs and platforms.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    for value in range(p**m):
        coeffs = []
        v = value
        for _ in range(m):
            coeffs.append(v % p)
            v //= p
        coeffs.append(1)
        if _is_irreducible(coeffs, p):
            return FieldSpec(p, m, coeffs)
    raise AssertionError("unreachable: an irreducible polynomial of every degree exists")
