"""Classification, construction, enumeration, and counting of the
self-dual cyclic codes of length N = p^s over R = F_{p^m} + u F_{p^m},
plus the sign-flip carry-over to negacyclic codes.

Every self-dual code is a one- or two-generator ideal
``<(x-1)^(k+1) b(x) + u (x-1)^k, (x-1)^(N-k)>`` (single generator when
k = 0) for a torsion exponent 0 <= k <= (N-1)/2 and a polynomial b whose
(x-1)-adic coefficients are supported on [delta, l) with l = N-1-2k and
delta = (N-1)/2 - k, and are constrained to the truncated fixed-point
space of the reciprocal transform.  The cases split by N mod 4 into two
(N = 3 mod 4) or three (N = 1 mod 4) parameter families; the k values
across all families cover 0..(N-1)/2 exactly once.

Enumeration order is deterministic: families in classification order,
then free parameters in lexicographic field order, so streams are
resumable by plain index.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .chainring import RIdealGens, RVector
from .fieldcore import FieldSpec, FqElem, find_irreducible, is_prime
from .gmatrix import column_index_range
from .reciprocal import XM1_TO_STD, XPoly, basis_convert, solution_basis

CASE_K0 = "k0"
CASE_EVEN_K = "even-k"
CASE_ODD_K = "odd-k"


@dataclass(frozen=True)
class CaseDescriptor:
    """One parameter family of self-dual codes.

    branch: p^s mod 4 (1 or 3).
    sub: which family: 'k0' (branch 1 only), 'even-k', or 'odd-k'.
    nu: the family index; k is 2*nu, 2*nu+1, or 2*nu-1 depending on sub.
    delta / l: support window [delta, l) of the b coefficients.
    j_range: inclusive column-index bounds (lo > hi when empty).
    free_param_count: number of free field parameters, may be 0.
    t: width p^s - 2k of the torsion gap.
    """

    p: int
    s: int
    branch: int
    sub: str
    nu: int
    k: int
    delta: int
    l: int
    j_range: tuple[int, int]
    free_param_count: int
    t: int


def _descriptor(p: int, s: int, sub: str, nu: int, k: int) -> CaseDescriptor:
    n = p**s
    l = n - 1 - 2 * k
    delta = (n - 1) // 2 - k
    jmin, jmax = column_index_range(l, delta) if l > 0 else (1, 0)
    free = max(0, jmax - jmin + 1)
    return CaseDescriptor(p, s, n % 4, sub, nu, k, delta, l, (jmin, jmax), free, n - 2 * k)


def _validate_ps(p: int, s: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")


def classify_cases(p: int, s: int) -> list[CaseDescriptor]:
    """The complete, duplicate-free list of parameter families; the
    multiset of k values is exactly 0..(p^s - 1)/2."""
    _validate_ps(p, s)
    n = p**s
    if n % 4 == 3:
        top = (n + 1) // 4
        even = [_descriptor(p, s, CASE_EVEN_K, nu, 2 * nu) for nu in range(top)]
        odd = [_descriptor(p, s, CASE_ODD_K, nu, 2 * nu + 1) for nu in range(top)]
        return even + odd
    top = (n - 1) // 4
    out = [_descriptor(p, s, CASE_K0, 0, 0)]
    out += [_descriptor(p, s, CASE_EVEN_K, nu, 2 * nu) for nu in range(1, top + 1)]
    out += [_descriptor(p, s, CASE_ODD_K, nu, 2 * nu - 1) for nu in range(1, top + 1)]
    return out


@dataclass(frozen=True)
class CodeSpec:
    """One concrete self-dual cyclic code: its family, the chosen free
    parameters (ascending column index), the assembled b polynomial in
    the (x-1)-adic basis, and the generator presentation."""

    descriptor: CaseDescriptor
    params: tuple[FqElem, ...]
    b_coeffs: XPoly
    generators: RIdealGens


def _indicator_std(field: FieldSpec, n: int, position: int) -> tuple[FqElem, ...]:
    """(x-1)^position inside F[x]/(x^n - 1), in standard coordinates."""
    coeffs = [field.zero()] * n
    coeffs[position] = field.one()
    return basis_convert(field, coeffs, XM1_TO_STD)


def _generators(field: FieldSpec, desc: CaseDescriptor, b: XPoly) -> RIdealGens:
    n = desc.p**desc.s
    zero = field.zero()
    k = desc.k

    shifted = [zero] * n
    for i, c in enumerate(b.coeffs):
        shifted[k + 1 + i] = c  # (x-1)^(k+1) * b(x)
    a_std = basis_convert(field, shifted, XM1_TO_STD)
    u_std = _indicator_std(field, n, k)  # u-part (x-1)^k
    g1: RVector = tuple(zip(a_std, u_std))
    if k == 0:
        return RIdealGens(field=field, ring_sign=1, generators=(g1,))
    g2: RVector = tuple((c, zero) for c in _indicator_std(field, n, n - k))
    return RIdealGens(field=field, ring_sign=1, generators=(g1, g2))


def build_code(desc: CaseDescriptor, params: Sequence[FqElem], field: FieldSpec) -> CodeSpec:
    """Assemble the code for one family and one choice of free
    parameters: b is the span element of the truncated solution basis,
    embedded at offset delta."""
    if field.p != desc.p:
        raise ValueError(f"field characteristic {field.p} does not match descriptor p={desc.p}")
    norm = tuple(field.element(a) for a in params)
    if len(norm) != desc.free_param_count:
        raise ValueError(f"expected {desc.free_param_count} parameters, got {len(norm)}")
    if desc.l > 0:
        tail = solution_basis(field, desc.l, desc.delta).combine(norm)
        b = XPoly(field, desc.l, (field.zero(),) * desc.delta + tail)
    else:
        b = XPoly(field, 0, ())
    return CodeSpec(desc, norm, b, _generators(field, desc, b))


def descriptor_codes(desc: CaseDescriptor, field: FieldSpec) -> Iterator[CodeSpec]:
    """All codes of one family, parameters in lexicographic order."""
    for combo in itertools.product(field.elements(), repeat=desc.free_param_count):
        yield build_code(desc, combo, field)


def enumerate_codes(p: int, m: int, s: int, field: FieldSpec | None = None) -> Iterator[CodeSpec]:
    """Every self-dual cyclic code of length p^s over F_{p^m} + u F_{p^m},
    exactly once, in deterministic order; O(1) codes held in memory."""
    if field is None:
        field = find_irreducible(p, m)
    elif (field.p, field.m) != (p, m):
        raise ValueError(f"field is F_{field.p}^{field.m}, expected F_{p}^{m}")
    for desc in classify_cases(p, s):
        yield from descriptor_codes(desc, field)


def descriptor_count(desc: CaseDescriptor, m: int) -> int:
    """Number of codes in one family: (p^m)^free_param_count."""
    return (desc.p**m) ** desc.free_param_count


def count_self_dual(p: int, m: int, s: int) -> int:
    """Exact closed-form total.  Geometric parts are summed term by term
    in exact integers, never via division."""
    _validate_ps(p, s)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = p**s
    q = p**m
    if n % 4 == 3:
        return 2 * sum(q**t for t in range((n + 1) // 4))
    return q ** ((n - 1) // 4) + 2 * sum(q**t for t in range((n - 1) // 4))


def to_negacyclic(code: CodeSpec) -> RIdealGens:
    """Image under x -> -x: odd-degree standard coefficients change
    sign, and the result generates a negacyclic (x^N + 1) ideal.  The
    map is a ring isomorphism, so it carries self-dual cyclic codes
    bijectively onto self-dual negacyclic ones."""
    field = code.generators.field
    flipped = []
    for g in code.generators.generators:
        flipped.append(
            tuple(
                (a, b) if d % 2 == 0 else (field.neg(a), field.neg(b))
                for d, (a, b) in enumerate(g)
            )
        )
    return RIdealGens(field=field, ring_sign=-1, generators=tuple(flipped))


def sample_codes(p: int, m: int, s: int, count: int, seed: int = 0) -> Iterator[CodeSpec]:
    """``count`` codes drawn uniformly at random from the full family,
    reproducibly from ``seed``.  A CLI convenience: family weights are
    exact big integers, so the draw is uniform even for huge families."""
    field = find_irreducible(p, m)
    descs = classify_cases(p, s)
    weights = [descriptor_count(d, m) for d in descs]
    total = sum(weights)
    rng = random.Random(seed)
    for _ in range(count):
        r = rng.randrange(total)
        for desc, w in zip(descs, weights):
            if r < w:
                break
            r -= w
        params = tuple(
            tuple(rng.randrange(p) for _ in range(m)) for _ in range(desc.free_param_count)
        )
        yield build_code(desc, params, field)
