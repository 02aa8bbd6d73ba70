"""Riley apparatus for 2-bridge knots S(p,q): word holonomy over
Z[s^{+-1}][u] (s^2 = t), the Riley polynomial, its t = -1 section, and
exact verification of the relator and longitude identities mod phi.

At t = -1 every generator image is i times an involutive integer matrix:

    rho(x1) = i*N1,  N1 = [[1,-1],[0,-1]],
    rho(x2) = i*N2,  N2 = [[1,0],[-u,-1]],   N1^2 = N2^2 = id,

so the holonomy of any word is i^sigma times a product of N-matrices with
integer polynomial entries. All t = -1 computation runs over plain integer
coefficient lists; the Laurent route (word_holonomy + eval_s_to_i) is kept
as the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import (
    LB_ONE,
    LB_S,
    LB_S_INV,
    LB_U,
    LB_ZERO,
    LaurentBiPoly,
    Mat2,
    UniPoly,
    laurent_pseudo_rem_u,
    poly_derivative,
    poly_gcd,
)
from .knotdata import GroupWord, TwoBridge, longitude_word, relator_word
from .metabelian import count_metabelian


class RileyError(RuntimeError):
    """An identity the theory guarantees failed: bad input or a bug."""


# ---------------------------------------------------------------------------
# Laurent-ring holonomy (the general-t route)

_X1 = Mat2(LB_S, LB_S_INV, LB_ZERO, LB_S_INV)
_X2 = Mat2(LB_S, LB_ZERO, -(LB_S * LB_U), LB_S_INV)
# adjugate inverses (determinants are 1)
_X1_INV = Mat2(LB_S_INV, -LB_S_INV, LB_ZERO, LB_S)
_X2_INV = Mat2(LB_S_INV, LB_ZERO, LB_S * LB_U, LB_S)


@dataclass(frozen=True)
class RileyHolonomy:
    x1: Mat2 = _X1
    x2: Mat2 = _X2


def word_holonomy(H: RileyHolonomy, w: GroupWord) -> Mat2:
    """Exact product of generator images over Z[s^{+-1}][u]."""
    images = {
        (1, 1): H.x1,
        (2, 1): H.x2,
        (1, -1): _X1_INV,
        (2, -1): _X2_INV,
    }
    acc = Mat2.identity(LB_ONE, LB_ZERO)
    for letter in w.letters:
        acc = acc * images[letter]
    return acc


def riley_polynomial(K: TwoBridge) -> LaurentBiPoly:
    """phi(t,u) = w11 + (1 - t) w12 from the relator holonomy. Lives in
    Z[t^{+-1}][u]: only even s-exponents may appear."""
    rho_w = word_holonomy(RileyHolonomy(), relator_word(K))
    phi = rho_w.a + (LB_ONE - LB_S * LB_S) * rho_w.b
    if not phi.s_exponents_all_even():
        raise RileyError(
            f"{K.name}: Riley polynomial has odd s-exponents; invariant breach"
        )
    return phi


# ---------------------------------------------------------------------------
# Fast integer path at t = -1

def _trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _iadd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, x in enumerate(b):
        out[k] += x
    return _trim(out)


def _ineg(a: tuple) -> tuple:
    return tuple(-x for x in a)


def _ishift(a: tuple) -> tuple:
    """Multiply by u."""
    return (0,) + a if a else ()


def _imul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for j, x in enumerate(a):
        if x:
            for k, y in enumerate(b):
                out[j + k] += x * y
    return _trim(out)


def _isub(a: tuple, b: tuple) -> tuple:
    return _iadd(a, _ineg(b))

_IZERO = ()
_IONE = (1,)


def _holonomy_at_i(w: GroupWord):
    """rho(w) at t = -1 as (k, P): a unit i^k and a 2x2 integer-polynomial
    matrix, rho(w) = i^k * P."""
    A, B, C, D = _IONE, _IZERO, _IZERO, _IONE
    k = 0
    for g, e in w.letters:
        k += 1 if e == 1 else 3
        if g == 1:
            # right-multiply by N1 = [[1,-1],[0,-1]]
            A, B = A, _ineg(_iadd(A, B))
            C, D = C, _ineg(_iadd(C, D))
        else:
            # right-multiply by N2 = [[1,0],[-u,-1]]
            A, B = _isub(A, _ishift(B)), _ineg(B)
            C, D = _isub(C, _ishift(D)), _ineg(D)
    return k % 4, (A, B, C, D)


def _power_x1x2_at_i(n: int):
    """((rho(x1) rho(x2)) at t=-1)^n = [[-1-u,-1],[-u,-1]]^n, folded with
    shift/add steps only."""
    A, B, C, D = _IONE, _IZERO, _IZERO, _IONE
    for _ in range(n):
        # right-multiply by M = [[-1-u,-1],[-u,-1]]
        A, B = _isub(_ineg(A), _ishift(_iadd(A, B))), _ineg(_iadd(A, B))
        C, D = _isub(_ineg(C), _ishift(_iadd(C, D))), _ineg(_iadd(C, D))
    return A, B, C, D


def _irem_monic(a: tuple, phi: tuple) -> tuple:
    """Remainder of a by a monic integer polynomial phi; stays over Z."""
    assert phi and phi[-1] == 1
    d = len(phi) - 1
    rem = list(a)
    for k in range(len(rem) - 1, d - 1, -1):
        c = rem[k]
        if not c:
            continue
        for j in range(d + 1):
            rem[k - d + j] -= c * phi[j]
    return _trim(rem[: d])


def _content_normalize(a: tuple) -> tuple:
    """Divide out the integer content and make the leading coefficient
    positive."""
    import math

    if not a:
        return a
    g = 0
    for x in a:
        g = math.gcd(g, abs(x))
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a)


def _scaled_eq(k: int, P: tuple, Q: tuple) -> bool:
    """i^k * P == Q for integer matrices, k even."""
    sign = 1 if k % 4 == 0 else -1
    return all(
        (p if sign == 1 else _ineg(p)) == q for p, q in zip(P, Q)
    )


# ---------------------------------------------------------------------------
# The t = -1 section

@dataclass(frozen=True)
class RileySection:
    p: int
    q: int
    phi: UniPoly     # phi(-1,u), content-free, positive leading coefficient
    w11: UniPoly     # w11(-1,u)
    w12: UniPoly     # w12(-1,u)
    roots_count: int  # = degree of phi, with multiplicity
    squarefree: bool


def section_at_minus_one(K: TwoBridge) -> RileySection:
    """Specialize the Riley apparatus at t = -1 and check every structural
    claim: degrees (p-1)/2 and (p-3)/2, the product identity
    rho(w) = (rho(x1) rho(x2))^{(p-1)/2}, unit leading coefficient, and
    squarefreeness of phi(-1,u)."""
    p = K.p
    half = (p - 1) // 2
    k, (P11, P12, P21, P22) = _holonomy_at_i(relator_word(K))
    if k % 2 != 0:
        raise RileyError(f"{K.name}: relator holonomy carries an odd power of i")
    sign = 1 if k == 0 else -1

    power = _power_x1x2_at_i(half)
    if not _scaled_eq(k, (P11, P12, P21, P22), power):
        raise RileyError(
            f"{K.name}: letter-product holonomy differs from the "
            f"(rho(x1)rho(x2))^{half} power form at t = -1"
        )

    w11 = tuple(sign * x for x in P11)
    w12 = tuple(sign * x for x in P12)
    if len(w11) - 1 != half:
        raise RileyError(
            f"{K.name}: deg w11(-1,u) = {len(w11) - 1}, expected {half}"
        )
    if len(w12) - 1 != half - 1:
        raise RileyError(
            f"{K.name}: deg w12(-1,u) = {len(w12) - 1}, expected {half - 1}"
        )

    phi_raw = _iadd(w11, _iadd(w12, w12))
    if not phi_raw or abs(phi_raw[-1]) != 1:
        raise RileyError(f"{K.name}: phi(-1,u) leading coefficient is not a unit")
    if len(phi_raw) - 1 != half:
        raise RileyError(
            f"{K.name}: deg phi(-1,u) = {len(phi_raw) - 1}, expected {half}"
        )
    phi_int = _content_normalize(phi_raw)

    phi = UniPoly(phi_int)
    squarefree = poly_gcd(phi, poly_derivative(phi)).degree == 0
    if not squarefree:
        # would contradict the distinctness of the (p-1)/2 solutions
        raise RileyError(f"{K.name}: phi(-1,u) = {phi} is not squarefree")

    return RileySection(
        p=K.p,
        q=K.q,
        phi=phi,
        w11=UniPoly(w11),
        w12=UniPoly(w12),
        roots_count=len(phi_int) - 1,
        squarefree=squarefree,
    )


# ---------------------------------------------------------------------------
# Verification in the residue ring Q(i)[u]/(phi(-1,u))

@dataclass(frozen=True)
class RelatorReport:
    knot: str
    ok: bool
    residues: tuple  # the four entries of rho(w)rho(x1) - rho(x2)rho(w) mod phi

    def to_dict(self) -> dict:
        return {
            "knot": self.knot,
            "ok": self.ok,
            "residues": [str(r) for r in self.residues],
        }


def verify_relator_mod_phi(K: TwoBridge) -> RelatorReport:
    """Check rho(w) rho(x1) = rho(x2) rho(w) entry-wise in the residue
    ring mod phi(-1,u)."""
    section = section_at_minus_one(K)
    phi_int = tuple(int(c.re) for c in section.phi.coeffs)
    _k, P = _holonomy_at_i(relator_word(K))
    A, B, C, D = P
    # rho(w)rho(x1) - rho(x2)rho(w) = i^{k+1} (P N1 - N2 P)
    lhs = (
        A,
        _ineg(_iadd(A, B)),
        C,
        _ineg(_iadd(C, D)),
    )
    rhs = (
        A,
        B,
        _isub(_ineg(_ishift(A)), C),
        _isub(_ineg(_ishift(B)), D),
    )
    residues = tuple(
        UniPoly(_irem_monic(_isub(l, r), phi_int)) for l, r in zip(lhs, rhs)
    )
    return RelatorReport(
        knot=K.name,
        ok=all(r.is_zero() for r in residues),
        residues=residues,
    )


@dataclass(frozen=True)
class LongitudeReport:
    knot: str
    result: str  # "id", "-id", or "neither"
    trace_is_two: bool

    @property
    def ok(self) -> bool:
        return self.result == "id"

    def to_dict(self) -> dict:
        return {
            "knot": self.knot,
            "result": self.result,
            "trace_is_two": self.trace_is_two,
            "ok": self.ok,
        }


def verify_longitude_mod_phi(K: TwoBridge) -> LongitudeReport:
    """Evaluate the longitude holonomy at t = -1 in the residue ring and
    report whether it is +id (the expected value, giving trace 2), -id,
    or neither."""
    section = section_at_minus_one(K)
    phi_int = tuple(int(c.re) for c in section.phi.coeffs)
    k, (A, B, C, D) = _holonomy_at_i(longitude_word(K))
    if k % 2 != 0:
        return LongitudeReport(knot=K.name, result="neither", trace_is_two=False)
    sign = 1 if k == 0 else -1
    a, b, c, d = (
        _irem_monic(tuple(sign * x for x in e), phi_int) for e in (A, B, C, D)
    )
    if b == () and c == ():
        if a == (1,) and d == (1,):
            result = "id"
        elif a == (-1,) and d == (-1,):
            result = "-id"
        else:
            result = "neither"
    else:
        result = "neither"
    trace = _irem_monic(_isub(_iadd(a, d), (2,)), phi_int)
    return LongitudeReport(knot=K.name, result=result, trace_is_two=trace == ())


@dataclass(frozen=True)
class CrossCheckReport:
    knot: str
    riley_root_count: int
    half_p_minus_one: int
    metabelian_count: int

    @property
    def ok(self) -> bool:
        return (
            self.riley_root_count
            == self.half_p_minus_one
            == self.metabelian_count
        )

    def to_dict(self) -> dict:
        return {
            "knot": self.knot,
            "riley_root_count": self.riley_root_count,
            "half_p_minus_one": self.half_p_minus_one,
            "metabelian_count": self.metabelian_count,
            "ok": self.ok,
        }


def cross_check_counts(K: TwoBridge) -> CrossCheckReport:
    """Distinct roots of phi(-1,u) vs (p-1)/2 vs the metabelian census."""
    section = section_at_minus_one(K)
    # squarefree, so distinct roots = degree
    return CrossCheckReport(
        knot=K.name,
        riley_root_count=section.roots_count,
        half_p_minus_one=(K.p - 1) // 2,
        metabelian_count=count_metabelian(K),
    )


# ---------------------------------------------------------------------------
# Display-only root isolation (Sturm bisection; exact until final rendering)

def _sturm_chain(p: UniPoly):
    from .exactalg import poly_rem

    chain = [p, poly_derivative(p)]
    while not chain[-1].is_zero():
        chain.append(-poly_rem(chain[-2], chain[-1]))
    chain.pop()
    return chain


def _sign_changes(chain, x) -> int:
    signs = []
    for p in chain:
        v = p(x).re
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def approx_real_roots(phi: UniPoly, bits: int = 50):
    """Approximate real roots of a squarefree real polynomial, for display
    only. Returns (floats, complex_pair_count). Isolation and bisection run
    over exact rationals; only the final rendering is floating point."""
    from fractions import Fraction

    if any(c.im != 0 for c in phi.coeffs):
        raise ValueError("approx_real_roots expects a real polynomial")
    if phi.degree < 1:
        return [], 0
    lead = abs(phi.lead.re)
    bound = 1 + max(abs(c.re) for c in phi.coeffs) / lead
    chain = _sturm_chain(phi)

    def count(a, b):
        return _sign_changes(chain, a) - _sign_changes(chain, b)

    roots = []
    stack = [(Fraction(-bound), Fraction(bound))]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            lo, hi = a, b
            for _ in range(bits):
                mid = (lo + hi) / 2
                if count(lo, mid) == 1:
                    hi = mid
                else:
                    lo = mid
            roots.append(float((lo + hi) / 2))
            continue
        mid = (a + b) / 2
        # nudge off an exact root of phi
        while phi(mid).re == 0:
            mid = (a + mid) / 2
        stack.extend([(a, mid), (mid, b)])
    roots.sort()
    complex_pairs = (phi.degree - len(roots)) // 2
    return roots, complex_pairs


def verify_relator_general_t(K: TwoBridge) -> RelatorReport:
    """The relator identity over Z[s^{+-1}][u] modulo phi(t,u), via
    pseudo-remainders in u. Exact but costly; off the default path."""
    phi = riley_polynomial(K)
    H = RileyHolonomy()
    rho_w = word_holonomy(H, relator_word(K))
    diff = rho_w * H.x1 - H.x2 * rho_w
    residues = tuple(laurent_pseudo_rem_u(e, phi) for e in diff.entries())
    return RelatorReport(
        knot=K.name,
        ok=all(r.is_zero() for r in residues),
        residues=residues,
    )
