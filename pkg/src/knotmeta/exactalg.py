"""Exact arithmetic kernel: Gaussian rationals, dense univariate polynomials
over Q(i), the sparse bivariate Laurent ring Z[s^{+-1}][u], generic 2x2
matrices, residue rings Q(i)[u]/(phi), and formal sums of roots of unity.

Everything here is immutable and pure; no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

NEG_INF = float("-inf")  # degree of the zero polynomial


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class GaussRat:
    """A Gaussian rational re + im*i, components held as exact Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, *args):
        raise AttributeError("GaussRat is immutable")

    @classmethod
    def coerce(cls, v) -> "GaussRat":
        if isinstance(v, GaussRat):
            return v
        if isinstance(v, (int, Fraction)):
            return cls(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to GaussRat")

    def one_like(self) -> "GaussRat":
        return GR_ONE

    def zero_like(self) -> "GaussRat":
        return GR_ZERO

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussRat(other)
        if not isinstance(other, GaussRat):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = GaussRat.coerce(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRat.coerce(other))

    def __rsub__(self, other):
        return GaussRat.coerce(other) + (-self)

    def __mul__(self, other):
        other = GaussRat.coerce(other)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inv(self) -> "GaussRat":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero GaussRat")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussRat.coerce(other).inv()

    def __rtruediv__(self, other):
        return GaussRat.coerce(other) * self.inv()

    def is_rational(self) -> bool:
        return self.im == 0

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"


GR_ZERO = GaussRat(0)
GR_ONE = GaussRat(1)
GR_I = GaussRat(0, 1)

# i^k for k mod 4
I_POWERS = (GR_ONE, GR_I, GaussRat(-1), GaussRat(0, -1))


class UniPoly:
    """Dense univariate polynomial in u over the Gaussian rationals.

    coeffs[k] is the coefficient of u^k; the empty tuple is the zero
    polynomial and its degree is the -inf sentinel.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [GaussRat.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def from_ints(cls, *coeffs) -> "UniPoly":
        return cls(coeffs)

    @classmethod
    def coerce(cls, v) -> "UniPoly":
        if isinstance(v, UniPoly):
            return v
        return cls((GaussRat.coerce(v),))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> GaussRat:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def one_like(self) -> "UniPoly":
        return UP_ONE

    def zero_like(self) -> "UniPoly":
        return UP_ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = UniPoly.coerce(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = UniPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-UniPoly.coerce(other))

    def __rsub__(self, other):
        return UniPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            c = GaussRat.coerce(other)
            return UniPoly(tuple(a * c for a in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UP_ZERO
        out = [GR_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            for k, b in enumerate(other.coeffs):
                out[j + k] = out[j + k] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __call__(self, x) -> GaussRat:
        x = GaussRat.coerce(x)
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            raise ValueError("cannot make the zero polynomial monic")
        inv = self.lead.inv()
        return UniPoly(tuple(c * inv for c in self.coeffs))

    def shift(self, k: int) -> "UniPoly":
        """Multiply by u^k."""
        if not self.coeffs:
            return UP_ZERO
        return UniPoly((GR_ZERO,) * k + self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*u")
            else:
                parts.append(f"({c})*u^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"UniPoly({self})"


UP_ZERO = UniPoly()
UP_ONE = UniPoly((GR_ONE,))
UP_U = UniPoly((GR_ZERO, GR_ONE))


def poly_add(p: UniPoly, q: UniPoly) -> UniPoly:
    return p + q


def poly_mul(p: UniPoly, q: UniPoly) -> UniPoly:
    return p * q


def poly_derivative(p: UniPoly) -> UniPoly:
    return UniPoly(tuple(c * k for k, c in enumerate(p.coeffs) if k >= 1))


def poly_divmod(p: UniPoly, d: UniPoly) -> tuple[UniPoly, UniPoly]:
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.degree < d.degree:
        return UP_ZERO, p
    rem = list(p.coeffs)
    dd = d.degree
    inv_lead = d.lead.inv()
    quot = [GR_ZERO] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if not c:
            continue
        f = c * inv_lead
        quot[k - dd] = f
        for j, dc in enumerate(d.coeffs):
            rem[k - dd + j] = rem[k - dd + j] - f * dc
    return UniPoly(quot), UniPoly(rem[:dd])


def poly_rem(p: UniPoly, phi: UniPoly) -> UniPoly:
    return poly_divmod(p, phi)[1]


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q(i) by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, poly_rem(a, b)
    return a.monic()


def poly_xgcd(p: UniPoly, q: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (g, a, b) with a*p + b*q = g, g the monic gcd."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = p, q
    a0, a1 = UP_ONE, UP_ZERO
    b0, b1 = UP_ZERO, UP_ONE
    while not r1.is_zero():
        quot, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        a0, a1 = a1, a0 - quot * a1
        b0, b1 = b1, b0 - quot * b1
    inv = r0.lead.inv()
    return r0 * inv, a0 * inv, b0 * inv


class LaurentBiPoly:
    """Sparse element of Z[s^{+-1}][u]: map (s-exponent, u-exponent) -> int.

    The half variable s satisfies s^2 = t; u-exponents are nonnegative,
    s-exponents may be negative. Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (se, ue), c in terms.items():
                if not isinstance(c, int):
                    raise TypeError("LaurentBiPoly coefficients must be int")
                if ue < 0:
                    raise ValueError("u-exponents must be nonnegative")
                if c:
                    clean[(se, ue)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("LaurentBiPoly is immutable")

    @classmethod
    def const(cls, c: int) -> "LaurentBiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, s_exp: int, u_exp: int = 0) -> "LaurentBiPoly":
        return cls({(s_exp, u_exp): c})

    def one_like(self) -> "LaurentBiPoly":
        return LB_ONE

    def zero_like(self) -> "LaurentBiPoly":
        return LB_ZERO

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentBiPoly.const(other)
        if not isinstance(other, LaurentBiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentBiPoly.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentBiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentBiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentBiPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentBiPoly.const(other)
        if not isinstance(other, LaurentBiPoly):
            return NotImplemented
        out = {}
        for (s1, u1), c1 in self.terms.items():
            for (s2, u2), c2 in other.terms.items():
                k = (s1 + s2, u1 + u2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
        return LaurentBiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers not supported")
        acc, base = LB_ONE, self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def s_exponents_all_even(self) -> bool:
        return all(se % 2 == 0 for (se, _u) in self.terms)

    def u_degree(self):
        if not self.terms:
            return NEG_INF
        return max(ue for (_s, ue) in self.terms)

    def u_coefficient(self, ue: int) -> "LaurentBiPoly":
        """The coefficient of u^ue, as a Laurent polynomial in s alone."""
        return LaurentBiPoly(
            {(se, 0): c for (se, u), c in self.terms.items() if u == ue}
        )

    def eval_s_to_i(self) -> UniPoly:
        """Substitute s -> sqrt(-1) exactly, yielding a polynomial in u."""
        if not self.terms:
            return UP_ZERO
        out = [GR_ZERO] * (self.u_degree() + 1)
        for (se, ue), c in self.terms.items():
            out[ue] = out[ue] + I_POWERS[se % 4] * c
        return UniPoly(out)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (se, ue), c in self.sorted_terms():
            piece = str(c)
            if se:
                piece += f"*s^{se}"
            if ue:
                piece += f"*u^{ue}"
            parts.append(piece)
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentBiPoly({self})"


LB_ZERO = LaurentBiPoly()
LB_ONE = LaurentBiPoly.const(1)
LB_S = LaurentBiPoly.monomial(1, 1)
LB_S_INV = LaurentBiPoly.monomial(1, -1)
LB_U = LaurentBiPoly({(0, 1): 1})


def laurent_mul(p: LaurentBiPoly, q: LaurentBiPoly) -> LaurentBiPoly:
    return p * q


def laurent_eval_s_to_i(p: LaurentBiPoly) -> UniPoly:
    return p.eval_s_to_i()


def laurent_pseudo_rem_u(p: LaurentBiPoly, phi: LaurentBiPoly) -> LaurentBiPoly:
    """Pseudo-remainder of p by phi, viewed as polynomials in u.

    Each step multiplies the running remainder by the u-leading coefficient
    of phi, so over the integral domain Z[s^{+-1}] the result is zero exactly
    when phi divides p in (fraction field)[u].
    """
    if phi.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    d = phi.u_degree()
    lc = phi.u_coefficient(d)
    r = p
    while not r.is_zero() and r.u_degree() >= d:
        rd = r.u_degree()
        rlc = r.u_coefficient(rd)
        shift = LaurentBiPoly({(0, rd - d): 1})
        r = lc * r - rlc * shift * phi
    return r


class Residue:
    """Element of the quotient ring Q(i)[u]/(modulus)."""

    __slots__ = ("poly", "modulus")

    def __init__(self, poly: UniPoly, modulus: UniPoly):
        if modulus.is_zero():
            raise ZeroDivisionError("zero modulus")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "poly", poly_rem(UniPoly.coerce(poly), modulus))

    def __setattr__(self, *args):
        raise AttributeError("Residue is immutable")

    def _wrap(self, p) -> "Residue":
        return Residue(p, self.modulus)

    def one_like(self) -> "Residue":
        return self._wrap(UP_ONE)

    def zero_like(self) -> "Residue":
        return self._wrap(UP_ZERO)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __bool__(self):
        return bool(self.poly)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRat, UniPoly)):
            other = self._wrap(UniPoly.coerce(other))
        if not isinstance(other, Residue):
            return NotImplemented
        return self.modulus == other.modulus and self.poly == other.poly

    def __hash__(self):
        return hash((self.poly, self.modulus))

    def __add__(self, other):
        if isinstance(other, Residue):
            other = other.poly
        return self._wrap(self.poly + UniPoly.coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-self.poly)

    def __sub__(self, other):
        if isinstance(other, Residue):
            other = other.poly
        return self._wrap(self.poly - UniPoly.coerce(other))

    def __mul__(self, other):
        if isinstance(other, Residue):
            other = other.poly
        return self._wrap(self.poly * UniPoly.coerce(other))

    __rmul__ = __mul__

    def inv(self) -> "Residue":
        g, a, _b = poly_xgcd(self.poly, self.modulus)
        if g.degree != 0:
            raise ZeroDivisionError(
                f"non-invertible residue {self.poly} mod {self.modulus}"
            )
        return self._wrap(a * g.lead.inv())

    def __repr__(self):
        return f"Residue({self.poly} mod {self.modulus})"


class RootUnitySum:
    """Formal integer combination of roots of unity e^{2*pi*i*theta}.

    Keys are rotation numbers theta in [0,1) as exact Fractions. This is
    the ring where metabelian representation matrices live, so traces and
    determinants stay exact.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for theta, c in terms.items():
                theta = _frac(theta) % 1
                v = clean.get(theta, 0) + c
                if v:
                    clean[theta] = v
                elif theta in clean:
                    del clean[theta]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("RootUnitySum is immutable")

    @classmethod
    def root(cls, theta) -> "RootUnitySum":
        return cls({_frac(theta): 1})

    @classmethod
    def const(cls, c: int) -> "RootUnitySum":
        return cls({Fraction(0): c})

    def one_like(self) -> "RootUnitySum":
        return RootUnitySum.const(1)

    def zero_like(self) -> "RootUnitySum":
        return RootUnitySum()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RootUnitySum.const(other)
        if not isinstance(other, RootUnitySum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = RootUnitySum.const(other)
        out = dict(self.terms)
        for theta, c in other.terms.items():
            v = out.get(theta, 0) + c
            if v:
                out[theta] = v
            else:
                del out[theta]
        return RootUnitySum(out)

    __radd__ = __add__

    def __neg__(self):
        return RootUnitySum({t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = RootUnitySum.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = RootUnitySum.const(other)
        if not isinstance(other, RootUnitySum):
            return NotImplemented
        out = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                t = (t1 + t2) % 1
                v = out.get(t, 0) + c1 * c2
                if v:
                    out[t] = v
                else:
                    del out[t]
        return RootUnitySum(out)

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for theta, c in sorted(self.terms.items()):
            if theta == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"z({theta})")
            else:
                parts.append(f"{c}*z({theta})")
        return " + ".join(parts)

    def __repr__(self):
        return f"RootUnitySum({self})"


class Mat2:
    """2x2 matrix with entries in any of the kernel rings."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *args):
        raise AttributeError("Mat2 is immutable")

    @classmethod
    def identity(cls, one, zero) -> "Mat2":
        return cls(one, zero, zero, one)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __mul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return Mat2(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def scaled(self, c) -> "Mat2":
        return Mat2(self.a * c, self.b * c, self.c * c, self.d * c)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def mat2_mul(A: Mat2, B: Mat2) -> Mat2:
    return A * B


def mat2_inv_sl2(A: Mat2) -> Mat2:
    """Inverse via the adjugate. Requires det(A) = 1, or an invertible
    determinant in a ring providing .inv() (e.g. Residue)."""
    det = A.det()
    adj = Mat2(A.d, -A.b, -A.c, A.a)
    one = det.one_like() if hasattr(det, "one_like") else 1
    if det == one:
        return adj
    if hasattr(det, "inv"):
        return adj.scaled(det.inv())
    raise ValueError(f"matrix determinant {det} is not 1; cannot invert")
