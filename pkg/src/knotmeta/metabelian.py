"""Census of irreducible metabelian SL(2,C) characters of a knot group.

The count is (|Delta_K(-1)| - 1)/2; the classes are the nonzero solutions
of (V + V^T) theta = 0 over Q/Z, taken up to theta <-> -theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import Mat2, RootUnitySum
from .intlinalg import torsion_solutions
from .knotdata import KnotDataError, SeifertKnot, determinant_of_knot


@dataclass(frozen=True)
class MetabelianClass:
    """A conjugacy class of irreducible metabelian representations,
    encoded by the canonical rotation vector of generator eigenvalues."""

    thetas: tuple
    order: int  # lcm of denominators: the common order of the eigenvalues

    def __post_init__(self):
        if all(t == 0 for t in self.thetas):
            raise ValueError("metabelian class cannot be the trivial vector")


@dataclass(frozen=True)
class MetabelianRep:
    mu_image: Mat2
    generator_images: tuple


def count_metabelian(K) -> int:
    """(det - 1)/2, the number of irreducible metabelian characters."""
    d = determinant_of_knot(K)
    if d % 2 == 0:
        raise KnotDataError(f"knot determinant {d} is even; invalid knot data")
    return (d - 1) // 2


def canonical_rotation(thetas) -> tuple:
    """Lexicographic minimum of {theta, -theta mod 1}."""
    thetas = tuple(Fraction(t) % 1 for t in thetas)
    neg = tuple((-t) % 1 for t in thetas)
    return min(thetas, neg)


def enumerate_metabelian(K: SeifertKnot) -> list:
    """All metabelian classes of K, lexicographically sorted.

    Always returns exactly (|det(V+V^T)| - 1)/2 classes: the trivial
    torsion solution is discarded and theta ~ -theta identified.
    """
    W = K.symmetrized()
    classes = set()
    for theta in torsion_solutions(W):
        if all(t == 0 for t in theta):
            continue
        classes.add(canonical_rotation(theta))
    out = [
        MetabelianClass(thetas=t, order=math.lcm(*(x.denominator for x in t)))
        for t in sorted(classes)
    ]
    expected = count_metabelian(K)
    if len(out) != expected:
        raise AssertionError(
            f"{K.name}: enumerated {len(out)} classes, expected {expected}"
        )
    return out


def _rep_from_thetas(thetas) -> MetabelianRep:
    zero = RootUnitySum()
    one = RootUnitySum.const(1)
    mu = Mat2(zero, one, -one, zero)
    gens = tuple(
        Mat2(RootUnitySum.root(t), zero, zero, RootUnitySum.root((-t) % 1))
        for t in thetas
    )
    return MetabelianRep(mu_image=mu, generator_images=gens)


def build_representation(c: MetabelianClass) -> MetabelianRep:
    """Exact matrices: mu -> [[0,1],[-1,0]] (b fixed to 1, all choices of b
    being conjugate) and x_j -> diag(zeta^theta_j, zeta^-theta_j)."""
    return _rep_from_thetas(c.thetas)


@dataclass(frozen=True)
class ClassReport:
    knot: str
    thetas: tuple
    relation_ok: bool
    irreducible_ok: bool
    meridian_trace_zero: bool
    failures: tuple = ()

    @property
    def ok(self) -> bool:
        return self.relation_ok and self.irreducible_ok and self.meridian_trace_zero

    def to_dict(self) -> dict:
        return {
            "knot": self.knot,
            "thetas": [str(t) for t in self.thetas],
            "relation_ok": self.relation_ok,
            "irreducible_ok": self.irreducible_ok,
            "meridian_trace_zero": self.meridian_trace_zero,
            "ok": self.ok,
            "failures": list(self.failures),
        }


def verify_class(K: SeifertKnot, c) -> ClassReport:
    """Certify a class: (a) W theta = 0 mod 1 row by row (the relation
    mu alpha_i mu^-1 = beta_i for monomial images), (b) theta != 0 so some
    generator trace differs from 2 (irreducibility), (c) trace of the
    meridian image is 0.

    Accepts a MetabelianClass or a bare rotation tuple, so deliberately
    bad vectors (including zero) can be fed through the same checks."""
    thetas = tuple(Fraction(t) % 1 for t in getattr(c, "thetas", c))
    W = K.symmetrized().entries
    failures = []
    relation_ok = True
    for i, row in enumerate(W):
        s = sum((w * t for w, t in zip(row, thetas)), Fraction(0))
        if s % 1 != 0:
            relation_ok = False
            failures.append(f"row {i}: W.theta = {s} is not an integer")

    irreducible_ok = any(t != 0 for t in thetas)
    if not irreducible_ok:
        failures.append("theta = 0: abelian, not irreducible")

    rep = _rep_from_thetas(thetas)
    meridian_trace_zero = rep.mu_image.trace().is_zero()
    if not meridian_trace_zero:
        failures.append("trace of meridian image is not 0")

    return ClassReport(
        knot=K.name,
        thetas=thetas,
        relation_ok=relation_ok,
        irreducible_ok=irreducible_ok,
        meridian_trace_zero=meridian_trace_zero,
        failures=tuple(failures),
    )
