"""The field tower L = Q(alpha) over K = Q(alpha + 1/alpha): membership
classification, embedding classes, signatures, and the multiplication matrix."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .intpoly import (
    UNKNOWN,
    IntPoly,
    IrreducibilityReport,
    irreducibility_report,
)
from .roots import (
    NONREAL_LOWER,
    NONREAL_UPPER,
    ON_CIRCLE,
    OUTSIDE,
    REAL,
    RootProfile,
    count_real_roots,
    refine_roots,
)

REAL_SPLIT = "real_split"
COMPLEX_SPLIT = "complex_split"
CIRCLE_COMPACT = "circle_compact"


@dataclass(frozen=True)
class PsrClassification:
    poly: IntPoly
    member: bool
    reason: Optional[str]
    s: Optional[int]
    r: Optional[int]
    satisfies_L: Optional[bool]
    irreducibility: Optional[IrreducibilityReport]

    @property
    def irreducibility_unknown(self) -> bool:
        return bool(self.irreducibility and self.irreducibility.status == UNKNOWN)


def classify_Psr(p: IntPoly, precision: float = 1e-12) -> PsrClassification:
    """Membership in the monic/irreducible/palindromic class with exact (s, r).

    satisfies_L records whether p has at least one root of absolute value 1
    (equivalently deg p > 2 s(p) for members).
    """
    if p.is_zero:
        return PsrClassification(p, False, "zero polynomial", None, None, None, None)
    if not p.is_monic:
        return PsrClassification(p, False, "not monic", None, None, None, None)
    if not p.is_palindromic():
        return PsrClassification(p, False, "not palindromic", None, None, None, None)
    if p.degree < 2 or p.degree % 2 != 0:
        return PsrClassification(p, False, "degree not even >= 2", None, None, None, None)
    report = irreducibility_report(p)
    if report.status == "reducible":
        return PsrClassification(p, False, "reducible", None, None, None, report)
    profile = refine_roots(p, precision)
    return PsrClassification(
        p, True, None, profile.s, profile.r, profile.on_circle >= 1, report
    )


@dataclass(frozen=True)
class Embedding:
    index: int  # 1-based, following the root ordering convention
    alpha_value: complex
    radius: float
    klass: str

    @property
    def trace_value(self) -> complex:
        return self.alpha_value + 1 / self.alpha_value


@dataclass(frozen=True)
class FieldSummary:
    poly: IntPoly
    trace_poly: IntPoly
    embeddings: tuple[Embedding, ...]
    signature_K: tuple[int, int]
    s: int
    r: int
    d: int
    irreducibility_unknown: bool

    @property
    def t(self) -> int:
        return (self.s - self.r) // 2


def field_summary(p: IntPoly, precision: float = 1e-12) -> FieldSummary:
    """Build the embedding data of K = Q(alpha + 1/alpha) for a member p.

    The d embeddings of K are classified by the location of the chosen
    alpha-preimage: real split (i <= r), complex split (r < i <= s), circle
    compact (s < i <= d).  The computed signature must equal
    (r - s + d, (s - r)/2) and is cross-checked against an independent Sturm
    count of the real roots of the trace polynomial.
    """
    cls = classify_Psr(p, precision)
    if not cls.member:
        raise ValueError(f"not a member polynomial: {cls.reason}")
    profile = refine_roots(p, precision)
    s, r = profile.s, profile.r
    d = p.degree // 2
    trace_poly = p.trace_polynomial()

    # exact identity p(y) = y^d * Q(y + 1/y), re-expanded as
    # sum_k q_k (y^2 + 1)^k y^(d - k)
    expand = IntPoly()
    y2p1 = IntPoly((1, 0, 1))
    for k, qk in enumerate(trace_poly.coeffs):
        expand = expand + qk * (y2p1**k * IntPoly.x_power(d - k))
    if expand != p:
        raise AssertionError("trace-polynomial identity failed to re-expand")

    real_out = [z for z in profile.roots if z.location == OUTSIDE and z.realness == REAL]
    upper_out = [
        z for z in profile.roots if z.location == OUTSIDE and z.realness == NONREAL_UPPER
    ]
    lower_out = [
        z for z in profile.roots if z.location == OUTSIDE and z.realness == NONREAL_LOWER
    ]
    circle_upper = [
        z for z in profile.roots if z.location == ON_CIRCLE and z.realness == NONREAL_UPPER
    ]
    if len(circle_upper) != d - s:
        raise AssertionError("circle roots of an irreducible member must pair")

    embeddings: list[Embedding] = []
    index = 1
    for z in real_out:
        embeddings.append(Embedding(index, z.approx, z.radius, REAL_SPLIT))
        index += 1
    # conjugate-paired order: upper entries at r+1..r+t, conjugates after
    for z in upper_out + lower_out:
        embeddings.append(Embedding(index, z.approx, z.radius, COMPLEX_SPLIT))
        index += 1
    for z in circle_upper:
        embeddings.append(Embedding(index, z.approx, z.radius, CIRCLE_COMPACT))
        index += 1

    signature = (r - s + d, (s - r) // 2)
    real_trace_roots = count_real_roots(trace_poly)
    if real_trace_roots != signature[0] or signature[0] + 2 * signature[1] != d:
        raise AssertionError(
            f"signature mismatch: formula {signature}, Sturm count {real_trace_roots}"
        )
    return FieldSummary(
        poly=p,
        trace_poly=trace_poly,
        embeddings=tuple(embeddings),
        signature_K=signature,
        s=s,
        r=r,
        d=d,
        irreducibility_unknown=cls.irreducibility_unknown,
    )


def multiplication_matrix(p: IntPoly) -> list[list[int]]:
    """Companion matrix of p: multiplication by alpha on Q[x]/(p) in the
    power basis.  Determinant is +1 for palindromic p of even degree."""
    if p.is_zero or not p.is_monic:
        raise ValueError("multiplication matrix requires a monic polynomial")
    n = p.degree
    if n == 0:
        raise ValueError("degree must be >= 1")
    mat = [[0] * n for _ in range(n)]
    for k in range(n - 1):
        mat[k + 1][k] = 1
    for i in range(n):
        mat[i][n - 1] = -p.coeffs[i]
    return mat


def trace_field_block() -> tuple[tuple[object, ...], ...]:
    """The 2x2 multiplication-by-alpha block over K in the basis {1, alpha}:
    [[0, -1], [1, w]] with w the trace generator alpha + 1/alpha."""
    return ((0, -1), (1, "w"))
