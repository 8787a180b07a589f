"""Salem / complex-Salem certification and bounded exhaustive search."""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .intpoly import UNKNOWN, IntPoly, IrreducibilityReport, irreducibility_report
from .mahler import MahlerCertificate, kronecker_test, mahler_measure
from .roots import OUTSIDE, RootProfile, refine_roots

SALEM = "salem"
COMPLEX_SALEM = "complex_salem"
NEITHER = "neither"


@dataclass(frozen=True)
class SalemCertificate:
    poly: IntPoly
    kind: str
    salem_value: Optional[float]
    profile: RootProfile
    irreducibility: IrreducibilityReport

    @property
    def irreducibility_unknown(self) -> bool:
        return self.irreducibility.status == UNKNOWN


def certify(p: IntPoly, precision: float = 1e-12) -> SalemCertificate:
    """Classify p as Salem, complex Salem, or neither, from exact counts.

    Salem: s = 1, r = 1, at least one circle root, palindromic, irreducible,
    degree >= 4.  Complex Salem: exactly one conjugate pair outside the disk
    (s = 2, r = 0), at least one circle root, irreducible.  An Unknown
    irreducibility downgrades the kind to neither (flagged).
    """
    if p.is_zero or not p.is_monic or p.degree < 1:
        raise ValueError("certification requires a monic polynomial of degree >= 1")
    profile = refine_roots(p, precision)
    report = irreducibility_report(p)
    kind = NEITHER
    value = None
    if report.is_irreducible:
        if (
            profile.s == 1
            and profile.r == 1
            and profile.on_circle >= 1
            and p.is_palindromic()
            and p.degree >= 4
        ):
            kind = SALEM
        elif profile.s == 2 and profile.r == 0 and profile.on_circle >= 1:
            kind = COMPLEX_SALEM
    if kind != NEITHER:
        value = max(abs(z.approx) for z in profile.outside_roots())
    return SalemCertificate(p, kind, value, profile, report)


def complex_salem_from_salem(
    p: IntPoly, precision: float = 1e-12
) -> tuple[IntPoly, SalemCertificate]:
    """p(-x^2) for a Salem p: a complex-Salem candidate with the same measure."""
    base = certify(p, precision)
    if base.kind != SALEM:
        raise ValueError("input is not the minimal polynomial of a Salem number")
    q = p.compose_neg_x_squared()
    cert = certify(q, precision)
    m_p = mahler_measure(p, precision, profile=base.profile)
    m_q = mahler_measure(q, precision, profile=cert.profile)
    if abs(m_p.value - m_q.value) > m_p.error_radius + m_q.error_radius:
        raise AssertionError("measure not preserved under p(-x^2)")
    return q, cert


# ---------------------------------------------------------------------------
# Exhaustive search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchBox:
    degree_max: int
    height_max: int
    filter_sr: Optional[tuple[int, int]] = None
    palindromic_only: bool = False


@dataclass
class SearchResult:
    box: SearchBox
    minima: list[tuple[IntPoly, MahlerCertificate]] = field(default_factory=list)
    scanned: int = 0
    elapsed: float = 0.0
    complete: bool = True


def canonical_form(p: IntPoly) -> tuple[int, ...]:
    """Dedup key: lexicographically least monic representative among
    p, its reversal, p(-x), and the reversal of p(-x) (measure-preserving)."""
    candidates = []
    for q in (p, _negate_var(p)):
        candidates.append(q.coeffs)
        if abs(q.coeffs[0]) == 1:
            rev = q.reciprocal()
            if rev.leading < 0:
                rev = -rev
            candidates.append(rev.coeffs)
    return min(candidates)


def _negate_var(p: IntPoly) -> IntPoly:
    q = IntPoly(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs))
    return -q if q.leading < 0 else q


def _enumerate_monic(degree: int, height: int) -> Iterator[IntPoly]:
    rng = range(-height, height + 1)
    for lower in itertools.product(rng, repeat=degree):
        yield IntPoly(lower + (1,))


def _enumerate_palindromic(degree: int, height: int) -> Iterator[IntPoly]:
    # monic palindromic: constant term 1, mirrored interior coefficients
    if degree % 2 != 0:
        return  # odd-degree palindromics are divisible by x + 1: never minima
    half = degree // 2
    rng = range(-height, height + 1)
    for interior in itertools.product(rng, repeat=half):
        yield IntPoly((1,) + interior + tuple(reversed(interior[:-1])) + (1,))


def _candidates(box: SearchBox) -> Iterator[IntPoly]:
    gen = _enumerate_palindromic if box.palindromic_only else _enumerate_monic
    for degree in range(1, box.degree_max + 1):
        yield from gen(degree, box.height_max)


def search_box(
    degree_max: int,
    height_max: int,
    filter_sr: Optional[tuple[int, int]] = None,
    palindromic_only: bool = False,
    budget_seconds: Optional[float] = None,
    precision: float = 1e-10,
) -> SearchResult:
    """Enumerate monic polynomials in the box and rank Mahler measures > 1.

    Measure-1 polynomials are discarded by the exact Kronecker test; results
    are deduplicated under coefficient reversal and x -> -x, and sorted
    ascending by measure (deterministically, with the polynomial as
    tiebreaker).
    """
    box = SearchBox(degree_max, height_max, filter_sr, palindromic_only)
    result = SearchResult(box)
    start = time.monotonic()
    seen: set[tuple[int, ...]] = set()
    found: list[tuple[IntPoly, MahlerCertificate]] = []
    for p in _candidates(box):
        if budget_seconds is not None and time.monotonic() - start > budget_seconds:
            result.complete = False
            break
        result.scanned += 1
        key = canonical_form(p)
        if key in seen:
            continue
        seen.add(key)
        if kronecker_test(p):
            continue
        profile = refine_roots(p, precision)
        if filter_sr is not None and (profile.s, profile.r) != filter_sr:
            continue
        cert = mahler_measure(p, precision, profile=profile)
        found.append((p, cert))
    found.sort(key=lambda item: (item[1].value, item[0].coeffs))
    result.minima = found
    result.elapsed = time.monotonic() - start
    return result


@dataclass(frozen=True)
class BetaCertificate:
    n: int
    height_max: int
    poly: IntPoly
    salem_value: float
    log_value: float
    note: str = "upper bound for beta_n, certified minimal within the height box"


def beta_n(n: int, height_max: int, precision: float = 1e-12) -> BetaCertificate:
    """min log(alpha) over certified Salem polynomials of degree <= n within
    the height box.  Global minimality over all heights is not decided."""
    if n < 4 or n % 2 != 0:
        raise ValueError("beta_n requires an even n >= 4")
    best: Optional[tuple[float, IntPoly, float]] = None
    for degree in range(4, n + 1, 2):
        for p in _enumerate_palindromic(degree, height_max):
            if kronecker_test(p):
                continue
            cert = certify(p, precision)
            if cert.kind != SALEM:
                continue
            value = cert.salem_value
            if best is None or value < best[0]:
                best = (value, p, math.log(value))
    if best is None:
        raise ValueError("no Salem polynomial in the search box")
    value, poly, logv = best
    return BetaCertificate(n, height_max, poly, value, logv)
