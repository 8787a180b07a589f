"""Per-place diagonal blocks of gamma = diag(alpha, 1/alpha, 1, ..., 1),
Dirichlet power selection, and near-identity membership reports."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .fields import CIRCLE_COMPACT, FieldSummary, field_summary
from .intpoly import IntPoly, RingElement, invert_in_ring
from .mahler import MahlerCertificate, mahler_measure

Number = Union[float, Fraction]


@dataclass(frozen=True)
class PlaceBlock:
    index: int  # embedding index, 1-based
    klass: str
    diagonal: tuple[complex, ...]
    radius: float

    @property
    def is_compact(self) -> bool:
        return self.klass == CIRCLE_COMPACT

    def determinant(self) -> complex:
        det = 1 + 0j
        for entry in self.diagonal:
            det *= entry
        return det


@dataclass(frozen=True)
class GammaElement:
    summary: FieldSummary
    n: int
    alpha: RingElement
    alpha_inv: RingElement
    blocks: tuple[PlaceBlock, ...]
    cocompact: bool

    def noncompact_blocks(self) -> list[PlaceBlock]:
        return [b for b in self.blocks if not b.is_compact]


def build_gamma(summary: FieldSummary, n: int = 2) -> GammaElement:
    """Symbolic diag(alpha, 1/alpha, 1, ..., 1) plus its numeric block at
    every archimedean place.

    h-unitarity is checked exactly in the ring (alpha * tau(alpha) = 1) and
    the inverse's power-basis coordinates are verified integral; compact
    places are unitary because |sigma(alpha)| = 1 there by the exact circle
    count.  The cocompact flag records whether a compact place exists
    (s < d).
    """
    if n < 2:
        raise ValueError("matrix size must be >= 2")
    p = summary.poly
    alpha = RingElement.generator(p)
    alpha_inv = invert_in_ring(alpha)
    if not (alpha * alpha_inv).is_one():
        raise AssertionError("alpha * alpha^-1 != 1 in the ring")
    if not alpha_inv.is_integral_vector:
        raise AssertionError("alpha^-1 must have integer power-basis coordinates")
    blocks = []
    for emb in summary.embeddings:
        a = emb.alpha_value
        diag = (a, 1 / a) + (1 + 0j,) * (n - 2)
        blocks.append(PlaceBlock(emb.index, emb.klass, diag, emb.radius))
    cocompact = summary.s < summary.d
    return GammaElement(summary, n, alpha, alpha_inv, tuple(blocks), cocompact)


@dataclass(frozen=True)
class DirichletWitness:
    m: int
    t: int
    c: int
    targets: tuple[Number, ...]
    residues: tuple[Number, ...]


def _residue(x: Number) -> Number:
    """Fractional part mapped to [-1/2, 1/2)."""
    if isinstance(x, Fraction):
        r = x - x.__floor__()
        return r - 1 if r >= Fraction(1, 2) else r
    r = math.fmod(x, 1.0)
    if r < -0.5:
        r += 1.0
    elif r >= 0.5:
        r -= 1.0
    return r


def dirichlet_c(targets: Sequence[Number], m: int) -> DirichletWitness:
    """Smallest integer 0 < c <= m^t driving every c * target into the closed
    window [-1/m, 1/m] mod 1.  Existence is Dirichlet's pigeonhole lemma; a
    failed scan indicates a bug, not a user error."""
    if m < 1:
        raise ValueError("m must be >= 1")
    targets = tuple(targets)
    t = len(targets)
    if t == 0:
        return DirichletWitness(m, 0, 1, (), ())
    window = Fraction(1, m)
    for c in range(1, m**t + 1):
        residues = tuple(_residue(c * x) for x in targets)
        if all(abs(res) <= window for res in residues):
            return DirichletWitness(m, t, c, targets, residues)
    raise AssertionError("Dirichlet scan exhausted: contradicts the pigeonhole lemma")


def eta(m: int, t: int) -> Fraction:
    """The hypothesis scale 1 / (2 m^(t+1))."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if t < 0:
        raise ValueError("t must be >= 0")
    return Fraction(1, 2 * m ** (t + 1))


@dataclass(frozen=True)
class EigenvalueFlags:
    value: complex
    log_modulus: float
    argument: float
    log_modulus_in_window: bool
    argument_in_window: bool


@dataclass(frozen=True)
class GammaPowerReport:
    element: GammaElement
    witness: DirichletWitness
    m: int
    power: int
    eta: Fraction
    mahler: MahlerCertificate
    mahler_hypothesis_met: bool
    eigenvalues: tuple[EigenvalueFlags, ...]
    distance_to_identity: float
    infinite_order: bool

    @property
    def all_argument_flags(self) -> bool:
        return all(e.argument_in_window for e in self.eigenvalues)

    @property
    def all_log_modulus_flags(self) -> bool:
        return all(e.log_modulus_in_window for e in self.eigenvalues)


_TOL = 1e-9


def gamma_power_report(element: GammaElement, m: int) -> GammaPowerReport:
    """Raise gamma to the Dirichlet-selected even power 2c and report the
    per-eigenvalue U_m windows over the noncompact places.

    The compact factor is the kernel of the projection and is excluded from
    the distance to the identity.  The argument window holds unconditionally
    by choice of c; the log-modulus window is conditional on the Mahler
    hypothesis M(p) < exp(eta)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    summary = element.summary
    t = summary.t
    targets = tuple(
        cmath.phase(emb.alpha_value**2) / (2 * math.pi)
        for emb in summary.embeddings[summary.r : summary.r + t]
    )
    witness = dirichlet_c(targets, m)
    power = 2 * witness.c
    e = eta(m, t)
    cert = mahler_measure(summary.poly)
    hypothesis = cert.upper < math.exp(e)
    eigen: list[EigenvalueFlags] = []
    distance = 0.0
    for block in element.noncompact_blocks():
        for entry in block.diagonal:
            value = entry**power
            logmod = math.log(abs(value))
            arg = cmath.phase(value)
            eigen.append(
                EigenvalueFlags(
                    value=value,
                    log_modulus=logmod,
                    argument=arg,
                    log_modulus_in_window=abs(logmod) <= 1 / m + _TOL,
                    argument_in_window=abs(arg) <= 2 * math.pi / m + _TOL,
                )
            )
            distance = max(distance, abs(value - 1))
    return GammaPowerReport(
        element=element,
        witness=witness,
        m=m,
        power=power,
        eta=e,
        mahler=cert,
        mahler_hypothesis_met=hypothesis,
        eigenvalues=tuple(eigen),
        distance_to_identity=distance,
        infinite_order=summary.s >= 1,
    )


@dataclass(frozen=True)
class ScanEntry:
    poly: IntPoly
    m: int
    hypothesis_met: bool
    hypothesis_gap: Optional[float]  # M / exp(eta) when the hypothesis fails
    report: Optional[GammaPowerReport]
    chain_holds: Optional[bool]  # 1 < |lambda^(2c)| <= exp(1/m) at outside places


@dataclass
class ScanReport:
    n: int
    entries: list[ScanEntry] = field(default_factory=list)


def counterexample_scan(
    polys: Sequence[IntPoly], n: int, m_values: Sequence[int]
) -> ScanReport:
    """Run the would-be counterexample pipeline over (poly, m) pairs.

    All polynomials must share the same (s, r) class.  When the hypothesis
    M < exp(eta) holds, the full power report is produced and the chain
    1 < |lambda^(2c)| <= exp(1/m) asserted at the outside places; otherwise
    the hypothesis gap is recorded."""
    report = ScanReport(n)
    summaries = [field_summary(p) for p in polys]
    classes = {(s.s, s.r) for s in summaries}
    if len(classes) > 1:
        raise ValueError(f"mixed (s, r) classes in scan input: {sorted(classes)}")
    for summary in summaries:
        element = build_gamma(summary, n)
        for m in m_values:
            power_report = gamma_power_report(element, m)
            if power_report.mahler_hypothesis_met:
                chain = all(
                    abs(e.value) > 1 and math.log(abs(e.value)) <= 1 / m + _TOL
                    for e in power_report.eigenvalues
                    if abs(e.value) > 1
                )
                entry = ScanEntry(summary.poly, m, True, None, power_report, chain)
            else:
                gap = power_report.mahler.value / math.exp(float(power_report.eta))
                entry = ScanEntry(summary.poly, m, False, gap, power_report, None)
            report.entries.append(entry)
    return report
