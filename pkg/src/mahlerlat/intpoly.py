"""Exact integer-coefficient univariate polynomials.

Coefficients are stored constant-term first: ``(1, -3, 1)`` is ``x^2 - 3x + 1``.
The zero polynomial is the empty tuple.  All values are immutable and all
operations are pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import sympy

_X = sympy.Symbol("x")


class ZeroPolynomialError(ValueError):
    """Raised when an operation rejects the zero polynomial."""


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def of(cls, *coeffs: int) -> "IntPoly":
        return cls(coeffs)

    @classmethod
    def x_power(cls, k: int) -> "IntPoly":
        return cls([0] * k + [1])

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Parse space-separated integer coefficients, constant term first."""
        return cls(int(tok) for tok in text.split())

    # -- basic structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def height(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def __call__(self, x):
        """Evaluate by Horner's rule; works for int, Fraction, float, complex, mpc."""
        acc = 0 * x if self.is_zero else self.coeffs[-1] + 0 * x
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    # -- ring arithmetic ------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- transforms -----------------------------------------------------------

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def reciprocal(self) -> "IntPoly":
        """x^deg * p(1/x): the coefficient sequence reversed."""
        if self.is_zero:
            raise ZeroPolynomialError("reciprocal of the zero polynomial")
        return IntPoly(reversed(self.coeffs))

    def is_palindromic(self) -> bool:
        if self.is_zero:
            raise ZeroPolynomialError("palindromy of the zero polynomial")
        return self.coeffs == tuple(reversed(self.coeffs))

    def compose_neg_x_squared(self) -> "IntPoly":
        """Exact composition p(-x^2); the degree doubles."""
        out = [0] * (2 * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c if i % 2 == 0 else -c
        return IntPoly(out)

    def graeffe(self) -> "IntPoly":
        """Root-squaring step: returns q with q(x^2) = +/- p(x) p(-x).

        The sign is chosen so that a monic input yields a monic output.
        """
        if self.is_zero:
            raise ZeroPolynomialError("graeffe of the zero polynomial")
        neg = IntPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))
        prod = self * neg
        even = prod.coeffs[::2]
        q = IntPoly(even)
        return q if self.degree % 2 == 0 else -q

    def trace_polynomial(self) -> "IntPoly":
        """The unique monic Q of degree d with p(y) = y^d * Q(y + 1/y).

        Requires p monic, palindromic, of even degree 2d.
        """
        if self.is_zero or not self.is_monic:
            raise ValueError("trace polynomial requires a monic polynomial")
        if self.degree % 2 != 0:
            raise ValueError("palindromic polynomials of degree > 1 have even degree")
        if not self.is_palindromic():
            raise ValueError("trace polynomial requires a palindromic polynomial")
        return _half_trace(self.coeffs)

    def squarefree_decomposition(self) -> list[tuple["IntPoly", int]]:
        """Squarefree factors with multiplicities (primitive, positive leading)."""
        _, factors = sympy.sqf_list(self.to_sympy())
        return [(from_sympy(f), int(m)) for f, m in factors]

    # -- sympy bridge ---------------------------------------------------------

    def to_sympy(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coeffs)) or [0], _X, domain="ZZ")


def from_sympy(f) -> IntPoly:
    return IntPoly(reversed([int(c) for c in sympy.Poly(f, _X).all_coeffs()]))


def _half_trace(coeffs: Sequence[int]) -> IntPoly:
    """Core of the trace transform, shared with internal non-monic callers.

    Writes p/y^d = a_d + sum_{k>=1} a_{d+k} (y^k + y^{-k}) and replaces each
    y^k + y^{-k} with the monic Chebyshev-like polynomial V_k(w), where
    V_0 = 2, V_1 = w, V_{k+1} = w V_k - V_{k-1}.
    """
    d = (len(coeffs) - 1) // 2
    w = IntPoly((0, 1))
    v_prev, v = IntPoly((2,)), w
    q = IntPoly((coeffs[d],))
    for k in range(1, d + 1):
        q = q + coeffs[d + k] * v
        v_prev, v = v, w * v - v_prev
    return q


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd over Q, normalized to positive leading coefficient."""
    g = from_sympy(sympy.gcd(p.to_sympy(), q.to_sympy()))
    return g if g.is_zero or g.leading > 0 else -g


def exact_div(p: IntPoly, q: IntPoly) -> IntPoly:
    quo, rem = sympy.div(p.to_sympy(), q.to_sympy(), domain="QQ")
    if not rem.is_zero:
        raise ValueError(f"{q} does not divide {p}")
    quo = sympy.Poly(quo, _X)
    coeffs = [Fraction(c.p, c.q) for c in quo.all_coeffs()]
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError(f"quotient of {p} by {q} is not integral")
    return IntPoly(reversed([int(c) for c in coeffs]))


# -- irreducibility ----------------------------------------------------------

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class IrreducibilityReport:
    status: str
    witness: Optional[IntPoly] = None

    @property
    def is_irreducible(self) -> bool:
        return self.status == IRREDUCIBLE


def irreducibility_report(p: IntPoly, degree_cap: int = 64) -> IrreducibilityReport:
    """Decide irreducibility over Q for monic p of degree >= 1.

    Degree 1 and rational-root shortcuts first; otherwise an exact integer
    factorization.  Inputs above `degree_cap` are reported Unknown rather
    than attempted.
    """
    if p.is_zero or not p.is_monic:
        raise ValueError("irreducibility test requires a monic polynomial")
    if p.degree < 1:
        raise ValueError("irreducibility test requires degree >= 1")
    if p.degree == 1:
        return IrreducibilityReport(IRREDUCIBLE)
    # Rational roots of a monic integer polynomial are integers dividing a0.
    a0 = p.coeffs[0]
    if a0 == 0:
        return IrreducibilityReport(REDUCIBLE, IntPoly((0, 1)))
    for root in _divisors_signed(a0):
        if p(root) == 0:
            return IrreducibilityReport(REDUCIBLE, IntPoly((-root, 1)))
    if p.degree <= 3:
        # no rational root and degree <= 3: any factorization has a linear factor
        return IrreducibilityReport(IRREDUCIBLE)
    if p.degree > degree_cap:
        return IrreducibilityReport(UNKNOWN)
    _, factors = p.to_sympy().factor_list()
    if len(factors) == 1 and factors[0][1] == 1:
        return IrreducibilityReport(IRREDUCIBLE)
    witness = from_sympy(factors[0][0])
    return IrreducibilityReport(REDUCIBLE, witness)


def _divisors_signed(n: int) -> list[int]:
    n = abs(n)
    divs = sorted(d for d in range(1, int(n**0.5) + 1) if n % d == 0)
    divs = divs + [n // d for d in reversed(divs) if d * d != n]
    return [s * d for d in divs for s in (1, -1)]


# -- the quotient ring Q[x]/(P) ----------------------------------------------


@dataclass(frozen=True)
class RingElement:
    """Element of Q[x]/(P) in the power basis {1, alpha, ..., alpha^(deg P - 1)}."""

    coords: tuple[Fraction, ...]
    modulus: IntPoly

    def __init__(self, coords: Iterable, modulus: IntPoly):
        if modulus.degree < 1 or not modulus.is_monic:
            raise ValueError("modulus must be monic of degree >= 1")
        cs = [Fraction(c) for c in coords]
        if len(cs) > modulus.degree:
            cs = _reduce_mod(cs, modulus)
        cs += [Fraction(0)] * (modulus.degree - len(cs))
        object.__setattr__(self, "coords", tuple(cs))
        object.__setattr__(self, "modulus", modulus)

    @classmethod
    def one(cls, modulus: IntPoly) -> "RingElement":
        return cls([1], modulus)

    @classmethod
    def generator(cls, modulus: IntPoly) -> "RingElement":
        """The class of x, i.e. alpha itself."""
        return cls([0, 1], modulus)

    @property
    def is_integral_vector(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(
            (a + b for a, b in zip(self.coords, other.coords)), self.modulus
        )

    def __mul__(self, other: "RingElement") -> "RingElement":
        n = self.modulus.degree
        out = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                out[i + j] += a * b
        return RingElement(_reduce_mod(out, self.modulus), self.modulus)

    def is_one(self) -> bool:
        return self.coords[0] == 1 and all(c == 0 for c in self.coords[1:])


class NotInvertibleError(ValueError):
    def __init__(self, gcd_coeffs: list[Fraction]):
        self.gcd_coeffs = gcd_coeffs
        super().__init__(f"element shares a nontrivial factor with the modulus: {gcd_coeffs}")


def invert_in_ring(e: RingElement) -> RingElement:
    """Inverse of e in Q[x]/(P) by the extended Euclidean algorithm.

    For P monic palindromic and e = alpha, the coordinates are integers
    (alpha^-1 is integral over Z).
    """
    mod = [Fraction(c) for c in e.modulus.coeffs]
    a = list(e.coords)
    g, u = _ext_gcd_poly(a, mod)
    if len(g) != 1:
        raise NotInvertibleError(g)
    inv = [c / g[0] for c in u]
    return RingElement(inv, e.modulus)


# -- exact polynomial helpers over Fraction ----------------------------------


def _qtrim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            a[k + i] -= c * bc
        _qtrim(a)
    return _qtrim(q), a


def _reduce_mod(a: list[Fraction], modulus: IntPoly) -> list[Fraction]:
    mod = [Fraction(c) for c in modulus.coeffs]
    _, r = _qdivmod(_qtrim(list(a)), mod)
    return r


def _ext_gcd_poly(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Return (g, u) with u*a = g mod b, g = gcd(a, b) (not normalized)."""
    r0, r1 = _qtrim(list(a)), _qtrim(list(b))
    u0, u1 = [Fraction(1)], []
    while r1:
        q, r = _qdivmod(r0, r1)
        u = _qsub(u0, _qmul(q, u1))
        r0, r1 = r1, r
        u0, u1 = u1, u
    return r0, u0


def _qmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _qtrim(out)


def _qsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _qtrim([x - y for x, y in zip(a, b)])


LEHMER = IntPoly((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))
SMYTH = IntPoly((-1, -1, 0, 1))
