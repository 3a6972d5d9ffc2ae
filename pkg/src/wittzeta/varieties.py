"""Constructors for standard variety data and an independent brute-force
point-count oracle over small finite fields.

The constructors produce degree-resolved complexes: projective spaces,
genus-g curves from their Weil polynomials, Kunneth products, and
compactly supported duals.  The oracle counts points of short
Weierstrass curves y^2 = x^3 + Ax + B by exhaustive enumeration in an
explicitly constructed extension field, with a deterministic modulus
(the lexicographically least monic irreducible), so oracle runs are
reproducible bit for bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .exactnum import (
    Polynomial,
    newton_slopes,
    parity_sign,
    power_sums,
    reciprocal_twist,
    tensor_poly,
)
from .rmodel import (
    BaseField,
    CrysComplex,
    ParseError,
    SemanticError,
    _require_valid,
    _significant_lines,
)

ENUMERATION_BOUND = 10 ** 6


class FunctionalEquationViolatedError(ValueError):
    """The proposed Weil polynomial is not fixed by the q-reciprocal twist."""


class SlopeOutOfRangeError(ValueError):
    """A curve H^1 slope fell outside [0, 1]."""


class DominoKunnethUnsupportedError(ValueError):
    """No formula exists for domino tables of products; inputs must be domino-free."""


class BoundExceededError(ValueError):
    """Requested enumeration field exceeds the point-counting bound."""


class NonIntegralCountError(ArithmeticError):
    """A point count came out non-integral (invalid complex data)."""


class InconsistentError(ValueError):
    """Supplied point counts contradict the functional-equation completion."""


def _poly_rem(dividend: List[int], divisor: List[int], p: int) -> List[int]:
    # Remainder of dividend by monic divisor, coefficients ascending mod p.
    rem = list(dividend)
    d = len(divisor) - 1
    for k in range(len(rem) - 1, d - 1, -1):
        c = rem[k] % p
        if c:
            for t in range(d + 1):
                rem[k - d + t] = (rem[k - d + t] - c * divisor[t]) % p
    return [c % p for c in rem[:d]]


def _is_irreducible(poly: List[int], p: int) -> bool:
    # Exhaustive factor search: monic poly is irreducible iff no monic
    # polynomial of degree 1..deg/2 divides it.
    e = len(poly) - 1
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_rem(poly, divisor, p)):
                return False
    return True


@dataclass(frozen=True)
class SmallFiniteField:
    """F_{p^e} with elements as coefficient tuples modulo a fixed monic
    irreducible; the modulus is the lexicographically least one, so the
    arithmetic is deterministic."""

    p: int
    e: int
    modulus: Tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p ** self.e

    def elements(self):
        return itertools.product(range(self.p), repeat=self.e)

    def from_int(self, n: int) -> Tuple[int, ...]:
        return (n % self.p,) + (0,) * (self.e - 1)

    def add(self, u: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple((a + b) % self.p for a, b in zip(u, v))

    def mul(self, u: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[int, ...]:
        prod = [0] * (2 * self.e - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    prod[i + j] += a * b
        if self.e == 1:
            return (prod[0] % self.p,)
        rem = _poly_rem(prod, list(self.modulus), self.p)
        return tuple(rem + [0] * (self.e - len(rem)))


def small_field(p: int, e: int) -> SmallFiniteField:
    """Construct F_{p^e}; raises BoundExceededError above the enumeration bound."""
    if p ** e > ENUMERATION_BOUND:
        raise BoundExceededError(f"{p}^{e} exceeds the enumeration bound")
    if e == 1:
        return SmallFiniteField(p, 1, (0, 1))
    for low in itertools.product(range(p), repeat=e):
        candidate = list(low) + [1]
        if _is_irreducible(candidate, p):
            return SmallFiniteField(p, e, tuple(candidate))
    raise AssertionError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class WeierstrassCurve:
    """Short Weierstrass curve y^2 = x^3 + Ax + B over F_q, q = p^a, p >= 5."""

    base: BaseField
    A: int
    B: int

    def __post_init__(self) -> None:
        p = self.base.p
        if p < 5:
            raise ValueError("short Weierstrass form requires p >= 5")
        object.__setattr__(self, "A", self.A % p)
        object.__setattr__(self, "B", self.B % p)
        disc = (-16 * (4 * self.A ** 3 + 27 * self.B ** 2)) % p
        if disc == 0:
            raise ValueError(f"singular curve: discriminant is 0 mod {p}")


def count_points_curve(curve: WeierstrassCurve, m: int) -> int:
    """Number of projective points over the degree-m extension of the base,
    by exhaustive enumeration (affine solutions plus the point at infinity)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    base = curve.base
    field = small_field(base.p, base.a * m)
    square_counts: Dict[Tuple[int, ...], int] = {}
    for y in field.elements():
        s = field.mul(y, y)
        square_counts[s] = square_counts.get(s, 0) + 1
    A = field.from_int(curve.A)
    B = field.from_int(curve.B)
    total = 1  # point at infinity
    for x in field.elements():
        x2 = field.mul(x, x)
        rhs = field.add(field.add(field.mul(x2, x), field.mul(A, x)), B)
        total += square_counts.get(rhs, 0)
    return total


def projective_space(n: int, base: BaseField) -> CrysComplex:
    """P^n: P_{2i} = 1 - q^i t for 0 <= i <= n, odd degrees absent."""
    if n < 0:
        raise ValueError("n must be a natural number")
    q = base.q
    return CrysComplex(
        base, {2 * i: Polynomial([1, -(q ** i)]) for i in range(n + 1)}
    )


def curve_from_weil(P1: Polynomial, base: BaseField) -> CrysComplex:
    """Complex of a smooth complete curve with H^1 polynomial P1.

    Requires the functional equation (q-reciprocal twist fixes P1) and
    slopes within [0, 1]; the result always carries P_0 = 1 - t and
    P_2 = 1 - q t and no dominoes.
    """
    if P1.degree % 2:
        raise ValueError("Weil polynomial must have even degree 2g")
    q = base.q
    if reciprocal_twist(P1, q) != P1:
        raise FunctionalEquationViolatedError(
            f"reciprocal twist by q={q} does not fix {P1}"
        )
    if any(s < 0 or s > 1 for s in newton_slopes(P1, base)):
        raise SlopeOutOfRangeError(f"slopes of {P1} leave [0, 1]")
    c = CrysComplex(
        base,
        {0: Polynomial([1, -1]), 1: P1, 2: Polynomial([1, -q])},
    )
    _require_valid(c)
    return c


def kunneth(c1: CrysComplex, c2: CrysComplex) -> CrysComplex:
    """Product complex: P_n = prod over n1+n2=n of the tensor polynomials."""
    if c1.base != c2.base:
        raise ValueError("Kunneth product requires the same base field")
    if c1.dominoes or c2.dominoes:
        raise DominoKunnethUnsupportedError(
            "domino tables of products are undefined; inputs must be domino-free"
        )
    polys: Dict[int, Polynomial] = {}
    for n1, P in c1.polys.items():
        for n2, Q in c2.polys.items():
            n = n1 + n2
            polys[n] = polys.get(n, Polynomial.one()) * tensor_poly(P, Q)
    return CrysComplex(c1.base, polys)


def compact_support_dual(c: CrysComplex, dim: int) -> CrysComplex:
    """Compactly supported dual at dimension n: P^c_j = reciprocal twist of
    P_{2n-j} by q^n.  Dominoes have no dual formula and are dropped, with
    a warning recorded in the result's notes."""
    if dim < 0:
        raise ValueError("dim must be a natural number")
    _require_valid(c)
    qn = Fraction(c.base.q) ** dim
    polys = {
        2 * dim - n: reciprocal_twist(P, qn) for n, P in c.polys.items()
    }
    notes = c.notes
    if c.dominoes:
        notes = notes + (
            f"domino table dropped by duality at dimension {dim}",
        )
    return CrysComplex(c.base, polys, {}, notes)


def zeta_point_counts(c: CrysComplex, m: int) -> List[int]:
    """[N_1, ..., N_m] with N_n = sum_j (-1)^j s_n(P_j); raises
    NonIntegralCountError when a count is not an integer."""
    if m < 0:
        raise ValueError("m must be a natural number")
    sums = {n: power_sums(P, m) for n, P in c.polys.items()}
    counts = []
    for idx in range(m):
        N = sum((parity_sign(n) * s[idx] for n, s in sums.items()), Fraction(0))
        if N.denominator != 1:
            raise NonIntegralCountError(f"N_{idx + 1} = {N} is not an integer")
        counts.append(int(N))
    return counts


def weil_from_counts(N: Sequence[int], g: int, base: BaseField) -> Polynomial:
    """Degree-2g Weil polynomial from the counts N_1..N_g, completed by
    the functional equation; any extra supplied counts are checked
    against the completion and InconsistentError is raised on mismatch."""
    if g < 1:
        raise ValueError("g must be at least 1")
    if len(N) < g:
        raise ValueError(f"need at least {g} point counts, got {len(N)}")
    q = base.q
    # power sums of the inverse roots from the counts
    s = [Fraction(0)] * (g + 1)
    for n in range(1, g + 1):
        s[n] = Fraction(1 + q ** n - N[n - 1])
    # Newton's identities give the elementary symmetric functions
    e = [Fraction(0)] * (g + 1)
    e[0] = Fraction(1)
    for k in range(1, g + 1):
        acc = s[k]
        for i in range(1, k):
            acc -= (-1) ** (i - 1) * e[i] * s[k - i]
        e[k] = (-1) ** (k - 1) * acc / k
    coeffs = [Fraction(0)] * (2 * g + 1)
    for k in range(g + 1):
        coeffs[k] = (-1) ** k * e[k]
    for k in range(1, g + 1):
        coeffs[g + k] = coeffs[g - k] * q ** k
    P1 = Polynomial(coeffs)
    predicted = power_sums(P1, len(N))
    for n in range(g + 1, len(N) + 1):
        implied = 1 + q ** n - predicted[n - 1]
        if implied != N[n - 1]:
            raise InconsistentError(
                f"N_{n} = {N[n - 1]} contradicts the completion"
                f" (expected {implied})"
            )
    return P1


def parse_curve(text: str) -> WeierstrassCurve:
    """Parse the CLI curve description: ``curve p 5 a 1 A 1 B 1``."""
    pairs: List[Tuple[int, str]] = []
    for lineno, tokens in _significant_lines(text):
        pairs.extend((lineno, t) for t in tokens)
    if not pairs:
        raise ParseError(None, "empty input")
    first_line, head = pairs[0]
    if head != "curve":
        raise ParseError(first_line, f"expected 'curve' header, got '{head}'")
    rest = pairs[1:]
    if len(rest) % 2:
        raise ParseError(rest[-1][0], "curve fields come in key-value pairs")
    fields: Dict[str, int] = {}
    for (lineno, key), (_, value) in zip(rest[::2], rest[1::2]):
        if key not in ("p", "a", "A", "B"):
            raise ParseError(lineno, f"unknown curve field '{key}'")
        if key in fields:
            raise SemanticError(lineno, f"duplicate curve field '{key}'")
        try:
            fields[key] = int(value)
        except ValueError:
            raise ParseError(lineno, f"expected integer for {key}, got '{value}'")
    for required in ("p", "A", "B"):
        if required not in fields:
            raise SemanticError(first_line, f"curve field '{required}' missing")
    try:
        base = BaseField(fields["p"], fields.get("a", 1))
        return WeierstrassCurve(base, fields["A"], fields["B"])
    except ValueError as exc:
        raise SemanticError(first_line, str(exc)) from None
