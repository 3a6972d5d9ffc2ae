"""Exact rational, p-adic-valuation, and polynomial arithmetic.

Rationals are plain ``fractions.Fraction`` values: arbitrary precision,
always in lowest terms with positive denominator, exact under +, -, *, /.
No floating point is used anywhere in this package.

Polynomials are stored in "det(1 - Phi*t)" form: a tuple of Fraction
coefficients, index k holding the coefficient of t^k, with constant term
exactly 1 and trailing zeros trimmed.  A polynomial of degree d then
factors over an algebraic closure as prod_i (1 - a_i * t) where the a_i
(the *inverse roots*) are the eigenvalues of the operator Phi.  All
operations below are phrased in terms of the inverse-root multiset:

* ``newton_slopes``        the multiset ord_q(a_i), via the Newton polygon
* ``power_sums``           sum_i a_i^n, via Newton's identities
* ``scale_roots``          a_i -> c * a_i
* ``reciprocal_twist``     a_i -> c / a_i
* ``tensor_poly``          {a_i} x {b_j} -> {a_i * b_j}
* ``deflate``              remove a known inverse root exactly

Valuations are normalized by ``ValuationContext(p, a)`` with q = p^a, so
that ord_q(q) = 1 and ord_q(x) = ord_p(x) / a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction]

INF = math.inf  # sentinel for ord_p(0); never enters arithmetic


class NotDivisibleError(ArithmeticError):
    """Requested deflation exceeds the actual inverse-root multiplicity."""


class ZeroRootError(ArithmeticError):
    """A polynomial presented an inverse root 0 (impossible after trimming)."""


def parity_sign(k: int) -> int:
    """(-1)^k as an exact int, valid for negative k (unlike (-1) ** k)."""
    return -1 if k % 2 else 1


def is_prime(n: int) -> bool:
    """Trial-division primality check; inputs here are desk-scale."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def ord_p(x: RationalLike, p: int) -> Union[int, float]:
    """Exponent of the prime p in x, with ord_p(0) = +infinity.

    Satisfies ord_p(x*y) = ord_p(x) + ord_p(y) and, for p^r*m/n with
    m, n prime to p, returns r.
    """
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    x = Fraction(x)
    if x == 0:
        return INF
    v = 0
    num = x.numerator
    while num % p == 0:
        num //= p
        v += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class ValuationContext:
    """Base field F_q with q = p^a; normalizes valuations so ord_q(q) = 1."""

    p: int
    a: int = 1

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.a < 1:
            raise ValueError(f"a must be a positive integer, got {self.a}")

    @property
    def q(self) -> int:
        return self.p ** self.a

    def ord_q(self, x: RationalLike) -> Union[Fraction, float]:
        v = ord_p(x, self.p)
        if v is INF:
            return INF
        return Fraction(v, self.a)


class Polynomial:
    """Exact-rational polynomial with constant term 1.

    Immutable.  Trailing zero coefficients are trimmed at construction,
    so ``degree`` is well-defined and the leading coefficient is nonzero
    (the inverse-root multiset therefore never contains 0).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Union[RationalLike, str]]):
        coeffs = [Fraction(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs or coeffs[0] != 1:
            raise ValueError("constant coefficient must be 1")
        self._coeffs = tuple(coeffs)

    @classmethod
    def one(cls) -> "Polynomial":
        return cls([1])

    @classmethod
    def from_inverse_roots(cls, roots: Iterable[RationalLike]) -> "Polynomial":
        """Product of (1 - a*t) over the given inverse roots a."""
        result = cls.one()
        for a in roots:
            result = result * cls([1, -Fraction(a)])
        return result

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
        return Polynomial(prod)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        terms = ["1"]
        for k, c in enumerate(self._coeffs):
            if k == 0 or c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            var = "t" if k == 1 else f"t^{k}"
            if mag == 1:
                body = var
            elif mag.denominator == 1:
                body = f"{mag}{var}"
            else:
                body = f"({mag}){var}"
            terms.append(f"{sign} {body}")
        return " ".join(terms)


def eval_at(P: Polynomial, x: RationalLike) -> Fraction:
    """Exact Horner evaluation of P at x."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(P.coeffs):
        acc = acc * x + c
    return acc


def _lower_hull(points: Sequence[tuple]) -> list:
    # Monotone-chain lower convex hull; points sorted by abscissa, exact slopes.
    hull: list = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep strictly convex turns: drop mid if slope(left) >= slope(right)
            if (y2 - y1) * (pt[0] - x2) >= (pt[1] - y2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def newton_slopes(P: Polynomial, ctx: ValuationContext) -> tuple:
    """Multiset of ord_q over the inverse roots of P, as a sorted tuple.

    Computed as the lower-convex-hull slopes of the points
    (k, ord_p(c_k)), divided by a, with segment length as multiplicity.
    Zero coefficients contribute no point.  The multiset has exactly
    deg(P) elements.
    """
    points = [
        (k, ord_p(c, ctx.p)) for k, c in enumerate(P.coeffs) if c != 0
    ]
    slopes = []
    hull = _lower_hull(points)
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        s = Fraction(y2 - y1, (x2 - x1) * ctx.a)
        slopes.extend([s] * (x2 - x1))
    return tuple(sorted(slopes))


def slope_multiplicities(P: Polynomial, ctx: ValuationContext) -> tuple:
    """Aggregated (slope, multiplicity) pairs, slopes ascending."""
    pairs = []
    for s in newton_slopes(P, ctx):
        if pairs and pairs[-1][0] == s:
            pairs[-1][1] += 1
        else:
            pairs.append([s, 1])
    return tuple((s, m) for s, m in pairs)


def _divide_linear(P: Polynomial, v: Fraction) -> Polynomial:
    # Exact synthetic division by (1 - v*t); caller guarantees degree >= 1
    # and P(1/v) == 0.
    d = P.degree
    q = [Fraction(1)]
    for k in range(1, d):
        q.append(P.coefficient(k) + v * q[k - 1])
    if P.coefficient(d) != -v * q[d - 1]:
        raise NotDivisibleError(f"(1 - {v}t) does not divide {P!r}")
    return Polynomial(q)


def inverse_root_multiplicity(P: Polynomial, v: RationalLike) -> int:
    """Largest m such that (1 - v*t)^m divides P exactly over Q."""
    v = Fraction(v)
    if v == 0:
        raise ValueError("v must be nonzero")
    m = 0
    current = P
    while current.degree >= 1 and eval_at(current, 1 / v) == 0:
        current = _divide_linear(current, v)
        m += 1
    return m


def deflate(P: Polynomial, v: RationalLike, m: int) -> Polynomial:
    """Exact quotient P / (1 - v*t)^m.

    Raises NotDivisibleError when m exceeds the multiplicity of v as an
    inverse root; deflate(P, v, 0) returns P unchanged.
    """
    v = Fraction(v)
    if v == 0:
        raise ValueError("v must be nonzero")
    if m < 0:
        raise ValueError("m must be a natural number")
    current = P
    for _ in range(m):
        if current.degree < 1 or eval_at(current, 1 / v) != 0:
            raise NotDivisibleError(
                f"multiplicity of {v} as inverse root is less than {m}"
            )
        current = _divide_linear(current, v)
    return current


def power_sums(P: Polynomial, m: int) -> list:
    """[s_1, ..., s_m] with s_n = sum of n-th powers of the inverse roots.

    Newton's identities on the elementary symmetric functions
    e_k = (-1)^k c_k; no factoring takes place.
    """
    d = P.degree
    e = [Fraction(0)] * (m + 1)
    for k in range(1, min(d, m) + 1):
        e[k] = (-1) ** k * P.coefficient(k)
    s = [Fraction(0)] * (m + 1)
    for n in range(1, m + 1):
        acc = Fraction(0)
        for i in range(1, n):
            acc += (-1) ** (i - 1) * e[i] * s[n - i]
        if n <= d:
            acc += (-1) ** (n - 1) * n * e[n]
        s[n] = acc
    return s[1:]


def scale_roots(P: Polynomial, c: RationalLike) -> Polynomial:
    """P(c*t): every inverse root is multiplied by c."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    return Polynomial([coef * c ** k for k, coef in enumerate(P.coeffs)])


def reciprocal_twist(P: Polynomial, c: RationalLike) -> Polynomial:
    """Polynomial with inverse-root multiset {c / a_i}.

    For P = prod (1 - a_i t) of degree d this is c^m * c_{d-m} / c_d as
    the t^m coefficient; an involution for fixed c. Degree is preserved.
    """
    c = Fraction(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    d = P.degree
    lead = P.coefficient(d)
    if lead == 0:
        raise ZeroRootError("polynomial has an inverse root 0")
    return Polynomial(
        [P.coefficient(d - m) * c ** m / lead for m in range(d + 1)]
    )


def _companion(P: Polynomial) -> list:
    # Companion matrix of the reversed (monic) polynomial; eigenvalues are
    # exactly the inverse roots of P.
    d = P.degree
    C = [[Fraction(0)] * d for _ in range(d)]
    for i in range(1, d):
        C[i][i - 1] = Fraction(1)
    for i in range(d):
        C[i][d - 1] = -P.coefficient(d - i)
    return C


def _kron(A: list, B: list) -> list:
    n, m = len(A), len(B)
    K = [[Fraction(0)] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(n):
            if A[i][j] == 0:
                continue
            for k in range(m):
                for l in range(m):
                    K[i * m + k][j * m + l] = A[i][j] * B[k][l]
    return K


def _charpoly_monic(A: list) -> list:
    # Faddeev-LeVerrier: coefficients [1, a_1, ..., a_N] of
    # x^N + a_1 x^(N-1) + ... + a_N, exactly over Q.
    n = len(A)
    coeffs = [Fraction(1)]
    aux = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        M = [
            [sum(A[i][t] * aux[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        a_k = -sum(M[i][i] for i in range(n)) / k
        coeffs.append(a_k)
        aux = [
            [M[i][j] + (a_k if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    return coeffs


def tensor_poly(P: Polynomial, Q: Polynomial) -> Polynomial:
    """Polynomial whose inverse roots are all products a_i * b_j.

    Built as the reversed characteristic polynomial of the Kronecker
    product of the two companion matrices; degree deg(P) * deg(Q).
    """
    if P.degree == 0 or Q.degree == 0:
        return Polynomial.one()
    K = _kron(_companion(P), _companion(Q))
    return Polynomial(_charpoly_monic(K))
