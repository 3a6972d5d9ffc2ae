"""Independent brute-force oracles and corpus generators shared across
the test suite.

The oracles recompute expected values through code paths disjoint from
the library: exact Gaussian-elimination determinants, Lagrange
interpolation, and literal matrix powers, all over Fraction.  The
corpus generator produces seeded pseudo-random validated complexes
(slopes with denominator at most 4, bidegrees within [-6, 6], at most 3
dominoes) for the identity checks.
"""

import random
from fractions import Fraction

from wittzeta.exactnum import Polynomial
from wittzeta.rmodel import (
    BaseField,
    CrysComplex,
    SlotComplex,
    TorsionSlot,
    TypeIISlot,
    TypeISlot,
    tate_twist,
    to_crys,
)


def companion_of(P: Polynomial) -> list:
    """Companion matrix whose eigenvalues are the inverse roots of P."""
    d = P.degree
    C = [[Fraction(0)] * d for _ in range(d)]
    for i in range(1, d):
        C[i][i - 1] = Fraction(1)
    for i in range(d):
        C[i][d - 1] = -P.coefficient(d - i)
    return C


def mat_identity(n: int) -> list:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def mat_mul(A: list, B: list) -> list:
    n = len(A)
    return [
        [sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def mat_trace(A: list) -> Fraction:
    return sum(A[i][i] for i in range(len(A)))


def kron(A: list, B: list) -> list:
    n, m = len(A), len(B)
    K = [[Fraction(0)] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(n):
            for k in range(m):
                for l in range(m):
                    K[i * m + k][j * m + l] = A[i][j] * B[k][l]
    return K


def det(A: list) -> Fraction:
    """Exact determinant by fraction Gaussian elimination with pivoting."""
    n = len(A)
    M = [row[:] for row in A]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = None
        for row in range(col, n):
            if M[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            sign = -sign
        result *= M[col][col]
        inv = 1 / M[col][col]
        for row in range(col + 1, n):
            factor = M[row][col] * inv
            if factor == 0:
                continue
            for j in range(col, n):
                M[row][j] -= factor * M[col][j]
    return sign * result


def trace_power_sums(P: Polynomial, m: int) -> list:
    """Power sums of the inverse roots via literal companion-matrix powers."""
    d = P.degree
    if d == 0:
        return [Fraction(0)] * m
    C = companion_of(P)
    power = C
    sums = []
    for _ in range(m):
        sums.append(mat_trace(power))
        power = mat_mul(power, C)
    return sums[:m]


def _lagrange_coeffs(xs: list, ys: list) -> list:
    # Coefficients of the unique interpolating polynomial, exact.
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                new[k] += b * (-xs[j])
                new[k + 1] += b
            basis = new
            denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    return coeffs


def charpoly_reversed(A: list) -> Polynomial:
    """prod (1 - lambda_i t) over the eigenvalues of A, by interpolating
    det(x*I - A) at N+1 points and reversing.  Independent of the
    Faddeev-LeVerrier path used in the library."""
    n = len(A)
    if n == 0:
        return Polynomial.one()
    xs = [Fraction(r) for r in range(n + 1)]
    ys = []
    for x in xs:
        M = [
            [x - A[i][j] if i == j else -A[i][j] for j in range(n)]
            for i in range(n)
        ]
        ys.append(det(M))
    mono = _lagrange_coeffs(xs, ys)  # [a_N, ..., a_1, 1] ascending in x
    # char(x) = sum mono[k] x^k; reversed form has t^m coefficient mono[n-m]
    return Polynomial([mono[n - m] for m in range(n + 1)])


def tensor_by_matrices(P: Polynomial, Q: Polynomial) -> Polynomial:
    """Brute-force tensor polynomial: interpolated characteristic polynomial
    of the Kronecker product of companion matrices."""
    if P.degree == 0 or Q.degree == 0:
        return Polynomial.one()
    return charpoly_reversed(kron(companion_of(P), companion_of(Q)))


_CORPUS_BASES = [(2, 1), (3, 1), (5, 1), (7, 1), (5, 2), (3, 2)]


def _unit(rng: random.Random, p: int) -> int:
    return rng.choice([u for u in (1, -1, 2, -2, 3, -3) if u % p != 0])


def _slope_factor(rng: random.Random, base: BaseField, lo: int, hi: int) -> Polynomial:
    # d slopes equal to num/d: factor 1 + u * p^(a*num) * t^d, u a p-unit
    d = rng.randint(1, 4)
    num = rng.randint(lo * d, hi * d)
    c = Fraction(_unit(rng, base.p)) * Fraction(base.p) ** (base.a * num)
    return Polynomial([Fraction(1)] + [Fraction(0)] * (d - 1) + [c])


def random_crys(rng: random.Random) -> CrysComplex:
    """Random degree-resolved complex; realizable by construction."""
    p, a = rng.choice(_CORPUS_BASES)
    base = BaseField(p, a)
    polys = {}
    for n in rng.sample(range(-6, 7), k=rng.randint(0, 3)):
        P = Polynomial.one()
        for _ in range(rng.randint(1, 3)):
            P = P * _slope_factor(rng, base, -3, 6)
        if P.degree > 0:
            polys[n] = P
    dominoes = {}
    for _ in range(rng.randint(0, 3)):
        key = (rng.randint(-6, 6), rng.randint(-6, 6))
        dominoes[key] = dominoes.get(key, 0) + rng.randint(1, 3)
    return CrysComplex(base, polys, dominoes)


def random_slot_complex(rng: random.Random) -> SlotComplex:
    """Random column-resolved complex with type-I slopes inside [0, 1)."""
    p, a = rng.choice(_CORPUS_BASES)
    base = BaseField(p, a)
    slots = []
    for _ in range(rng.randint(0, 4)):
        i, j = rng.randint(-6, 6), rng.randint(-6, 6)
        kind = rng.choice(["I", "I", "II", "T"])
        if kind == "I":
            P = Polynomial.one()
            for _ in range(rng.randint(1, 2)):
                d = rng.randint(1, 4)
                num = rng.randint(0, d - 1)
                c = Fraction(_unit(rng, p)) * Fraction(p) ** (a * num)
                P = P * Polynomial([Fraction(1)] + [Fraction(0)] * (d - 1) + [c])
            slots.append(TypeISlot(i, j, P))
        elif kind == "II":
            slots.append(TypeIISlot(i, j, rng.randint(-2, 2), rng.randint(1, 3)))
        else:
            slots.append(TorsionSlot(i, j, rng.randint(1, 3)))
    return SlotComplex(base, tuple(slots))


def random_complex_corpus(seed: int, count: int) -> list:
    """Seeded corpus mixing direct, slot-converted, and twisted complexes."""
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < count:
        roll = rng.random()
        if roll < 0.4:
            c = random_crys(rng)
        elif roll < 0.8:
            c = to_crys(random_slot_complex(rng))
        else:
            c = tate_twist(random_crys(rng), rng.randint(-2, 2))
        corpus.append(c)
    return corpus
