"""Slope numbers, domino tables, Hodge-Witt numbers, and the weighted
Euler characteristic e_r of a degree-resolved complex.

Slope numbers are computed from Newton slopes: an inverse root of P_n
with ord_q equal to mu lives in column i = floor(mu) and splits its
weight between the bidegrees (i, n-i) and (i+1, n-i-1) in proportion
(1 - lambda) : lambda, where lambda = mu - i.  Torsion never
contributes.  On validated input every entry is an integer; a
non-integer entry means realizability was bypassed and raises
``NonIntegralInvariantError``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple

from .exactnum import parity_sign, slope_multiplicities
from .rmodel import CrysComplex


class NonIntegralInvariantError(ArithmeticError):
    """A slope/Hodge-Witt entry came out non-integral (invalid input data)."""


@dataclass(frozen=True)
class InvariantTable:
    """Finite table (i, j) -> integer; zero entries are not stored."""

    entries: Mapping[Tuple[int, int], int]

    def __post_init__(self) -> None:
        cleaned = {
            (int(i), int(j)): int(v)
            for (i, j), v in sorted(self.entries.items())
            if v != 0
        }
        object.__setattr__(self, "entries", cleaned)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def items(self):
        return sorted(self.entries.items())

    def support(self):
        return sorted(self.entries)

    def __add__(self, other: "InvariantTable") -> "InvariantTable":
        merged = dict(self.entries)
        for key, val in other.entries.items():
            merged[key] = merged.get(key, 0) + val
        return InvariantTable(merged)


def _intify(acc: Dict[Tuple[int, int], Fraction], what: str) -> InvariantTable:
    entries = {}
    for key, val in acc.items():
        if val == 0:
            continue
        if val.denominator != 1:
            raise NonIntegralInvariantError(
                f"{what} entry at {key} is non-integral: {val}"
            )
        entries[key] = int(val)
    return InvariantTable(entries)


def domino_table(c: CrysComplex) -> InvariantTable:
    """The table T^{i,j}, straight from the complex's domino data."""
    return InvariantTable(dict(c.dominoes))


def slope_numbers(c: CrysComplex) -> InvariantTable:
    """The slope numbers m^{i,j}, from Newton-slope multiplicities."""
    acc: Dict[Tuple[int, int], Fraction] = {}
    for n, P in c.polys.items():
        for mu, h in slope_multiplicities(P, c.base):
            i = math.floor(mu)
            lam = mu - i
            for key, weight in (
                ((i, n - i), h * (1 - lam)),
                ((i + 1, n - i - 1), h * lam),
            ):
                acc[key] = acc.get(key, Fraction(0)) + weight
    return _intify(acc, "slope number")


def hodge_witt(c: CrysComplex) -> InvariantTable:
    """Hodge-Witt numbers h_W^{i,j} = m^{i,j} + T^{i,j} - 2T^{i-1,j+1} + T^{i-2,j+2}."""
    m = slope_numbers(c)
    T = domino_table(c)
    keys = set(m.support())
    for (i, j) in T.support():
        keys.update({(i, j), (i + 1, j - 1), (i + 2, j - 2)})
    entries = {}
    for (i, j) in keys:
        val = m[i, j] + T[i, j] - 2 * T[i - 1, j + 1] + T[i - 2, j + 2]
        if val:
            entries[(i, j)] = val
    return InvariantTable(entries)


def e_r(c: CrysComplex, r: int) -> int:
    """Weighted Euler characteristic from domino counts and sub-r slopes.

    e_r = sum_j (-1)^(j-1) T^{r-1, j-r}
        + sum_n (-1)^n sum_{mu <= r} (r - mu) * mult(mu on P_n),
    the boundary mu = r included (it contributes 0 weight but belongs to
    the closed condition).
    """
    total = Fraction(0)
    for (i, j0), count in c.dominoes.items():
        if i == r - 1:
            j = j0 + r  # T^{r-1, j-r} with j - r = j0
            total += parity_sign(j - 1) * count
    for n, P in c.polys.items():
        for mu, h in slope_multiplicities(P, c.base):
            if mu <= r:
                total += parity_sign(n) * (r - mu) * h
    if total.denominator != 1:
        raise NonIntegralInvariantError(f"e_{r} is non-integral: {total}")
    return int(total)


def weighted_hw(c: CrysComplex, r: int) -> int:
    """sum over i <= r of (-1)^(i+j) (r - i) h_W^{i,j}, exactly."""
    table = hodge_witt(c)
    total = 0
    for (i, j), val in table.items():
        if i <= r:
            total += parity_sign(i + j) * (r - i) * val
    return total


def euler_column_sums(c: CrysComplex) -> Dict[int, int]:
    """Per-column alternating sums of h_W; these equal the alternating
    Hodge-number sums, the only Hodge-number data this library exposes."""
    table = hodge_witt(c)
    sums: Dict[int, int] = {}
    for (i, j), val in table.items():
        sums[i] = sums.get(i, 0) + parity_sign(j) * val
    return {i: v for i, v in sorted(sums.items()) if v != 0}
