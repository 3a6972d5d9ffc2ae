"""Data model for the numerical shadow of a coherent complex.

Two representations are maintained:

* ``SlotComplex``: column-resolved.  Each slot sits at a bidegree (i, j)
  and is one of three kinds: type I (a Frobenius polynomial with slopes
  in [0,1)), type II (a domino count), or torsion (finite length, which
  contributes nothing to any computed invariant).

* ``CrysComplex``: degree-resolved.  For each total degree n it stores
  the Frobenius polynomial P_n = det(1 - Phi t) on the n-th cohomology
  of the associated simple complex, plus a separate domino table
  T^{i,j}.  This is the primary computational representation; it can
  hold data (e.g. an ordinary elliptic curve's H^1) that the
  column-resolved form cannot carry with exact rational coefficients.

``to_crys`` converts the first into the second: a type-I slot at column
i contributes its polynomial with inverse roots multiplied by q^i to
degree i + j, so an inverse root of ord_q equal to mu is deemed to live
in column floor(mu).

Both representations serialize to a line-oriented text format::

    complex
    p 5
    a 1
    H 0 1 -1          # P_0(t) coefficients c0 c1 ... (rationals as n or n/d)
    H 2 1 -5
    domino 0 2 1      # T^{0,2} = 1

or, for the slot form, ``slot I i j c0 c1 ...``, ``slot II i j l count``
and ``slot T i j length`` lines.  A file holds either H/domino lines or
slot lines, never both.  Serialization is canonical: degrees ascending,
coefficients in lowest terms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Union

from .exactnum import (
    Polynomial,
    ValuationContext,
    scale_roots,
    slope_multiplicities,
)

# The base field F_q, q = p^a, doubles as the valuation context.
BaseField = ValuationContext


class ComplexFormatError(ValueError):
    """Problem with a complex description file."""

    def __init__(self, line: Optional[int], message: str):
        self.line = line
        self.bare_message = message
        super().__init__(f"line {line}: {message}" if line else message)


class ParseError(ComplexFormatError):
    """Malformed token or line structure."""


class SemanticError(ComplexFormatError):
    """Well-formed line with inadmissible content."""


@dataclass(frozen=True)
class TypeISlot:
    """Frobenius data at bidegree (i, j); slopes must lie in [0, 1)."""

    i: int
    j: int
    frob: Polynomial


@dataclass(frozen=True)
class TypeIISlot:
    """Domino data at bidegree (i, j).

    The parameter l is recorded for fidelity but unused: every computed
    invariant depends only on the count.
    """

    i: int
    j: int
    l: int
    count: int


@dataclass(frozen=True)
class TorsionSlot:
    """Finite-length torsion at (i, j); contributes zero to every invariant."""

    i: int
    j: int
    length: int


Slot = Union[TypeISlot, TypeIISlot, TorsionSlot]


@dataclass(frozen=True)
class SlotComplex:
    base: BaseField
    slots: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "slots", tuple(self.slots))


@dataclass(frozen=True)
class CrysComplex:
    """Per-degree Frobenius polynomials P_n plus a domino table T^{i,j}.

    Degrees with P_n = 1 and domino entries with count 0 are dropped, so
    equal complexes compare equal.  ``notes`` carries provenance
    warnings (e.g. dominoes dropped by duality) and is ignored by
    comparison.
    """

    base: BaseField
    polys: Mapping[int, Polynomial] = field(default_factory=dict)
    dominoes: Mapping[tuple, int] = field(default_factory=dict)
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self) -> None:
        polys = {
            int(n): P
            for n, P in sorted(self.polys.items())
            if P.degree > 0
        }
        dominoes = {
            (int(i), int(j)): int(c)
            for (i, j), c in sorted(self.dominoes.items())
            if c != 0
        }
        object.__setattr__(self, "polys", polys)
        object.__setattr__(self, "dominoes", dominoes)
        object.__setattr__(self, "notes", tuple(self.notes))

    def poly(self, n: int) -> Polynomial:
        """P_n, defaulting to the constant 1 for degrees not stored."""
        return self.polys.get(n, Polynomial.one())

    def domino(self, i: int, j: int) -> int:
        return self.dominoes.get((i, j), 0)


AnyComplex = Union[SlotComplex, CrysComplex]


def _realizability_diags(P: Polynomial, base: BaseField, where: str) -> list:
    diags = []
    for mu, mult in slope_multiplicities(P, base):
        if (mult * mu).denominator != 1:
            diags.append(
                f"{where}: non-realizable slope {mu} with multiplicity {mult}"
            )
    return diags


def validate(c: AnyComplex) -> list:
    """Diagnostics for every violated type invariant; empty means valid.

    Each message names the offending slot or degree and the rule.
    """
    diags: list = []
    if isinstance(c, SlotComplex):
        for idx, slot in enumerate(c.slots):
            if isinstance(slot, TypeISlot):
                where = f"slot {idx} (I at ({slot.i},{slot.j}))"
                for mu, mult in slope_multiplicities(slot.frob, c.base):
                    if not (0 <= mu < 1):
                        diags.append(f"{where}: slope {mu} outside [0,1)")
                    elif (mult * mu).denominator != 1:
                        diags.append(
                            f"{where}: non-realizable slope {mu}"
                            f" with multiplicity {mult}"
                        )
            elif isinstance(slot, TypeIISlot):
                if slot.count < 1:
                    diags.append(
                        f"slot {idx} (II at ({slot.i},{slot.j})):"
                        f" count must be at least 1"
                    )
            elif isinstance(slot, TorsionSlot):
                if slot.length < 1:
                    diags.append(
                        f"slot {idx} (torsion at ({slot.i},{slot.j})):"
                        f" length must be at least 1"
                    )
            else:
                diags.append(f"slot {idx}: unknown slot kind {type(slot).__name__}")
    elif isinstance(c, CrysComplex):
        for n, P in c.polys.items():
            diags.extend(_realizability_diags(P, c.base, f"H {n}"))
        for (i, j), count in c.dominoes.items():
            if count < 1:
                diags.append(f"domino ({i},{j}): count must be at least 1")
    else:
        raise TypeError(f"not a complex: {type(c).__name__}")
    return diags


def _require_valid(c: AnyComplex) -> None:
    diags = validate(c)
    if diags:
        raise ValueError("invalid complex: " + "; ".join(diags))


def to_crys(c: SlotComplex) -> CrysComplex:
    """Degree-resolved view of a slot complex.

    A type-I slot at (i, j) contributes scale_roots(frob, q^i) to
    P_{i+j}; type-II slots populate the domino table; torsion slots are
    dropped (they carry no Frobenius or domino data).
    """
    _require_valid(c)
    q = c.base.q
    polys: dict = {}
    dominoes: dict = {}
    for slot in c.slots:
        if isinstance(slot, TypeISlot):
            n = slot.i + slot.j
            twisted = scale_roots(slot.frob, Fraction(q) ** slot.i)
            polys[n] = polys.get(n, Polynomial.one()) * twisted
        elif isinstance(slot, TypeIISlot):
            key = (slot.i, slot.j)
            dominoes[key] = dominoes.get(key, 0) + slot.count
    return CrysComplex(c.base, polys, dominoes)


def shift(c: CrysComplex, m: int, n: int) -> CrysComplex:
    """First-degree shift by m and cohomological shift by n.

    New polynomials P'_e = scale_roots(P_{e+m+n}, q^-m); new dominoes
    T'^{i,j} = T^{i+m, j+n}.
    """
    q = Fraction(c.base.q)
    polys = {
        e - m - n: scale_roots(P, q ** (-m)) for e, P in c.polys.items()
    }
    dominoes = {(i - m, j - n): cnt for (i, j), cnt in c.dominoes.items()}
    return CrysComplex(c.base, polys, dominoes, c.notes)


def tate_twist(c: CrysComplex, r: int) -> CrysComplex:
    """Tate twist: the shift {r}[-r]; inverse roots divided by q^r."""
    return shift(c, r, -r)


def direct_sum(a: CrysComplex, b: CrysComplex) -> CrysComplex:
    """Degreewise direct sum: polynomials multiply, domino tables add."""
    if a.base != b.base:
        raise ValueError("direct sum requires the same base field")
    polys = dict(a.polys)
    for n, P in b.polys.items():
        polys[n] = polys.get(n, Polynomial.one()) * P
    dominoes = dict(a.dominoes)
    for key, cnt in b.dominoes.items():
        dominoes[key] = dominoes.get(key, 0) + cnt
    return CrysComplex(a.base, polys, dominoes, a.notes + b.notes)


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(token: str, lineno: int) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise ParseError(lineno, f"expected rational n or n/d, got '{token}'")
    return Fraction(token)


def _parse_int(token: str, lineno: int, what: str = "integer") -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"expected {what}, got '{token}'") from None


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse(text: str) -> AnyComplex:
    """Parse the line-oriented complex format.

    Raises ParseError for malformed tokens and SemanticError for
    inadmissible content (non-prime p, mixed H and slot sections, a
    constant coefficient other than 1); deeper invariants are left to
    ``validate``.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError(None, "empty input")
    lineno, tokens = lines[0]
    if tokens != ["complex"]:
        raise ParseError(lineno, f"expected 'complex' header, got '{' '.join(tokens)}'")

    p: Optional[int] = None
    a = 1
    p_line = None
    polys: dict = {}
    dominoes: dict = {}
    slots: list = []
    saw_crys = False
    saw_slots = False

    for lineno, tokens in lines[1:]:
        head = tokens[0]
        if head == "p":
            if p is not None:
                raise SemanticError(lineno, "duplicate p directive")
            if len(tokens) != 2:
                raise ParseError(lineno, "usage: p <prime>")
            p = _parse_int(tokens[1], lineno, "prime")
            p_line = lineno
        elif head == "a":
            if len(tokens) != 2:
                raise ParseError(lineno, "usage: a <positive integer>")
            a = _parse_int(tokens[1], lineno)
        elif head == "H":
            if len(tokens) < 3:
                raise ParseError(lineno, "usage: H <n> <c0> <c1> ...")
            n = _parse_int(tokens[1], lineno, "degree")
            if n in polys:
                raise SemanticError(lineno, f"duplicate H {n} line")
            coeffs = [_parse_rational(t, lineno) for t in tokens[2:]]
            if coeffs[0] != 1:
                raise SemanticError(lineno, "constant coefficient must be 1")
            polys[n] = Polynomial(coeffs)
            saw_crys = True
        elif head == "domino":
            if len(tokens) != 4:
                raise ParseError(lineno, "usage: domino <i> <j> <count>")
            i = _parse_int(tokens[1], lineno)
            j = _parse_int(tokens[2], lineno)
            count = _parse_int(tokens[3], lineno, "count")
            if (i, j) in dominoes:
                raise SemanticError(lineno, f"duplicate domino ({i},{j}) line")
            dominoes[(i, j)] = count
            saw_crys = True
        elif head == "slot":
            if len(tokens) < 2:
                raise ParseError(lineno, "usage: slot {I|II|T} <i> <j> ...")
            kind = tokens[1]
            if kind == "I":
                if len(tokens) < 5:
                    raise ParseError(lineno, "usage: slot I <i> <j> <c0> <c1> ...")
                i = _parse_int(tokens[2], lineno)
                j = _parse_int(tokens[3], lineno)
                coeffs = [_parse_rational(t, lineno) for t in tokens[4:]]
                if coeffs[0] != 1:
                    raise SemanticError(lineno, "constant coefficient must be 1")
                slots.append(TypeISlot(i, j, Polynomial(coeffs)))
            elif kind == "II":
                if len(tokens) != 6:
                    raise ParseError(lineno, "usage: slot II <i> <j> <l> <count>")
                i, j, l, count = (_parse_int(t, lineno) for t in tokens[2:])
                slots.append(TypeIISlot(i, j, l, count))
            elif kind == "T":
                if len(tokens) != 5:
                    raise ParseError(lineno, "usage: slot T <i> <j> <length>")
                i, j, length = (_parse_int(t, lineno) for t in tokens[2:])
                slots.append(TorsionSlot(i, j, length))
            else:
                raise ParseError(lineno, f"unknown slot kind '{kind}'")
            saw_slots = True
        else:
            raise ParseError(lineno, f"unknown directive '{head}'")
        if saw_crys and saw_slots:
            raise SemanticError(
                lineno, "file mixes H/domino lines with slot lines"
            )

    if p is None:
        raise SemanticError(None, "p not declared")
    try:
        base = BaseField(p, a)
    except ValueError as exc:
        raise SemanticError(p_line, str(exc)) from None

    if saw_slots:
        return SlotComplex(base, tuple(slots))
    return CrysComplex(base, polys, dominoes)


def _format_coeffs(P: Polynomial) -> str:
    return " ".join(str(c) for c in P.coeffs)


def serialize(c: AnyComplex) -> str:
    """Canonical text form: header, then body lines in ascending order."""
    out = ["complex", f"p {c.base.p}", f"a {c.base.a}"]
    if isinstance(c, CrysComplex):
        for note in c.notes:
            out.append(f"# note: {note}")
        for n in sorted(c.polys):
            out.append(f"H {n} {_format_coeffs(c.polys[n])}")
        for (i, j) in sorted(c.dominoes):
            out.append(f"domino {i} {j} {c.dominoes[(i, j)]}")
    elif isinstance(c, SlotComplex):
        def key(slot: Slot):
            rank = {TypeISlot: 0, TypeIISlot: 1, TorsionSlot: 2}[type(slot)]
            if isinstance(slot, TypeISlot):
                payload: tuple = slot.frob.coeffs
            elif isinstance(slot, TypeIISlot):
                payload = (slot.l, slot.count)
            else:
                payload = (slot.length,)
            return (slot.i, slot.j, rank, payload)

        for slot in sorted(c.slots, key=key):
            if isinstance(slot, TypeISlot):
                out.append(f"slot I {slot.i} {slot.j} {_format_coeffs(slot.frob)}")
            elif isinstance(slot, TypeIISlot):
                out.append(f"slot II {slot.i} {slot.j} {slot.l} {slot.count}")
            else:
                out.append(f"slot T {slot.i} {slot.j} {slot.length}")
    else:
        raise TypeError(f"not a complex: {type(c).__name__}")
    return "\n".join(out) + "\n"
