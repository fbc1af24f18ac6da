"""Integer Laurent polynomials in t, with the lattice helpers built on them.

A polynomial is a map exponent -> coefficient holding no zero coefficients;
the zero polynomial is the empty map.  Exponents may be negative.  Shifting
every exponent by a fixed amount multiplies by a unit of the Laurent ring and
changes no algebraic property used downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .intmat import hnf, left_kernel


class ParseError(ValueError):
    """Malformed polynomial or ideal text; carries the failing offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.message = message
        self.position = position


class LaurentPoly:
    """An integer Laurent polynomial in the variable t."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def t(cls, exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return tuple(sorted(self._coeffs.items()))

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def substitute_t_inverse(self) -> "LaurentPoly":
        """The image under t -> 1/t."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms())

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in rhs._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in rhs._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"


ONE_MINUS_T = LaurentPoly({0: 1, 1: -1})


def format_poly(f: LaurentPoly) -> str:
    """Render in the compact style '1+2t', '3t', '2t^-1-3'; zero is '0'.

    Terms appear in increasing exponent order; the output parses back with
    parse_poly.
    """
    if not f:
        return "0"
    parts = []
    for e, c in f.terms():
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            tpart = "t" if e == 1 else f"t^{e}"
            body = tpart if mag == 1 else f"{mag}{tpart}"
        parts.append(("-" if c < 0 else "+", body))
    sign0, body0 = parts[0]
    out = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        out += sign + body
    return out


def parse_poly(text: str) -> LaurentPoly:
    """Parse a term sum '[+|-] [coeff *] t[^exp]', e.g. 't^2+t+1', '2*t^-1 - 3'.

    Whitespace insensitive; the '*' between coefficient and t is optional; an
    exponent may carry a sign.  Raises ParseError with the failing position.
    """
    s = text
    n = len(s)
    i = 0

    def skip():
        nonlocal i
        while i < n and s[i].isspace():
            i += 1

    def digits(what: str) -> int:
        nonlocal i
        start = i
        while i < n and s[i].isdigit():
            i += 1
        if start == i:
            raise ParseError(f"expected {what}", i)
        return int(s[start:i])

    def tpart() -> int:
        nonlocal i
        i += 1  # the 't'
        skip()
        if i < n and s[i] == "^":
            i += 1
            skip()
            sgn = 1
            if i < n and s[i] in "+-":
                sgn = -1 if s[i] == "-" else 1
                i += 1
            return sgn * digits("an integer exponent")
        return 1

    coeffs: dict[int, int] = {}
    skip()
    if i == n:
        raise ParseError("expected a term", i)
    first = True
    while True:
        skip()
        if i == n:
            break
        sign = 1
        if s[i] == "+":
            i += 1
        elif s[i] == "-":
            sign = -1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-'", i)
        first = False
        skip()
        if i < n and s[i].isdigit():
            coeff = digits("a coefficient")
            skip()
            if i < n and s[i] == "*":
                i += 1
                skip()
                if i == n or s[i] != "t":
                    raise ParseError("expected 't'", i)
                exp = tpart()
            elif i < n and s[i] == "t":
                exp = tpart()
            else:
                exp = 0
        elif i < n and s[i] == "t":
            coeff = 1
            exp = tpart()
        else:
            raise ParseError("expected a coefficient or 't'", i)
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
    return LaurentPoly(coeffs)


def eval_one(f: LaurentPoly) -> int:
    """The value of f at t = 1, i.e. the sum of its coefficients."""
    return sum(c for _, c in f.terms())


def split_one_minus_t(f: LaurentPoly) -> tuple[LaurentPoly, int]:
    """The unique (q, c) with f == (1 - t) * q + c and c == f(1).

    Uniqueness holds because 1 - t is not a zero divisor.  The quotient is
    recovered by the first-order recurrence q_e = g_e + q_{e-1} applied to
    g = f - c, which vanishes at t = 1.
    """
    c = eval_one(f)
    g = f - c
    if not g:
        return LaurentPoly(), c
    lo, hi = g.min_exp, g.max_exp
    out: dict[int, int] = {}
    acc = 0
    for e in range(lo, hi):
        acc += g.coeff(e)
        if acc:
            out[e] = acc
    return LaurentPoly(out), c


def gcd_vec(values: Iterable[int]) -> int:
    """gcd of the entries; 0 for an all-zero (or empty) vector."""
    return reduce(math.gcd, values, 0)


@dataclass(frozen=True)
class SyzygyBasis:
    """Canonical (row Hermite form) basis of {s : sum s_i c_i == 0}."""

    vectors: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)


def syzygy_basis(c: Sequence[int]) -> SyzygyBasis:
    """Basis of the integer kernel lattice of v -> sum v_i c_i.

    The rank is k - 1 when some entry is nonzero, k when all are zero.
    """
    if not c:
        raise ValueError("need at least one entry")
    kern = left_kernel([[int(v)] for v in c])
    return SyzygyBasis(tuple(tuple(row) for row in hnf(kern)))
