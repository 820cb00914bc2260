"""Exact single-variable Laurent polynomials and integer matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping


@dataclass(frozen=True)
class LaurentPoly:
    """``sum c * var^(e / denom)`` with integer ``e`` and no zero coefficients."""

    terms: tuple[tuple[int, int], ...] = ()
    var: str = "A"
    denom: int = 1

    @classmethod
    def from_dict(cls, d: Mapping[int, int], var: str = "A", denom: int = 1) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in d.items() if c)), var, denom)

    @classmethod
    def one(cls, var: str = "A", denom: int = 1) -> "LaurentPoly":
        return cls(((0, 1),), var, denom)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def _same(self, other):
        if (self.var, self.denom) != (other.var, other.denom):
            raise ValueError("variables differ")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._same(other)
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return LaurentPoly.from_dict(d, self.var, self.denom)

    def __neg__(self):
        return LaurentPoly(tuple((e, -c) for e, c in self.terms), self.var, self.denom)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._same(other)
        d: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(d, self.var, self.denom)

    def __pow__(self, k: int) -> "LaurentPoly":
        out = LaurentPoly.one(self.var, self.denom)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``var^(k / denom)``."""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms), self.var, self.denom)

    def substitute_inverse(self) -> "LaurentPoly":
        """``var -> var^-1``."""
        return LaurentPoly.from_dict({-e: c for e, c in self.terms}, self.var, self.denom)

    def evaluate(self, x) -> Fraction:
        if self.denom != 1:
            raise ValueError("fractional exponents")
        x = Fraction(x)
        return sum((c * x ** e for e, c in self.terms), Fraction(0))

    def _exp(self, e: int) -> str:
        f = Fraction(e, self.denom)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    def __str__(self) -> str:
        """Terms ``c*t^e`` in increasing exponent order."""
        if not self.terms:
            return "0"
        parts = [f"{c}*{self.var}^{self._exp(e)}" for e, c in self.terms]
        return " + ".join(parts).replace("+ -", "- ")

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.terms:
            mono = "" if e == 0 else (self.var if e == self.denom else f"{self.var}^{self._exp(e)}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = str(abs(c)) + mono
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("matrix is not rectangular")

    @classmethod
    def of(cls, rows) -> "IntegerMatrix":
        rows = [tuple(int(v) for v in r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, tuple(rows))

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "IntegerMatrix":
        m = n if m is None else m
        return cls(n, m, tuple((0,) * m for _ in range(n)))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{v:3d}" for v in r) for r in self.entries)


def determinant(rows) -> Fraction:
    """Exact determinant by fraction-valued elimination."""
    m = [[Fraction(v) for v in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def inverse(rows) -> list[list[Fraction]]:
    """Exact inverse; raises ZeroDivisionError when singular."""
    n = len(rows)
    m = [[Fraction(v) for v in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [v / piv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [row[n:] for row in m]
