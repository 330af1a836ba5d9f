"""Exact integer Laurent polynomials in a single variable t.

A polynomial is stored as a minimum exponent plus a dense coefficient
vector, so division by t is just an exponent shift.  All arithmetic is
exact (Python integers), and every value is immutable and canonical:
the first and last stored coefficients are nonzero unless the
polynomial is zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class LaurentPoly:
    min_exp: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(c, int) for c in self.coeffs):
            raise TypeError("coefficients must be integers")
        if self.coeffs and (self.coeffs[0] == 0 or self.coeffs[-1] == 0):
            raise ValueError("not canonical: leading/trailing zero coefficient")
        if not self.coeffs and self.min_exp != 0:
            raise ValueError("zero polynomial must have min_exp 0")

    # -- constructors ------------------------------------------------

    @staticmethod
    def make(min_exp: int, coeffs: Iterable[int]) -> "LaurentPoly":
        """Build from a raw coefficient run, trimming to canonical form."""
        cs = list(coeffs)
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            return LaurentPoly(0, ())
        return LaurentPoly(min_exp + lo, tuple(cs[lo:hi]))

    @staticmethod
    def from_terms(terms: Mapping[int, int]) -> "LaurentPoly":
        """Build from an {exponent: coefficient} mapping."""
        nz = {e: c for e, c in terms.items() if c != 0}
        if not nz:
            return LaurentPoly(0, ())
        lo, hi = min(nz), max(nz)
        return LaurentPoly(lo, tuple(nz.get(e, 0) for e in range(lo, hi + 1)))

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(0, (1,))

    @staticmethod
    def t_power(m: int) -> "LaurentPoly":
        return LaurentPoly(m, (1,))

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    def coefficient(self, exp: int) -> int:
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> dict[int, int]:
        return {self.min_exp + i: c for i, c in enumerate(self.coeffs) if c != 0}

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        cs = [self.coefficient(e) + other.coefficient(e) for e in range(lo, hi + 1)]
        return LaurentPoly.make(lo, cs)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_exp, tuple(-c for c in self.coeffs)) if self.coeffs else self

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        cs = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                cs[i + j] += a * b
        return LaurentPoly.make(self.min_exp + other.min_exp, cs)

    __rmul__ = __mul__

    def scale(self, k: int) -> "LaurentPoly":
        if k == 0 or self.is_zero():
            return LaurentPoly.zero()
        return LaurentPoly(self.min_exp, tuple(k * c for c in self.coeffs))

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by t**m (m may be negative)."""
        if self.is_zero():
            return self
        return LaurentPoly(self.min_exp + m, self.coeffs)

    def derivative(self) -> "LaurentPoly":
        """Formal derivative d/dt."""
        terms = {e - 1: e * c for e, c in self.terms().items() if e != 0}
        return LaurentPoly.from_terms(terms)

    def __call__(self, t: int) -> int:
        """Evaluate at an integer t (t must be nonzero if min_exp < 0)."""
        if self.min_exp < 0 and t == 0:
            raise ZeroDivisionError("negative exponent at t=0")
        total = 0
        for e, c in self.terms().items():
            if e >= 0:
                total += c * t**e
            else:
                q, r = divmod(c, t ** (-e))
                if r != 0:
                    raise ValueError("non-integral evaluation")
                total += q
        return total

    # -- formatting & serialization -----------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in sorted(self.terms().items()):
            if e == 0:
                s = str(c)
            else:
                var = "t" if e == 1 else f"t^{e}"
                if c == 1:
                    s = var
                elif c == -1:
                    s = "-" + var
                else:
                    s = f"{c}{var}"
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def to_json(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(obj: dict) -> "LaurentPoly":
        return LaurentPoly.make(int(obj["min_exp"]), [int(c) for c in obj["coeffs"]])


ONE_PLUS_T2 = LaurentPoly.from_terms({0: 1, 2: 1})
