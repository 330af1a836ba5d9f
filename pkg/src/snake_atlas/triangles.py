"""Boustrophedon triangles and the derivative-polynomial families.

Four recurrence-defined arrays live here:

* the zigzag triangle (alternating permutations by first entry),
* its signed analogue, a double triangle over columns -n..-1, 1..n,
* the polynomial refinement of the double triangle, and
* the variant that restricts to trees with an empty leftmost leaf.

The derivative polynomials P_n, Q_n, R_n of tan, sec and sec^2 are
computed by iterating (1+t^2) d/dt, and the triangle row sums are
checked against them symbolically.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, TypeVar

from .polynomials import ONE_PLUS_T2, LaurentPoly

V = TypeVar("V")


@dataclass(frozen=True)
class EntringerTriangle:
    n: int
    entries: dict  # (row, k) -> int, 1 <= k <= row <= n

    def row(self, r: int) -> list[int]:
        return [self.entries[(r, k)] for k in range(1, r + 1)]

    def row_sum(self, r: int) -> int:
        return sum(self.row(r))

    def to_json(self) -> dict:
        return {"n": self.n,
                "rows": [{"k": k, "value": self.entries[(self.n, k)]}
                         for k in range(1, self.n + 1)]}


@dataclass(frozen=True)
class DoubleTriangle(Generic[V]):
    n: int
    entries: dict  # (row, k) -> V, 1 <= |k| <= row <= n

    @staticmethod
    def signed_columns(r: int) -> list[int]:
        return list(range(-r, 0)) + list(range(1, r + 1))

    def row(self, r: int) -> list[V]:
        return [self.entries[(r, k)] for k in self.signed_columns(r)]

    def value(self, r: int, k: int) -> V:
        return self.entries[(r, k)]

    def positive_sum(self, r: int):
        total = self.entries[(r, 1)]
        for k in range(2, r + 1):
            total = total + self.entries[(r, k)]
        return total

    def negative_sum(self, r: int):
        total = self.entries[(r, -1)]
        for k in range(2, r + 1):
            total = total + self.entries[(r, -k)]
        return total

    def to_json(self) -> dict:
        def enc(v):
            return v.to_json() if isinstance(v, LaurentPoly) else v
        return {"n": self.n,
                "rows": [{"k": k, "value": enc(self.entries[(self.n, k)])}
                         for k in self.signed_columns(self.n)]}


def entringer(n: int) -> EntringerTriangle:
    """Triangle counting down-up alternating permutations by first entry."""
    if n < 1:
        raise ValueError("n must be >= 1")
    e = {(1, 1): 1}
    for r in range(2, n + 1):
        e[(r, 1)] = 0
        for k in range(2, r + 1):
            e[(r, k)] = e[(r, k - 1)] + e[(r - 1, r - k + 1)]
    return EntringerTriangle(n, e)


def arnold(n: int) -> DoubleTriangle:
    """Double triangle counting snakes by (signed) first entry.

    Row sums over positive columns give the type-B numbers, over
    negative columns the type-D numbers.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    v = {(1, 1): 1, (1, -1): 1}
    for r in range(2, n + 1):
        v[(r, -r)] = 0
        for k in range(r - 1, 0, -1):
            v[(r, -k)] = v[(r, -k - 1)] + v[(r - 1, k)]
        v[(r, 1)] = v[(r, -1)]
        for k in range(2, r + 1):
            v[(r, k)] = v[(r, k - 1)] + v[(r - 1, -k + 1)]
    return DoubleTriangle(n, v)


def arnold_poly(n: int) -> DoubleTriangle:
    """Polynomial refinement of the signed triangle.

    Same boustrophedon flow, but the turn at column 1 multiplies by t^2
    and the row-to-row transfers carry t or 1/t.  Intermediate entries
    may pass through negative exponents; every final entry is a proper
    polynomial, which is asserted.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    t = LaurentPoly.t_power
    V = {(1, 1): t(2), (1, -1): LaurentPoly.one()}
    for r in range(2, n + 1):
        V[(r, -r)] = LaurentPoly.zero()
        for k in range(r - 1, 0, -1):
            V[(r, -k)] = V[(r, -k - 1)] + V[(r - 1, k)].shift(-1)
        V[(r, 1)] = V[(r, -1)].shift(2)
        for k in range(2, r + 1):
            V[(r, k)] = V[(r, k - 1)] + V[(r - 1, -k + 1)].shift(1)
    for val in V.values():
        assert val.is_zero() or val.min_exp >= 0
    return DoubleTriangle(n, V)


def gamma_arrays(n: int) -> DoubleTriangle:
    """Signed-column triangle for the leftmost-leaf-empty tree classes.

    Positive column k holds the circ-class sum at rightmost label
    n-k+1, negative column -k the star-class sum.  Evaluating at t=1
    yields the triangle that counts snakes whose last entry has sign
    (-1)^(n+1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    star = {(1, 1): LaurentPoly.zero()}
    circ = {(1, 1): LaurentPoly.t_power(2)}
    for r in range(2, n + 1):
        star[(r, 1)] = LaurentPoly.zero()
        for k in range(2, r + 1):
            star[(r, k)] = star[(r, k - 1)] + circ[(r - 1, k - 1)].shift(-1)
        circ[(r, r)] = star[(r, r)].shift(2)
        for k in range(r - 1, 0, -1):
            circ[(r, k)] = circ[(r, k + 1)] + star[(r - 1, k)].shift(1)
    out = {}
    for r in range(1, n + 1):
        for k in range(1, r + 1):
            out[(r, k)] = circ[(r, r - k + 1)]
            out[(r, -k)] = star[(r, r - k + 1)]
    return DoubleTriangle(n, out)


def hoffman_P(n: int) -> LaurentPoly:
    """n-th derivative polynomial of tan: P_0 = t, then (1+t^2) d/dt."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p = LaurentPoly.t_power(1)
    for _ in range(n):
        p = ONE_PLUS_T2 * p.derivative()
    return p


def hoffman_Q(n: int) -> LaurentPoly:
    """n-th derivative polynomial of sec (cofactor of sec)."""
    return hoffman_secant_power(n, 1)


def hoffman_R(n: int) -> LaurentPoly:
    """n-th derivative polynomial of sec^2 (cofactor of sec^2)."""
    return hoffman_secant_power(n, 2)


def hoffman_secant_power(n: int, a: int) -> LaurentPoly:
    """Cofactor of sec^a in its n-th derivative (a=1 gives Q, a=2 gives R).

    Extension point for other powers; only a=1,2 are exercised by the
    triangle identities.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if a < 1:
        raise ValueError("a must be >= 1")
    r = LaurentPoly.one()
    at = LaurentPoly.from_terms({1: a})
    for _ in range(n):
        r = ONE_PLUS_T2 * r.derivative() + at * r
    return r


def hoffman_triangle_identity(n: int) -> bool:
    """Do the signed polynomial row sums reproduce Q_n and P_n - t*Q_n?"""
    if n < 1:
        raise ValueError("n must be >= 1")
    tri = arnold_poly(n)
    q = hoffman_Q(n)
    lhs_q = tri.positive_sum(n).shift(-1)
    lhs_p = tri.negative_sum(n)
    return lhs_q == q and lhs_p == hoffman_P(n) - LaurentPoly.t_power(1) * q
