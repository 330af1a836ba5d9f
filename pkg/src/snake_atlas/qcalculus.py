"""q-analogue operator calculus and weighted object sums.

``D`` is the q-derivative, sending t^n to [n]_q t^(n-1) with
[n]_q = 1 + q + ... + q^(n-1); ``U`` multiplies by t.  They satisfy
DU - qUD = 1.  Polynomials in t with integer q-polynomial coefficients
are ``BiPoly`` values; composite operators are sums of words in D and U
and are applied by folding.

The three operator-defined families

    P_n = (D + UUD)^n  t
    Q_n = (D + UDU)^n  1
    R_n = (D + DUU)^n  1

specialize at q=1 to the derivative polynomials of tan, sec and sec^2,
and are matched combinatorially by q-weights: a tree or forest is
peeled label by label, each label contributing the number of empty
leaves read before it (black roots add one more).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .forests import BLACK, emp_forest, enumerate_forests
from .polynomials import LaurentPoly
from .trees import EMPTY, emp, enumerate_trees, is_empty, is_leaf, validate_tree


@dataclass(frozen=True)
class QPoly:
    coeffs: tuple[int, ...]  # coefficient of q^i at index i

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("not canonical: trailing zero")

    @staticmethod
    def make(coeffs: Iterable[int]) -> "QPoly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return QPoly(tuple(cs))

    @staticmethod
    def zero() -> "QPoly":
        return QPoly(())

    @staticmethod
    def one() -> "QPoly":
        return QPoly((1,))

    @staticmethod
    def q_power(m: int) -> "QPoly":
        return QPoly((0,) * m + (1,))

    @staticmethod
    def q_integer(k: int) -> "QPoly":
        """[k]_q = 1 + q + ... + q^(k-1)."""
        if k < 0:
            raise ValueError("q-integer needs k >= 0")
        return QPoly((1,) * k)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly.make([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + QPoly.make([-c for c in other.coeffs])

    def __mul__(self, other: "QPoly") -> "QPoly":
        if self.is_zero() or other.is_zero():
            return QPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly.make(out)

    def __call__(self, q: int) -> int:
        return sum(c * q**i for i, c in enumerate(self.coeffs))


@dataclass(frozen=True)
class BiPoly:
    t_coeffs: tuple[QPoly, ...]  # coefficient of t^i at index i

    def __post_init__(self):
        if self.t_coeffs and self.t_coeffs[-1].is_zero():
            raise ValueError("not canonical: trailing zero t-coefficient")

    @staticmethod
    def make(t_coeffs: Iterable[QPoly]) -> "BiPoly":
        cs = list(t_coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        return BiPoly(tuple(cs))

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly(())

    @staticmethod
    def one() -> "BiPoly":
        return BiPoly((QPoly.one(),))

    @staticmethod
    def t_power(m: int) -> "BiPoly":
        return BiPoly((QPoly.zero(),) * m + (QPoly.one(),))

    @staticmethod
    def monomial(q_exp: int, t_exp: int) -> "BiPoly":
        return BiPoly((QPoly.zero(),) * t_exp + (QPoly.q_power(q_exp),))

    def coefficient(self, t_exp: int) -> QPoly:
        if 0 <= t_exp < len(self.t_coeffs):
            return self.t_coeffs[t_exp]
        return QPoly.zero()

    def __add__(self, other: "BiPoly") -> "BiPoly":
        m = max(len(self.t_coeffs), len(other.t_coeffs))
        return BiPoly.make([self.coefficient(i) + other.coefficient(i) for i in range(m)])

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        m = max(len(self.t_coeffs), len(other.t_coeffs))
        return BiPoly.make([self.coefficient(i) - other.coefficient(i) for i in range(m)])

    def at_q1(self) -> LaurentPoly:
        return LaurentPoly.make(0, [c(1) for c in self.t_coeffs])

    def to_json(self) -> dict:
        return {"t": [list(c.coeffs) for c in self.t_coeffs]}

    @staticmethod
    def from_json(obj: dict) -> "BiPoly":
        return BiPoly.make([QPoly.make([int(x) for x in c]) for c in obj["t"]])


def op_D(f: BiPoly) -> BiPoly:
    """q-derivative: t^n -> [n]_q t^(n-1)."""
    return BiPoly.make([f.coefficient(i + 1) * QPoly.q_integer(i + 1)
                        for i in range(len(f.t_coeffs))])


def op_U(f: BiPoly) -> BiPoly:
    """Multiplication by t."""
    if not f.t_coeffs:
        return f
    return BiPoly((QPoly.zero(),) + f.t_coeffs)


_PRIMITIVES = {"D": op_D, "U": op_U}


@dataclass(frozen=True)
class Operator:
    """Sum of words in the primitives D and U, applied right to left."""
    words: tuple[str, ...]

    def __call__(self, f: BiPoly) -> BiPoly:
        total = BiPoly.zero()
        for word in self.words:
            g = f
            for ch in reversed(word):
                g = _PRIMITIVES[ch](g)
            total = total + g
        return total

    def __add__(self, other: "Operator") -> "Operator":
        return Operator(self.words + other.words)

    def iterate(self, n: int, f: BiPoly) -> BiPoly:
        for _ in range(n):
            f = self(f)
        return f


P_OPERATOR = Operator(("D", "UUD"))
Q_OPERATOR = Operator(("D", "UDU"))
R_OPERATOR = Operator(("D", "DUU"))


def qpoly_P(n: int) -> BiPoly:
    if n < 0:
        raise ValueError("n must be >= 0")
    return P_OPERATOR.iterate(n, BiPoly.t_power(1))


def qpoly_Q(n: int) -> BiPoly:
    if n < 0:
        raise ValueError("n must be >= 0")
    return Q_OPERATOR.iterate(n, BiPoly.one())


def qpoly_R(n: int) -> BiPoly:
    if n < 0:
        raise ValueError("n must be >= 0")
    return R_OPERATOR.iterate(n, BiPoly.one())


# -- combinatorial weights ------------------------------------------------

def _preorder(node, out):
    if is_empty(node):
        out.append(EMPTY)
        return
    out.append(node[0])
    if not is_leaf(node):
        _preorder(node[1], out)
        _preorder(node[2], out)


def _peel_once(node, j: int):
    """Replace the node labelled j (necessarily childless or with empty
    children) by an empty leaf."""
    if is_empty(node):
        return node
    if node[0] == j:
        return EMPTY
    if is_leaf(node):
        return node
    return (node[0], _peel_once(node[1], j), _peel_once(node[2], j))


def tree_step_weights(tree) -> tuple[int, ...]:
    """c_j = empty leaves read before the node labelled j, in the tree
    peeled down to labels <= j."""
    n = validate_tree(tree)
    out = [0] * (n + 1)
    cur = tree
    for j in range(n, 0, -1):
        order = []
        _preorder(cur, order)
        seen = 0
        for x in order:
            if x == j:
                break
            if x == EMPTY:
                seen += 1
        out[j] = seen
        cur = _peel_once(cur, j)
    return tuple(out[1:])


def weight_tree(tree) -> int:
    return sum(tree_step_weights(tree))


def forest_step_weights(forest) -> tuple[int, ...]:
    """d_j = empty leaves read before the node labelled j (components in
    root order, roots read before their subtrees), plus one when j is a
    black root."""
    comps = list(forest)
    n = sum(1 if is_empty(c) else len(_subtree(c)) + 1 for _, _, c in comps)
    out = [0] * (n + 1)
    for j in range(n, 0, -1):
        order = []
        for color, root, child in comps:
            order.append(root)
            _preorder(child, order)
        seen = 0
        for x in order:
            if x == j:
                break
            if x == EMPTY:
                seen += 1
        bonus = any(root == j and color == BLACK for color, root, _ in comps)
        out[j] = seen + (1 if bonus else 0)
        comps = _peel_forest(comps, j)
    return tuple(out[1:])


def _subtree(node) -> list[int]:
    if is_empty(node):
        return []
    if is_leaf(node):
        return [node[0]]
    return [node[0]] + _subtree(node[1]) + _subtree(node[2])


def _peel_forest(comps, j):
    out = []
    for color, root, child in comps:
        if root == j:
            continue
        out.append((color, root, _peel_once(child, j) if not is_empty(child) else child))
    return out


def weight_forest(forest) -> int:
    return sum(forest_step_weights(forest))


def weighted_sum_trees(n: int, *, max_n=None) -> BiPoly:
    """Sum of q^weight t^emp over all size-n trees (= the operator P_n)."""
    total = BiPoly.zero()
    for t in enumerate_trees(n, max_n=max_n):
        total = total + BiPoly.monomial(weight_tree(t), emp(t))
    return total


def weighted_sum_forests(n: int, *, white_only: bool = False, max_n=None) -> BiPoly:
    """Sum of q^weight t^emp over forests (all: R_n; white only: Q_n)."""
    total = BiPoly.zero()
    for f in enumerate_forests(n, white_only=white_only, max_n=max_n):
        total = total + BiPoly.monomial(weight_forest(f), emp_forest(f))
    return total
