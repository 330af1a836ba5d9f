"""Named machine-checkable properties with pass/fail reports.

Every registered check recomputes one published claim from scratch at
all sizes up to its depth and reports the first discrepancy as a
counterexample.  Checks are deterministic and independent; default
depths keep each one comfortably inside a minute.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from . import fixtures as fx
from .bijections import (phi1, phi1_d, phi1_d_inv, phi1_inv, phi2, phi2_d,
                         phi2_d_inv, phi2_inv, zeta1, zeta1_inv, zeta2,
                         zeta2_inv)
from .forests import (emp_forest, enumerate_forests, forest_sort_key,
                      is_all_white, last_root)
from .permutations import (enumerate_family, gae, is_member, npk, nva,
                           shrink_last_entry, subword)
from .polynomials import LaurentPoly
from .qcalculus import (BiPoly, QPoly, forest_step_weights, qpoly_P, qpoly_Q,
                        qpoly_R, tree_step_weights, weighted_sum_forests,
                        weighted_sum_trees)
from .trees import (emp, enumerate_trees, in_left_class, inorder_word,
                    is_starred, psi_cap, psi_cap_inv, psi_circ, psi_circ_inv,
                    psi_star, psi_star_inv, rmlab, word_sort_key)
from .triangles import (arnold, arnold_poly, entringer, gamma_arrays,
                        hoffman_P, hoffman_Q, hoffman_R,
                        hoffman_triangle_identity)


@dataclass
class CheckReport:
    check_id: str
    n_range: list[int]
    status: str
    counterexample: dict | None
    elapsed: float

    def to_json(self) -> dict:
        return asdict(self)


def _fail(inputs, expected, actual) -> dict:
    return {"inputs": inputs, "expected": str(expected), "actual": str(actual)}


def _tpoly(exp: int) -> LaurentPoly:
    return LaurentPoly.t_power(exp)


def _family_poly(members, weight) -> LaurentPoly:
    total = LaurentPoly.zero()
    for w in members:
        total = total + _tpoly(weight(w))
    return total


def _fixture_poly(d) -> LaurentPoly:
    return LaurentPoly.from_terms(d)


def _fixture_bipoly(d) -> BiPoly:
    m = max(d, default=-1)
    return BiPoly.make([QPoly.make(d.get(i, ())) for i in range(m + 1)])


# -- individual checks ---------------------------------------------------

def check_eq_1(n_max: int):
    tri = entringer(n_max)
    if tri.entries[(1, 1)] != 1:
        return _fail("E(1,1)", 1, tri.entries[(1, 1)])
    for r in range(2, n_max + 1):
        if tri.entries[(r, 1)] != 0:
            return _fail(f"E({r},1)", 0, tri.entries[(r, 1)])
        for k in range(2, r + 1):
            want = tri.entries[(r, k - 1)] + tri.entries[(r - 1, r - k + 1)]
            if tri.entries[(r, k)] != want:
                return _fail(f"E({r},{k})", want, tri.entries[(r, k)])
    for r in range(1, min(n_max, 8) + 1):
        if tri.row_sum(r) != fx.EULER[r]:
            return _fail(f"row sum {r}", fx.EULER[r], tri.row_sum(r))
    return None


def check_eq_2(n_max: int):
    tri = arnold(n_max)
    for r in range(2, n_max + 1):
        if tri.value(r, -r) != 0:
            return _fail(f"v({r},{-r})", 0, tri.value(r, -r))
        for k in range(1, r):
            want = tri.value(r, -k - 1) + tri.value(r - 1, k)
            if tri.value(r, -k) != want:
                return _fail(f"v({r},{-k})", want, tri.value(r, -k))
        if tri.value(r, 1) != tri.value(r, -1):
            return _fail(f"v({r},1)", tri.value(r, -1), tri.value(r, 1))
        for k in range(2, r + 1):
            want = tri.value(r, k - 1) + tri.value(r - 1, -k + 1)
            if tri.value(r, k) != want:
                return _fail(f"v({r},{k})", want, tri.value(r, k))
    for r in range(1, min(n_max, 8) + 1):
        if tri.positive_sum(r) != fx.SPRINGER_B[r]:
            return _fail(f"positive row sum {r}", fx.SPRINGER_B[r], tri.positive_sum(r))
        if tri.negative_sum(r) != fx.SPRINGER_D[r]:
            return _fail(f"negative row sum {r}", fx.SPRINGER_D[r], tri.negative_sum(r))
    for r in range(1, min(n_max, 6) + 1):
        for k, want in fx.ARNOLD_TRIANGLE[r].items():
            if tri.value(r, k) != want:
                return _fail(f"table cell ({r},{k})", want, tri.value(r, k))
    return None


def check_eq_5(n_max: int):
    tri = arnold_poly(n_max)
    ints = arnold(n_max)
    for r in range(1, n_max + 1):
        for k in tri.signed_columns(r):
            p = tri.value(r, k)
            if not p.is_zero() and p.min_exp < 0:
                return _fail(f"V({r},{k}) exponent", ">= 0", p.min_exp)
            if p(1) != ints.value(r, k):
                return _fail(f"V({r},{k}) at t=1", ints.value(r, k), p(1))
            if any(c < 0 for c in p.coeffs):
                return _fail(f"V({r},{k}) coefficients", ">= 0", str(p))
            if k > 0 and not p.is_zero():
                want_parity = 0 if r % 2 == 1 else 1
                if any(c != 0 and e % 2 != want_parity for e, c in p.terms().items()):
                    return _fail(f"V({r},{k}) parity", f"exponents = {want_parity} mod 2", str(p))
    for r in range(1, min(n_max, 5) + 1):
        for k, terms in fx.V_TRIANGLE[r].items():
            if tri.value(r, k) != _fixture_poly(terms):
                return _fail(f"table cell ({r},{k})", _fixture_poly(terms), tri.value(r, k))
    return None


def check_thm_1_1(n_max: int):
    for n in range(1, n_max + 1):
        tri = arnold(n)
        snakes = enumerate_family("snakes", n)
        counts = {}
        for w in snakes:
            counts[w[0]] = counts.get(w[0], 0) + 1
        for k in tri.signed_columns(n):
            if counts.get(k, 0) != tri.value(n, k):
                return _fail(f"n={n}, first entry {k}", tri.value(n, k), counts.get(k, 0))
    return None


def check_thm_1_2(n_max: int):
    for n in range(1, n_max + 1):
        if not hoffman_triangle_identity(n):
            return _fail(f"n={n}", "triangle sums equal Q_n and P_n - t Q_n", "mismatch")
    for n in range(1, min(n_max, 8) + 1):
        p1, q1 = hoffman_P(n)(1), hoffman_Q(n)(1)
        if p1 != 2**n * fx.EULER[n]:
            return _fail(f"P_{n}(1)", 2**n * fx.EULER[n], p1)
        if q1 != fx.SPRINGER_B[n]:
            return _fail(f"Q_{n}(1)", fx.SPRINGER_B[n], q1)
        if p1 - q1 != fx.SPRINGER_D[n]:
            return _fail(f"P_{n}(1)-Q_{n}(1)", fx.SPRINGER_D[n], p1 - q1)
    return None


def check_thm_2_2(n_max: int):
    for n in range(1, n_max + 1):
        trees = enumerate_trees(n)
        p = _family_poly(trees, emp)
        if p != hoffman_P(n):
            return _fail(f"P_{n} from trees", hoffman_P(n), p)
        q = _family_poly((t for t in trees if not is_starred(t)),
                         lambda t: emp(t) - 1)
        if q != hoffman_Q(n):
            return _fail(f"Q_{n} from trees", hoffman_Q(n), q)
    return None


def _tree_class_sums(n: int):
    sums = {}
    for t in enumerate_trees(n):
        key = (is_starred(t), rmlab(t))
        sums[key] = sums.get(key, LaurentPoly.zero()) + _tpoly(emp(t))
    return sums


def check_thm_2_3(n_max: int):
    for n in range(1, n_max + 1):
        tri = arnold_poly(n)
        sums = _tree_class_sums(n)
        for k in range(1, n + 1):
            circ = sums.get((False, n - k + 1), LaurentPoly.zero())
            star = sums.get((True, n - k + 1), LaurentPoly.zero())
            if circ != tri.value(n, k):
                return _fail(f"circ sum n={n} k={k}", tri.value(n, k), circ)
            if star != tri.value(n, -k):
                return _fail(f"star sum n={n} k={k}", tri.value(n, -k), star)
    return None


def check_thm_2_7(n_max: int):
    for n in range(1, n_max + 1):
        got = _family_poly(enumerate_family("rsi", n), lambda w: n - 2 * npk(w))
        if got != hoffman_R(n):
            return _fail(f"R_{n} over type-I Simsun", hoffman_R(n), got)
    return None


def check_thm_2_10(n_max: int):
    for n in range(1, n_max + 1):
        tri = arnold_poly(n)
        for k in range(1, n + 1):
            b = _family_poly(enumerate_family("rsi-b", n, ("last", n - k + 1)),
                             lambda w: n + 1 - 2 * npk(w))
            if b != tri.value(n, k):
                return _fail(f"B-side n={n} k={k}", tri.value(n, k), b)
            d = _family_poly(enumerate_family("rsi-d", n, ("last", -(n - k + 1))),
                             lambda w: n - 1 - 2 * npk(w))
            if d != tri.value(n, -k):
                return _fail(f"D-side n={n} k={k}", tri.value(n, -k), d)
    return None


def check_thm_2_13(n_max: int):
    for n in range(1, n_max + 1):
        got = _family_poly(enumerate_family("rsii", n), lambda w: n - 2 * nva(w))
        if got != hoffman_R(n):
            return _fail(f"R_{n} over type-II Simsun", hoffman_R(n), got)
        tri = arnold_poly(n)
        for k in range(1, n + 1):
            b = _family_poly(enumerate_family("rsii-b", n, ("gae", n - k + 1)),
                             lambda w: n + 1 - 2 * nva(w))
            if b != tri.value(n, k):
                return _fail(f"B-side n={n} k={k}", tri.value(n, k), b)
            d = _family_poly(enumerate_family("rsii-d", n, ("first", -(n - k + 1))),
                             lambda w: n - 1 - 2 * nva(w))
            if d != tri.value(n, -k):
                return _fail(f"D-side n={n} k={k}", tri.value(n, -k), d)
    return None


def check_conj_2_9(n_max: int):
    for n in range(1, n_max + 1):
        tri = arnold(n)
        for k in range(1, n + 1):
            count = len(enumerate_family("rsi-b", n, ("last", n - k + 1)))
            if count != tri.value(n, k):
                return _fail(f"n={n} k={k}", tri.value(n, k), count)
    return None


def check_prop_3_1(n_max: int):
    for n in range(1, n_max + 1):
        sums = _tree_class_sums(n)
        prev = _tree_class_sums(n - 1) if n >= 2 else {}
        z = LaurentPoly.zero()
        for k in range(2, n + 1):
            lhs = sums.get((True, k), z)
            rhs = sums.get((True, k - 1), z) + prev.get((False, k - 1), z).shift(-1)
            if lhs != rhs:
                return _fail(f"(i) n={n} k={k}", rhs, lhs)
        if n >= 2:
            if sums.get((False, n), z) != sums.get((True, n), z).shift(2):
                return _fail(f"(ii) n={n}", sums.get((True, n), z).shift(2),
                             sums.get((False, n), z))
        for k in range(1, n):
            lhs = sums.get((False, k), z)
            rhs = sums.get((False, k + 1), z) + prev.get((True, k), z).shift(1)
            if lhs != rhs:
                return _fail(f"(iii) n={n} k={k}", rhs, lhs)
        # exhaustive bijectivity with round trips
        trees = enumerate_trees(n)
        for t in trees:
            if is_starred(t):
                if rmlab(t) >= 2:
                    out, case = psi_star(t)
                    back, c2 = psi_star_inv(out)
                    if back != t or c2 != case:
                        return _fail(f"psi_star round trip {inorder_word(t)}", t, back)
                if rmlab(t) == n:
                    if psi_cap_inv(psi_cap(t)) != t:
                        return _fail(f"psi_cap round trip {inorder_word(t)}", t, "mismatch")
            elif rmlab(t) <= n - 1:
                out, case = psi_circ(t)
                back, c2 = psi_circ_inv(out)
                if back != t or c2 != case:
                    return _fail(f"psi_circ round trip {inorder_word(t)}", t, back)
    return None


def check_cor_3_2(n_max: int):
    for n in range(2, n_max + 1):
        sums = _tree_class_sums(n)
        prev = _tree_class_sums(n - 1)
        z = LaurentPoly.zero()
        for k in range(2, n + 1):
            rhs = z
            for j in range(1, k):
                rhs = rhs + prev.get((False, j), z)
            rhs = rhs.shift(-1)
            if sums.get((True, k), z) != rhs:
                return _fail(f"n={n} k={k}", rhs, sums.get((True, k), z))
    return None


def check_cor_3_3(n_max: int):
    for n in range(1, n_max + 1):
        g = gamma_arrays(n)
        total = g.positive_sum(n) + g.negative_sum(n)
        if total.shift(-1) != hoffman_Q(n):
            return _fail(f"n={n}", hoffman_Q(n), total.shift(-1))
    return None


def check_cor_3_4(n_max: int):
    for n in range(1, n_max + 1):
        g = gamma_arrays(n)
        members = enumerate_family("gamma-snakes", n)
        counts = {}
        for w in members:
            counts[w[0]] = counts.get(w[0], 0) + 1
        for k in g.signed_columns(n):
            if counts.get(k, 0) != g.value(n, k)(1):
                return _fail(f"n={n} first entry {k}", g.value(n, k)(1), counts.get(k, 0))
        # leftmost-leaf restriction matches the polynomial cells
        sums = {}
        for t in enumerate_trees(n):
            if not in_left_class(t):
                continue
            key = (is_starred(t), rmlab(t))
            sums[key] = sums.get(key, LaurentPoly.zero()) + _tpoly(emp(t))
        z = LaurentPoly.zero()
        for k in range(1, n + 1):
            if sums.get((False, n - k + 1), z) != g.value(n, k):
                return _fail(f"circ cell n={n} k={k}", g.value(n, k),
                             sums.get((False, n - k + 1), z))
            if sums.get((True, n - k + 1), z) != g.value(n, -k):
                return _fail(f"star cell n={n} k={k}", g.value(n, -k),
                             sums.get((True, n - k + 1), z))
    return None


def check_eq_13(n_max: int):
    for n in range(1, n_max + 1):
        got = _family_poly(enumerate_forests(n), emp_forest)
        if got != hoffman_R(n):
            return _fail(f"R_{n} over forests", hoffman_R(n), got)
    return None


def check_prop_4_2(n_max: int):
    for n in range(1, n_max + 1):
        dom = enumerate_family("rsi", n)
        imgs = []
        for w in dom:
            f = phi1(w)
            if emp_forest(f) != n - 2 * npk(w):
                return _fail(f"emp transport {w}", n - 2 * npk(w), emp_forest(f))
            if phi1_inv(f) != w:
                return _fail(f"round trip {w}", w, phi1_inv(f))
            imgs.append(f)
        want = sorted(map(forest_sort_key, enumerate_forests(n)))
        if sorted(map(forest_sort_key, imgs)) != want:
            return _fail(f"image coverage n={n}", "all forests", "missing images")
        for k in range(1, n + 1):
            for w in enumerate_family("rsi-b", n, ("last", k)):
                f = phi1(w)
                if not is_all_white(f) or last_root(f) != k:
                    return _fail(f"B-refinement {w}", f"white forest, last root {k}", f)
    # worked example: restriction subwords and image statistics
    w = fx.TYPE1_EXAMPLE
    for j, sub in enumerate(fx.TYPE1_EXAMPLE_SUBWORDS, start=1):
        if subword(w, j) != sub:
            return _fail(f"table subword j={j}", sub, subword(w, j))
    if emp_forest(phi1(w)) != len(w) - 2 * npk(w):
        return _fail("example emp", len(w) - 2 * npk(w), emp_forest(phi1(w)))
    if phi1_inv(phi1(w)) != w:
        return _fail("example round trip", w, phi1_inv(phi1(w)))
    return None


def check_prop_4_5(n_max: int):
    for n in range(2, n_max + 1):
        for k in range(2, n + 1):
            dom = enumerate_family("rsi-d", n, ("last", -k))
            cod = enumerate_trees(n, starred=True, rightmost=k)
            imgs = []
            for w in dom:
                t = phi1_d(w)
                if not is_starred(t) or rmlab(t) != k:
                    return _fail(f"class of {w}", f"star, rightmost {k}", t)
                if emp(t) != n - 1 - 2 * npk(w):
                    return _fail(f"emp of {w}", n - 1 - 2 * npk(w), emp(t))
                if phi1_d_inv(t) != w:
                    return _fail(f"round trip {w}", w, phi1_d_inv(t))
                imgs.append(t)
            if sorted(word_sort_key(inorder_word(t)) for t in imgs) != \
                    sorted(word_sort_key(inorder_word(t)) for t in cod):
                return _fail(f"coverage n={n} k={k}", "all star trees", "missing")
    src, tgt = fx.TYPE1_D_EXAMPLE
    if shrink_last_entry(src) != tgt:
        return _fail("shrinking example", tgt, shrink_last_entry(src))
    return None


def check_thm_4_5(n_max: int):
    for n in range(1, n_max + 1):
        dom = enumerate_family("adi", n + 1)
        cod = set(enumerate_family("rsi", n))
        imgs = set()
        for w in dom:
            v = zeta1(w)
            if v not in cod:
                return _fail(f"image of {w}", "type-I Simsun member", v)
            if zeta1_inv(v) != w:
                return _fail(f"round trip {w}", w, zeta1_inv(v))
            imgs.add(v)
        if imgs != cod:
            return _fail(f"coverage n={n}", "all members", "missing")
        for k in range(1, n + 1):
            for w in enumerate_family("adi-b", n + 1, ("last", k + 1)):
                if not is_member(zeta1(w), "rsi-b") or zeta1(w)[-1] != k:
                    return _fail(f"B index of {w}", f"last entry {k}", zeta1(w))
            for w in enumerate_family("adi-d", n + 1, ("last", -k - 1)):
                if not is_member(zeta1(w), "rsi-d") or zeta1(w)[-1] != -k:
                    return _fail(f"D index of {w}", f"last entry {-k}", zeta1(w))
    a, b = fx.ZETA1_EXAMPLE
    if zeta1(a) != b:
        return _fail("worked example", b, zeta1(a))
    if zeta1_inv(b) != a:
        return _fail("worked example inverse", a, zeta1_inv(b))
    return None


def check_prop_5_1(n_max: int):
    for n in range(1, n_max + 1):
        dom = enumerate_family("rsii", n)
        imgs = []
        for w in dom:
            f = phi2(w)
            if emp_forest(f) != n - 2 * nva(w):
                return _fail(f"emp transport {w}", n - 2 * nva(w), emp_forest(f))
            if phi2_inv(f) != w:
                return _fail(f"round trip {w}", w, phi2_inv(f))
            imgs.append(f)
        want = sorted(map(forest_sort_key, enumerate_forests(n)))
        if sorted(map(forest_sort_key, imgs)) != want:
            return _fail(f"image coverage n={n}", "all forests", "missing images")
        for w in enumerate_family("rsii-b", n):
            f = phi2(w)
            if not is_all_white(f) or last_root(f) != gae(w):
                return _fail(f"B-refinement {w}", f"white forest, last root {gae(w)}", f)
    w = fx.TYPE2_EXAMPLE
    for j, sub in enumerate(fx.TYPE2_EXAMPLE_SUBWORDS, start=1):
        if subword(w, j) != sub:
            return _fail(f"table subword j={j}", sub, subword(w, j))
    if phi2_inv(phi2(w)) != w:
        return _fail("example round trip", w, phi2_inv(phi2(w)))
    return None


def check_prop_5_3(n_max: int):
    for n in range(2, n_max + 1):
        for k in range(2, n + 1):
            dom = enumerate_family("rsii-d", n, ("first", -k))
            cod = enumerate_trees(n, starred=True, rightmost=k)
            imgs = []
            for w in dom:
                t = phi2_d(w)
                if not is_starred(t) or rmlab(t) != k:
                    return _fail(f"class of {w}", f"star, rightmost {k}", t)
                if emp(t) != n - 1 - 2 * nva(w):
                    return _fail(f"emp of {w}", n - 1 - 2 * nva(w), emp(t))
                if phi2_d_inv(t) != w:
                    return _fail(f"round trip {w}", w, phi2_d_inv(t))
                imgs.append(t)
            if sorted(word_sort_key(inorder_word(t)) for t in imgs) != \
                    sorted(word_sort_key(inorder_word(t)) for t in cod):
                return _fail(f"coverage n={n} k={k}", "all star trees", "missing")
    return None


def check_thm_5_4(n_max: int):
    for n in range(1, n_max + 1):
        dom = enumerate_family("adii", n + 1)
        cod = set(enumerate_family("rsii", n))
        imgs = set()
        for w in dom:
            v = zeta2(w)
            if v not in cod:
                return _fail(f"image of {w}", "type-II Simsun member", v)
            if zeta2_inv(v) != w:
                return _fail(f"round trip {w}", w, zeta2_inv(v))
            imgs.add(v)
        if imgs != cod:
            return _fail(f"coverage n={n}", "all members", "missing")
        for k in range(1, n + 1):
            for w in enumerate_family("adii-b", n + 1, ("last", k + 1)):
                if not is_member(zeta2(w), "rsii-b") or gae(zeta2(w)) != k:
                    return _fail(f"B index of {w}", f"greatest augmenting {k}", zeta2(w))
            for w in enumerate_family("adii-d", n + 1, ("first", -k - 1)):
                if not is_member(zeta2(w), "rsii-d") or zeta2(w)[0] != -k:
                    return _fail(f"D index of {w}", f"first entry {-k}", zeta2(w))
    a, b = fx.ZETA2_EXAMPLE
    if zeta2(a) != b:
        return _fail("worked example", b, zeta2(a))
    if zeta2_inv(b) != a:
        return _fail("worked example inverse", a, zeta2_inv(b))
    return None


def check_thm_6_1(n_max: int):
    for n in range(1, n_max + 1):
        got = weighted_sum_trees(n)
        want = qpoly_P(n)
        if got != want:
            return _fail(f"n={n}", want.to_json(), got.to_json())
    if fx.TREE_WEIGHT_EXAMPLE not in {tree_step_weights(t) for t in enumerate_trees(5)}:
        return _fail("weight example", fx.TREE_WEIGHT_EXAMPLE, "not attained")
    return None


def check_thm_6_2(n_max: int):
    for n in range(1, n_max + 1):
        got = weighted_sum_forests(n)
        if got != qpoly_R(n):
            return _fail(f"all forests n={n}", qpoly_R(n).to_json(), got.to_json())
        gotw = weighted_sum_forests(n, white_only=True)
        if gotw != qpoly_Q(n):
            return _fail(f"white forests n={n}", qpoly_Q(n).to_json(), gotw.to_json())
    if fx.FOREST_WEIGHT_EXAMPLE not in {forest_step_weights(f) for f in enumerate_forests(6)}:
        return _fail("weight example", fx.FOREST_WEIGHT_EXAMPLE, "not attained")
    return None


def check_tables_fixtures(n_max: int):
    e = entringer(8)
    for n in range(1, 9):
        if e.row_sum(n) != fx.EULER[n]:
            return _fail(f"zigzag row sum {n}", fx.EULER[n], e.row_sum(n))
    a = arnold(6)
    for n, row in fx.ARNOLD_TRIANGLE.items():
        for k, v in row.items():
            if a.value(n, k) != v:
                return _fail(f"signed triangle ({n},{k})", v, a.value(n, k))
    V = arnold_poly(5)
    for n, row in fx.V_TRIANGLE.items():
        for k, terms in row.items():
            if V.value(n, k) != _fixture_poly(terms):
                return _fail(f"polynomial triangle ({n},{k})",
                             _fixture_poly(terms), V.value(n, k))
    G = gamma_arrays(6)
    for n, row in fx.GAMMA_POLY_TRIANGLE.items():
        for k, terms in row.items():
            if G.value(n, k) != _fixture_poly(terms):
                return _fail(f"restricted triangle ({n},{k})",
                             _fixture_poly(terms), G.value(n, k))
    for n, row in fx.GAMMA_TRIANGLE.items():
        for k, v in row.items():
            if G.value(n, k)(1) != v:
                return _fail(f"restricted counts ({n},{k})", v, G.value(n, k)(1))
    for n in range(1, 6):
        for fn, table, name in ((hoffman_P, fx.P_LIST, "P"),
                                (hoffman_Q, fx.Q_LIST, "Q"),
                                (hoffman_R, fx.R_LIST, "R")):
            if fn(n) != _fixture_poly(table[n]):
                return _fail(f"{name}_{n}", _fixture_poly(table[n]), fn(n))
    for n in range(1, 4):
        for fn, table, name in ((qpoly_P, fx.P_Q_LIST, "P"),
                                (qpoly_Q, fx.Q_Q_LIST, "Q"),
                                (qpoly_R, fx.R_Q_LIST, "R")):
            if fn(n) != _fixture_bipoly(table[n]):
                return _fail(f"q-{name}_{n}", _fixture_bipoly(table[n]).to_json(),
                             fn(n).to_json())
    for w, table in ((fx.TYPE1_EXAMPLE, fx.TYPE1_EXAMPLE_SUBWORDS),
                     (fx.TYPE2_EXAMPLE, fx.TYPE2_EXAMPLE_SUBWORDS)):
        for j, sub in enumerate(table, start=1):
            if subword(w, j) != sub:
                return _fail(f"subword table {w} level {j}", sub, subword(w, j))
    return None


CHECKS = {
    "eq-1": (12, check_eq_1),
    "eq-2": (12, check_eq_2),
    "eq-5": (10, check_eq_5),
    "thm-1-1": (6, check_thm_1_1),
    "thm-1-2": (10, check_thm_1_2),
    "thm-2-2": (7, check_thm_2_2),
    "thm-2-3": (7, check_thm_2_3),
    "thm-2-7": (6, check_thm_2_7),
    "thm-2-10": (6, check_thm_2_10),
    "thm-2-13": (6, check_thm_2_13),
    "conj-2-9": (6, check_conj_2_9),
    "prop-3-1": (6, check_prop_3_1),
    "cor-3-2": (8, check_cor_3_2),
    "cor-3-3": (10, check_cor_3_3),
    "cor-3-4": (6, check_cor_3_4),
    "eq-13": (6, check_eq_13),
    "prop-4-2": (6, check_prop_4_2),
    "prop-4-5": (6, check_prop_4_5),
    "thm-4-5": (6, check_thm_4_5),
    "prop-5-1": (6, check_prop_5_1),
    "prop-5-3": (6, check_prop_5_3),
    "thm-5-4": (6, check_thm_5_4),
    "thm-6-1": (6, check_thm_6_1),
    "thm-6-2": (6, check_thm_6_2),
    "tables-fixtures": (6, check_tables_fixtures),
}


def run_check(check_id: str, n_max: int | None = None) -> CheckReport:
    if check_id not in CHECKS:
        raise ValueError(f"unknown check id {check_id!r}")
    default, fn = CHECKS[check_id]
    depth = default if n_max is None else int(n_max)
    start = time.perf_counter()
    counterexample = fn(depth)
    elapsed = time.perf_counter() - start
    return CheckReport(check_id=check_id, n_range=[1, depth],
                       status="pass" if counterexample is None else "fail",
                       counterexample=counterexample, elapsed=round(elapsed, 4))


def run_all(n_max: int | None = None) -> list[CheckReport]:
    return [run_check(cid, n_max) for cid in sorted(CHECKS)]
