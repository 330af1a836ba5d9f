"""Bijections between signed permutation families and tree/forest objects.

The two central maps build an increasing forest from a signed Simsun
permutation by following its chain of value restrictions: step j looks
at where the entry of absolute value j was inserted into the previous
restriction and performs the matching forest surgery.

* ``phi1`` (type I) classifies the insertion point against peaks and
  double-ascent elements of the absolute word, padded with 0 on the
  left and a large value on the right.
* ``phi2`` (type II) works on signed words padded with -(n+1) and n+1,
  routes end insertions to new colored components (black left, white
  right), and addresses interior insertions through the ranked list of
  singular empty leaves.

Both are inverted by first assigning each labelled node a sign (white
roots, two-empty-leaf nodes and left-heavy nodes are positive; black
roots, labelled leaves and right-heavy nodes are negative), then
peeling labels n..2 and replaying the insertions.

``zeta1``/``zeta2`` shift signed Andre permutations of size n+1 down to
signed Simsun permutations of size n by sliding entries along the
right-to-left minima (type I) or augmenting positions (type II).

The ``*_b``/``*_d`` variants land in circ- and star-class trees; the
``_d`` maps shrink the window by its anchor entry first and relabel the
tree afterwards.
"""
from __future__ import annotations

from .errors import MembershipError
from .forests import (BLACK, WHITE, forest_to_tree, tree_to_forest,
                      validate_forest)
from .permutations import (augmenting_elements, check_window,
                           expand_first_entry, expand_last_entry, is_member,
                           shrink_first_entry, shrink_last_entry, subword,
                           _simsun_levels_ok)
from .trees import EMPTY, is_starred, rmlab, validate_tree

# When enabled, the forward algorithms assert the step-by-step
# correspondence between word marks and node classes.
CHECK_INVARIANTS = False


class _Builder:
    """Mutable forest under construction, keyed by node label."""

    def __init__(self):
        self.colors = {}      # root label -> BLACK | WHITE
        self.root_child = {}  # root label -> EMPTY | label
        self.kids = {}        # non-root label -> None | [slot, slot]

    @staticmethod
    def from_forest(forest) -> "_Builder":
        b = _Builder()

        def add(node):
            if len(node) == 1:
                b.kids[node[0]] = None
                return node[0]
            b.kids[node[0]] = [add_slot(node[1]), add_slot(node[2])]
            return node[0]

        def add_slot(c):
            return EMPTY if c == EMPTY else add(c)

        for color, root, child in forest:
            b.colors[root] = color
            b.root_child[root] = EMPTY if child == EMPTY else add(child)
        return b

    def to_forest(self) -> tuple:
        def build(v):
            kid = self.kids[v]
            if kid is None:
                return (v,)
            l, r = kid
            return (v, EMPTY if l == EMPTY else build(l),
                    EMPTY if r == EMPTY else build(r))

        comps = []
        for root in sorted(self.colors):
            c = self.root_child[root]
            comps.append((self.colors[root], root,
                          EMPTY if c == EMPTY else build(c)))
        return tuple(comps)

    def parent_of(self, v):
        """(kind, ...) locating v's parent slot."""
        for root, c in self.root_child.items():
            if c == v:
                return ("root", root)
        for u, kid in self.kids.items():
            if kid and v in kid:
                return ("kid", u, kid.index(v))
        return None

    def fill_empty_slot_of(self, v: int, j: int):
        """Label the unique empty leaf hanging from the intermediate node v."""
        if v in self.colors:
            if self.root_child[v] != EMPTY:
                raise MembershipError(f"root {v} has no empty child")
            self.root_child[v] = j
            return
        kid = self.kids[v]
        if kid is None or kid.count(EMPTY) != 1:
            raise MembershipError(f"node {v} is not intermediate")
        kid[kid.index(EMPTY)] = j

    def arranged_roots(self):
        black = sorted((r for r, c in self.colors.items() if c == BLACK), reverse=True)
        white = sorted(r for r, c in self.colors.items() if c == WHITE)
        return black + white

    def singular_slots(self):
        """Singular empty leaves left to right in the arranged layout.

        A slot is ("root", r) for the lone child of a root, or
        ("kid", v, i) for an empty slot whose sibling is labelled.
        """
        slots = []

        def walk(v):
            kid = self.kids[v]
            if kid is None:
                return
            l, r = kid
            if l == EMPTY:
                if r != EMPTY:
                    slots.append(("kid", v, 0))
            else:
                walk(l)
            if r == EMPTY:
                if l != EMPTY:
                    slots.append(("kid", v, 1))
            else:
                walk(r)

        for root in self.arranged_roots():
            c = self.root_child[root]
            if c == EMPTY:
                slots.append(("root", root))
            else:
                walk(c)
        return slots

    def fill_slot(self, slot, j: int):
        if slot[0] == "root":
            self.root_child[slot[1]] = j
        else:
            self.kids[slot[1]][slot[2]] = j

    def node_status(self, v):
        """'terminal' | 'intermediate' | 'plain' for the current shape."""
        if v in self.colors:
            return "intermediate" if self.root_child[v] == EMPTY else "plain"
        kid = self.kids[v]
        if kid is None or kid == [EMPTY, EMPTY]:
            return "terminal"
        if EMPTY in kid:
            return "intermediate"
        return "plain"


def _b1_signs(b: _Builder, n: int) -> dict:
    """Sign each labelled node; empty slots count as larger than any label."""
    signs = {}
    for r, color in b.colors.items():
        signs[r] = 1 if color == WHITE else -1
    big = n + 1
    for v, kid in b.kids.items():
        if kid is None:
            signs[v] = -1
        elif kid == [EMPTY, EMPTY]:
            signs[v] = 1
        else:
            l = big if kid[0] == EMPTY else kid[0]
            r = big if kid[1] == EMPTY else kid[1]
            signs[v] = 1 if l > r else -1
    return signs


# -- word marks ----------------------------------------------------------

def _type1_marks(word):
    """(peaks, double_ascents) of a word, compared by absolute value
    with 0 padded on the left and a maximal value on the right."""
    a = [abs(x) for x in word]
    m = len(a)
    peaks, das = [], []
    for i, x in enumerate(word):
        prev = a[i - 1] if i > 0 else 0
        nxt = a[i + 1] if i < m - 1 else m + 1
        if prev < a[i] > nxt:
            peaks.append(x)
        elif prev < a[i] < nxt:
            das.append(x)
    return peaks, das


def _type2_das(word):
    """Double-ascent elements of a signed word padded with -(m+1), m+1."""
    m = len(word)
    out = []
    for i, x in enumerate(word):
        prev = word[i - 1] if i > 0 else -(m + 1)
        nxt = word[i + 1] if i < m - 1 else m + 1
        if prev < x < nxt:
            out.append(x)
    return out


def _require_family(w, family: str, name: str):
    if not is_member(w, family):
        signed = family.startswith("rsii") or family.startswith("adii")
        k = _simsun_levels_ok(w, signed=signed)
        raise MembershipError(f"{name}: input not in {family}", step=k)


# -- phi1: type-I Simsun -> forests --------------------------------------

def phi1(window, trace: bool = False):
    w = check_window(window)
    _require_family(w, "rsi", "phi1")
    n = len(w)
    b = _Builder()
    steps = []
    prev = ()
    for j in range(1, n + 1):
        sub = subword(w, j)
        p = next(i for i, x in enumerate(sub) if abs(x) == j)
        x = sub[p]
        m = len(sub)
        if j == 1 or p == m - 1:
            b.colors[j] = WHITE if x > 0 else BLACK
            b.root_child[j] = EMPTY
            steps.append(("i", "new-root", j))
        else:
            peaks, das = _type1_marks(prev)
            prev_abs = abs(sub[p - 1]) if p > 0 else 0
            nxt = sub[p + 1]
            if prev_abs < abs(nxt):
                y = nxt
                if y not in das:
                    raise MembershipError(f"phi1: {y} is not a double-ascent element", step=j)
                b.fill_empty_slot_of(abs(y), j)
                b.kids[j] = [EMPTY, EMPTY] if x > 0 else None
                steps.append(("ii", "fill-intermediate", abs(y)))
            else:
                y = sub[p - 1]
                if y not in peaks:
                    raise MembershipError(f"phi1: {y} is not a peak", step=j)
                v = abs(y)
                if y > 0:
                    if b.kids.get(v) != [EMPTY, EMPTY]:
                        raise MembershipError(f"phi1: node {v} should have two empty leaves", step=j)
                    b.kids[v][1] = j
                else:
                    if b.kids.get(v, 0) is not None:
                        raise MembershipError(f"phi1: node {v} should be a labelled leaf", step=j)
                    b.kids[v] = [j, EMPTY]
                b.kids[j] = [EMPTY, EMPTY] if x > 0 else None
                steps.append(("iii", "attach-at-peak", y))
        if CHECK_INVARIANTS:
            peaks, das = _type1_marks(sub)
            terminal = [v for v in list(b.colors) + list(b.kids)
                        if b.node_status(v) == "terminal"]
            inter = [v for v in list(b.colors) + list(b.kids)
                     if b.node_status(v) == "intermediate"]
            assert sorted(abs(y) for y in peaks) == sorted(terminal)
            assert sorted(abs(y) for y in das) == sorted(inter)
        prev = sub
    forest = b.to_forest()
    return (forest, steps) if trace else forest


def phi1_inv(forest, trace: bool = False):
    validate_forest(forest)
    b = _Builder.from_forest(forest)
    n = len(b.colors) + len(b.kids)
    signs = _b1_signs(b, n)
    records = _peel(b, signs, n)
    word = [signs[1] * 1]
    steps = [("root", 1)]
    for j in range(2, n + 1):
        rec = records[j]
        if rec[0] == "root":
            word.append(signs[j] * j)
            steps.append(("root", j))
        else:
            _, v, status = rec
            pos = word.index(signs[v] * v)
            if status == "intermediate":
                word.insert(pos, signs[j] * j)
                steps.append(("left-of", v))
            else:
                word.insert(pos + 1, signs[j] * j)
                steps.append(("right-of", v))
    out = tuple(word)
    return (out, steps) if trace else out


def _peel(b: _Builder, signs: dict, n: int) -> dict:
    """Remove labels n..2, recording for each how to replay it."""
    records = {}
    for j in range(n, 1, -1):
        if j in b.colors:
            del b.colors[j]
            del b.root_child[j]
            records[j] = ("root",)
            continue
        loc = b.parent_of(j)
        if loc is None:
            raise MembershipError(f"node {j} is unreachable")
        del b.kids[j]
        if loc[0] == "root":
            v = loc[1]
            b.root_child[v] = EMPTY
        else:
            _, v, slot = loc
            b.kids[v][slot] = EMPTY
            if signs[v] == -1 and b.kids[v] == [EMPTY, EMPTY]:
                b.kids[v] = None
        status = b.node_status(v)
        if status == "plain":
            raise MembershipError(f"parent {v} of {j} has no empty slot after peeling")
        records[j] = ("child", v, status)
    if list(b.colors) != [1] or b.root_child[1] != EMPTY:
        raise MembershipError("peeling did not terminate at a single root 1")
    return records


# -- phi2: type-II Simsun -> forests -------------------------------------

def phi2(window, trace: bool = False):
    w = check_window(window)
    _require_family(w, "rsii", "phi2")
    n = len(w)
    b = _Builder()
    steps = []
    prev = ()
    for j in range(1, n + 1):
        sub = subword(w, j)
        p = next(i for i, x in enumerate(sub) if abs(x) == j)
        x = sub[p]
        m = len(sub)
        if j == 1 or (p == m - 1 and x > 0) or (p == 0 and x < 0):
            b.colors[j] = WHITE if x > 0 else BLACK
            b.root_child[j] = EMPTY
            steps.append(("i", "new-root", j))
        else:
            y = sub[p - 1] if p > 0 else -(j + 1)
            z = sub[p + 1] if p < m - 1 else j + 1
            if y < z:
                das = _type2_das(prev)
                target = y if x < 0 else z
                if target not in das:
                    raise MembershipError(f"phi2: {target} is not a double-ascent element", step=j)
                rank = das.index(target)
                slots = b.singular_slots()
                if rank >= len(slots):
                    raise MembershipError("phi2: singular leaf rank out of range", step=j)
                b.fill_slot(slots[rank], j)
                b.kids[j] = [EMPTY, EMPTY] if x > 0 else None
                steps.append(("ii", "fill-singular", rank + 1))
            else:
                if abs(y) < abs(z):
                    if not z < 0:
                        raise MembershipError("phi2: heavy bottom must be negative", step=j)
                    v = abs(z)
                    if b.kids.get(v, 0) is not None:
                        raise MembershipError(f"phi2: node {v} should be a labelled leaf", step=j)
                    b.kids[v] = [j, EMPTY]
                    steps.append(("iii", "under-heavy-bottom", z))
                else:
                    if not y > 0:
                        raise MembershipError("phi2: heavy top must be positive", step=j)
                    if b.kids.get(y) != [EMPTY, EMPTY]:
                        raise MembershipError(f"phi2: node {y} should have two empty leaves", step=j)
                    b.kids[y][1] = j
                    steps.append(("iii", "under-heavy-top", y))
                b.kids[j] = [EMPTY, EMPTY] if x > 0 else None
        if CHECK_INVARIANTS:
            das = _type2_das(sub)
            heavies = [max(sub[i], sub[i + 1], key=abs)
                       for i in range(len(sub) - 1) if sub[i] > sub[i + 1]]
            terminal = [v for v in list(b.colors) + list(b.kids)
                        if b.node_status(v) == "terminal"]
            assert sorted(abs(h) for h in heavies) == sorted(terminal)
            assert len(das) == len(b.singular_slots())
        prev = sub
    forest = b.to_forest()
    return (forest, steps) if trace else forest


def phi2_inv(forest, trace: bool = False):
    validate_forest(forest)
    b = _Builder.from_forest(forest)
    n = len(b.colors) + len(b.kids)
    signs = _b1_signs(b, n)
    root_colors = dict(b.colors)
    records = _peel_type2(b, signs, n)
    word = [signs[1] * 1]
    steps = [("root", 1)]
    for j in range(2, n + 1):
        rec = records[j]
        if rec[0] == "root":
            if root_colors[j] == WHITE:
                word.append(j)
            else:
                word.insert(0, -j)
            steps.append(("root", j))
        elif rec[0] == "singular":
            rank = rec[1]
            das = _type2_das(word)
            if rank >= len(das):
                raise MembershipError("phi2_inv: double-ascent rank out of range", step=j)
            pos = word.index(das[rank])
            if signs[j] > 0:
                word.insert(pos, j)
            else:
                word.insert(pos + 1, -j)
            steps.append(("at-singular", rank + 1))
        else:
            _, v = rec
            pos = word.index(signs[v] * v)
            if signs[v] > 0:
                word.insert(pos + 1, signs[j] * j)
            else:
                word.insert(pos, signs[j] * j)
            steps.append(("at-terminal", v))
    out = tuple(word)
    return (out, steps) if trace else out


def _peel_type2(b: _Builder, signs: dict, n: int) -> dict:
    records = {}
    for j in range(n, 1, -1):
        if j in b.colors:
            del b.colors[j]
            del b.root_child[j]
            records[j] = ("root",)
            continue
        loc = b.parent_of(j)
        if loc is None:
            raise MembershipError(f"node {j} is unreachable")
        del b.kids[j]
        if loc[0] == "root":
            v = loc[1]
            b.root_child[v] = EMPTY
            slot = ("root", v)
        else:
            _, v, i = loc
            b.kids[v][i] = EMPTY
            if signs[v] == -1 and b.kids[v] == [EMPTY, EMPTY]:
                b.kids[v] = None
            slot = ("kid", v, i)
        status = b.node_status(v)
        if status == "terminal":
            records[j] = ("terminal", v)
        else:
            slots = b.singular_slots()
            if slot not in slots:
                raise MembershipError(f"vacated slot of {j} is not singular", step=j)
            records[j] = ("singular", slots.index(slot))
    if list(b.colors) != [1] or b.root_child[1] != EMPTY:
        raise MembershipError("peeling did not terminate at a single root 1")
    return records


# -- tree-valued variants -------------------------------------------------

def phi1_b(window):
    w = check_window(window)
    if not is_member(w, "rsi-b"):
        raise MembershipError("phi1_b: input not in rsi-b")
    return forest_to_tree(phi1(w))


def phi1_b_inv(tree):
    w = phi1_inv(tree_to_forest(tree))
    if not is_member(w, "rsi-b"):
        raise MembershipError("phi1_b_inv: tree is not a type-I B image")
    return w


def phi1_d(window):
    w = check_window(window)
    if not is_member(w, "rsi-d") or len(w) < 2:
        raise MembershipError("phi1_d: input not in rsi-d (size >= 2)")
    k = abs(w[-1])
    tree = phi1_b(shrink_last_entry(w))
    return _label_rightmost_leaf(_lift_labels(tree, k), k)


def phi1_d_inv(tree):
    validate_tree(tree)
    if not is_starred(tree):
        raise MembershipError("phi1_d_inv: rightmost leaf must be labelled")
    k = rmlab(tree)
    if k < 2:
        raise MembershipError("phi1_d_inv: rightmost label must be >= 2")
    return expand_last_entry(phi1_b_inv(_drop_labels(_unlabel_rightmost_leaf(tree, k), k)), k)


def phi2_b(window):
    w = check_window(window)
    if not is_member(w, "rsii-b"):
        raise MembershipError("phi2_b: input not in rsii-b")
    return forest_to_tree(phi2(w))


def phi2_b_inv(tree):
    w = phi2_inv(tree_to_forest(tree))
    if not is_member(w, "rsii-b"):
        raise MembershipError("phi2_b_inv: tree is not a type-II B image")
    return w


def phi2_d(window):
    w = check_window(window)
    if not is_member(w, "rsii-d") or len(w) < 2:
        raise MembershipError("phi2_d: input not in rsii-d (size >= 2)")
    k = abs(w[0])
    shrunk = shrink_first_entry(w)
    aug = augmenting_elements(shrunk)
    if not aug or aug[-1] >= k:
        raise MembershipError("phi2_d: shrunk window lacks a smaller augmenting anchor")
    tree = phi2_b(shrunk)
    return _label_rightmost_leaf(_lift_labels(tree, k), k)


def phi2_d_inv(tree):
    validate_tree(tree)
    if not is_starred(tree):
        raise MembershipError("phi2_d_inv: rightmost leaf must be labelled")
    k = rmlab(tree)
    if k < 2:
        raise MembershipError("phi2_d_inv: rightmost label must be >= 2")
    return expand_first_entry(phi2_b_inv(_drop_labels(_unlabel_rightmost_leaf(tree, k), k)), k)


def _lift_labels(tree, k: int):
    """Shift labels >= k up by one."""
    if tree == EMPTY:
        return tree
    v = tree[0] + 1 if tree[0] >= k else tree[0]
    if len(tree) == 1:
        return (v,)
    return (v, _lift_labels(tree[1], k), _lift_labels(tree[2], k))


def _drop_labels(tree, k: int):
    """Shift labels > k down by one (slot for k must already be gone)."""
    if tree == EMPTY:
        return tree
    v = tree[0] - 1 if tree[0] > k else tree[0]
    if len(tree) == 1:
        return (v,)
    return (v, _drop_labels(tree[1], k), _drop_labels(tree[2], k))


def _label_rightmost_leaf(tree, k: int):
    if len(tree) == 1:
        raise MembershipError("tree has no empty rightmost leaf")
    if tree[2] == EMPTY:
        return (tree[0], tree[1], (k,))
    return (tree[0], tree[1], _label_rightmost_leaf(tree[2], k))


def _unlabel_rightmost_leaf(tree, k: int):
    if len(tree) == 1:
        raise MembershipError("cannot unlabel a bare leaf")
    if len(tree[2]) == 1:
        if tree[2][0] != k:
            raise MembershipError(f"rightmost leaf is not {k}")
        return (tree[0], tree[1], EMPTY)
    return (tree[0], tree[1], _unlabel_rightmost_leaf(tree[2], k))


# -- zeta maps -------------------------------------------------------------

def _dec(v: int) -> int:
    return v - 1 if v > 0 else v + 1


def _inc(v: int) -> int:
    return v + 1 if v > 0 else v - 1


def _rl_min_positions(w) -> list[int]:
    out = []
    m = None
    for i in range(len(w) - 1, -1, -1):
        if m is None or abs(w[i]) < m:
            m = abs(w[i])
            out.append(i)
    return out[::-1]


def _aug_positions(w) -> list[int]:
    out = []
    suffix_min = None
    for i in range(len(w) - 1, -1, -1):
        if w[i] > 0 and (suffix_min is None or w[i] < suffix_min):
            out.append(i)
        a = abs(w[i])
        suffix_min = a if suffix_min is None else min(suffix_min, a)
    return out[::-1]


def zeta1(window) -> tuple[int, ...]:
    """Slide entries along right-to-left minima and drop the entry 1."""
    w = check_window(window)
    _require_family(w, "adi", "zeta1")
    if len(w) < 2:
        raise MembershipError("zeta1 needs size >= 2")
    mins = _rl_min_positions(w)
    if w[mins[0]] != 1 or mins[-1] != len(w) - 1:
        raise MembershipError("zeta1: minima structure violated")
    rank = {p: c for c, p in enumerate(mins)}
    out = []
    for p in range(len(w) - 1):
        src = w[mins[rank[p] + 1]] if p in rank else w[p]
        out.append(_dec(src))
    return tuple(out)


def zeta1_inv(window) -> tuple[int, ...]:
    w = check_window(window)
    _require_family(w, "rsi", "zeta1_inv")
    mins = _rl_min_positions(w)
    out = [_inc(v) for v in w] + [_inc(w[mins[-1]])]
    out[mins[0]] = 1
    for c in range(1, len(mins)):
        out[mins[c]] = _inc(w[mins[c - 1]])
    return tuple(out)


def zeta2(window) -> tuple[int, ...]:
    """Slide entries along augmenting positions and drop the entry 1.

    Only the structural prerequisites of the sliding formula are
    enforced (the entry 1 must be the least augmenting element and the
    window must close on an augmenting entry): the published worked
    example for this map sits outside the literal no-double-descent
    family, so full membership is left to the callers that need it.
    """
    w = check_window(window)
    if len(w) < 2:
        raise MembershipError("zeta2 needs size >= 2")
    aug = _aug_positions(w)
    if not aug or w[aug[0]] != 1:
        raise MembershipError("zeta2: the entry 1 must be augmenting")
    if len(aug) == 1:
        if w[-1] != 1:
            raise MembershipError("zeta2: single augmenting entry must close the window")
        return tuple(_dec(v) for v in w[:-1])
    if aug[-1] != len(w) - 1:
        raise MembershipError("zeta2: last entry must be augmenting")
    rank = {p: c for c, p in enumerate(aug)}
    out = []
    for p in range(len(w) - 1):
        src = w[aug[rank[p] + 1]] if p in rank else w[p]
        out.append(_dec(src))
    return tuple(out)


def zeta2_inv(window) -> tuple[int, ...]:
    w = check_window(window)
    aug = _aug_positions(w)
    if not aug:
        return tuple(_inc(v) for v in w) + (1,)
    out = [_inc(v) for v in w] + [w[aug[-1]] + 1]
    out[aug[0]] = 1
    for c in range(1, len(aug)):
        out[aug[c]] = w[aug[c - 1]] + 1
    return tuple(out)
