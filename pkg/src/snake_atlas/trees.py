"""Complete increasing binary trees with empty leaves.

A tree with n labelled nodes carries the labels 1..n exactly once,
increasing from the root down; every labelled node has either no
children or exactly two, and a childless slot is an *empty leaf*.

Representation: an empty leaf is the string ``"e"``; a labelled leaf is
the 1-tuple ``(k,)``; an internal node is ``(k, left, right)``.  Tuples
make trees hashable, and the inorder word (labels and ``"e"`` read left
to right) is a faithful serialization: the root is the minimum label,
so the tree can be rebuilt by splitting the word at it.

The set of size-n trees splits by whether the rightmost leaf is
labelled (star class) or empty (circ class), and is graded by the last
labelled node on the rightmost path (``rmlab``).  Three label-shifting
maps move between adjacent grades; together with the initial classes
they replay the signed boustrophedon recurrence, and the snake
correspondence (``tree_to_snake``) transports the grading to first
entries of snakes.
"""
from __future__ import annotations

import os

from .errors import LimitError, MembershipError

EMPTY = "e"
DEFAULT_TREE_CEILING = 9


def is_empty(x) -> bool:
    return x == EMPTY


def label(node) -> int:
    return node[0]


def is_leaf(node) -> bool:
    return len(node) == 1


def tree_size(tree) -> int:
    if is_empty(tree):
        return 0
    if is_leaf(tree):
        return 1
    return 1 + tree_size(tree[1]) + tree_size(tree[2])


def validate_tree(tree, n: int | None = None) -> int:
    """Check completeness, label coverage and the increasing property."""
    labels = []

    def walk(node, lo):
        if is_empty(node):
            return
        if not isinstance(node, tuple) or len(node) not in (1, 3):
            raise ValueError(f"malformed node {node!r}")
        k = node[0]
        if not isinstance(k, int) or k <= lo:
            raise ValueError(f"labels must increase from the root (saw {k} under {lo})")
        labels.append(k)
        if len(node) == 3:
            walk(node[1], k)
            walk(node[2], k)

    walk(tree, 0)
    size = len(labels)
    if sorted(labels) != list(range(1, size + 1)):
        raise ValueError("labels must be exactly 1..n")
    if n is not None and size != n:
        raise ValueError(f"expected {n} labels, found {size}")
    if size == 0:
        raise ValueError("tree must have at least one labelled node")
    return size


def emp(tree) -> int:
    """Number of empty leaves."""
    if is_empty(tree):
        return 1
    if is_leaf(tree):
        return 0
    return emp(tree[1]) + emp(tree[2])


def rightmost_path(tree) -> list:
    path = [tree]
    while not is_empty(path[-1]) and not is_leaf(path[-1]):
        path.append(path[-1][2])
    return path


def is_starred(tree) -> bool:
    """True when the rightmost leaf is labelled."""
    return not is_empty(rightmost_path(tree)[-1])


def rmlab(tree) -> int:
    """Label of the last labelled node on the rightmost path."""
    path = rightmost_path(tree)
    return label(path[-1]) if not is_empty(path[-1]) else label(path[-2])


def tree_class(tree) -> tuple[bool, int]:
    return is_starred(tree), rmlab(tree)


def in_left_class(tree) -> bool:
    """True when the leftmost leaf is empty."""
    node = tree
    while not is_empty(node) and not is_leaf(node):
        node = node[1]
    return is_empty(node)


def flip(tree):
    """Mirror the tree horizontally."""
    if is_empty(tree) or is_leaf(tree):
        return tree
    return (tree[0], flip(tree[2]), flip(tree[1]))


# -- inorder-word serialization ----------------------------------------

def inorder_word(tree) -> tuple:
    out = []

    def walk(node):
        if is_empty(node):
            out.append(EMPTY)
        elif is_leaf(node):
            out.append(node[0])
        else:
            walk(node[1])
            out.append(node[0])
            walk(node[2])

    walk(tree)
    return tuple(out)


def tree_from_word(word):
    """Rebuild a tree from its inorder word (root = minimum label)."""
    word = tuple(word)

    def build(seg):
        if len(seg) == 1 and seg[0] == EMPTY:
            return EMPTY
        labels = [(x, i) for i, x in enumerate(seg) if x != EMPTY]
        if not labels:
            raise ValueError("word segment without a label")
        k, i = min(labels)
        left, right = seg[:i], seg[i + 1:]
        if not left and not right:
            return (k,)
        if not left or not right:
            raise ValueError("labelled node must have zero or two children")
        return (k, build(left), build(right))

    tree = build(word)
    validate_tree(tree)
    return tree


def word_sort_key(word) -> tuple:
    return tuple(0 if x == EMPTY else x for x in word)


# -- mutable node-map form (used by the structural maps) ----------------

def tree_nodes(tree):
    """Return (root_label, nodes) with nodes[k] = None | [left, right],
    child slots holding EMPTY or a label."""
    nodes = {}

    def walk(node):
        if is_leaf(node):
            nodes[node[0]] = None
            return node[0]
        nodes[node[0]] = [walk_child(node[1]), walk_child(node[2])]
        return node[0]

    def walk_child(c):
        return EMPTY if is_empty(c) else walk(c)

    return walk(tree), nodes


def nodes_to_tree(root: int, nodes: dict):
    def build(k):
        kids = nodes[k]
        if kids is None:
            return (k,)
        l, r = kids
        return (k, EMPTY if l == EMPTY else build(l), EMPTY if r == EMPTY else build(r))

    return build(root)


def _parents(nodes: dict) -> dict:
    par = {}
    for k, kids in nodes.items():
        if kids:
            for c in kids:
                if c != EMPTY:
                    par[c] = k
    return par


def _relabel(tree, mapping):
    if is_empty(tree):
        return tree
    if is_leaf(tree):
        return (mapping.get(tree[0], tree[0]),)
    return (mapping.get(tree[0], tree[0]), _relabel(tree[1], mapping),
            _relabel(tree[2], mapping))


def _labels(tree) -> list[int]:
    if is_empty(tree):
        return []
    if is_leaf(tree):
        return [tree[0]]
    return [tree[0]] + _labels(tree[1]) + _labels(tree[2])


def _shift_labels(tree, from_label: int, delta: int):
    return _relabel(tree, {k: k + delta for k in _labels(tree) if k >= from_label})


# -- enumeration --------------------------------------------------------

def _ceiling(max_n) -> int:
    if max_n is not None:
        return int(max_n)
    env = os.environ.get("SNAKE_ATLAS_MAX_N")
    return int(env) if env else DEFAULT_TREE_CEILING


def _trees_over(labels: tuple):
    """All complete increasing trees on a fixed label set ("e" if empty)."""
    if not labels:
        yield EMPTY
        return
    root, rest = labels[0], labels[1:]
    if not rest:
        yield (root,)
    m = len(rest)
    for mask in range(1 << m):
        left = tuple(rest[i] for i in range(m) if mask >> i & 1)
        right = tuple(rest[i] for i in range(m) if not mask >> i & 1)
        for lt in _trees_over(left):
            for rt in _trees_over(right):
                yield (root, lt, rt)


def enumerate_trees(n: int, *, starred: bool | None = None,
                    rightmost: int | None = None, max_n=None) -> list:
    """All size-n trees in canonical (inorder-word) order, optionally
    filtered by class and rightmost label."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ceiling = _ceiling(max_n)
    if n > ceiling:
        raise LimitError("tree enumeration", n, ceiling)
    out = []
    for t in _trees_over(tuple(range(1, n + 1))):
        if starred is not None and is_starred(t) != starred:
            continue
        if rightmost is not None and rmlab(t) != rightmost:
            continue
        out.append(t)
    out.sort(key=lambda t: word_sort_key(inorder_word(t)))
    return out


# -- the three grade-shifting maps --------------------------------------

def psi_star(tree):
    """Map a star-class tree down one grade.

    Returns (tree, case): case "a" swaps the labels k-1, k and stays in
    the star class with the same number of empty leaves; case "b"
    erases the rightmost leaf (one more empty leaf, one fewer label)
    and lands in the circ class.
    """
    if not is_starred(tree):
        raise MembershipError("psi_star needs a tree whose rightmost leaf is labelled")
    k = rmlab(tree)
    if k < 2:
        raise MembershipError("psi_star is undefined at rightmost label 1")
    root, nodes = tree_nodes(tree)
    par = _parents(nodes)
    if par.get(k) != k - 1:
        return _relabel(tree, {k: k - 1, k - 1: k}), "a"
    kids = nodes[k - 1]
    kids[kids.index(k)] = EMPTY
    del nodes[k]
    out = nodes_to_tree(root, nodes)
    return _shift_labels(out, k + 1, -1), "b"


def psi_star_inv(tree):
    if is_starred(tree):
        k = rmlab(tree) + 1
        if k > tree_size(tree):
            raise MembershipError("no room to swap the rightmost label up")
        return _relabel(tree, {k: k - 1, k - 1: k}), "a"
    k = rmlab(tree) + 1
    lifted = _shift_labels(tree, k, 1)
    root, nodes = tree_nodes(lifted)
    v = rmlab(lifted)  # = k - 1 after the lift
    kids = nodes[v]
    if kids is None or kids[1] != EMPTY:
        raise MembershipError("circ-class tree must end in an empty right slot")
    kids[1] = k
    nodes[k] = None
    return nodes_to_tree(root, nodes), "b"


def psi_circ(tree):
    """Map a circ-class tree up one grade.

    Case "a" swaps the labels k, k+1; case "b-leaf" deletes the leaf
    k+1 hanging under k (one fewer empty leaf and label, star class);
    case "b-branch" rotates the subtrees of k+1 onto the rightmost
    path, staying in the circ class.
    """
    if is_starred(tree):
        raise MembershipError("psi_circ needs a tree whose rightmost leaf is empty")
    n = tree_size(tree)
    k = rmlab(tree)
    if k >= n:
        raise MembershipError("psi_circ is undefined at rightmost label n")
    root, nodes = tree_nodes(tree)
    par = _parents(nodes)
    if par.get(k + 1) != k:
        return _relabel(tree, {k: k + 1, k + 1: k}), "a"
    if nodes[k + 1] is None:
        # leaf under k: drop it and close the label gap
        del nodes[k + 1]
        nodes[k] = None
        out = nodes_to_tree(root, nodes)
        return _shift_labels(out, k + 2, -1), "b-leaf"
    t1, t2 = nodes[k + 1]
    nodes[k] = [t1, k + 1]
    nodes[k + 1] = [t2, EMPTY]
    return nodes_to_tree(root, nodes), "b-branch"


def psi_circ_inv(tree):
    if is_starred(tree):
        # undo "b-leaf"
        k = rmlab(tree)
        lifted = _shift_labels(tree, k + 1, 1)
        root, nodes = tree_nodes(lifted)
        if nodes[k] is not None:
            raise MembershipError("star-class preimage must end in a labelled leaf")
        nodes[k] = [k + 1, EMPTY]
        nodes[k + 1] = None
        return nodes_to_tree(root, nodes), "b-leaf"
    j = rmlab(tree)
    if j < 2:
        raise MembershipError("psi_circ_inv is undefined at rightmost label 1")
    k = j - 1
    root, nodes = tree_nodes(tree)
    par = _parents(nodes)
    if par.get(j) != k:
        return _relabel(tree, {k: j, j: k}), "a"
    kids_v, kids_w = nodes[k], nodes[j]
    if kids_w is None or kids_w[1] != EMPTY or kids_v is None or kids_v[1] != j:
        raise MembershipError("unexpected shape for a b-branch image")
    a, b = kids_v[0], kids_w[0]
    nodes[j] = [a, b]
    nodes[k] = [j, EMPTY]
    return nodes_to_tree(root, nodes), "b-branch"


def psi_cap(tree):
    """Attach two empty leaves to the rightmost leaf of a top-grade
    star tree, moving it to the top-grade circ class."""
    n = tree_size(tree)
    if not is_starred(tree) or rmlab(tree) != n:
        raise MembershipError("psi_cap needs a star-class tree with rightmost label n")
    root, nodes = tree_nodes(tree)
    nodes[n] = [EMPTY, EMPTY]
    return nodes_to_tree(root, nodes)


def psi_cap_inv(tree):
    n = tree_size(tree)
    if is_starred(tree) or rmlab(tree) != n:
        raise MembershipError("psi_cap_inv needs a circ-class tree with rightmost label n")
    root, nodes = tree_nodes(tree)
    if nodes[n] != [EMPTY, EMPTY]:
        raise MembershipError("top label must carry two empty leaves")
    nodes[n] = None
    return nodes_to_tree(root, nodes)


# -- snake correspondence ------------------------------------------------

def tree_to_snake(tree) -> tuple[int, ...]:
    """Read the inorder word and turn it into a snake window.

    Each label i becomes n-i+1 with sign (-1)^(j+1), j being the number
    of empty leaves read after it; the converted word is then reversed.
    """
    n = validate_tree(tree)
    word = inorder_word(tree)
    total_e = word.count(EMPTY)
    seen_e = 0
    out = []
    for x in word:
        if x == EMPTY:
            seen_e += 1
            continue
        after = total_e - seen_e
        sign = 1 if after % 2 == 1 else -1
        out.append(sign * (n - x + 1))
    return tuple(reversed(out))


def snake_to_tree(window):
    """Inverse of tree_to_snake; rejects windows that do not alternate."""
    from .permutations import check_window, is_beta_snake

    w = check_window(window)
    if not is_beta_snake(w):
        raise MembershipError("input window is not alternating")
    n = len(w)
    rev = tuple(reversed(w))
    labels = [n - abs(x) + 1 for x in rev]
    # parity of the number of empty leaves after each label
    parity = [(1 if x > 0 else 0) for x in rev]  # odd count <=> positive sign
    gaps = [0] * (n + 1)  # empty-leaf count before first label and after each
    for p in range(n - 1):
        gaps[p + 1] = parity[p] ^ parity[p + 1]
    gaps[n] = parity[n - 1]
    total_known = sum(gaps[1:])
    gaps[0] = (n + 1 - total_known) % 2
    word = [EMPTY] * gaps[0]
    for p in range(n):
        word.append(labels[p])
        word.extend([EMPTY] * gaps[p + 1])
    try:
        return tree_from_word(word)
    except ValueError as exc:
        raise MembershipError(f"window does not encode a tree: {exc}") from exc


# -- JSON ---------------------------------------------------------------

def tree_to_json(tree):
    if is_empty(tree):
        return "empty"
    if is_leaf(tree):
        return {"leaf": tree[0]}
    return {"label": tree[0], "left": tree_to_json(tree[1]),
            "right": tree_to_json(tree[2])}


def tree_to_word_json(tree) -> list:
    return list(inorder_word(tree))


def node_from_json(o):
    """Build a node from the nested JSON form without label validation."""
    if o == "empty":
        return EMPTY
    if not isinstance(o, dict):
        raise ValueError(f"bad tree node {o!r}")
    if "leaf" in o:
        return (int(o["leaf"]),)
    return (int(o["label"]), node_from_json(o["left"]), node_from_json(o["right"]))


def tree_from_json(obj):
    """Accept the nested form or the inorder-word array form."""
    if isinstance(obj, list):
        return tree_from_word(tuple(x if x == EMPTY else int(x) for x in obj))
    tree = node_from_json(obj)
    validate_tree(tree)
    return tree
