"""Increasing forests with colored unary roots.

A forest on 1..n is a set of components, each a root (colored black or
white) with exactly one child; below the root every labelled node has
zero or two children, labels increase downward, and childless slots are
empty leaves.  A component is the 3-tuple (color, root_label, child)
with the child in the tree encoding of :mod:`trees`; the forest is the
tuple of components sorted by root label, which is the canonical order.

Cutting a circ-class tree along its rightmost path yields exactly the
all-white forests, with the path nodes as roots (``tree_to_forest``).
"""
from __future__ import annotations

import os

from .errors import LimitError, MembershipError
from .trees import (EMPTY, emp, inorder_word, is_empty, is_leaf, is_starred,
                    node_from_json, tree_to_json, validate_tree, word_sort_key)

BLACK = "black"
WHITE = "white"
DEFAULT_FOREST_CEILING = 8


def validate_forest(forest) -> int:
    if not forest:
        raise ValueError("forest must have at least one component")
    labels = []
    roots = []
    for comp in forest:
        if len(comp) != 3 or comp[0] not in (BLACK, WHITE):
            raise ValueError(f"malformed component {comp!r}")
        color, root, child = comp
        roots.append(root)
        labels.append(root)
        if not is_empty(child):
            if child[0] <= root:
                raise ValueError("labels must increase below the root")
            labels.extend(_subtree_labels(child))
    if roots != sorted(roots):
        raise ValueError("components must be sorted by root label")
    n = len(labels)
    if sorted(labels) != list(range(1, n + 1)):
        raise ValueError("labels must be exactly 1..n")
    for comp in forest:
        if not is_empty(comp[2]):
            _check_shape(comp[2])
    return n


def _subtree_labels(node) -> list[int]:
    if is_leaf(node):
        return [node[0]]
    return ([node[0]] + ([] if is_empty(node[1]) else _subtree_labels(node[1]))
            + ([] if is_empty(node[2]) else _subtree_labels(node[2])))


def _check_shape(node):
    if is_leaf(node):
        return
    for c in (node[1], node[2]):
        if not is_empty(c):
            if c[0] <= node[0]:
                raise ValueError("labels must increase downward")
            _check_shape(c)


def forest_size(forest) -> int:
    return sum(1 + (0 if is_empty(c) else len(_subtree_labels(c)))
               for _, _, c in forest)


def emp_forest(forest) -> int:
    return sum(1 if is_empty(child) else emp(child) for _, _, child in forest)


def labelled_leaves(forest) -> int:
    def count(node):
        if is_empty(node):
            return 0
        if is_leaf(node):
            return 1
        return count(node[1]) + count(node[2])
    return sum(0 if is_empty(c) else count(c) for _, _, c in forest)


def is_all_white(forest) -> bool:
    return all(color == WHITE for color, _, _ in forest)


def last_root(forest) -> int:
    return forest[-1][1]


def arranged_components(forest) -> tuple:
    """Presentation order used by the type-II insertion algorithm:
    black components left in decreasing root order, then white ones in
    increasing root order."""
    black = [c for c in forest if c[0] == BLACK]
    white = [c for c in forest if c[0] == WHITE]
    return tuple(sorted(black, key=lambda c: -c[1]) + sorted(white, key=lambda c: c[1]))


# -- enumeration --------------------------------------------------------

def _ceiling(max_n) -> int:
    if max_n is not None:
        return int(max_n)
    env = os.environ.get("SNAKE_ATLAS_MAX_N")
    return int(env) if env else DEFAULT_FOREST_CEILING


def _partitions(values):
    """Set partitions of the value list; each block keeps sorted order."""
    if not values:
        yield []
        return
    first, rest = values[0], values[1:]
    for part in _partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def enumerate_forests(n: int, *, white_only: bool = False,
                      last: int | None = None, max_n=None) -> list:
    """All forests on 1..n (optionally all-white, optionally with a
    prescribed last-component root), canonically ordered."""
    from .trees import _trees_over

    if n < 1:
        raise ValueError("n must be >= 1")
    ceiling = _ceiling(max_n)
    if n > ceiling:
        raise LimitError("forest enumeration", n, ceiling)
    out = []
    colors = (WHITE,) if white_only else (BLACK, WHITE)

    def color_and_emit(blocks, idx, comps):
        if idx == len(blocks):
            forest = tuple(sorted(comps, key=lambda c: c[1]))
            if last is None or forest[-1][1] == last:
                out.append(forest)
            return
        root, child = blocks[idx]
        for color in colors:
            comps.append((color, root, child))
            color_and_emit(blocks, idx + 1, comps)
            comps.pop()

    for part in _partitions(list(range(1, n + 1))):
        shaped = []
        for block in part:
            root, rest = block[0], tuple(block[1:])
            shaped.append([(root, t) for t in _trees_over(rest)])
        def expand(i, blocks):
            if i == len(shaped):
                color_and_emit(blocks, 0, [])
                return
            for rc in shaped[i]:
                expand(i + 1, blocks + [rc])
        expand(0, [])
    out.sort(key=forest_sort_key)
    return out


def forest_sort_key(forest) -> tuple:
    return tuple((root, color == WHITE) + word_sort_key(
        (EMPTY,) if is_empty(child) else inorder_word(child))
        for color, root, child in forest)


# -- rightmost-path cut and its inverse ----------------------------------

def tree_to_forest(tree) -> tuple:
    """Cut a circ-class tree along its rightmost path; the path nodes
    become white roots, each keeping its left subtree as single child."""
    validate_tree(tree)
    if is_starred(tree):
        raise MembershipError("the rightmost leaf must be empty")
    comps = []
    node = tree
    while not is_empty(node):
        if is_leaf(node):
            raise MembershipError("rightmost path may not end at a labelled leaf")
        comps.append((WHITE, node[0], node[1]))
        node = node[2]
    return tuple(sorted(comps, key=lambda c: c[1]))


def forest_to_tree(forest):
    """Rebuild the circ-class tree whose rightmost-path cut is the
    given all-white forest."""
    validate_forest(forest)
    if not is_all_white(forest):
        raise MembershipError("only all-white forests correspond to trees")
    node = EMPTY
    for color, root, child in sorted(forest, key=lambda c: -c[1]):
        node = (root, child, node)
    return node


# -- JSON ---------------------------------------------------------------

def forest_to_json(forest) -> dict:
    return {"components": [
        {"color": color, "root": root,
         "child": "empty" if is_empty(child) else tree_to_json(child)}
        for color, root, child in forest]}


def forest_from_json(obj) -> tuple:
    comps = []
    for c in obj["components"]:
        child = c["child"]
        comps.append((c["color"], int(c["root"]),
                      EMPTY if child == "empty" else node_from_json(child)))
    forest = tuple(sorted(comps, key=lambda c: c[1]))
    validate_forest(forest)
    return forest
