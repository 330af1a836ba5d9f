"""Signed permutations: statistics, family membership, enumeration.

A signed permutation of [n] is a bijection s of {-n..-1, 1..n} with
s(-i) = -s(i); it is handled throughout as its window (s(1), ..., s(n)),
a tuple of signed integers whose absolute values are a permutation of
1..n.

Families
--------
``snakes``            alternating windows s1 > s2 < s3 > ...
``gamma-snakes``      snakes with (-1)^n * s_n < 0
``rsi`` / ``rsii``    signed Simsun of type I / II: every restriction of
                      |s| (resp. of s) to values up to k is free of
                      double descents
``adi`` / ``adii``    as above plus "ends with an ascent" at every
                      restriction level, and the entry +1 present
``*-b`` / ``*-d``     refinements pinning the signs at right-to-left
                      (type I) or left-to-right (type II) minima
``alternating-unsigned``, ``simsun-unsigned``, ``andre-unsigned``
                      the classical all-positive versions

Restriction convention: subword(s, k) keeps the entries of absolute
value <= k in window order.
"""
from __future__ import annotations

import os

from .errors import LimitError

DEFAULT_PERM_CEILING = 8

FAMILY_TAGS = (
    "snakes", "gamma-snakes",
    "rsi", "rsi-b", "rsi-d",
    "rsii", "rsii-b", "rsii-d",
    "adi", "adi-b", "adi-d",
    "adii", "adii-b", "adii-d",
    "alternating-unsigned", "simsun-unsigned", "andre-unsigned",
)

Window = tuple


def check_window(window) -> tuple[int, ...]:
    """Validate and normalize a signed-permutation window."""
    w = tuple(int(x) for x in window)
    n = len(w)
    if n < 1:
        raise ValueError("window must be nonempty")
    if any(x == 0 for x in w):
        raise ValueError("window entries must be nonzero")
    if sorted(abs(x) for x in w) != list(range(1, n + 1)):
        raise ValueError("absolute values must be a permutation of 1..n")
    return w


def subword(window, k: int) -> tuple[int, ...]:
    """Entries of absolute value <= k, in window order."""
    w = check_window(window)
    if not 1 <= k <= len(w):
        raise ValueError(f"k={k} out of range 1..{len(w)}")
    return tuple(x for x in w if abs(x) <= k)


def is_beta_snake(window) -> bool:
    w = check_window(window)
    return _alternates(w)


def _alternates(w) -> bool:
    # s1 > s2 < s3 > s4 ... on signed values
    for i in range(len(w) - 1):
        if i % 2 == 0:
            if not w[i] > w[i + 1]:
                return False
        elif not w[i] < w[i + 1]:
            return False
    return True


def is_gamma_snake(window) -> bool:
    w = check_window(window)
    return _alternates(w) and (-1) ** len(w) * w[-1] < 0


def npk(window) -> int:
    """Negative entries followed by a smaller absolute value."""
    w = check_window(window)
    return sum(1 for i in range(len(w) - 1)
               if w[i] < 0 and abs(w[i]) > abs(w[i + 1]))


def nva(window) -> int:
    """Negative entries at the bottom of a heavy-bottom descent."""
    w = check_window(window)
    return sum(1 for i in range(1, len(w))
               if w[i] < 0 and w[i - 1] > w[i] and abs(w[i - 1]) < abs(w[i]))


def augmenting_elements(window) -> tuple[int, ...]:
    """Values k whose positive letter closes the restriction to 1..k.

    k is augmenting when the entry +k appears and every entry after it
    has absolute value greater than k.
    """
    w = check_window(window)
    n = len(w)
    out = []
    suffix_min = n + 1
    for x in reversed(w):
        if x > 0 and x < suffix_min:
            out.append(x)
        suffix_min = min(suffix_min, abs(x))
    return tuple(reversed(out))


def gae(window) -> int:
    """Greatest augmenting element; error when none exists."""
    aug = augmenting_elements(window)
    if not aug:
        raise ValueError("no augmenting element")
    return aug[-1]


def _gae_or_zero(w) -> int:
    aug = augmenting_elements(w)
    return aug[-1] if aug else 0


# -- building blocks for memberships ----------------------------------

def _has_double_descent(word) -> bool:
    return any(word[i] > word[i + 1] > word[i + 2] for i in range(len(word) - 2))


def _ends_ascent(word) -> bool:
    return len(word) < 2 or word[-2] < word[-1]


def _simsun_levels_ok(w, signed: bool) -> int | None:
    """First level 1..n whose restriction has a double descent, else None."""
    n = len(w)
    for k in range(1, n + 1):
        word = [x for x in w if abs(x) <= k]
        if not signed:
            word = [abs(x) for x in word]
        if _has_double_descent(word):
            return k
    return None


def _andre_levels_ok(w, signed: bool) -> bool:
    n = len(w)
    for k in range(1, n + 1):
        word = [x for x in w if abs(x) <= k]
        if not signed:
            word = [abs(x) for x in word]
        if _has_double_descent(word) or not _ends_ascent(word):
            return False
    return True


def _rl_min_positions(absvals) -> list[int]:
    out = []
    m = None
    for i in range(len(absvals) - 1, -1, -1):
        if m is None or absvals[i] < m:
            m = absvals[i]
            out.append(i)
    return out[::-1]


def _lr_min_positions(absvals) -> list[int]:
    out = []
    m = None
    for i, a in enumerate(absvals):
        if m is None or a < m:
            m = a
            out.append(i)
    return out


def _cond_b_type1(w) -> bool:
    # right-to-left minima of |w| must carry positive entries
    a = [abs(x) for x in w]
    return all(w[i] > 0 for i in _rl_min_positions(a))


def _cond_d_type1(w) -> bool:
    # last entry negative and heavier than its (signed) predecessor;
    # right-to-left minima of the first n-1 absolute values positive.
    n = len(w)
    if w[-1] >= 0:
        return False
    if n >= 2 and not abs(w[-1]) > w[-2]:
        return False
    a = [abs(x) for x in w[:-1]]
    return all(w[i] > 0 for i in _rl_min_positions(a))


def _cond_b_type2(w) -> bool:
    a = [abs(x) for x in w]
    return all(w[i] > 0 for i in _lr_min_positions(a))


def _cond_d_type2(w) -> bool:
    if w[0] >= 0 or abs(w[0]) <= _gae_or_zero(w):
        return False
    a = [abs(x) for x in w[1:]]
    return all(w[i + 1] > 0 for i in _lr_min_positions(a))


def _cond_d_adii(w) -> bool:
    if w[0] >= 0 or not abs(w[0]) > w[-1]:
        return False
    a = [abs(x) for x in w[1:]]
    return all(w[i + 1] > 0 for i in _lr_min_positions(a))


def shrink_last_entry(w) -> tuple[int, ...]:
    """Drop the last entry and close the value gap at its absolute value."""
    k = abs(w[-1])
    return tuple(x if abs(x) < k else (x - 1 if x > 0 else x + 1) for x in w[:-1])


def expand_last_entry(w, k: int) -> tuple[int, ...]:
    """Reopen the value gap at k and append -k (inverse of shrink_last_entry)."""
    return tuple(x if abs(x) < k else (x + 1 if x > 0 else x - 1) for x in w) + (-k,)


def shrink_first_entry(w) -> tuple[int, ...]:
    """Drop the first entry and close the value gap at its absolute value."""
    k = abs(w[0])
    return tuple(x if abs(x) < k else (x - 1 if x > 0 else x + 1) for x in w[1:])


def expand_first_entry(w, k: int) -> tuple[int, ...]:
    """Reopen the value gap at k and prepend -k (inverse of shrink_first_entry)."""
    return (-k,) + tuple(x if abs(x) < k else (x + 1 if x > 0 else x - 1) for x in w)


def is_member(window, family: str) -> bool:
    """Membership test for any of the FAMILY_TAGS families."""
    w = check_window(window)
    if family not in FAMILY_TAGS:
        raise ValueError(f"unknown family {family!r}")
    all_positive = all(x > 0 for x in w)
    if family == "snakes":
        return _alternates(w)
    if family == "gamma-snakes":
        return is_gamma_snake(w)
    if family == "alternating-unsigned":
        return all_positive and _alternates(w)
    if family == "simsun-unsigned":
        return all_positive and _simsun_levels_ok(w, signed=False) is None
    if family == "andre-unsigned":
        return all_positive and _andre_levels_ok(w, signed=False)
    if family.startswith("rsi-") or family == "rsi":
        if _simsun_levels_ok(w, signed=False) is not None:
            return False
        if family == "rsi-b":
            return _cond_b_type1(w)
        if family == "rsi-d":
            return _cond_d_type1(w)
        return True
    if family.startswith("rsii-") or family == "rsii":
        if _simsun_levels_ok(w, signed=True) is not None:
            return False
        if family == "rsii-b":
            return _cond_b_type2(w)
        if family == "rsii-d":
            return _cond_d_type2(w)
        return True
    if family.startswith("adi-") or family == "adi":
        if 1 not in w or not _andre_levels_ok(w, signed=False):
            return False
        if family == "adi-b":
            return _cond_b_type1(w)
        if family == "adi-d":
            # The suffix-minima reading over-admits here; the family is
            # the pullback of adi-b under the last-entry shrinking map,
            # which is what the index-shifting bijection requires.
            if len(w) < 2 or w[-1] >= 0 or not abs(w[-1]) > w[-2]:
                return False
            return is_member(shrink_last_entry(w), "adi-b")
        return True
    # adii family group
    if 1 not in w or not _andre_levels_ok(w, signed=True):
        return False
    if family == "adii-b":
        return _cond_b_type2(w)
    if family == "adii-d":
        return _cond_d_adii(w)
    return True


# -- enumeration -------------------------------------------------------

def _ceiling(max_n) -> int:
    if max_n is not None:
        return int(max_n)
    env = os.environ.get("SNAKE_ATLAS_MAX_N")
    return int(env) if env else DEFAULT_PERM_CEILING


def all_windows(n: int, *, max_n=None):
    """Every signed-permutation window of size n, lexicographic order."""
    ceiling = _ceiling(max_n)
    if n > ceiling:
        raise LimitError("signed-permutation enumeration", n, ceiling)
    out = []

    def extend(prefix, used):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(-n, n + 1):
            if v == 0 or abs(v) in used:
                continue
            prefix.append(v)
            used.add(abs(v))
            extend(prefix, used)
            used.discard(abs(v))
            prefix.pop()

    extend([], set())
    return out


def _gen_positional(n, unsigned: bool):
    # alternation is a prefix property, so prune position by position
    out = []

    def extend(prefix, used):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        i = len(prefix)
        values = range(1, n + 1) if unsigned else range(-n, n + 1)
        for v in values:
            if v == 0 or abs(v) in used:
                continue
            if i >= 1:
                if i % 2 == 1 and not prefix[-1] > v:
                    continue
                if i % 2 == 0 and not prefix[-1] < v:
                    continue
            prefix.append(v)
            used.add(abs(v))
            extend(prefix, used)
            used.discard(abs(v))
            prefix.pop()

    extend([], set())
    return out


def _gen_by_insertion(n, *, signed_dd: bool, need_ascent: bool, force_positive: bool,
                      force_plus_one: bool):
    """Grow windows by inserting values 1..n into the restriction chain.

    Every window is reached exactly once (the chain of restrictions is
    unique), and the level-k restriction is final once built, so the
    no-double-descent and ends-with-ascent requirements prune exactly.
    """
    words = []
    for s in ((1,), (-1,)):
        if (force_positive or force_plus_one) and s[0] < 0:
            continue
        words.append(s)
    for v in range(2, n + 1):
        nxt = []
        signs = (v,) if force_positive else (v, -v)
        for word in words:
            view = word if signed_dd else tuple(abs(x) for x in word)
            for pos in range(len(word) + 1):
                for sv in signs:
                    # double-descent check is local to the insertion point
                    if _insertion_ok(view, pos, sv if signed_dd else abs(sv),
                                     need_ascent):
                        nxt.append(word[:pos] + (sv,) + word[pos:])
        words = nxt
    return words


def _insertion_ok(view, pos, val, need_ascent) -> bool:
    new = view[:pos] + (val,) + view[pos:]
    lo = max(0, pos - 2)
    hi = min(len(new), pos + 3)
    if any(new[i] > new[i + 1] > new[i + 2] for i in range(lo, hi - 2)):
        return False
    if need_ascent and len(new) >= 2 and not new[-2] < new[-1]:
        return False
    return True


_INSERTION_FAMILIES = {
    "rsi": dict(signed_dd=False, need_ascent=False, force_positive=False, force_plus_one=False),
    "rsii": dict(signed_dd=True, need_ascent=False, force_positive=False, force_plus_one=False),
    "adi": dict(signed_dd=False, need_ascent=True, force_positive=False, force_plus_one=True),
    "adii": dict(signed_dd=True, need_ascent=True, force_positive=False, force_plus_one=True),
    "simsun-unsigned": dict(signed_dd=False, need_ascent=False, force_positive=True, force_plus_one=False),
    "andre-unsigned": dict(signed_dd=False, need_ascent=True, force_positive=True, force_plus_one=False),
}


def enumerate_family(family: str, n: int, constraint=None, *, max_n=None):
    """All members of a family at size n, in lexicographic window order.

    ``constraint`` is an optional (anchor, value) pair with anchor one
    of "first", "last", "gae", filtering on the first entry, last
    entry, or greatest augmenting element.
    """
    if family not in FAMILY_TAGS:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    ceiling = _ceiling(max_n)
    if n > ceiling:
        raise LimitError(f"family {family!r} enumeration", n, ceiling)

    if family in ("snakes", "gamma-snakes"):
        raw = _gen_positional(n, unsigned=False)
    elif family == "alternating-unsigned":
        raw = _gen_positional(n, unsigned=True)
    else:
        base = family.split("-")[0] if family in (
            "rsi-b", "rsi-d", "rsii-b", "rsii-d", "adi-b", "adi-d",
            "adii-b", "adii-d") else family
        raw = _gen_by_insertion(n, **_INSERTION_FAMILIES[base])

    members = [w for w in raw if is_member(w, family)]
    if constraint is not None:
        anchor, value = constraint
        if anchor == "first":
            members = [w for w in members if w[0] == value]
        elif anchor == "last":
            members = [w for w in members if w[-1] == value]
        elif anchor == "gae":
            members = [w for w in members if _gae_or_zero(w) == value]
        else:
            raise ValueError(f"unknown anchor {anchor!r}")
    return sorted(members)
