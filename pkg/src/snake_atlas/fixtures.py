"""Reference data for the classical triangles, polynomial lists, and
worked bijection examples that the verification harness checks against.

Polynomials are written as {exponent: coefficient} dicts; q-polynomials
in t as {t_exponent: (q_coeff_0, q_coeff_1, ...)}.
"""
from __future__ import annotations

# Zigzag numbers E_n and the type-B/D analogues K(B_n), K(D_n), n = 1..8.
EULER = {1: 1, 2: 1, 3: 2, 4: 5, 5: 16, 6: 61, 7: 272, 8: 1385}
SPRINGER_B = {1: 1, 2: 3, 3: 11, 4: 57, 5: 361, 6: 2763, 7: 24611, 8: 250737}
SPRINGER_D = {1: 1, 2: 1, 3: 5, 4: 23, 5: 151, 6: 1141, 7: 10205, 8: 103823}

# Snake-count triangle v_{n,k}, rows n = 1..6 (k = -n..-1, 1..n).
ARNOLD_TRIANGLE = {
    1: {-1: 1, 1: 1},
    2: {-2: 0, -1: 1, 1: 1, 2: 2},
    3: {-3: 0, -2: 2, -1: 3, 1: 3, 2: 4, 3: 4},
    4: {-4: 0, -3: 4, -2: 8, -1: 11, 1: 11, 2: 14, 3: 16, 4: 16},
    5: {-5: 0, -4: 16, -3: 32, -2: 46, -1: 57,
        1: 57, 2: 68, 3: 76, 4: 80, 5: 80},
    6: {-6: 0, -5: 80, -4: 160, -3: 236, -2: 304, -1: 361,
        1: 361, 2: 418, 3: 464, 4: 496, 5: 512, 6: 512},
}

# Polynomial refinement V_{n,k}(t), rows n = 1..5.
V_TRIANGLE = {
    1: {1: {2: 1}, -1: {0: 1}},
    2: {1: {3: 1}, 2: {1: 1, 3: 1},
        -2: {}, -1: {1: 1}},
    3: {1: {2: 1, 4: 2}, 2: {2: 2, 4: 2}, 3: {2: 2, 4: 2},
        -3: {}, -2: {0: 1, 2: 1}, -1: {0: 1, 2: 2}},
    4: {1: {3: 5, 5: 6}, 2: {1: 1, 3: 7, 5: 6},
        3: {1: 2, 3: 8, 5: 6}, 4: {1: 2, 3: 8, 5: 6},
        -4: {}, -3: {1: 2, 3: 2}, -2: {1: 4, 3: 4}, -1: {1: 5, 3: 6}},
    5: {1: {2: 5, 4: 28, 6: 24}, 2: {2: 10, 4: 34, 6: 24},
        3: {2: 14, 4: 38, 6: 24}, 4: {2: 16, 4: 40, 6: 24},
        5: {2: 16, 4: 40, 6: 24},
        -5: {}, -4: {0: 2, 2: 8, 4: 6}, -3: {0: 4, 2: 16, 4: 12},
        -2: {0: 5, 2: 23, 4: 18}, -1: {0: 5, 2: 28, 4: 24}},
}

# Leftmost-path-restricted analogue, rows n = 1..5, same signed-column
# layout as V: positive k holds the circ part, negative k the star part.
GAMMA_POLY_TRIANGLE = {
    1: {1: {2: 1}, -1: {}},
    2: {1: {3: 1}, 2: {3: 1},
        -2: {}, -1: {1: 1}},
    3: {1: {4: 2}, 2: {2: 1, 4: 2}, 3: {2: 1, 4: 2},
        -3: {}, -2: {2: 1}, -1: {2: 2}},
    4: {1: {3: 2, 5: 6}, 2: {3: 4, 5: 6}, 3: {3: 5, 5: 6}, 4: {3: 5, 5: 6},
        -4: {}, -3: {1: 1, 3: 2}, -2: {1: 2, 3: 4}, -1: {1: 2, 3: 6}},
    5: {1: {4: 16, 6: 24}, 2: {2: 2, 4: 22, 6: 24}, 3: {2: 4, 4: 26, 6: 24},
        4: {2: 5, 4: 28, 6: 24}, 5: {2: 5, 4: 28, 6: 24},
        -5: {}, -4: {2: 5, 4: 6}, -3: {2: 10, 4: 12},
        -2: {2: 14, 4: 18}, -1: {2: 16, 4: 24}},
}

# Counting triangle for snakes whose last entry has sign (-1)^(n+1),
# rows n = 1..6.
GAMMA_TRIANGLE = {
    1: {-1: 0, 1: 1},
    2: {-2: 0, -1: 1, 1: 1, 2: 1},
    3: {-3: 0, -2: 1, -1: 2, 1: 2, 2: 3, 3: 3},
    4: {-4: 0, -3: 3, -2: 6, -1: 8, 1: 8, 2: 10, 3: 11, 4: 11},
    5: {-5: 0, -4: 11, -3: 22, -2: 32, -1: 40,
        1: 40, 2: 48, 3: 54, 4: 57, 5: 57},
    6: {-6: 0, -5: 57, -4: 114, -3: 168, -2: 216, -1: 256,
        1: 256, 2: 296, 3: 328, 4: 350, 5: 361, 6: 361},
}

# Derivative polynomials for tan (P), sec (Q) and sec^2 (R), n = 1..5.
P_LIST = {
    1: {0: 1, 2: 1},
    2: {1: 2, 3: 2},
    3: {0: 2, 2: 8, 4: 6},
    4: {1: 16, 3: 40, 5: 24},
    5: {0: 16, 2: 136, 4: 240, 6: 120},
}
Q_LIST = {
    1: {1: 1},
    2: {0: 1, 2: 2},
    3: {1: 5, 3: 6},
    4: {0: 5, 2: 28, 4: 24},
    5: {1: 61, 3: 180, 5: 120},
}
R_LIST = {
    1: {1: 2},
    2: {0: 2, 2: 6},
    3: {1: 16, 3: 24},
    4: {0: 16, 2: 120, 4: 120},
    5: {1: 272, 3: 960, 5: 720},
}

# q-analogues, n = 1..3.
P_Q_LIST = {
    1: {0: (1,), 2: (1,)},
    2: {1: (1, 1), 3: (1, 1)},
    3: {0: (1, 1), 2: (2, 3, 2, 1), 4: (1, 2, 2, 1)},
}
Q_Q_LIST = {
    1: {1: (1,)},
    2: {0: (1,), 2: (1, 1)},
    3: {1: (2, 2, 1), 3: (1, 2, 2, 1)},
}
R_Q_LIST = {
    1: {1: (1, 1)},
    2: {0: (1, 1), 2: (1, 2, 2, 1)},
    3: {1: (2, 5, 5, 3, 1), 3: (1, 3, 5, 6, 5, 3, 1)},
}

# Small family listings used as exact-set fixtures.
RSI_B_SETS = {
    1: {(1,)},
    2: {(1, 2), (2, 1), (-2, 1)},
    3: {(1, 2, 3), (1, 3, 2), (1, -3, 2), (2, 1, 3), (-2, 1, 3), (2, 3, 1),
        (-2, 3, 1), (2, -3, 1), (-2, -3, 1), (3, 1, 2), (-3, 1, 2)},
}
RSI_D_SETS = {
    1: {(-1,)},
    2: {(1, -2)},
    3: {(1, 2, -3), (2, 1, -3), (-2, 1, -3), (3, 1, -2), (-3, 1, -2)},
}
RSII_B_SETS = {
    1: {(1,)},
    2: {(1, 2), (1, -2), (2, 1)},
    3: {(1, 2, 3), (1, -2, 3), (1, 2, -3), (1, 3, 2), (1, -3, 2), (1, 3, -2),
        (1, -3, -2), (2, 1, 3), (2, 3, 1), (2, -3, 1), (3, 1, 2)},
}
RSII_D_SETS = {
    1: {(-1,)},
    2: {(-2, 1)},
    3: {(-2, 1, -3), (-2, 3, 1), (-3, 1, 2), (-3, 1, -2), (-3, 2, 1)},
}
ADI_B_SETS = {
    2: {(1, 2)},
    3: {(1, 2, 3), (3, 1, 2), (-3, 1, 2)},
    4: {(1, 2, 3, 4), (1, 4, 2, 3), (1, -4, 2, 3), (3, 1, 2, 4), (-3, 1, 2, 4),
        (3, 4, 1, 2), (-3, 4, 1, 2), (3, -4, 1, 2), (-3, -4, 1, 2),
        (4, 1, 2, 3), (-4, 1, 2, 3)},
}
ADI_D_SETS = {
    2: {(1, -2)},
    3: {(1, 2, -3)},
    4: {(1, 2, 3, -4), (3, 1, 2, -4), (-3, 1, 2, -4), (4, 1, 2, -3),
        (-4, 1, 2, -3)},
}
ADII_B_SETS = {
    2: {(1, 2)},
    3: {(1, 2, 3), (1, -3, 2), (3, 1, 2)},
    4: {(1, 2, 3, 4), (1, 2, -4, 3), (1, -3, 2, 4), (1, 4, 2, 3),
        (1, -4, 2, 3), (1, 4, -3, 2), (1, -4, -3, 2), (3, 1, 2, 4),
        (3, 4, 1, 2), (3, -4, 1, 2), (4, 1, 2, 3)},
}
ADII_D_SETS = {
    2: {(-2, 1)},
    3: {(-3, 1, 2)},
    4: {(-3, 1, -4, 2), (-3, 4, 1, 2), (-4, 1, 2, 3), (-4, 1, -3, 2),
        (-4, 3, 1, 2)},
}

# Worked examples for the two insertion bijections: the intermediate
# value-restricted subwords of the running examples.
TYPE1_EXAMPLE = (2, 8, -3, 4, -7, 1, -6, -5)
TYPE1_EXAMPLE_SUBWORDS = [
    (1,),
    (2, 1),
    (2, -3, 1),
    (2, -3, 4, 1),
    (2, -3, 4, 1, -5),
    (2, -3, 4, 1, -6, -5),
    (2, -3, 4, -7, 1, -6, -5),
    (2, 8, -3, 4, -7, 1, -6, -5),
]
TYPE2_EXAMPLE = (-7, 8, 3, 5, -4, -1, 2, -6)
TYPE2_EXAMPLE_SUBWORDS = [
    (-1,),
    (-1, 2),
    (3, -1, 2),
    (3, -4, -1, 2),
    (3, 5, -4, -1, 2),
    (3, 5, -4, -1, 2, -6),
    (-7, 3, 5, -4, -1, 2, -6),
    (-7, 8, 3, 5, -4, -1, 2, -6),
]

# Worked examples for the index-shifting bijections.
ZETA1_EXAMPLE = ((3, 6, 1, 2, 9, -4, -8, 5, -7), (2, 5, 1, -3, 8, 4, -7, -6))
ZETA2_EXAMPLE = ((4, -2, 1, 3, 8, 5, 9, -7, 6), (3, -1, 2, 4, 7, 5, 8, -6))

# Type-D shrinking example: size-6 window and its size-5 companion.
TYPE1_D_EXAMPLE = ((-4, 1, 5, -6, 2, -3), (-3, 1, 4, -5, 2))

# Attainable step-weight sequences from the weight examples.
TREE_WEIGHT_EXAMPLE = (0, 1, 1, 3, 2)     # some 5-node tree, total 7
FOREST_WEIGHT_EXAMPLE = (1, 1, 0, 0, 2, 4)  # some 6-node forest, total 8

# Worked snake/tree correspondences: inorder word -> snake window.
GAMMA_EXAMPLES = [
    ((5, 3, "e", 1, "e", 4, "e", 2, "e"), (4, -2, 5, -3, -1)),
    (("e", 1, 5, 4, "e", 2, 3), (-3, -4, 2, 1, 5)),
]
