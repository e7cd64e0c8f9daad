# generated by python -m tests.oracles; do not edit by hand
HOMOLOGY = {
    ((2, 2), (1, 1), -1): (0, {}),
    ((2, 2), (1, 1), 0): (1, {((1, 1), (1, 1)): 1}),
    ((2, 2), (1, 1), 1): (0, {}),
    ((3, 2), (1, 1), -1): (0, {}),
    ((3, 2), (1, 1), 0): (0, {}),
    ((3, 2), (1, 1), 1): (1, {((1, 1, 1), (2,)): 1}),
    ((3, 3), (1, 1), -1): (0, {}),
    ((3, 3), (1, 1), 0): (0, {}),
    ((3, 3), (1, 1), 1): (4, {((2, 1), (1, 1, 1)): 1, ((1, 1, 1), (2, 1)): 1}),
    ((3, 3), (1, 1), 2): (0, {}),
    ((4, 2), (1, 1), -1): (0, {}),
    ((4, 2), (1, 1), 0): (0, {}),
    ((4, 2), (1, 1), 1): (5, {((2, 2), (1, 1)): 1, ((2, 1, 1), (2,)): 1}),
    ((4, 3), (1, 1), -1): (0, {}),
    ((4, 3), (1, 1), 0): (0, {}),
    ((4, 3), (1, 1), 1): (2, {((2, 2), (1, 1, 1)): 1}),
    ((4, 3), (1, 1), 2): (1, {((1, 1, 1, 1), (3,)): 1}),
    ((4, 4), (1, 1), -1): (0, {}),
    ((4, 4), (1, 1), 0): (0, {}),
    ((4, 4), (1, 1), 1): (0, {}),
    ((4, 4), (1, 1), 2): (15, {((3, 1), (1, 1, 1, 1)): 1, ((2, 1, 1), (2, 1, 1)): 1, ((1, 1, 1, 1), (3, 1)): 1}),
    ((4, 4), (1, 1), 3): (0, {}),
    ((3,), (1,), -1): (0, {}),
    ((3,), (1,), 0): (0, {}),
    ((3,), (1,), 1): (0, {}),
    ((3,), (1,), 2): (0, {}),
    ((4,), (2,), -1): (0, {}),
    ((4,), (2,), 0): (2, {((2, 2),): 1}),
    ((4,), (2,), 1): (0, {}),
    ((5,), (2,), -1): (0, {}),
    ((5,), (2,), 0): (0, {}),
    ((5,), (2,), 1): (6, {((3, 1, 1),): 1}),
    ((3, 3), (2, 1), -1): (0, {}),
    ((3, 3), (2, 1), 0): (8, {((3,), (2, 1)): 1, ((2, 1), (3,)): 1, ((2, 1), (2, 1)): 1}),
    ((4, 3), (2, 1), -1): (0, {}),
    ((4, 3), (2, 1), 0): (2, {((2, 2), (3,)): 1}),
    ((4, 3), (2, 1), 1): (3, {((4,), (1, 1, 1)): 1, ((2, 2), (1, 1, 1)): 1}),
    ((2, 2, 2), (1, 1, 1), -1): (0, {}),
    ((2, 2, 2), (1, 1, 1), 0): (3, {((2,), (1, 1), (1, 1)): 1, ((1, 1), (2,), (1, 1)): 1, ((1, 1), (1, 1), (2,)): 1}),
    ((2, 2, 2), (1, 1, 1), 1): (0, {}),
    ((3, 2, 2), (1, 1, 1), -1): (0, {}),
    ((3, 2, 2), (1, 1, 1), 0): (1, {((3,), (1, 1), (1, 1)): 1}),
    ((3, 2, 2), (1, 1, 1), 1): (2, {((1, 1, 1), (2,), (2,)): 1, ((1, 1, 1), (1, 1), (1, 1)): 1}),
}
SYM_SYM = {
    (2, 2): {(2, 2): 1, (4,): 1},
    (3, 2): {(2, 2, 2): 1, (4, 2): 1, (6,): 1},
    (2, 3): {(4, 2): 1, (6,): 1},
    (3, 3): {(5, 2, 2): 1, (4, 4, 1): 1, (6, 3): 1, (7, 2): 1, (9,): 1},
    (4, 2): {(2, 2, 2, 2): 1, (4, 2, 2): 1, (4, 4): 1, (6, 2): 1, (8,): 1},
    (2, 4): {(4, 4): 1, (6, 2): 1, (8,): 1},
}
WEDGE_SYM = {
    (2, 2): {(3, 1): 1},
    (2, 3): {(3, 3): 1, (5, 1): 1},
    (3, 2): {(3, 3): 1, (4, 1, 1): 1},
    (3, 3): {(3, 3, 3): 1, (5, 3, 1): 1, (6, 3): 1, (7, 1, 1): 1},
    (2, 4): {(5, 3): 1, (7, 1): 1},
    (4, 2): {(4, 3, 1): 1, (5, 1, 1, 1): 1},
}
WEDGE_TENSOR_2 = {
    1: {((1,), (1,)): 1},
    2: {((2,), (1, 1)): 1, ((1, 1), (2,)): 1},
    3: {((3,), (1, 1, 1)): 1, ((2, 1), (2, 1)): 1, ((1, 1, 1), (3,)): 1},
    4: {((4,), (1, 1, 1, 1)): 1, ((3, 1), (2, 1, 1)): 1, ((2, 2), (2, 2)): 1, ((2, 1, 1), (3, 1)): 1, ((1, 1, 1, 1), (4,)): 1},
}
KOSTKA = {
    ((2, 1), (1, 1, 1)): 2,
    ((3, 2), (2, 2, 1)): 2,
    ((3, 1, 1), (1, 1, 1, 1, 1)): 6,
    ((2, 2), (2, 1, 1)): 1,
    ((4, 2), (2, 2, 2)): 3,
}
CHARACTER_TABLE_4 = {
    (4,): {(4,): 1, (3, 1): 1, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1},
    (3, 1): {(4,): -1, (3, 1): 0, (2, 2): -1, (2, 1, 1): 1, (1, 1, 1, 1): 3},
    (2, 2): {(4,): 0, (3, 1): -1, (2, 2): 2, (2, 1, 1): 0, (1, 1, 1, 1): 2},
    (2, 1, 1): {(4,): 1, (3, 1): 0, (2, 2): -1, (2, 1, 1): -1, (1, 1, 1, 1): 3},
    (1, 1, 1, 1): {(4,): -1, (3, 1): 1, (2, 2): 1, (2, 1, 1): -1, (1, 1, 1, 1): 1},
}
