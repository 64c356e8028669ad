"""Reference second-order-closure expansions of high moments.

Each entry maps a target multi-index to the exact integer-coefficient
expansion of its closed moment over first- and second-order moments,
as (coefficient, ((base-index, power), ...)) terms.  All entries were
verified against independent brute-force Gaussian-moment enumeration;
they double as tamper-evident fixtures for the validation suite.
"""

EXPANSIONS = {
    (3,): (
        (3, (((1,), 1), ((2,), 1))),
        (-2, (((1,), 3),)),
    ),
    (4,): (
        (-2, (((1,), 4),)),
        (3, (((2,), 2),)),
    ),
    (5,): (
        (15, (((1,), 1), ((2,), 2))),
        (-20, (((1,), 3), ((2,), 1))),
        (6, (((1,), 5),)),
    ),
    (6,): (
        (-30, (((1,), 4), ((2,), 1))),
        (16, (((1,), 6),)),
        (15, (((2,), 3),)),
    ),
    (7,): (
        (105, (((1,), 1), ((2,), 3))),
        (-210, (((1,), 3), ((2,), 2))),
        (126, (((1,), 5), ((2,), 1))),
        (-20, (((1,), 7),)),
    ),
    (8,): (
        (-420, (((1,), 4), ((2,), 2))),
        (448, (((1,), 6), ((2,), 1))),
        (-132, (((1,), 8),)),
        (105, (((2,), 4),)),
    ),
    (9,): (
        (945, (((1,), 1), ((2,), 4))),
        (-2520, (((1,), 3), ((2,), 3))),
        (2268, (((1,), 5), ((2,), 2))),
        (-720, (((1,), 7), ((2,), 1))),
        (28, (((1,), 9),)),
    ),
    (10,): (
        (-6300, (((1,), 4), ((2,), 3))),
        (10080, (((1,), 6), ((2,), 2))),
        (-5940, (((1,), 8), ((2,), 1))),
        (1216, (((1,), 10),)),
        (945, (((2,), 5),)),
    ),
    (1, 2,): (
        (2, (((0, 1), 1), ((1, 1), 1))),
        (-2, (((0, 1), 2), ((1, 0), 1))),
        (1, (((0, 2), 1), ((1, 0), 1))),
    ),
    (1, 3,): (
        (-2, (((0, 1), 3), ((1, 0), 1))),
        (3, (((0, 2), 1), ((1, 1), 1))),
    ),
    (1, 4,): (
        (12, (((0, 1), 1), ((0, 2), 1), ((1, 1), 1))),
        (-12, (((0, 1), 2), ((0, 2), 1), ((1, 0), 1))),
        (-8, (((0, 1), 3), ((1, 1), 1))),
        (6, (((0, 1), 4), ((1, 0), 1))),
        (3, (((0, 2), 2), ((1, 0), 1))),
    ),
    (1, 5,): (
        (-20, (((0, 1), 3), ((0, 2), 1), ((1, 0), 1))),
        (-10, (((0, 1), 4), ((1, 1), 1))),
        (16, (((0, 1), 5), ((1, 0), 1))),
        (15, (((0, 2), 2), ((1, 1), 1))),
    ),
    (1, 6,): (
        (90, (((0, 1), 1), ((0, 2), 2), ((1, 1), 1))),
        (-90, (((0, 1), 2), ((0, 2), 2), ((1, 0), 1))),
        (-120, (((0, 1), 3), ((0, 2), 1), ((1, 1), 1))),
        (90, (((0, 1), 4), ((0, 2), 1), ((1, 0), 1))),
        (36, (((0, 1), 5), ((1, 1), 1))),
        (-20, (((0, 1), 6), ((1, 0), 1))),
        (15, (((0, 2), 3), ((1, 0), 1))),
    ),
    (1, 7,): (
        (-210, (((0, 1), 3), ((0, 2), 2), ((1, 0), 1))),
        (-210, (((0, 1), 4), ((0, 2), 1), ((1, 1), 1))),
        (336, (((0, 1), 5), ((0, 2), 1), ((1, 0), 1))),
        (112, (((0, 1), 6), ((1, 1), 1))),
        (-132, (((0, 1), 7), ((1, 0), 1))),
        (105, (((0, 2), 3), ((1, 1), 1))),
    ),
    (1, 8,): (
        (840, (((0, 1), 1), ((0, 2), 3), ((1, 1), 1))),
        (-840, (((0, 1), 2), ((0, 2), 3), ((1, 0), 1))),
        (-1680, (((0, 1), 3), ((0, 2), 2), ((1, 1), 1))),
        (1260, (((0, 1), 4), ((0, 2), 2), ((1, 0), 1))),
        (1008, (((0, 1), 5), ((0, 2), 1), ((1, 1), 1))),
        (-560, (((0, 1), 6), ((0, 2), 1), ((1, 0), 1))),
        (-160, (((0, 1), 7), ((1, 1), 1))),
        (28, (((0, 1), 8), ((1, 0), 1))),
        (105, (((0, 2), 4), ((1, 0), 1))),
    ),
    (1, 9,): (
        (-2520, (((0, 1), 3), ((0, 2), 3), ((1, 0), 1))),
        (-3780, (((0, 1), 4), ((0, 2), 2), ((1, 1), 1))),
        (6048, (((0, 1), 5), ((0, 2), 2), ((1, 0), 1))),
        (4032, (((0, 1), 6), ((0, 2), 1), ((1, 1), 1))),
        (-4752, (((0, 1), 7), ((0, 2), 1), ((1, 0), 1))),
        (-1188, (((0, 1), 8), ((1, 1), 1))),
        (1216, (((0, 1), 9), ((1, 0), 1))),
        (945, (((0, 2), 4), ((1, 1), 1))),
    ),
    (1, 10,): (
        (9450, (((0, 1), 1), ((0, 2), 4), ((1, 1), 1))),
        (-9450, (((0, 1), 2), ((0, 2), 4), ((1, 0), 1))),
        (-25200, (((0, 1), 3), ((0, 2), 3), ((1, 1), 1))),
        (18900, (((0, 1), 4), ((0, 2), 3), ((1, 0), 1))),
        (22680, (((0, 1), 5), ((0, 2), 2), ((1, 1), 1))),
        (-12600, (((0, 1), 6), ((0, 2), 2), ((1, 0), 1))),
        (-7200, (((0, 1), 7), ((0, 2), 1), ((1, 1), 1))),
        (1260, (((0, 1), 8), ((0, 2), 1), ((1, 0), 1))),
        (280, (((0, 1), 9), ((1, 1), 1))),
        (936, (((0, 1), 10), ((1, 0), 1))),
        (945, (((0, 2), 5), ((1, 0), 1))),
    ),
    (1, 11,): (
        (-34650, (((0, 1), 3), ((0, 2), 4), ((1, 0), 1))),
        (-69300, (((0, 1), 4), ((0, 2), 3), ((1, 1), 1))),
        (110880, (((0, 1), 5), ((0, 2), 3), ((1, 0), 1))),
        (110880, (((0, 1), 6), ((0, 2), 2), ((1, 1), 1))),
        (-130680, (((0, 1), 7), ((0, 2), 2), ((1, 0), 1))),
        (-65340, (((0, 1), 8), ((0, 2), 1), ((1, 1), 1))),
        (66880, (((0, 1), 9), ((0, 2), 1), ((1, 0), 1))),
        (13376, (((0, 1), 10), ((1, 1), 1))),
        (-12440, (((0, 1), 11), ((1, 0), 1))),
        (10395, (((0, 2), 5), ((1, 1), 1))),
    ),
    (1, 12,): (
        (124740, (((0, 1), 1), ((0, 2), 5), ((1, 1), 1))),
        (-124740, (((0, 1), 2), ((0, 2), 5), ((1, 0), 1))),
        (-415800, (((0, 1), 3), ((0, 2), 4), ((1, 1), 1))),
        (311850, (((0, 1), 4), ((0, 2), 4), ((1, 0), 1))),
        (498960, (((0, 1), 5), ((0, 2), 3), ((1, 1), 1))),
        (-277200, (((0, 1), 6), ((0, 2), 3), ((1, 0), 1))),
        (-237600, (((0, 1), 7), ((0, 2), 2), ((1, 1), 1))),
        (41580, (((0, 1), 8), ((0, 2), 2), ((1, 0), 1))),
        (18480, (((0, 1), 9), ((0, 2), 1), ((1, 1), 1))),
        (61776, (((0, 1), 10), ((0, 2), 1), ((1, 0), 1))),
        (11232, (((0, 1), 11), ((1, 1), 1))),
        (-23672, (((0, 1), 12), ((1, 0), 1))),
        (10395, (((0, 2), 6), ((1, 0), 1))),
    ),
    (1, 1, 1,): (
        (-2, (((0, 0, 1), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (1, (((0, 0, 1), 1), ((1, 1, 0), 1))),
        (1, (((0, 1, 0), 1), ((1, 0, 1), 1))),
        (1, (((0, 1, 1), 1), ((1, 0, 0), 1))),
    ),
    (1, 1, 2,): (
        (-2, (((0, 0, 1), 2), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (1, (((0, 0, 2), 1), ((1, 1, 0), 1))),
        (2, (((0, 1, 1), 1), ((1, 0, 1), 1))),
    ),
    (1, 1, 3,): (
        (-6, (((0, 0, 1), 1), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (3, (((0, 0, 1), 1), ((0, 0, 2), 1), ((1, 1, 0), 1))),
        (6, (((0, 0, 1), 1), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-6, (((0, 0, 1), 2), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-6, (((0, 0, 1), 2), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (6, (((0, 0, 1), 3), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-2, (((0, 0, 1), 3), ((1, 1, 0), 1))),
        (3, (((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (3, (((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 0), 1))),
    ),
    (1, 1, 4,): (
        (-12, (((0, 0, 1), 2), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-8, (((0, 0, 1), 3), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-8, (((0, 0, 1), 3), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (16, (((0, 0, 1), 4), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-2, (((0, 0, 1), 4), ((1, 1, 0), 1))),
        (12, (((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (3, (((0, 0, 2), 2), ((1, 1, 0), 1))),
    ),
    (1, 1, 5,): (
        (60, (((0, 0, 1), 1), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-30, (((0, 0, 1), 1), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (15, (((0, 0, 1), 1), ((0, 0, 2), 2), ((1, 1, 0), 1))),
        (-60, (((0, 0, 1), 2), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-60, (((0, 0, 1), 2), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (60, (((0, 0, 1), 3), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-20, (((0, 0, 1), 3), ((0, 0, 2), 1), ((1, 1, 0), 1))),
        (-40, (((0, 0, 1), 3), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (30, (((0, 0, 1), 4), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (30, (((0, 0, 1), 4), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-20, (((0, 0, 1), 5), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (6, (((0, 0, 1), 5), ((1, 1, 0), 1))),
        (15, (((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (15, (((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 0), 1))),
    ),
    (1, 1, 6,): (
        (-90, (((0, 0, 1), 2), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-120, (((0, 0, 1), 3), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-120, (((0, 0, 1), 3), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (240, (((0, 0, 1), 4), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-30, (((0, 0, 1), 4), ((0, 0, 2), 1), ((1, 1, 0), 1))),
        (-60, (((0, 0, 1), 4), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (96, (((0, 0, 1), 5), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (96, (((0, 0, 1), 5), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-132, (((0, 0, 1), 6), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (16, (((0, 0, 1), 6), ((1, 1, 0), 1))),
        (90, (((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (15, (((0, 0, 2), 3), ((1, 1, 0), 1))),
    ),
    (1, 1, 7,): (
        (630, (((0, 0, 1), 1), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-210, (((0, 0, 1), 1), ((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (105, (((0, 0, 1), 1), ((0, 0, 2), 3), ((1, 1, 0), 1))),
        (-630, (((0, 0, 1), 2), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-630, (((0, 0, 1), 2), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-840, (((0, 0, 1), 3), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (630, (((0, 0, 1), 3), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-210, (((0, 0, 1), 3), ((0, 0, 2), 2), ((1, 1, 0), 1))),
        (630, (((0, 0, 1), 4), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (630, (((0, 0, 1), 4), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-420, (((0, 0, 1), 5), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (126, (((0, 0, 1), 5), ((0, 0, 2), 1), ((1, 1, 0), 1))),
        (252, (((0, 0, 1), 5), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-140, (((0, 0, 1), 6), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-140, (((0, 0, 1), 6), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (28, (((0, 0, 1), 7), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-20, (((0, 0, 1), 7), ((1, 1, 0), 1))),
        (105, (((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (105, (((0, 0, 2), 3), ((0, 1, 1), 1), ((1, 0, 0), 1))),
    ),
    (1, 1, 8,): (
        (-840, (((0, 0, 1), 2), ((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-1680, (((0, 0, 1), 3), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-1680, (((0, 0, 1), 3), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-1680, (((0, 0, 1), 4), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (3360, (((0, 0, 1), 4), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-420, (((0, 0, 1), 4), ((0, 0, 2), 2), ((1, 1, 0), 1))),
        (2688, (((0, 0, 1), 5), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (2688, (((0, 0, 1), 5), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-3696, (((0, 0, 1), 6), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (448, (((0, 0, 1), 6), ((0, 0, 2), 1), ((1, 1, 0), 1))),
        (896, (((0, 0, 1), 6), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-1056, (((0, 0, 1), 7), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-1056, (((0, 0, 1), 7), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (1216, (((0, 0, 1), 8), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-132, (((0, 0, 1), 8), ((1, 1, 0), 1))),
        (840, (((0, 0, 2), 3), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (105, (((0, 0, 2), 4), ((1, 1, 0), 1))),
    ),
    (1, 1, 9,): (
        (7560, (((0, 0, 1), 1), ((0, 0, 2), 3), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-1890, (((0, 0, 1), 1), ((0, 0, 2), 4), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (945, (((0, 0, 1), 1), ((0, 0, 2), 4), ((1, 1, 0), 1))),
        (-7560, (((0, 0, 1), 2), ((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-7560, (((0, 0, 1), 2), ((0, 0, 2), 3), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-15120, (((0, 0, 1), 3), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (7560, (((0, 0, 1), 3), ((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-2520, (((0, 0, 1), 3), ((0, 0, 2), 3), ((1, 1, 0), 1))),
        (11340, (((0, 0, 1), 4), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (11340, (((0, 0, 1), 4), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (9072, (((0, 0, 1), 5), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-7560, (((0, 0, 1), 5), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (2268, (((0, 0, 1), 5), ((0, 0, 2), 2), ((1, 1, 0), 1))),
        (-5040, (((0, 0, 1), 6), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-5040, (((0, 0, 1), 6), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (1008, (((0, 0, 1), 7), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-720, (((0, 0, 1), 7), ((0, 0, 2), 1), ((1, 1, 0), 1))),
        (-1440, (((0, 0, 1), 7), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (252, (((0, 0, 1), 8), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (252, (((0, 0, 1), 8), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (936, (((0, 0, 1), 9), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (28, (((0, 0, 1), 9), ((1, 1, 0), 1))),
        (945, (((0, 0, 2), 4), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (945, (((0, 0, 2), 4), ((0, 1, 1), 1), ((1, 0, 0), 1))),
    ),
    (1, 1, 10,): (
        (-9450, (((0, 0, 1), 2), ((0, 0, 2), 4), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-25200, (((0, 0, 1), 3), ((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-25200, (((0, 0, 1), 3), ((0, 0, 2), 3), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-37800, (((0, 0, 1), 4), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (50400, (((0, 0, 1), 4), ((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-6300, (((0, 0, 1), 4), ((0, 0, 2), 3), ((1, 1, 0), 1))),
        (60480, (((0, 0, 1), 5), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (60480, (((0, 0, 1), 5), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (40320, (((0, 0, 1), 6), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-83160, (((0, 0, 1), 6), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (10080, (((0, 0, 1), 6), ((0, 0, 2), 2), ((1, 1, 0), 1))),
        (-47520, (((0, 0, 1), 7), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-47520, (((0, 0, 1), 7), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (54720, (((0, 0, 1), 8), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-5940, (((0, 0, 1), 8), ((0, 0, 2), 1), ((1, 1, 0), 1))),
        (-11880, (((0, 0, 1), 8), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (12160, (((0, 0, 1), 9), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (12160, (((0, 0, 1), 9), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-12440, (((0, 0, 1), 10), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (1216, (((0, 0, 1), 10), ((1, 1, 0), 1))),
        (9450, (((0, 0, 2), 4), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (945, (((0, 0, 2), 5), ((1, 1, 0), 1))),
    ),
    (1, 1, 11,): (
        (103950, (((0, 0, 1), 1), ((0, 0, 2), 4), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-20790, (((0, 0, 1), 1), ((0, 0, 2), 5), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (10395, (((0, 0, 1), 1), ((0, 0, 2), 5), ((1, 1, 0), 1))),
        (-103950, (((0, 0, 1), 2), ((0, 0, 2), 4), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-103950, (((0, 0, 1), 2), ((0, 0, 2), 4), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-277200, (((0, 0, 1), 3), ((0, 0, 2), 3), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (103950, (((0, 0, 1), 3), ((0, 0, 2), 4), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-34650, (((0, 0, 1), 3), ((0, 0, 2), 4), ((1, 1, 0), 1))),
        (207900, (((0, 0, 1), 4), ((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (207900, (((0, 0, 1), 4), ((0, 0, 2), 3), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (249480, (((0, 0, 1), 5), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-138600, (((0, 0, 1), 5), ((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (41580, (((0, 0, 1), 5), ((0, 0, 2), 3), ((1, 1, 0), 1))),
        (-138600, (((0, 0, 1), 6), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-138600, (((0, 0, 1), 6), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-79200, (((0, 0, 1), 7), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (27720, (((0, 0, 1), 7), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-19800, (((0, 0, 1), 7), ((0, 0, 2), 2), ((1, 1, 0), 1))),
        (13860, (((0, 0, 1), 8), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (13860, (((0, 0, 1), 8), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (51480, (((0, 0, 1), 9), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (1540, (((0, 0, 1), 9), ((0, 0, 2), 1), ((1, 1, 0), 1))),
        (3080, (((0, 0, 1), 9), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (10296, (((0, 0, 1), 10), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (10296, (((0, 0, 1), 10), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-23672, (((0, 0, 1), 11), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (936, (((0, 0, 1), 11), ((1, 1, 0), 1))),
        (10395, (((0, 0, 2), 5), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (10395, (((0, 0, 2), 5), ((0, 1, 1), 1), ((1, 0, 0), 1))),
    ),
    (1, 1, 12,): (
        (-124740, (((0, 0, 1), 2), ((0, 0, 2), 5), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-415800, (((0, 0, 1), 3), ((0, 0, 2), 4), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-415800, (((0, 0, 1), 3), ((0, 0, 2), 4), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-831600, (((0, 0, 1), 4), ((0, 0, 2), 3), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (831600, (((0, 0, 1), 4), ((0, 0, 2), 4), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-103950, (((0, 0, 1), 4), ((0, 0, 2), 4), ((1, 1, 0), 1))),
        (1330560, (((0, 0, 1), 5), ((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (1330560, (((0, 0, 1), 5), ((0, 0, 2), 3), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (1330560, (((0, 0, 1), 6), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-1829520, (((0, 0, 1), 6), ((0, 0, 2), 3), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (221760, (((0, 0, 1), 6), ((0, 0, 2), 3), ((1, 1, 0), 1))),
        (-1568160, (((0, 0, 1), 7), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-1568160, (((0, 0, 1), 7), ((0, 0, 2), 2), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-784080, (((0, 0, 1), 8), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (1805760, (((0, 0, 1), 8), ((0, 0, 2), 2), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-196020, (((0, 0, 1), 8), ((0, 0, 2), 2), ((1, 1, 0), 1))),
        (802560, (((0, 0, 1), 9), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (802560, (((0, 0, 1), 9), ((0, 0, 2), 1), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (-821040, (((0, 0, 1), 10), ((0, 0, 2), 1), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (80256, (((0, 0, 1), 10), ((0, 0, 2), 1), ((1, 1, 0), 1))),
        (160512, (((0, 0, 1), 10), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (-149280, (((0, 0, 1), 11), ((0, 1, 0), 1), ((1, 0, 1), 1))),
        (-149280, (((0, 0, 1), 11), ((0, 1, 1), 1), ((1, 0, 0), 1))),
        (138048, (((0, 0, 1), 12), ((0, 1, 0), 1), ((1, 0, 0), 1))),
        (-12440, (((0, 0, 1), 12), ((1, 1, 0), 1))),
        (124740, (((0, 0, 2), 5), ((0, 1, 1), 1), ((1, 0, 1), 1))),
        (10395, (((0, 0, 2), 6), ((1, 1, 0), 1))),
    ),
}
