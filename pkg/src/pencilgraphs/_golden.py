"""Reference data used by the test suite and the consolidated report.

Point labels use the extended-hex alphabet (1-9, a-f, then g-v).  Values the
source material states with internal inconsistencies are kept here in their
computationally verified form, with the discrepancies noted in the repo's
decision log.
"""

# base vertices and their smallest neighbors, with the shared hyperplane
EDGE_EXAMPLES = {
    (3, 1): ("(1,23,45,67)", "(2,13,46,57)", "347"),
    (4, 1): ("(1,23,45,67,89,ab,cd,ef)", "(2,13,46,57,8a,9b,ce,df)", "3478bcf"),
    (4, 2): ("(123,4567,89ab,cdef)", "(145,2367,89cd,abef)", "16789ef"),
}

# (order, degree) of the component, and copy/incidence counts
CASE_DATA = {
    (3, 1): {"order": 42, "degree": 12, "ell0": 42, "ell1": 21, "m0": 4, "m1": 3},
    (4, 2): {"order": 210, "degree": 36, "ell0": 630, "ell1": 45, "m0": 12, "m1": 3},
    (4, 1): {"order": 2520, "degree": 56, "ell0": 2520, "ell1": 1470, "m0": 8, "m1": 7},
    (5, 2): {"order": 26040, "degree": 168},
}

NR_ORDERS = {(3, 1): 24, (4, 1): 1344, (4, 2): 2304, (5, 2): 516096}

# clique copies incident to the base vertex (U0 then blocks, in entry order)
CLIQUE_COPIES_AT_BASE = {
    (4, 1): [
        "[,2,4,6,8,a,c,e]", "[,2,4,6,9,b,d,f]",
        "[,3,4,7,8,b,c,f]", "[,3,4,7,9,a,d,e]",
        "[,2,5,7,8,a,d,f]", "[,2,5,7,9,b,c,e]",
        "[,3,5,6,8,b,d,e]", "[,3,5,6,9,a,c,f]",
    ],
    (4, 2): [
        "[1,45,89,cd]", "[1,45,ab,ef]", "[1,67,89,ef]", "[1,67,ab,cd]",
        "[2,57,8a,df]", "[2,57,9b,ce]", "[2,46,8a,ce]", "[2,46,9b,df]",
        "[3,47,8b,cf]", "[3,47,9a,de]", "[3,56,8b,de]", "[3,56,9a,cf]",
    ],
}

# Turan ids at the base vertex: (W, i)
TURAN_IDS_AT_BASE = {
    (4, 2): [("1234567", 1), ("12389ab", 2), ("123cdef", 3)],
    (4, 1): [("123", 1), ("145", 2), ("167", 3), ("189", 4),
             ("1ab", 5), ("1cd", 6), ("1ef", 7)],
}

# the base-vertex part of the first and last Turan copies at v for (4,1),
# and of the three copies at v for (4,2)
TURAN_PART_OF_BASE = {
    (4, 1, 1): [
        "(1,23,45,67,89,ab,cd,ef)", "(1,23,45,67,ab,89,ef,cd)",
        "(1,23,67,45,89,ab,ef,cd)", "(1,23,67,45,ab,89,cd,ef)",
    ],
    (4, 1, 7): [
        "(1,23,45,67,89,ab,cd,ef)", "(1,23,ab,89,67,45,cd,ef)",
        "(1,cd,45,89,67,ab,23,ef)", "(1,cd,ab,67,89,45,23,ef)",
    ],
    (4, 2, 1): ["(123,4567,89ab,cdef)", "(123,4567,cdef,89ab)"],
    (4, 2, 2): ["(123,4567,89ab,cdef)", "(123,cdef,89ab,4567)"],
    (4, 2, 3): ["(123,4567,89ab,cdef)", "(123,89ab,4567,cdef)"],
}

# listed generator examples: category, pi, alpha, bracket text, psi text;
# the two G_4^2 third-family rows are stored with their axes exchanged
# relative to the source table (the stated pairing contradicts the stated
# construction; verified computationally -- see the decision log).
GENERATOR_EXAMPLES = [
    # (r, sigma, category, pi, alpha, [ (theta, chi, [(b1, b2), ..]) ], psi)
    (3, 1, "A", "2", "123", [("", "2", [("4", "6"), ("5", "7")])], "1(2 3)"),
    (3, 1, "A", "3", "123", [("", "3", [("4", "7"), ("5", "6")])], "1(2 3)"),
    (3, 1, "A", "6", "167", [("", "6", [("2", "4"), ("3", "5")])], "3(1 2)"),
    (3, 1, "B", "", "145", [("", "1", [("2", "3"), ("6", "7")])], "()"),
    (4, 1, "A", "2", "1234567",
     [("", "2", [("8", "a"), ("9", "b"), ("c", "e"), ("d", "f")])],
     "1(4 5)(6 7)"),
    (4, 1, "A", "4", "1234567",
     [("", "4", [("8", "c"), ("9", "d"), ("a", "e"), ("b", "f")])],
     "2(4 6)(5 7)"),
    (4, 1, "A", "2", "123cdef",
     [("", "2", [("4", "6"), ("5", "7"), ("8", "a"), ("9", "b")])],
     "1(2 3)(4 5)"),
    (4, 1, "A", "c", "123cdef",
     [("", "c", [("4", "8"), ("5", "9"), ("6", "a"), ("7", "b")])],
     "6(2 4)(3 5)"),
    (4, 1, "A", "5", "1234567",
     [("", "5", [("8", "d"), ("9", "c"), ("a", "f"), ("b", "e")])],
     "2(4 6)(5 7)"),
    (4, 1, "B", "", "14589cd",
     [("", "1", [("2", "3"), ("6", "7"), ("a", "b"), ("e", "f")])], "()"),
    (4, 1, "A", "6", "16789ef",
     [("", "6", [("2", "4"), ("3", "5"), ("a", "c"), ("b", "d")])],
     "3(1 2)(5 6)"),
    (4, 2, "A", "4", "1234567",
     [("1", "45", [("89", "cd"), ("ab", "ef")]),
      ("2", "46", [("8a", "ce"), ("9b", "df")]),
      ("3", "47", [("8b", "cf"), ("9a", "de")])],
     "1(2 3)"),
    (4, 2, "A", "c", "123cdef",
     [("1", "cd", [("45", "89"), ("67", "ab")]),
      ("2", "ce", [("46", "8a"), ("57", "9b")]),
      ("3", "cf", [("47", "8b"), ("56", "9a")])],
     "3(1 2)"),
    (4, 2, "B", "1", "1234567",
     [("1", "23", [("89", "ab"), ("cd", "ef")])], "()"),
    (4, 2, "B", "1", "12389ab",
     [("1", "23", [("45", "67"), ("cd", "ef")])], "()"),
    (4, 2, "B", "1", "123cdef",
     [("1", "23", [("45", "67"), ("89", "ab")])], "()"),
    (4, 2, "B", "2", "1234567",
     [("2", "13", [("8a", "9b"), ("ce", "df")])], "()"),
    (4, 2, "B", "2", "12389ab",
     [("2", "13", [("46", "57"), ("ce", "df")])], "()"),
    (4, 2, "B", "2", "123cdef",
     [("2", "13", [("46", "57"), ("8a", "9b")])], "()"),
    (4, 2, "B", "3", "1234567",
     [("3", "12", [("8b", "9a"), ("cf", "de")])], "()"),
    (4, 2, "B", "3", "12389ab",
     [("3", "12", [("47", "56"), ("cf", "de")])], "()"),
    (4, 2, "B", "3", "123cdef",
     [("3", "12", [("47", "56"), ("8b", "9a")])], "()"),
    (4, 2, "C", "1", "14589cd",
     [("4", "15", [("26", "37")]), ("5", "14", [("27", "36")]),
      ("8", "19", [("2a", "3b")]), ("9", "18", [("2b", "3a")]),
      ("c", "1d", [("2e", "3f")]), ("d", "1c", [("2f", "3e")])],
     "()"),
    (4, 2, "C", "3", "3478bcf",
     [("4", "37", [("15", "26")]), ("7", "34", [("16", "25")]),
      ("8", "3b", [("19", "2a")]), ("b", "38", [("1a", "29")]),
      ("c", "3f", [("1d", "2e")]), ("f", "3c", [("1e", "2d")])],
     "()"),
]

# J cycle displays
J_DISPLAYS = {
    2: "(132)",
    3: "(1372456)",
    4: "(137f248d6c5ba9e)",
    5: "(137fv248gt6codraklmhu)(5bnipes)(9jq)",
}

TWO_LINE_LOWER = {
    2: "312",
    3: "3475612",
    4: "3478bcfde9a5612",
    5: "3478bcfgjknorsvtupqlmhide9a5612",
}

# verified type expressions; entries whose source-stated subscript disagrees
# with the stated shift rule carry the stated value alongside.
TYPE_EXPRS = {
    "J_2": "(3_1)",
    "J_3": "(7_4)",
    "J_4": "(15_11)",  # stated as (15_12); the displayed ds-level gives 11
    "w_3(2)": "(7_2)",
    "w_4(4)": "(5(5(5(_1))))",
    "w_4(6)": "(15_3)",
    "w_4(1)": "(1(2(4((4)^2))))",
}
TYPE_EXPR_J4_AS_STATED = "(15_12)"

W5_SUBSCRIPTS = {2: 13, 4: 19, 6: 17, 8: 18, 10: 11, 12: 12}

# Table I: super-type -> (distance, total count)
TABLE1 = {
    2: {"(1)": (0, 1), "(2)": (1, 3), "(3)": (2, 2)},
    3: {"(1)": (0, 1), "(2)^2": (1, 21), "(3)^2": (2, 56),
        "(2)(4)": (2, 42), "(7)": (3, 48)},
    4: {"(1)": (0, 1), "(2)^4": (1, 105), "(2)^6": (2, 210),
        "(2)^2(4)^2": (2, 1260), "(3)^4": (2, 1120), "(2)(4)^3": (3, 2520),
        "(2)(3)^2(6)": (3, 3360), "(7)^2": (3, 5760), "(3)(6)^2": (4, 1680),
        "(5)^3": (4, 1344), "(15)": (4, 2688), "(3)^5": (4, 112)},
    5: {"(1)": (0, 1), "(2)^8": (1, 465), "(2)^12": (2, 6510),
        "(2)^4(4)^4": (2, 26040), "(3)^8": (2, 19840),
        "(2)^2(4)^6": (3, 312480), "(2)^2(3)^4(6)^2": (3, 416640),
        "(7)^4": (3, 476160), "(2)^6(4)^4": (3, 78120),
        "(3)^2(6)^4": (4, 833280), "(5)^6": (4, 666624),
        "(15)^2": (4, 1333248), "(3)^10": (4, 55552),
        "(2)(7)^2(14)": (4, 1428480), "(2)(4)^3(8)^2": (4, 624960),
        "(2)(3)^2(4)(6)(12)": (4, 833280), "(3)(7)(21)": (5, 952320),
        "(31)": (5, 1935360)},
}

GROUP_ORDERS = {2: 6, 3: 168, 4: 20160, 5: 9999360}
COSET_INDEX = {3: 28, 4: 120, 5: 496}

# category representatives (as permutation display strings)
CATEGORY_REPS = {
    (3, "b_alpha"): ["123(45)(67)", "231(46)(57)", "312(47)(56)"],
    (3, "b_beta"): ["716(25)(34)", "725(16)(34)", "734(16)(25)"],
    (3, "c"): ["415(26)(37)", "514(27)(36)", "624(17)(35)",
               "426(15)(37)", "536(14)(27)", "635(17)(24)"],
}

# configuration parameters (points, lines-per-point, lines, points-per-line)
CONFIG_PARAMS = {
    (3, 1): (42, 4, 42, 4),
    (4, 2): (210, 12, 630, 4),
    (4, 1): (2520, 8, 2520, 8),
}

DIAMETER_BOUND = {r: 2 * r - 2 for r in (3, 4, 5)}
