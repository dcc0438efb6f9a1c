"""Values transcribed by hand from the two worked examples.

Monomials are written the way the examples print them (letters, optional
``^k``), and converted with :func:`word`.  Nothing here is produced by the
package itself.
"""

import re

EX_NAMES = list("abcdefg")          # a = y_1, ..., g = y_7
EX2_NAMES = ["x", "y", "z"]         # x = y_1, y = y_2, z = y_3


def word(text, names):
    """``"gf^2"`` -> exponent tuple; ``"1"`` is the unit monomial."""
    e = [0] * len(names)
    text = text.strip()
    if text == "1":
        return tuple(e)
    for letter, power in re.findall(r"([a-z])(?:\^(\d+))?", text):
        e[names.index(letter)] += int(power) if power else 1
    return tuple(e)


def words(text, names):
    return {word(w, names) for w in text.split(",")}


EX_FACETS = [
    (1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 7), (1, 5, 6), (1, 5, 7), (2, 3, 5),
    (2, 3, 7), (2, 4, 5), (2, 6, 7), (3, 4, 6), (3, 5, 6), (4, 5, 7), (4, 6, 7),
]

EX_SR = words("efg,cfg,afg,ceg,beg,cdg,bdg,adg,abg,def,bef,bdf,adf,bcf,"
              "acf,cde,ade,ace,abe,bcd,abc", EX_NAMES)

EX_GIN = words("gf^2,f^3,f^2e,g^2f,gfe,fe^2,gfd,f^2d,fed,g^2e,ge^2,e^3,"
               "ged,e^2d,fd^2,g^3,g^2d,gd^2,ed^2,g^2c,gfc,d^4", EX_NAMES)

EX_SHIFTED_SR = words("gea,gfa,ecb,fcb,gcb,edb,fdb,gdb,feb,geb,gfb,edc,"
                      "fdc,gdc,fec,gec,gfc,fed,ged,gfd,gfe,dcba", EX_NAMES)

EX_SHIFTED_FACETS = [
    (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 6), (1, 2, 7), (1, 3, 4), (1, 3, 5),
    (1, 3, 6), (1, 3, 7), (1, 4, 5), (1, 4, 6), (1, 4, 7), (1, 5, 6), (2, 3, 4),
    (5, 7), (6, 7),
]

EX_B_TRIANGLE = [(0,), (0, 0), (0, 0, 2), (1, 4, 8, 1)]

# monomial b-triangle: (i, r) -> A_{i,r}
EX_A_SETS = {
    (2, 2): words("g^2,gf", EX_NAMES),
    (3, 0): {word("1", EX_NAMES)},
    (3, 1): words("g,f,e,d", EX_NAMES),
    (3, 2): words("ge,gd,f^2,fe,fd,e^2,ed,d^2", EX_NAMES),
    (3, 3): words("d^3", EX_NAMES),
}

# rows of the standard pair table: StdPairs(I_Gamma) sigma (None in the two
# bottom rows), Gin coset, Gin sigma, Phi(coset), supp Phi(coset), StdPairs(I_Delta) sigma
EX_PAIR_TABLE = [
    ((4, 6, 7), "1", (1, 2, 3), "1", (), (1, 2, 3)),
    ((2, 6, 7), "g", (1, 2, 3), "g", (7,), (1, 2, 7)),
    ((4, 5, 7), "ge", (1, 2, 3), "gd", (7, 4), (1, 4, 7)),
    ((1, 5, 7), "gd", (1, 2, 3), "gc", (7, 3), (1, 3, 7)),
    ((2, 3, 7), "f", (1, 2, 3), "f", (6,), (1, 2, 6)),
    ((1, 3, 7), "f^2", (1, 2, 3), "fe", (6, 5), (1, 5, 6)),
    ((3, 5, 6), "fe", (1, 2, 3), "fd", (6, 4), (1, 4, 6)),
    ((1, 5, 6), "fd", (1, 2, 3), "fc", (6, 3), (1, 3, 6)),
    ((3, 4, 6), "e", (1, 2, 3), "e", (5,), (1, 2, 5)),
    ((1, 2, 6), "e^2", (1, 2, 3), "ed", (5, 4), (1, 4, 5)),
    ((2, 4, 5), "ed", (1, 2, 3), "ec", (5, 3), (1, 3, 5)),
    ((2, 3, 5), "d", (1, 2, 3), "d", (4,), (1, 2, 4)),
    ((1, 3, 4), "d^2", (1, 2, 3), "dc", (4, 3), (1, 3, 4)),
    ((1, 2, 4), "d^3", (1, 2, 3), "dcb", (4, 3, 2), (2, 3, 4)),
    (None, "g^2", (1, 2), "gf", (7, 6), (6, 7)),
    (None, "gf", (1, 2), "ge", (7, 5), (5, 7)),
]

# Betti diagram of S/I_Gamma, copied cell by cell
EX_BETTI_TOTALS = [1, 21, 49, 42, 15, 2]
EX_BETTI_ROWS = {
    0: [1, None, None, None, None, None],
    1: [None, None, None, None, None, None],
    2: [None, 21, 49, 42, 14, 2],
    3: [None, None, None, None, 1, None],
}

# the same diagram as printed, one string per row (spacing normalised)
EX_BETTI_DIAGRAM = [
    "total: 1 21 49 42 15 2",
    "0: 1 . . . . .",
    "1: . . . . . .",
    "2: . 21 49 42 14 2",
    "3: . . . . 1 .",
]

# extremal Betti numbers of I_Gamma: (i, j) for beta_{i,j}, with the b-triangle cell
EX_EXTREMAL = {(3, 7): 1, (4, 7): 2}
EX_EXTREMAL_CELLS = {(3, 3): 1, (2, 2): 2}

EX_REDUCED_BETTI = [0, 0, 2, 1]     # diagonal of the b-triangle

# degrees (counted from the table)
EX_MULT = {3: 14, 2: 2}
EX_DEGREE = EX_GEOMDEG = 14
EX_ARITHDEG = 16

# ---------------------------------------------------------------------------

EX2_TEXT = "vars: x,y,z\nz^6-5*z^4*y^2\nz^3*y*x^3-3*x*y*z^5\ny^2*z^2\n"

EX2_GIN = words("z^4,y^3z^3,y^5z^2,xy^4z^2,x^3y^2z^3,x^5yz^3", EX2_NAMES)

EX2_PAIRS = (
    [(word(m, EX2_NAMES), (1, 2)) for m in ("1", "z")]
    + [(word(m, EX2_NAMES), (1,)) for m in ("z^2", "yz^2", "y^2z^2", "y^3z^2", "z^3")]
    + [(word(m, EX2_NAMES), ()) for m in ("y^4z^2", "yz^3", "y^2z^3", "xy^2z^3", "x^2y^2z^3",
                                           "xyz^3", "x^2yz^3", "x^3yz^3", "x^4yz^3")]
)

EX2_A = {
    2: words("1,z", EX2_NAMES),
    1: words("z^2,yz^2,y^2z^2,y^3z^2,z^3", EX2_NAMES),
    0: words("y^4z^2,yz^3,y^2z^3,xy^2z^3,x^2y^2z^3,xyz^3,x^2yz^3,x^3yz^3,x^4yz^3", EX2_NAMES),
}

# C_i as unions of cones m N^sigma
EX2_C_CONES = {
    2: [],
    1: [(word("1", EX2_NAMES), (2,)), (word("z", EX2_NAMES), (2,))],
    0: [(word("1", EX2_NAMES), (1, 2)), (word("z", EX2_NAMES), (1, 2))]
    + [(word(m, EX2_NAMES), (1,)) for m in ("z^2", "yz^2", "y^2z^2", "y^3z^2", "z^3")],
}
EX2_TRUNCATION = 8

EX2_MULT = {2: 2, 1: 5, 0: 9}
EX2_ARITHDEG = 16
