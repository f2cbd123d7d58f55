"""Reference data for the six rank-2 minimal degenerations.

Published words and equivariant multiplicities for these cases number the
nodes with the long root first; internally the long node of C2 and G2 is
node 2 (Bourbaki).  The swap is pinned by requiring mu - lam to be a
nonnegative integer combination of simple coroots, and is applied here by
``relabel_word`` / ``relabel_formula``.
"""

from grass_slice.ratfunc import LinForm, parse
from grass_slice.rootdata import Coweight, build

_SWAP = {0: 0, 1: 2, 2: 1}


def relabel_word(word):
    return [_SWAP[i] for i in word]


def relabel_formula(text):
    f = parse(text, 3)
    images = (LinForm((1, 0, 0)), LinForm((0, 0, 1)), LinForm((0, 1, 0)))
    return f.substitute(images)


CASES = {
    # name: (type, lam fw, mu fw, y word, w word, formula) -- words/formulas
    # in the long-node-first labelling, coweights in internal coordinates
    "a2": (
        "A2",
        (0, 0),
        (1, 1),
        [1, 2, 1],
        [1, 2, 1, 0, 1, 2, 1],
        "2*(3*a0^2 + 6*a0*a1 + 2*a1^2 + 6*a0*a2 + 5*a1*a2 + 2*a2^2)"
        " / (a0)(a0 + a1)(a0 + a2)(a0 + 2*a1 + a2)(a0 + a1 + 2*a2)(a0 + 2*a1 + 2*a2)",
    ),
    "c2": (
        "C2",
        (0, 0),
        (1, 0),
        [2, 1, 2, 1],
        [2, 1, 2, 1, 0, 2, 1, 2],
        "8 / (a0)(a0 + 2*a2)(a0 + 2*a1 + 2*a2)(a0 + 2*a1 + 4*a2)",
    ),
    "ac2": (
        "C2",
        (0, 1),
        (1, 1),
        [2, 1, 2, 1, 0, 2, 0],
        [2, 1, 2, 1, 0, 2, 0, 1, 2, 0, 2],
        "2*(11*a0^2 + 21*a0*a1 + 9*a1^2 + 43*a0*a2 + 39*a1*a2 + 36*a2^2)"
        " / (a0)(a0 + a1 + a2)(a0 + 2*a2)(a0 + a1 + 3*a2)(2*a0 + 3*a1 + 4*a2)(2*a0 + 3*a1 + 6*a2)",
    ),
    "g2": (
        "G2",
        (0, 0),
        (0, 1),
        [2, 1, 2, 1, 2, 1],
        [2, 1, 2, 1, 2, 1, 0, 1, 2, 1, 2, 1],
        "18 / (a0)(a0 + a1)(a0 + a1 + 3*a2)(a0 + 3*a1 + 3*a2)(a0 + 3*a1 + 6*a2)(a0 + 4*a1 + 6*a2)",
    ),
    "ag2": (
        "G2",
        (0, 2),
        (1, 1),
        [2, 1, 2, 1, 2, 1, 0, 1, 2, 1, 2, 1, 0, 1, 2, 1, 2, 1],
        [2, 1, 2, 1, 2, 1, 0, 1, 2, 1, 2, 0, 1, 2, 1, 0, 2, 1, 2, 1, 2, 1],
        "2*(27*a0^2 + 106*a0*a1 + 103*a1^2 + 159*a0*a2 + 309*a1*a2 + 216*a2^2)"
        " / (a0 + a1)(a0 + 2*a1 + 2*a2)(a0 + a1 + 3*a2)(a0 + 2*a1 + 4*a2)(3*a0 + 7*a1 + 9*a2)(3*a0 + 7*a1 + 12*a2)",
    ),
    "cg2": (
        "G2",
        (0, 1),
        (1, 0),
        [2, 1, 2, 1, 2, 1, 0, 1, 2, 1, 2, 1],
        [2, 1, 2, 1, 2, 1, 0, 1, 2, 1, 2, 0, 1, 2, 1, 2],
        "27 / (a0 + a1)(a0 + a1 + 3*a2)(2*a0 + 5*a1 + 6*a2)(2*a0 + 5*a1 + 9*a2)",
    ),
}


def case_pair(name):
    typ, lam_fw, mu_fw, _y, _w, _f = CASES[name]
    datum = build(typ)
    return datum, Coweight(datum, lam_fw), Coweight(datum, mu_fw)


def case_words(name):
    typ, _lam, _mu, y, w, _f = CASES[name]
    if typ == "A2":
        return list(y), list(w)
    return relabel_word(y), relabel_word(w)


def case_formula(name):
    typ, _lam, _mu, _y, _w, f = CASES[name]
    if typ == "A2":
        return parse(f, 3)
    return relabel_formula(f)
