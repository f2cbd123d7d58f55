"""Dominance order on dominant coweights and the minimal-degeneration classifier.

A pair of dominant coweights lam < mu is a minimal degeneration when no
dominant coweight lies strictly between them.  ``is_minimal_degeneration``
decides this by exhaustive interval enumeration (the coroot coefficients of
mu - lam bound the search box), which keeps it independent of the five-case
pattern classifier ``stembridge_classify`` so the two can be checked against
each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .rootdata import Coweight, RootDatum, dominance_leq, pairing_2rho, support

NOT_MINIMAL = "not_minimal"
CASE_SIMPLE_COROOT = "case1"
CASE_MINIMAL_ORBIT = "case2"
CASE_QUASI_AC = "case3"
CASE_QUASI_AG = "case4"
CASE_QUASI_CG = "case5"


@dataclass(frozen=True)
class DegenerationCase:
    """Outcome of the five-case minimal degeneration classification."""

    kind: str
    simple_index: int = None     # case1: which simple coroot
    vertices: tuple = None       # cases 2-5: support vertex set
    support_type: tuple = None   # cases 2-5: (letter, rank) of the support

    def is_minimal(self) -> bool:
        return self.kind != NOT_MINIMAL


def _box(limits):
    ranges = [range(int(b) + 1) for b in limits]
    return itertools.product(*ranges)


def _integral_floor(coords):
    out = []
    for x in coords:
        if x < 0:
            return None
        out.append(int(x))
    return out


def interval(lam: Coweight, mu: Coweight):
    """All dominant nu with lam <= nu <= mu, sorted by <2rho, .> then coords."""
    lam._check(mu)
    if not dominance_leq(lam, mu):
        raise ValueError("coweights are not comparable")
    datum = lam.datum
    diff = (mu - lam).coroot_coords()
    found = []
    for c in _box([int(x) for x in diff]):
        fw = tuple(
            lam.fw[j] + sum(c[i] * datum.cartan[i][j] for i in range(datum.rank))
            for j in range(datum.rank)
        )
        if all(v >= 0 for v in fw):
            found.append(Coweight(datum, fw))
    found.sort(key=lambda nu: (pairing_2rho(nu), nu.fw))
    return found


def is_minimal_degeneration(lam: Coweight, mu: Coweight) -> bool:
    """Brute-force minimality test: lam < mu and nothing strictly between."""
    lam._check(mu)
    if lam.fw == mu.fw or not dominance_leq(lam, mu):
        return False
    return len(interval(lam, mu)) == 2


def _long_end_of_c_type(sub: RootDatum):
    """For a C-shaped diagram (path, one double bond at an end, long end node)
    return the index of that long end node; otherwise None."""
    n = sub.rank
    bonds = {}
    for i in range(n):
        for j in range(i + 1, n):
            if sub.cartan[i][j]:
                bonds[(i, j)] = sub.cartan[i][j] * sub.cartan[j][i]
    if any(b > 2 for b in bonds.values()):
        return None
    double = [e for e, b in bonds.items() if b == 2]
    if len(double) != 1:
        return None
    degree = [0] * n
    for (i, j) in bonds:
        degree[i] += 1
        degree[j] += 1
    if any(d > 2 for d in degree):
        return None
    candidates = [k for k in double[0] if degree[k] == 1 and sub.is_long_node(k)]
    return candidates[0] if candidates else None


def stembridge_classify(lam: Coweight, mu: Coweight) -> DegenerationCase:
    """Match (lam, mu) against the five minimal-degeneration patterns.

    Pairs that are equal, incomparable, or fit no pattern come back as
    NOT_MINIMAL.  The patterns are tested in order: simple coroot; short
    dominant coroot of the support with lam vanishing there; the C_n special
    pattern; the two G_2 patterns.
    """
    lam._check(mu)
    diff = mu - lam
    coords = _integral_floor_exact(diff.coroot_coords())
    if coords is None or all(c == 0 for c in coords):
        return DegenerationCase(NOT_MINIMAL)

    # case 1: mu - lam is a simple coroot
    if sum(coords) == 1:
        i = coords.index(1)
        return DegenerationCase(CASE_SIMPLE_COROOT, simple_index=i)

    supp = support(diff)
    if not supp.connected:
        return DegenerationCase(NOT_MINIMAL)
    sub = supp.datum
    verts = supp.vertices
    subtype = sub.dynkin_type()
    diff_sub = diff.restrict(verts)
    lam_sub = lam.restrict(verts)
    theta_check = sub.short_dominant_coroot()

    if diff_sub.fw == theta_check.fw:
        # case 2: lam vanishes on the support
        if all(v == 0 for v in lam_sub.fw):
            return DegenerationCase(CASE_MINIMAL_ORBIT, vertices=verts, support_type=subtype)
        # case 3: C-type support, lam = 1 exactly on the long end node
        long_end = _long_end_of_c_type(sub)
        if long_end is not None:
            pattern = tuple(1 if k == long_end else 0 for k in range(sub.rank))
            if lam_sub.fw == pattern:
                return DegenerationCase(CASE_QUASI_AC, vertices=verts, support_type=subtype)

    # cases 4 and 5: G_2 support with the two special coweight patterns
    if subtype == ("G", 2):
        long_node = 0 if sub.is_long_node(0) else 1
        short_node = 1 - long_node

        def pattern(cw, at_long, at_short):
            return cw.fw[long_node] == at_long and cw.fw[short_node] == at_short

        mu_sub = mu.restrict(verts)
        if pattern(lam_sub, 2, 0) and pattern(mu_sub, 1, 1):
            return DegenerationCase(CASE_QUASI_AG, vertices=verts, support_type=subtype)
        if pattern(lam_sub, 1, 0) and pattern(mu_sub, 0, 1):
            return DegenerationCase(CASE_QUASI_CG, vertices=verts, support_type=subtype)

    return DegenerationCase(NOT_MINIMAL)


def _integral_floor_exact(coords):
    out = []
    for x in coords:
        if x.denominator != 1 or x < 0:
            return None
        out.append(int(x))
    return out


def covers_of(mu: Coweight):
    """All minimal degenerations mu ~> lam, classified, in deterministic order."""
    datum = mu.datum
    bounds = [int(x) for x in mu.coroot_coords()]
    found = []
    for c in _box(bounds):
        if all(v == 0 for v in c):
            continue
        fw = tuple(
            mu.fw[j] - sum(c[i] * datum.cartan[i][j] for i in range(datum.rank))
            for j in range(datum.rank)
        )
        if any(v < 0 for v in fw):
            continue
        lam = Coweight(datum, fw)
        case = stembridge_classify(lam, mu)
        if case.is_minimal():
            found.append((lam, case))
    found.sort(key=lambda t: (pairing_2rho(t[0]), t[0].fw))
    return found


def dominant_coweights_up_to(datum: RootDatum, bound: int):
    """All dominant coweights mu with <2rho, mu> <= bound."""
    out = []
    limits = [bound // t if t else 0 for t in datum.two_rho]
    for fw in _box(limits):
        mu = Coweight(datum, fw)
        if pairing_2rho(mu) <= bound:
            out.append(mu)
    out.sort(key=lambda mu: (pairing_2rho(mu), mu.fw))
    return out
