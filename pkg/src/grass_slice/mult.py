"""Weight multiplicities and intersection-cohomology stalk polynomials.

Both computations treat a pair of dominant coweights of G as dominant
weights for the Langlands dual group: coweight coordinates on fundamental
coweights are read as weight coordinates on fundamental weights, and the
positive roots of the dual group are the positive coroots of G.  This works
entirely in coweight coordinates, so no explicit dual datum is built here.

``stalk_poly`` evaluates Lusztig's q-analog of the weight multiplicity

    sum over w in W of (-1)^len(w) * P_q(w(mu + rho) - (lam + rho)),

with P_q the q-analog of the Kostant partition function over positive
coroots, and returns its degree reversal at ht(mu - lam).  The reversal is
what makes the constant term 1 on the open stratum and the value at q = 1
equal to the weight multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .rootdata import Coweight, RootDatum, dominance_leq


@dataclass(frozen=True)
class StalkPolynomial:
    """Polynomial in q with integer coefficients, stored ascending."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return StalkPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return StalkPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def shift(self, k):
        if not self.coeffs:
            return self
        return StalkPolynomial((0,) * k + self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def at_one(self) -> int:
        return sum(self.coeffs)

    def reversed_at(self, degree: int) -> "StalkPolynomial":
        if len(self.coeffs) - 1 > degree:
            raise ValueError("polynomial degree exceeds reversal degree")
        padded = self.coeffs + (0,) * (degree + 1 - len(self.coeffs))
        return StalkPolynomial(tuple(reversed(padded)))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


_QKOSTANT_MEMO = {}


def _positive_coroots(datum: RootDatum):
    coroots = [datum.coroot_of[k] for k in range(datum.num_positive)]
    coroots.sort(key=lambda v: (-sum(v), v))
    return tuple(coroots)


def q_kostant(datum: RootDatum, vec) -> StalkPolynomial:
    """q-analog of the Kostant partition function over positive coroots.

    Counts multisets of positive coroots summing to vec, weighted by
    q^(multiset size).  vec is given in simple-coroot coordinates.
    """
    vec = tuple(int(x) for x in vec)
    if any(x < 0 for x in vec):
        return StalkPolynomial.zero()
    memo = _QKOSTANT_MEMO.setdefault(datum.cartan, {})
    coroots = _positive_coroots(datum)

    def rec(idx, v):
        if all(x == 0 for x in v):
            return StalkPolynomial.one()
        if idx == len(coroots):
            return StalkPolynomial.zero()
        key = (idx, v)
        if key in memo:
            return memo[key]
        beta = coroots[idx]
        total = StalkPolynomial.zero()
        current = v
        k = 0
        while all(x >= 0 for x in current):
            total = total + rec(idx + 1, current).shift(k)
            current = tuple(a - b for a, b in zip(current, beta))
            k += 1
        memo[key] = total
        return total

    return rec(0, vec)


def _signed_orbit(datum: RootDatum, fw):
    """Iterate (w(fw), parity of len(w)) over the Weyl orbit of a strictly
    dominant vector, via breadth-first search on the vectors themselves."""
    start = tuple(fw)
    seen = {start}
    frontier = [start]
    parity = 1
    while frontier:
        for v in frontier:
            yield v, parity
        nxt = []
        for v in frontier:
            for i in range(datum.rank):
                w = datum.reflect_coweight_fw(v, i)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
        parity = -parity


def stalk_poly(lam: Coweight, mu: Coweight) -> StalkPolynomial:
    """IC stalk polynomial of the orbit closure of mu at the point lam."""
    lam._check(mu)
    if not (lam.is_dominant() and mu.is_dominant()):
        raise ValueError("stalk polynomial requires dominant coweights")
    if not dominance_leq(lam, mu):
        raise ValueError("stalk polynomial requires lam <= mu")
    datum = lam.datum
    diff_coords = (mu - lam).coroot_coords()
    height = int(sum(diff_coords))
    ones = (1,) * datum.rank
    mu_rho = tuple(a + b for a, b in zip(mu.fw, ones))
    lam_rho = tuple(a + b for a, b in zip(lam.fw, ones))
    raw = StalkPolynomial.zero()
    for v, sign in _signed_orbit(datum, mu_rho):
        u = tuple(a - b for a, b in zip(v, lam_rho))
        coords = datum.coroot_coords(u)
        if any(x.denominator != 1 or x < 0 for x in coords):
            continue
        part = q_kostant(datum, tuple(int(x) for x in coords))
        if not part.is_zero():
            raw = raw + (part if sign > 0 else -part)
    result = raw.reversed_at(height)
    if result.coeffs and (result.coeffs[0] != 1 or any(c < 0 for c in result.coeffs)):
        raise ArithmeticError(
            f"stalk polynomial failed its shape invariants: {result}"
        )
    return result


def rationally_smooth(lam: Coweight, mu: Coweight) -> bool:
    """True when the stalk polynomial is 1."""
    return stalk_poly(lam, mu).is_one()


# -- Freudenthal multiplicities ---------------------------------------------


def _dual_form_matrix(datum: RootDatum):
    """Symmetric form on the coweight space making W act by isometries,
    evaluated on simple coroots."""
    n = datum.rank
    dvee = [Fraction(1, d) for d in datum.symmetrizer]
    lcm_den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in dvee))
    dvee = [int(x * lcm_den) for x in dvee]
    return tuple(
        tuple(dvee[i] * datum.cartan[j][i] for j in range(n)) for i in range(n)
    )


def _pair(form, s, t):
    total = Fraction(0)
    for i, si in enumerate(s):
        if si:
            for j, tj in enumerate(t):
                if tj:
                    total += si * tj * form[i][j]
    return total


def dominant_weights_below(mu: Coweight):
    """Dominant nu <= mu (same coroot-lattice coset), farthest first."""
    import itertools

    datum = mu.datum
    bounds = [int(x) for x in mu.coroot_coords()]
    out = []
    for c in itertools.product(*[range(b + 1) for b in bounds]):
        fw = tuple(
            mu.fw[j] - sum(c[i] * datum.cartan[i][j] for i in range(datum.rank))
            for j in range(datum.rank)
        )
        if all(v >= 0 for v in fw):
            out.append((sum(c), Coweight(datum, fw)))
    out.sort(key=lambda t: (t[0], t[1].fw))
    return [cw for _, cw in out]


def freudenthal(mu: Coweight, lam: Coweight) -> int:
    """Multiplicity of the weight lam in the dual-group module of highest
    weight mu, by Freudenthal's recursion."""
    lam._check(mu)
    if not mu.is_dominant():
        raise ValueError("highest weight must be dominant")
    datum = mu.datum
    lam_dom = Coweight(datum, datum.dominant_conjugate_fw(lam.fw))
    if not dominance_leq(lam_dom, mu):
        return 0
    form = _dual_form_matrix(datum)
    ones = (1,) * datum.rank
    rho_coords = datum.coroot_coords(ones)

    def norm_shifted(cw):
        s = tuple(a + b for a, b in zip(cw.coroot_coords(), rho_coords))
        return _pair(form, s, s)

    target_norm = norm_shifted(mu)
    table = {}
    weights = dominant_weights_below(mu)
    coroots = _positive_coroots(datum)
    for nu in weights:
        if nu.fw == mu.fw:
            table[nu.fw] = 1
            continue
        total = Fraction(0)
        for co in coroots:
            co_fw = datum.fw_of_coroot_vector(co)
            k = 1
            while True:
                x_fw = tuple(a + k * b for a, b in zip(nu.fw, co_fw))
                x = Coweight(datum, x_fw)
                if any(v < 0 for v in (mu - x).coroot_coords()):
                    break
                m = table.get(tuple(datum.dominant_conjugate_fw(x_fw)), 0)
                if m:
                    total += m * _pair(form, x.coroot_coords(), co)
                k += 1
        denom = target_norm - norm_shifted(nu)
        value = 2 * total / denom
        assert value.denominator == 1, "Freudenthal recursion produced a fraction"
        table[nu.fw] = int(value)
    return table.get(lam_dom.fw, 0)
