"""Nil-Hecke localization: fixed-point equivariant multiplicities and
Kumar's non-smoothness certificate.

The twisted group algebra has multiplication (f.d_v)(g.d_u) = f.(v|>g).d_{vu},
where v|> substitutes each simple affine root variable by its image under v.
The Demazure generator is

    x_i = (1/alpha_i) (d_{s_i} - d_e),

and x_w = x_{i_1} ... x_{i_N} along any reduced word of w; the coefficients
c_{w,v} of x_w = sum c_{w,v} d_v are independent of the word.  With this
convention c_{w,w} is the product of inverted inversions of w, and the
transversal-slice multiplicity of a dominant pair lam < mu is

    e_lam(mu) = c_{w,y} * prod(beta for beta in inversions(y)),

with y, w the elements labelling the open cells over the two orbits.

Kumar's criterion is used one-directionally: if the numerator of e_lam(mu)
is not 1, or some denominator factor is not a positive real affine root,
the slice is certifiably not smooth at its fixed point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affweyl import AffineWeylElement, linform_to_affine_root, max_coset_element
from .ratfunc import RatFunc
from .rootdata import Coweight, RootDatum, dominance_leq, pairing_2rho


class NilHeckeElement:
    """Finitely supported map from affine Weyl elements to rational functions."""

    __slots__ = ("datum", "coeffs")

    def __init__(self, datum: RootDatum, coeffs=None):
        self.datum = datum
        self.coeffs = {}
        if coeffs:
            for element, value in coeffs.items():
                if not value.is_zero():
                    self.coeffs[element] = value

    def get(self, element) -> RatFunc:
        return self.coeffs.get(element, RatFunc.zero(self.datum.rank + 1))

    def support(self):
        return tuple(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other):
        if not isinstance(other, NilHeckeElement) or set(self.coeffs) != set(other.coeffs):
            return False
        return all(c.equals(other.coeffs[v]) for v, c in self.coeffs.items())

    def __len__(self):
        return len(self.coeffs)


def _nvars(datum):
    return datum.rank + 1


def demazure_generator(datum: RootDatum, i: int) -> NilHeckeElement:
    """x_i = (1/alpha_i)(d_{s_i} - d_e)."""
    e = AffineWeylElement.identity(datum)
    s = AffineWeylElement.simple_reflection(datum, i)
    form = e.affine_simple_root(i).to_linform()
    inv = RatFunc.inverse_linform(form)
    return NilHeckeElement(datum, {s: inv, e: -inv})


def _mul_generator(nh: NilHeckeElement, i: int) -> NilHeckeElement:
    """Right multiplication by x_i in the twisted product."""
    datum = nh.datum
    s = AffineWeylElement.simple_reflection(datum, i)
    out = {}
    zero = RatFunc.zero(_nvars(datum))
    for v, coeff in nh.items():
        image = v.act(v.affine_simple_root(i)).to_linform()
        moved = coeff.mul_inv_linform(image)   # coeff * (v |> 1/alpha_i)
        vs = v * s
        out[vs] = out.get(vs, zero) + moved
        out[v] = out.get(v, zero) - moved
    return NilHeckeElement(datum, out)


_NILHECKE_MEMO = {}


def nilhecke_coefficients(w: AffineWeylElement, store=None) -> NilHeckeElement:
    """All coefficients c_{w,v}, memoized along right-descent chains.

    ``store`` may be a persistent cache (see grass_slice.cache); the
    in-process memo is always used.
    """
    memo = _NILHECKE_MEMO.setdefault(w.datum.cartan, {})
    chain = []
    x = w
    while x not in memo:
        if store is not None:
            cached = store.load_nilhecke(x)
            if cached is not None:
                memo[x] = cached
                break
        if x.is_identity():
            memo[x] = NilHeckeElement(
                x.datum, {x: RatFunc.one(_nvars(x.datum))}
            )
            break
        chain.append(x)
        i = x.first_right_descent()
        x = x * AffineWeylElement.simple_reflection(x.datum, i)
    for x in reversed(chain):
        i = x.first_right_descent()
        prev = memo[x * AffineWeylElement.simple_reflection(x.datum, i)]
        memo[x] = _mul_generator(prev, i)
        if store is not None:
            store.save_nilhecke(x, memo[x])
    return memo[w]


def nilhecke_from_word(datum: RootDatum, word) -> NilHeckeElement:
    """Product x_{i_1} ... x_{i_N} along an explicit word (no memoization)."""
    out = NilHeckeElement(
        datum, {AffineWeylElement.identity(datum): RatFunc.one(_nvars(datum))}
    )
    for i in word:
        out = _mul_generator(out, i)
    return out


def point_multiplicity(w: AffineWeylElement, v: AffineWeylElement, store=None) -> RatFunc:
    """Equivariant multiplicity e_v(X_w) = c_{w,v}; zero when v is not <= w."""
    return nilhecke_coefficients(w, store=store).get(v)


@dataclass(frozen=True)
class SliceMultiplicity:
    """Equivariant multiplicity of the transversal slice at its fixed point."""

    value: RatFunc
    lam: Coweight
    mu: Coweight
    y: AffineWeylElement
    w: AffineWeylElement
    degree: int


class RankGuardError(ValueError):
    """Equivariant computation requested above the default rank bound."""


def slice_multiplicity(lam: Coweight, mu: Coweight, allow_high_rank=False, store=None) -> SliceMultiplicity:
    """e_lam(mu) for a dominant pair lam < mu with mu - lam in the coroot lattice."""
    lam._check(mu)
    datum = lam.datum
    if datum.rank > 2 and not allow_high_rank:
        raise RankGuardError(
            "equivariant multiplicities default to rank <= 2; pass allow_high_rank to override"
        )
    if not (lam.is_dominant() and mu.is_dominant()):
        raise ValueError("slice multiplicity requires dominant coweights")
    if lam.fw == mu.fw or not dominance_leq(lam, mu):
        raise ValueError("slice multiplicity requires lam < mu")
    y = max_coset_element(lam)
    w = max_coset_element(mu)
    codim = pairing_2rho(mu) - pairing_2rho(lam)
    if store is not None:
        cached = store.load_slice(lam, mu)
        if cached is not None:
            return SliceMultiplicity(cached, lam, mu, y, w, cached.homogeneous_degree())
    value = point_multiplicity(w, y, store=store)
    if value.is_zero():
        raise ArithmeticError("vanishing localization: y is not below w")
    for beta in y.inversions():
        value = value.mul_linform(beta.to_linform())
    degree = value.homogeneous_degree()
    if degree != -codim:
        raise ArithmeticError(
            f"slice multiplicity has degree {degree}, expected {-codim}"
        )
    if store is not None:
        store.save_slice(lam, mu, value)
    return SliceMultiplicity(value, lam, mu, y, w, degree)


NONUNIT_NUMERATOR = "nonunit_numerator"
NON_ROOT_FACTOR = "non_root_factor"


@dataclass(frozen=True)
class KumarVerdict:
    """Outcome of the product-of-inverse-roots test.

    ``smooth_form_holds`` does NOT prove smoothness; ``not smooth_form_holds``
    certifies non-smoothness.
    """

    smooth_form_holds: bool
    roots: tuple = ()        # the set S when the form holds
    reason: str = None       # NONUNIT_NUMERATOR or NON_ROOT_FACTOR
    detail: str = None

    def __str__(self):
        if self.smooth_form_holds:
            inside = ", ".join(str(r) for r in self.roots)
            return f"SmoothFormHolds({{{inside}}})"
        return f"NotSmooth({self.reason}: {self.detail})"


def kumar_test(s: SliceMultiplicity) -> KumarVerdict:
    """Check whether e_lam(mu) has the form prod(1/alpha) over positive real
    affine roots.  The numerator is examined first, then each denominator
    factor in canonical order."""
    datum = s.lam.datum
    value = s.value
    if not (value.num.is_constant() and value.num.constant_value() == 1):
        detail = RatFunc(value.num).to_canonical_string()
        return KumarVerdict(False, reason=NONUNIT_NUMERATOR, detail=detail)
    roots = []
    for form in value.den:
        aroot = linform_to_affine_root(datum, form)
        if aroot is None or not aroot.is_positive():
            return KumarVerdict(False, reason=NON_ROOT_FACTOR, detail=str(form))
        roots.append(aroot)
    return KumarVerdict(True, roots=tuple(roots))
