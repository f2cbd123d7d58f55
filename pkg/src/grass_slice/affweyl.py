"""Untwisted affine Weyl group in the semidirect representation.

An element is stored canonically as x = t_tau . wbar, where wbar is a finite
Weyl group element (a permutation of the finite roots) and tau lies in the
coweight lattice written in simple-coroot coordinates.  Translations by
coweights outside the coroot lattice are admitted: they generate the
extended group, whose length-zero part shows up as the residue of the
greedy descent decomposition (``coset_decomposition``).

The affine root alpha + n.delta is stored as (finite root, level n);
alpha_0 = delta - theta.  The action is

    x(alpha + n.delta) = wbar(alpha) + (n - <wbar(alpha), tau>) delta,

and delta itself is fixed.  Lengths count inversions of this action, which
reproduces the Iwahori-Matsumoto formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratfunc import LinForm
from .rootdata import Coweight, RootDatum


@dataclass(frozen=True)
class AffineRoot:
    """Real affine root: finite root part (root coordinates) and delta level."""

    datum: RootDatum
    root: tuple
    level: int

    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return all(c >= 0 for c in self.root)

    def to_linform(self) -> LinForm:
        """Display coordinates on (a0..aR), using delta = a0 + sum marks.a_i."""
        marks = self.datum.marks
        coeffs = (self.level,) + tuple(
            c + self.level * m for c, m in zip(self.root, marks)
        )
        return LinForm(coeffs)

    def __str__(self):
        return str(self.to_linform())


def linform_to_affine_root(datum: RootDatum, form: LinForm):
    """Inverse of ``AffineRoot.to_linform``; None if the form is not a real root."""
    level = form.coeffs[0]
    root = tuple(c - level * m for c, m in zip(form.coeffs[1:], datum.marks))
    if root not in datum.root_index:
        return None
    return AffineRoot(datum, root, level)


def _simple_indices(datum: RootDatum):
    return tuple(
        datum.root_index[tuple(int(i == j) for j in range(datum.rank))]
        for i in range(datum.rank)
    )


def _root_reflection_perm(datum: RootDatum, root):
    """Permutation of all roots given by the reflection in ``root``."""
    coroot = datum.coroot_of[datum.root_index[root]]
    images = []
    for beta in datum.all_roots:
        pairing = datum.root_pairing(beta, coroot)
        image = tuple(b - pairing * r for b, r in zip(beta, root))
        images.append(datum.root_index[image])
    return tuple(images)


class AffineWeylElement:
    """Canonical pair (finite part, translation part); immutable."""

    __slots__ = ("datum", "perm", "trans", "_hash")

    def __init__(self, datum: RootDatum, perm, trans):
        self.datum = datum
        self.perm = tuple(perm)
        self.trans = tuple(Fraction(t) for t in trans)
        self._hash = hash((self.perm, self.trans))

    # -- construction ----------------------------------------------------

    @classmethod
    def identity(cls, datum: RootDatum):
        return cls(datum, range(len(datum.all_roots)), (0,) * datum.rank)

    @classmethod
    def simple_reflection(cls, datum: RootDatum, i: int):
        if not 0 <= i <= datum.rank:
            raise ValueError(f"simple reflection index {i} out of range")
        if i == 0:
            perm = _root_reflection_perm(datum, datum.highest_root)
            return cls(datum, perm, datum.theta_coroot)
        simple = tuple(int(i - 1 == j) for j in range(datum.rank))
        return cls(datum, _root_reflection_perm(datum, simple), (0,) * datum.rank)

    @classmethod
    def translation(cls, datum: RootDatum, lam: Coweight):
        if lam.datum != datum:
            raise ValueError("coweight belongs to a different root datum")
        return cls(datum, range(len(datum.all_roots)), lam.coroot_coords())

    @classmethod
    def from_word(cls, datum: RootDatum, word):
        x = cls.identity(datum)
        for i in word:
            x = x * cls.simple_reflection(datum, i)
        return x

    @classmethod
    def longest_finite(cls, datum: RootDatum):
        # longest_element_word uses 0-based node indices; generator k is node k-1
        return cls.from_word(datum, [k + 1 for k in datum.longest_element_word()])

    # -- structure ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, AffineWeylElement)
            and self.perm == other.perm
            and self.trans == other.trans
        )

    def __hash__(self):
        return self._hash

    def is_identity(self):
        return all(t == 0 for t in self.trans) and all(
            p == k for k, p in enumerate(self.perm)
        )

    def in_coroot_lattice(self) -> bool:
        return all(t.denominator == 1 for t in self.trans)

    def _apply_finite_to_coroot(self, coords):
        simple = _simple_indices(self.datum)
        out = [Fraction(0)] * self.datum.rank
        for j, cj in enumerate(coords):
            if cj:
                image = self.datum.coroot_of[self.perm[simple[j]]]
                for k, v in enumerate(image):
                    out[k] += cj * v
        return tuple(out)

    def __mul__(self, other):
        if self.datum != other.datum:
            raise ValueError("elements of different affine Weyl groups")
        perm = tuple(self.perm[p] for p in other.perm)
        moved = self._apply_finite_to_coroot(other.trans)
        trans = tuple(a + b for a, b in zip(self.trans, moved))
        return AffineWeylElement(self.datum, perm, trans)

    def inverse(self):
        n = len(self.perm)
        inv_perm = [0] * n
        for k, p in enumerate(self.perm):
            inv_perm[p] = k
        inv = AffineWeylElement(self.datum, inv_perm, (0,) * self.datum.rank)
        trans = tuple(-t for t in inv._apply_finite_to_coroot(self.trans))
        return AffineWeylElement(self.datum, inv_perm, trans)

    # -- affine action -------------------------------------------------------

    def affine_simple_root(self, i: int) -> AffineRoot:
        datum = self.datum
        if i == 0:
            return AffineRoot(datum, tuple(-c for c in datum.highest_root), 1)
        return AffineRoot(datum, tuple(int(i - 1 == j) for j in range(datum.rank)), 0)

    def act(self, aroot: AffineRoot) -> AffineRoot:
        datum = self.datum
        idx = datum.root_index[aroot.root]
        image = datum.all_roots[self.perm[idx]]
        shift = Fraction(datum.root_pairing(image, self.trans))
        assert shift.denominator == 1, "affine action left the root lattice"
        return AffineRoot(datum, image, aroot.level - int(shift))

    # -- length, words, descents ----------------------------------------------

    def length(self) -> int:
        datum = self.datum
        total = 0
        npos = datum.num_positive
        for idx, root in enumerate(datum.all_roots):
            image = datum.all_roots[self.perm[idx]]
            c = Fraction(datum.root_pairing(image, self.trans))
            assert c.denominator == 1, "translation part outside the coweight lattice"
            c = int(c)
            n_min = 0 if idx < npos else 1
            if c > n_min:
                total += c - n_min
            if c >= n_min and self.perm[idx] >= npos:
                total += 1
        return total

    def inversions(self):
        """Positive affine roots beta with self^{-1}(beta) negative; one per
        length unit."""
        datum = self.datum
        inv = self.inverse()
        out = []
        npos = datum.num_positive
        for idx, root in enumerate(datum.all_roots):
            image_idx = inv.perm[idx]
            image = datum.all_roots[image_idx]
            c = int(Fraction(datum.root_pairing(image, inv.trans)))
            n_min = 0 if idx < npos else 1
            for n in range(n_min, c):
                out.append(AffineRoot(datum, root, n))
            if c >= n_min and image_idx >= npos:
                out.append(AffineRoot(datum, root, c))
        out.sort(key=lambda a: (a.level, a.root))
        return tuple(out)

    def is_left_descent(self, i: int) -> bool:
        """len(s_i x) < len(x), read off the sign of x^{-1}(alpha_i)."""
        datum = self.datum
        aroot = self.affine_simple_root(i)
        idx = datum.root_index[aroot.root]
        # x^{-1}(alpha, n) = (wbar^{-1} alpha, n + <alpha, tau>)
        pairing = Fraction(datum.root_pairing(aroot.root, self.trans))
        assert pairing.denominator == 1, "translation part outside the coweight lattice"
        level = aroot.level + int(pairing)
        inv_perm_idx = self.perm.index(idx)
        image = AffineRoot(datum, datum.all_roots[inv_perm_idx], level)
        return not image.is_positive()

    def is_right_descent(self, i: int) -> bool:
        """len(x s_i) < len(x), read off the sign of x(alpha_i)."""
        return not self.act(self.affine_simple_root(i)).is_positive()

    def first_left_descent(self):
        for i in range(self.datum.rank + 1):
            if self.is_left_descent(i):
                return i
        return None

    def first_right_descent(self):
        for i in range(self.datum.rank + 1):
            if self.is_right_descent(i):
                return i
        return None

    def coset_decomposition(self):
        """Split x = u . residue with u given by a reduced word and residue of
        length zero.  For elements of the non-extended group the residue is
        the identity."""
        word = []
        x = self
        while True:
            i = x.first_left_descent()
            if i is None:
                return tuple(word), x
            word.append(i)
            x = AffineWeylElement.simple_reflection(self.datum, i) * x

    def reduced_word(self):
        word, residue = self.coset_decomposition()
        if not residue.is_identity():
            raise ValueError("element lies outside the non-extended group")
        return word

    def __repr__(self):
        word, residue = self.coset_decomposition()
        tail = "" if residue.is_identity() else " . (twist)"
        body = "*".join(f"s{i}" for i in word) if word else "e"
        return f"<{body}{tail}>"


def word_string(word) -> str:
    return "*".join(f"s{i}" for i in word) if word else "e"


def parse_word(text: str):
    """Parse 's1*s2*s0' or '[1,2,0]' style words into an index list."""
    text = text.strip()
    if not text or text == "e":
        return []
    if text.startswith("["):
        body = text.strip("[]")
        return [int(tok) for tok in body.split(",") if tok.strip()]
    out = []
    for tok in text.split("*"):
        tok = tok.strip()
        if not tok.startswith("s") or not tok[1:].isdigit():
            raise ValueError(f"cannot parse word component {tok!r}")
        out.append(int(tok[1:]))
    return out


def max_coset_element(lam: Coweight) -> AffineWeylElement:
    """The element labelling the open Schubert cell over the orbit of lam.

    This is the longest element of W t_lam W, of length <2rho, lam> + len(w0).
    For lam outside the coroot lattice the translation lives in the extended
    group; the returned element is the non-extended part u of the greedy
    decomposition w0 t_lam = u . (length-zero twist), which is the label used
    on the corresponding connected component.
    """
    if not lam.is_dominant():
        raise ValueError("max_coset_element requires a dominant coweight")
    datum = lam.datum
    x = AffineWeylElement.longest_finite(datum) * AffineWeylElement.translation(datum, lam)
    word, _residue = x.coset_decomposition()
    return AffineWeylElement.from_word(datum, word)


_BRUHAT_MEMO = {}


def bruhat_leq(x: AffineWeylElement, y: AffineWeylElement) -> bool:
    """Bruhat order via the subword property, memoized."""
    if x.datum != y.datum:
        raise ValueError("elements of different affine Weyl groups")
    return _bruhat(x, y, x.length(), y.length())


def _bruhat(x, y, lx, ly):
    if lx > ly:
        return False
    if lx == 0:
        return True
    key = (x.perm, x.trans, y.perm, y.trans)
    memo = _BRUHAT_MEMO.setdefault(x.datum.cartan, {})
    if key in memo:
        return memo[key]
    i = y.first_left_descent()
    s = AffineWeylElement.simple_reflection(y.datum, i)
    y1 = s * y
    if x.is_left_descent(i):
        result = _bruhat(s * x, y1, lx - 1, ly - 1)
    else:
        result = _bruhat(x, y1, lx, ly - 1)
    memo[key] = result
    return result
