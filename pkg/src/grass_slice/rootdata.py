"""Cartan data, root systems and coweights for the simple types A..G.

Conventions:

* Node numbering follows Bourbaki (B_n: node n short; C_n: node n long;
  G_2: node 1 short, node 2 long; F_4: double bond between nodes 2 and 3).
* The Cartan matrix is stored as A[i][j] = <alpha_j, alphacheck_i>, so the
  row of a short simple root carries the entry -2 (or -3 for G_2).
* Coweights are kept in fundamental-coweight coordinates; coordinates on
  the simple coroots are derived through the exact inverse of A^T, and a
  non-integral result means "not in the coroot lattice".

Everything is generated from the Cartan matrix by closure; no root counts,
Weyl group orders or exponents are hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd


def _cartan_matrix(letter: str, rank: int):
    letter = letter.upper()
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if letter not in valid or not valid[letter]:
        raise ValueError(f"invalid simple type {letter}{rank}")
    A = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, aij=-1, aji=-1):
        A[i][j] = aij
        A[j][i] = aji

    if letter in ("A", "B", "C"):
        for i in range(rank - 1):
            bond(i, i + 1)
        if letter == "B" and rank >= 2:
            # alpha_n short: its row carries the -2
            bond(rank - 2, rank - 1, -1, -2)
        if letter == "C" and rank >= 2:
            bond(rank - 2, rank - 1, -2, -1)
    elif letter == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif letter == "E":
        # Bourbaki: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif letter == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif letter == "G":
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in A)


def _validate_cartan(cartan):
    n = len(cartan)
    for i in range(n):
        if len(cartan[i]) != n or cartan[i][i] != 2:
            raise ValueError("invalid Cartan matrix")
        for j in range(n):
            if i != j:
                if cartan[i][j] > 0 or (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise ValueError("invalid Cartan matrix")


def _invert(matrix):
    n = len(matrix)
    m = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


class RootDatum:
    """Root system, coroots and Weyl combinatorics of a simple type."""

    def __init__(self, cartan, label=None):
        cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        _validate_cartan(cartan)
        self.cartan = cartan
        self.rank = len(cartan)
        self._label = label
        self._build()

    # -- construction -----------------------------------------------------

    def _build(self):
        n = self.rank
        A = self.cartan
        # positive roots by closure under simple reflections, in root coords
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for root in frontier:
                for i in range(n):
                    pairing = sum(A[i][j] * root[j] for j in range(n))
                    image = tuple(
                        c - (pairing if j == i else 0) for j, c in enumerate(root)
                    )
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        positives = sorted(
            (r for r in seen if all(c >= 0 for c in r)),
            key=lambda r: (sum(r), r),
        )
        self.positive_roots = tuple(positives)
        self.all_roots = self.positive_roots + tuple(
            tuple(-c for c in r) for r in self.positive_roots
        )
        self.root_index = {r: k for k, r in enumerate(self.all_roots)}
        self.num_positive = len(self.positive_roots)

        # symmetrizer d_i: d_i A[i][j] = d_j A[j][i], normalized to integers
        d = [Fraction(0)] * n
        d[0] = Fraction(1)
        pending = [0]
        while pending:
            i = pending.pop()
            for j in range(n):
                if A[i][j] and d[j] == 0:
                    d[j] = d[i] * A[i][j] / A[j][i]
                    pending.append(j)
        lcm_den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in d))
        d = [x * lcm_den for x in d]
        g = reduce(gcd, (int(x) for x in d))
        self.symmetrizer = tuple(int(x) // g for x in d)

        # coroot of each root, in simple-coroot coordinates
        def coroot(root):
            dr = self._half_norm(root)
            co = tuple(
                Fraction(c * self.symmetrizer[i], 1) / dr for i, c in enumerate(root)
            )
            assert all(x.denominator == 1 for x in co), "coroot not integral"
            return tuple(int(x) for x in co)

        self.coroot_of = tuple(coroot(r) for r in self.all_roots)

        self.highest_root = max(self.positive_roots, key=lambda r: sum(r))
        self.marks = self.highest_root
        self.theta_coroot = self.coroot_of[self.root_index[self.highest_root]]

        self.two_rho = tuple(
            sum(r[i] for r in self.positive_roots) for i in range(n)
        )
        self.inv_cartan_T = _invert([[A[j][i] for j in range(n)] for i in range(n)])

    def _half_norm(self, root):
        # (root, root) / 2 relative to the symmetrizer normalization
        n = self.rank
        total = Fraction(0)
        for i in range(n):
            if root[i]:
                for j in range(n):
                    if root[j]:
                        total += root[i] * root[j] * self.symmetrizer[i] * self.cartan[i][j]
        return total / 2

    # -- basic structure ---------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, RootDatum) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __repr__(self):
        return f"RootDatum({self.label})"

    @property
    def label(self) -> str:
        if self._label is None:
            letter, rank = self.dynkin_type()
            self._label = f"{letter}{rank}"
        return self._label

    def root_pairing(self, root, coroot_coords):
        """<root, nu> for a root in root coords and nu in coroot coords."""
        total = 0
        for i, t in enumerate(coroot_coords):
            if t:
                for j, c in enumerate(root):
                    if c:
                        total += t * self.cartan[i][j] * c
        return total

    def coroot_coords(self, fw_coords):
        return tuple(
            sum(self.inv_cartan_T[i][j] * fw_coords[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def fw_of_coroot_vector(self, coroot_coords):
        return tuple(
            sum(coroot_coords[i] * self.cartan[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )

    def simple_coroot(self, i) -> "Coweight":
        return Coweight(self, self.cartan[i])

    def short_dominant_coroot(self) -> "Coweight":
        """The coroot of the highest root, as a dominant coweight."""
        return Coweight(self, self.fw_of_coroot_vector(self.theta_coroot))

    def zero_coweight(self) -> "Coweight":
        return Coweight(self, (0,) * self.rank)

    def fundamental_coweight(self, i) -> "Coweight":
        return Coweight(self, tuple(int(i == j) for j in range(self.rank)))

    def is_long_node(self, i) -> bool:
        return self.symmetrizer[i] == max(self.symmetrizer)

    @property
    def simply_laced(self) -> bool:
        return min(self.symmetrizer) == max(self.symmetrizer)

    # -- Weyl group helpers -------------------------------------------------

    def reflect_coweight_fw(self, fw, i):
        ci = fw[i]
        if ci == 0:
            return tuple(fw)
        return tuple(v - ci * self.cartan[i][j] for j, v in enumerate(fw))

    def dominant_conjugate_fw(self, fw):
        fw = tuple(fw)
        while True:
            i = next((k for k, v in enumerate(fw) if v < 0), None)
            if i is None:
                return fw
            fw = self.reflect_coweight_fw(fw, i)

    def weyl_orbit_size(self, fw=None) -> int:
        """Orbit size of a coweight vector; defaults to a regular vector (=|W|)."""
        if fw is None:
            fw = (1,) * self.rank
        start = self.dominant_conjugate_fw(fw)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    w = self.reflect_coweight_fw(v, i)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return len(seen)

    def longest_element_word(self):
        """A reduced word for w_0, by pushing a regular vector antidominant."""
        v = (1,) * self.rank
        word = []
        while True:
            i = next((k for k, x in enumerate(v) if x > 0), None)
            if i is None:
                return tuple(word)
            v = self.reflect_coweight_fw(v, i)
            word.append(i)

    def exponents(self):
        """Exponents of W, as the conjugate of the root-height distribution."""
        heights = [sum(r) for r in self.positive_roots]
        maxh = max(heights)
        counts = [sum(1 for h in heights if h == k) for k in range(1, maxh + 1)]
        exps = []
        j = 1
        while True:
            e = sum(1 for c in counts if c >= j)
            if e == 0:
                return tuple(sorted(exps))
            exps.append(e)
            j += 1

    # -- type recognition and sub-data ---------------------------------------

    def dynkin_type(self):
        """Classify the diagram, returning (letter, rank)."""
        n = self.rank
        A = self.cartan
        edges = {}
        for i in range(n):
            for j in range(i + 1, n):
                if A[i][j]:
                    edges[(i, j)] = A[i][j] * A[j][i]
        adj = {i: [] for i in range(n)}
        for (i, j) in edges:
            adj[i].append(j)
            adj[j].append(i)
        if n == 1:
            return ("A", 1)
        if any(len(v) > 3 for v in adj.values()):
            raise ValueError("not a simple Dynkin diagram")
        triple = [e for e, b in edges.items() if b == 3]
        double = [e for e, b in edges.items() if b == 2]
        if triple:
            if n != 2:
                raise ValueError("not a simple Dynkin diagram")
            return ("G", 2)
        if double:
            if len(double) != 1:
                raise ValueError("not a simple Dynkin diagram")
            (i, j) = double[0]
            ends = [k for k in (i, j) if len(adj[k]) == 1]
            if not ends:
                if n == 4:
                    return ("F", 4)
                raise ValueError("not a simple Dynkin diagram")
            # letter depends on whether the end node of the double bond is long
            end = ends[-1]
            return ("C" if self.is_long_node(end) else "B", n)
        branch = [i for i in range(n) if len(adj[i]) == 3]
        if not branch:
            return ("A", n)
        if len(branch) != 1:
            raise ValueError("not a simple Dynkin diagram")
        b = branch[0]
        arms = []
        for start in adj[b]:
            length, prev, cur = 1, b, start
            while True:
                nxt = [k for k in adj[cur] if k != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return ("D", n)
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return ("E", n)
        raise ValueError("not a simple Dynkin diagram")

    def sub_datum(self, vertices):
        vertices = tuple(sorted(vertices))
        sub = tuple(
            tuple(self.cartan[i][j] for j in vertices) for i in vertices
        )
        return RootDatum(sub)

    def is_connected_subset(self, vertices) -> bool:
        vertices = sorted(vertices)
        if not vertices:
            return False
        seen = {vertices[0]}
        frontier = [vertices[0]]
        vs = set(vertices)
        while frontier:
            i = frontier.pop()
            for j in vs:
                if j not in seen and self.cartan[i][j] != 0:
                    seen.add(j)
                    frontier.append(j)
        return seen == vs


@dataclass(frozen=True)
class Coweight:
    """Element of the coweight lattice in fundamental-coweight coordinates."""

    datum: RootDatum
    fw: tuple

    def __post_init__(self):
        object.__setattr__(self, "fw", tuple(int(x) for x in self.fw))
        if len(self.fw) != self.datum.rank:
            raise ValueError("coordinate count does not match rank")

    def coroot_coords(self):
        return self.datum.coroot_coords(self.fw)

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.fw)

    def in_coroot_lattice(self) -> bool:
        return all(x.denominator == 1 for x in self.coroot_coords())

    def __add__(self, other):
        self._check(other)
        return Coweight(self.datum, tuple(a + b for a, b in zip(self.fw, other.fw)))

    def __sub__(self, other):
        self._check(other)
        return Coweight(self.datum, tuple(a - b for a, b in zip(self.fw, other.fw)))

    def scale(self, k: int):
        return Coweight(self.datum, tuple(k * x for x in self.fw))

    def _check(self, other):
        if self.datum != other.datum:
            raise ValueError("coweights live in different root data")

    def restrict(self, vertices) -> "Coweight":
        vertices = tuple(sorted(vertices))
        sub = self.datum.sub_datum(vertices)
        return Coweight(sub, tuple(self.fw[i] for i in vertices))

    def __str__(self):
        return f"{self.datum.label} [{','.join(str(x) for x in self.fw)}]"


@dataclass(frozen=True)
class Support:
    """Support of a coroot-lattice vector: vertex set and its sub-datum.

    Disconnected supports carry no sub-datum (parabolic restriction is only
    defined along connected subdiagrams)."""

    vertices: tuple
    datum: RootDatum
    connected: bool


@lru_cache(maxsize=None)
def _build_cached(letter: str, rank: int) -> RootDatum:
    return RootDatum(_cartan_matrix(letter, rank), label=f"{letter.upper()}{rank}")


def build(letter: str, rank: int = None) -> RootDatum:
    """Construct the root datum of a simple type, e.g. build('C', 2) or build('C2')."""
    if rank is None:
        letter, rank = parse_type(letter)
    return _build_cached(letter.upper(), int(rank))


def parse_type(text: str):
    text = text.strip().replace(":", "")
    if len(text) < 2 or not text[0].isalpha():
        raise ValueError(f"cannot parse type {text!r}")
    return text[0].upper(), int(text[1:])


def parse_coweight(text: str) -> Coweight:
    """Parse the textual coweight syntax 'TYPE:RANK [c1,...,cr]'.

    >>> parse_coweight("C:2 [1,0]").fw
    (1, 0)
    >>> parse_coweight("G2 [0,1]").datum.label
    'G2'
    """
    text = text.strip()
    if "[" not in text or not text.endswith("]"):
        raise ValueError(f"cannot parse coweight {text!r}")
    head, _, body = text.partition("[")
    datum = build(*parse_type(head))
    coords = tuple(int(tok) for tok in body.rstrip("]").split(",") if tok.strip())
    if len(coords) != datum.rank:
        raise ValueError(f"coweight {text!r} needs {datum.rank} coordinates")
    return Coweight(datum, coords)


def dominance_leq(lam: Coweight, mu: Coweight) -> bool:
    """mu - lam is a nonnegative integer combination of simple coroots."""
    lam._check(mu)
    diff = mu - lam
    return all(x.denominator == 1 and x >= 0 for x in diff.coroot_coords())


def pairing_2rho(lam: Coweight) -> int:
    """<2 rho, lam>: the dimension of the orbit labelled by lam."""
    return sum(t * v for t, v in zip(lam.datum.two_rho, lam.fw))


def support(nu: Coweight) -> Support:
    """Support of nu (which must have nonnegative integral coroot coordinates)."""
    coords = nu.coroot_coords()
    if any(x.denominator != 1 or x < 0 for x in coords):
        raise ValueError("support requires a nonnegative coroot-lattice vector")
    vertices = tuple(i for i, x in enumerate(coords) if x != 0)
    if not vertices:
        raise ValueError("support of zero is empty")
    connected = nu.datum.is_connected_subset(vertices)
    datum = nu.datum.sub_datum(vertices) if connected else None
    return Support(vertices, datum, connected)


def levi_restrict(lam: Coweight, vertices) -> Coweight:
    """Coordinate restriction of lam to a connected vertex subset."""
    if not lam.datum.is_connected_subset(vertices):
        raise ValueError("restriction requires a connected subdiagram")
    return lam.restrict(vertices)


def langlands_dual(datum: RootDatum) -> RootDatum:
    """The datum with transposed Cartan matrix (roots and coroots exchanged)."""
    n = datum.rank
    return RootDatum(tuple(tuple(datum.cartan[j][i] for j in range(n)) for i in range(n)))
