"""Exact multivariate rational functions with linear-form denominators.

Values are fractions P / (L_1 ... L_k) where P is a sparse polynomial with
rational coefficients and every L_i is an integer linear form in the
variables a0, .., aR (the simple affine roots).  This is the only shape of
denominator the nil-Hecke recursion ever produces, so cancellation reduces
to exact division of the numerator by a candidate linear factor and no
multivariate gcd is needed.

All coefficient arithmetic uses ``fractions.Fraction``; there is no floating
point anywhere.  Every value is immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd


class RatFuncParseError(ValueError):
    """Parse failure, carrying the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _term_sort_key(expt):
    # Graded order: total degree first, ties broken so that among equal
    # degrees a0-heavy monomials print first (a0^2 before a0*a1 before a1^2).
    return (sum(expt), tuple(-e for e in reversed(expt)))


def _form_sort_key(form):
    # Denominator factors sort with low weight in the later variables first:
    # (a0) before (a0 + a1) before (a0 + a2) before (a0 + 2*a1 + a2).
    return tuple(reversed(form.coeffs))


@dataclass(frozen=True)
class LinForm:
    """Integer linear form c_0*a0 + ... + c_r*aR."""

    coeffs: tuple

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if all(c == 0 for c in self.coeffs):
            raise ValueError("linear form must not be identically zero")

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def content_and_canonical(self):
        """Split as ``c * F`` with F primitive and first nonzero coefficient > 0.

        Returns ``(c, F)`` where c is a nonzero integer.
        """
        g = reduce(gcd, (abs(c) for c in self.coeffs))
        lead = next(c for c in self.coeffs if c != 0)
        if lead < 0:
            g = -g
        return g, LinForm(tuple(c // g for c in self.coeffs))

    def is_canonical(self) -> bool:
        c, canon = self.content_and_canonical()
        return c == 1

    def __neg__(self):
        return LinForm(tuple(-c for c in self.coeffs))

    def evaluate(self, point):
        return sum(c * x for c, x in zip(self.coeffs, point))

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            var = f"a{i}"
            mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(parts)


class SparsePoly:
    """Sparse polynomial: map from exponent tuples to nonzero Fractions."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for expt, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[tuple(expt)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, value):
        value = Fraction(value)
        return cls(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def from_linform(cls, form: LinForm):
        n = form.nvars
        terms = {}
        for i, c in enumerate(form.coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = Fraction(c)
        return cls(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=None)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def __eq__(self, other):
        return isinstance(other, SparsePoly) and self.terms == other.terms and self.nvars == other.nvars

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SparsePoly(self.nvars, out)

    def __neg__(self):
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return SparsePoly(self.nvars, out)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return SparsePoly.zero(self.nvars)
        return SparsePoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def mul_linform(self, form: LinForm):
        return self * SparsePoly.from_linform(form)

    def divide_exact(self, form: LinForm):
        """Exact quotient self / form, or None if the division is not exact."""
        pivot = next(i for i, c in enumerate(form.coeffs) if c != 0)
        cp = Fraction(form.coeffs[pivot])
        rest = dict(self.terms)
        quotient = {}
        while rest:
            e = max(rest, key=lambda t: (t[pivot], t))
            if e[pivot] == 0:
                return None
            qe = tuple(x - (1 if i == pivot else 0) for i, x in enumerate(e))
            qc = rest[e] / cp
            quotient[qe] = quotient.get(qe, Fraction(0)) + qc
            # subtract qc * x^qe * form
            for i, fc in enumerate(form.coeffs):
                if fc == 0:
                    continue
                te = tuple(x + (1 if j == i else 0) for j, x in enumerate(qe))
                s = rest.get(te, Fraction(0)) - qc * fc
                if s:
                    rest[te] = s
                else:
                    rest.pop(te, None)
        return SparsePoly(self.nvars, quotient)

    def substitute(self, images):
        """Replace variable a_i by the linear form images[i]."""
        image_polys = [SparsePoly.from_linform(f) for f in images]
        power_cache = [{0: SparsePoly.constant(self.nvars, 1)} for _ in images]

        def power(i, k):
            cache = power_cache[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * image_polys[i]
            return cache[k]

        out = SparsePoly.zero(self.nvars)
        for e, c in self.terms.items():
            term = SparsePoly.constant(self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def content_and_primitive(self):
        """Split as ``c * P`` with P having coprime integer coefficients.

        The sign of c is chosen so that P's leading printed term is positive.
        Zero splits as (0, 0).
        """
        if not self.terms:
            return Fraction(0), self
        den_lcm = 1
        for c in self.terms.values():
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        num_gcd = reduce(gcd, (abs(c.numerator) for c in self.terms.values()))
        content = Fraction(num_gcd, den_lcm)
        lead = max(self.terms, key=_term_sort_key)
        if self.terms[lead] < 0:
            content = -content
        return content, self.scale(1 / content)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _term_sort_key(item[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (f"a{i}" if k == 1 else f"a{i}^{k}") for i, k in enumerate(e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def _monomial_str(e, c):
    mono = "*".join((f"a{i}" if k == 1 else f"a{i}^{k}") for i, k in enumerate(e) if k)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    return f"{c}*{mono}"


class RatFunc:
    """Rational function num / prod(denominator forms), kept normalized.

    Normal form: every denominator factor is primitive with positive leading
    coefficient (sign and content are absorbed into the numerator), no factor
    divides the numerator exactly, and the factor multiset is sorted.
    """

    __slots__ = ("nvars", "num", "den")

    def __init__(self, num: SparsePoly, den=()):
        nvars = num.nvars
        work = num
        factors = []
        for form in den:
            if form.nvars != nvars:
                raise ValueError("variable count mismatch between numerator and denominator")
            c, canon = form.content_and_canonical()
            work = work.scale(Fraction(1, c))
            factors.append(canon)
        if work.is_zero():
            factors = []
        else:
            reduced = []
            for form in sorted(factors, key=_form_sort_key):
                q = work.divide_exact(form)
                if q is not None:
                    work = q
                else:
                    reduced.append(form)
            factors = reduced
        self.nvars = nvars
        self.num = work
        self.den = tuple(sorted(factors, key=_form_sort_key))

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(SparsePoly.zero(nvars))

    @classmethod
    def one(cls, nvars):
        return cls(SparsePoly.constant(nvars, 1))

    @classmethod
    def constant(cls, nvars, value):
        return cls(SparsePoly.constant(nvars, value))

    @classmethod
    def from_linform(cls, form: LinForm):
        return cls(SparsePoly.from_linform(form))

    @classmethod
    def inverse_linform(cls, form: LinForm):
        return cls(SparsePoly.constant(form.nvars, 1), (form,))

    # -- predicates -----------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return not self.den and self.num.is_constant() and self.num.constant_value() == 1

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.nvars == other.nvars
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic -----------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        self._check(other)
        from collections import Counter

        mine, theirs = Counter(self.den), Counter(other.den)
        common = mine | theirs
        extra_self = common - mine
        extra_other = common - theirs
        num = self.num
        for form, k in sorted(extra_self.items(), key=lambda t: _form_sort_key(t[0])):
            for _ in range(k):
                num = num.mul_linform(form)
        onum = other.num
        for form, k in sorted(extra_other.items(), key=lambda t: _form_sort_key(t[0])):
            for _ in range(k):
                onum = onum.mul_linform(form)
        return RatFunc(num + onum, tuple(common.elements()))

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num.scale(other), self.den)
        self._check(other)
        return RatFunc(self.num * other.num, self.den + other.den)

    def mul_linform(self, form: LinForm):
        """Multiply by a linear form (cancels against the denominator first)."""
        c, canon = form.content_and_canonical()
        if canon in self.den:
            den = list(self.den)
            den.remove(canon)
            return RatFunc(self.num.scale(c), tuple(den))
        return RatFunc(self.num.mul_linform(form), self.den)

    def mul_inv_linform(self, form: LinForm):
        """Multiply by 1 / form."""
        return RatFunc(self.num, self.den + (form,))

    def substitute(self, images):
        """Apply the linear substitution a_i -> images[i] (must be invertible)."""
        images = tuple(images)
        if len(images) != self.nvars:
            raise ValueError("substitution must provide one image per variable")
        if _det([list(f.coeffs) for f in images]) == 0:
            raise ValueError("substitution is not invertible")
        num = self.num.substitute(images)
        den = []
        for form in self.den:
            coeffs = [0] * self.nvars
            for i, c in enumerate(form.coeffs):
                if c:
                    for j, fc in enumerate(images[i].coeffs):
                        coeffs[j] += c * fc
            den.append(LinForm(tuple(coeffs)))
        return RatFunc(num, tuple(den))

    def evaluate(self, point):
        d = Fraction(1)
        for form in self.den:
            v = form.evaluate(point)
            if v == 0:
                raise ZeroDivisionError("point lies on a denominator hyperplane")
            d *= v
        return self.num.evaluate(point) / d

    def equals(self, other) -> bool:
        """Equality as rational functions, by cross-multiplication."""
        self._check(other)
        if self.num is other.num and self.den == other.den:
            return True
        if (self.num, self.den) == (other.num, other.den):
            return True
        left = self.num
        for form in other.den:
            left = left.mul_linform(form)
        right = other.num
        for form in self.den:
            right = right.mul_linform(form)
        return left == right

    def homogeneous_degree(self):
        """deg(num) - #den if the numerator is homogeneous, else None.

        Zero input is rejected: the zero function has no degree.
        """
        if self.is_zero():
            raise ValueError("zero has no homogeneous degree")
        if not self.num.is_homogeneous():
            return None
        return self.num.total_degree() - len(self.den)

    # -- canonical string -------------------------------------------------

    def to_canonical_string(self) -> str:
        if self.num.is_zero():
            return "0"
        content, prim = self.num.content_and_primitive()
        terms = prim.sorted_terms()
        if len(terms) == 1 and sum(terms[0][0]) == 0:
            numstr = str(content)
        elif len(terms) == 1:
            e, c = terms[0]
            coeff = content * c
            sign = "-" if coeff < 0 else ""
            numstr = sign + _monomial_str(e, abs(coeff))
        else:
            body = f"({prim})"
            if content == 1:
                numstr = body
            elif content == -1:
                numstr = "-" + body
            else:
                numstr = f"{content}*{body}"
        if not self.den:
            return numstr
        denstr = "".join(f"({form})" for form in self.den)
        return f"{numstr} / {denstr}"

    def __str__(self):
        return self.to_canonical_string()

    def __repr__(self):
        return f"RatFunc({self.to_canonical_string()!r})"


def _det(matrix):
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def identity_substitution(nvars):
    out = []
    for i in range(nvars):
        coeffs = [0] * nvars
        coeffs[i] = 1
        out.append(LinForm(tuple(coeffs)))
    return tuple(out)


# -- parsing ---------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.text = text
        self.pos = 0
        self.nvars = nvars

    def error(self, message):
        raise RatFuncParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def variable(self):
        self.skip_ws()
        if self.peek() != "a":
            self.error("expected variable")
        self.pos += 1
        idx = self.integer()
        if idx >= self.nvars:
            self.error(f"variable a{idx} out of range")
        return idx

    def lookahead_is_int(self):
        save = self.pos
        self.skip_ws()
        ok = self.pos < len(self.text) and self.text[self.pos].isdigit()
        self.pos = save
        return ok

    def term(self):
        """One signed-free term: coefficient and/or variable powers."""
        coeff = Fraction(1)
        e = [0] * self.nvars
        saw_factor = False
        if self.lookahead_is_int():
            coeff = Fraction(self.integer())
            saw_factor = True
            if self.peek() == "/":
                save = self.pos
                self.pos += 1
                if self.lookahead_is_int():
                    coeff /= self.integer()
                else:
                    self.pos = save
            if self.peek() == "*":
                self.pos += 1
            elif self.peek() == "a":
                self.error("missing '*' between coefficient and variable")
            else:
                return coeff, tuple(e)
        while self.peek() == "a":
            idx = self.variable()
            power = 1
            if self.peek() == "^":
                self.pos += 1
                power = self.integer()
            e[idx] += power
            saw_factor = True
            if self.peek() == "*":
                self.pos += 1
        if not saw_factor:
            self.error("expected term")
        return coeff, tuple(e)

    def poly(self):
        terms = {}
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        elif self.peek() == "+":
            self.pos += 1
        while True:
            coeff, e = self.term()
            coeff *= sign
            acc = terms.get(e, Fraction(0)) + coeff
            if acc:
                terms[e] = acc
            else:
                terms.pop(e, None)
            nxt = self.peek()
            if nxt == "+":
                sign = 1
                self.pos += 1
            elif nxt == "-":
                sign = -1
                self.pos += 1
            else:
                break
        return SparsePoly(self.nvars, terms)

    def linform(self, poly):
        coeffs = [0] * self.nvars
        for e, c in poly.terms.items():
            if sum(e) != 1:
                self.error("denominator factor is not linear")
            if c.denominator != 1:
                self.error("denominator factor has non-integer coefficient")
            coeffs[e.index(1)] = int(c)
        return LinForm(tuple(coeffs))

    def numerator(self):
        """Either scalar*(poly), -(poly), (poly), or a bare polynomial."""
        save = self.pos
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        if self.lookahead_is_int():
            scalar = Fraction(self.integer())
            if self.peek() == "/":
                mark = self.pos
                self.pos += 1
                if self.lookahead_is_int():
                    scalar /= self.integer()
                else:
                    self.pos = mark
            if self.peek() == "*":
                self.pos += 1
                if self.peek() == "(":
                    self.pos += 1
                    p = self.poly()
                    self.expect(")")
                    return p.scale(sign * scalar)
            self.pos = save
        elif self.peek() == "(":
            self.pos += 1
            p = self.poly()
            self.expect(")")
            return p.scale(sign)
        else:
            self.pos = save
        return self.poly()

    def parse(self):
        num = self.numerator()
        den = []
        if self.peek() == "/":
            self.pos += 1
            if self.peek() != "(":
                self.error("expected denominator factor list")
            while self.peek() == "(":
                self.pos += 1
                form = self.linform(self.poly())
                self.expect(")")
                den.append(form)
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return RatFunc(num, tuple(den))


def parse(text: str, nvars: int) -> RatFunc:
    """Parse the canonical string grammar back into a RatFunc.

    >>> str(parse("8 / (a0)(a0 + 2*a2)", 3))
    '8 / (a0)(a0 + 2*a2)'
    >>> str(parse("1/2*(a0 + a1)", 2))
    '1/2*(a0 + a1)'
    """
    return _Parser(text, nvars).parse()
