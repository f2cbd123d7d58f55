import random
from fractions import Fraction

import pytest

from grass_slice.ratfunc import (
    LinForm,
    RatFunc,
    RatFuncParseError,
    SparsePoly,
    identity_substitution,
    parse,
)

A0 = LinForm((1, 0, 0))
A1 = LinForm((0, 1, 0))
A2 = LinForm((0, 0, 1))


def rf(text, nvars=3):
    return parse(text, nvars)


def random_point(rng, value, tries=200):
    """A rational point where every denominator factor of value is nonzero."""
    for _ in range(tries):
        point = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(value.nvars))
        if all(form.evaluate(point) != 0 for form in value.den):
            return point
    raise AssertionError("no usable evaluation point found")


def random_ratfunc(rng, nvars=3):
    nterms = rng.randint(1, 4)
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, 2) for _ in range(nvars))
        terms[e] = terms.get(e, 0) + Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    num = SparsePoly(nvars, terms)
    pool = [
        LinForm((1, 0, 0)),
        LinForm((0, 1, 0)),
        LinForm((0, 0, 1)),
        LinForm((1, 1, 0)),
        LinForm((1, 2, 1)),
        LinForm((0, 1, -1)),
        LinForm((2, 0, 3)),
    ]
    den = tuple(rng.choice(pool) for _ in range(rng.randint(0, 3)))
    return RatFunc(num, den)


# -- add -------------------------------------------------------------------


def test_add_common_denominator_identity():
    left = rf("1 / (a0)") + rf("1 / (a1)")
    assert left.equals(rf("(a0 + a1) / (a0)(a1)"))
    assert str(left) == "(a0 + a1) / (a0)(a1)"


def test_add_zero_is_identity():
    rng = random.Random(1)
    zero = RatFunc.zero(3)
    for _ in range(10):
        f = random_ratfunc(rng)
        assert (f + zero).equals(f)


def test_add_cancels_to_one():
    a = rf("(a0 + a1) / (a0)")
    b = rf("-a1 / (a0)")
    f = a + b
    assert f.is_one()
    # cross-multiplication oracle against 1: num_f * 1 == 1 * den_f
    assert f.equals(RatFunc.one(3))
    # and the shared-denominator sum of numerators is exactly a0
    assert (a.num + b.num) == SparsePoly.from_linform(A0)


# -- mul -------------------------------------------------------------------


def test_mul_by_inverse_is_one():
    assert (rf("1 / (a0)") * rf("a0")).is_one()


def test_mul_inv_linform_exact_cancellation():
    f = rf("(a0 + a1)").mul_inv_linform(LinForm((1, 1, 0)))
    assert f.is_one()


def test_square_divided_by_factor():
    square = rf("(a0 + a1)") * rf("(a0 + a1)")
    quotient = square.mul_inv_linform(LinForm((1, 1, 0)))
    assert quotient.equals(rf("(a0 + a1)"))
    # division oracle: quotient * (a0+a1) recovers the square
    assert quotient.mul_linform(LinForm((1, 1, 0))).equals(square)


def test_commutativity_and_distributivity():
    rng = random.Random(2)
    for _ in range(15):
        a, b, c = (random_ratfunc(rng) for _ in range(3))
        assert (a + b).equals(b + a)
        assert (a * b).equals(b * a)
        assert (a * (b + c)).equals(a * b + a * c)


def test_normalization_idempotent():
    rng = random.Random(3)
    for _ in range(20):
        f = random_ratfunc(rng)
        again = RatFunc(f.num, f.den)
        assert again.num == f.num and again.den == f.den


# -- substitution -----------------------------------------------------------


def test_substitute_sign_flip():
    f = rf("1 / (a1)")
    flipped = f.substitute((A0, -A1, A2))
    assert flipped.equals(rf("-1 / (a1)"))


def test_substitute_identity():
    f = rf("a0")
    assert f.substitute(identity_substitution(3)).equals(f)


def test_substitute_rejects_singular_map():
    with pytest.raises(ValueError):
        rf("a0").substitute((A0, A0, A2))


def test_substitute_simple_reflection_matches_evaluation():
    # the double-bond reflection of the C2 affine diagram acts on display
    # variables by a0 -> a0+2a1, a1 -> -a1, a2 -> a2+2a1
    value = rf("8 / (a0)(a0 + 2*a1)(a0 + 2*a1 + 2*a2)(a0 + 4*a1 + 2*a2)")
    images = (LinForm((1, 2, 0)), -A1, LinForm((0, 2, 1)))
    moved = value.substitute(images)
    rng = random.Random(4)
    for _ in range(20):
        point = random_point(rng, moved)
        image_point = tuple(form.evaluate(point) for form in images)
        # guard: original denominators must not vanish at the image point
        if any(form.evaluate(image_point) == 0 for form in value.den):
            continue
        assert moved.evaluate(point) == value.evaluate(image_point)


def test_substitute_inverse_roundtrip():
    rng = random.Random(5)
    sigma = (LinForm((1, 1, 0)), LinForm((0, 1, 0)), LinForm((0, 1, 1)))
    sigma_inv = (LinForm((1, -1, 0)), LinForm((0, 1, 0)), LinForm((0, -1, 1)))
    for _ in range(10):
        f = random_ratfunc(rng)
        assert f.substitute(sigma).substitute(sigma_inv).equals(f)


# -- equality ----------------------------------------------------------------


def test_equals_reflexive():
    rng = random.Random(6)
    for _ in range(10):
        f = random_ratfunc(rng)
        assert f.equals(f)


def test_equals_across_representations():
    assert rf("(a0 + a1) / (a0)(a1)").equals(rf("1 / (a0)") + rf("1 / (a1)"))


def test_equals_after_common_scaling():
    base = rf("27 / (a0 + a1)(a0 + a1 + 3*a2)(2*a0 + 5*a1 + 6*a2)(2*a0 + 5*a1 + 9*a2)")
    scaled = RatFunc(
        base.num.mul_linform(LinForm((1, 0, 1))),
        base.den + (LinForm((1, 0, 1)),),
    )
    assert base.equals(scaled)


def test_cross_multiplication_agrees_with_evaluation():
    rng = random.Random(7)
    checked_unequal = 0
    for _ in range(30):
        a, b = random_ratfunc(rng), random_ratfunc(rng)
        if a.is_zero() or b.is_zero():
            continue
        # (deg+1)^nvars points suffice to decide polynomial identities
        deg = max(
            (a.num.total_degree() or 0) + len(b.den),
            (b.num.total_degree() or 0) + len(a.den),
        )
        needed = min((deg + 1) ** a.nvars, 150)
        points = []
        while len(points) < needed:
            point = random_point(rng, a)
            if all(form.evaluate(point) != 0 for form in b.den):
                points.append(point)
        same_values = all(a.evaluate(p) == b.evaluate(p) for p in points)
        if a.equals(b):
            assert same_values
        elif not same_values:
            checked_unequal += 1
    # make sure the sample actually exercised the unequal branch
    assert checked_unequal > 10
    # an equal pair in different representations, checked both ways
    f = rf("(a0 + a1) / (a0)(a1)")
    g = rf("1 / (a0)") + rf("1 / (a1)")
    assert f.equals(g) and g.equals(f)
    points = [random_point(rng, f) for _ in range(64)]
    assert all(f.evaluate(p) == g.evaluate(p) for p in points)


# -- homogeneous degree -------------------------------------------------------


def test_homogeneous_degree_examples():
    c2 = rf("8 / (a0)(a0 + 2*a2)(a0 + 2*a1 + 2*a2)(a0 + 2*a1 + 4*a2)")
    assert c2.homogeneous_degree() == -4
    assert RatFunc.one(3).homogeneous_degree() == 0
    a2_formula = rf(
        "2*(3*a0^2 + 6*a0*a1 + 2*a1^2 + 6*a0*a2 + 5*a1*a2 + 2*a2^2)"
        " / (a0)(a0 + a1)(a0 + a2)(a0 + 2*a1 + a2)(a0 + a1 + 2*a2)(a0 + 2*a1 + 2*a2)"
    )
    assert a2_formula.homogeneous_degree() == -4


def test_homogeneous_degree_inhomogeneous_and_zero():
    assert rf("a0 + 1").homogeneous_degree() is None
    with pytest.raises(ValueError):
        RatFunc.zero(3).homogeneous_degree()


# -- strings -------------------------------------------------------------------


def test_canonical_strings():
    assert str(rf("1 / (a0)")) == "1 / (a0)"
    c2 = "8 / (a0)(a0 + 2*a2)(a0 + 2*a1 + 2*a2)(a0 + 2*a1 + 4*a2)"
    assert str(rf(c2)) == c2


def test_numerator_term_order_matches_printed_form():
    text = "2*(3*a0^2 + 6*a0*a1 + 2*a1^2 + 6*a0*a2 + 5*a1*a2 + 2*a2^2)"
    assert str(rf(text)) == text


def test_roundtrip_random():
    rng = random.Random(8)
    for _ in range(100):
        f = random_ratfunc(rng)
        g = parse(f.to_canonical_string(), f.nvars)
        assert g.num == f.num and g.den == f.den


def test_parse_error_position():
    with pytest.raises(RatFuncParseError) as info:
        parse("1 / a0", 3)
    assert info.value.pos >= 3
    with pytest.raises(RatFuncParseError):
        parse("(a0 + ) ", 3)
    with pytest.raises(RatFuncParseError):
        parse("a7", 3)


def test_variable_count_mismatch_rejected():
    with pytest.raises(ValueError):
        rf("a0", 2) + rf("a0", 3)
