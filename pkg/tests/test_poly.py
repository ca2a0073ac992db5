"""Field and polynomial substrate: arithmetic, calculus, gcd, sampling."""

import random
from fractions import Fraction

import pytest

from conftest import gfp, qq, random_poly
from polardeg.errors import DegenerateInputError, FieldMismatchError
from polardeg.fields import GF, QQ, DEFAULT_PRIME
from polardeg.poly import (HomogeneousForm, MultiPoly, euler_contraction,
                           exact_divide, gcd_multivariate, gradient,
                           random_linear_form, substitute_linear)
from polardeg.rand import SeedStream, random_scalar


def test_field_spec_rejects_bad_moduli():
    with pytest.raises(DegenerateInputError):
        GF(1000000)            # composite
    with pytest.raises(DegenerateInputError):
        GF(65537)              # prime but too small
    assert GF(DEFAULT_PRIME).modulus == DEFAULT_PRIME


def test_add_cancellation_and_identity():
    assert qq("x0 + x1") + qq("0 - x1") == qq("x0")
    p = qq("x0^2 - 3*x1")
    assert p + qq("0") == p


def test_add_modular_reduction():
    seven_ish = GF(DEFAULT_PRIME)
    a = MultiPoly.from_terms(seven_ish, 1, [((1,), DEFAULT_PRIME - 2)])
    b = MultiPoly.from_terms(seven_ish, 1, [((1,), 4)])
    assert (a + b).terms == {(1,): 2}


def test_add_rejects_mismatch():
    with pytest.raises(FieldMismatchError):
        qq("x0") + gfp("x0")
    with pytest.raises(FieldMismatchError):
        qq("x0", 2) + qq("x0", 3)


def test_mul_examples():
    assert qq("x0") * qq("x1") == qq("x0*x1")
    assert qq("x0 + x1") * qq("x0 - x1") == qq("x0^2 - x1^2")
    p = qq("2*x0^3 - x2")
    assert p * qq("1") == p


def test_mul_degree_additive_on_homogeneous():
    p, q = qq("x0*x1 + x2^2"), qq("x0 + x1")
    assert (p * q).total_degree() == 3
    assert (p * q).is_homogeneous()


def test_partial_derivative_examples():
    assert qq("x0^2*x1").diff(0) == qq("2*x0*x1")
    assert qq("x1^3").diff(0).is_zero()
    assert qq("x0*x1*x2").diff(2) == qq("x0*x1")
    with pytest.raises(ValueError):
        qq("x0").diff(3)


def test_partials_commute():
    rng = random.Random(11)
    for _ in range(25):
        p = random_poly(QQ, 3, 5, 6, rng)
        for i in range(3):
            for j in range(3):
                assert p.diff(i).diff(j) == p.diff(j).diff(i)


def test_euler_contraction_examples():
    assert euler_contraction([qq("x1", 2), qq("0 - x0", 2)]).is_zero()
    assert euler_contraction([qq("x0", 2), qq("x1", 2)]) == qq("x0^2 + x1^2", 2)
    F = qq("x0*x1*x2")
    assert euler_contraction(gradient(F)) == F.scale(Fraction(3))


def test_euler_identity_random_homogeneous():
    # contraction of the gradient returns deg(F) * F, exactly, both fields
    rng = random.Random(7)
    for field in (QQ, GF(DEFAULT_PRIME)):
        for _ in range(20):
            d = rng.randrange(1, 5)
            items = []
            for _ in range(5):
                e0 = rng.randrange(d + 1)
                e1 = rng.randrange(d + 1 - e0)
                items.append(((e0, e1, d - e0 - e1), field.from_int(rng.randrange(1, 9))))
            p = MultiPoly.from_terms(field, 3, items)
            if p.is_zero():
                continue
            assert euler_contraction(gradient(p)) == p.scale(field.from_int(d))


def test_euler_contraction_errors():
    with pytest.raises(ValueError):
        euler_contraction([qq("x0"), qq("x1^2"), qq("x2")])
    with pytest.raises(FieldMismatchError):
        euler_contraction([qq("x0", 2)])


def test_ring_axioms_on_random_triples():
    rng = random.Random(3)
    for field in (QQ, GF(DEFAULT_PRIME)):
        for _ in range(15):
            a = random_poly(field, 2, 3, 4, rng)
            b = random_poly(field, 2, 3, 4, rng)
            c = random_poly(field, 2, 3, 4, rng)
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_gcd_examples():
    assert gcd_multivariate(qq("x0*x1"), qq("x0*x2")) == qq("x0")
    assert gcd_multivariate(qq("x0^2 - x1^2"), qq("x0 - x1")) == qq("x0 - x1")
    assert gcd_multivariate(qq("x0*x1"), qq("0")) == qq("x0*x1")
    assert gcd_multivariate(qq("0"), qq("0")).is_zero()


def test_gcd_of_log_form_coefficients_is_unit():
    # expand the log-derivative coefficients of the coordinate triangle by hand
    a0 = qq("x1") * qq("x2")
    a1 = qq("x0") * qq("x2")
    a2 = qq("x0") * qq("x1")
    g = gcd_multivariate(gcd_multivariate(a0, a1), a2)
    assert g == qq("1")


def test_gcd_divides_and_cofactors_coprime():
    rng = random.Random(23)
    for field in (QQ, GF(DEFAULT_PRIME)):
        for _ in range(12):
            g = random_poly(field, 2, 2, 3, rng)
            a = random_poly(field, 2, 2, 3, rng)
            b = random_poly(field, 2, 2, 3, rng)
            p, q = g * a, g * b
            if p.is_zero() or q.is_zero():
                continue
            d = gcd_multivariate(p, q)
            ca = exact_divide(p, d)
            cb = exact_divide(q, d)
            assert ca * d == p and cb * d == q
            assert gcd_multivariate(ca, cb).is_constant()


def test_substitute_linear_examples():
    one = Fraction(1)
    assert substitute_linear(qq("x0^2", 1), [[one]]) == qq("x0^2", 1)
    M = [[one, Fraction(0)], [one, one]]
    assert substitute_linear(qq("x0*x1", 2), M) == qq("x0^2 + x0*x1", 2)


def test_substitute_linear_random_restriction_keeps_degree():
    # restriction of a random cubic in 4 variables to a random plane,
    # cross-checked against evaluation at random points
    rng = random.Random(5)
    F = GF(DEFAULT_PRIME)
    p = MultiPoly.from_terms(F, 4, (
        (tuple(e), rng.randrange(1, DEFAULT_PRIME))
        for e in [(3, 0, 0, 0), (0, 2, 1, 0), (1, 1, 1, 0), (0, 0, 1, 2), (1, 0, 0, 2)]))
    M = [[rng.randrange(DEFAULT_PRIME) for _ in range(3)] for _ in range(4)]
    q = substitute_linear(p, M)
    assert q.total_degree() == 3 and q.is_homogeneous()
    for _ in range(5):
        z = [rng.randrange(DEFAULT_PRIME) for _ in range(3)]
        x = [sum(M[r][c] * z[c] for c in range(3)) % DEFAULT_PRIME for r in range(4)]
        assert q.evaluate(z) == p.evaluate(x)


def test_substitute_linear_functorial_composition():
    # restricting twice equals restricting along the composed embedding
    rng = random.Random(61)
    F = GF(DEFAULT_PRIME)
    p = random_poly(F, 4, 3, 6, rng)
    M = [[rng.randrange(DEFAULT_PRIME) for _ in range(3)] for _ in range(4)]
    N = [[rng.randrange(DEFAULT_PRIME) for _ in range(2)] for _ in range(3)]
    MN = [[sum(M[r][t] * N[t][c] for t in range(3)) % DEFAULT_PRIME
           for c in range(2)] for r in range(4)]
    assert substitute_linear(substitute_linear(p, M), N) == substitute_linear(p, MN)


def test_substitute_linear_is_ring_homomorphism():
    rng = random.Random(29)
    F = GF(DEFAULT_PRIME)
    M = [[rng.randrange(DEFAULT_PRIME) for _ in range(2)] for _ in range(3)]
    for _ in range(10):
        a = random_poly(F, 3, 3, 4, rng)
        b = random_poly(F, 3, 3, 4, rng)
        assert substitute_linear(a + b, M) == substitute_linear(a, M) + substitute_linear(b, M)
        assert substitute_linear(a * b, M) == substitute_linear(a, M) * substitute_linear(b, M)


def test_homogeneous_form_markers():
    f = HomogeneousForm.of(qq("x0^2 + x1*x2"))
    assert f.degree == 2
    z = HomogeneousForm.of(qq("0"))
    assert z.degree == -1 and z.is_zero()
    with pytest.raises(ValueError):
        HomogeneousForm.of(qq("x0 + x1^2"))
    with pytest.raises(ValueError):
        HomogeneousForm(qq("0"), 3)


def test_random_stream_determinism():
    F = GF(DEFAULT_PRIME)
    a = [random_scalar(F, SeedStream(42)) for _ in range(10)]
    b = [random_scalar(F, SeedStream(42)) for _ in range(10)]
    assert a == b


def test_random_streams_distinct_seeds_collide_nowhere_close():
    F = GF(DEFAULT_PRIME)
    s1, s2 = SeedStream(1), SeedStream(2)
    a = [random_scalar(F, s1) for _ in range(10**4)]
    b = [random_scalar(F, s2) for _ in range(10**4)]
    assert a != b
    collisions = sum(x == y for x, y in zip(a, b))
    assert collisions < 10


def test_random_scalar_rejects_rationals():
    with pytest.raises(DegenerateInputError):
        random_scalar(QQ, SeedStream(0))


def test_random_linear_form_nonzero():
    F = GF(DEFAULT_PRIME)
    stream = SeedStream(9)
    for _ in range(20):
        form = random_linear_form(F, 3, stream)
        assert form.degree == 1 and not form.is_zero()
