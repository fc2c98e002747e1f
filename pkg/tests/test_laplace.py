"""CK extensions, the trace operator and its inverse, and the Poisson solver."""

import random
from fractions import Fraction

import pytest

from slab_harmonics import (
    MultiPoly,
    even_ck_extension,
    invert_trace_operator,
    odd_ck_extension,
    poisson_solve,
    trace_operator,
    variables,
)
from slab_harmonics.randgen import random_harmonic_poly, random_tfree_poly

F = Fraction


def test_even_ck_examples():
    t, y1 = variables(1)
    assert even_ck_extension(y1 * y1) == y1 * y1 - t * t
    assert even_ck_extension(MultiPoly.constant(1, 1)) == MultiPoly.constant(1, 1)
    assert even_ck_extension(y1 ** 4) == y1 ** 4 - (t * t * y1 * y1).scale(6) + t ** 4


def test_odd_ck_examples():
    t, y1 = variables(1)
    assert odd_ck_extension(y1 * y1) == t * y1 * y1 - (t ** 3).scale(F(1, 3))
    assert odd_ck_extension(MultiPoly.constant(1, 1)) == t
    assert odd_ck_extension(y1) == t * y1


def test_ck_rejects_t_dependent_input():
    t, _ = variables(1)
    with pytest.raises(ValueError):
        even_ck_extension(t)
    with pytest.raises(ValueError):
        odd_ck_extension(t * t)


def test_ck_cauchy_data_random():
    rng = random.Random(7)
    zero = {d: MultiPoly.zero(d) for d in (1, 2, 3)}
    for _ in range(30):
        d = rng.randint(1, 3)
        f = random_tfree_poly(rng, d, 9)
        h_even = even_ck_extension(f)
        h_odd = odd_ck_extension(f)
        assert h_even.laplacian() == zero[d]
        assert h_odd.laplacian() == zero[d]
        assert h_even.trace(0) == f
        assert h_even.derivative(0).trace(0) == zero[d]
        assert h_odd.trace(0) == zero[d]
        assert h_odd.derivative(0).trace(0) == f
        assert h_even.negate_t() == h_even
        assert h_odd.negate_t() == -h_odd


def test_ck_uniqueness_decomposition():
    # any harmonic P equals EvenCK(P(0,.)) + OddCK(dP/dt(0,.))
    rng = random.Random(11)
    for _ in range(25):
        d = rng.randint(1, 3)
        p = random_harmonic_poly(rng, d, 8)
        rebuilt = even_ck_extension(p.trace(0)) + odd_ck_extension(
            p.derivative(0).trace(0)
        )
        assert rebuilt == p


def test_trace_operator_examples():
    _, y1 = variables(1)
    assert trace_operator(1, y1 * y1 + MultiPoly.constant(1, F(1, 3))) == y1 * y1
    assert trace_operator(1, y1) == y1  # harmonic data passes through at c=1
    assert trace_operator(F(1, 2), y1 * y1) == (y1 * y1).scale(F(1, 2)) - MultiPoly.constant(1, F(1, 24))


def test_invert_trace_operator_examples():
    _, y1 = variables(1)
    assert invert_trace_operator(1, y1 * y1) == y1 * y1 + MultiPoly.constant(1, F(1, 3))
    assert invert_trace_operator(1, y1) == y1
    assert invert_trace_operator(
        F(1, 2), (y1 * y1).scale(F(-1, 2)) + MultiPoly.constant(1, F(1, 24))
    ) == -(y1 * y1)


def test_invert_trace_operator_rejects_zero_height():
    _, y1 = variables(1)
    with pytest.raises(ValueError):
        invert_trace_operator(0, y1)


def test_trace_operator_round_trip_random():
    rng = random.Random(23)
    for _ in range(30):
        d = rng.randint(1, 3)
        c = F(rng.randint(1, 5), rng.randint(1, 4)) * rng.choice((1, -1))
        g = random_tfree_poly(rng, d, 9)
        assert invert_trace_operator(c, trace_operator(c, g)) == g
        assert trace_operator(c, invert_trace_operator(c, g)) == g


def test_operators_are_linear():
    rng = random.Random(5)
    for op in (
        even_ck_extension,
        odd_ck_extension,
        lambda p: trace_operator(F(3, 2), p),
        lambda p: invert_trace_operator(F(3, 2), p),
        poisson_solve,
    ):
        for _ in range(5):
            d = rng.randint(1, 3)
            p = random_tfree_poly(rng, d, 7)
            q = random_tfree_poly(rng, d, 7)
            a = F(rng.randint(-4, 4), rng.randint(1, 3))
            assert op(p.scale(a) + q) == op(p).scale(a) + op(q)


def test_poisson_examples():
    _, y1 = variables(1)
    assert poisson_solve(MultiPoly.constant(1, 1)) == (y1 * y1).scale(F(1, 2))
    assert poisson_solve(y1 * y1) == (y1 ** 4).scale(F(1, 12))
    t2, u1, u2 = variables(2)
    assert poisson_solve(u1 * u2) == ((u1 * u1 + u2 * u2) * u1 * u2).scale(F(1, 12))


def test_poisson_residual_random():
    rng = random.Random(99)
    for d in (1, 2, 3, 4):
        for _ in range(10):
            f = random_tfree_poly(rng, d, 10)
            g = poisson_solve(f)
            assert g.laplacian_y() == f  # poisson_solve also self-checks this
