from fractions import Fraction

import pytest
from hypothesis import given

from strategies import laurent, nonzero_laurent
from trefoil_skein.exactcoeff import LaurentT, RatFuncT, as_ratfunc, nullspace, simplify_coeff, solve_linear

t = LaurentT.mono(1)
T = LaurentT.mono


def test_cancellation_and_exponent_law():
    assert (t + T(-1)) + (-T(-1)) == t
    assert (T(4) - T(-4)) * (T(4) + T(-4)) == T(8) - T(-8)
    assert T(2) * T(-2) == LaurentT.one()


def test_zero_is_empty():
    assert LaurentT({3: 0, -1: 0}).terms == {}
    assert not (t - t)


def test_specialize_examples():
    assert (T(4) - T(-4)).specialize(-1) == 0
    assert (T(8) - 1).specialize(-1) == 0
    assert (T(4) - T(-4)).specialize(2) == Fraction(255, 16)
    with pytest.raises(ZeroDivisionError):
        T(-1).specialize(0)


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == LaurentT.zero()


@given(laurent, laurent)
def test_specialize_is_a_homomorphism(a, b):
    for t0 in (Fraction(2), Fraction(-3, 2)):
        assert (a * b).specialize(t0) == a.specialize(t0) * b.specialize(t0)
        assert (a + b).specialize(t0) == a.specialize(t0) + b.specialize(t0)


@given(laurent)
def test_json_and_invert_round_trip(a):
    assert LaurentT.from_json(a.to_json()) == a
    assert a.invert_t().invert_t() == a


def test_ratfunc_examples():
    f = T(4) - T(-4)
    assert RatFuncT(LaurentT.one(), f) * f == 1
    assert as_ratfunc(t) + as_ratfunc(-t) == 0
    assert simplify_coeff(RatFuncT(T(8) - T(-8), f)) == T(4) + T(-4)
    assert as_ratfunc(T(8) - T(-8)) / f == T(4) + T(-4)


@given(laurent, nonzero_laurent)
def test_ratfunc_canonical_form(a, b):
    r = RatFuncT(a, b)
    assert r.normalize() == r
    assert r.normalize().normalize() == r.normalize()
    assert r * b == a
    assert RatFuncT.from_json(r.to_json()) == r


def test_ratfunc_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFuncT(t, LaurentT.zero())


def test_solve_linear_examples():
    one = LaurentT.one()
    zero = LaurentT.zero()
    assert solve_linear([[one, zero], [zero, one]], [one, t]) == [1, t]
    (v,) = solve_linear([[one, t], [T(-1), one]])
    # proportional to (t, -1)
    assert simplify_coeff(v[0] / v[1]) == -t
    assert solve_linear([[one], [zero]], [zero, one]) is None
    with pytest.raises(ValueError):
        solve_linear([[one]], [one, one])


def test_nullspace_vectors_are_in_kernel():
    A = [[t, T(2), LaurentT.one()], [LaurentT.one(), t, T(-1)]]
    for v in nullspace(A):
        for row in A:
            assert sum((as_ratfunc(a) * x for a, x in zip(row, v)), as_ratfunc(0)) == 0


def test_solution_substitutes_back():
    A = [[t, LaurentT.one(), T(3)], [T(-1), t + 1, LaurentT.zero()], [LaurentT.one(), LaurentT.one(), LaurentT.one()]]
    b = [T(2), LaurentT.one(), t]
    x = solve_linear(A, b)
    for row, bi in zip(A, b):
        assert sum((as_ratfunc(a) * xi for a, xi in zip(row, x)), as_ratfunc(0)) == bi
