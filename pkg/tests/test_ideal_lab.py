import json
from fractions import Fraction

import pytest

from trefoil_skein import ideal_lab as il
from trefoil_skein.exactcoeff import LaurentT
from trefoil_skein.quantum_torus import QTorusPoly
from trefoil_skein.torus_skein import TorusSkein, mul
from trefoil_skein.trefoil_module import Chirality, pi

T = LaurentT.mono
C = TorusSkein.curve
LEFT, RIGHT = Chirality.LEFT, Chirality.RIGHT

Q_MINUS_6 = (C(1, -6) + C(1, -4, T(-2)) - C(1, -2, T(-8)) - C(1, 0, T(-10)) + C(0, 6, T(-4))
             + C(0, 4, T(-4)) - C(0, 2) - TorusSkein.scalar(2))


def test_tau_both_chiralities():
    assert il.tau(RIGHT) == C(1, 5) - C(1, 1, T(8)) + C(0, 5, T(3)) - C(0, 1, T(-1))
    for c in (LEFT, RIGHT):
        assert pi(il.tau(c), c).is_zero()


def test_generator_sets():
    for c in (LEFT, RIGHT):
        gs = il.kernel_gens(c)
        assert gs.generic_t_only and len(gs) == 3
        assert gs[0] == il.tau(c)
        for g in gs:
            assert pi(g, c).is_zero()
    assert il.kernel_gens(RIGHT)[1] == (C(2, 6) - C(1, 0, T(6) + T(-6)) + C(1, 6, T(4) + T(-4))
                                           + C(0, 6) - TorusSkein.scalar((T(4) + T(-4)).scale(2)))


def test_literal_third_generator_is_not_in_kernel():
    literal = il.kernel_gens(LEFT, literal_sign=True)[2]
    assert not pi(literal).is_zero()
    with pytest.raises(il.VerificationError):
        il.GeneratorSet(LEFT, [literal])


def test_phi():
    for q in range(-10, 11):
        assert pi(il.phi(q)).is_zero()
    x = C(0, 1)
    for q in range(-9, 10):
        assert mul(x, il.phi(q)) == il.phi(q + 1).scale(T(-1)) + il.phi(q - 1).scale(T(1))
    assert il.proportional(il.phi(-3), il.tau()) == -(T(6) + T(2))


def test_q_minus_6_element_is_x_times_tau():
    assert pi(Q_MINUS_6).is_zero()
    # equal to (0,1)*tau up to the unit t
    assert mul(C(0, 1), il.tau()) == Q_MINUS_6.scale(T(1))


def test_kernel_basis_examples():
    assert il.kernel_basis(0, (-6, 6)) == []
    basis = il.kernel_basis(1, (-6, 5))
    for g in basis:
        assert pi(g).is_zero()
    for target in (il.tau(), Q_MINUS_6):
        cert = il.skein_membership(target, basis, 0, 0, multipliers=[TorusSkein.one()])
        assert cert and cert.verify()


def test_kernel_basis_monotone():
    small = il.kernel_basis(1, (-8, 0))
    big = il.kernel_basis(1, (-10, 2))
    for g in small:
        assert il.skein_membership(g, big, 0, 0, multipliers=[TorusSkein.one()])


def test_skein_membership_examples():
    gens = il.GeneratorSet(LEFT, [il.tau()], ["tau"])
    cert = il.skein_membership(il.tau(), gens, 0, 0)
    assert cert.combination == [(TorusSkein.one(), LaurentT.one(), 0)]
    cert = il.skein_membership(Q_MINUS_6, gens, 0, 2)
    assert cert.bound == (0, 1)
    assert [(str(mlt), c) for mlt, c, _ in cert.combination] == [("T(0,1)", T(-1))]
    mults = [TorusSkein.one()] + [C(0, k) for k in range(1, 12)]
    for q in range(-8, 9):
        assert il.skein_membership(il.phi(q), gens, 0, 0, multipliers=mults)
    miss = il.skein_membership(C(1, 0), gens, 1, 2)
    assert not miss and miss.bound == (1, 2)


def test_certificate_json_round_trip():
    gens = [il.tau()]
    cert = il.skein_membership(Q_MINUS_6, gens, 0, 2)
    back = il.Certificate.from_json(json.loads(json.dumps(cert.to_json())), gens)
    assert back.verify() and back.combination == cert.combination


def test_aideal_gens_and_unit():
    l, m = QTorusPoly.l(), QTorusPoly.m()
    g2 = il.aideal_gens(LEFT)[1]
    expected = QTorusPoly.one()
    for f in (l + QTorusPoly.scalar(T(24)), l + QTorusPoly.scalar(T(10)), l + QTorusPoly.scalar(T(2)),
              l - QTorusPoly.scalar(T(6)) * m ** 6):
        expected = expected * f
    assert g2 == expected
    c, k = il.verify_aideal_gen1(LEFT)
    assert c == -1
    assert il.verify_aideal_gen1(RIGHT) is not None


def test_tampered_generator_has_no_unit():
    g = il.aideal_gens(LEFT)[0]
    key = next(iter(g.terms))
    tampered = QTorusPoly({**g.terms, key: -g.terms[key]})
    with pytest.raises(il.VerificationError):
        il.verify_aideal_gen1(LEFT, tampered)


def test_plane_membership_examples():
    gens = il.aideal_gens(LEFT)
    cert = il.plane_membership(gens[1], gens, 0, 0)
    assert cert and cert.verify()
    miss = il.plane_membership(QTorusPoly.one(), gens, 2, 3)
    assert not miss and miss.bound == (2, 3)


def test_plane_membership_of_second_generator():
    planes = il.cleared_images(il.kernel_gens(LEFT))
    cert = il.plane_membership(il.aideal_gens(LEFT)[1], planes, 6, 14)
    assert cert and cert.verify()
    assert cert.bound[0] <= 6 and cert.bound[1] <= 14


def test_t_minus_one():
    for c in (LEFT, RIGHT):
        sk, plane = il.t_minus1_gens(c)
        for g in sk:
            assert pi(g, c).specialize(-1).is_zero()
        cleared = il.cleared_images(sk)
        for g in plane:
            assert il.plane_membership(g, cleared, 3, 6)
    # the element with the extra constant is not in the kernel at t = -1
    bad = C(1, -4) - C(1, -2) + C(0, 4) - C(0, 2) - TorusSkein.scalar(2)
    assert not pi(bad).specialize(-1).is_zero()


def test_classical_common_factor():
    assert str(il.classical_common_factor(LEFT)) == "(l - 1)*(l + m^6)"
    assert str(il.classical_common_factor(RIGHT)) == "(l - 1)*(l*m^6 + 1)"
    l, m = QTorusPoly.l(), QTorusPoly.m()
    gen = [l - QTorusPoly.one(), l + m ** 2]
    res = il.classical_common_factor(LEFT, [gen, gen])
    assert len(res.factors) == 2


def test_check_t_value():
    assert il.check_t_value(2) == 2
    assert il.check_t_value(-1, allow_minus_one=True) == -1
    for bad in (1, -1, 0):
        with pytest.raises(il.IllegalSpecialization):
            il.check_t_value(bad)
    assert il.check_t_value(Fraction(1, 2)) == Fraction(1, 2)
