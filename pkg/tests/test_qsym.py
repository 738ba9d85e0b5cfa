from hypothesis import given

from immaculate import nsym, qsym
from immaculate.compositions import Composition, compositions_of
from immaculate.kernel import LinComb

from .strategies import compositions

C = Composition


def test_F_to_M_examples():
    assert qsym.F(3) == LinComb({C(a): 1 for a in compositions_of(3)})
    assert qsym.F(1, 1) == LinComb.monomial(C([1, 1]))


def test_quasi_shuffle_small():
    assert qsym.m_quasi_shuffle(C([1]), C([1])) == LinComb({C([1, 1]): 2, C([2]): 1})
    assert qsym.m_quasi_shuffle(C(), C([2, 1])) == LinComb.monomial(C([2, 1]))


def test_pairing_is_delta():
    assert nsym.pairing(nsym.H(2, 1), qsym.M(2, 1)) == 1
    assert nsym.pairing(nsym.H(2, 1), qsym.M(1, 2)) == 0


@given(compositions(max_size=4), compositions(max_size=4))
def test_quasi_shuffle_commutes(a, b):
    assert qsym.m_quasi_shuffle(a, b) == qsym.m_quasi_shuffle(b, a)


@given(compositions(max_size=3), compositions(max_size=3), compositions(max_size=2))
def test_quasi_shuffle_associates(a, b, c):
    ab = qsym.qsym_mult(qsym.M(*a), qsym.M(*b))
    bc = qsym.qsym_mult(qsym.M(*b), qsym.M(*c))
    assert qsym.qsym_mult(ab, qsym.M(*c)) == qsym.qsym_mult(qsym.M(*a), bc)


@given(compositions(max_size=7))
def test_M_F_round_trip(alpha):
    assert qsym.M_to_F(qsym.F_to_M(alpha)) == LinComb.monomial(alpha)
    assert qsym.F_combination_to_M(qsym.M_to_F(qsym.M(*alpha))) == qsym.M(*alpha)


@given(compositions(max_size=7))
def test_dual_immaculate_round_trip(alpha):
    x = qsym.dual_immaculate_to_M(alpha)
    assert qsym.M_to_dual_immaculate(x) == LinComb.monomial(alpha)


def test_dual_immaculate_pairing():
    for n in range(6):
        for a in compositions_of(n):
            imm = nsym.immaculate_to_H(a)
            for b in compositions_of(n):
                assert nsym.pairing(imm, qsym.dual_immaculate_to_M(b)) == int(a == b)


def test_dual_immaculate_expands_positively_in_F():
    # dual immaculates are F-positive
    for n in range(6):
        for a in compositions_of(n):
            f = qsym.M_to_F(qsym.dual_immaculate_to_M(a))
            assert all(c > 0 for c in f.values())
