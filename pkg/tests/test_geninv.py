import random

import pytest

from qginv.config import configured
from qginv.errors import IndexTooLarge, InternalInconsistency, NotHermitian, ShapeError
from qginv.exactq import ZERO, I, J, K, Quaternion
from qginv.geninv import (
    FORMS,
    cdet_form,
    drazin,
    group_inverse,
    inverse,
    is_nonsingular,
    mp_inverse,
    projector_P,
    projector_Q,
)
from qginv.ncdet import matrix_index
from qginv.oracle import drazin_oracle, gauss_jordan_inverse, mp_oracle, verify
from qginv.qmatrix import QMatrix, adjoint, identity, mat_mul, mat_pow, zeros
from qginv.sampling import random_hermitian, random_matrix

half = Quaternion("1/2")


def test_mp_of_example(A4):
    expected = QMatrix([[0, -I * half, 0], [-K * half, 0, -J * half], [0, J * half, 0]])
    for form in ("column", "row", "auto"):
        assert mp_inverse(A4, form) == expected
    assert verify("penrose", A4, expected).ok


def test_mp_trivial_cases():
    assert mp_inverse(identity(3)) == identity(3)
    assert mp_inverse(zeros(2, 3)) == zeros(3, 2)
    q = Quaternion(1, 1, 1, 1)
    assert mp_inverse(QMatrix([[q, 0], [0, 0]])) == QMatrix([[q.inv(), 0], [0, 0]])


def test_mp_rectangular():
    A = QMatrix([[1, I, J], [K, 0, 1]])
    X = mp_inverse(A)
    assert X.shape == (3, 2)
    assert X == mp_oracle(A) == mp_inverse(A, "row")
    assert mp_inverse(adjoint(A)) == adjoint(X)


def test_projectors(A4):
    P, Q = projector_P(A4), projector_Q(A4)
    Ap = mp_inverse(A4)
    assert P == mat_mul(A4, Ap)
    assert Q == mat_mul(Ap, A4)
    for E in (P, Q):
        assert mat_mul(E, E) == E
        assert E.is_hermitian()
    assert mat_mul(P, A4) == A4 == mat_mul(A4, Q)
    assert projector_P(zeros(2, 3)) == zeros(2, 2)
    assert projector_Q(zeros(2, 3)) == zeros(3, 3)


def test_drazin_examples(A4):
    assert drazin(identity(3)) == identity(3)
    N = QMatrix([[0, 1], [0, 0]])
    assert drazin(N) == zeros(2, 2)
    Ad = drazin(A4)
    assert Ad == drazin_oracle(A4)
    assert verify("drazin", A4, Ad).ok


def test_group_inverse(A4):
    G = group_inverse(A4)
    assert G == drazin(A4)
    assert mat_mul(mat_mul(A4, G), A4) == A4
    assert mat_mul(A4, G) == mat_mul(G, A4)
    with pytest.raises(IndexTooLarge):
        group_inverse(QMatrix([[0, 1], [0, 0]]))
    # nonsingular matrices have index 0 and a group inverse equal to the inverse
    B = QMatrix([[1, I], [J, 2]])
    assert group_inverse(B) == inverse(B) == gauss_jordan_inverse(B)


def test_group_inverse_is_core_squared_times_a(A4):
    from qginv.coreinv import right_core

    R = right_core(A4)
    assert group_inverse(A4) == mat_mul(mat_mul(R, R), A4)


def test_inverse_of_singular_rejected():
    with pytest.raises(ShapeError):
        inverse(QMatrix([[1, I], [I, -1]]))
    assert not is_nonsingular(zeros(2, 3))
    assert is_nonsingular(identity(2))


def test_hermitian_forms_need_hermitian_input(A4):
    for form in ("hermitian_column", "hermitian_row"):
        with pytest.raises(NotHermitian):
            mp_inverse(A4, form)
        with pytest.raises(NotHermitian):
            drazin(A4, form)
    with pytest.raises(ValueError):
        mp_inverse(A4, "sideways")


def test_hermitian_forms_agree():
    rng = random.Random(21)
    for _ in range(20):
        H = random_hermitian(rng, rng.choice([2, 3, 4]))
        expected = mp_oracle(H)
        for form in FORMS:
            assert mp_inverse(H, form) == expected
            assert drazin(H, form) == expected  # Hermitian matrices are EP


def test_ep_matrix_has_equal_projectors():
    H = QMatrix([[2, I], [-I, 3]])
    assert projector_P(H) == projector_Q(H)
    assert group_inverse(H) == mp_inverse(H)


def test_random_agreement_with_oracle():
    rng = random.Random(3)
    for _ in range(40):
        A = random_matrix(rng, rng.choice([2, 3, 4]))
        Ap = mp_inverse(A)
        assert Ap == mp_oracle(A)
        assert verify("penrose", A, Ap).ok
        Ad = drazin(A, "row")
        assert Ad == drazin(A, "column") == drazin_oracle(A)
        assert verify("drazin", A, Ad).ok


def test_verify_mode_cross_checks_forms(monkeypatch):
    import qginv.geninv as g

    A = QMatrix([[1, I], [J, K]])
    with configured(verify=True):
        assert mp_inverse(A) == mp_oracle(A)
        assert drazin(A) == drazin_oracle(A)
    real = g._mp

    def skewed(A, form, r):
        X = real(A, form, r)
        return X if form == "column" else X.scale(2)

    monkeypatch.setattr(g, "_mp", skewed)
    with configured(verify=True):
        with pytest.raises(InternalInconsistency):
            g.mp_inverse(A, "column")


def test_cdet_form_with_identity_recovers_inverse():
    # X = M^{-1} C when M is nonsingular Hermitian and r = n
    H = QMatrix([[2, I], [-I, 3]])
    X = cdet_form(H, identity(2), 2, 5)
    assert mat_mul(H, X) == identity(2)


def test_drazin_of_nilpotent_powers():
    N = QMatrix([[0, 1, I], [0, 0, J], [0, 0, 0]])
    assert matrix_index(N) == 3
    assert drazin(N) == zeros(3, 3)
    B = QMatrix([[K, 1, 0], [0, 0, 1], [0, 0, 0]])
    Bd = drazin(B)
    assert Bd == drazin_oracle(B)
    k = matrix_index(B)
    assert mat_mul(Bd, mat_pow(B, k + 1)) == mat_pow(B, k)
    assert Bd[0, 0] == K.inv() and Bd[1, 1] == ZERO
