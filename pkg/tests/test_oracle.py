import random

import pytest
from hypothesis import given, settings as hsettings

from qginv.errors import IndexTooLarge, RankZero, ShapeError
from qginv.exactq import ONE, I, J, K, Quaternion
from qginv.oracle import (
    SYSTEMS,
    column_echelon,
    core_nilpotent_oracle,
    drazin_oracle,
    elim_index,
    elim_rank,
    gauss_jordan_inverse,
    group_oracle,
    mp_oracle,
    rank_factorize,
    row_echelon,
    verify,
)
from qginv.qmatrix import QMatrix, adjoint, identity, mat_mul, mat_pow, zeros
from qginv.sampling import random_matrix

from conftest import matrices


def test_elim_rank_examples(A4):
    assert elim_rank(A4) == 2 == elim_rank(A4, "row")
    assert elim_rank(zeros(3, 2)) == 0
    assert elim_rank(identity(4)) == 4
    assert elim_rank(QMatrix([[I, J], [K, 1]])) == 1
    assert elim_rank(QMatrix([[I, J], [K, -1]])) == 2
    with pytest.raises(ValueError):
        elim_rank(A4, "diagonal")


def test_left_and_right_dependence_differ():
    # row 2 is a right multiple of row 1, not a left one
    A = QMatrix([[1, I], [J, I * J]])
    assert A.row(1) == tuple(x * J for x in A.row(0))
    assert elim_rank(A) == 2 == elim_rank(A, "row")


def test_echelon_forms(A4):
    R, pivots = row_echelon(A4)
    assert len(pivots) == 2
    for t, p in enumerate(pivots):
        assert R[t, p] == ONE
        assert all(R[u, p] == 0 for u in range(R.rows) if u != t)
    C, cp = column_echelon(A4)
    assert len(cp) == 2


def test_rank_factorization(A4):
    fac = rank_factorize(A4)
    assert fac.rank == 2
    assert mat_mul(fac.F, fac.G) == A4
    with pytest.raises(RankZero):
        rank_factorize(zeros(2, 2))


def test_gauss_jordan():
    B = QMatrix([[1, I], [J, 2]])
    Bi = gauss_jordan_inverse(B)
    assert mat_mul(B, Bi) == identity(2) == mat_mul(Bi, B)
    with pytest.raises(ZeroDivisionError):
        gauss_jordan_inverse(QMatrix([[1, I], [I, -1]]))
    with pytest.raises(ShapeError):
        gauss_jordan_inverse(zeros(2, 3))


def test_mp_oracle_examples():
    q = Quaternion(1, 1, 1, 1)
    assert mp_oracle(QMatrix([[q, 0], [0, 0]])) == QMatrix([[q.inv(), 0], [0, 0]])
    assert mp_oracle(zeros(2, 3)) == zeros(3, 2)
    v = QMatrix([[I], [J]])
    assert mp_oracle(v) == QMatrix([[-I * Quaternion("1/2"), -J * Quaternion("1/2")]])


def test_index_and_drazin_oracle(A4):
    assert elim_index(A4) == 1
    assert elim_index(identity(2)) == 0
    N = QMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert elim_index(N) == 3
    assert drazin_oracle(N) == zeros(3, 3)
    with pytest.raises(ShapeError):
        elim_index(zeros(2, 3))
    with pytest.raises(IndexTooLarge):
        group_oracle(N)
    assert group_oracle(A4) == drazin_oracle(A4)


def test_core_nilpotent_oracle():
    A = QMatrix([[1, I, 0], [0, 0, J], [0, 0, 0]])
    A1, A2 = core_nilpotent_oracle(A)
    assert mat_mul(A1, A2) == zeros(3, 3) == mat_mul(A2, A1)
    assert mat_pow(A2, 3) == zeros(3, 3)
    assert elim_index(A1) <= 1


def test_penrose_rejects_zero_candidate(A4):
    report = verify("penrose", A4, zeros(3, 3))
    assert not report.ok and not report
    assert report.results["AXA=A"] is False
    assert report.results["XAX=X"] is True
    assert "AXA=A" in report.residuals
    obj = report.to_obj()
    assert obj["system"] == "penrose" and obj["ok"] is False


def test_verify_arguments(A4):
    with pytest.raises(ValueError):
        verify("nonsense", A4, A4)
    with pytest.raises(ShapeError):
        verify("penrose", A4, zeros(2, 3))
    with pytest.raises(ShapeError):
        verify("drazin", zeros(2, 3), zeros(3, 2))
    assert verify("penrose", zeros(2, 3), zeros(3, 2)).ok


def perturbed(X, i, j, delta):
    rows = X.to_lists()
    rows[i][j] = rows[i][j] + delta
    return QMatrix(rows)


def test_every_system_rejects_a_one_unit_perturbation():
    A = QMatrix([[1, I, 0], [0, 0, J], [0, 0, 0]])
    Ap, Ad = mp_oracle(A), drazin_oracle(A)
    candidates = {
        "penrose": Ap,
        "drazin": Ad,
        "core_ep_right": mat_mul(mat_pow(A, 2), mp_oracle(mat_pow(A, 3))),
        "core_ep_left": mat_mul(mp_oracle(mat_pow(A, 3)), mat_pow(A, 2)),
        "dmp": mat_mul(mat_mul(Ad, A), Ap),
        "mpd": mat_mul(mat_mul(Ap, A), Ad),
        "cmp": mat_mul(mat_mul(mat_mul(mat_mul(Ap, A), Ad), A), Ap),
    }
    for system, X in candidates.items():
        assert verify(system, A, X).ok, system
        for i in range(3):
            for j in range(3):
                for delta in (ONE, I, J, K):
                    assert not verify(system, A, perturbed(X, i, j, delta)).ok, (system, i, j)


def test_core_systems(A4):
    Ap, Ad = mp_oracle(A4), drazin_oracle(A4)
    R = mat_mul(mat_mul(Ad, A4), Ap)
    L = mat_mul(mat_mul(Ap, A4), Ad)
    assert verify("core_right", A4, R).ok
    assert verify("core_left", A4, L).ok
    assert not verify("core_right", A4, Ap).ok
    assert not verify("core_left", A4, Ap).ok
    assert set(SYSTEMS) >= {"core_right", "core_left"}


@hsettings(max_examples=60, deadline=None)
@given(matrices(max_size=4))
def test_oracle_mp_satisfies_penrose(A):
    X = mp_oracle(A)
    assert verify("penrose", A, X).ok
    assert mp_oracle(adjoint(A)) == adjoint(X)
    assert elim_rank(A) == elim_rank(A, "row") == elim_rank(adjoint(A))


def test_oracle_drazin_on_samples():
    rng = random.Random(6)
    for _ in range(30):
        A = random_matrix(rng, rng.choice([2, 3, 4]))
        assert verify("drazin", A, drazin_oracle(A)).ok
