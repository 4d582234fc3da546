"""Exact generalized inverses of quaternion matrices.

Moore-Penrose, Drazin, group, core, core-EP, DMP, MPD and CMP inverses are
computed from row and column determinants over exact rationals, and every
one can be checked against an elimination-based oracle.
"""

from .coreinv import CmpVariant, cmp, core_ep, core_nilpotent_split, dmp, left_core, mpd, right_core
from .errors import (
    DivisionByZero,
    IndexTooLarge,
    InternalInconsistency,
    MethodDisagreement,
    NotHermitian,
    ParseError,
    QginvError,
    RankZero,
    ShapeError,
    SizeCapExceeded,
)
from .exactq import I, J, K, ONE, ZERO, Quaternion, q_conj, q_inv, q_mul
from .geninv import drazin, group_inverse, mp_inverse, projector_P, projector_Q
from .ncdet import anchored_cdet_sum, anchored_rdet_sum, cdet, det_rank, hdet, matrix_index, minor_sum, rdet
from .oracle import drazin_oracle, elim_rank, mp_oracle, rank_factorize, verify
from .qmatrix import IndexSet, QMatrix, adjoint, mat_mul, mat_pow, parse_matrix, principal_submatrix, replace

__version__ = "0.1.0"
