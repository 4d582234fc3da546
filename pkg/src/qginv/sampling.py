"""Seeded random matrices with small integer components.

Components of :func:`random_matrix` entries stay in ``{-2..2}``.  A plain
dense draw is almost always nonsingular, so the general sampler mixes several
shapes of matrix to reach low rank and index >= 2 often enough to matter.
"""

import random

from .exactq import ONE, ZERO, I, J, K, Quaternion
from .qmatrix import QMatrix, adjoint, mat_add, mat_mul

__all__ = ["random_quaternion", "random_matrix", "random_hermitian", "random_complex", "sample_suite"]

LO, HI = -2, 2

# left multiplication by these only permutes and negates components
UNITS = (ONE, -ONE, I, -I, J, -J, K, -K)


def random_quaternion(rng, density=1.0, complex_only=False):
    if rng.random() >= density:
        return ZERO
    w, x = rng.randint(LO, HI), rng.randint(LO, HI)
    if complex_only:
        return Quaternion(w, x)
    return Quaternion(w, x, rng.randint(LO, HI), rng.randint(LO, HI))


def _dense(rng, m, n, density=1.0, complex_only=False):
    return QMatrix([[random_quaternion(rng, density, complex_only) for _ in range(n)]
                    for _ in range(m)])


def _unit(rng, complex_only):
    return rng.choice(UNITS[:4] if complex_only else UNITS)


def _strict_upper(rng, n, complex_only):
    return QMatrix.from_function(
        n, n, lambda i, j: random_quaternion(rng, 0.8, complex_only) if j > i else ZERO)


def random_matrix(rng, n, m=None, complex_only=False):
    """One m x n (default square) matrix from a randomly chosen strategy."""
    m = n if m is None else m
    strategy = rng.choice(("dense", "sparse", "dup", "zero_row", "nilpotent_block", "low_rank"))
    if m != n and strategy == "nilpotent_block":
        strategy = "low_rank"
    if strategy == "dense":
        return _dense(rng, m, n, 1.0, complex_only)
    if strategy == "sparse":
        return _dense(rng, m, n, 0.4, complex_only)
    if strategy == "dup":
        A = _dense(rng, m, n, 0.8, complex_only)
        rows = A.to_lists()
        if m > 1:
            src, dst = rng.sample(range(m), 2)
            q = _unit(rng, complex_only)
            rows[dst] = [q * x for x in rows[src]]  # left multiple keeps the left row rank down
        return QMatrix(rows, m, n)
    if strategy == "zero_row":
        A = _dense(rng, m, n, 0.8, complex_only)
        rows = A.to_lists()
        rows[rng.randrange(m)] = [ZERO] * n
        return QMatrix(rows, m, n)
    if strategy == "nilpotent_block":
        # strictly upper triangle plus one diagonal entry: index up to n - 1
        N = _strict_upper(rng, n, complex_only)
        rows = N.to_lists()
        t = rng.randrange(n)
        rows[t][t] = random_quaternion(rng, 1.0, complex_only)
        return QMatrix(rows, n, n)
    # low rank: every row is a unit left multiple of one of r base rows, or zero
    r = rng.randint(1, max(1, min(m, n) - 1))
    base = _dense(rng, r, n, 0.9, complex_only).to_lists()
    rows = [list(b) for b in base]
    while len(rows) < m:
        if rng.random() < 0.15:
            rows.append([ZERO] * n)
        else:
            q = _unit(rng, complex_only)
            rows.append([q * x for x in rng.choice(base)])
    rng.shuffle(rows)
    return QMatrix(rows, m, n)


def random_hermitian(rng, n):
    strategy = rng.choice(("sym", "gram", "gram_low"))
    if strategy == "sym":
        B = _dense(rng, n, n, 0.8)
        H = mat_add(B, adjoint(B))
    elif strategy == "gram":
        B = _dense(rng, n, n, 0.6)
        H = mat_mul(adjoint(B), B)
    else:
        r = rng.randint(1, max(1, n - 1))
        B = _dense(rng, r, n, 1.0)
        H = mat_mul(adjoint(B), B)
    return H


def random_complex(rng, n):
    return random_matrix(rng, n, complex_only=True)


def sample_suite(seed, count, sizes=(2, 3, 4)):
    """``count`` seeded square matrices cycling through ``sizes``."""
    rng = random.Random(seed)
    return [random_matrix(rng, sizes[t % len(sizes)]) for t in range(count)]
