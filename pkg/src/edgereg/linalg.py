"""Gaussian elimination over the prime field GF(p)."""

import numpy as np

DEFAULT_CHAR = 32003


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    # entries are reduced mod p before every product, so p^2 must fit in int64
    if p >= 3_037_000_499:
        raise ValueError(f"characteristic {p} is too large for int64 elimination")
    return p


def rank_mod_p(M, p: int) -> int:
    """Rank of an integer matrix over GF(p)."""
    A = np.array(M, dtype=np.int64)
    if A.ndim != 2 or A.size == 0:
        return 0
    A %= p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        below = A[r + 1:, c].copy()
        hit = np.flatnonzero(below)
        if hit.size:
            rows_hit = r + 1 + hit
            A[rows_hit] = (A[rows_hit] - np.outer(below[hit], A[r])) % p
        r += 1
    return r

