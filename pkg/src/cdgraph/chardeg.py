"""Irreducible character degrees by the class-algebra method.

For a working prime p congruent to 1 mod exp(G) and larger than 2*sqrt(|G|),
the central characters of G reduce to common eigenvectors over GF(p) of the
class-sum multiplication matrices M_i.  Splitting the full space into common
eigenspaces recovers all r central characters w; the second orthogonality
relation then gives each degree via

    d^2 = |G| / sum_i w_i w_{i'} / h_i   (mod p),

where i' indexes the inverse class and h_i the class size.  Since every
degree is below p/2, the residue determines d exactly; exact integer
post-checks (sum of d^2 equals |G|, d divides |G|) confirm the result.

Class matrices are integer data independent of p; they are built lazily in
ascending class-size order and cached on the group, so verifying with a
second prime reuses them.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from .groupcore import FiniteGroup
from .numtheory import is_prime, least_prime_one_mod, sqrt_mod


def working_prime(G: FiniteGroup, above: int = 0) -> int:
    """Least usable prime for `G` exceeding `above`."""
    return least_prime_one_mod(G.exponent(), max(2 * isqrt(G.order), above))


def class_matrix(G: FiniteGroup, i: int) -> np.ndarray:
    """Integer matrix of multiplication by the i-th class sum.

    Entry (j, k) counts pairs x in C_i, y in C_j with x*y = z_k, computed by
    scanning x in C_i against the class representatives z_k.
    """
    key = ("classmat", i)
    M = G.cache.get(key)
    if M is None:
        classes = G.conjugacy_classes()
        r = len(classes)
        reps = [cl.rep for cl in classes]
        class_of = G.class_of()
        mul, inv = G.rep.mul, G.rep.inv
        M = np.zeros((r, r), dtype=np.int64)
        for x in classes[i].members:
            xi = inv(x)
            for k in range(r):
                M[class_of[mul(xi, reps[k])], k] += 1
        G.cache[key] = M
    return M


def _rref_mod(M: np.ndarray, p: int):
    """Reduced row echelon form over GF(p); returns (rows, pivot columns)."""
    M = M.copy() % p
    nrows, ncols = M.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        M[r] = M[r] * pow(int(M[r, c]), p - 2, p) % p
        col = M[:, c].copy()
        col[r] = 0
        M = (M - np.outer(col, M[r])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _nullspace_mod(M: np.ndarray, p: int) -> np.ndarray:
    R, pivots = _rref_mod(M, p)
    ncols = M.shape[1]
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = (-int(R[ri, fc])) % p
    return basis


def _poly_apply(poly: np.ndarray, A: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    """Evaluate poly(A) @ v by Horner; poly coefficients ascending."""
    res = np.zeros_like(v)
    for c in poly[::-1]:
        res = (A @ res + int(c) * v) % p
    return res


def _annihilator(A: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    """Monic polynomial g of least degree with g(A) v = 0 (coeffs ascending).

    Krylov vectors v, Av, A^2 v, ... are reduced against the previous ones;
    the polynomial parts are carried along, so the first dependency yields
    the annihilator directly.
    """
    s = A.shape[0]
    red = []
    cur = v % p
    t = 0
    while True:
        assert t <= s
        vec = cur.copy()
        pol = np.zeros(s + 1, dtype=np.int64)
        pol[t] = 1
        for rvec, rpol, pc in red:
            c = int(vec[pc])
            if c:
                vec = (vec - c * rvec) % p
                pol = (pol - c * rpol) % p
        nz = np.nonzero(vec)[0]
        if nz.size == 0:
            return pol[: t + 1]
        pc = int(nz[0])
        inv = pow(int(vec[pc]), p - 2, p)
        red.append((vec * inv % p, pol * inv % p, pc))
        cur = A @ cur % p
        t += 1


def _eigen_split(A: np.ndarray, p: int):
    """Eigenvalue/eigenspace pairs of a GF(p)-diagonalizable matrix.

    Returns [(lam, basis rows)] with eigenvalues ascending; asserts the
    eigenspace dimensions exhaust the space.
    """
    s = A.shape[0]
    spaces: dict[int, np.ndarray] = {}
    total = 0
    mpoly = np.array([1], dtype=np.int64)
    xs = np.arange(p, dtype=np.int64)
    for j in range(s):
        if total == s:
            break
        e = np.zeros(s, dtype=np.int64)
        e[j] = 1
        w = _poly_apply(mpoly, A, e, p)
        if not w.any():
            continue
        g = _annihilator(A, w, p)
        mpoly = np.convolve(mpoly, g) % p
        vals = np.zeros(p, dtype=np.int64)
        for c in mpoly[::-1]:
            vals = (vals * xs + int(c)) % p
        for lam in np.nonzero(vals == 0)[0]:
            lam = int(lam)
            if lam in spaces:
                continue
            N = _nullspace_mod((A - lam * np.eye(s, dtype=np.int64)) % p, p)
            if N.shape[0]:
                spaces[lam] = N
                total += N.shape[0]
    assert total == s, "class algebra failed to diagonalize (bug)"
    return sorted(spaces.items())


def character_degrees(G: FiniteGroup, prime: int | None = None) -> tuple[int, ...]:
    """The multiset cd(G) as a sorted tuple, one entry per irreducible."""
    if prime is None:
        p = working_prime(G)
    else:
        p = int(prime)
        if not is_prime(p) or (p - 1) % G.exponent() or p <= 2 * isqrt(G.order):
            raise ValueError(f"prime {p} unusable for |G|={G.order}")
    key = ("degrees", p)
    if key in G.cache:
        return G.cache[key]

    classes = G.conjugacy_classes()
    r = len(classes)
    id_idx = next(i for i, cl in enumerate(classes) if cl.rep == G.identity)

    subs = [(np.eye(r, dtype=np.int64), list(range(r)))]
    for i in range(r):
        if i == id_idx:
            continue
        if all(B.shape[0] == 1 for B, _ in subs):
            break
        Mt = class_matrix(G, i).T % p
        new_subs = []
        for B, piv in subs:
            if B.shape[0] == 1:
                new_subs.append((B, piv))
                continue
            BM = B @ Mt % p
            A = BM[:, piv]
            assert np.array_equal(A @ B % p, BM), "subspace not invariant (bug)"
            # rows y of the coordinate space act by y -> y A, so split by
            # the row eigenvectors, i.e. the column eigenvectors of A^T
            pieces = _eigen_split(A.T.copy(), p)
            if len(pieces) == 1:
                new_subs.append((B, piv))
                continue
            for _, N in pieces:
                B2, piv2 = _rref_mod(N @ B % p, p)
                assert B2.shape[0] == N.shape[0]
                new_subs.append((B2, piv2))
        subs = new_subs
    if any(B.shape[0] != 1 for B, _ in subs):
        raise RuntimeError("class matrices exhausted before full split (bug)")

    sizes = [cl.size for cl in classes]
    class_of = G.class_of()
    inv_idx = np.array([class_of[G.inv(cl.rep)] for cl in classes])
    hinv = np.array([pow(h, p - 2, p) for h in sizes], dtype=np.int64)
    gmod = G.order % p

    degrees = []
    for B, _ in subs:
        b = B[0]
        w = b * pow(int(b[id_idx]), p - 2, p) % p
        s_val = int((w * w[inv_idx] % p * hinv).sum() % p)
        dsq = gmod * pow(s_val, p - 2, p) % p
        d = sqrt_mod(dsq, p)
        d = min(d, p - d)
        degrees.append(d)
    degrees.sort()

    assert len(degrees) == r
    assert sum(d * d for d in degrees) == G.order, "degree squares do not sum to |G|"
    assert all(G.order % d == 0 for d in degrees)
    result = tuple(degrees)
    G.cache[key] = result
    return result


def degree_multiset(G: FiniteGroup) -> tuple[tuple[int, int], ...]:
    """Degrees grouped as (degree, multiplicity) pairs, ascending."""
    out = []
    for d in character_degrees(G):
        if out and out[-1][0] == d:
            out[-1][1] += 1
        else:
            out.append([d, 1])
    return tuple((d, m) for d, m in out)


def sl2_degrees_closed_form(q: int) -> tuple[int, ...]:
    """cd(SL2(q)) for q = 2^a: 1 and q once, q-1 and q+1 in half-size blocks."""
    if q < 4 or q & (q - 1):
        raise ValueError(f"q must be a power of two at least 4, got {q}")
    return tuple(sorted([1, q] + [q - 1] * (q // 2) + [q + 1] * (q // 2 - 1)))
