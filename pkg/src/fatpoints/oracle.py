"""Independent ground truth from explicit coordinates.

For distinct points with known coordinates, the dimension of the degree-t
piece of a fat point ideal is a corank: monomials of degree t are the
columns and the vanishing conditions (all partial derivatives of order
below the multiplicity, taken in the two coordinates transverse to each
point) are the rows.  The multiplication maps are assembled on explicit
monomial bases, so their kernel and cokernel dimensions come straight from
matrix ranks, with no cone geometry anywhere.

Ranks are computed modulo two independent primes above 10^6 and fall back
to exact rational elimination if the primes ever disagree.  Derivative
coefficients are falling factorials of exponents bounded by the degree,
which stay nonzero for primes this large.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np

PRIMES = (1_000_003, 1_000_033)

FIXTURE_CASES = ("i", "ii", "iii", "iv", "general", "conic")

_GENERAL_SEED = 20_240_613


def monomials(t: int) -> tuple:
    """Exponent triples (a, b, c) with a+b+c = t, highest x-power first."""
    out = []
    for a in range(t, -1, -1):
        for b in range(t - a, -1, -1):
            out.append((a, b, t - a - b))
    return tuple(out)


def _monomial_index(t: int):
    return {m: i for i, m in enumerate(monomials(t))}


def _det3(p, q, r) -> int:
    return (p[0] * (q[1] * r[2] - q[2] * r[1])
            - p[1] * (q[0] * r[2] - q[2] * r[0])
            + p[2] * (q[0] * r[1] - q[1] * r[0]))


def _collinear_triples(pts) -> set:
    return {frozenset(c) for c in itertools.combinations(range(1, 7), 3)
            if _det3(*(pts[i - 1] for i in c)) == 0}


def _on_common_conic(pts) -> bool:
    rows = [[x * x, x * y, y * y, x * z, y * z, z * z] for x, y, z in pts]
    return _rank_exact([[Fraction(v) for v in row] for row in rows]) < 6


def fixture_points(case: str) -> tuple:
    """Six exact points realizing one of the named configurations.

    Cases i-iv put 1-4 lines through triples of the points matching the
    distinct-point catalog; "general" has no three collinear and no conic
    through all six; "conic" puts all six on y^2 = xz.  The collinearity
    pattern and conic membership are verified by determinants before
    returning.
    """
    if case == "i":
        pts = [(0, 0, 1), (0, 1, 1), (0, 1, 0),
               (1, 0, 0), (1, 1, 2), (1, 2, 5)]
        triples = [{1, 2, 3}]
    elif case == "ii":
        pts = [(0, 0, 1), (0, 1, 1), (0, 1, 0),
               (1, 0, 1), (2, 0, 1), (1, 2, 4)]
        triples = [{1, 2, 3}, {1, 4, 5}]
    elif case == "iii":
        pts = [(0, 0, 1), (0, 1, 1), (0, 1, 0),
               (1, 0, 1), (1, 0, 0), (1, 1, 0)]
        triples = [{1, 2, 3}, {1, 4, 5}, {3, 5, 6}]
    elif case == "iv":
        pts = [(0, 0, 1), (0, 1, -1), (0, 1, 0),
               (1, 0, -1), (1, 0, 0), (1, -1, 0)]
        triples = [{1, 2, 3}, {1, 4, 5}, {3, 5, 6}, {2, 4, 6}]
    elif case == "conic":
        pts = [(1, t, t * t) for t in range(6)]
        triples = []
    elif case == "general":
        rng = random.Random(_GENERAL_SEED)
        while True:
            pts = [(1, rng.randrange(-9, 10), rng.randrange(-9, 10))
                   for _ in range(6)]
            if len(set(pts)) == 6 and not _collinear_triples(pts) \
                    and not _on_common_conic(pts):
                break
        triples = []
    else:
        raise ValueError(f"unknown fixture case {case!r}")
    want = {frozenset(t) for t in triples}
    got = _collinear_triples(pts)
    if got != want:
        raise AssertionError(f"collinearity pattern {sorted(map(sorted, got))} "
                             f"!= expected {sorted(map(sorted, want))}")
    conconic = _on_common_conic(pts)
    if case == "conic" and not conconic:
        raise AssertionError("conic fixture points are not conconic")
    if case != "conic" and conconic:
        raise AssertionError(f"case {case} fixture points lie on a conic")
    return tuple(pts)


# ---------------------------------------------------------------------------
# Conditions matrix


def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _derivative_row(point, t: int, du: int, dv: int, axes, p: int | None):
    """Derivative d^du d^dv along the two axes, applied to each degree-t
    monomial and evaluated at the point."""
    u_ax, v_ax = axes
    row = []
    for expo in monomials(t):
        eu, ev = expo[u_ax], expo[v_ax]
        if eu < du or ev < dv:
            row.append(0)
            continue
        new = list(expo)
        new[u_ax] -= du
        new[v_ax] -= dv
        val = _falling(eu, du) * _falling(ev, dv)
        for ax in range(3):
            val *= point[ax] ** new[ax]
        row.append(val % p if p is not None else val)
    return row


def conditions_matrix(points, mults, t: int, p: int | None = None):
    """Vanishing conditions for the fat point scheme in degree t.

    One row per derivative of order below m_i at p_i, differentiated in the
    two coordinates away from a nonzero coordinate of the point; columns
    follow :func:`monomials`.  Row count is sum of m_i*(m_i+1)/2.
    """
    rows = []
    for point, m in zip(points, mults):
        if m == 0:
            continue
        pivot = next(ax for ax in range(3) if point[ax] != 0)
        axes = tuple(ax for ax in range(3) if ax != pivot)
        for du in range(m):
            for dv in range(m - du):
                rows.append(_derivative_row(point, t, du, dv, axes, p))
    return rows


# ---------------------------------------------------------------------------
# Ranks and nullspaces


def _rank_mod_p(rows, ncols: int, p: int) -> int:
    if not rows:
        return 0
    a = np.array(rows, dtype=np.int64) % p
    m = a.shape[0]
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, m):
            if a[i, c] % p:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[r + 1:, c].copy()
        if col.any():
            a[r + 1:] = (a[r + 1:] - np.outer(col, a[r])) % p
        r += 1
        if r == m:
            break
    return r


def _rank_exact(rows) -> int:
    rows = [list(map(Fraction, r)) for r in rows if any(r)]
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivval = rows[rank][c]
        rows[rank] = [v / pivval for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _nullspace_mod_p(rows, ncols: int, p: int):
    """Right-kernel basis over F_p, one vector per row of the result."""
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    a = np.array(rows, dtype=np.int64) % p
    m = a.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, m):
            if a[i, c] % p:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        if col.any():
            a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for c in free:
        vec = [0] * ncols
        vec[c] = 1
        for rr, pc in enumerate(pivots):
            vec[pc] = int(-a[rr, c]) % p
        basis.append(vec)
    return basis


def _nullspace_exact(rows, ncols: int):
    """Right-kernel basis over the rationals."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)]
                for i in range(ncols)]
    a = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        scale = 1 / a[r][c]
        a[r] = [scale * v for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for c in free:
        vec = [Fraction(0)] * ncols
        vec[c] = Fraction(1)
        for rr, pc in enumerate(pivots):
            vec[pc] = -a[rr][c]
        basis.append(vec)
    return basis


def _nullspace(rows, ncols: int, p: int | None):
    if p is None:
        return _nullspace_exact(rows, ncols)
    return _nullspace_mod_p(rows, ncols, p)


def ideal_dim(points, mults, t: int) -> int:
    """Dimension of the degree-t piece of the fat point ideal.

    Column count minus the rank of the conditions matrix, over both primes,
    with exact rational elimination on disagreement.
    """
    ncols = (t + 2) * (t + 1) // 2
    ranks = []
    for p in PRIMES:
        rows = conditions_matrix(points, mults, t, p)
        ranks.append(_rank_mod_p(rows, ncols, p))
    if ranks[0] != ranks[1]:
        rows = conditions_matrix(points, mults, t, None)
        rank = _rank_exact(rows)
    else:
        rank = ranks[0]
    return ncols - rank


def _mu_data(points, mults, t: int, p: int | None):
    """Multiplication-by-linear-forms matrix plus both section counts."""
    ncols_t = (t + 2) * (t + 1) // 2
    ncols_up = (t + 3) * (t + 2) // 2
    basis_t = _nullspace(conditions_matrix(points, mults, t, p), ncols_t, p)
    basis_up = _nullspace(conditions_matrix(points, mults, t + 1, p),
                          ncols_up, p)
    mono_t = monomials(t)
    idx_up = _monomial_index(t + 1)
    zero = Fraction(0) if p is None else 0
    rows = []
    for vec in basis_t:
        for ax in range(3):
            row = [zero] * ncols_up
            for col, expo in enumerate(mono_t):
                if vec[col] != zero:
                    new = list(expo)
                    new[ax] += 1
                    row[idx_up[tuple(new)]] = vec[col]
            rows.append(row)
    return rows, len(basis_t), len(basis_up)


def mu_rank_direct(points, mults, t: int):
    """Kernel and cokernel dimensions of multiplication by linear forms.

    Builds explicit bases of the ideal in degrees t and t+1, multiplies the
    degree-t basis by the three coordinates, and measures the image rank.
    Returns (ker, cok).
    """
    results = []
    for p in PRIMES:
        rows, dim_t, dim_up = _mu_data(points, mults, t, p)
        ncols_up = (t + 3) * (t + 2) // 2
        rank = _rank_mod_p(rows, ncols_up, p)
        results.append((3 * dim_t - rank, dim_up - rank))
    if results[0] != results[1]:
        rows, dim_t, dim_up = _mu_data(points, mults, t, None)
        rank = _rank_exact(rows)
        return (3 * dim_t - rank, dim_up - rank)
    return results[0]
