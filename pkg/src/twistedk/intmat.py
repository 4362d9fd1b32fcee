"""Integer matrix normal forms over arbitrary-precision ints.

Matrices are lists of rows of Python ints.  Hermite normal form is row-style:
nonzero rows first, pivots strictly increasing to the right and positive,
entries above each pivot reduced into ``[0, pivot)``.  Pivots are chosen by
least absolute value to keep entry growth down.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def _axpy(dst: List[int], q: int, src: List[int]) -> None:
    # dst -= q * src, in place
    for j, s in enumerate(src):
        if s:
            dst[j] -= q * s


def hnf_with_transform(a: Sequence[Sequence[int]], ncols: Optional[int] = None
                       ) -> Tuple[Matrix, Matrix, List[int]]:
    """Row Hermite normal form.

    Returns ``(H, U, pivots)`` with ``U @ a == H``, ``U`` unimodular, and
    ``pivots[i]`` the pivot column of row ``i`` for ``i < len(pivots)``;
    rows from ``len(pivots)`` on are zero.
    """
    m = [list(map(int, row)) for row in a]
    nrows = len(m)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    u = identity(nrows)
    r = 0
    pivots: List[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if m[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(m[i][c]))
            if p != r:
                m[p], m[r] = m[r], m[p]
                u[p], u[r] = u[r], u[p]
            piv = m[r][c]
            clean = True
            for i in range(r + 1, nrows):
                x = m[i][c]
                if x:
                    q = x // piv
                    _axpy(m[i], q, m[r])
                    _axpy(u[i], q, u[r])
                    if m[i][c]:
                        clean = False
            if clean:
                break
        if r >= nrows or m[r][c] == 0:
            continue
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
            u[r] = [-x for x in u[r]]
        piv = m[r][c]
        for i in range(r):
            x = m[i][c]
            if x:
                q = x // piv
                if q:
                    _axpy(m[i], q, m[r])
                    _axpy(u[i], q, u[r])
        pivots.append(c)
        r += 1
    return m, u, pivots


def hnf(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """Nonzero rows of the row Hermite normal form (a canonical lattice basis)."""
    h, _, piv = hnf_with_transform(a, ncols)
    return h[:len(piv)]


def pivot_columns(h: Sequence[Sequence[int]]) -> List[int]:
    return [next(j for j, x in enumerate(row) if x) for row in h]


def reduce_mod_lattice(v: Sequence[int], basis_hnf: Sequence[Sequence[int]]) -> List[int]:
    """Canonical representative of ``v`` modulo the row lattice of an HNF basis.

    At every pivot column the result lies in ``[0, pivot)``; two vectors give
    the same output iff they differ by a lattice vector.
    """
    v = list(v)
    for row in basis_hnf:
        c = next(j for j, x in enumerate(row) if x)
        q = v[c] // row[c]
        if q:
            _axpy(v, q, list(row))
    return v


def kernel_basis(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """HNF basis of ``{x in Z^n : a x = 0}`` (rows are basis vectors)."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return identity(ncols)
    at = transpose(a)
    h, u, piv = hnf_with_transform(at, len(a))
    rank = len(piv)
    ker = [u[i] for i in range(rank, ncols)]
    if not ker:
        return []
    return hnf(ker, ncols)


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int], ncols: Optional[int] = None
                  ) -> Optional[Tuple[List[int], Matrix]]:
    """Integer solution of ``a x = b``.

    Returns ``(x, kernel)`` where ``kernel`` is an HNF basis of the integer
    null space and ``x`` is the representative reduced modulo that kernel,
    or ``None`` when no integer solution exists.
    """
    if ncols is None:
        ncols = len(a[0]) if a else 0
    nrows = len(a)
    if len(b) != nrows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {nrows}")
    if ncols == 0:
        return ([], []) if not any(b) else None
    # U a^T = H  =>  a U^T = H^T, so x = U^T z with H^T z = b
    h, u, piv = hnf_with_transform(transpose(a, ncols), nrows)
    res = list(b)
    z = [0] * ncols
    for i, c in enumerate(piv):
        if any(res[j] for j in range(piv[i - 1] + 1 if i else 0, c)):
            return None
        q, rem = divmod(res[c], h[i][c])
        if rem:
            return None
        z[i] = q
        if q:
            _axpy(res, q, h[i])
    if any(res):
        return None
    x = [0] * ncols
    for i in range(len(piv)):
        if z[i]:
            _axpy(x, -z[i], u[i])
    ker_rows = [u[i] for i in range(len(piv), ncols)]
    ker = hnf(ker_rows, ncols) if ker_rows else []
    return reduce_mod_lattice(x, ker), ker


def smith_invariants(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form."""
    m = [list(map(int, row)) for row in a]
    nrows = len(m)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    diag = []
    t = 0
    while t < min(nrows, ncols):
        entries = [(abs(m[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if m[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            piv = m[t][t]
            changed = False
            for i in range(t + 1, nrows):
                if m[i][t]:
                    _axpy(m[i], m[i][t] // piv, m[t])
                    if m[i][t]:
                        changed = True
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // piv
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j]:
                        changed = True
            if not changed:
                bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                            if m[i][j] % piv), None)
                if bad is None:
                    break
                # fold a row carrying a non-multiple into the pivot row
                m[t] = [x + y for x, y in zip(m[t], m[bad[0]])]
                changed = True
            # move the smallest nonzero of row/column t onto the pivot
            cands = [(abs(m[i][t]), i, t) for i in range(t, nrows) if m[i][t]]
            cands += [(abs(m[t][j]), t, j) for j in range(t, ncols) if m[t][j]]
            _, pi, pj = min(cands)
            if pi != t:
                m[t], m[pi] = m[pi], m[t]
            if pj != t:
                for row in m:
                    row[t], row[pj] = row[pj], row[t]
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def rank(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> int:
    _, _, piv = hnf_with_transform(a, ncols)
    return len(piv)
