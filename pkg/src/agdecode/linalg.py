"""Gaussian elimination over a GF on lists of rows."""

from __future__ import annotations

__all__ = ["echelon", "rank", "inverse", "solve", "in_row_space", "IncrementalRank"]


def echelon(F, rows):
    """Reduced row echelon form; returns (rows, pivot columns), zero rows dropped."""
    m = [list(r) for r in rows]
    pivots = []
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(F, rows) -> int:
    return len(echelon(F, rows)[1])


def inverse(F, mat):
    n = len(mat)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat)]
    red, piv = echelon(F, aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def solve(F, mat, rhs):
    """Solve ``mat @ x = rhs`` for square invertible ``mat``."""
    inv = inverse(F, mat)
    return matvec(F, inv, rhs)


def matvec(F, mat, vec):
    out = []
    for row in mat:
        acc = 0
        for a, b in zip(row, vec):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def in_row_space(F, rows, vec) -> bool:
    return rank(F, list(rows) + [vec]) == rank(F, rows)


class IncrementalRank:
    """Maintains an echelon basis so rank growth can be tested one vector at a time."""

    def __init__(self, F):
        self.F = F
        self.basis = {}  # pivot column -> normalized row

    def __len__(self):
        return len(self.basis)

    def reduce(self, vec):
        F = self.F
        v = list(vec)
        for c in sorted(self.basis):
            if v[c]:
                f = v[c]
                v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, self.basis[c])]
        return v

    def add(self, vec) -> bool:
        """Insert vec; return True iff it increased the rank."""
        v = self.reduce(vec)
        c = next((i for i, x in enumerate(v) if x), None)
        if c is None:
            return False
        inv = self.F.inv(v[c])
        v = [self.F.mul(inv, x) for x in v]
        # keep the basis fully reduced on pivot columns
        F = self.F
        for pc, row in self.basis.items():
            if row[c]:
                f = row[c]
                self.basis[pc] = [F.sub(x, F.mul(f, y)) for x, y in zip(row, v)]
        self.basis[c] = v
        return True
