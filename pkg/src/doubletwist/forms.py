"""Intersection forms of definite fillings of branched covers of double twist knots.

Everything here is exact integer linear algebra: construction of the
cyclic (circulant) block, the block-tridiagonal form for general twist
parameters, direct sums, and definiteness/determinant tests via
fraction-free (Bareiss) elimination.  No floating point anywhere.

Basis convention for ``intersection_form(m, n, p)``: basis index
``k*p + i`` where ``k`` in ``[0, n-1]`` is the block index and ``i`` in
``[0, p-1]`` is the cyclic index inside a block.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class GramForm:
    """A symmetric integer matrix, stored as a tuple of row tuples."""

    dim: int
    entries: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if len(self.entries) != self.dim:
            raise ValueError("entries must be a dim x dim matrix")
        for row in self.entries:
            if len(row) != self.dim:
                raise ValueError("entries must be a dim x dim matrix")
        for i in range(self.dim):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("entries must be symmetric")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self):
        return [list(row) for row in self.entries]

    def to_json(self):
        """JSON object with decimal-string integer entries."""
        return {
            "dim": self.dim,
            "rows": [[str(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj):
        rows = tuple(tuple(int(x) for x in row) for row in obj["rows"])
        return cls(dim=int(obj["dim"]), entries=rows)

    @classmethod
    def from_rows(cls, rows):
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        return cls(dim=len(entries), entries=entries)

    def canonical_bytes(self):
        """Stable serialization used for hashing/caching."""
        return json.dumps(self.to_json(), sort_keys=True,
                          separators=(",", ":")).encode()


def circulant_block(m, p):
    """The p x p cyclic block: diagonal 2m-1, entries -m at cyclic neighbors.

    Requires m < 0 and p >= 3 (at p = 2 the two neighbor positions merge,
    so the displayed matrix is not defined).
    """
    if m >= 0:
        raise ValueError("m must be negative")
    if p <= 2:
        raise ValueError("p must be >= 3")
    rows = []
    for i in range(p):
        row = [0] * p
        row[i] = 2 * m - 1
        row[(i + 1) % p] = -m
        row[(i - 1) % p] = -m
        rows.append(row)
    return GramForm.from_rows(rows)


def intersection_form(m, n, p):
    """The np x np block-tridiagonal form Q_p(m, n).

    Block (0,0) is ``circulant_block(m, p)``; the other diagonal blocks
    are -2I_p; super/subdiagonal blocks are I_p.  For n = 1 this is just
    the circulant block.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    top = circulant_block(m, p)
    d = n * p
    rows = [[0] * d for _ in range(d)]
    for i in range(p):
        for j in range(p):
            rows[i][j] = top[i, j]
    for k in range(1, n):
        for i in range(p):
            rows[k * p + i][k * p + i] = -2
    for k in range(n - 1):
        for i in range(p):
            rows[k * p + i][(k + 1) * p + i] = 1
            rows[(k + 1) * p + i][k * p + i] = 1
    return GramForm.from_rows(rows)


def direct_sum(forms):
    """Block-diagonal sum of a nonempty list of GramForms."""
    forms = list(forms)
    if not forms:
        raise ValueError("direct_sum of an empty list")
    d = sum(f.dim for f in forms)
    rows = [[0] * d for _ in range(d)]
    off = 0
    for f in forms:
        for i in range(f.dim):
            for j in range(f.dim):
                rows[off + i][off + j] = f[i, j]
        off += f.dim
    return GramForm.from_rows(rows)


def bareiss_determinant(rows):
    """Exact determinant of an integer matrix by fraction-free elimination."""
    m = [list(row) for row in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def determinant(g):
    """Exact determinant of a GramForm."""
    return bareiss_determinant(g.entries)


def leading_principal_minors(g):
    """All leading principal minors, exactly (Bareiss pivots).

    Stops early with a 0 entry if a pivot vanishes; callers that only
    need definiteness can treat a zero minor as "not definite".
    """
    m = [list(row) for row in g.entries]
    n = g.dim
    minors = []
    prev = 1
    for k in range(n):
        if k > 0:
            pivot = m[k - 1][k - 1]
            if pivot == 0:
                minors.extend([0] * (n - k))
                return minors
            for i in range(k, n):
                mik = m[i][k - 1]
                row_i = m[i]
                row_k = m[k - 1]
                for j in range(k, n):
                    row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            prev = pivot
        minors.append(m[k][k])
    return minors


def is_negative_definite(g):
    """True iff -g is positive definite, by exact leading-minor signs."""
    for k, minor in enumerate(leading_principal_minors(g), start=1):
        if minor == 0:
            return False
        if (minor > 0) != (k % 2 == 0):
            return False
    return True
