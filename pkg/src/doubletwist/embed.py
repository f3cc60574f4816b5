"""Lattice embeddings into the standard negative definite lattice.

A codimension-0 embedding of a negative definite GramForm G is a square
integer matrix A with A^T A = -G (columns = images of the source basis
in the standard basis of <-1>^dim).  ``search_embedding`` decides
existence by backtracking over columns with symmetry pruning;
``example_embedding_slice`` and ``example_embedding_rational`` build the
explicit witnesses for the two embeddable families Q_p(m, -m+1) and
Q_p(m, -m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .forms import GramForm, is_negative_definite

FOUND = "Found"
NONE_EXISTS = "NoneExists"
UNKNOWN = "Unknown"

DEFAULT_NODE_BUDGET = 10 ** 8


@dataclass(frozen=True)
class EmbeddingWitness:
    """Square integer matrix whose column j is the image of basis vector j."""

    dim: int
    columns: tuple

    def __post_init__(self):
        if len(self.columns) != self.dim:
            raise ValueError("need dim columns")
        for col in self.columns:
            if len(col) != self.dim:
                raise ValueError("columns must have length dim")

    def to_json(self):
        return {
            "dim": self.dim,
            "columns": [[str(x) for x in col] for col in self.columns],
        }

    @classmethod
    def from_json(cls, obj):
        cols = tuple(tuple(int(x) for x in col) for col in obj["columns"])
        return cls(dim=int(obj["dim"]), columns=cols)

    @classmethod
    def from_columns(cls, columns):
        cols = tuple(tuple(int(x) for x in col) for col in columns)
        return cls(dim=len(cols), columns=cols)


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    witness: Optional[EmbeddingWitness]
    nodes_explored: int
    budget_exhausted: bool

    def __post_init__(self):
        if self.status not in (FOUND, NONE_EXISTS, UNKNOWN):
            raise ValueError("bad status")
        if (self.status == FOUND) != (self.witness is not None):
            raise ValueError("witness present iff Found")
        if self.status == NONE_EXISTS and self.budget_exhausted:
            raise ValueError("NoneExists requires full exhaustion")

    def to_json(self):
        return {
            "status": self.status,
            "witness": self.witness.to_json() if self.witness else None,
            "nodes_explored": str(self.nodes_explored),
            "budget_exhausted": self.budget_exhausted,
        }


def verify_witness(g, a):
    """Exact check that A^T A = -G."""
    if g.dim != a.dim:
        raise ValueError("dimension mismatch")
    d = g.dim
    cols = a.columns
    for i in range(d):
        ci = cols[i]
        for j in range(i, d):
            cj = cols[j]
            if sum(x * y for x, y in zip(ci, cj)) != -g[i, j]:
                return False
    return True


def enumerate_vectors(norm, dim):
    """All integer vectors of squared length ``norm`` in ``dim`` coordinates.

    Deterministic order: lexicographic with entries descending from the
    largest feasible value at each coordinate.
    """
    if norm < 1 or dim < 1:
        raise ValueError("norm and dim must be >= 1")
    out = []
    vec = [0] * dim

    def extend(idx, rem):
        if idx == dim:
            if rem == 0:
                out.append(tuple(vec))
            return
        top = math.isqrt(rem)
        for v in range(top, -top - 1, -1):
            vec[idx] = v
            extend(idx + 1, rem - v * v)
        vec[idx] = 0

    extend(0, norm)
    return out


class _Budget(Exception):
    pass


def search_embedding(g, node_budget=DEFAULT_NODE_BUDGET):
    """Decide whether G embeds in <-1>^dim, with a verified witness if so.

    Backtracking over columns a_1, ..., a_dim with a_i . a_j = -g[i][j].
    Columns are processed in ascending |diagonal| order (ties by index).
    Pruning:

    * hyperoctahedral symmetry of the target: each new column is required
      to be canonical under the stabilizer of the already-placed columns
      (nonincreasing on each block of coordinates where the placed
      columns agree, nonnegative where they all vanish);
    * Cauchy-Schwarz feasibility of every partial inner product.

    A non-definite input cannot embed in a definite lattice and returns
    NoneExists immediately.  Exceeding ``node_budget`` coordinate
    extensions returns Unknown.
    """
    if node_budget is not None and node_budget <= 0:
        raise ValueError("node_budget must be positive")
    d = g.dim
    if not is_negative_definite(g):
        return SearchOutcome(NONE_EXISTS, None, 0, False)

    order = sorted(range(d), key=lambda j: (-g[j, j], j))
    tgt = [[-g[order[i], order[j]] for j in range(d)] for i in range(d)]
    norms = [tgt[i][i] for i in range(d)]

    nodes = 0
    cols = []  # placed columns, original coordinate indexing

    def place_column(j):
        nonlocal nodes
        # Coordinate classes: coordinates with identical placed values are
        # interchangeable; all-zero classes additionally admit sign flips.
        keys = [tuple(c[x] for c in cols) for x in range(d)]
        coord_order = sorted(range(d), key=lambda x: (keys[x], x))
        prev_vals = [[c[x] for x in coord_order] for c in cols]
        # suffix sums of squares per placed column, for Cauchy-Schwarz
        suffix = []
        for pv in prev_vals:
            s = [0] * (d + 1)
            for idx in range(d - 1, -1, -1):
                s[idx] = s[idx + 1] + pv[idx] * pv[idx]
            suffix.append(s)
        targets = [tgt[t][j] for t in range(j)]
        vec = [0] * d

        def extend(idx, rem, dots):
            nonlocal nodes
            if idx == d:
                if rem != 0:
                    return False
                col = [0] * d
                for pos, x in enumerate(coord_order):
                    col[x] = vec[pos]
                cols.append(col)
                if j + 1 == d or place_column(j + 1):
                    return True
                cols.pop()
                return False
            x = coord_order[idx]
            key = keys[x]
            # canonical bounds from the residual symmetry
            hi = math.isqrt(rem)
            if idx > 0 and keys[coord_order[idx - 1]] == key:
                hi = min(hi, vec[idx - 1])
            lo = 0 if not any(key) else -math.isqrt(rem)
            for v in range(hi, lo - 1, -1):
                nodes += 1
                if node_budget is not None and nodes > node_budget:
                    raise _Budget
                rem2 = rem - v * v
                ok = True
                new_dots = []
                for t in range(j):
                    dt = dots[t] + v * prev_vals[t][idx]
                    gap = targets[t] - dt
                    if gap * gap > rem2 * suffix[t][idx + 1]:
                        ok = False
                        break
                    new_dots.append(dt)
                if not ok:
                    continue
                vec[idx] = v
                if extend(idx + 1, rem2, new_dots):
                    return True
            vec[idx] = 0
            return False

        return extend(0, norms[j], [0] * j)

    try:
        found = place_column(0)
    except _Budget:
        return SearchOutcome(UNKNOWN, None, nodes, True)

    if not found:
        return SearchOutcome(NONE_EXISTS, None, nodes, False)

    # undo the column permutation: witness column for source index order[i]
    columns = [None] * d
    for i, src in enumerate(order):
        columns[src] = tuple(cols[i])
    witness = EmbeddingWitness.from_columns(columns)
    assert verify_witness(g, witness)
    return SearchOutcome(FOUND, witness, nodes, False)


def _witness_from_vwx(m, p, n, v_of):
    """Assemble the witness for Q_p(m, n) from the v/w/x column recipe.

    Standard basis layout: a_1..a_p, b_1..b_p, c_1..c_{(n-2)p} at offsets
    0, p, 2p.  ``v_of(i)`` returns the v_i column (0-based cyclic i);
    w_i = a_i - b_i and the x chain descends through the c blocks.
    """
    d = n * p

    def a(i):
        return i % p

    def b(i):
        return p + i % p

    def c(j):
        return 2 * p + j

    cols = []
    for i in range(p):
        cols.append(v_of(i, a, b, c))
    for i in range(p):
        col = [0] * d
        col[a(i)] = 1
        col[b(i)] = -1
        cols.append(col)
    if n >= 3:
        for i in range(p):
            col = [0] * d
            col[b(i)] = 1
            col[c(i)] = -1
            cols.append(col)
    for k in range(1, n - 2):
        for i in range(p):
            col = [0] * d
            col[c(p * (k - 1) + i)] = 1
            col[c(p * k + i)] = -1
            cols.append(col)
    return EmbeddingWitness.from_columns(cols)


def example_embedding_slice(m, p):
    """Explicit embedding of Q_p(m, -m+1) in <-1>^{np} with n = -m+1.

    v_i = b_i + c_i + c_{p+i} + ... + c_{(n-3)p+i}
          - (a_{i+1} + b_{i+1} + c_{i+1} + ... + c_{(n-3)p+i+1}),
    w_i = a_i - b_i, x_i = b_i - c_i, x_{pk+i} = c_{p(k-1)+i} - c_{pk+i},
    with indices cyclic mod p.
    """
    if m >= 0:
        raise ValueError("m must be negative")
    if p < 3:
        raise ValueError("p must be >= 3")
    n = -m + 1

    def v_of(i, a, b, c):
        col = [0] * (n * p)
        col[b(i)] = 1
        for k in range(n - 2):
            col[c(p * k + i)] = 1
        col[a(i + 1)] -= 1
        col[b(i + 1)] -= 1
        for k in range(n - 2):
            col[c(p * k + (i + 1) % p)] -= 1
        return col

    return _witness_from_vwx(m, p, n, v_of)


def example_embedding_rational(m, p):
    """Explicit embedding of Q_p(m, -m) in <-1>^{np} with n = -m >= 2, p odd.

    With p = 2q + 1:
    v_i = -a_i + (a_{i+q} + b_{i+q} + c_{i+q} + ... + c_{p(n-3)+i+q})
              - (a_{i+q+1} + b_{i+q+1} + c_{i+q+1} + ... + c_{p(n-3)+i+q+1}),
    w and x columns as in the slice case.
    """
    if m >= 0:
        raise ValueError("m must be negative")
    if p < 3:
        raise ValueError("p must be >= 3")
    if p % 2 == 0:
        raise ValueError("p must be odd")
    n = -m
    if n < 2:
        raise ValueError("n = -m = 1 has no v/w/x decomposition; "
                         "use search_embedding")
    q = (p - 1) // 2

    def v_of(i, a, b, c):
        col = [0] * (n * p)
        col[a(i)] -= 1
        col[a(i + q)] += 1
        col[b(i + q)] += 1
        for k in range(n - 2):
            col[c(p * k + (i + q) % p)] += 1
        col[a(i + q + 1)] -= 1
        col[b(i + q + 1)] -= 1
        for k in range(n - 2):
            col[c(p * k + (i + q + 1) % p)] -= 1
        return col

    return _witness_from_vwx(m, p, n, v_of)
