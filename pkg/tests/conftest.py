"""Shared test helpers: an independent brute-force embedding decider and
a fixed-seed corpus of random negative definite forms."""

import random

import pytest

from doubletwist.embed import enumerate_vectors
from doubletwist.forms import GramForm, is_negative_definite

CORPUS_SEED = 20250823


def naive_embedding_exists(g):
    """Unpruned reference search: try every vector of the right norm for
    every column in source order, checking inner products directly.
    Exponential, for small dimensions only."""
    d = g.dim
    cands = {}
    for j in range(d):
        norm = -g[j, j]
        if norm < 1:
            return False
        if norm not in cands:
            cands[norm] = enumerate_vectors(norm, d)
    cols = []

    def rec(j):
        if j == d:
            return True
        for v in cands[-g[j, j]]:
            if all(sum(x * y for x, y in zip(v, cols[t])) == -g[t, j]
                   for t in range(j)):
                cols.append(v)
                if rec(j + 1):
                    return True
                cols.pop()
        return False

    return rec(0)


def random_negative_definite_forms(count, max_dim=6, seed=CORPUS_SEED):
    """Deterministic corpus: symmetric integer matrices with diagonal in
    [-5, -1] and small off-diagonal entries, filtered for definiteness."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, max_dim)
        rows = [[0] * d for _ in range(d)]
        for i in range(d):
            rows[i][i] = -rng.randint(1, 5)
            for j in range(i):
                v = rng.randint(-2, 2)
                rows[i][j] = rows[j][i] = v
        g = GramForm.from_rows(rows)
        if is_negative_definite(g):
            out.append(g)
    return out


@pytest.fixture(scope="session")
def small_form_corpus():
    return random_negative_definite_forms(200)
