"""Multi-index sets, rank formulas, and the dimension-count identity.

The index set K(n, m, r) collects tuples (k_1..k_{n-1}, l_1^{(1)}..l_n^{(r)})
of nonnegative integers summing to m.  Its size, C(rn+n+m-2, m), is the rank
of the multifork span; the Lawrence quotient and the weight/singular spaces
of the current-algebra side have the companion binomial counts below.
"""

from __future__ import annotations

import math
from typing import NamedTuple


def binom(a, b):
    """C(a, b) with the counting convention C(a, 0) = 1, C(a<0, b>0) = 0."""
    if b == 0:
        return 1
    if b < 0 or a < 0:
        return 0
    return math.comb(a, b)


class MultiIndexK(NamedTuple):
    k: tuple            # length n-1
    l: tuple            # n rows of length r

    def total(self):
        return sum(self.k) + sum(sum(row) for row in self.l)


def compositions(total, parts):
    """All tuples of `parts` nonnegative ints summing to `total`, lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_K(n, m, r):
    """All multi-indices of K(n, m, r), lex-ordered on (k, l row-major)."""
    if n < 1 or m < 0 or r < 1:
        raise ValueError("require n >= 1, m >= 0, r >= 1")
    out = []
    for flat in compositions(m, (n - 1) + r * n):
        k = flat[: n - 1]
        l = tuple(flat[n - 1 + i * r : n - 1 + (i + 1) * r] for i in range(n))
        out.append(MultiIndexK(k, l))
    return out


def rank_formulas(n, m, r):
    """The five desk-scale dimension counts for given (n, m, r).

    rank_L is the multifork span, rank_quotient the Lawrence quotient,
    rank_N their difference; dim_W and dim_S are the weight space and
    singular subspace of the current-algebra side at uniform truncation.
    """
    if n < 1 or m < 0 or r < 1:
        raise ValueError("require n >= 1, m >= 0, r >= 1")
    rank_L = binom(r * n + n + m - 2, m)
    rank_quotient = binom(n + m - 2, m)
    return {
        "rank_L": rank_L,
        "rank_N": rank_L - rank_quotient,
        "rank_quotient": rank_quotient,
        "dim_W": binom(r * n + n + m - 1, m),
        "dim_S": binom(r * n + n + m - 2, m),
    }


def vandermonde_check(n, m, r):
    """Verify sum_p C(rn+m-p-1, m-p) C(n+p-2, p) = C(rn+n+m-2, m).

    Returns (ok, summands, total): the stratified counts and their sum
    against the closed form.
    """
    if n < 2 or m < 0 or r < 1:
        raise ValueError("require n >= 2, m >= 0, r >= 1")
    summands = [
        binom(r * n + m - p - 1, m - p) * binom(n + p - 2, p) for p in range(m + 1)
    ]
    total = sum(summands)
    return total == binom(r * n + n + m - 2, m), summands, total
