"""Framed Burau representations, their reduced form, and the determinant
invariant of the plat closure.

The full representation acts on a free Z[q^{+-1}]-module with basis
(a_1..a_n, b_1^{(1)}..b_1^{(r)}, ..., b_n^{(1)}..b_n^{(r)}); crossings mix
the a_i with one column of b's, twists cycle the b-tower of one strand with
total weight q.  The subspace spanned by differences of adjacent a's
together with all b's is closed under every generator and carries the
reduced representation of rank n-1+rn.

The difference vectors are taken as c_i = a_{i+1} - a_i.  The alternative
normalization c_i = a_{i+1} - q^{-1} a_i is *not* preserved by the crossing
action (sigma_1 c_1 lands outside the span); `reduced_convention` probes
both candidates at build time and records which closes, so a silent wrong
choice is impossible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import LaurentPoly2, ONE, Q, RationalQT, ZERO, det_bareiss, exact_div

Q_INV = LaurentPoly2.monomial(1, -1, 0)


@dataclass(frozen=True)
class RepMatrix:
    dim: int
    entries: tuple  # dim x dim, row-major tuples of LaurentPoly2
    basis_labels: tuple

    def __matmul__(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        n = self.dim
        cols = [[other.entries[k][j] for k in range(n)] for j in range(n)]
        rows = []
        for i in range(n):
            arow = self.entries[i]
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    if not arow[k].is_zero() and not cols[j][k].is_zero():
                        acc = acc + arow[k] * cols[j][k]
                row.append(acc)
            rows.append(tuple(row))
        return RepMatrix(n, tuple(rows), self.basis_labels)

    def __eq__(self, other):
        return (
            isinstance(other, RepMatrix)
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def column(self, j):
        return [self.entries[i][j] for i in range(self.dim)]

    def determinant(self):
        return det_bareiss([list(r) for r in self.entries])

    def to_json_obj(self):
        return {
            "dim": self.dim,
            "basis_labels": list(self.basis_labels),
            "entries": [[e.to_json_obj() for e in row] for row in self.entries],
        }

    def specialize(self, q_val, t_val=1.0):
        """Complex matrix of the entries at a numeric (q, t) point."""
        import numpy as np

        out = np.zeros((self.dim, self.dim), dtype=complex)
        for i in range(self.dim):
            for j in range(self.dim):
                out[i, j] = self.entries[i][j].evaluate(q_val, t_val)
        return out


def _identity(labels):
    n = len(labels)
    rows = tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )
    return RepMatrix(n, rows, tuple(labels))


def full_basis_labels(n, r):
    labels = ["a%d" % i for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for s in range(1, r + 1):
            labels.append("b%d^(%d)" % (i, s))
    return tuple(labels)


def reduced_basis_labels(n, r):
    labels = ["c%d" % i for i in range(1, n)]
    for i in range(1, n + 1):
        for s in range(1, r + 1):
            labels.append("b%d^(%d)" % (i, s))
    return tuple(labels)


def _a(n, r, i):
    return i - 1


def _b(n, r, i, s):
    return n + (i - 1) * r + (s - 1)


def _from_columns(columns, labels):
    n = len(columns)
    rows = tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))
    return RepMatrix(n, rows, tuple(labels))


def full_generator_matrix(n, r, kind, idx, exp=1):
    """Matrix of one generator (or its inverse) on the full basis."""
    if r < 1 or n < 1:
        raise ValueError("require n >= 1, r >= 1")
    labels = full_basis_labels(n, r)
    dim = n + r * n
    cols = []
    for j in range(dim):
        col = [ZERO] * dim
        col[j] = ONE
        cols.append(col)

    def setcol(j, pairs):
        col = [ZERO] * dim
        for jj, coeff in pairs:
            col[jj] = col[jj] + coeff
        cols[j] = col

    if kind == "s":
        if not 1 <= idx <= n - 1:
            raise ValueError("s index out of range")
        i = idx
        if exp == 1:
            # a_i -> (1-q) a_i + q a_{i+1} - sum_s b_i^{(s)}
            pairs = [(_a(n, r, i), ONE - Q), (_a(n, r, i + 1), Q)]
            pairs += [(_b(n, r, i, s), -ONE) for s in range(1, r + 1)]
            setcol(_a(n, r, i), pairs)
            setcol(_a(n, r, i + 1), [(_a(n, r, i), ONE)])
            for s in range(1, r + 1):
                setcol(_b(n, r, i, s), [(_b(n, r, i + 1, s), Q)])
                setcol(_b(n, r, i + 1, s), [(_b(n, r, i, s), ONE)])
        else:
            setcol(_a(n, r, i), [(_a(n, r, i + 1), ONE)])
            pairs = [(_a(n, r, i), Q_INV), (_a(n, r, i + 1), ONE - Q_INV)]
            pairs += [(_b(n, r, i + 1, s), Q_INV) for s in range(1, r + 1)]
            setcol(_a(n, r, i + 1), pairs)
            for s in range(1, r + 1):
                setcol(_b(n, r, i, s), [(_b(n, r, i + 1, s), ONE)])
                setcol(_b(n, r, i + 1, s), [(_b(n, r, i, s), Q_INV)])
    elif kind == "t":
        if not 1 <= idx <= n:
            raise ValueError("t index out of range")
        i = idx
        if exp == 1:
            setcol(_a(n, r, i), [(_a(n, r, i), ONE), (_b(n, r, i, r), -Q)])
            for s in range(2, r + 1):
                setcol(_b(n, r, i, s), [(_b(n, r, i, s - 1), ONE)])
            setcol(_b(n, r, i, 1), [(_b(n, r, i, r), Q)])
        else:
            setcol(_a(n, r, i), [(_a(n, r, i), ONE), (_b(n, r, i, 1), ONE)])
            for s in range(1, r):
                setcol(_b(n, r, i, s), [(_b(n, r, i, s + 1), ONE)])
            setcol(_b(n, r, i, r), [(_b(n, r, i, 1), Q_INV)])
    else:
        raise ValueError("unknown generator kind %r" % (kind,))
    return _from_columns(cols, labels)


def full_burau_matrix(n, r, w):
    """Product of generator matrices in word order on the (n+rn)-basis."""
    if w.n != n:
        raise ValueError("word strand count differs from n")
    mat = _identity(full_basis_labels(n, r))
    for kind, idx, exp in w.letters:
        mat = mat @ full_generator_matrix(n, r, kind, idx, exp)
    return mat


# -- reduced representation ---------------------------------------------------


class ClosureError(ValueError):
    """A candidate difference-vector span is not generator-invariant."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


_C_CANDIDATES = (
    ("a_{i+1} - a_i", -ONE),
    ("a_{i+1} - q^{-1} a_i", -Q_INV),
)


def _reduce_full_matrix(full, n, r, beta):
    """Express a full matrix on the span {c_i = a_{i+1} + beta a_i, b_i^{(s)}}.

    Solving the bidiagonal a-part is exact because beta is a unit; the last
    a-coordinate must close the telescope, else the span is not preserved.
    """
    dim_red = (n - 1) + r * n
    labels = reduced_basis_labels(n, r)
    neg_inv_beta = exact_div(-ONE, beta)
    cols = []
    for j in range(dim_red):
        if j < n - 1:
            vec = [ZERO] * full.dim
            vec[_a(n, r, j + 1)] = vec[_a(n, r, j + 1)] + beta
            vec[_a(n, r, j + 2)] = vec[_a(n, r, j + 2)] + ONE
        else:
            vec = [ZERO] * full.dim
            vec[n + (j - (n - 1))] = ONE
        img = [ZERO] * full.dim
        for k in range(full.dim):
            if not vec[k].is_zero():
                col = full.column(k)
                img = [img[i] + col[i] * vec[k] for i in range(full.dim)]
        # solve u = sum_j y_j c_j on the a-part, then check the residual
        u = img[:n]
        y = []
        carry = ZERO
        for kk in range(n - 1):
            yk = (u[kk] - carry) * neg_inv_beta * (-ONE)
            # (u_k - y_{k-1}) / beta, with beta a unit
            yk = exact_div(u[kk] - carry, beta)
            y.append(yk)
            carry = yk
        residual = u[n - 1] - carry if n >= 2 else u[0]
        if n == 1:
            residual = u[0]
        if not residual.is_zero():
            raise ClosureError(
                "span not preserved; offending a-residual %s" % residual, residual
            )
        red_col = y + img[n:]
        cols.append(red_col)
    return _from_columns(cols, labels)


def reduced_convention(n, r):
    """Probe both difference-vector candidates against every generator.

    Returns (name, beta, report) where report lists the candidates that
    failed with a sample residual.  Exactly one candidate is expected to
    close; a total failure raises ClosureError.
    """
    gens = [("s", i, e) for i in range(1, n) for e in (1, -1)]
    gens += [("t", i, e) for i in range(1, n + 1) for e in (1, -1)]
    failures = []
    for name, beta in _C_CANDIDATES:
        try:
            for kind, idx, exp in gens:
                _reduce_full_matrix(
                    full_generator_matrix(n, r, kind, idx, exp), n, r, beta
                )
        except ClosureError as err:
            failures.append({"candidate": name, "residual": str(err.residual)})
            continue
        return name, beta, failures
    raise ClosureError("no difference-vector candidate closes", None)


def reduced_generator_matrix(n, r, kind, idx, exp=1):
    _name, beta, _failures = reduced_convention(n, r)
    return _reduce_full_matrix(
        full_generator_matrix(n, r, kind, idx, exp), n, r, beta
    )


def reduced_burau_matrix(n, r, w, _allow_n1=False):
    """Word matrix on (c_1..c_{n-1}, b_1^{(1)}..b_n^{(r)}), rank n-1+rn."""
    if n < 2 and not _allow_n1:
        raise ValueError("reduced representation needs n >= 2")
    if w.n != n:
        raise ValueError("word strand count differs from n")
    mat = _identity(reduced_basis_labels(n, r))
    for kind, idx, exp in w.letters:
        mat = mat @ reduced_generator_matrix(n, r, kind, idx, exp)
    return mat


def quotient_burau_matrix(n, r, w):
    """Unreduced Burau block: the full matrix modulo the b-span."""
    full = full_burau_matrix(n, r, w)
    rows = tuple(tuple(full.entries[i][j] for j in range(n)) for i in range(n))
    return RepMatrix(n, rows, full.basis_labels[:n])


# -- relation verification ------------------------------------------------------


def _relations(n):
    rel = []
    for i in range(1, n - 1):
        rel.append(
            ("s%d s%d s%d = s%d s%d s%d" % (i, i + 1, i, i + 1, i, i + 1),
             [("s", i), ("s", i + 1), ("s", i)],
             [("s", i + 1), ("s", i), ("s", i + 1)])
        )
    for i in range(1, n):
        for j in range(i + 2, n):
            rel.append(
                ("s%d s%d = s%d s%d" % (i, j, j, i),
                 [("s", i), ("s", j)], [("s", j), ("s", i)])
            )
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rel.append(
                ("t%d t%d = t%d t%d" % (i, j, j, i),
                 [("t", i), ("t", j)], [("t", j), ("t", i)])
            )
    for i in range(1, n):
        for j in range(1, n + 1):
            if j == i:
                rhs = [("t", i + 1), ("s", i)]
            elif j == i + 1:
                rhs = [("t", i), ("s", i)]
            else:
                rhs = [("t", j), ("s", i)]
            rel.append(
                ("s%d t%d" % (i, j), [("s", i), ("t", j)], rhs)
            )
    return rel


def verify_relations(n, r, rep="full"):
    """Exact check of every defining relation; returns the list of failures.

    Each entry reports the relation and the first nonzero entry of
    LHS - RHS.  An empty list means all relations hold exactly.
    """
    if n < 2:
        raise ValueError("relations need n >= 2")
    if rep == "full":
        gen = lambda kind, idx: full_generator_matrix(n, r, kind, idx)
    elif rep == "reduced":
        gen = lambda kind, idx: reduced_generator_matrix(n, r, kind, idx)
    else:
        raise ValueError("rep must be 'full' or 'reduced'")
    cache = {}

    def g(kind, idx):
        if (kind, idx) not in cache:
            cache[(kind, idx)] = gen(kind, idx)
        return cache[(kind, idx)]

    def prod(word):
        mat = g(*word[0])
        for item in word[1:]:
            mat = mat @ g(*item)
        return mat

    failures = []
    for name, lhs, rhs in _relations(n):
        a, b = prod(lhs), prod(rhs)
        if a != b:
            diff = None
            for i in range(a.dim):
                for j in range(a.dim):
                    d = a.entries[i][j] - b.entries[i][j]
                    if not d.is_zero():
                        diff = ((i, j), str(d))
                        break
                if diff:
                    break
            failures.append({"relation": name, "first_difference": diff})
    return failures


# -- determinant invariant --------------------------------------------------------


def framed_alexander(n, r, w):
    """((q-1)/(q^n-1)) det(I - reduced word matrix), as a reduced fraction.

    For n = 1 the reduced space is the rn-dimensional b-tower and the
    prefactor cancels to 1 before any division happens.
    """
    mat = reduced_burau_matrix(n, r, w, _allow_n1=True)
    rows = []
    for i in range(mat.dim):
        rows.append(
            [
                (ONE if i == j else ZERO) - mat.entries[i][j]
                for j in range(mat.dim)
            ]
        )
    det = det_bareiss(rows)
    q_pow_n = LaurentPoly2.monomial(1, n, 0)
    return RationalQT(det * (Q - ONE), q_pow_n - ONE)
