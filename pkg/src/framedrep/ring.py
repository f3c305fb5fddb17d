"""Exact arithmetic over Z[q^{+-1}, t^{+-1}], its fraction field, and
quantum (-t)-binomial coefficients.

Polynomials are dicts mapping exponent pairs (e_q, e_t) to nonzero integer
coefficients.  Monomials are ordered lexicographically on (e_q, e_t); this
fixed order is what makes serialization and fraction normalization
deterministic.  Coefficients are Python ints, so nothing ever overflows.
"""

from __future__ import annotations

import math


class LaurentPoly2:
    """Integer Laurent polynomial in the two variables q and t.

    Invariants: no stored coefficient is zero, and equal polynomials have
    identical term maps.  Instances are treated as immutable values.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (eq, et), c in terms.items():
                if c:
                    clean[(int(eq), int(et))] = c
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls({(0, 0): int(c)})

    @classmethod
    def monomial(cls, c, eq, et=0):
        return cls({(eq, et): int(c)})

    # -- basic predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): 1}

    def is_monomial(self):
        return len(self.terms) == 1

    def is_unit(self):
        """True for +-q^a t^b, the units of the Laurent ring."""
        if len(self.terms) != 1:
            return False
        return abs(next(iter(self.terms.values()))) == 1

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        res = LaurentPoly2.__new__(LaurentPoly2)
        res.terms = out
        res._hash = None
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly2.__new__(LaurentPoly2)
        res.terms = {exp: -c for exp, c in self.terms.items()}
        res._hash = None
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly2()
            res = LaurentPoly2.__new__(LaurentPoly2)
            res.terms = {exp: c * other for exp, c in self.terms.items()}
            res._hash = None
            return res
        out = {}
        for (aq, at), ac in self.terms.items():
            for (bq, bt), bc in other.terms.items():
                exp = (aq + bq, at + bt)
                s = out.get(exp, 0) + ac * bc
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        res = LaurentPoly2.__new__(LaurentPoly2)
        res.terms = out
        res._hash = None
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    # -- structure ----------------------------------------------------------

    def leading(self):
        """Largest (exponent, coeff) in lex order on (e_q, e_t)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms)
        return exp, self.terms[exp]

    def min_exp(self, var):
        """Smallest exponent of variable var (0 = q, 1 = t); 0 if zero poly."""
        if not self.terms:
            return 0
        return min(exp[var] for exp in self.terms)

    def max_exp(self, var):
        if not self.terms:
            return 0
        return max(exp[var] for exp in self.terms)

    def shifted(self, dq, dt=0):
        """Multiply by the unit q^dq t^dt."""
        res = LaurentPoly2.__new__(LaurentPoly2)
        res.terms = {(eq + dq, et + dt): c for (eq, et), c in self.terms.items()}
        res._hash = None
        return res

    def int_content(self):
        """gcd of all integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, abs(c))
        return g

    def coeff_in(self, var, k):
        """Coefficient of var^k as a polynomial in the other variable."""
        other = 1 - var
        out = {}
        for exp, c in self.terms.items():
            if exp[var] == k:
                key = (0, exp[other]) if var == 0 else (exp[other], 0)
                out[key] = c
        return LaurentPoly2(out)

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, q_val, t_val):
        """Numeric value via per-variable Horner on the integer exponents."""
        if not self.terms:
            return 0j
        by_q = {}
        for (eq, et), c in self.terms.items():
            by_q.setdefault(eq, {})[et] = c
        minq = min(by_q)
        if minq < 0 and q_val == 0:
            raise ZeroDivisionError("q = 0 with negative exponent")
        acc = 0j
        for eq in range(max(by_q), minq - 1, -1):
            acc = acc * q_val + _horner_1var(by_q.get(eq, {}), t_val)
        if minq:
            acc = acc * _int_power(q_val, minq)
        return acc

    # -- serialization ---------------------------------------------------------

    def to_json_obj(self):
        return {
            "terms": [[eq, et, str(c)] for (eq, et), c in sorted(self.terms.items())]
        }

    @classmethod
    def from_json_obj(cls, obj):
        return cls({(int(eq), int(et)): int(c) for eq, et, c in obj["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (eq, et), c in sorted(self.terms.items(), reverse=True):
            mono = []
            if eq:
                mono.append("q" if eq == 1 else "q^%d" % eq)
            if et:
                mono.append("t" if et == 1 else "t^%d" % et)
            body = "*".join(mono)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = "%d*%s" % (abs(c), body)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    __repr__ = __str__


ZERO = LaurentPoly2()
ONE = LaurentPoly2.const(1)
Q = LaurentPoly2.monomial(1, 1, 0)
T = LaurentPoly2.monomial(1, 0, 1)


def _int_power(base, n):
    if n >= 0:
        return base ** n
    if base == 0:
        raise ZeroDivisionError("zero base with negative exponent")
    return (1.0 / base) ** (-n)


def _horner_1var(coeffs, x):
    """Evaluate {exponent: int} at x, exponents possibly negative."""
    if not coeffs:
        return 0j
    lo, hi = min(coeffs), max(coeffs)
    if lo < 0 and x == 0:
        raise ZeroDivisionError("t = 0 with negative exponent")
    acc = 0j
    for e in range(hi, lo - 1, -1):
        acc = acc * x + coeffs.get(e, 0)
    if lo:
        acc = acc * _int_power(x, lo)
    return acc


def lp_arith(a, b, op):
    """Dispatch {add, sub, mul} on two polynomials; exact, canonical result."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % (op,))


# -- exact division and gcd over Z[q, t] -------------------------------------


def exact_div(a, b):
    """Exact quotient a / b; raises ValueError when b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return ZERO
    # Exact quotients satisfy min_exp(quot) = min_exp(a) - min_exp(b)
    # per variable, which bounds the leading-term reduction below.
    floor_q = a.min_exp(0) - b.min_exp(0)
    floor_t = a.min_exp(1) - b.min_exp(1)
    (bexp, bc) = b.leading()
    quot = {}
    rem = a
    while not rem.is_zero():
        (rexp, rc) = rem.leading()
        dq, dt = rexp[0] - bexp[0], rexp[1] - bexp[1]
        if dq < floor_q or dt < floor_t or rc % bc:
            raise ValueError("not exactly divisible")
        c = rc // bc
        quot[(dq, dt)] = quot.get((dq, dt), 0) + c
        rem = rem - b.shifted(dq, dt) * c
    return LaurentPoly2(quot)


def _normalize_poly(p):
    """Unit- and sign-normalize: corner exponents 0, positive lex-leading coeff."""
    if p.is_zero():
        return p
    p = p.shifted(-p.min_exp(0), -p.min_exp(1))
    if p.leading()[1] < 0:
        p = -p
    return p


def _uses(p, var):
    return any(exp[var] for exp in p.terms)


def _content(p, var):
    """gcd over Z[other var] of the coefficients of powers of var."""
    g = ZERO
    for k in range(p.min_exp(var), p.max_exp(var) + 1):
        c = p.coeff_in(var, k)
        if not c.is_zero():
            g = poly_gcd(g, c)
    return g


def _prem(a, b, var):
    """Pseudo-remainder of a by b in the variable var."""
    db = b.max_exp(var)
    lb = b.coeff_in(var, db)
    r = a
    while not r.is_zero():
        dr = r.max_exp(var)
        if dr < db:
            break
        lr = r.coeff_in(var, dr)
        shift = (dr - db, 0) if var == 0 else (0, dr - db)
        r = lb * r - lr.shifted(*shift) * b
    return r


def poly_gcd(a, b):
    """gcd in Z[q, t] (inputs may be Laurent; units are quotiented away).

    Primitive pseudo-remainder sequence in the main variable with contents
    handled recursively; base case is the integer gcd.
    """
    a = _normalize_poly(a)
    b = _normalize_poly(b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    a_q, b_q = _uses(a, 0), _uses(b, 0)
    a_t, b_t = _uses(a, 1), _uses(b, 1)
    if not (a_q or b_q or a_t or b_t):
        g = math.gcd(a.terms.get((0, 0), 0), b.terms.get((0, 0), 0))
        return LaurentPoly2.const(g)
    var = 0 if (a_q or b_q) else 1
    if not _uses(a, var):
        return poly_gcd(a, _content(b, var))
    if not _uses(b, var):
        return poly_gcd(_content(a, var), b)
    ca, cb = _content(a, var), _content(b, var)
    g0 = poly_gcd(ca, cb)
    A = exact_div(a, ca)
    B = exact_div(b, cb)
    if A.max_exp(var) < B.max_exp(var):
        A, B = B, A
    while not B.is_zero():
        r = _prem(A, B, var)
        A = B
        if r.is_zero():
            B = ZERO
        else:
            B = exact_div(r, _content(r, var))
            B = _normalize_poly(B)
    return _normalize_poly(g0 * A)


class RationalQT:
    """Element of the fraction field Q(q, t), stored as a reduced pair.

    Canonical form: the denominator is a polynomial with corner exponents 0,
    positive lex-leading coefficient, coprime (over the rationals) to the
    polynomial part of the numerator, and gcd of all integer coefficients
    across the pair equal to 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if isinstance(num, int):
            num = LaurentPoly2.const(num)
        if isinstance(den, int):
            den = LaurentPoly2.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        shift = (-den.min_exp(0), -den.min_exp(1))
        den = den.shifted(*shift)
        num = num.shifted(*shift)
        unit = (num.min_exp(0), num.min_exp(1))
        num_poly = num.shifted(-unit[0], -unit[1])
        g = poly_gcd(num_poly, den)
        if not g.is_one():
            num_poly = exact_div(num_poly, g)
            den = exact_div(den, g)
        c = math.gcd(num_poly.int_content(), den.int_content())
        if c > 1:
            num_poly = LaurentPoly2(
                {e: v // c for e, v in num_poly.terms.items()}
            )
            den = LaurentPoly2({e: v // c for e, v in den.terms.items()})
        if den.leading()[1] < 0:
            num_poly, den = -num_poly, -den
        self.num = num_poly.shifted(*unit)
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = RationalQT(other)
        if isinstance(other, LaurentPoly2):
            other = RationalQT(other)
        if not isinstance(other, RationalQT):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, q_val, t_val):
        d = self.den.evaluate(q_val, t_val)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(q_val, t_val) / d

    def to_json_obj(self):
        return {
            "numerator": self.num.to_json_obj(),
            "denominator": self.den.to_json_obj(),
        }

    @classmethod
    def from_json_obj(cls, obj):
        return cls(
            LaurentPoly2.from_json_obj(obj["numerator"]),
            LaurentPoly2.from_json_obj(obj["denominator"]),
        )

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)

    __repr__ = __str__


def lp_eval(p, q_val, t_val):
    """Evaluate a polynomial or fraction at a numeric point (q, t)."""
    if isinstance(p, (LaurentPoly2, RationalQT)):
        return p.evaluate(q_val, t_val)
    raise TypeError("expected LaurentPoly2 or RationalQT")


# -- quantum (-t)-binomials --------------------------------------------------


def qt_integer(n):
    """[n] at -t: ((-t)^n - 1)/((-t) - 1) = sum_{u<n} (-t)^u."""
    if n < 0:
        raise ValueError("negative quantum integer")
    return LaurentPoly2({(0, u): (-1) ** u for u in range(n)})


def qt_binomial(k, i):
    """(-t)-binomial coefficient [k choose i]; exact polynomial division."""
    if i < 0 or k < 0 or i > k:
        raise ValueError("require 0 <= i <= k")
    num = ONE
    for j in range(k - i + 1, k + 1):
        num = num * qt_integer(j)
    for j in range(1, i + 1):
        num = exact_div(num, qt_integer(j))
    return num


def det_bareiss(rows):
    """Exact determinant of a square matrix of LaurentPoly2 entries.

    Fraction-free Bareiss elimination after clearing negative exponents by a
    global monomial; the cleared matrix stays polynomial throughout, and the
    monomial correction is undone at the end.
    """
    n = len(rows)
    if n == 0:
        return ONE
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    dq = min(min(e.min_exp(0) for e in r) for r in m)
    dt = min(min(e.min_exp(1) for e in r) for r in m)
    dq, dt = min(dq, 0), min(dt, 0)
    if dq or dt:
        m = [[e.shifted(-dq, -dt) for e in r] for r in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for p in range(k + 1, n):
                if not m[p][k].is_zero():
                    m[k], m[p] = m[p], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev)
            m[i][k] = ZERO
        prev = m[k][k]
    det = m[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.shifted(dq * n, dt * n)
