"""Hilbert series extraction, exact rational-function fitting, and
Gelfand-Kirillov dimension estimation.

The fit finds the minimal-order linear recurrence with constant coefficients
that holds on every provided coefficient past the numerator, via the exact
kernel of a Hankel-style linear system; a recurrence that breaks on late
coefficients is rejected, so truncation artifacts cannot masquerade as
rationality certificates.  All arithmetic is exact; the one floating-point
routine here, gk_heuristic, is labeled as such and never asserted anywhere.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientData, NonPolynomialGrowth
from .fields import QQ
from .linalg import solve


# -- dense polynomial helpers over Fraction (ascending coefficients) --------


def _trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_add(p, q):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                  for i in range(n)])


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_divmod(p, q):
    q = _trim(list(q))
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in p]
    quot = [Fraction(0)] * max(len(r) - len(q) + 1, 0)
    while len(_trim(r)) >= len(q):
        r = _trim(r)
        shift = len(r) - len(q)
        c = r[-1] / q[-1]
        quot[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
    return _trim(quot), _trim(r)


def poly_gcd(p, q):
    a, b = _trim([Fraction(x) for x in p]), _trim([Fraction(x) for x in q])
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def cyclotomic(d, _cache={}):
    """The d-th cyclotomic polynomial with integer coefficients, ascending."""
    if d in _cache:
        return _cache[d]
    num = [Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)]  # t^d - 1
    for e in range(1, d):
        if d % e == 0:
            num = poly_divmod(num, cyclotomic(e))[0]
    _cache[d] = num
    return num


def _euler_phi(d):
    out = d
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            out -= out // p
        p += 1
    if n > 1:
        out -= out // n
    return out


# -- the fitted-series value object ------------------------------------------


def _poly_str(p):
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("t" if c == 1 else ("-t" if c == -1 else "%s*t" % c))
        else:
            if c == 1:
                terms.append("t^%d" % i)
            elif c == -1:
                terms.append("-t^%d" % i)
            else:
                terms.append("%s*t^%d" % (c, i))
    s = " + ".join(terms)
    return s.replace("+ -", "- ")


@dataclass(frozen=True)
class RationalSeries:
    """num(t)/den(t) with integer coefficients, den(0) = 1, gcd(num, den) = 1.

    `fitted` keeps the coefficients the series was fitted to; re-expansion
    reproduces them exactly (checked at construction time by the fitter).
    """
    num: tuple
    den: tuple
    fitted: tuple = ()

    def expand(self, count):
        """First `count` series coefficients of num/den."""
        out = []
        num, den = self.num, self.den
        for k in range(count):
            c = Fraction(num[k]) if k < len(num) else Fraction(0)
            for j in range(1, min(k, len(den) - 1) + 1):
                c -= den[j] * out[k - j]
            out.append(c)
        return out

    def __str__(self):
        return "(%s) / (%s)" % (_poly_str(list(self.num)), _poly_str(list(self.den)))


def hilbert(X):
    """Component dimensions as series coefficients, index 0 included.

    Operads contribute coefficient 0 at index 0 (they are reduced); algebras
    start with dim A_0.
    """
    if hasattr(X, "max_arity"):
        return list(X.dims)
    if hasattr(X, "max_degree"):
        return list(X.dims)
    raise TypeError("hilbert needs a TruncatedOperad or a GradedAlgebra")


def rational_fit(coeffs, max_order, guard=4):
    """Fit the minimal linear recurrence of order <= max_order.

    The recurrence (the denominator) must hold on every provided coefficient
    past the numerator, with at least `guard` checked positions; the earliest
    feasible start wins, so the numerator is as short as the data allows.
    Returns a RationalSeries or None.
    """
    if guard < 4:
        raise ValueError("guard must be >= 4")
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    if len(coeffs) < 2 * max_order + guard:
        raise InsufficientData(
            "need at least %d coefficients for order %d (guard %d), got %d"
            % (2 * max_order + guard, max_order, guard, len(coeffs)))
    c = [Fraction(x) for x in coeffs]
    L = len(c) - 1

    for r in range(max_order + 1):
        for k0 in range(r, L - guard + 2):
            # unknowns d_1..d_r with  c_k + sum_j d_j c_{k-j} = 0  for k in [k0, L]
            rows = [[c[k - j] for j in range(1, r + 1)] for k in range(k0, L + 1)]
            rhs = [-c[k] for k in range(k0, L + 1)]
            sol = solve(QQ, rows, rhs) if r > 0 else ([] if all(x == 0 for x in rhs) else None)
            if sol is None:
                continue
            den = [Fraction(1)] + list(sol)
            num = _trim(poly_mul(den, c)[:k0]) if k0 > 0 else []
            # den * c must vanish identically past the numerator
            full = poly_mul(den, c)
            if any(full[k] != 0 for k in range(len(num), min(len(full), L + 1))):
                continue
            g = poly_gcd(num if num else [Fraction(0)], den)
            if len(g) > 1:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
            scale = den[0]
            num = [x / scale for x in num]
            den = [x / scale for x in den]
            if any(x.denominator != 1 for x in num + den):
                # cannot happen for integer input sequences (Fatou), but stay exact
                continue
            series = RationalSeries(tuple(int(x) for x in num),
                                    tuple(int(x) for x in den),
                                    tuple(coeffs))
            if series.expand(len(coeffs)) != c:
                continue
            return series
    return None


def gk_estimate(S):
    """The pole order of S at t = 1 (the Gelfand-Kirillov dimension when the
    coefficients grow polynomially).

    Requires a nonnegative expansion and a denominator whose roots are all
    roots of unity; any other root forces a root inside the unit disk and the
    growth is not polynomial.
    """
    span = max(len(S.fitted), 2 * len(S.den) + 8)
    if any(x < 0 for x in S.expand(span)):
        raise ValueError("series expansion has negative coefficients")
    den = [Fraction(x) for x in S.den]
    deg = len(den) - 1
    pole_order = 0
    rest = den
    # strip every cyclotomic factor; d is bounded because phi(d) <= deg(den)
    d_bound = max(30, 2 * deg * deg + 1)
    for d in range(1, d_bound + 1):
        if _euler_phi(d) > deg:
            continue
        phi_d = cyclotomic(d)
        while True:
            quot, rem = poly_divmod(rest, phi_d)
            if rem:
                break
            rest = quot
            if d == 1:
                pole_order += 1
    if len(_trim(rest)) > 1:
        raise NonPolynomialGrowth(
            "denominator %r has a non-cyclotomic factor, so a root inside the "
            "unit disk" % (list(S.den),))
    return pole_order


def gk_heuristic(coeffs):
    """HEURISTIC, floating point: least-squares slope of log partial sums
    against log n.  Labeled estimate only; never asserted by any test."""
    partial = []
    total = 0
    for x in coeffs:
        total += x
        partial.append(total)
    pts = [(math.log(n), math.log(s)) for n, s in enumerate(partial, start=1)
           if n >= 2 and s > 0]
    if len(pts) < 2:
        return 0.0
    mx = sum(p[0] for p in pts) / len(pts)
    my = sum(p[1] for p in pts) / len(pts)
    denom = sum((p[0] - mx) ** 2 for p in pts)
    if denom == 0:
        return 0.0
    return sum((p[0] - mx) * (p[1] - my) for p in pts) / denom
