"""Dense univariate polynomials over Q as plain lists, lowest degree first.

These helpers back the binary-form arithmetic; the empty list is zero.
"""

from fractions import Fraction


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(trim(p)) - 1


def add(p, q):
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p, q):
    return add(p, [-c for c in q])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b:
                out[j + i] += a * b
    return trim([Fraction(c) for c in out])


def scale(p, c):
    return trim([c * a for a in p])


def divmod_(p, q):
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(p)]
    lead = Fraction(q[-1])
    dq = len(q) - 1
    if len(r) - 1 < dq:
        return [], r
    quot = [Fraction(0)] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if c == 0:
            continue
        f = c / lead
        quot[k - dq] = f
        for j in range(dq + 1):
            r[k - dq + j] -= f * q[j]
    return trim(quot), trim(r[:dq])


def divexact(p, q):
    quot, rem = divmod_(p, q)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quot


def gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    if not p:
        return []
    lead = p[-1]
    return [Fraction(c) / lead for c in p]


def derivative(p):
    return trim([i * p[i] for i in range(1, len(p))])


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def taylor_shift(p, a):
    """Coefficients of p(a + s) in powers of s (Horner-style synthetic division)."""
    coeffs = [Fraction(c) for c in p]
    n = len(coeffs)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            coeffs[j] += a * coeffs[j + 1]
    return trim(coeffs)


def order_at_zero(p):
    for i, c in enumerate(p):
        if c != 0:
            return i
    raise ValueError("order of the zero polynomial")
