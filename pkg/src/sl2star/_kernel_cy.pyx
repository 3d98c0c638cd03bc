# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython arithmetic kernel: compiled twin of ``_kernel_py``.

Coefficients stay arbitrary-precision Python ints; the win over the pure
backend is compiled loop/dict traffic and tuple packing, not limb arithmetic.
"""

from math import gcd

BACKEND_NAME = "cython"


def qnorm(n, d):
    """Reduce n/d to lowest terms with positive denominator."""
    if d == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if n == 0:
        return (0, 1)
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return (n, d)


def qadd(a, b):
    an, ad = a
    bn, bd = b
    if ad == bd:
        return qnorm(an + bn, ad)
    return qnorm(an * bd + bn * ad, ad * bd)


def qsub(a, b):
    an, ad = a
    bn, bd = b
    if ad == bd:
        return qnorm(an - bn, ad)
    return qnorm(an * bd - bn * ad, ad * bd)


def qneg(a):
    return (-a[0], a[1])


def qmul(a, b):
    an, ad = a
    bn, bd = b
    if an == 0 or bn == 0:
        return (0, 1)
    g1 = gcd(an if an > 0 else -an, bd)
    g2 = gcd(bn if bn > 0 else -bn, ad)
    return (an // g1) * (bn // g2), (ad // g2) * (bd // g1)


def qdiv(a, b):
    bn, bd = b
    if bn == 0:
        raise ZeroDivisionError("rational division by zero")
    if bn < 0:
        return qmul(a, (-bd, -bn))
    return qmul(a, (bd, bn))


def s_add(dict a, dict b):
    cdef dict out = dict(a)
    for e, q in b.items():
        cur = out.get(e)
        if cur is None:
            out[e] = q
        else:
            s = qadd(cur, q)
            if s[0] == 0:
                del out[e]
            else:
                out[e] = s
    return out


def s_sub(dict a, dict b):
    cdef dict out = dict(a)
    for e, q in b.items():
        cur = out.get(e)
        if cur is None:
            out[e] = (-q[0], q[1])
        else:
            s = qsub(cur, q)
            if s[0] == 0:
                del out[e]
            else:
                out[e] = s
    return out


def s_neg(dict a):
    cdef dict out = {}
    for e, q in a.items():
        out[e] = (-q[0], q[1])
    return out


def s_scale(dict a, q):
    cdef dict out = {}
    if q[0] == 0:
        return out
    for e, c in a.items():
        out[e] = qmul(c, q)
    return out


def s_mul(dict a, dict b, long hi):
    """Cauchy product of two exponent dicts, dropping exponents above hi."""
    cdef dict out = {}
    cdef long e
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = <long> ea + <long> eb
            if e > hi:
                continue
            p = qmul(ca, cb)
            cur = out.get(e)
            if cur is None:
                out[e] = p
            else:
                s = qadd(cur, p)
                if s[0] == 0:
                    del out[e]
                else:
                    out[e] = s
    return out


def s_eps_flip(dict a):
    """Substitute eps -> -eps: negate coefficients at odd exponents."""
    cdef dict out = {}
    cdef long e
    for ea, q in a.items():
        e = <long> ea
        if e & 1:
            out[ea] = (-q[0], q[1])
        else:
            out[ea] = q
    return out
