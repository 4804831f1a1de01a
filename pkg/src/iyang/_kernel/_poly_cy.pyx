# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython kernel for sparse polynomial term arithmetic.

Twin of _poly_py: same data model (dict of exponent tuple -> coefficient
triple), same required behavior.  Coefficients stay arbitrary-precision
Python integers; the win comes from typed loops and cheaper dispatch.
"""

from math import gcd

BACKEND = "cython"


def norm3(a, b, den):
    if a == 0 and b == 0:
        return None
    if den < 0:
        a, b, den = -a, -b, -den
    g = gcd(gcd(a, b), den)
    if g > 1:
        a //= g
        b //= g
        den //= g
    return (a, b, den)


def c_add(c1, c2):
    a1, b1, d1 = c1
    a2, b2, d2 = c2
    return norm3(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


def c_mul(c1, c2):
    a1, b1, d1 = c1
    a2, b2, d2 = c2
    return norm3(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, d1 * d2)


def c_neg(c):
    a, b, d = c
    return (-a, -b, d)


def terms_add(dict t1, dict t2):
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    cdef dict out = dict(t1)
    for exps, c in t2.items():
        cur = out.get(exps)
        if cur is None:
            out[exps] = c
        else:
            s = c_add(cur, c)
            if s is None:
                del out[exps]
            else:
                out[exps] = s
    return out


def terms_neg(dict t):
    cdef dict out = {}
    for exps, c in t.items():
        out[exps] = (-c[0], -c[1], c[2])
    return out


def terms_sub(dict t1, dict t2):
    return terms_add(t1, terms_neg(t2))


def terms_scale(dict t, c):
    if c is None:
        return {}
    cdef dict out = {}
    for exps, cur in t.items():
        p = c_mul(cur, c)
        if p is not None:
            out[exps] = p
    return out


def terms_mul(dict t1, dict t2):
    if not t1 or not t2:
        return {}
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    cdef dict out = {}
    cdef Py_ssize_t k, m
    for e2, c2 in t2.items():
        for e1, c1 in t1.items():
            p = c_mul(c1, c2)
            if p is None:
                continue
            m = len(e1)
            exps = tuple([e1[k] + e2[k] for k in range(m)])
            cur = out.get(exps)
            if cur is None:
                out[exps] = p
            else:
                s = c_add(cur, p)
                if s is None:
                    del out[exps]
                else:
                    out[exps] = s
    return out


def terms_signed_permute(dict t, perm, flip):
    cdef Py_ssize_t nv = len(perm)
    cdef Py_ssize_t k
    cdef int sign
    cdef dict out = {}
    cdef list pe = list(perm)
    cdef list fl = list(flip)
    for exps, c in t.items():
        new = [0] * len(exps)
        new[len(exps) - 1] = exps[len(exps) - 1]
        sign = 0
        for k in range(nv):
            e = exps[k]
            if e:
                new[pe[k]] = e
                if fl[k]:
                    sign ^= e & 1
        if sign:
            c = (-c[0], -c[1], c[2])
        key = tuple(new)
        cur = out.get(key)
        if cur is None:
            out[key] = c
        else:
            s = c_add(cur, c)
            if s is None:
                del out[key]
            else:
                out[key] = s
    return out


def _grlex_key(exps):
    return (sum(exps), exps)


def terms_leading(dict t):
    best = None
    best_key = None
    for exps in t:
        key = (sum(exps), exps)
        if best_key is None or key > best_key:
            best_key = key
            best = exps
    if best is None:
        raise ValueError("terms_leading() arg is an empty dict")
    return best


def terms_exact_div(dict t, dict q):
    if not t:
        return {}
    if not q:
        return None
    lq = terms_leading(q)
    cq = q[lq]
    cq_inv_num = (cq[0], -cq[1], 1)
    cq_norm = cq[0] * cq[0] + cq[1] * cq[1]
    cdef dict rem = dict(t)
    cdef dict out = {}
    cdef dict piece
    cdef Py_ssize_t k, m
    while rem:
        lr = terms_leading(rem)
        m = len(lr)
        exps = tuple([lr[k] - lq[k] for k in range(m)])
        for k in range(m):
            if exps[k] < 0:
                return None
        cr = rem[lr]
        c = c_mul(cr, cq_inv_num)
        c = norm3(c[0] * cq[2], c[1] * cq[2], c[2] * cq_norm)
        piece = {}
        for eq, cf in q.items():
            piece[tuple([eq[k] + exps[k] for k in range(m)])] = cf
        out[exps] = c
        rem = terms_sub(rem, terms_scale(piece, c))
    for cf in out.values():
        if cf is None:
            return None
    return out
