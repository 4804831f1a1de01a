"""Pure-Python kernel for sparse polynomial term arithmetic.

A polynomial is a dict mapping exponent tuples to coefficient triples.
The exponent tuple has one slot per x-variable plus a final slot for hbar.
A coefficient triple (a, b, den) encodes the Gaussian rational
(a + b*sqrt(-1))/den with gcd(|a|, |b|, den) == 1 and den >= 1.

The Cython twin (_poly_cy.pyx) implements the same functions; the backend
module picks one at import time.
"""

from math import gcd

BACKEND = "python"


def norm3(a, b, den):
    """Normalize a coefficient triple; returns None for zero."""
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


def terms_add(t1, t2):
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    out = dict(t1)
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


def terms_neg(t):
    return {exps: (-a, -b, d) for exps, (a, b, d) in t.items()}


def terms_sub(t1, t2):
    return terms_add(t1, terms_neg(t2))


def terms_scale(t, c):
    if c is None:
        return {}
    out = {}
    for exps, cur in t.items():
        p = c_mul(cur, c)
        if p is not None:
            out[exps] = p
    return out


def terms_mul(t1, t2):
    if not t1 or not t2:
        return {}
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    out = {}
    for e2, c2 in t2.items():
        for e1, c1 in t1.items():
            p = c_mul(c1, c2)
            if p is None:
                continue
            exps = tuple(x + y for x, y in zip(e1, e2))
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


def terms_signed_permute(t, perm, flip):
    """Substitute x_k -> (+/-) x_{perm[k]} (0-based slots; hbar slot fixed).

    perm maps old slot -> new slot over the x-slots only; flip[k] == 1 negates
    the variable moved out of slot k, contributing (-1)**exponent.
    """
    nv = len(perm)
    out = {}
    for exps, c in t.items():
        new = [0] * len(exps)
        new[-1] = exps[-1]
        sign = 0
        for k in range(nv):
            e = exps[k]
            if e:
                new[perm[k]] = e
                if flip[k]:
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


def terms_leading(t):
    """Leading exponent tuple under graded lex (x1 most significant, hbar last)."""
    return max(t, key=_grlex_key)


def terms_exact_div(t, q):
    """Exact division: return r with r*q == t, or None when not divisible."""
    if not t:
        return {}
    if not q:
        return None
    lq = terms_leading(q)
    cq = q[lq]
    cq_inv_num = (cq[0], -cq[1], 1)  # conjugate; |cq|^2 handled below
    cq_norm = cq[0] * cq[0] + cq[1] * cq[1]
    rem = dict(t)
    out = {}
    while rem:
        lr = terms_leading(rem)
        exps = tuple(x - y for x, y in zip(lr, lq))
        if any(e < 0 for e in exps):
            return None
        cr = rem[lr]
        # cr / cq = cr * conj(cq) * den(cq) / |cq|^2-numerator
        c = c_mul(cr, cq_inv_num)
        c = norm3(c[0] * cq[2], c[1] * cq[2], c[2] * cq_norm)
        out[exps] = c
        piece = {tuple(x + y for x, y in zip(eq, exps)): cf for eq, cf in q.items()}
        rem = terms_sub(rem, terms_scale(piece, c))
    for cf in out.values():
        if cf is None:
            return None
    return out
