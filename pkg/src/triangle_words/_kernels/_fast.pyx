# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the hot kernels; mirrors pure.py exactly."""

from libc.math cimport acos, cos, exp, fabs, sin
from libc.stdlib cimport free, malloc

cdef double PI = 3.141592653589793238462643383279502884

NAME = "fast"


cdef long long _gcd(long long a, long long b):
    while b:
        a, b = b, a % b
    return a


def segment_perm_check(int m, int r, int c):
    cdef long long i
    for i in range(1, c + 1):
        if (r * i) % m > c:
            return False
    return True


def multiplier_units(int k, int l, int m):
    cdef long long lcm = k * l // _gcd(k, l)
    lcm = lcm * m // _gcd(lcm, m)
    cdef int klm = k * l * m
    cdef char *member = <char *> malloc(klm)
    cdef int *pa = <int *> malloc(klm * sizeof(int))
    cdef int *pb = <int *> malloc(klm * sizeof(int))
    cdef int *pc = <int *> malloc(klm * sizeof(int))
    cdef int a, b, c, npts = 0, i, ok
    cdef long long w, r
    out = []
    try:
        for i in range(klm):
            member[i] = 0
        for a in range(1, k):
            for b in range(1, l):
                for c in range(1, m):
                    w = (<long long> a) * l * m + (<long long> b) * k * m \
                        + (<long long> c) * k * l
                    if w < klm or w > 2 * klm:
                        member[(a * l + b) * m + c] = 1
                        pa[npts] = a
                        pb[npts] = b
                        pc[npts] = c
                        npts += 1
        for r in range(1, lcm + 1):
            if _gcd(r, lcm) != 1:
                continue
            ok = 1
            for i in range(npts):
                if not member[
                    (<int> ((r * pa[i]) % k) * l + <int> ((r * pb[i]) % l)) * m
                    + <int> ((r * pc[i]) % m)
                ]:
                    ok = 0
                    break
            if ok:
                out.append(int(r % lcm))
    finally:
        free(member)
        free(pa)
        free(pb)
        free(pc)
    return sorted(out)


def twisted_search(int order, mul, inv, phi, int p, u_bases, u_exps, int max_len=3):
    cdef int n2 = order * order
    cdef int *cmul = <int *> malloc(n2 * sizeof(int))
    cdef int *cinv = <int *> malloc(order * sizeof(int))
    cdef int *cphi = <int *> malloc(order * sizeof(int))
    cdef int ulen = len(u_exps)
    cdef int i, j, s, mask, ok, n, mid, left, cand
    cdef int digits[8]
    cdef int e[8]
    cdef int w[9]
    cdef int ub[9]
    cdef int ue[8]
    if ulen > 8:
        free(cmul); free(cinv); free(cphi)
        return None
    try:
        for i in range(order):
            row = mul[i]
            for j in range(order):
                cmul[i * order + j] = row[j]
            cinv[i] = inv[i]
            cphi[i] = phi[i]
        for i in range(ulen + 1):
            ub[i] = u_bases[i]
        for i in range(ulen):
            ue[i] = u_exps[i]
        for s in range(max_len + 1):
            for mask in range(1 << s):
                for i in range(s):
                    e[i] = 1 if (mask >> i) & 1 == 0 else -1
                for i in range(s + 1):
                    digits[i] = 0
                while True:
                    ok = 1
                    for i in range(1, s):
                        if digits[i] == 0 and e[i - 1] == -e[i]:
                            ok = 0
                            break
                    if ok:
                        # psi(v) base letters
                        if s == 0:
                            w[0] = cphi[digits[0]]
                        else:
                            w[0] = cmul[cphi[digits[0]] * order
                                        + (p if e[0] == 1 else 0)]
                            for i in range(1, s):
                                left = cinv[0 if e[i - 1] == 1 else p]
                                w[i] = cmul[cmul[left * order
                                                 + cphi[digits[i]]] * order
                                            + (p if e[i] == 1 else 0)]
                            left = cinv[0 if e[s - 1] == 1 else p]
                            w[s] = cmul[left * order + cphi[digits[s]]]
                        # cancellation in psi(v) * v^-1: the junction
                        # b-letters always pair up, so only the middle
                        # base letter decides
                        n = 0
                        mid = cmul[w[s] * order + cinv[digits[s]]]
                        while n < s and mid == 0:
                            n += 1
                            mid = cmul[w[s - n] * order + cinv[digits[s - n]]]
                        if 2 * (s - n) == ulen:
                            ok = 1
                            for i in range(s - n):
                                if w[i] != ub[i] or e[i] != ue[i]:
                                    ok = 0
                                    break
                            if ok and mid != ub[s - n]:
                                ok = 0
                            if ok:
                                for i in range(s - n):
                                    cand = cinv[digits[s - n - 1 - i]]
                                    if cand != ub[s - n + 1 + i] \
                                            or -e[s - n - 1 - i] != ue[s - n + i]:
                                        ok = 0
                                        break
                            if ok:
                                return (
                                    tuple(digits[i] for i in range(s + 1)),
                                    tuple(e[i] for i in range(s)),
                                )
                    # odometer increment
                    i = s
                    while i >= 0:
                        digits[i] += 1
                        if digits[i] < order:
                            break
                        digits[i] = 0
                        i -= 1
                    if i < 0:
                        break
        return None
    finally:
        free(cmul)
        free(cinv)
        free(cphi)


def grid_class_distance(double rep_a, double rep_b, double rep_c,
                        double phi0, double dphi, int nphi,
                        double s0, double ds, int ns):
    cdef double ca = cos(PI * rep_a), sa = sin(PI * rep_a)
    cdef double cb = cos(PI * rep_b), sb = sin(PI * rep_b)
    cdef double best = 1e300, best_phi = phi0, best_s = s0
    cdef int i, j
    cdef double phi, s, t, ct, st, e2, m01, m10
    cdef double u00, u01, u10, u11, p00, p10, p11, tr, ll, x, theta, d
    for i in range(nphi):
        phi = phi0 + dphi * i
        t = PI * phi
        ct = cos(t)
        st = sin(t)
        for j in range(ns):
            s = s0 + ds * j
            e2 = exp(2.0 * s)
            m01 = -sb * e2
            m10 = sb / e2
            u00 = ct * (cb * ct - m01 * st) - st * (m10 * ct - cb * st)
            u01 = ct * (cb * st + m01 * ct) - st * (m10 * st + cb * ct)
            u10 = st * (cb * ct - m01 * st) + ct * (m10 * ct - cb * st)
            u11 = st * (cb * st + m01 * ct) + ct * (m10 * st + cb * ct)
            p00 = ca * u00 - sa * u10
            p10 = sa * u00 + ca * u10
            p11 = sa * u01 + ca * u11
            tr = p00 + p11
            ll = -p10
            if fabs(tr) >= 2.0 or ll == 0.0:
                continue
            if ll < 0:
                tr = -tr
            x = tr / 2.0
            if x > 1.0:
                x = 1.0
            elif x < -1.0:
                x = -1.0
            theta = acos(x) / PI
            d = fabs(theta - rep_c)
            if d < best:
                best = d
                best_phi = phi
                best_s = s
    if best >= 1e300:
        return float("inf"), best_phi, best_s
    return best, best_phi, best_s
