# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same API and results as ``_pykernels``.

Inner loops run on 64-bit integers; products that can outgrow 64 bits
(lattice bases, quadratic forms, discriminants) use the compiler's 128-bit
type. Inputs outside the guarded ranges raise OverflowError and the caller
falls back to the Python backend.
"""

from libc.math cimport sqrt, sqrtl

cdef extern from *:
    ctypedef long long i128 "__int128"

ctypedef long long i64

BACKEND = "compiled"

cdef i64 LIM62 = (<i64>1) << 62


cdef inline i64 iabs(i64 a) nogil:
    return -a if a < 0 else a


cdef inline i128 iabs128(i128 a) nogil:
    return -a if a < 0 else a


cdef inline i64 gcd64(i64 a, i64 b) nogil:
    cdef i64 t
    a = iabs(a)
    b = iabs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline i128 gcd128(i128 a, i128 b) nogil:
    cdef i128 t
    a = iabs128(a)
    b = iabs128(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline i64 fdiv(i64 a, i64 b) nogil:
    cdef i64 q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline i128 fdiv128(i128 a, i128 b) nogil:
    cdef i128 q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline i128 pmod128(i128 a, i128 m) nogil:
    cdef i128 r = a % m
    if r < 0:
        r += m
    return r


cdef inline i64 isqrt64(i64 n) nogil:
    cdef i64 r = <i64>sqrt(<double>n)
    while r > 0 and r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


cdef inline i128 isqrt128(i128 n) nogil:
    cdef i128 r = <i128>sqrtl(<long double>n)
    while r > 0 and r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


cdef i128 modinv128(i128 a, i128 m) nogil:
    # inverse of a modulo m > 1, gcd(a, m) = 1
    cdef i128 r0 = pmod128(a, m), r1 = m, s0 = 1, s1 = 0, q, t
    while r1:
        q = r0 / r1
        t = r0 - q * r1
        r0 = r1
        r1 = t
        t = s0 - q * s1
        s0 = s1
        s1 = t
    return pmod128(s0, m)


cdef inline i128 dot3(i128* u, i128* v) nogil:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


cdef void plane_basis(i128 w0, i128 w1, i128 w2, i128* b1, i128* b2) nogil:
    # HNF basis of {x : w.x = 0}, pivot on the largest |w_c|
    cdef i128 w[3]
    cdef int a, b, c
    cdef i128 m, g, A, C, D
    w[0] = w0
    w[1] = w1
    w[2] = w2
    c = 0
    if iabs128(w[1]) > iabs128(w[c]):
        c = 1
    if iabs128(w[2]) > iabs128(w[c]):
        c = 2
    if c == 0:
        a = 1
        b = 2
    elif c == 1:
        a = 0
        b = 2
    else:
        a = 0
        b = 1
    m = iabs128(w[c])
    g = gcd128(w[a], m)
    A = m / g
    if A == 1:
        C = 0
    else:
        C = pmod128(-w[b] * modinv128(w[a] / g, A), A)
    D = g
    b1[a] = A
    b1[b] = 0
    b1[c] = -(w[a] * A) / w[c]
    b2[a] = C
    b2[b] = D
    b2[c] = -(w[a] * C + w[b] * D) / w[c]


cdef void gauss_reduce3(i128* u, i128* v) nogil:
    cdef i128 nu = dot3(u, u), nv = dot3(v, v), d, mu, t
    cdef int i
    if nu > nv:
        for i in range(3):
            t = u[i]
            u[i] = v[i]
            v[i] = t
        t = nu
        nu = nv
        nv = t
    while True:
        d = dot3(u, v)
        mu = fdiv128(2 * d + nu, 2 * nu)
        if mu:
            for i in range(3):
                v[i] -= mu * u[i]
            nv = dot3(v, v)
        if nv >= nu:
            return
        for i in range(3):
            t = u[i]
            u[i] = v[i]
            v[i] = t
        t = nu
        nu = nv
        nv = t


cdef inline bint row_interval(i64 al, i64* b1, i64* b2, i64* X, i64* lo, i64* hi) nogil:
    cdef i64 l = -LIM62, h = LIM62, base, s, l_, h_
    cdef int i
    for i in range(3):
        base = al * b1[i]
        s = b2[i]
        if s == 0:
            if iabs(base) > X[i]:
                return False
            continue
        if s > 0:
            l_ = -fdiv(X[i] + base, s)
            h_ = fdiv(X[i] - base, s)
        else:
            l_ = -fdiv(X[i] - base, -s)
            h_ = fdiv(X[i] + base, -s)
        if l_ > l:
            l = l_
        if h_ < h:
            h = h_
    lo[0] = l
    hi[0] = h
    return l <= h


cdef i64 alpha_bound(i64* b1, i64* b2, i64* X) nogil:
    cdef long double r2 = <long double>X[0] * X[0] + <long double>X[1] * X[1] + <long double>X[2] * X[2]
    cdef i128 n1 = 0, n2 = 0, d12 = 0
    cdef int i
    for i in range(3):
        n1 += <i128>b1[i] * b1[i]
        n2 += <i128>b2[i] * b2[i]
        d12 += <i128>b1[i] * b2[i]
    cdef i128 det = n1 * n2 - d12 * d12
    return <i64>sqrtl(r2 * <long double>n2 / <long double>det) + 1


cdef bint reduced_plane(i128 w0, i128 w1, i128 w2, i64* b1, i64* b2) nogil:
    cdef i128 u[3]
    cdef i128 v[3]
    cdef int i
    plane_basis(w0, w1, w2, u, v)
    gauss_reduce3(u, v)
    for i in range(3):
        if iabs128(u[i]) >= LIM62 or iabs128(v[i]) >= LIM62:
            return False
        b1[i] = <i64>u[i]
        b2[i] = <i64>v[i]
    return True


cdef i64 fiber_count_c(i64 y0, i64 y1, i64 y2, i64 xmax, int d) nogil:
    cdef i64 b1[3]
    cdef i64 b2[3]
    cdef i64 X[3]
    cdef i64 al, be, lo, hi, amax, x0, x1, x2, count = 0
    cdef i128 w0, w1, w2
    if xmax <= 0:
        return 0
    if d == 2:
        w0 = <i128>y0 * y0
        w1 = <i128>y1 * y1
        w2 = <i128>y2 * y2
    else:
        w0 = y0
        w1 = y1
        w2 = y2
    if not reduced_plane(w0, w1, w2, b1, b2):
        return -1
    if <i128>b1[0] * b1[0] + <i128>b1[1] * b1[1] + <i128>b1[2] * b1[2] > 3 * <i128>xmax * xmax:
        return 0
    X[0] = xmax
    X[1] = xmax
    X[2] = xmax
    amax = alpha_bound(b1, b2, X)
    for al in range(0, amax + 1):
        if not row_interval(al, b1, b2, X, &lo, &hi):
            continue
        if al == 0 and lo < 1:
            lo = 1
        for be in range(lo, hi + 1):
            x0 = al * b1[0] + be * b2[0]
            x1 = al * b1[1] + be * b2[1]
            x2 = al * b1[2] + be * b2[2]
            if x0 == 0 or x1 == 0 or x2 == 0:
                continue
            if gcd64(al, be) == 1:
                count += 1
    return count


def fiber_count(y0, y1, y2, xmax, d=2):
    if max(abs(y0), abs(y1), abs(y2)) ** d >= 2**40 or xmax >= 2**28:
        raise OverflowError("fibre outside the compiled range")
    cdef i64 r = fiber_count_c(y0, y1, y2, xmax, d)
    if r < 0:
        raise OverflowError("lattice basis outside the compiled range")
    return r


cdef inline int perm_weight(i64 y0, i64 y1, i64 y2) nogil:
    if y0 == y2:
        return 1
    if y0 == y1 or y1 == y2:
        return 3
    return 6


def fiber_region_sum(B, T, shard=0, nshards=1):
    if B >= 2**56 or T >= 2**20:
        raise OverflowError("fibre region outside the compiled range")
    cdef i64 b = B, t = T, sh = shard, ns = nshards
    cdef i64 y0, y1, y2, xmax, g12, c, total = 0
    with nogil:
        for y2 in range(1, t + 1):
            xmax = isqrt64(b / y2)
            if xmax == 0:
                break
            for y1 in range(1, y2 + 1):
                if (y2 * 1000003 + y1) % ns != sh:
                    continue
                g12 = gcd64(y1, y2)
                for y0 in range(1, y1 + 1):
                    if gcd64(g12, y0) != 1:
                        continue
                    c = fiber_count_c(y0, y1, y2, xmax, 2)
                    if c:
                        total += 4 * perm_weight(y0, y1, y2) * c
    return total


cdef inline int odd_sign_index(i64* c) nogil:
    cdef int npos = 0, k
    for k in range(3):
        if c[k] > 0:
            npos += 1
    if npos == 0 or npos == 3:
        return -1
    for k in range(3):
        if npos == 1 and c[k] > 0:
            return k
        if npos == 2 and c[k] < 0:
            return k
    return -1


def brute_count(B, T, collect=False):
    if B >= 2**30:
        raise OverflowError("brute force outside the compiled range")
    cdef i64 b = B, t = T
    cdef i64 y0, y1, y2, g01, Y, X, w0, w1, w2, x0, x1, x2, num, total = 0
    cdef i64 S, hx, ymax, ai, aj, ak, cap, yi, yj, yk, ri, q
    cdef i64 x[3]
    cdef i64 y[3]
    cdef int k, i, j, s1, s2
    pts = [] if collect else None
    for y0 in range(1, t + 1):
        for y1 in range(1, t + 1):
            g01 = gcd64(y0, y1)
            for y2 in range(1, t + 1):
                if gcd64(g01, y2) != 1:
                    continue
                Y = y0
                if y1 > Y:
                    Y = y1
                if y2 > Y:
                    Y = y2
                X = isqrt64(b / Y)
                w0 = y0 * y0
                w1 = y1 * y1
                w2 = y2 * y2
                for x0 in range(1, X + 1):
                    for x1 in range(-X, X + 1):
                        if x1 == 0:
                            continue
                        num = -(x0 * w0 + x1 * w1)
                        if num % w2:
                            continue
                        x2 = num / w2
                        if x2 == 0 or iabs(x2) > X or gcd64(gcd64(x0, x1), x2) != 1:
                            continue
                        total += 4
                        if collect:
                            for s1 in (1, -1):
                                for s2 in (1, -1):
                                    pts.append(((x0, x1, x2), (y0, s1 * y1, s2 * y2)))
    S = isqrt64(b / (t + 1))
    for x0 in range(1, S + 1):
        for x1 in range(-S, S + 1):
            if x1 == 0:
                continue
            for x2 in range(-S, S + 1):
                if x2 == 0 or gcd64(gcd64(x0, x1), x2) != 1:
                    continue
                x[0] = x0
                x[1] = x1
                x[2] = x2
                k = odd_sign_index(x)
                if k < 0:
                    continue
                hx = x0
                if iabs(x1) > hx:
                    hx = iabs(x1)
                if iabs(x2) > hx:
                    hx = iabs(x2)
                ymax = b / (hx * hx)
                if ymax <= t:
                    continue
                i = 1 if k == 0 else 0
                j = 1 if k == 2 else 2
                ai = iabs(x[i])
                aj = iabs(x[j])
                ak = iabs(x[k])
                cap = ak * ymax * ymax
                for yi in range(1, ymax + 1):
                    ri = ai * yi * yi
                    if ri + aj > cap:
                        break
                    for yj in range(1, ymax + 1):
                        num = ri + aj * yj * yj
                        if num > cap:
                            break
                        if num % ak:
                            continue
                        q = num / ak
                        yk = isqrt64(q)
                        if yk * yk != q or yk > ymax:
                            continue
                        if (yi <= t and yj <= t and yk <= t) or gcd64(gcd64(yi, yj), yk) != 1:
                            continue
                        total += 4
                        if collect:
                            y[i] = yi
                            y[j] = yj
                            y[k] = yk
                            for s1 in (1, -1):
                                for s2 in (1, -1):
                                    pts.append(((x0, x1, x2), (y[0], s1 * y[1], s2 * y[2])))
    return (total, pts) if collect else total


cdef inline i128 form2(i128 r0, i128 r1, i128 r2, i128 s, i128 t) nogil:
    return r0 * s * s + r1 * s * t + r2 * t * t


cdef inline bint quad_interval(i128 F11, i128 F12, i128 F22, i64 al, i128 Z, bint outer,
                               i64* lo, i64* hi) nogil:
    cdef i128 bq = F12 * al
    cdef i128 cq = F11 * al * al - Z
    cdef i128 disc = bq * bq - 4 * F22 * cq
    cdef i128 r, den
    if disc < 0:
        return False
    r = isqrt128(disc)
    den = 2 * F22
    if outer:
        lo[0] = <i64>(-fdiv128(bq + r + 1, den))
        hi[0] = <i64>fdiv128(-bq + r + 1, den)
    else:
        lo[0] = <i64>(-fdiv128(bq + r, den))
        hi[0] = <i64>fdiv128(-bq + r, den)
    return lo[0] <= hi[0]


def conic_count(coef, R, l1, l2, ylo, yhi, divs):
    cdef i64 c[3]
    cdef i64 Rc[9]
    cdef int k, i, j, idx
    for idx in range(3):
        c[idx] = coef[idx]
    k = odd_sign_index(c)
    if k < 0:
        return 0
    if max(abs(v) for v in R) >= 2**40 or max(abs(v) for v in coef) >= 2**20 or yhi >= 2**40:
        raise OverflowError("conic outside the compiled range")
    for idx in range(9):
        Rc[idx] = R[idx]
    i = 1 if k == 0 else 0
    j = 1 if k == 2 else 2
    cdef i64 ai = iabs(c[i]), aj = iabs(c[j]), ak = iabs(c[k])
    cdef i64 yl = ylo, yh = yhi
    cdef i64 mn = ai if ai < aj else aj
    if ak < mn:
        mn = ak
    cdef i64 ykmax = <i64>isqrt128(((<i128>ai + aj) * yh * yh) / ak)
    if ykmax > yh:
        ykmax = yh
    cdef i64 ykmin = <i64>isqrt128((<i128>yl * yl * mn) / ak)
    cdef i128 rk0 = Rc[3 * k], rk1 = Rc[3 * k + 1], rk2 = Rc[3 * k + 2]
    cdef i128 sigma = 1 if rk0 > 0 else -1
    cdef i64 e = gcd64(l1, l2)
    cdef i64 lp1 = l1 / e, lp2 = l2 / e
    cdef i64 d, m, g1, A, C, count = 0
    cdef i128 u0, u1, v0, v1, t0, t1, Fu, Fv, B2, mu
    cdef i128 F11, F12, F22, Zo, Zi
    cdef i64 amax, al, be, lo, hi, ilo, ihi, s, t, h, habs
    cdef i128 r0, r1, r2, ss, st, tt
    cdef i64 q0, q1, q2
    cdef bint has_inner
    for dd in divs:
        if dd >= 2**40:
            raise OverflowError("conic stratum outside the compiled range")
        d = dd
        m = d / gcd64(d, e)
        g1 = gcd64(lp1, m)
        A = m / g1
        if A == 1:
            C = 0
        else:
            C = <i64>pmod128(-<i128>lp2 * modinv128(lp1 / g1, A), A)
        u0 = A
        u1 = 0
        v0 = C
        v1 = g1
        Fu = sigma * form2(rk0, rk1, rk2, u0, u1)
        Fv = sigma * form2(rk0, rk1, rk2, v0, v1)
        if Fu > Fv:
            t0 = u0; u0 = v0; v0 = t0
            t1 = u1; u1 = v1; v1 = t1
            t0 = Fu; Fu = Fv; Fv = t0
        while True:
            B2 = sigma * form2(rk0, rk1, rk2, u0 + v0, u1 + v1) - Fu - Fv
            mu = fdiv128(B2 + Fu, 2 * Fu)
            if mu:
                v0 -= mu * u0
                v1 -= mu * u1
                Fv = sigma * form2(rk0, rk1, rk2, v0, v1)
            if Fv >= Fu:
                break
            t0 = u0; u0 = v0; v0 = t0
            t1 = u1; u1 = v1; v1 = t1
            t0 = Fu; Fu = Fv; Fv = t0
        F11 = Fu
        F22 = Fv
        F12 = sigma * form2(rk0, rk1, rk2, u0 + v0, u1 + v1) - Fu - Fv
        Zo = <i128>d * ykmax
        Zi = <i128>d * ykmin
        if F22 >= LIM62 or Zo >= LIM62 or iabs128(u0) >= LIM62 or iabs128(v0) >= LIM62 \
                or iabs128(u1) >= LIM62 or iabs128(v1) >= LIM62:
            raise OverflowError("conic stratum outside the compiled range")
        amax = <i64>sqrtl(4.0 * <long double>F22 * <long double>Zo
                          / <long double>(4 * F11 * F22 - F12 * F12)) + 2
        with nogil:
            for al in range(0, amax + 1):
                if not quad_interval(F11, F12, F22, al, Zo, True, &lo, &hi):
                    continue
                if al == 0 and lo < 1:
                    lo = 1
                if lo > hi:
                    continue
                has_inner = False
                if Zi > 0:
                    has_inner = quad_interval(F11, F12, F22, al, Zi, False, &ilo, &ihi)
                be = lo
                while be <= hi:
                    if has_inner and ilo <= be <= ihi:
                        be = ihi + 1
                        continue
                    s = al * <i64>u0 + be * <i64>v0
                    t = al * <i64>u1 + be * <i64>v1
                    be += 1
                    if gcd64(s, t) != 1:
                        continue
                    ss = <i128>s * s
                    st = <i128>s * t
                    tt = <i128>t * t
                    r0 = Rc[0] * ss + Rc[1] * st + Rc[2] * tt
                    r1 = Rc[3] * ss + Rc[4] * st + Rc[5] * tt
                    r2 = Rc[6] * ss + Rc[7] * st + Rc[8] * tt
                    if r0 % d or r1 % d or r2 % d:
                        continue
                    r0 = r0 / d
                    r1 = r1 / d
                    r2 = r2 / d
                    if r0 == 0 or r1 == 0 or r2 == 0:
                        continue
                    if iabs128(r0) > yh or iabs128(r1) > yh or iabs128(r2) > yh:
                        continue
                    q0 = <i64>r0
                    q1 = <i64>r1
                    q2 = <i64>r2
                    habs = iabs(q0)
                    if iabs(q1) > habs:
                        habs = iabs(q1)
                    if iabs(q2) > habs:
                        habs = iabs(q2)
                    if habs <= yl:
                        continue
                    if gcd64(gcd64(q0, q1), q2) != 1:
                        continue
                    count += 1
    return count


cdef inline bint coprime3(i64* v) nogil:
    return gcd64(v[0], v[1]) == 1 and gcd64(v[0], v[2]) == 1 and gcd64(v[1], v[2]) == 1


def param_inner(f, g, h, B, Tp, full=False, collect=False):
    if B >= 2**24:
        raise OverflowError("parametrisation count outside the compiled range")
    cdef i64 A[3]
    cdef i64 Cc[3]
    cdef i64 Ku[3]
    cdef i64 Kv[3]
    cdef i64 F[3]
    cdef i64 u[3]
    cdef i64 v[3]
    cdef i64 w[3]
    cdef i64 cf[3]
    cdef i64 vl[3]
    cdef i64 ul[3]
    cdef int idx, k, i, j, s0, s1, s2
    cdef bint fl = full
    for idx in range(3):
        F[idx] = f[idx]
    A[0] = f[1] * f[2] * g[1] ** 2 * g[2] ** 2 * h[0] ** 2
    A[1] = f[0] * f[2] * g[0] ** 2 * g[2] ** 2 * h[1] ** 2
    A[2] = f[0] * f[1] * g[0] ** 2 * g[1] ** 2 * h[2] ** 2
    Cc[0] = f[0] * g[0] * h[1] * h[2]
    Cc[1] = f[1] * g[1] * h[0] * h[2]
    Cc[2] = f[2] * g[2] * h[0] * h[1]
    for idx in range(3):
        Ku[idx] = f[idx] * g[idx]
    Kv[0] = h[0] * g[0] * f[1] * g[1] * f[2] * g[2]
    Kv[1] = h[1] * g[1] * f[0] * g[0] * f[2] * g[2]
    Kv[2] = h[2] * g[2] * f[0] * g[0] * f[1] * g[1]
    cdef i64 b = B, tp = Tp, total = 0, hy, X, num, Sx, hx, ymax, ai, aj, ak, li, lj, lk, cap
    cdef i64 vi, vj, vk, ri, q, lo0, lo1, lo2
    cdef i64 u0_, u1_, u2_, v0_, v1_, v2_
    out = [] if collect else None
    for idx in range(3):
        vl[idx] = tp / Cc[idx]
    lo0 = 1 if not fl else -vl[0]
    lo1 = 1 if not fl else -vl[1]
    lo2 = 1 if not fl else -vl[2]
    for v0_ in range(lo0, vl[0] + 1):
        v[0] = v0_
        if v[0] == 0:
            continue
        for v1_ in range(lo1, vl[1] + 1):
            v[1] = v1_
            if v[1] == 0:
                continue
            for v2_ in range(lo2, vl[2] + 1):
                v[2] = v2_
                if v[2] == 0:
                    continue
                if not coprime3(v) or gcd64(v[0], Kv[0]) != 1 or gcd64(v[1], Kv[1]) != 1 \
                        or gcd64(v[2], Kv[2]) != 1:
                    continue
                hy = 0
                for idx in range(3):
                    if Cc[idx] * iabs(v[idx]) > hy:
                        hy = Cc[idx] * iabs(v[idx])
                X = isqrt64(b / hy)
                for idx in range(3):
                    ul[idx] = X / A[idx]
                if ul[0] == 0 or ul[1] == 0 or ul[2] == 0:
                    continue
                for idx in range(3):
                    w[idx] = F[idx] * v[idx] * v[idx]
                for u0_ in range(1 if not fl else -ul[0], ul[0] + 1):
                    u[0] = u0_
                    if u[0] == 0:
                        continue
                    for u1_ in range(-ul[1], ul[1] + 1):
                        u[1] = u1_
                        if u[1] == 0:
                            continue
                        num = -(w[0] * u[0] + w[1] * u[1])
                        if num % w[2]:
                            continue
                        u[2] = num / w[2]
                        if u[2] == 0 or iabs(u[2]) > ul[2]:
                            continue
                        if not coprime3(u) or gcd64(u[0], Ku[0]) != 1 or gcd64(u[1], Ku[1]) != 1 \
                                or gcd64(u[2], Ku[2]) != 1:
                            continue
                        total += 1
                        if collect:
                            out.append(((u[0], u[1], u[2]), (v[0], v[1], v[2])))
    Sx = isqrt64(b / (tp + 1))
    for idx in range(3):
        ul[idx] = Sx / A[idx]
    if ul[0] == 0 or ul[1] == 0 or ul[2] == 0:
        return (total, out) if collect else total
    for u0_ in range(1 if not fl else -ul[0], ul[0] + 1):
        u[0] = u0_
        if u[0] == 0:
            continue
        for u1_ in range(-ul[1], ul[1] + 1):
            u[1] = u1_
            if u[1] == 0:
                continue
            for u2_ in range(-ul[2], ul[2] + 1):
                u[2] = u2_
                if u[2] == 0:
                    continue
                if not coprime3(u) or gcd64(u[0], Ku[0]) != 1 or gcd64(u[1], Ku[1]) != 1 \
                        or gcd64(u[2], Ku[2]) != 1:
                    continue
                for idx in range(3):
                    cf[idx] = F[idx] * u[idx]
                k = odd_sign_index(cf)
                if k < 0:
                    continue
                hx = 0
                for idx in range(3):
                    if A[idx] * iabs(u[idx]) > hx:
                        hx = A[idx] * iabs(u[idx])
                ymax = b / (hx * hx)
                if ymax <= tp:
                    continue
                i = 1 if k == 0 else 0
                j = 1 if k == 2 else 2
                ai = iabs(cf[i])
                aj = iabs(cf[j])
                ak = iabs(cf[k])
                li = ymax / Cc[i]
                lj = ymax / Cc[j]
                lk = ymax / Cc[k]
                cap = ak * lk * lk
                for vi in range(1, li + 1):
                    ri = ai * vi * vi
                    if ri + aj > cap:
                        break
                    for vj in range(1, lj + 1):
                        num = ri + aj * vj * vj
                        if num > cap:
                            break
                        if num % ak:
                            continue
                        q = num / ak
                        vk = isqrt64(q)
                        if vk * vk != q or vk == 0:
                            continue
                        v[i] = vi
                        v[j] = vj
                        v[k] = vk
                        hy = 0
                        for idx in range(3):
                            if Cc[idx] * v[idx] > hy:
                                hy = Cc[idx] * v[idx]
                        if hy <= tp or hy > ymax:
                            continue
                        if not coprime3(v) or gcd64(v[0], Kv[0]) != 1 or gcd64(v[1], Kv[1]) != 1 \
                                or gcd64(v[2], Kv[2]) != 1:
                            continue
                        if not fl:
                            total += 1
                            if collect:
                                out.append(((u[0], u[1], u[2]), (v[0], v[1], v[2])))
                            continue
                        for s0 in (1, -1):
                            for s1 in (1, -1):
                                for s2 in (1, -1):
                                    total += 1
                                    if collect:
                                        out.append(((u[0], u[1], u[2]),
                                                    (s0 * v[0], s1 * v[1], s2 * v[2])))
    return (total, out) if collect else total


cdef i64 coprime_in_range(i64 al, i64 lo, i64 hi) nogil:
    # #{beta in [lo, hi] : gcd(al, beta) = 1} for al > 0
    cdef i64 ps[16]
    cdef int np_ = 0, mask, bit
    cdef i64 n = al, p = 2, dd, sub = 0
    cdef int sign
    while p * p <= n:
        if n % p == 0:
            ps[np_] = p
            np_ += 1
            while n % p == 0:
                n /= p
        p += 1
    if n > 1:
        ps[np_] = n
        np_ += 1
    for mask in range(1 << np_):
        dd = 1
        sign = 1
        for bit in range(np_):
            if (mask >> bit) & 1:
                dd *= ps[bit]
                sign = -sign
        sub += sign * (fdiv(hi, dd) - fdiv(lo - 1, dd))
    return sub


def linear_box_count(w0, w1, w2, U0, U1, U2):
    if max(abs(w0), abs(w1), abs(w2)) >= 2**40 or max(U0, U1, U2) >= 2**28:
        raise OverflowError("box outside the compiled range")
    cdef i64 b1[3]
    cdef i64 b2[3]
    cdef i64 X[3]
    cdef i64 al, lo, hi, amax, total = 0
    if not reduced_plane(w0, w1, w2, b1, b2):
        raise OverflowError("lattice basis outside the compiled range")
    X[0] = U0
    X[1] = U1
    X[2] = U2
    amax = alpha_bound(b1, b2, X)
    with nogil:
        for al in range(0, amax + 1):
            if not row_interval(al, b1, b2, X, &lo, &hi):
                continue
            if al == 0:
                total += (lo <= 1 <= hi) + (lo <= -1 <= hi)
                continue
            total += 2 * coprime_in_range(al, lo, hi)
    return total


def quadratic_box_count(u0, u1, u2, V0, V1, V2):
    if max(abs(u0), abs(u1), abs(u2)) * max(V0, V1, V2) ** 2 >= 2**60:
        raise OverflowError("box outside the compiled range")
    cdef i64 a = u0, b = u1, c = u2, P = V0, Q = V1, R = V2
    cdef i64 v0, v1, t0, num, q, r, g, total = 0
    with nogil:
        for v0 in range(-P, P + 1):
            t0 = a * v0 * v0
            for v1 in range(-Q, Q + 1):
                num = -(t0 + b * v1 * v1)
                if num % c:
                    continue
                q = num / c
                if q < 0:
                    continue
                r = isqrt64(q)
                if r * r != q or r > R:
                    continue
                g = gcd64(v0, v1)
                if r == 0:
                    if g == 1:
                        total += 1
                elif gcd64(g, r) == 1:
                    total += 2
    return total


def mixed_box_count(f0, f1, f2, U0, U1, U2, V0, V1, V2):
    if max(abs(f0), abs(f1), abs(f2)) * max(V0, V1, V2) ** 2 >= 2**40 or max(U0, U1, U2) >= 2**28:
        raise OverflowError("box outside the compiled range")
    cdef i64 b1[3]
    cdef i64 b2[3]
    cdef i64 X[3]
    cdef i64 F0 = f0, F1 = f1, F2 = f2, P = V0, Q = V1, R = V2
    cdef i64 v0, v1, v2, al, be, lo, hi, amax, x0, x1, x2, p0, p1, p2, total = 0
    X[0] = U0
    X[1] = U1
    X[2] = U2
    with nogil:
        for v0 in range(1, P + 1):
            for v1 in range(1, Q + 1):
                if gcd64(v0, v1) != 1:
                    continue
                for v2 in range(1, R + 1):
                    if gcd64(v0, v2) != 1 or gcd64(v1, v2) != 1:
                        continue
                    reduced_plane(<i128>F0 * v0 * v0, <i128>F1 * v1 * v1, <i128>F2 * v2 * v2, b1, b2)
                    amax = alpha_bound(b1, b2, X)
                    for al in range(0, amax + 1):
                        if not row_interval(al, b1, b2, X, &lo, &hi):
                            continue
                        if al == 0 and lo < 1:
                            lo = 1
                        for be in range(lo, hi + 1):
                            if gcd64(al, be) != 1:
                                continue
                            x0 = al * b1[0] + be * b2[0]
                            x1 = al * b1[1] + be * b2[1]
                            x2 = al * b1[2] + be * b2[2]
                            if x0 == 0 or x1 == 0 or x2 == 0:
                                continue
                            p0 = x0 * v0
                            p1 = x1 * v1
                            p2 = x2 * v2
                            if gcd64(p0, p1) == 1 and gcd64(p0, p2) == 1 and gcd64(p1, p2) == 1:
                                total += 2
    return 8 * total


def conic_search(a, b, c, B0, B1, B2, pairwise=False):
    if max(abs(a), abs(b), abs(c)) * max(B0, B1, B2, 1) ** 2 >= 2**60:
        raise OverflowError("search box outside the compiled range")
    cdef i64 A = a, Bb = b, Cc = c, P = B0, Q = B1, R = B2
    cdef i64 v0, v1, t0, num, q, r, start = 1 if pairwise else 0
    cdef bint pw = pairwise, found = False
    cdef i64 f0 = 0, f1 = 0, f2 = 0
    with nogil:
        for v0 in range(start, P + 1):
            t0 = A * v0 * v0
            for v1 in range(start, Q + 1):
                num = -(t0 + Bb * v1 * v1)
                if num % Cc:
                    continue
                q = num / Cc
                if q < 0:
                    continue
                r = isqrt64(q)
                if r * r != q or r > R:
                    continue
                if pw:
                    if r == 0 or gcd64(v0, v1) != 1 or gcd64(v0, r) != 1 or gcd64(v1, r) != 1:
                        continue
                elif v0 == 0 and v1 == 0 and r == 0:
                    continue
                f0 = v0
                f1 = v1
                f2 = r
                found = True
                break
            if found:
                break
    if not found:
        return None
    return (f0, f1, f2)
