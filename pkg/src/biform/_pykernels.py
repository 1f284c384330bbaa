"""Pure-Python kernels: the reference backend, mirrored by ``_kernels.pyx``.

Every function here has a compiled twin with the same signature and result.
Both are exercised by the test suite; this one is selected when the extension
is not built or ``BIFORM_PURE_PYTHON`` is set.
"""

from math import gcd, isqrt

BACKEND = "python"


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def kernel_basis(w0, w1, w2):
    """Basis of the rank-2 lattice {x in Z^3 : w.x = 0} for primitive nonzero w.

    The coordinate with the largest |w_c| is eliminated; the remaining pair
    runs over a Hermite-normal-form basis of the congruence lattice
    w_a x_a + w_b x_b = 0 (mod |w_c|).
    """
    w = (w0, w1, w2)
    c = max(range(3), key=lambda i: abs(w[i]))
    a, b = [i for i in range(3) if i != c]
    wc = w[c]
    m = abs(wc)
    g = gcd(w[a], m)
    A = m // g
    C = 0 if A == 1 else (-w[b] * pow(w[a] // g, -1, A)) % A
    D = g
    b1 = [0, 0, 0]
    b2 = [0, 0, 0]
    b1[a] = A
    b1[c] = -(w[a] * A) // wc
    b2[a] = C
    b2[b] = D
    b2[c] = -(w[a] * C + w[b] * D) // wc
    return tuple(b1), tuple(b2)


def gauss_reduce(u, v):
    """Lagrange-Gauss reduction of a rank-2 basis of Z^3 (Euclidean norm)."""
    nu, nv = _dot(u, u), _dot(v, v)
    if nu > nv:
        u, v, nu, nv = v, u, nv, nu
    while True:
        d = _dot(u, v)
        mu = (2 * d + nu) // (2 * nu)
        if mu:
            v = (v[0] - mu * u[0], v[1] - mu * u[1], v[2] - mu * u[2])
            nv = _dot(v, v)
        if nv >= nu:
            return u, v
        u, v, nu, nv = v, u, nv, nu


def _row_interval(al, b1, b2, X):
    """Integer range of beta with |al*b1_i + beta*b2_i| <= X_i for all i."""
    lo, hi = None, None
    for i in range(3):
        base = al * b1[i]
        s = b2[i]
        if s == 0:
            if abs(base) > X[i]:
                return 1, 0
            continue
        if s > 0:
            l_, h_ = -((X[i] + base) // s), (X[i] - base) // s
        else:
            l_, h_ = -((X[i] - base) // -s), (X[i] + base) // -s
        lo = l_ if lo is None or l_ > lo else lo
        hi = h_ if hi is None or h_ < hi else hi
    return lo, hi


def _alpha_bound(b1, b2, X):
    r2 = X[0] * X[0] + X[1] * X[1] + X[2] * X[2]
    n1, n2, d12 = _dot(b1, b1), _dot(b2, b2), _dot(b1, b2)
    det = n1 * n2 - d12 * d12
    return isqrt(r2 * n2 // det)


def fiber_count(y0, y1, y2, xmax, d=2):
    """Projective x with nonzero coordinates, |x_i| <= xmax, sum x_i y_i^d = 0."""
    if xmax <= 0:
        return 0
    b1, b2 = gauss_reduce(*kernel_basis(y0**d, y1**d, y2**d))
    X = (xmax, xmax, xmax)
    if _dot(b1, b1) > 3 * xmax * xmax:
        return 0
    count = 0
    amax = _alpha_bound(b1, b2, X)
    for al in range(0, amax + 1):
        lo, hi = _row_interval(al, b1, b2, X)
        if al == 0:
            lo = max(lo, 1)
        for be in range(lo, hi + 1):
            if gcd(al, be) != 1:
                continue
            x0 = al * b1[0] + be * b2[0]
            x1 = al * b1[1] + be * b2[1]
            x2 = al * b1[2] + be * b2[2]
            if x0 and x1 and x2:
                count += 1
    return count


def _perm_weight(y0, y1, y2):
    if y0 == y2:
        return 1
    if y0 == y1 or y1 == y2:
        return 3
    return 6


def _shard_of(a, b, nshards):
    return (a * 1000003 + b) % nshards


def fiber_region_sum(B, T, shard=0, nshards=1):
    """Points with H(y) <= T, summed fibre by fibre over sorted positive y.

    Each sorted primitive y stands for its permutations and its four sign
    classes in P^2.
    """
    total = 0
    for y2 in range(1, T + 1):
        xmax = isqrt(B // y2)
        if xmax == 0:
            break
        for y1 in range(1, y2 + 1):
            if _shard_of(y2, y1, nshards) != shard:
                continue
            g12 = gcd(y1, y2)
            for y0 in range(1, y1 + 1):
                if gcd(g12, y0) != 1:
                    continue
                c = fiber_count(y0, y1, y2, xmax)
                if c:
                    total += 4 * _perm_weight(y0, y1, y2) * c
    return total


def _odd_sign_index(c):
    pos = [v > 0 for v in c]
    if all(pos) or not any(pos):
        return -1
    for k in range(3):
        if sum(pos) == 1 and pos[k]:
            return k
        if sum(pos) == 2 and not pos[k]:
            return k
    return -1


def brute_count(B, T, collect=False):
    """Direct enumeration of N(B) for the (1,2) threefold.

    Points with H(y) <= T: loop over positive y and two x-coordinates, solve the
    third linearly. Points with H(y) > T: loop over normalised x and two
    y-coordinates, solve the third by an integer square root.
    """
    pts = [] if collect else None
    total = 0
    for y0 in range(1, T + 1):
        for y1 in range(1, T + 1):
            g01 = gcd(y0, y1)
            for y2 in range(1, T + 1):
                if gcd(g01, y2) != 1:
                    continue
                Y = max(y0, y1, y2)
                X = isqrt(B // Y)
                w0, w1, w2 = y0 * y0, y1 * y1, y2 * y2
                for x0 in range(1, X + 1):
                    for x1 in range(-X, X + 1):
                        if x1 == 0:
                            continue
                        num = -(x0 * w0 + x1 * w1)
                        if num % w2:
                            continue
                        x2 = num // w2
                        if x2 == 0 or abs(x2) > X or gcd(gcd(x0, x1), x2) != 1:
                            continue
                        total += 4
                        if collect:
                            for s1 in (1, -1):
                                for s2 in (1, -1):
                                    pts.append(((x0, x1, x2), (y0, s1 * y1, s2 * y2)))
    S = isqrt(B // (T + 1))
    for x0 in range(1, S + 1):
        for x1 in range(-S, S + 1):
            if x1 == 0:
                continue
            for x2 in range(-S, S + 1):
                if x2 == 0 or gcd(gcd(x0, x1), x2) != 1:
                    continue
                x = (x0, x1, x2)
                k = _odd_sign_index(x)
                if k < 0:
                    continue
                hx = max(x0, abs(x1), abs(x2))
                ymax = B // (hx * hx)
                if ymax <= T:
                    continue
                i, j = [t for t in range(3) if t != k]
                ai, aj, ak = abs(x[i]), abs(x[j]), abs(x[k])
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
                        q = num // ak
                        yk = isqrt(q)
                        if yk * yk != q or yk > ymax:
                            continue
                        if max(yi, yj, yk) <= T or gcd(gcd(yi, yj), yk) != 1:
                            continue
                        total += 4
                        if collect:
                            y = [0, 0, 0]
                            y[i], y[j], y[k] = yi, yj, yk
                            for s1 in (1, -1):
                                for s2 in (1, -1):
                                    pts.append((x, (y[0], s1 * y[1], s2 * y[2])))
    return (total, pts) if collect else total


def _solve_quadratic_interval(F11, F12, F22, al, Z, outer):
    """Integer beta range where F(al, beta) <= Z (F positive definite).

    ``outer`` widens the real interval (a superset, callers re-check points);
    otherwise it is narrowed to a guaranteed subset.
    """
    bq = F12 * al
    cq = F11 * al * al - Z
    disc = bq * bq - 4 * F22 * cq
    if disc < 0:
        return 1, 0
    r = isqrt(disc)
    den = 2 * F22
    if outer:
        return -((bq + r + 1) // den), (-bq + r + 1) // den
    return -((bq + r) // den), (-bq + r) // den


def conic_count(coef, R, l1, l2, ylo, yhi, divs):
    """Projective points y on sum coef_i y_i^2 = 0 with ylo < H(y) <= yhi.

    ``R`` holds the nine coefficients of the binary quadratic forms
    R_i(s, t) = R[3i] s^2 + R[3i+1] s t + R[3i+2] t^2 parametrising the conic
    through a rational point; ``l1 s + l2 t`` is the tangent linear form and
    ``divs`` lists every possible value of gcd(R(s, t)) over coprime (s, t).
    Only points with all coordinates nonzero are counted.
    """
    k = _odd_sign_index(coef)
    if k < 0:
        return 0
    i, j = [t for t in range(3) if t != k]
    ai, aj, ak = abs(coef[i]), abs(coef[j]), abs(coef[k])
    ykmax = min(yhi, isqrt((ai + aj) * yhi * yhi // ak))
    ykmin = isqrt(ylo * ylo * min(ak, ai, aj) // ak)
    rk = R[3 * k : 3 * k + 3]
    sigma = 1 if rk[0] > 0 else -1
    e = gcd(l1, l2)
    lp1, lp2 = l1 // e, l2 // e
    count = 0
    for d in divs:
        m = d // gcd(d, e)
        # lattice {(s, t) : lp1 s + lp2 t = 0 mod m}
        g1 = gcd(lp1, m)
        A = m // g1
        C = 0 if A == 1 else (-lp2 * pow(lp1 // g1, -1, A)) % A
        bs = [(A, 0), (C, g1)]
        # definite form sigma * R_k on the lattice basis, then Gauss-reduce it
        def F(v):
            s, t = v
            return sigma * (rk[0] * s * s + rk[1] * s * t + rk[2] * t * t)

        def B2(u, v):
            return F((u[0] + v[0], u[1] + v[1])) - F(u) - F(v)

        u, v = bs
        if F(u) > F(v):
            u, v = v, u
        while True:
            mu2 = B2(u, v)
            nu = F(u)
            mu = (mu2 + nu) // (2 * nu)
            if mu:
                v = (v[0] - mu * u[0], v[1] - mu * u[1])
            if F(v) >= nu:
                break
            u, v = v, u
        F11, F22, F12 = F(u), F(v), B2(u, v)
        Zo = d * ykmax
        Zi = d * ykmin
        delta = 4 * F11 * F22 - F12 * F12
        amax = isqrt(4 * F22 * Zo // delta) + 1
        for al in range(0, amax + 1):
            lo, hi = _solve_quadratic_interval(F11, F12, F22, al, Zo, True)
            if al == 0:
                lo = max(lo, 1)
            if lo > hi:
                continue
            ilo, ihi = (1, 0)
            if Zi > 0:
                ilo, ihi = _solve_quadratic_interval(F11, F12, F22, al, Zi, False)
            be = lo
            while be <= hi:
                if ilo <= be <= ihi:
                    be = ihi + 1
                    continue
                s = al * u[0] + be * v[0]
                t = al * u[1] + be * v[1]
                be += 1
                if gcd(s, t) != 1:
                    continue
                ss, st, tt = s * s, s * t, t * t
                r0 = R[0] * ss + R[1] * st + R[2] * tt
                r1 = R[3] * ss + R[4] * st + R[5] * tt
                r2 = R[6] * ss + R[7] * st + R[8] * tt
                if gcd(gcd(r0, r1), r2) != d:
                    continue
                if r0 == 0 or r1 == 0 or r2 == 0:
                    continue
                h = max(abs(r0), abs(r1), abs(r2)) // d
                if ylo < h <= yhi:
                    count += 1
    return count


def param_inner(f, g, h, B, Tp, full=False, collect=False):
    """Count (u, v) completing a fixed (f, g, h) to a tuple of height <= B.

    With ``full`` every sign pattern of u and v is enumerated explicitly;
    otherwise only u_0 > 0 and v > 0 are visited (the caller scales by 16).
    """
    A = (f[1] * f[2] * g[1] ** 2 * g[2] ** 2 * h[0] ** 2,
         f[0] * f[2] * g[0] ** 2 * g[2] ** 2 * h[1] ** 2,
         f[0] * f[1] * g[0] ** 2 * g[1] ** 2 * h[2] ** 2)
    Cc = (f[0] * g[0] * h[1] * h[2], f[1] * g[1] * h[0] * h[2], f[2] * g[2] * h[0] * h[1])
    Ku = (f[0] * g[0], f[1] * g[1], f[2] * g[2])
    Kv = (h[0] * g[0] * f[1] * g[1] * f[2] * g[2],
          h[1] * g[1] * f[0] * g[0] * f[2] * g[2],
          h[2] * g[2] * f[0] * g[0] * f[1] * g[1])
    out = [] if collect else None
    total = 0

    def signed(lim, positive):
        if positive:
            return range(1, lim + 1)
        return [s for s in range(-lim, lim + 1) if s]

    def v_ok(v):
        return (gcd(v[0], v[1]) == 1 and gcd(v[0], v[2]) == 1 and gcd(v[1], v[2]) == 1
                and gcd(v[0], Kv[0]) == 1 and gcd(v[1], Kv[1]) == 1 and gcd(v[2], Kv[2]) == 1)

    def u_ok(u):
        return (gcd(u[0], u[1]) == 1 and gcd(u[0], u[2]) == 1 and gcd(u[1], u[2]) == 1
                and gcd(u[0], Ku[0]) == 1 and gcd(u[1], Ku[1]) == 1 and gcd(u[2], Ku[2]) == 1)

    # v-side small: H(y) <= Tp
    vl = [Tp // c for c in Cc]
    for v0 in signed(vl[0], not full):
        for v1 in signed(vl[1], not full):
            for v2 in signed(vl[2], not full):
                v = (v0, v1, v2)
                if not v_ok(v):
                    continue
                hy = max(Cc[0] * abs(v0), Cc[1] * abs(v1), Cc[2] * abs(v2))
                X = isqrt(B // hy)
                ul = [X // a for a in A]
                if 0 in ul:
                    continue
                w = (f[0] * v0 * v0, f[1] * v1 * v1, f[2] * v2 * v2)
                for u0 in signed(ul[0], not full):
                    for u1 in range(-ul[1], ul[1] + 1):
                        if u1 == 0:
                            continue
                        num = -(w[0] * u0 + w[1] * u1)
                        if num % w[2]:
                            continue
                        u2 = num // w[2]
                        if u2 == 0 or abs(u2) > ul[2]:
                            continue
                        u = (u0, u1, u2)
                        if not u_ok(u):
                            continue
                        total += 1
                        if collect:
                            out.append((u, v))
    # v-side large: H(y) > Tp, so H(x) <= Sx
    Sx = isqrt(B // (Tp + 1))
    ul = [Sx // a for a in A]
    if 0 not in ul:
        for u0 in signed(ul[0], not full):
            for u1 in range(-ul[1], ul[1] + 1):
                if u1 == 0:
                    continue
                for u2 in range(-ul[2], ul[2] + 1):
                    if u2 == 0:
                        continue
                    u = (u0, u1, u2)
                    if not u_ok(u):
                        continue
                    c = (f[0] * u0, f[1] * u1, f[2] * u2)
                    k = _odd_sign_index(c)
                    if k < 0:
                        continue
                    hx = max(A[0] * abs(u0), A[1] * abs(u1), A[2] * abs(u2))
                    ymax = B // (hx * hx)
                    if ymax <= Tp:
                        continue
                    i, j = [t for t in range(3) if t != k]
                    ai, aj, ak = abs(c[i]), abs(c[j]), abs(c[k])
                    li, lj, lk = ymax // Cc[i], ymax // Cc[j], ymax // Cc[k]
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
                            q = num // ak
                            vk = isqrt(q)
                            if vk * vk != q or vk == 0:
                                continue
                            v = [0, 0, 0]
                            v[i], v[j], v[k] = vi, vj, vk
                            hy = max(Cc[0] * v[0], Cc[1] * v[1], Cc[2] * v[2])
                            if hy <= Tp or hy > ymax or not v_ok(v):
                                continue
                            if not full:
                                total += 1
                                if collect:
                                    out.append((u, tuple(v)))
                                continue
                            for s0 in (1, -1):
                                for s1 in (1, -1):
                                    for s2 in (1, -1):
                                        total += 1
                                        if collect:
                                            out.append((u, (s0 * v[0], s1 * v[1], s2 * v[2])))
    return (total, out) if collect else total


def linear_box_count(w0, w1, w2, U0, U1, U2):
    """Primitive u with |u_i| <= U_i and w.u = 0 (w primitive), counted with sign.

    Rows of the reduced solution lattice are counted by Moebius inversion over
    the squarefree divisors of the row index.
    """
    b1, b2 = gauss_reduce(*kernel_basis(w0, w1, w2))
    X = (U0, U1, U2)
    amax = _alpha_bound(b1, b2, X)
    total = 0
    for al in range(0, amax + 1):
        lo, hi = _row_interval(al, b1, b2, X)
        if lo > hi:
            continue
        if al == 0:
            total += (lo <= 1 <= hi) + (lo <= -1 <= hi)
            continue
        ps = []
        n = al
        p = 2
        while p * p <= n:
            if n % p == 0:
                ps.append(p)
                while n % p == 0:
                    n //= p
            p += 1
        if n > 1:
            ps.append(n)
        sub = 0
        for mask in range(1 << len(ps)):
            dd, sign = 1, 1
            for bit, q in enumerate(ps):
                if mask >> bit & 1:
                    dd *= q
                    sign = -sign
            sub += sign * (hi // dd - (lo - 1) // dd)
        total += 2 * sub
    return total


def quadratic_box_count(u0, u1, u2, V0, V1, V2):
    """Primitive v (zeros allowed, all signs) with |v_i| <= V_i and sum u_i v_i^2 = 0."""
    total = 0
    for v0 in range(-V0, V0 + 1):
        t0 = u0 * v0 * v0
        for v1 in range(-V1, V1 + 1):
            num = -(t0 + u1 * v1 * v1)
            if num % u2:
                continue
            q = num // u2
            if q < 0:
                continue
            r = isqrt(q)
            if r * r != q or r > V2:
                continue
            g = gcd(v0, v1)
            if r == 0:
                total += g == 1
            elif gcd(g, r) == 1:
                total += 2
    return total


def mixed_box_count(f0, f1, f2, U0, U1, U2, V0, V1, V2):
    """Pairs (u, v) of nonzero triples in the boxes with sum f_i u_i v_i^2 = 0
    and gcd(u_i v_i, u_j v_j) = 1. The v-signs contribute a factor 8."""
    total = 0
    X = (U0, U1, U2)
    for v0 in range(1, V0 + 1):
        for v1 in range(1, V1 + 1):
            if gcd(v0, v1) != 1:
                continue
            for v2 in range(1, V2 + 1):
                if gcd(v0, v2) != 1 or gcd(v1, v2) != 1:
                    continue
                b1, b2 = gauss_reduce(*kernel_basis(f0 * v0 * v0, f1 * v1 * v1, f2 * v2 * v2))
                amax = _alpha_bound(b1, b2, X)
                for al in range(0, amax + 1):
                    lo, hi = _row_interval(al, b1, b2, X)
                    if al == 0:
                        lo = max(lo, 1)
                    for be in range(lo, hi + 1):
                        if gcd(al, be) != 1:
                            continue
                        u0 = al * b1[0] + be * b2[0]
                        u1 = al * b1[1] + be * b2[1]
                        u2 = al * b1[2] + be * b2[2]
                        if not (u0 and u1 and u2):
                            continue
                        p0, p1, p2 = u0 * v0, u1 * v1, u2 * v2
                        if gcd(p0, p1) == 1 and gcd(p0, p2) == 1 and gcd(p1, p2) == 1:
                            total += 2
    return 8 * total


def conic_search(a, b, c, B0, B1, B2, pairwise=False):
    """First v with 0 <= v_i <= B_i solving a v0^2 + b v1^2 + c v2^2 = 0.

    Plain mode accepts any nontrivial solution; ``pairwise`` demands positive,
    pairwise coprime coordinates. Returns None when the box holds none.
    """
    start = 1 if pairwise else 0
    for v0 in range(start, B0 + 1):
        t0 = a * v0 * v0
        for v1 in range(start, B1 + 1):
            num = -(t0 + b * v1 * v1)
            if num % c:
                continue
            q = num // c
            if q < 0:
                continue
            r = isqrt(q)
            if r * r != q or r > B2:
                continue
            if pairwise:
                if r == 0 or gcd(v0, v1) != 1 or gcd(v0, r) != 1 or gcd(v1, r) != 1:
                    continue
            elif v0 == 0 and v1 == 0 and r == 0:
                continue
            return (v0, v1, r)
    return None
