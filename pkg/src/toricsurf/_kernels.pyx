# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scanning kernels.

Mirror of `_kernels_py` (same functions, same results) with 64-bit integer
arithmetic and the GIL released inside the sweeps.  Callers must gate inputs
through `fits_fast_path`; within those bounds no intermediate value can
overflow a signed 64-bit integer (ray components <= 2^10, coefficients
<= 2^20, so box coordinates stay below 2^32 and every product below 2^43).
"""

from libc.stdlib cimport free, malloc

BACKEND_NAME = "compiled"

MAX_RAY_COMPONENT = 1 << 10
MAX_COEFF = 1 << 20
MAX_RAYS = 64

DEF MAXN = 64

ctypedef long long i64


def fits_fast_path(xs, ys, cs):
    if len(xs) > MAX_RAYS:
        return False
    if any(abs(v) > MAX_RAY_COMPONENT for v in xs + ys):
        return False
    return all(abs(c) <= MAX_COEFF for c in cs)


cdef inline i64 _floordiv(i64 a, i64 b) noexcept nogil:
    cdef i64 q = a // b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline i64 _ceildiv(i64 a, i64 b) noexcept nogil:
    return -_floordiv(-a, b)


cdef struct Box:
    i64 u0, u1, v0, v1


cdef Box _box(int n, const i64* xs, const i64* ys, const i64* cs, i64 margin) noexcept nogil:
    cdef Box b
    cdef bint found = False
    cdef int i, j
    cdef i64 d, un, vn, uf, uc, vf, vc
    b.u0 = b.u1 = b.v0 = b.v1 = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = xs[i] * ys[j] - ys[i] * xs[j]
            if d == 0:
                continue
            un = cs[j] * ys[i] - cs[i] * ys[j]
            vn = cs[i] * xs[j] - cs[j] * xs[i]
            uf = _floordiv(un, d)
            uc = _ceildiv(un, d)
            vf = _floordiv(vn, d)
            vc = _ceildiv(vn, d)
            if not found:
                b.u0 = uf; b.u1 = uc; b.v0 = vf; b.v1 = vc
                found = True
            else:
                if uf < b.u0: b.u0 = uf
                if uc > b.u1: b.u1 = uc
                if vf < b.v0: b.v0 = vf
                if vc > b.v1: b.v1 = vc
    b.u0 -= margin; b.u1 += margin; b.v0 -= margin; b.v1 += margin
    return b


cdef void _dims_in_box(int n, const i64* xs, const i64* ys, const i64* cs,
                       Box b, i64* out) noexcept nogil:
    cdef i64 h0 = 0, h1 = 0, h2 = 0
    cdef i64 u, v, f
    cdef int i, runs, minus_count
    cdef bint prev_minus
    for v in range(b.v0, b.v1 + 1):
        for u in range(b.u0, b.u1 + 1):
            runs = 0
            minus_count = 0
            prev_minus = xs[n - 1] * u + ys[n - 1] * v + cs[n - 1] < 0
            for i in range(n):
                f = xs[i] * u + ys[i] * v + cs[i]
                if f < 0:
                    minus_count += 1
                    if not prev_minus:
                        runs += 1
                    prev_minus = True
                else:
                    prev_minus = False
            if minus_count == 0:
                h0 += 1
            elif minus_count == n:
                h2 += 1
            elif runs >= 2:
                h1 += runs - 1
    out[0] = h0; out[1] = h1; out[2] = h2


cdef bint _has_higher(int n, const i64* xs, const i64* ys, const i64* cs,
                      i64 margin) noexcept nogil:
    cdef Box b = _box(n, xs, ys, cs, margin)
    cdef i64 u, v, f
    cdef int i, runs, minus_count
    cdef bint prev_minus
    for v in range(b.v0, b.v1 + 1):
        for u in range(b.u0, b.u1 + 1):
            runs = 0
            minus_count = 0
            prev_minus = xs[n - 1] * u + ys[n - 1] * v + cs[n - 1] < 0
            for i in range(n):
                f = xs[i] * u + ys[i] * v + cs[i]
                if f < 0:
                    minus_count += 1
                    if not prev_minus:
                        runs += 1
                    prev_minus = True
                else:
                    prev_minus = False
            if minus_count == n or runs >= 2:
                return True
    return False


cdef bint _biacyclic(int n, const i64* xs, const i64* ys, const i64* cs,
                     i64 margin) noexcept nogil:
    cdef i64 neg[MAXN]
    cdef int i
    if _has_higher(n, xs, ys, cs, margin):
        return False
    for i in range(n):
        neg[i] = -cs[i]
    return not _has_higher(n, xs, ys, neg, margin)


cdef int _load(object seq, i64* dst) except -1:
    cdef int n = len(seq)
    cdef int i
    if n > MAXN:
        raise ValueError(f"compiled kernel supports at most {MAXN} rays")
    for i in range(n):
        dst[i] = seq[i]
    return n


def box_bounds(xs, ys, cs, margin=2):
    cdef i64 cxs[MAXN]
    cdef i64 cys[MAXN]
    cdef i64 ccs[MAXN]
    cdef int n = _load(xs, cxs)
    _load(ys, cys)
    _load(cs, ccs)
    cdef Box b = _box(n, cxs, cys, ccs, margin)
    return (b.u0, b.u1, b.v0, b.v1)


def cohom_dims_in_box(xs, ys, cs, u0, u1, v0, v1):
    cdef i64 cxs[MAXN]
    cdef i64 cys[MAXN]
    cdef i64 ccs[MAXN]
    cdef i64 out[3]
    cdef int n = _load(xs, cxs)
    _load(ys, cys)
    _load(cs, ccs)
    cdef Box b
    b.u0 = u0; b.u1 = u1; b.v0 = v0; b.v1 = v1
    with nogil:
        _dims_in_box(n, cxs, cys, ccs, b, out)
    return (out[0], out[1], out[2])


def cohom_dims(xs, ys, cs, margin=2):
    cdef i64 cxs[MAXN]
    cdef i64 cys[MAXN]
    cdef i64 ccs[MAXN]
    cdef i64 out[3]
    cdef i64 cmargin = margin
    cdef int n = _load(xs, cxs)
    _load(ys, cys)
    _load(cs, ccs)
    cdef Box b
    with nogil:
        b = _box(n, cxs, cys, ccs, cmargin)
        _dims_in_box(n, cxs, cys, ccs, b, out)
    return (out[0], out[1], out[2])


def has_higher(xs, ys, cs, margin=2):
    cdef i64 cxs[MAXN]
    cdef i64 cys[MAXN]
    cdef i64 ccs[MAXN]
    cdef i64 cmargin = margin
    cdef int n = _load(xs, cxs)
    _load(ys, cys)
    _load(cs, ccs)
    cdef bint res
    with nogil:
        res = _has_higher(n, cxs, cys, ccs, cmargin)
    return bool(res)


def is_biacyclic_coeffs(xs, ys, cs, margin=2):
    cdef i64 cxs[MAXN]
    cdef i64 cys[MAXN]
    cdef i64 ccs[MAXN]
    cdef i64 cmargin = margin
    cdef int n = _load(xs, cxs)
    _load(ys, cys)
    _load(cs, ccs)
    cdef bint res
    with nogil:
        res = _biacyclic(n, cxs, cys, ccs, cmargin)
    return bool(res)


def scan_candidates(xs, ys, lo, hi, self_ints, start, stop, rr_prune=True):
    """See `_kernels_py.scan_candidates`; identical semantics and ordering."""
    cdef i64 cxs[MAXN]
    cdef i64 cys[MAXN]
    cdef i64 clo[MAXN]
    cdef i64 chi_[MAXN]
    cdef i64 csi[MAXN]
    cdef i64 sizes[MAXN]
    cdef i64 cs[MAXN]
    cdef int n = _load(xs, cxs)
    cdef int nfree = len(lo)
    cdef int i
    cdef bint prune = bool(rr_prune)
    _load(ys, cys)
    _load(lo, clo)
    _load(hi, chi_)
    _load(self_ints, csi)
    if nfree != n - 2:
        raise ValueError("bounds must cover exactly the first n-2 coefficients")
    for i in range(nfree):
        sizes[i] = chi_[i] - clo[i] + 1
        if sizes[i] <= 0:
            return []
    cs[n - 2] = 0
    cs[n - 1] = 0

    cdef i64 cstart = start, cstop = stop
    cdef i64 idx, rem, dd, dk, ci
    cdef bint hit
    out = []
    with nogil:
        for idx in range(cstart, cstop):
            rem = idx
            for i in range(nfree - 1, -1, -1):
                cs[i] = clo[i] + rem % sizes[i]
                rem = rem // sizes[i]
            if prune:
                dd = 0
                dk = 0
                for i in range(n):
                    ci = cs[i]
                    dd += ci * ci * csi[i] + 2 * ci * cs[(i + 1) % n]
                    dk -= ci * (csi[i] + 2)
                if 2 + dd - dk < 0 or 2 + dd + dk < 0:
                    continue
            hit = _biacyclic(n, cxs, cys, cs, 2)
            if hit:
                with gil:
                    out.append(tuple(cs[i] for i in range(n)))
    return out
