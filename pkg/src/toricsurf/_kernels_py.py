"""Pure-Python scanning kernels.

Reference implementation of the hot loops: bounding-box construction for a
line arrangement, the lattice scan that turns per-point sign patterns into
(h0, h1, h2), the early-exit higher-cohomology test, and the coefficient-box
sweep used by the classifier.  The compiled module `_kernels` mirrors this
API bit for bit; this module works with arbitrary-precision integers and is
the fallback whenever the extension is missing or the inputs exceed its
64-bit safety bounds.

Conventions shared by both backends:
  * a fan is passed as two equal-length tuples `xs`, `ys` of ray components;
  * a divisor is the coefficient tuple `cs` (same length);
  * the sign of l_i(m) + c_i at a lattice point m drives everything:
    h2 counts all-negative points, h0 counts minus-free points, and each
    point with r >= 1 circular minus-runs adds r - 1 to h1.
"""

from __future__ import annotations

from itertools import combinations

BACKEND_NAME = "python"

# safety bounds of the compiled kernel; mirrored here so callers can gate
MAX_RAY_COMPONENT = 1 << 10
MAX_COEFF = 1 << 20
MAX_RAYS = 64


def fits_fast_path(xs, ys, cs) -> bool:
    """True when the input is within the compiled kernel's overflow-safe range."""
    if len(xs) > MAX_RAYS:
        return False
    if any(abs(v) > MAX_RAY_COMPONENT for v in xs + ys):
        return False
    return all(abs(c) <= MAX_COEFF for c in cs)


def box_bounds(xs, ys, cs, margin=2):
    """Integer box containing every pairwise intersection of the lines
    l_i(m) = -c_i (non-parallel pairs), rounded outward plus a margin.

    Every lattice point whose sign pattern contributes to cohomology lies in
    the convex hull of those intersection points, hence in this box.
    """
    n = len(xs)
    u_min = u_max = v_min = v_max = None
    for i, j in combinations(range(n), 2):
        d = xs[i] * ys[j] - ys[i] * xs[j]
        if d == 0:
            continue
        un = cs[j] * ys[i] - cs[i] * ys[j]
        vn = cs[i] * xs[j] - cs[j] * xs[i]
        # floor/ceil of the exact rationals un/d, vn/d
        uf, uc = un // d, -((-un) // d)
        vf, vc = vn // d, -((-vn) // d)
        if u_min is None:
            u_min, u_max, v_min, v_max = uf, uc, vf, vc
        else:
            u_min = min(u_min, uf)
            u_max = max(u_max, uc)
            v_min = min(v_min, vf)
            v_max = max(v_max, vc)
    if u_min is None:  # all lines parallel; cannot happen on a complete fan
        u_min = u_max = v_min = v_max = 0
    return (u_min - margin, u_max + margin, v_min - margin, v_max + margin)


def _point_stats(xs, ys, cs, n, u, v):
    """(minus_runs, saw_minus, all_minus) of the sign pattern at (u, v)."""
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
    return runs, minus_count, minus_count == n


def cohom_dims_in_box(xs, ys, cs, u0, u1, v0, v1):
    """(h0, h1, h2) summed over all lattice points of the given box."""
    n = len(xs)
    h0 = h1 = h2 = 0
    for v in range(v0, v1 + 1):
        for u in range(u0, u1 + 1):
            runs, minus_count, all_minus = _point_stats(xs, ys, cs, n, u, v)
            if minus_count == 0:
                h0 += 1
            elif all_minus:
                h2 += 1
            elif runs >= 2:
                h1 += runs - 1
    return (h0, h1, h2)


def cohom_dims(xs, ys, cs, margin=2):
    u0, u1, v0, v1 = box_bounds(xs, ys, cs, margin)
    return cohom_dims_in_box(xs, ys, cs, u0, u1, v0, v1)


def has_higher(xs, ys, cs, margin=2) -> bool:
    """True iff some lattice point contributes to h1 or h2 (early exit)."""
    n = len(xs)
    u0, u1, v0, v1 = box_bounds(xs, ys, cs, margin)
    for v in range(v0, v1 + 1):
        for u in range(u0, u1 + 1):
            runs, minus_count, all_minus = _point_stats(xs, ys, cs, n, u, v)
            if all_minus or runs >= 2:
                return True
    return False


def is_biacyclic_coeffs(xs, ys, cs, margin=2) -> bool:
    """Higher cohomology of both the divisor and its negative vanish."""
    if has_higher(xs, ys, cs, margin):
        return False
    return not has_higher(xs, ys, [-c for c in cs], margin)


def _chi2_pair(cs, self_ints, n):
    """(2*chi(D), 2*chi(-D)) via Riemann-Roch on the intersection form."""
    dd = 0
    dk = 0
    for i in range(n):
        ci = cs[i]
        dd += ci * ci * self_ints[i] + 2 * ci * cs[(i + 1) % n]
        dk -= ci * (self_ints[i] + 2)
    return 2 + dd - dk, 2 + dd + dk


def scan_candidates(xs, ys, lo, hi, self_ints, start, stop, rr_prune=True):
    """Sweep normalized coefficient tuples through the bi-acyclicity test.

    Candidates are the tuples (c_1..c_{n-2}, 0, 0) with lo[i] <= c_{i+1} <=
    hi[i], enumerated in lexicographic order and indexed by a flat integer;
    the slice [start, stop) of that order is scanned.  When `rr_prune` is
    set, candidates with a negative Euler characteristic on either side are
    rejected without scanning (chi = h0 >= 0 on any bi-acyclic class).
    Returns the passing tuples, full length, in scan order.
    """
    n = len(xs)
    nfree = n - 2
    sizes = [hi[i] - lo[i] + 1 for i in range(nfree)]
    out = []
    cs = [0] * n
    for idx in range(start, stop):
        rem = idx
        for i in range(nfree - 1, -1, -1):
            rem, off = divmod(rem, sizes[i])
            cs[i] = lo[i] + off
        if rr_prune:
            chi2d, chi2n = _chi2_pair(cs, self_ints, n)
            if chi2d < 0 or chi2n < 0:
                continue
        if is_biacyclic_coeffs(xs, ys, cs):
            out.append(tuple(cs))
    return out
