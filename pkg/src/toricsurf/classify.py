"""Classification of bi-acyclic line bundles.

A class is *bi-acyclic* when the higher cohomology of both the bundle and
its dual vanish.  On the 7-ray surface returned by
`build_named("king-counterexample")` the bi-acyclic set is, up to sign, the
zero class, seven sporadic classes with fifth coefficient 0 (the A list),
seven arithmetic series with fifth coefficient 1 and common step (1,2,3,1,0)
(the B series), and ten sporadic classes with fifth coefficient 2 (the C
list).  This module holds that table symbolically, decides membership, and
validates the table against brute-force box enumeration.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import _backend
from .fan import Fan, KING_RAYS, TDivisor, normalize

__all__ = [
    "WrongSurface",
    "MismatchFound",
    "STEP",
    "A_LIST",
    "C_LIST",
    "B_SERIES",
    "SeriesDescriptor",
    "BiacyclicLabel",
    "ClassificationTable",
    "KING_TABLE",
    "king_fan",
    "pad",
    "unpad",
    "is_biacyclic",
    "enumerate_biacyclic",
    "membership",
    "label_class",
    "cross_validate",
    "CrossValidationReport",
    "expected_slice",
]

Tuple5 = tuple[int, int, int, int, int]


class WrongSurface(ValueError):
    """The symbolic classification only applies to the 7-ray surface."""


class MismatchFound(RuntimeError):
    """Brute-force enumeration disagrees with the symbolic table."""


# Common difference of all seven series; also the last entry of the A list.
STEP: Tuple5 = (1, 2, 3, 1, 0)

A_LIST: tuple[Tuple5, ...] = (
    (0, 0, 1, 0, 0),
    (0, 1, 1, 0, 0),
    (0, 1, 2, 1, 0),
    (1, 1, 1, 0, 0),
    (1, 1, 2, 1, 0),
    (1, 2, 2, 1, 0),
    (1, 2, 3, 1, 0),
)

# C_1..C_10 carry their customary numbering; C_11 = (2,6,9,4,2) is absent
# from the commonly tabulated list but is bi-acyclic (brute-force scans at
# radius 60 plus Serre-duality and Riemann-Roch cross-checks agree), so the
# table here includes it and the sequence search eliminates it like the rest.
C_LIST: tuple[Tuple5, ...] = (
    (2, 4, 7, 3, 2),
    (2, 5, 7, 3, 2),
    (2, 5, 8, 3, 2),
    (2, 5, 9, 4, 2),
    (2, 6, 10, 4, 2),
    (3, 5, 7, 3, 2),
    (3, 5, 8, 3, 2),
    (3, 5, 9, 4, 2),
    (3, 6, 8, 3, 2),
    (3, 6, 9, 3, 2),
    (2, 6, 9, 4, 2),
)


def _add(a: Sequence[int], b: Sequence[int], k: int = 1) -> Tuple5:
    return tuple(x + k * y for x, y in zip(a, b))  # type: ignore[return-value]


@dataclass(frozen=True)
class SeriesDescriptor:
    """One arithmetic family base + k*STEP, defined for k >= k_min."""

    index: int
    base: Tuple5
    k_min: int
    step: Tuple5 = STEP

    def member(self, k: int) -> Tuple5:
        return _add(self.base, self.step, k)

    def closed_form(self, k: int) -> Tuple5:
        """The same member written out coefficient by coefficient."""
        b = self.base
        return (k + b[0], 2 * k + b[1], 3 * k + b[2], k + b[3], 1)

    def to_json_obj(self) -> dict:
        return {
            "label": f"B_{self.index}",
            "base": list(self.base),
            "step": list(self.step),
            "k_min": self.k_min,
        }


B_SERIES: tuple[SeriesDescriptor, ...] = (
    SeriesDescriptor(1, (0, -1, -2, 0, 1), 2),
    SeriesDescriptor(2, (0, -1, -1, 0, 1), 1),
    SeriesDescriptor(3, (0, 0, -1, 0, 1), 1),
    SeriesDescriptor(4, (0, 0, 0, 0, 1), 1),
    SeriesDescriptor(5, (0, 0, 1, 1, 1), 1),
    SeriesDescriptor(6, (0, 1, 1, 1, 1), 1),
    SeriesDescriptor(7, (0, 1, 2, 1, 1), 0),
)


@dataclass(frozen=True, order=True)
class BiacyclicLabel:
    """Name of a classified class: zero, A_i, C_j, or a series member B_{r,k}."""

    family: str  # "zero" | "A" | "B" | "C"
    index: int = 0
    k: int | None = None
    sign: int = 1

    def __str__(self) -> str:
        s = "-" if self.sign < 0 else ""
        if self.family == "zero":
            return "0"
        if self.family == "B":
            return f"{s}B_{{{self.index},{self.k}}}"
        return f"{s}{self.family}_{self.index}"

    def negated(self) -> "BiacyclicLabel":
        if self.family == "zero":
            return self
        return BiacyclicLabel(self.family, self.index, self.k, -self.sign)

    def coeffs5(self) -> Tuple5:
        if self.family == "zero":
            return (0, 0, 0, 0, 0)
        if self.family == "A":
            t = A_LIST[self.index - 1]
        elif self.family == "C":
            t = C_LIST[self.index - 1]
        else:
            t = B_SERIES[self.index - 1].member(self.k)  # type: ignore[arg-type]
        return t if self.sign > 0 else tuple(-c for c in t)  # type: ignore[return-value]


@dataclass(frozen=True)
class ClassificationTable:
    """The whole bi-acyclic set: zero, +-A list, +-B series, +-C list."""

    a_list: tuple[Tuple5, ...] = A_LIST
    c_list: tuple[Tuple5, ...] = C_LIST
    b_series: tuple[SeriesDescriptor, ...] = B_SERIES

    def finite_c5_zero(self) -> tuple[Tuple5, ...]:
        """Zero plus both signs of the A list: the full c5 = 0 stratum."""
        out = [(0, 0, 0, 0, 0)]
        for a in self.a_list:
            out.append(a)
            out.append(tuple(-c for c in a))
        return tuple(out)  # type: ignore[return-value]

    def to_json_obj(self) -> dict:
        return {
            "zero": [0, 0, 0, 0, 0],
            "a_list": [
                {"label": f"A_{i + 1}", "coeffs": list(pad(t))}
                for i, t in enumerate(self.a_list)
            ],
            "b_series": [s.to_json_obj() for s in self.b_series],
            "c_list": [
                {"label": f"C_{i + 1}", "coeffs": list(pad(t))}
                for i, t in enumerate(self.c_list)
            ],
        }


KING_TABLE = ClassificationTable()

_king_fan: Fan | None = None


def king_fan() -> Fan:
    global _king_fan
    if _king_fan is None:
        _king_fan = Fan(KING_RAYS)
    return _king_fan


def pad(t5: Sequence[int]) -> tuple[int, ...]:
    return tuple(t5) + (0, 0)


def unpad(t: Sequence[int]) -> Tuple5:
    assert t[-2] == 0 and t[-1] == 0
    return tuple(t[:-2])  # type: ignore[return-value]


def is_biacyclic(D: TDivisor) -> bool:
    """Higher cohomology of D and of -D both vanish (early-exit scans)."""
    xs = tuple(l[0] for l in D.fan.rays)
    ys = tuple(l[1] for l in D.fan.rays)
    kern = _backend.kernels_for(xs, ys, D.coeffs)
    return kern.is_biacyclic_coeffs(xs, ys, D.coeffs)


def _resolve_bounds(fan: Fan, bounds, c5: int | None):
    nfree = fan.n - 2
    if isinstance(bounds, int):
        lo = [-bounds] * nfree
        hi = [bounds] * nfree
    else:
        lo = [int(a) for a, _ in bounds]
        hi = [int(b) for _, b in bounds]
        if len(lo) != nfree:
            raise ValueError(f"need bounds for {nfree} free coefficients")
    if c5 is not None:
        # the filter pins the last free coefficient (c5 on the 7-ray surface)
        lo[-1] = hi[-1] = int(c5)
    return lo, hi


def enumerate_biacyclic(
    fan: Fan,
    bounds,
    c5: int | None = None,
    workers: int | None = None,
    rr_prune: bool = True,
) -> list[tuple[int, ...]]:
    """All normalized classes in the coefficient box that are bi-acyclic.

    `bounds` is either a symmetric radius (|c_i| <= bounds) or a list of
    (lo, hi) pairs for the n-2 free coefficients.  The sweep is partitioned
    across threads (the compiled kernel releases the GIL); the result is a
    sorted list of full-length coefficient tuples, independent of the worker
    count.  `rr_prune` skips candidates whose Euler characteristic is
    negative on either side, which no bi-acyclic class can be.
    """
    lo, hi = _resolve_bounds(fan, bounds, c5)
    total = 1
    for a, b in zip(lo, hi):
        if b < a:
            return []
        total *= b - a + 1
    xs = tuple(l[0] for l in fan.rays)
    ys = tuple(l[1] for l in fan.rays)
    si = fan.self_intersections
    kern = _backend.kernels_for(xs, ys, tuple(lo) + (0, 0))
    if _backend.kernels_for(xs, ys, tuple(hi) + (0, 0)) is not kern:
        kern = _backend.pure_kernels()

    nworkers = workers if workers is not None else _backend.worker_count()
    nworkers = max(1, min(nworkers, total))
    chunk = max(1, (total + nworkers * 8 - 1) // (nworkers * 8))
    ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]

    def run(r):
        return kern.scan_candidates(xs, ys, tuple(lo), tuple(hi), si, r[0], r[1], rr_prune)

    if nworkers == 1 or len(ranges) == 1:
        parts = [run(r) for r in ranges]
    else:
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            parts = list(pool.map(run, ranges))
    found: list[tuple[int, ...]] = []
    for p in parts:
        found.extend(p)
    found.sort()
    return found


def _match_series(t5: Tuple5) -> BiacyclicLabel | None:
    for sign in (1, -1):
        s5 = t5 if sign > 0 else tuple(-c for c in t5)
        if s5[4] != 1:
            continue
        k = s5[0]  # every series has base c1 = 0 and step c1 = 1
        for ser in B_SERIES:
            if k >= ser.k_min and ser.member(k) == s5:
                return BiacyclicLabel("B", ser.index, k, sign)
    return None


def label_class(t5: Sequence[int]) -> BiacyclicLabel | None:
    """Label of a normalized 5-tuple within the classification, else None."""
    t5 = tuple(int(c) for c in t5)
    if t5 == (0, 0, 0, 0, 0):
        return BiacyclicLabel("zero")
    c5 = t5[4]
    if c5 == 0:
        for i, a in enumerate(A_LIST):
            if t5 == a:
                return BiacyclicLabel("A", i + 1)
            if t5 == tuple(-c for c in a):
                return BiacyclicLabel("A", i + 1, sign=-1)
        return None
    if abs(c5) == 1:
        return _match_series(t5)
    if abs(c5) == 2:
        for j, c in enumerate(C_LIST):
            if t5 == c:
                return BiacyclicLabel("C", j + 1)
            if t5 == tuple(-x for x in c):
                return BiacyclicLabel("C", j + 1, sign=-1)
        return None
    return None


def membership(D: TDivisor) -> BiacyclicLabel | None:
    """Symbolic membership of a divisor class in the classified set.

    Surface-specific: raises WrongSurface unless the fan is the 7-ray
    surface with the published ray order.  Membership agrees with
    `is_biacyclic` wherever the table has been validated (`cross_validate`).
    """
    if D.fan.rays != KING_RAYS:
        raise WrongSurface("the classification applies to the 7-ray surface only")
    return label_class(unpad(normalize(D).coeffs))


def expected_slice(bounds, c5: int) -> set[tuple[int, ...]]:
    """Table members inside the box with the given last free coefficient."""
    lo, hi = _resolve_bounds(king_fan(), bounds, None)

    def inside(t5: Tuple5) -> bool:
        return all(a <= c <= b for c, a, b in zip(t5, lo, hi))

    out: set[tuple[int, ...]] = set()
    if c5 == 0:
        for t in KING_TABLE.finite_c5_zero():
            if inside(t):
                out.add(pad(t))
    elif abs(c5) == 1:
        for ser in B_SERIES:
            # step c3 = 3 > 0, so in-box members form a finite k range
            k = ser.k_min
            while True:
                t = ser.member(k)
                if t[2] > hi[2] and t[0] > hi[0]:
                    break
                s = t if c5 > 0 else tuple(-c for c in t)
                if inside(s):
                    out.add(pad(s))
                k += 1
    elif abs(c5) == 2:
        for t in C_LIST:
            s = t if c5 > 0 else tuple(-c for c in t)
            if inside(s):
                out.add(pad(s))
    return out


@dataclass
class CrossValidationReport:
    bounds: list[tuple[int, int]]
    c5_range: tuple[int, int]
    slice_counts: dict[int, int] = field(default_factory=dict)
    prune_crosscheck: bool = False
    ok: bool = True

    def to_json_obj(self) -> dict:
        return {
            "bounds": [list(b) for b in self.bounds],
            "c5_range": list(self.c5_range),
            "slice_counts": {str(k): v for k, v in sorted(self.slice_counts.items())},
            "prune_crosscheck": self.prune_crosscheck,
            "ok": self.ok,
        }


def cross_validate(
    bounds=10,
    c5_bound: int = 4,
    workers: int | None = None,
    prune_crosscheck_bounds=None,
) -> CrossValidationReport:
    """Check the symbolic table against brute-force enumeration inside a box.

    For every value of the last free coefficient up to `c5_bound` the
    enumerated bi-acyclic set must equal the table members in the box; in
    particular the |c5| >= 3 slices must be empty.  Raises MismatchFound
    with the offending classes otherwise.  When `prune_crosscheck_bounds`
    is given, that (smaller) box is additionally enumerated with the Euler
    characteristic prune disabled and compared, guarding the prune itself.
    """
    fan = king_fan()
    lo, hi = _resolve_bounds(fan, bounds, None)
    report = CrossValidationReport(
        bounds=list(zip(lo, hi)), c5_range=(-c5_bound, c5_bound)
    )
    for c5 in range(-c5_bound, c5_bound + 1):
        found = set(enumerate_biacyclic(fan, list(zip(lo, hi)), c5=c5, workers=workers))
        expected = expected_slice(list(zip(lo, hi)), c5) if abs(c5) <= 2 else set()
        if found != expected:
            missing = sorted(expected - found)
            extra = sorted(found - expected)
            raise MismatchFound(
                f"c5={c5}: table and enumeration disagree; "
                f"missing from scan: {missing}; unclassified: {extra}"
            )
        report.slice_counts[c5] = len(found)
    if prune_crosscheck_bounds is not None:
        a = enumerate_biacyclic(fan, prune_crosscheck_bounds, workers=workers, rr_prune=True)
        b = enumerate_biacyclic(fan, prune_crosscheck_bounds, workers=workers, rr_prune=False)
        if a != b:
            raise MismatchFound("Euler-characteristic prune altered the enumeration")
        report.prune_crosscheck = True
    return report
