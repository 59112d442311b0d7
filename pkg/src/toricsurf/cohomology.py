"""Sheaf cohomology of invariant line bundles via lattice-point sign patterns.

For a divisor D = sum(c_i D_i) each character point m gets a signature: the
per-ray sign of l_i(m) + c_i.  Points whose signature has no minus entry
span H^0, all-minus points span H^2, and a point whose minus entries form
r >= 1 maximal circular runs contributes r - 1 to H^1.  Summing over a box
that contains every vertex of the line arrangement l_i(m) = -c_i captures
all contributions: outside that hull every sign pattern is a single
half-plane arc.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import _backend
from .fan import Point, TDivisor, canonical_divisor, intersection, pairing

__all__ = [
    "PLUS",
    "MINUS",
    "ZERO",
    "CohomologyDims",
    "ScanRegion",
    "CohomologyWitness",
    "signature_at",
    "minus_interval_count",
    "chamber_contribution",
    "scan_region",
    "cohomology",
    "euler_char_rr",
    "higher_cohomology_vanishes",
]

PLUS, MINUS, ZERO = "+", "-", "0"


class CohomologyDims(NamedTuple):
    h0: int
    h1: int
    h2: int


class ScanRegion(NamedTuple):
    u_min: int
    u_max: int
    v_min: int
    v_max: int

    def doubled(self) -> "ScanRegion":
        """Region scaled by two about its center (always contains the original)."""
        du = self.u_max - self.u_min
        dv = self.v_max - self.v_min
        return ScanRegion(
            self.u_min - (du + 1) // 2,
            self.u_max + (du + 1) // 2,
            self.v_min - (dv + 1) // 2,
            self.v_max + (dv + 1) // 2,
        )

    def contains(self, m: Point) -> bool:
        return self.u_min <= m[0] <= self.u_max and self.v_min <= m[1] <= self.v_max


@dataclass(frozen=True)
class CohomologyWitness:
    """A lattice point with a nonzero contribution, kept for diagnostics."""

    point: Point
    signature: str
    contributes: CohomologyDims

    def to_json_obj(self) -> dict:
        return {
            "m": list(self.point),
            "signature": self.signature,
            "h": list(self.contributes),
        }


def signature_at(D: TDivisor, m: Point) -> str:
    """Signature of m: per ray '+', '-' or '0' as l_i(m) + c_i is >, < or = 0."""
    out = []
    for l, c in zip(D.fan.rays, D.coeffs):
        f = pairing(l, m) + c
        out.append(PLUS if f > 0 else MINUS if f < 0 else ZERO)
    return "".join(out)


def minus_interval_count(sig: str) -> int:
    """Number of maximal circular runs of '-'; an all-minus signature has one."""
    if MINUS not in sig:
        return 0
    starts = sum(1 for i in range(len(sig)) if sig[i] == MINUS and sig[i - 1] != MINUS)
    return starts if starts else 1  # no run boundary at all: everything is minus


def chamber_contribution(sig: str) -> CohomologyDims:
    """(dh0, dh1, dh2) of a single lattice point with this signature."""
    if MINUS not in sig:
        return CohomologyDims(1, 0, 0)
    if sig.count(MINUS) == len(sig):
        return CohomologyDims(0, 0, 1)
    return CohomologyDims(0, max(minus_interval_count(sig) - 1, 0), 0)


def _split(D: TDivisor):
    xs = tuple(l[0] for l in D.fan.rays)
    ys = tuple(l[1] for l in D.fan.rays)
    return xs, ys, D.coeffs


def scan_region(D: TDivisor, margin: int = 2) -> ScanRegion:
    """Box around all pairwise intersections of the arrangement lines.

    Rounded outward and padded by `margin`; it contains every lattice point
    with a nonzero chamber contribution (see module docstring).
    """
    xs, ys, cs = _split(D)
    kern = _backend.kernels_for(xs, ys, cs)
    return ScanRegion(*kern.box_bounds(xs, ys, cs, margin))


def cohomology(D: TDivisor, want_witnesses: bool = False, region: ScanRegion | None = None):
    """Exact (h0, h1, h2) of O(D); optionally also every contributing point.

    A `region` override exists for box-stability checks; it must contain the
    default scan region for the result to be meaningful.
    """
    if region is None:
        region = scan_region(D)
    if not want_witnesses:
        xs, ys, cs = _split(D)
        kern = _backend.kernels_for(xs, ys, cs)
        return CohomologyDims(*kern.cohom_dims_in_box(xs, ys, cs, *region))
    h0 = h1 = h2 = 0
    witnesses = []
    for v in range(region.v_min, region.v_max + 1):
        for u in range(region.u_min, region.u_max + 1):
            sig = signature_at(D, (u, v))
            d = chamber_contribution(sig)
            if d != (0, 0, 0):
                h0 += d.h0
                h1 += d.h1
                h2 += d.h2
                witnesses.append(CohomologyWitness((u, v), sig, d))
    return CohomologyDims(h0, h1, h2), witnesses


def euler_char_rr(D: TDivisor) -> int:
    """Euler characteristic by Riemann-Roch: chi(D) = 1 + D.(D - K)/2."""
    t = intersection(D, D - canonical_divisor(D.fan))
    assert t % 2 == 0, "D.(D-K) must be even on a smooth surface"
    return 1 + t // 2


def higher_cohomology_vanishes(D: TDivisor) -> bool:
    """True iff h1 = h2 = 0; stops at the first witness point."""
    xs, ys, cs = _split(D)
    kern = _backend.kernels_for(xs, ys, cs)
    return not kern.has_higher(xs, ys, cs)
