"""Smooth complete toric surfaces and exact divisor arithmetic on them.

A surface is represented by the cyclically ordered primitive generators of
the rays of its fan.  One determinant condition on consecutive rays encodes
smoothness, completeness and strict counterclockwise order at once, so
validation is a single pass.  Everything here is exact integer arithmetic;
no floating point is used anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

Ray = tuple[int, int]
Point = tuple[int, int]

__all__ = [
    "Ray",
    "Point",
    "FanError",
    "TooFewRays",
    "NonPrimitiveRay",
    "BadConsecutiveDeterminant",
    "MixedFans",
    "UnknownName",
    "det2",
    "pairing",
    "Fan",
    "TDivisor",
    "IntersectionData",
    "validate_fan",
    "build_named",
    "blowup",
    "divisor",
    "principal_divisor",
    "normalize",
    "is_normalized",
    "intersection",
    "intersection_data",
    "canonical_divisor",
    "fan_to_json",
    "fan_from_json",
    "parse_coeffs",
    "BUILTIN_NAMES",
    "KING_RAYS",
]


class FanError(ValueError):
    """A ray list does not define a smooth complete counterclockwise fan."""


class TooFewRays(FanError):
    def __init__(self, count: int):
        super().__init__(f"a complete fan needs at least 3 rays, got {count}")
        self.count = count


class NonPrimitiveRay(FanError):
    def __init__(self, index: int, ray: Ray):
        super().__init__(f"ray {index} = {ray} is not primitive")
        self.index = index
        self.ray = ray


class BadConsecutiveDeterminant(FanError):
    """det(l_i, l_{i+1}) != +1: non-smooth, mis-ordered or incomplete fan."""

    def __init__(self, index: int, det: int):
        super().__init__(
            f"det(l_{index}, l_{index + 1}) = {det}, expected +1 "
            "(rays must be primitive, counterclockwise and smooth)"
        )
        self.index = index
        self.det = det


class MixedFans(ValueError):
    """Two divisors on different fans were combined."""


class UnknownName(ValueError):
    """Unrecognised builtin surface name."""


def det2(a: Ray, b: Ray) -> int:
    return a[0] * b[1] - a[1] * b[0]


def pairing(l: Ray, m: Point) -> int:
    """Evaluate the integral linear form of a ray generator at a character point."""
    return l[0] * m[0] + l[1] * m[1]


# Rays of the thrice blown-up second Hirzebruch surface used throughout the
# search module; `build_named("king-counterexample")` returns exactly these.
KING_RAYS: tuple[Ray, ...] = (
    (1, -1),
    (2, -1),
    (3, -1),
    (1, 0),
    (0, 1),
    (-1, 2),
    (0, -1),
)


@dataclass(frozen=True)
class Fan:
    """Validated fan of a smooth complete toric surface.

    Construction validates; an instance therefore always satisfies
    det(l_i, l_{i+1}) = +1 for every cyclically consecutive ray pair.
    """

    rays: tuple[Ray, ...]

    def __post_init__(self):
        rays = tuple((int(x), int(y)) for x, y in self.rays)
        object.__setattr__(self, "rays", rays)
        if len(rays) < 3:
            raise TooFewRays(len(rays))
        for i, (x, y) in enumerate(rays):
            if (x, y) == (0, 0) or gcd(abs(x), abs(y)) != 1:
                raise NonPrimitiveRay(i, (x, y))
        n = len(rays)
        for i in range(n):
            d = det2(rays[i], rays[(i + 1) % n])
            if d != 1:
                raise BadConsecutiveDeterminant(i, d)

    @property
    def n(self) -> int:
        return len(self.rays)

    @cached_property
    def self_intersections(self) -> tuple[int, ...]:
        """Self-intersection numbers of the invariant prime divisors.

        Each value a_i is read off from l_{i-1} + l_{i+1} = -a_i * l_i,
        which holds exactly on a valid fan.
        """
        rays = self.rays
        n = self.n
        out = []
        for i in range(n):
            px, py = rays[i - 1]
            nx, ny = rays[(i + 1) % n]
            x, y = rays[i]
            sx, sy = px + nx, py + ny
            a = -(sx // x) if x != 0 else -(sy // y)
            if (-a * x, -a * y) != (sx, sy):
                raise FanError(f"ray relation fails at index {i}")  # unreachable on valid fans
            out.append(a)
        return tuple(out)

    def divisor(self, coeffs: Sequence[int]) -> "TDivisor":
        return TDivisor(self, tuple(int(c) for c in coeffs))

    def zero_divisor(self) -> "TDivisor":
        return TDivisor(self, (0,) * self.n)

    def __repr__(self):
        return f"Fan({list(self.rays)!r})"


@dataclass(frozen=True)
class TDivisor:
    """Invariant divisor sum(c_i * D_i) on a fixed fan."""

    fan: Fan
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.fan.n:
            raise ValueError(
                f"divisor has {len(coeffs)} coefficients for a {self.fan.n}-ray fan"
            )

    def _check_same_fan(self, other: "TDivisor"):
        if self.fan != other.fan:
            raise MixedFans("divisors live on different fans")

    def __add__(self, other: "TDivisor") -> "TDivisor":
        self._check_same_fan(other)
        return TDivisor(self.fan, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TDivisor") -> "TDivisor":
        self._check_same_fan(other)
        return TDivisor(self.fan, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TDivisor":
        return TDivisor(self.fan, tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> "TDivisor":
        return TDivisor(self.fan, tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def __repr__(self):
        return f"TDivisor{self.coeffs!r}"


def validate_fan(rays: Iterable[Ray]) -> Fan:
    """Build a fan from a ray list; raises a FanError subclass when invalid."""
    return Fan(tuple(rays))


def build_named(name: str, param: int | None = None) -> Fan:
    """Standard surfaces: p2, p1p1, hirzebruch (needs param a >= 0), king-counterexample."""
    key = name.strip().lower()
    if key == "p2":
        return Fan(((1, 0), (0, 1), (-1, -1)))
    if key == "p1p1":
        return Fan(((1, 0), (0, 1), (-1, 0), (0, -1)))
    if key == "hirzebruch":
        a = 0 if param is None else int(param)
        if a < 0:
            raise UnknownName(f"hirzebruch parameter must be >= 0, got {a}")
        return Fan(((1, 0), (0, 1), (-1, a), (0, -1)))
    if key in ("king", "king-counterexample"):
        return Fan(KING_RAYS)
    raise UnknownName(name)


BUILTIN_NAMES = ("p2", "p1p1", "hirzebruch", "king-counterexample")


def blowup(fan: Fan, edge_index: int) -> Fan:
    """Blow up the torus-fixed point of the cone (l_i, l_{i+1}).

    `edge_index` is 1-based and cyclic: edge i joins rays i and i+1.  The
    new ray l_i + l_{i+1} is inserted between them; the result is always a
    valid fan since both new consecutive determinants equal +1.
    """
    n = fan.n
    i = (edge_index - 1) % n
    a, b = fan.rays[i], fan.rays[(i + 1) % n]
    new = (a[0] + b[0], a[1] + b[1])
    rays = fan.rays[: i + 1] + (new,) + fan.rays[i + 1 :]
    return Fan(rays)


def divisor(fan: Fan, coeffs: Sequence[int]) -> TDivisor:
    return fan.divisor(coeffs)


def principal_divisor(fan: Fan, m: Point) -> TDivisor:
    """div(chi^m) = sum(l_i(m) * D_i)."""
    return TDivisor(fan, tuple(pairing(l, m) for l in fan.rays))


def normalize(D: TDivisor) -> TDivisor:
    """Unique representative of the class of D with the last two coefficients zero.

    Solves l_{n-1}(m) = -c_{n-1}, l_n(m) = -c_n (the last two rays form a
    Z-basis on any valid fan) and adds the principal divisor of m.
    """
    fan = D.fan
    (xp, yp), (xq, yq) = fan.rays[-2], fan.rays[-1]
    cp, cq = D.coeffs[-2], D.coeffs[-1]
    # det of the basis pair is +1 on a valid fan, so Cramer needs no division
    u = -cp * yq + cq * yp
    v = -cq * xp + cp * xq
    out = D + principal_divisor(fan, (u, v))
    assert out.coeffs[-2] == 0 and out.coeffs[-1] == 0
    return out


def is_normalized(D: TDivisor) -> bool:
    return D.coeffs[-2] == 0 and D.coeffs[-1] == 0


def intersection(D: TDivisor, E: TDivisor) -> int:
    """Intersection number D.E, extended bilinearly from the ray divisors.

    D_i.D_j is 1 for cyclically adjacent rays, 0 for non-adjacent ones and
    the stored self-intersection on the diagonal.  The pairing descends to
    Pic, i.e. principal divisors pair to zero.
    """
    D._check_same_fan(E)
    fan = D.fan
    n = fan.n
    s = fan.self_intersections
    c, e = D.coeffs, E.coeffs
    total = sum(c[i] * e[i] * s[i] for i in range(n))
    total += sum(c[i] * (e[i - 1] + e[(i + 1) % n]) for i in range(n))
    return total


def canonical_divisor(fan: Fan) -> TDivisor:
    """K = -sum(D_i): every coefficient is -1."""
    return TDivisor(fan, (-1,) * fan.n)


@dataclass(frozen=True)
class IntersectionData:
    """Bundled intersection theory of a fan: D_i.D_i list and K."""

    self_int: tuple[int, ...]
    canonical: TDivisor


def intersection_data(fan: Fan) -> IntersectionData:
    return IntersectionData(fan.self_intersections, canonical_divisor(fan))


# ---------------------------------------------------------------------------
# JSON interchange: {"rays": [[1,-1],[2,-1],...]}, divisors as integer arrays.


def fan_to_json(fan: Fan) -> str:
    return json.dumps({"rays": [list(r) for r in fan.rays]})


def fan_from_json(text: str) -> Fan:
    data = json.loads(text)
    if not isinstance(data, dict) or "rays" not in data:
        raise FanError('fan JSON must be an object with a "rays" key')
    return validate_fan(tuple((int(r[0]), int(r[1])) for r in data["rays"]))


def parse_coeffs(fan: Fan, value) -> TDivisor:
    """Divisor from a JSON array (or list), in full n-coefficient form or the
    normalized (n-2)-coefficient form, which is padded with two zeros."""
    if isinstance(value, str):
        value = json.loads(value)
    coeffs = [int(c) for c in value]
    if len(coeffs) == fan.n - 2:
        coeffs = coeffs + [0, 0]
    if len(coeffs) != fan.n:
        raise ValueError(
            f"divisor needs {fan.n} (or {fan.n - 2}) coefficients, got {len(coeffs)}"
        )
    return fan.divisor(coeffs)
