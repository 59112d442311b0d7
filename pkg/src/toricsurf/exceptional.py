"""Strongly exceptional sequences of line bundles and their exclusion proof.

Two classes are *compatible* when their difference is bi-acyclic in both
directions; this is the necessary condition for membership in a common
strongly exceptional sequence containing the structure sheaf.  The search
builds the compatibility graph over classified bi-acyclic classes, looks
for cliques through the zero class, and filters survivors through the full
Hom/Ext ordering test.

`verify_counterexample` assembles a machine-checked certificate that the
7-ray surface admits no strongly exceptional sequence of 7 line bundles:
each step is either a symbolic identity on the affine classification
families, a recorded finite enumeration, or an explicitly cited assumption
(completeness of the classification outside the validated coefficient box).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .classify import (
    A_LIST,
    B_SERIES,
    C_LIST,
    KING_TABLE,
    STEP,
    BiacyclicLabel,
    SeriesDescriptor,
    cross_validate,
    enumerate_biacyclic,
    is_biacyclic,
    king_fan,
    label_class,
    pad,
)
from .cohomology import CohomologyDims, cohomology
from .fan import Fan, KING_RAYS, TDivisor, blowup, build_named, normalize

__all__ = [
    "DuplicateClass",
    "NotAffineInput",
    "ClaimFailed",
    "compatible",
    "ExtProfile",
    "ext_profile",
    "is_strongly_exceptional",
    "OffsetSolutions",
    "solve_offsets",
    "compatible_set",
    "FoundSequence",
    "find_sequences",
    "Claim",
    "Certificate",
    "verify_counterexample",
]

Tuple5 = tuple[int, int, int, int, int]
ZERO5: Tuple5 = (0, 0, 0, 0, 0)


class DuplicateClass(ValueError):
    """A candidate sequence repeats a divisor class."""


class NotAffineInput(ValueError):
    """solve_offsets needs 5-tuples (normalized classes without padding)."""


class ClaimFailed(RuntimeError):
    def __init__(self, claim_id: int, witness):
        super().__init__(f"certificate claim {claim_id} failed: {witness}")
        self.claim_id = claim_id
        self.witness = witness


# ---------------------------------------------------------------------------
# pairwise conditions


def compatible(D: TDivisor, E: TDivisor) -> bool:
    """Both difference directions bi-acyclic; symmetric in its arguments."""
    return is_biacyclic(E - D)


@dataclass(frozen=True)
class ExtProfile:
    """Hom/Ext1/Ext2 dimensions for every ordered pair of a candidate list.

    Ext^k(L_i, L_j) has the dimension of h^k of the difference class
    D_j - D_i, which is how the table is filled.
    """

    dims: dict[tuple[int, int], CohomologyDims]

    def hom(self, i: int, j: int) -> int:
        return self.dims[(i, j)].h0

    def ext1(self, i: int, j: int) -> int:
        return self.dims[(i, j)].h1

    def ext2(self, i: int, j: int) -> int:
        return self.dims[(i, j)].h2


def ext_profile(classes: Sequence[TDivisor]) -> ExtProfile:
    dims = {}
    for i, D in enumerate(classes):
        for j, E in enumerate(classes):
            if i != j:
                dims[(i, j)] = cohomology(E - D)
    return ExtProfile(dims)


def is_strongly_exceptional(classes: Sequence[TDivisor]):
    """Decide strong exceptionality; returns (ok, order).

    ok is True iff every ordered pair has vanishing Ext1/Ext2 and the
    digraph with an edge i->j whenever Hom(L_i, L_j) != 0 is acyclic;
    `order` is then a topological order realizing the Hom condition
    (smallest-index-first among ready vertices, hence deterministic).
    """
    keys = [tuple(normalize(D).coeffs) for D in classes]
    if len(set(keys)) != len(keys):
        raise DuplicateClass("sequence candidates must be pairwise distinct classes")
    prof = ext_profile(classes)
    t = len(classes)
    for (i, j), d in prof.dims.items():
        if d.h1 or d.h2:
            return False, None
    succ = {i: set() for i in range(t)}
    indeg = {i: 0 for i in range(t)}
    for i in range(t):
        for j in range(t):
            if i != j and prof.hom(i, j) > 0:
                succ[i].add(j)
                indeg[j] += 1
    order: list[int] = []
    ready = sorted(i for i in range(t) if indeg[i] == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        changed = False
        for w in sorted(succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
                changed = True
        if changed:
            ready.sort()
    if len(order) != t:  # Hom digraph has a cycle: no admissible ordering
        return False, None
    return True, order


# ---------------------------------------------------------------------------
# symbolic solving against the classification


def _mul5(t: Sequence[int], k: int) -> Tuple5:
    return tuple(k * c for c in t)  # type: ignore[return-value]


def _add5(a: Sequence[int], b: Sequence[int]) -> Tuple5:
    return tuple(x + y for x, y in zip(a, b))  # type: ignore[return-value]


def _sub5(a: Sequence[int], b: Sequence[int]) -> Tuple5:
    return tuple(x - y for x, y in zip(a, b))  # type: ignore[return-value]


@dataclass(frozen=True)
class OffsetSolutions:
    """Integer parameter values where an affine family lands in the
    classified bi-acyclic set: sporadic points plus at most one half-line
    in each direction (or everything)."""

    points: tuple[int, ...] = ()
    min_k: int | None = None  # all k >= min_k are solutions
    max_k: int | None = None  # all k <= max_k are solutions
    all_k: bool = False

    def contains(self, k: int) -> bool:
        if self.all_k:
            return True
        if self.min_k is not None and k >= self.min_k:
            return True
        if self.max_k is not None and k <= self.max_k:
            return True
        return k in self.points

    def is_empty(self) -> bool:
        return not (self.all_k or self.points or self.min_k is not None or self.max_k is not None)

    def is_finite(self) -> bool:
        return not (self.all_k or self.min_k is not None or self.max_k is not None)

    def finite_points(self) -> tuple[int, ...]:
        assert self.is_finite()
        return self.points

    def in_range(self, lo: int, hi: int) -> list[int]:
        return [k for k in range(lo, hi + 1) if self.contains(k)]

    def describe(self) -> str:
        if self.all_k:
            return "all k"
        parts = []
        if self.max_k is not None:
            parts.append(f"k <= {self.max_k}")
        if self.min_k is not None:
            parts.append(f"k >= {self.min_k}")
        parts.extend(str(k) for k in self.points)
        return "{" + ", ".join(parts) + "}" if parts else "{}"


class _SolutionBuilder:
    def __init__(self):
        self.points: set[int] = set()
        self.min_k: int | None = None
        self.max_k: int | None = None
        self.all_k = False

    def add_point(self, k: int):
        self.points.add(k)

    def add_min(self, a: int):
        self.min_k = a if self.min_k is None else min(self.min_k, a)

    def add_max(self, a: int):
        self.max_k = a if self.max_k is None else max(self.max_k, a)

    def build(self) -> OffsetSolutions:
        if self.all_k or (
            self.min_k is not None and self.max_k is not None and self.min_k <= self.max_k + 1
        ):
            return OffsetSolutions(all_k=True)
        pts = {
            k
            for k in self.points
            if (self.min_k is None or k < self.min_k) and (self.max_k is None or k > self.max_k)
        }
        return OffsetSolutions(tuple(sorted(pts)), self.min_k, self.max_k)


def _solve_point(base: Tuple5, step: Tuple5, target: Tuple5) -> int | None:
    """The unique integer k with base + k*step == target, if any (step != 0)."""
    k = None
    for b, s, t in zip(base, step, target):
        if s != 0:
            if (t - b) % s != 0:
                return None
            k = (t - b) // s
            break
    assert k is not None
    return k if _add5(base, _mul5(step, k)) == target else None


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def solve_offsets(base, step) -> OffsetSolutions:
    """All integers k for which base + k*step is a classified bi-acyclic class.

    Solved exactly by case analysis on the fifth coefficient of the family:
    against the finite c5 = 0 stratum, against the affine series forms when
    |c5| = 1 (which can produce one-parameter half-line solutions), against
    the finite |c5| = 2 stratum, and empty for |c5| >= 3.  Trusts the
    classification table, i.e. completeness outside validated boxes is the
    certificate's cited assumption.
    """
    base = tuple(int(c) for c in base)
    step = tuple(int(c) for c in step)
    if len(base) != 5 or len(step) != 5:
        raise NotAffineInput("base and step must be 5-tuples")
    out = _SolutionBuilder()
    if step == ZERO5:
        if label_class(base) is not None:
            out.all_k = True
        return out.build()
    if step[4] != 0:
        # fifth coefficient moves with k: only |c5| <= 2 can ever match
        s = step[4]
        ends = []
        for bound in (-2 - base[4], 2 - base[4]):
            ends.append(bound // s)
            ends.append(_ceil_div(bound, s))
        for k in range(min(ends), max(ends) + 1):
            if abs(base[4] + k * s) <= 2 and label_class(_add5(base, _mul5(step, k))):
                out.add_point(k)
        return out.build()
    c5 = base[4]
    if abs(c5) >= 3:
        return out.build()
    if c5 == 0:
        for t in KING_TABLE.finite_c5_zero():
            k = _solve_point(base, step, t)
            if k is not None:
                out.add_point(k)
        return out.build()
    if abs(c5) == 1:
        sign = 1 if c5 == 1 else -1
        # is step an integer multiple of the series direction?
        d = None
        if step == _mul5(STEP, step[0]) and step[0] != 0:
            d = step[0]
        for ser in B_SERIES:
            target_base = _mul5(ser.base, sign)
            target_step = _mul5(STEP, sign)
            if d is not None:
                diff = _sub5(target_base, base)  # must be e * STEP
                e = diff[0]
                if diff != _mul5(STEP, e):
                    continue
                # base + k*d*STEP = sign*(beta + k'*STEP)  =>  k' = sign*(k*d - e)
                slope = sign * d
                shift = -sign * e
                # constraint: slope*k + shift >= k_min
                if slope > 0:
                    out.add_min(_ceil_div(ser.k_min - shift, slope))
                else:
                    out.add_max((shift - ser.k_min) // (-slope))
            else:
                k = _solve_two_unknowns(base, step, target_base, target_step)
                if k is not None and k[1] >= ser.k_min:
                    out.add_point(k[0])
        return out.build()
    # |c5| == 2
    sign = 1 if c5 == 2 else -1
    for t in C_LIST:
        k = _solve_point(base, step, _mul5(t, sign))
        if k is not None:
            out.add_point(k)
    return out.build()


def _solve_two_unknowns(base, step, tbase, tstep):
    """Integer (k, k') with base + k*step = tbase + k'*tstep, else None."""
    # find two coordinates where the 2x2 system is invertible
    for i in range(5):
        for j in range(i + 1, 5):
            det = step[i] * (-tstep[j]) - (-tstep[i]) * step[j]
            if det == 0:
                continue
            ri = tbase[i] - base[i]
            rj = tbase[j] - base[j]
            knum = ri * (-tstep[j]) - (-tstep[i]) * rj
            pnum = step[i] * rj - ri * step[j]
            if knum % det or pnum % det:
                return None
            k, kp = knum // det, pnum // det
            if all(base[t] + k * step[t] == tbase[t] + kp * tstep[t] for t in range(5)):
                return (k, kp)
            return None
    return None


def compatible_set(t5) -> tuple[list[BiacyclicLabel], list[tuple[SeriesDescriptor, int, OffsetSolutions]]]:
    """Exact compatible set of a concrete normalized class over the whole
    classified universe (zero and the class itself excluded).

    Returns (labels, families): sporadic members as labels, plus any
    one-parameter series families (a descriptor, its sign and the solved
    k-set) when the compatible set is infinite.
    """
    t5 = tuple(int(c) for c in t5)
    labels: list[BiacyclicLabel] = []
    families: list[tuple[SeriesDescriptor, int, OffsetSolutions]] = []
    for i, a in enumerate(A_LIST):
        for sign in (1, -1):
            if label_class(_sub5(_mul5(a, sign), t5)):
                labels.append(BiacyclicLabel("A", i + 1, sign=sign))
    for j, c in enumerate(C_LIST):
        for sign in (1, -1):
            cand = _mul5(c, sign)
            if cand != t5 and label_class(_sub5(cand, t5)):
                labels.append(BiacyclicLabel("C", j + 1, sign=sign))
    for ser in B_SERIES:
        for sign in (1, -1):
            sols = solve_offsets(_sub5(_mul5(ser.base, sign), t5), _mul5(STEP, sign))
            if sols.is_empty():
                continue
            if sols.all_k or sols.min_k is not None:
                # unbounded above even after k >= k_min: a one-parameter family
                families.append((ser, sign, sols))
                continue
            ks = {k for k in sols.points if k >= ser.k_min}
            if sols.max_k is not None:
                ks.update(range(ser.k_min, sols.max_k + 1))
            for k in sorted(ks):
                if _mul5(ser.member(k), sign) != t5:
                    labels.append(BiacyclicLabel("B", ser.index, k, sign))
    return labels, families


# ---------------------------------------------------------------------------
# clique search


def _cliques_through_zero(vertices, adj, size):
    """All size-`size` cliques containing the zero class, in lexicographic
    DFS order.  `vertices` must be sorted and contain the zero class; note
    zero is adjacent to every vertex since all of them are bi-acyclic."""
    zero = min(v for v in vertices if all(c == 0 for c in v))
    found = []

    def extend(current, candidates):
        if len(current) == size:
            found.append(tuple(sorted(current)))
            return
        need = size - len(current)
        for idx, v in enumerate(candidates):
            if len(candidates) - idx < need:
                break
            extend(current + [v], [w for w in candidates[idx + 1 :] if w in adj[v]])

    if size == 1:
        return [(zero,)]
    extend([zero], sorted(adj[zero]))
    return found


def _max_clique(vertices, adj):
    """Size of the largest clique of a small graph (exact, with pruning)."""
    best = 0
    order = sorted(vertices)

    def extend(current, candidates):
        nonlocal best
        if current > best:
            best = current
        for idx, v in enumerate(candidates):
            if current + len(candidates) - idx <= best:
                return
            extend(current + 1, [w for w in candidates[idx + 1 :] if w in adj[v]])

    extend(0, order)
    return best


@dataclass(frozen=True)
class FoundSequence:
    """A strongly exceptional sequence: classes listed in a Hom-admissible order."""

    classes: tuple[tuple[int, ...], ...]
    hom_order: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {"classes": [list(c) for c in self.classes], "hom_order": list(self.hom_order)}


def find_sequences(
    fan: Fan,
    target_len: int | None = None,
    bounds=8,
    workers: int | None = None,
) -> list[FoundSequence]:
    """Search a coefficient box for strongly exceptional sequences.

    Enumerates bi-acyclic classes in the box, builds the compatibility
    graph, finds all target-length cliques containing the zero class, and
    keeps those passing the full Hom/Ext ordering test.  The default target
    length is the ray count (the rank of the Grothendieck group).  An empty
    result is qualified by the box: it rules out sequences whose normalized
    classes all lie inside it.
    """
    if target_len is None:
        target_len = fan.n
    if target_len < 1:
        raise ValueError("target_len must be positive")
    classes = enumerate_biacyclic(fan, bounds, workers=workers)
    zero = (0,) * fan.n
    if zero not in classes:
        classes.append(zero)
        classes.sort()
    divisors = {t: fan.divisor(t) for t in classes}
    adj = {t: set() for t in classes}
    for i, a in enumerate(classes):
        for b in classes[i + 1 :]:
            if is_biacyclic(divisors[b] - divisors[a]):
                adj[a].add(b)
                adj[b].add(a)
    out = []
    for clique in _cliques_through_zero(classes, adj, target_len):
        seq = [divisors[t] for t in clique]
        ok, order = is_strongly_exceptional(seq)
        if ok:
            assert order is not None
            out.append(FoundSequence(tuple(clique[i] for i in order), tuple(order)))
    out.sort(key=lambda s: s.classes)
    return out


# ---------------------------------------------------------------------------
# the certificate


@dataclass
class Claim:
    id: int
    name: str
    statement: str
    method: str  # "symbolic" | "exhaustive" | "cited-assumption"
    params: dict = field(default_factory=dict)
    result: str = "pass"  # "pass" | "fail" | "skipped"
    witness_counts: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "statement": self.statement,
            "method": self.method,
            "params": self.params,
            "result": self.result,
            "witness_counts": self.witness_counts,
            "details": self.details,
        }


@dataclass
class Certificate:
    surface: str
    parameters: dict
    claims: list[Claim] = field(default_factory=list)
    cited_assumptions: list[str] = field(default_factory=list)
    sequences_found: list[FoundSequence] = field(default_factory=list)
    verdict: str = "pass"

    def claim(self, claim_id: int) -> Claim:
        for c in self.claims:
            if c.id == claim_id:
                return c
        raise KeyError(claim_id)

    def raise_if_failed(self):
        for c in self.claims:
            if c.result == "fail":
                raise ClaimFailed(c.id, c.details)

    def to_json_obj(self) -> dict:
        return {
            "surface": self.surface,
            "parameters": self.parameters,
            "claims": [c.to_json_obj() for c in self.claims],
            "cited_assumptions": self.cited_assumptions,
            "sequences_found": [s.to_json_obj() for s in self.sequences_found],
            "verdict": self.verdict,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)


def verify_counterexample(
    bounds: int = 12,
    c5_bound: int = 4,
    k_bound: int = 10,
    corroboration_bounds: int = 10,
    skip: Iterable[int] = (),
    workers: int | None = None,
) -> Certificate:
    """Machine-check that the 7-ray surface has no strongly exceptional
    sequence of 7 line bundles, returning the claim-by-claim certificate.

    Any failing claim aborts the remaining checks and yields verdict
    "fail" with a counter-witness in the claim details; skipped claims
    downgrade the verdict to "qualified".
    """
    skip = set(skip)
    fan = king_fan()
    cert = Certificate(
        surface="king-counterexample",
        parameters={
            "bounds": bounds,
            "c5_bound": c5_bound,
            "k_bound": k_bound,
            "corroboration_bounds": corroboration_bounds,
            "skipped_claims": sorted(skip),
        },
    )
    cert.cited_assumptions.append(
        "completeness of the classified bi-acyclic set outside the validated "
        "coefficient box (the enumeration machine-verifies it inside the box, "
        "and the box scan is what exposed the eleventh c5=2 class, so runs "
        "with enlarged boxes tighten this assumption)"
    )

    class _ClaimError(Exception):
        def __init__(self, witness):
            self.witness = witness

    def need(cond: bool, witness):
        if not cond:
            raise _ClaimError(witness)

    def run(claim: Claim, fn) -> bool:
        if claim.id in skip:
            claim.result = "skipped"
            cert.claims.append(claim)
            return True
        try:
            fn(claim)
        except _ClaimError as exc:
            claim.result = "fail"
            claim.details["counter_witness"] = exc.witness
            cert.claims.append(claim)
            return False
        cert.claims.append(claim)
        return True

    # -- claim 1: surface identity ------------------------------------------
    def claim1(c: Claim):
        chain = build_named("hirzebruch", 2)
        for edge in (4, 5, 6):
            chain = blowup(chain, edge)
        rots = [chain.rays[i:] + chain.rays[:i] for i in range(chain.n)]
        need(KING_RAYS in rots, {"blowup_chain": [list(r) for r in chain.rays]})
        need(fan.rays == KING_RAYS, "builtin fan differs from published rays")
        need(fan.n == 7, fan.n)
        c.details = {"rays": [list(r) for r in fan.rays], "sequence_length": fan.n}

    if not run(
        Claim(
            1,
            "surface-identity",
            "the surface is the triple blowup of the second Hirzebruch surface "
            "with the published 7 rays; required sequence length equals the "
            "ray count (= rank of the Grothendieck group)",
            "exhaustive",
        ),
        claim1,
    ):
        return _finish(cert)

    # -- claim 2: classification validation ----------------------------------
    def claim2(c: Claim):
        try:
            report = cross_validate(
                bounds,
                c5_bound,
                workers=workers,
                prune_crosscheck_bounds=min(bounds, 8),
            )
        except Exception as exc:
            raise _ClaimError(str(exc))
        c.params["box"] = report.to_json_obj()["bounds"]
        c.params["c5_range"] = [-c5_bound, c5_bound]
        c.params["rr_prune_crosschecked"] = report.prune_crosscheck
        c.params["completeness_outside_box"] = "cited-assumption"
        c.witness_counts = {f"c5={k}": v for k, v in sorted(report.slice_counts.items())}
        higher = {k: v for k, v in report.slice_counts.items() if abs(k) >= 3}
        need(all(v == 0 for v in higher.values()), higher)

    if not run(
        Claim(
            2,
            "classification-validation",
            "inside the validation box the brute-force bi-acyclic enumeration "
            "equals the symbolic table slice by slice, and no class with "
            "|c5| >= 3 exists; completeness beyond the box is a cited assumption",
            "exhaustive",
        ),
        claim2,
    ):
        return _finish(cert)

    # -- claim 3: reductions --------------------------------------------------
    def claim3(c: Claim):
        import random

        rng = random.Random(20_060_1)
        samples = 200
        for _ in range(samples):
            d = fan.divisor([rng.randint(-5, 5) for _ in range(7)])
            e = fan.divisor([rng.randint(-5, 5) for _ in range(7)])
            t = fan.divisor([rng.randint(-5, 5) for _ in range(7)])
            need(((e + t) - (d + t)).coeffs == (e - d).coeffs, (d.coeffs, e.coeffs, t.coeffs))
            need(
                is_biacyclic(e - d) == is_biacyclic((-e) - (-d)),
                (d.coeffs, e.coeffs),
            )
        # negation closure of the table itself
        for i, a in enumerate(A_LIST):
            need(label_class(tuple(-x for x in a)) == BiacyclicLabel("A", i + 1, sign=-1), a)
        for j, t in enumerate(C_LIST):
            need(label_class(tuple(-x for x in t)) == BiacyclicLabel("C", j + 1, sign=-1), t)
        for ser in B_SERIES:
            for k in range(ser.k_min, ser.k_min + 3):
                m = tuple(-x for x in ser.member(k))
                need(label_class(m) == BiacyclicLabel("B", ser.index, k, sign=-1), m)
        c.params["translation_samples"] = samples
        c.details = {
            "note": "differences are invariant under common translation by "
            "construction, so any clique translates to one containing zero; "
            "bi-acyclicity and compatibility are negation-symmetric, so a "
            "clique with a negative C member maps to one with a positive one"
        }

    if not run(
        Claim(
            3,
            "reductions",
            "compatibility is translation-invariant and negation-symmetric: "
            "WLOG a clique contains the zero class, and WLOG any C member "
            "occurs with positive sign",
            "symbolic",
        ),
        claim3,
    ):
        return _finish(cert)

    # -- claim 4: at most two A-type members ----------------------------------
    def claim4(c: Claim):
        universe = []
        for i, a in enumerate(A_LIST):
            universe.append((BiacyclicLabel("A", i + 1), a))
            universe.append((BiacyclicLabel("A", i + 1, sign=-1), tuple(-x for x in a)))
        adj = {str(l): set() for l, _ in universe}
        edges = 0
        for i, (la, ta) in enumerate(universe):
            for lb, tb in universe[i + 1 :]:
                if is_biacyclic(fan.divisor(pad(_sub5(tb, ta)))):
                    adj[str(la)].add(str(lb))
                    adj[str(lb)].add(str(la))
                    edges += 1
        m = _max_clique(list(adj.keys()), adj)
        need(m <= 2, {"max_pairwise_compatible_A_subset": m})
        c.witness_counts = {"universe": len(universe), "compatible_pairs": edges}
        c.details = {"max_clique": m}

    if not run(
        Claim(
            4,
            "a-pairs",
            "within the 14 signed A classes no 3-element subset is pairwise "
            "compatible (engine-checked on all pairs)",
            "exhaustive",
        ),
        claim4,
    ):
        return _finish(cert)

    # -- claim 5: series step -------------------------------------------------
    def claim5(c: Claim):
        a7 = A_LIST[6]
        need(STEP == a7, (STEP, a7))
        for ser in B_SERIES:
            # the series is affine with slope STEP: checking the closed form at
            # two points pins it for every k
            need(ser.closed_form(0) == ser.member(0), ser.index)
            need(
                _sub5(ser.closed_form(1), ser.closed_form(0)) == STEP,
                ser.index,
            )
        sols = solve_offsets(ZERO5, STEP)
        need(sols.is_finite() and sols.finite_points() == (-1, 0, 1), sols.describe())
        span = max(6, k_bound)
        for n in range(-span, span + 1):
            eng = is_biacyclic(fan.divisor(pad(_mul5(a7, n))))
            need(eng == (abs(n) <= 1), {"n": n, "engine": eng})
        c.params["engine_corroboration_span"] = span
        c.details = {"step_multiples_biacyclic_for": [-1, 0, 1]}

    if not run(
        Claim(
            5,
            "b-step",
            "consecutive members of every series differ by the common step "
            "(= A_7), and n*A_7 is bi-acyclic exactly for n in {-1,0,1}; so "
            "same-series members of a clique have consecutive parameters",
            "symbolic",
        ),
        claim5,
    ):
        return _finish(cert)

    # -- claim 6: B-type members ------------------------------------------------
    def claim6(c: Claim):
        # (a) same-sign, distinct series: admissible parameter offsets are
        # pinned by the c5 = 0 case split and never exceed 1 in absolute value
        offsets = {}
        for r in B_SERIES:
            for s in B_SERIES:
                if r.index == s.index:
                    continue
                sols = solve_offsets(_sub5(r.base, s.base), STEP)
                need(sols.is_finite(), (r.index, s.index, sols.describe()))
                need(all(abs(d) <= 1 for d in sols.finite_points()), (r.index, s.index, sols.finite_points()))
                offsets[f"{r.index},{s.index}"] = list(sols.finite_points())
        # (b) a compatible mixed-sign pair (B_r(k), -B_s(l)) has difference
        # B_r(k) + B_s(l) with fifth coefficient 2, hence equal to a C class;
        # the first coefficient pins k + l, so every such pair is explicit
        mixed = []
        for r in B_SERIES:
            for s in B_SERIES:
                for j, t in enumerate(C_LIST):
                    n = t[0]
                    if _add5(r.base, s.base) == _sub5(t, _mul5(STEP, n)):
                        for k in range(r.k_min, n - s.k_min + 1):
                            mixed.append((r.index, k, s.index, n - k, j + 1))
        for (ri, k, si, l, j) in mixed:
            diff = _add5(B_SERIES[ri - 1].member(k), B_SERIES[si - 1].member(l))
            need(diff == C_LIST[j - 1], (ri, k, si, l, j))
            need(is_biacyclic(fan.divisor(pad(diff))), (ri, k, si, l, j))
        # (c) same-sign cliques: parameter spread <= 1 by (a), so translating
        # by multiples of the step (claim 3 + claim 5) shifts any of them into
        # the window k <= max(k_min) + 1 <= 3; exhaustive search there
        kcap = 3
        plus_window = []
        for ser in B_SERIES:
            for k in range(ser.k_min, kcap + 1):
                plus_window.append((BiacyclicLabel("B", ser.index, k), ser.member(k)))
        adj = {str(l): set() for l, _ in plus_window}
        for i, (la, ta) in enumerate(plus_window):
            for lb, tb in plus_window[i + 1 :]:
                if is_biacyclic(fan.divisor(pad(_sub5(tb, ta)))):
                    adj[str(la)].add(str(lb))
                    adj[str(lb)].add(str(la))
        m_same = _max_clique(list(adj.keys()), adj)
        need(m_same <= 3, {"max_same_sign_B_subset": m_same})
        # (d) signed window, for the record: mixed-sign members do allow
        # 4-cliques, which is why claim 7 routes them through a translation
        need(max(t[0] for t in C_LIST) <= kcap, "window too small for mixed pairs")
        signed_window = []
        for ser in B_SERIES:
            for k in range(ser.k_min, kcap + 1):
                for sign in (1, -1):
                    signed_window.append(
                        (BiacyclicLabel("B", ser.index, k, sign), _mul5(ser.member(k), sign))
                    )
        sadj = {str(l): set() for l, _ in signed_window}
        for i, (la, ta) in enumerate(signed_window):
            for lb, tb in signed_window[i + 1 :]:
                if ta != tb and is_biacyclic(fan.divisor(pad(_sub5(tb, ta)))):
                    sadj[str(la)].add(str(lb))
                    sadj[str(lb)].add(str(la))
        m_signed = _max_clique(list(sadj.keys()), sadj)
        need(m_signed <= 4, {"max_signed_B_subset": m_signed})
        c.params["offset_sets"] = offsets
        c.params["window_k_max"] = kcap
        c.witness_counts = {
            "mixed_sign_pairs": len(mixed),
            "same_sign_window": len(plus_window),
            "signed_window": len(signed_window),
        }
        c.details = {
            "max_same_sign_clique": m_same,
            "max_signed_clique": m_signed,
            "mixed_pairs": [list(p) for p in mixed],
            "note": "signed 4-cliques exist, all involving mixed-sign pairs; "
            "each such pair's difference is a C class, so claim 7 translates "
            "those configurations into cliques with an explicit C member",
        }

    if not run(
        Claim(
            6,
            "b-count",
            "same-sign B members of a clique number at most three (parameter "
            "offsets between distinct series are at most 1, same-series "
            "members are consecutive, and the exhaustive window search finds "
            "max clique 3); every compatible mixed-sign B pair sums to a C "
            "class and is explicitly enumerated",
            "exhaustive",
        ),
        claim6,
    ):
        return _finish(cert)

    # -- claim 7: reduction to a C-containing clique ----------------------------
    def claim7(c: Claim):
        a_max = cert.claim(4).details.get("max_clique", 2) if 4 not in skip else 2
        b_max = cert.claim(6).details.get("max_same_sign_clique", 3) if 6 not in skip else 3
        total = 1 + a_max + b_max
        need(total < 7, {"bound_without_C": total})
        c.details = {
            "bound_without_C_or_mixed_B": total,
            "note": "a 7-clique through zero with no C member and no "
            "mixed-sign B pair has at most 1 + 2 + 3 = 6 elements; one with "
            "a mixed-sign B pair translates by the pair's negative member to "
            "a 7-clique containing zero and the pair's C-class difference; "
            "one with a C member negates, if needed, to contain a positive C "
            "(claim 3); so every hypothetical 7-clique yields one containing "
            "{0, C_j} for some j, which claim 8 eliminates",
        }

    if not run(
        Claim(
            7,
            "counting",
            "every length-7 compatibility clique reduces, via translation and "
            "negation, to one containing the zero class and a positive C "
            "class: without mixed-sign B pairs and C members it would have at "
            "most 1 + 2 + 3 = 6 elements",
            "symbolic",
        ),
        claim7,
    ):
        return _finish(cert)

    # -- claim 8: eliminate every C -------------------------------------------
    def claim8(c: Claim):
        per_c = {}
        for j, t in enumerate(C_LIST):
            labels, families = compatible_set(t)
            need(not families, (j + 1, "unbounded compatible family"))
            # engine corroboration: every candidate really is compatible, and
            # every concrete non-candidate (signed A and C classes) is not
            cand = [(str(l), l.coeffs5()) for l in labels]
            for name, c5t in cand:
                need(is_biacyclic(fan.divisor(pad(_sub5(c5t, t)))), (j + 1, name))
            in_cand = {c5t for _, c5t in cand}
            concrete = [_mul5(a, s) for a in A_LIST for s in (1, -1)]
            concrete += [_mul5(x, s) for x in C_LIST for s in (1, -1)]
            for other in concrete:
                if other != t and other not in in_cand:
                    need(
                        not is_biacyclic(fan.divisor(pad(_sub5(other, t)))),
                        (j + 1, "missed candidate", other),
                    )
            solved_b = {(l.index, l.k, l.sign) for l in labels if l.family == "B"}
            for ser in B_SERIES:
                for sign in (1, -1):
                    for k in range(ser.k_min, k_bound + 1):
                        member = _mul5(ser.member(k), sign)
                        eng = is_biacyclic(fan.divisor(pad(_sub5(member, t))))
                        need(
                            eng == ((ser.index, k, sign) in solved_b),
                            (j + 1, ser.index, k, sign),
                        )
            adj = {name: set() for name, _ in cand}
            for a in range(len(cand)):
                for b in range(a + 1, len(cand)):
                    na, ta = cand[a]
                    nb, tb = cand[b]
                    if is_biacyclic(fan.divisor(pad(_sub5(tb, ta)))):
                        adj[na].add(nb)
                        adj[nb].add(na)
            m = _max_clique(list(adj.keys()), adj)
            # {0, C_j} plus m mutually compatible companions must stay < 7
            need(2 + m < 7, {"C": j + 1, "max_extension": m})
            per_c[f"C_{j + 1}"] = {
                "candidates": sorted(name for name, _ in cand),
                "max_extension": m,
            }
        c.witness_counts = {"c_classes": len(C_LIST)}
        c.details = per_c
        c.params["series_sweep_k_bound"] = k_bound

    if not run(
        Claim(
            8,
            "c-elimination",
            "for every C class the full compatible set within the classified "
            "universe is finite and explicitly computed (series parameters "
            "are pinned by the fifth-coefficient case split); no C admits 5 "
            "pairwise-compatible companions, so no 7-clique contains {0, C}",
            "exhaustive",
        ),
        claim8,
    ):
        return _finish(cert)

    # -- claim 9: verdict -------------------------------------------------------
    def claim9(c: Claim):
        seqs = find_sequences(fan, 7, corroboration_bounds, workers=workers)
        cert.sequences_found = seqs
        need(seqs == [], [s.to_json_obj() for s in seqs])
        c.params["corroboration_box"] = corroboration_bounds
        c.details = {
            "note": "independent bounded search for full strongly exceptional "
            "sequences (clique search + Hom/Ext ordering) found none"
        }

    run(
        Claim(
            9,
            "verdict",
            "no strongly exceptional sequence of 7 line bundles exists: the "
            "reductions plus claims 4-8 exclude every length-7 compatibility "
            "clique, and the bounded direct search corroborates",
            "exhaustive",
        ),
        claim9,
    )
    return _finish(cert)


def _finish(cert: Certificate) -> Certificate:
    results = [c.result for c in cert.claims]
    if any(r == "fail" for r in results):
        cert.verdict = "fail"
    elif any(r == "skipped" for r in results) or len(cert.claims) < 9:
        cert.verdict = "qualified"
    else:
        cert.verdict = "pass"
    return cert
