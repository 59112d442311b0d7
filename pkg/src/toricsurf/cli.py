"""Command-line interface.

Every subcommand prints either JSON (default) or plain text and is
deterministic for a fixed argument vector.  Exit codes: 0 for success or a
passing verdict, 1 for a failing/qualified verdict or a negative predicate,
2 for usage errors.  `TORICSURF_WORKERS` bounds the sweep parallelism and
`TORICSURF_BACKEND` forces the kernel choice.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from itertools import combinations

from .classify import (
    KING_TABLE,
    enumerate_biacyclic,
    king_fan,
    label_class,
    membership,
    unpad,
)
from .cohomology import (
    cohomology,
    euler_char_rr,
    higher_cohomology_vanishes,
    scan_region,
)
from .exceptional import find_sequences, verify_counterexample
from .fan import (
    Fan,
    FanError,
    UnknownName,
    blowup,
    build_named,
    fan_from_json,
    fan_to_json,
    parse_coeffs,
)


def _load_fan(spec: str) -> Fan:
    """A builtin name ("king", "p2", "p1p1", "hirzebruch:a") or a JSON file path."""
    name = spec.strip().lower()
    if name.startswith("hirzebruch"):
        for sep in (":", "(", "="):
            if sep in name:
                a = name.split(sep, 1)[1].rstrip(")")
                return build_named("hirzebruch", int(a))
        return build_named("hirzebruch", 0)
    try:
        return build_named(name)
    except UnknownName:
        pass
    with open(spec, "r", encoding="utf-8") as fh:
        return fan_from_json(fh.read())


def _emit(args, obj, text_lines=None):
    if args.format == "text" and text_lines is not None:
        for line in text_lines:
            print(line)
    else:
        print(json.dumps(obj, indent=None, separators=(",", ":"), sort_keys=False))


def _divisor(args, fan):
    return parse_coeffs(fan, args.divisor)


def cmd_fan(args) -> int:
    if args.fan_cmd == "validate":
        with open(args.file, "r", encoding="utf-8") as fh:
            try:
                fan = fan_from_json(fh.read())
            except FanError as exc:
                _emit(args, {"valid": False, "error": str(exc)}, [f"invalid: {exc}"])
                return 1
        _emit(args, {"valid": True, "rays": [list(r) for r in fan.rays]}, ["valid"])
        return 0
    # fan builtin
    fan = _load_fan(args.name)
    for edge in args.blowup or ():
        fan = blowup(fan, edge)
    _emit(args, json.loads(fan_to_json(fan)), [fan_to_json(fan)])
    return 0


def cmd_cohom(args) -> int:
    fan = _load_fan(args.fan)
    D = _divisor(args, fan)
    if args.witnesses:
        dims, wits = cohomology(D, want_witnesses=True)
        obj = {"h": list(dims), "witnesses": [w.to_json_obj() for w in wits]}
        text = [f"h = {tuple(dims)}"] + [
            f"  m={w.point} sig={w.signature} h={tuple(w.contributes)}" for w in wits
        ]
    else:
        dims = cohomology(D)
        obj = {"h": list(dims)}
        text = [f"h = {tuple(dims)}"]
    _emit(args, obj, text)
    return 0


def cmd_chi(args) -> int:
    fan = _load_fan(args.fan)
    chi = euler_char_rr(_divisor(args, fan))
    _emit(args, {"chi": chi}, [f"chi = {chi}"])
    return 0


def cmd_acyclic(args) -> int:
    fan = _load_fan(args.fan)
    D = _divisor(args, fan)
    one_sided = higher_cohomology_vanishes(D)
    both = one_sided and higher_cohomology_vanishes(-D)
    obj = {"higher_vanishes": one_sided, "biacyclic": both}
    if fan.rays == king_fan().rays:
        lbl = membership(D)
        obj["label"] = str(lbl) if lbl else None
    _emit(args, obj, [f"higher_vanishes = {one_sided}", f"biacyclic = {both}"])
    return 0 if both else 1


def cmd_classify(args) -> int:
    fan = _load_fan(args.fan)
    if args.symbolic:
        if fan.rays != king_fan().rays:
            print("symbolic table is only available for the king surface", file=sys.stderr)
            return 2
        _emit(args, KING_TABLE.to_json_obj())
        return 0
    found = enumerate_biacyclic(fan, args.box, c5=args.c5)
    rows = []
    for t in found:
        lbl = label_class(unpad(t)) if fan.rays == king_fan().rays else None
        rows.append({"label": str(lbl) if lbl else None, "coeffs": list(t)})
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["label", "coeffs"])
        for r in rows:
            writer.writerow([r["label"] or "", " ".join(map(str, r["coeffs"]))])
        sys.stdout.write(buf.getvalue())
        return 0
    _emit(args, rows, [f"{r['label'] or '?':>10}  {tuple(r['coeffs'])}" for r in rows])
    return 0


def cmd_search(args) -> int:
    fan = _load_fan(args.fan)
    seqs = find_sequences(fan, args.length, args.box)
    obj = [s.to_json_obj() for s in seqs]
    text = [f"{len(seqs)} sequence(s)"] + [f"  {list(s.classes)}" for s in seqs]
    _emit(args, obj, text)
    return 0


def cmd_verify_king(args) -> int:
    cert = verify_counterexample(
        bounds=args.box,
        c5_bound=args.c5_bound,
        k_bound=args.kmax,
        corroboration_bounds=args.corroboration_box,
        skip=args.skip_claim or (),
    )
    if args.format == "text":
        for c in cert.claims:
            print(f"claim {c.id} [{c.name}]: {c.result}")
        print(f"verdict: {cert.verdict}")
    else:
        print(cert.to_json(indent=None))
    return 0 if cert.verdict == "pass" else 1


def cmd_arrangement(args) -> int:
    fan = _load_fan(args.fan)
    D = _divisor(args, fan)
    region = scan_region(D)
    if args.emit == "lines":
        rows = []
        for (x, y), c in zip(fan.rays, D.coeffs):
            # the line x*u + y*v + c = 0, clipped to the scan box for plotting
            seg = _clip_line(x, y, c, region)
            rows.append(
                {
                    "ray": [x, y],
                    "offset": -c,
                    "segment": [[str(p), str(q)] for p, q in seg] if seg else None,
                }
            )
        _emit(args, rows)
        return 0
    rows = []
    n = fan.n
    for i, j in combinations(range(n), 2):
        (xi, yi), (xj, yj) = fan.rays[i], fan.rays[j]
        d = xi * yj - yi * xj
        if d == 0:
            continue
        ci, cj = D.coeffs[i], D.coeffs[j]
        u = Fraction(cj * yi - ci * yj, d)
        v = Fraction(ci * xj - cj * xi, d)
        rows.append({"lines": [i, j], "point": [str(u), str(v)]})
    _emit(args, rows)
    return 0


def _clip_line(x, y, c, region):
    """Two endpoints of the line x*u + y*v + c = 0 on the region boundary."""
    pts = []
    if y != 0:
        for u in (region.u_min, region.u_max):
            v = Fraction(-c - x * u, y)
            if region.v_min <= v <= region.v_max:
                pts.append((Fraction(u), v))
    if x != 0:
        for v in (region.v_min, region.v_max):
            u = Fraction(-c - y * v, x)
            if region.u_min <= u <= region.u_max:
                pts.append((u, Fraction(v)))
    pts = sorted(set(pts))
    return [pts[0], pts[-1]] if len(pts) >= 2 else None


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text", "csv"), default="json")
    p = argparse.ArgumentParser(
        prog="toricsurf",
        description="Exact line-bundle cohomology and exceptional-sequence "
        "search on smooth complete toric surfaces.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    fan_p = sub.add_parser("fan", help="validate or build fans")
    fan_sub = fan_p.add_subparsers(dest="fan_cmd", required=True)
    v = fan_sub.add_parser("validate", parents=[fmt], help="validate a fan JSON file")
    v.add_argument("--file", required=True)
    b = fan_sub.add_parser(
        "builtin", parents=[fmt], help="emit a builtin fan, optionally blown up"
    )
    b.add_argument("--name", required=True)
    b.add_argument("--blowup", type=int, action="append", metavar="EDGE")
    fan_p.set_defaults(func=cmd_fan)

    c = sub.add_parser("cohom", parents=[fmt], help="cohomology dimensions of a divisor")
    c.add_argument("--fan", required=True)
    c.add_argument("--divisor", required=True)
    c.add_argument("--witnesses", action="store_true")
    c.set_defaults(func=cmd_cohom)

    ch = sub.add_parser("chi", parents=[fmt], help="Euler characteristic by Riemann-Roch")
    ch.add_argument("--fan", required=True)
    ch.add_argument("--divisor", required=True)
    ch.set_defaults(func=cmd_chi)

    a = sub.add_parser("acyclic", parents=[fmt], help="higher-cohomology vanishing / bi-acyclicity")
    a.add_argument("--fan", required=True)
    a.add_argument("--divisor", required=True)
    a.set_defaults(func=cmd_acyclic)

    cl = sub.add_parser("classify", parents=[fmt], help="enumerate bi-acyclic classes in a box")
    cl.add_argument("--fan", required=True)
    cl.add_argument("--box", type=int, default=12)
    cl.add_argument("--c5", type=int, default=None)
    cl.add_argument("--symbolic", action="store_true", help="emit the symbolic table")
    cl.set_defaults(func=cmd_classify)

    s = sub.add_parser("search", parents=[fmt], help="search for strongly exceptional sequences")
    s.add_argument("--fan", required=True)
    s.add_argument("--length", type=int, default=None)
    s.add_argument("--box", type=int, default=8)
    s.set_defaults(func=cmd_search)

    vk = sub.add_parser("verify-king", parents=[fmt], help="produce the nonexistence certificate")
    vk.add_argument("--box", type=int, default=12)
    vk.add_argument("--c5-bound", type=int, default=4)
    vk.add_argument("--kmax", type=int, default=10)
    vk.add_argument("--corroboration-box", type=int, default=10)
    vk.add_argument("--skip-claim", type=int, action="append", metavar="ID")
    vk.set_defaults(func=cmd_verify_king)

    ar = sub.add_parser("arrangement", parents=[fmt], help="plot data for the line arrangement")
    ar.add_argument("--fan", required=True)
    ar.add_argument("--divisor", required=True)
    ar.add_argument("--emit", choices=("lines", "vertices"), required=True)
    ar.set_defaults(func=cmd_arrangement)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FanError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
