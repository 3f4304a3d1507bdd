"""Command line interface: counts, cross-checks, node polynomials, wall tests.

All commands work in exact arithmetic and print deterministic output.  The
recursion memo can be persisted to a JSON cache file (``--cache`` or the
``TROPGW_CACHE`` environment variable); a missing cache is never an error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import tempfile

from . import ch, floors, paths, templates
from .curves import random_star, resolve_wall
from .gw import GWElement, gw_equal, gw_from_json, gw_to_json, render
from .lattice import delta_polygon, hirzebruch_polygon

CACHE_ENV = "TROPGW_CACHE"


def _parse_weights(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def _cache_path(args) -> str | None:
    return args.cache or os.environ.get(CACHE_ENV)


def _load_cache(path: str | None) -> None:
    if not path or not os.path.exists(path):
        return
    with open(path) as handle:
        data = json.load(handle)
    entries = {}
    for key, value in data.items():
        d, g, alpha, beta = key.split(":")
        parsed = (
            int(d),
            int(g),
            _parse_weights(alpha),
            _parse_weights(beta),
            "gw",
        )
        entries[parsed] = gw_from_json(value)
    ch.memo_load(entries)


def _save_cache(path: str | None) -> None:
    if not path:
        return
    data = {}
    for key, value in ch.memo_snapshot().items():
        d, g, alpha, beta, system = key
        if system != "gw":
            continue
        name = ":".join(
            (str(d), str(g), ",".join(map(str, alpha)), ",".join(map(str, beta)))
        )
        data[name] = gw_to_json(value)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    with os.fdopen(fd, "w") as handle:
        json.dump(data, handle, indent=1, sort_keys=True)
    os.replace(tmp, path)


def _emit_result(args, rows: list[dict]) -> None:
    fmt = args.format
    if fmt == "json":
        print(json.dumps(rows, indent=1, sort_keys=True))
    elif fmt == "csv":
        print("d,g_or_delta,method,rank,signature,display")
        for row in rows:
            print(
                f"{row['d']},{row['g_or_delta']},{row['method']},"
                f"{row['rank']},{row['signature']},{row['display']}"
            )
    else:
        for row in rows:
            print(
                f"{row['display']} (rank {row['rank']}, "
                f"signature {row['signature']})"
            )


def _result_row(args, method: str, g_or_delta, value: GWElement, d=None) -> dict:
    return {
        "d": d if d is not None else getattr(args, "d", None),
        "g_or_delta": g_or_delta,
        "method": method,
        "rank": value.rank,
        "signature": value.signature,
        "display": render(value),
        "classes": gw_to_json(value)["classes"],
    }


def cmd_count(args) -> int:
    method = args.method
    if args.d is not None and (args.k is not None or args.a is not None):
        raise SystemExit("give either --d or the --k/--a Hirzebruch data")
    if method == "ch":
        if args.d is None:
            raise SystemExit("--method ch needs --d")
        alpha = _parse_weights(args.alpha)
        beta = _parse_weights(args.beta) if args.beta else None
        value = ch.ch_count(args.d, args.g, alpha, beta)
    elif method == "latticepath":
        if args.alpha or args.beta:
            raise SystemExit("--alpha/--beta are only supported by --method ch")
        if args.d is not None:
            polygon = delta_polygon(args.d)
        else:
            k, a = args.k or 0, args.a or 1
            wl = _parse_weights(args.wl) or (1,) * (a * k + len(_parse_weights(args.wr)))
            wr = _parse_weights(args.wr)
            if any(w != 1 for w in wl + wr):
                raise SystemExit(
                    "the lattice path method only supports weight-1 ends; "
                    "use --method floor for higher weights"
                )
            polygon = hirzebruch_polygon(k, a, len(wr))
        value = paths.count_lattice_path(polygon, args.g, tie_break=args.tie_break)
    elif method == "floor":
        if args.d is not None:
            value = floors.delta_floor_count(args.d, args.g, connected=args.connected)
        else:
            if args.k is None or args.a is None:
                raise SystemExit("--method floor needs --d or both --k and --a")
            wl, wr = _parse_weights(args.wl), _parse_weights(args.wr)
            value = floors.floor_count(
                args.k, args.a, wl, wr, args.g, connected=args.connected
            )
    else:
        raise SystemExit(f"unknown method {method}")
    _emit_result(args, [_result_row(args, method, args.g, value)])
    return 0


def cmd_crosscheck(args) -> int:
    rows = []
    failures = 0
    lines = []
    for d in range(2, args.dmax + 1):
        gmax = ch.max_genus(d)
        for g in range(args.gmin, gmax + 1):
            polygon = delta_polygon(d)
            values = {
                "latticepath": paths.count_lattice_path(polygon, g),
                "ch": ch.ch_count(d, g),
                "floor": floors.delta_floor_count(d, g),
                "latticepath-flip": paths.count_lattice_path(
                    polygon, g, tie_break="yasc"
                ),
            }
            base = values["latticepath"]
            ok = all(gw_equal(base, v) for v in values.values())
            if not ok:
                failures += 1
            lines.append(
                f"d={d} g={g}: {render(base)} "
                f"[{'PASS' if ok else 'FAIL'}]"
            )
            for method, value in values.items():
                rows.append(_result_row(args, method, g, value, d=d))
    if args.format == "plain":
        print("cross-check: lattice path vs recursion vs floor diagrams (+ tie flip)")
        for line in lines:
            print(line)
        print("result:", "PASS" if failures == 0 else f"{failures} FAILURES")
    else:
        _emit_result(args, rows)
    return 0 if failures == 0 else 1


def cmd_nodepoly(args) -> int:
    if args.delta > args.max_delta:
        raise SystemExit(
            f"delta {args.delta} above the configured budget {args.max_delta}"
        )
    fit = templates.fit_node_polynomial(args.delta, n_holdout=args.holdout)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "delta": args.delta,
                    "hyperbolic": [str(c) for c in fit.hyperbolic_coeffs],
                    "unit": [str(c) for c in fit.unit_coeffs],
                    "threshold": fit.threshold,
                    "values": [
                        {"d": d, "hyperbolic": p, "unit": q}
                        for d, p, q in fit.values
                    ],
                },
                indent=1,
            )
        )
        return 0
    if args.format == "csv":
        print("d,g_or_delta,method,rank,signature,display")
        for d, p, q in fit.values:
            display = render(GWElement.from_dict({1: p + q, -1: p}))
            print(f"{d},{args.delta},templates,{2 * p + q},{q},{display}")
        return 0
    print(f"node count for {args.delta} nodes: P(d)*H + Q(d)*<1>")
    print(f"  P = {templates.poly_str(fit.hyperbolic_coeffs)}")
    print(f"  Q = {templates.poly_str(fit.unit_coeffs)}")
    print(f"  exact from degree {fit.threshold} on")
    for d, p, q in fit.values:
        print(f"  d={d}: H-coefficient {p}, <1>-coefficient {q}")
    return 0


def cmd_wallcheck(args) -> int:
    rng = random.Random(args.seed)
    checked = skipped = failures = 0
    while checked < args.trials:
        star = random_star(rng)
        if star is None:
            skipped += 1
            continue
        left, right_sum = resolve_wall(star)
        if not gw_equal(left, right_sum):
            failures += 1
            print(f"FAIL {star.edges}: {render(left)} != {render(right_sum)}")
        checked += 1
    print(
        f"wall crossings checked: {checked}, degenerate draws skipped: "
        f"{skipped}, failures: {failures}"
    )
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropgw",
        description="exact quadratic-form counts of plane tropical curves",
    )
    parser.add_argument("--cache", help="JSON memo cache for the recursion")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count curves by one method")
    count.add_argument("--method", required=True, choices=("latticepath", "ch", "floor"))
    count.add_argument("--d", type=int, help="plane curve degree")
    count.add_argument("--g", type=int, required=True, help="genus")
    count.add_argument("--k", type=int, help="Hirzebruch parameter")
    count.add_argument("--a", type=int, help="number of floors")
    count.add_argument("--wl", help="comma separated left end weights")
    count.add_argument("--wr", help="comma separated right end weights")
    count.add_argument("--alpha", help="prescribed left ends by weight (ch)")
    count.add_argument("--beta", help="free left ends by weight (ch)")
    count.add_argument("--connected", action="store_true",
                       help="restrict floor counts to connected curves")
    count.add_argument("--tie-break", default="ydesc", choices=("ydesc", "yasc"))
    count.add_argument("--format", default="plain", choices=("plain", "json", "csv"))
    count.set_defaults(func=cmd_count)

    cross = sub.add_parser("crosscheck", help="compare all three methods")
    cross.add_argument("--dmax", type=int, default=4)
    cross.add_argument("--gmin", type=int, default=0)
    cross.add_argument("--format", default="plain", choices=("plain", "json", "csv"))
    cross.set_defaults(func=cmd_crosscheck)

    poly = sub.add_parser("nodepoly", help="fit node polynomials")
    poly.add_argument("--delta", type=int, required=True)
    poly.add_argument("--max-delta", type=int, default=4)
    poly.add_argument("--holdout", type=int, default=2)
    poly.add_argument("--format", default="plain", choices=("plain", "json", "csv"))
    poly.set_defaults(func=cmd_nodepoly)

    wall = sub.add_parser("wallcheck", help="randomized wall-crossing identity")
    wall.add_argument("--trials", type=int, default=1000)
    wall.add_argument("--seed", type=int, default=0)
    wall.set_defaults(func=cmd_wallcheck)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    path = _cache_path(args)
    _load_cache(path)
    try:
        code = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _save_cache(path)
    return code


if __name__ == "__main__":
    sys.exit(main())
