"""Command line interface.

Subcommands cover the counting pipeline (count, necklaces, symmetric,
bracelets, sweep), the structural inspectors (multipliers, orbits, lattice)
and the exhaustive cross-check (oracle).  Exit codes: 0 success, 1 oracle
verification mismatch, 2 bad input, 3 unsupported parameters, 4 violated
internal invariant, 5 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import ast
import csv
import fcntl
import json
import math
import os
import sys
import time

from . import __version__
from .counting import (
    CountReport,
    bracelet_count,
    count_decimation_classes,
    necklace_count,
    symmetric_necklace_count,
)
from .errors import (
    EmptyMultiset,
    GroupMismatch,
    InternalConsistencyError,
    InvalidGroupSpec,
    InvalidVectorLiteral,
    NotAMultiplier,
    NotAUnit,
    NotCyclic,
    PeriodicInput,
    TooLarge,
    UnsupportedParameters,
)
from .groups import Group
from .multipliers import (
    fixed_translates,
    multiplier_group,
    subgroup_fixed_translates,
    translate_witness,
)
from .multisets import GroupMultiset
from .oracle import orbit_census
from .orbits import unit_orbits
from .units import UnitSubgroup, subgroup_lattice

CACHE_ENV = "DECICOUNT_CACHE"
CACHE_FIELDS = [
    "group",
    "delta",
    "necklaces",
    "symmetric",
    "bracelets",
    "decimation_classes",
    "elapsed_ms",
    "version",
]

_PARSE_ERRORS = (
    InvalidGroupSpec,
    InvalidVectorLiteral,
    GroupMismatch,
    NotAUnit,
    NotAMultiplier,
    EmptyMultiset,
    NotCyclic,
    PeriodicInput,
    ValueError,
)


def _emit_json(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _headline_row(report: CountReport, elapsed_ms: int) -> list[str]:
    return [
        str(report.group),
        str(report.density),
        str(report.necklaces),
        str(report.symmetric_necklaces),
        str(report.bracelets),
        str(report.decimation_classes),
        str(elapsed_ms),
        __version__,
    ]


def _print_count_text(report: CountReport) -> None:
    print(f"group {report.group}  density {report.density}")
    print(f"necklaces            {report.necklaces}")
    print(f"symmetric necklaces  {report.symmetric_necklaces}")
    print(f"bracelets            {report.bracelets}")
    print(f"decimation classes   {report.decimation_classes}")
    print()
    print("subgroup breakdown (largest first):")
    header = ["generators", "order", "offset_gcd", "solutions", "containing", "exact", "classes"]
    rows = [
        [
            ",".join(str(g) for g in t.generators),
            str(t.order),
            str(t.offset_gcd),
            str(t.solutions),
            str(t.necklaces_containing),
            str(t.necklaces_exact),
            str(t.decimation_classes),
        ]
        for t in report.subgroups
    ]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    print("  " + "  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for r in rows:
        print("  " + "  ".join(v.ljust(w) for v, w in zip(r, widths)))


def _render_count_figure(report: CountReport, directory: str) -> None:
    from .plotting import save_count_figure

    os.makedirs(directory, exist_ok=True)
    path = os.path.join(
        directory, f"count_{report.group}_{report.density}.png"
    )
    save_count_figure(report, path)
    print(f"figure written to {path}", file=sys.stderr)


def cmd_count(args: argparse.Namespace) -> int:
    group = Group.from_spec(args.group)
    start = time.perf_counter()
    report = count_decimation_classes(group, args.delta, threads=args.threads)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    if args.format == "json":
        _emit_json(report.to_dict())
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(CACHE_FIELDS)
        w.writerow(_headline_row(report, elapsed_ms))
    else:
        _print_count_text(report)
    if args.figures:
        _render_count_figure(report, args.figures)
    return 0


def cmd_scalar(args: argparse.Namespace) -> int:
    group = Group.from_spec(args.group)
    fn = {
        "necklaces": necklace_count,
        "symmetric": symmetric_necklace_count,
        "bracelets": bracelet_count,
    }[args.command]
    value = fn(group, args.delta)
    if args.format == "json":
        _emit_json(
            {
                "group": str(group),
                "density": args.delta,
                args.command: str(value),
            }
        )
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["group", "delta", args.command])
        w.writerow([str(group), args.delta, str(value)])
    else:
        print(value)
    return 0


def cmd_multipliers(args: argparse.Namespace) -> int:
    group = Group.from_spec(args.group)
    ms = GroupMultiset.from_literal(group, args.vector)
    subgroup = multiplier_group(ms)
    period = ms.is_periodic()
    payload: dict = {
        "group": str(group),
        "vector": ms.literal(),
        "density": ms.density,
        "modulus": subgroup.modulus,
        "order": subgroup.order,
        "generators": list(subgroup.generators),
        "elements": sorted(subgroup.elements),
        "periodic_shift": str(period) if period is not None else None,
    }
    if period is None:
        coprime = math.gcd(ms.density, group.exponent) == 1
        payload["canonical_shift"] = str(ms.canonical_shift()) if coprime else None
        witnesses = []
        for t in subgroup.generators:
            w = translate_witness(ms, t)
            assert w is not None
            fixed = fixed_translates(ms, t)
            witnesses.append(
                {
                    "t": w.t,
                    "shift": str(w.shift),
                    "offsets": list(w.offsets),
                    "translate_fixing": bool(fixed),
                    "fixed_translates": [str(z) for z in fixed],
                }
            )
        payload["witnesses"] = witnesses
        payload["fixed_by_all"] = [
            str(z) for z in subgroup_fixed_translates(ms, subgroup.generators)
        ]
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"group {payload['group']}  vector {payload['vector']}  density {payload['density']}")
        print(f"multiplier group modulo {payload['modulus']}: order {payload['order']}")
        print(f"  generators: {payload['generators']}")
        print(f"  elements:   {payload['elements']}")
        if payload["periodic_shift"] is not None:
            print(f"  periodic, shortest period {payload['periodic_shift']}; witnesses omitted")
        else:
            if payload["canonical_shift"] is not None:
                print(f"  canonical shift: {payload['canonical_shift']}")
            for w in payload["witnesses"]:
                fix = "fixes" if w["translate_fixing"] else "fixes no"
                print(
                    f"  t={w['t']}: shift {w['shift']}, offsets {w['offsets']}, "
                    f"{fix} translates {w['fixed_translates']}"
                )
            print(f"  translates fixed by the whole group: {payload['fixed_by_all']}")
    return 0


def cmd_orbits(args: argparse.Namespace) -> int:
    group = Group.from_spec(args.group)
    exp = group.exponent
    if args.generators:
        gens = [int(p) for p in args.generators.split(",")]
        subgroup = UnitSubgroup.generated(exp, gens)
    else:
        subgroup = UnitSubgroup.full(exp)
    profile = unit_orbits(group, subgroup)
    payload = {
        "group": str(group),
        "modulus": exp,
        "subgroup_order": subgroup.order,
        "generators": list(subgroup.generators),
        "orbit_count": len(profile.orbits),
        "unique_sizes": list(profile.unique_sizes),
        "duplicities": list(profile.duplicities),
        "orbits": [[str(e) for e in orbit] for orbit in profile.orbits],
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        print(
            f"{payload['orbit_count']} orbits of {payload['group']} under "
            f"<{','.join(str(g) for g in payload['generators'])}> modulo {exp}"
        )
        for q, r in zip(payload["unique_sizes"], payload["duplicities"]):
            print(f"  size {q}: {r} orbit(s)")
        for orbit in payload["orbits"]:
            print("  {" + ", ".join(orbit) + "}")
    return 0


def cmd_lattice(args: argparse.Namespace) -> int:
    group = Group.from_spec(args.group)
    lattice = subgroup_lattice(group.exponent)
    if args.format == "json":
        _emit_json(lattice.to_dict())
    else:
        print(f"subgroups of the units modulo {lattice.modulus}:")
        for i, node in enumerate(lattice.nodes):
            gens = ",".join(str(g) for g in node.generators)
            print(f"  [{i}] order {node.order}  <{gens}>  {sorted(node.elements)}")
        print("cover edges (node -> maximal proper subgroup):")
        for j, k in sorted(lattice.edges):
            print(f"  {j} -> {k}")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    group = Group.from_spec(args.group)
    census = orbit_census(group, args.delta, budget=args.budget)
    per_group = sorted(
        (
            {"elements": sorted(k), "necklaces": v}
            for k, v in census.per_multiplier_group.items()
        ),
        key=lambda d: (len(d["elements"]), d["elements"]),
    )
    payload = {
        "group": str(group),
        "density": args.delta,
        "necklaces": str(census.necklaces),
        "symmetric_necklaces": str(census.symmetric_necklaces),
        "bracelets": str(census.bracelets),
        "decimation_classes": str(census.decimation_classes),
        "per_multiplier_group": per_group,
    }
    mismatches: list[str] = []
    if args.verify:
        report = count_decimation_classes(group, args.delta)
        for name, got, want in [
            ("necklaces", report.necklaces, census.necklaces),
            ("symmetric_necklaces", report.symmetric_necklaces, census.symmetric_necklaces),
            ("bracelets", report.bracelets, census.bracelets),
            ("decimation_classes", report.decimation_classes, census.decimation_classes),
        ]:
            if got != want:
                mismatches.append(f"{name}: formula {got} != census {want}")
        by_elements = {
            _subgroup_elements(t.generators, group.exponent): t.necklaces_exact
            for t in report.subgroups
        }
        for elements, count in census.per_multiplier_group.items():
            if by_elements.get(elements, 0) != count:
                mismatches.append(
                    f"multiplier group {sorted(elements)}: formula "
                    f"{by_elements.get(elements, 0)} != census {count}"
                )
        for elements, count in by_elements.items():
            if count and elements not in census.per_multiplier_group:
                mismatches.append(
                    f"multiplier group {sorted(elements)}: formula {count} "
                    f"!= census 0"
                )
        payload["verified"] = not mismatches
        payload["mismatches"] = mismatches
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"group {payload['group']}  density {payload['density']}  (exhaustive)")
        print(f"necklaces            {payload['necklaces']}")
        print(f"symmetric necklaces  {payload['symmetric_necklaces']}")
        print(f"bracelets            {payload['bracelets']}")
        print(f"decimation classes   {payload['decimation_classes']}")
        for entry in per_group:
            print(f"  multiplier group {entry['elements']}: {entry['necklaces']} necklace(s)")
        if args.verify:
            if mismatches:
                print("verification FAILED:")
                for m in mismatches:
                    print(f"  {m}")
            else:
                print("verification passed: formulas match the census")
    if args.verify and mismatches:
        return 1
    return 0


def _subgroup_elements(generators: tuple[int, ...], modulus: int) -> frozenset[int]:
    return UnitSubgroup.generated(modulus, generators).elements


def _eval_density_rule(expr: str, length: int) -> int | None:
    """Evaluate a density expression in the variable l; None when the result
    is not an integer."""
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError:
        raise ValueError(f"cannot parse density rule {expr!r}") from None

    def ev(node: ast.AST) -> float:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return node.value
        if isinstance(node, ast.Name) and node.id == "l":
            return length
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(
            node.op, (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.FloorDiv, ast.Mod, ast.Pow)
        ):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
            if isinstance(node.op, ast.FloorDiv):
                return a // b
            return a % b if isinstance(node.op, ast.Mod) else a**b
        raise ValueError(f"unsupported construct in density rule {expr!r}")

    value = ev(tree)
    if isinstance(value, float):
        if not value.is_integer():
            return None
        value = int(value)
    return value


def _parse_lengths(spec: str) -> list[int]:
    lengths: list[int] = []
    for item in spec.split(","):
        item = item.strip()
        if "-" in item[1:]:
            lo, hi = item.split("-", 1)
            lengths.extend(range(int(lo), int(hi) + 1))
        else:
            lengths.append(int(item))
    if any(l < 2 for l in lengths):
        raise ValueError(f"lengths must be >= 2 in {spec!r}")
    return lengths


def _open_cache(path: str):
    handle = open(path, "a+", newline="")
    try:
        fcntl.flock(handle.fileno(), fcntl.LOCK_EX | fcntl.LOCK_NB)
    except OSError:
        handle.close()
        raise ValueError(f"cache file {path} is locked by another process") from None
    return handle


def _read_cache(handle) -> dict[tuple[str, int], list[str]]:
    handle.seek(0)
    rows = list(csv.reader(handle))
    cached: dict[tuple[str, int], list[str]] = {}
    if not rows:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CACHE_FIELDS)
        handle.flush()
        return cached
    if rows[0] != CACHE_FIELDS:
        raise ValueError(
            f"cache file has header {rows[0]!r}, expected {CACHE_FIELDS!r}"
        )
    for row in rows[1:]:
        if len(row) == len(CACHE_FIELDS):
            cached[(row[0], int(row[1]))] = row
    return cached


def cmd_sweep(args: argparse.Namespace) -> int:
    if (args.density is None) == (args.density_rule is None):
        print(
            "sweep needs exactly one of --density and --density-rule",
            file=sys.stderr,
        )
        return 2
    lengths = _parse_lengths(args.lengths)

    cache_path = args.cache or os.environ.get(CACHE_ENV)
    handle = None
    cached: dict[tuple[str, int], list[str]] = {}
    if cache_path:
        handle = _open_cache(cache_path)
        cached = _read_cache(handle)

    results: list[list[str]] = []
    plotted: list[tuple[int, list[str]]] = []
    try:
        appender = (
            csv.writer(handle, lineterminator="\n") if handle is not None else None
        )
        for length in lengths:
            group = Group((length,))
            if args.density is not None:
                delta = args.density
            else:
                delta = _eval_density_rule(args.density_rule, length)
                if delta is None:
                    print(
                        f"skip length {length}: rule gives no integer",
                        file=sys.stderr,
                    )
                    continue
            if delta < 0 or math.gcd(delta, group.exponent) != 1:
                print(
                    f"skip length {length}: density {delta} not coprime",
                    file=sys.stderr,
                )
                continue
            key = (str(group), delta)
            if key in cached:
                row = cached[key]
            else:
                start = time.perf_counter()
                report = count_decimation_classes(group, delta, threads=args.threads)
                elapsed_ms = int((time.perf_counter() - start) * 1000)
                row = _headline_row(report, elapsed_ms)
                if appender is not None:
                    appender.writerow(row)
                    handle.flush()
                    cached[key] = row
            results.append(row)
            plotted.append((length, row))
    finally:
        if handle is not None:
            handle.close()

    if args.format == "json":
        _emit_json(
            {
                "rows": [dict(zip(CACHE_FIELDS, row)) for row in results],
            }
        )
    elif args.format == "text":
        widths = [
            max(len(h), *(len(r[i]) for r in results)) if results else len(h)
            for i, h in enumerate(CACHE_FIELDS)
        ]
        print("  ".join(h.ljust(w) for h, w in zip(CACHE_FIELDS, widths)))
        for row in results:
            print("  ".join(v.ljust(w) for v, w in zip(row, widths)))
    else:
        w = _csv_writer()
        w.writerow(CACHE_FIELDS)
        for row in results:
            w.writerow(row)

    if args.figures and plotted:
        from .plotting import save_sweep_figure

        os.makedirs(args.figures, exist_ok=True)
        series = {
            name: [row[i] for _, row in plotted]
            for i, name in enumerate(CACHE_FIELDS)
            if name in ("necklaces", "symmetric", "bracelets", "decimation_classes")
        }
        path = os.path.join(args.figures, "sweep.png")
        save_sweep_figure([length for length, _ in plotted], series, path)
        print(f"figure written to {path}", file=sys.stderr)
    return 0


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"density must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decicount",
        description="Exact necklace, bracelet and decimation-class counts "
        "over finite abelian groups.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, default: str = "text") -> None:
        p.add_argument(
            "--format", choices=["json", "csv", "text"], default=default
        )

    def add_group(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--group", required=True, help="group spec such as Z5 or Z3xZ9"
        )

    def add_density(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--density",
            dest="delta",
            type=_nonnegative_int,
            required=True,
            help="vector weight",
        )

    p_count = sub.add_parser("count", help="full counting report")
    add_group(p_count)
    add_density(p_count)
    p_count.add_argument("--threads", type=int, default=1)
    p_count.add_argument("--figures", metavar="DIR", help="render figures here")
    add_format(p_count)
    p_count.set_defaults(func=cmd_count)

    for name, help_text in [
        ("necklaces", "translate classes only"),
        ("symmetric", "reflection-invariant necklaces only"),
        ("bracelets", "necklaces folded under negation"),
    ]:
        p = sub.add_parser(name, help=help_text)
        add_group(p)
        add_density(p)
        add_format(p)
        p.set_defaults(func=cmd_scalar)

    p_mult = sub.add_parser("multipliers", help="multiplier group of a vector")
    add_group(p_mult)
    p_mult.add_argument(
        "--vector", required=True, help="comma-separated multiplicities"
    )
    add_format(p_mult)
    p_mult.set_defaults(func=cmd_multipliers)

    p_orb = sub.add_parser("orbits", help="scaling orbits under a unit subgroup")
    add_group(p_orb)
    p_orb.add_argument(
        "--generators", help="comma-separated unit generators (default: all units)"
    )
    add_format(p_orb)
    p_orb.set_defaults(func=cmd_orbits)

    p_lat = sub.add_parser("lattice", help="subgroup lattice of the units")
    add_group(p_lat)
    add_format(p_lat)
    p_lat.set_defaults(func=cmd_lattice)

    p_orc = sub.add_parser("oracle", help="exhaustive census cross-check")
    add_group(p_orc)
    add_density(p_orc)
    p_orc.add_argument("--budget", type=int, default=5_000_000)
    p_orc.add_argument(
        "--verify",
        action="store_true",
        help="compare against the formulas; exit 1 on mismatch",
    )
    add_format(p_orc)
    p_orc.set_defaults(func=cmd_oracle)

    p_sweep = sub.add_parser("sweep", help="counts across cyclic group lengths")
    p_sweep.add_argument(
        "--lengths", required=True, help="e.g. 3-12 or 5,7,11 or 3-9,15"
    )
    p_sweep.add_argument("--density", type=int)
    p_sweep.add_argument(
        "--density-rule",
        help="expression in l, e.g. '(l-1)//2'; non-integer or non-coprime "
        "results skip that length",
    )
    p_sweep.add_argument("--threads", type=int, default=1)
    p_sweep.add_argument(
        "--cache",
        help=f"CSV cache file (or set {CACHE_ENV}); rows are reused by "
        "(group, delta) and new rows are appended",
    )
    p_sweep.add_argument("--figures", metavar="DIR", help="render figures here")
    add_format(p_sweep, default="csv")
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedParameters as exc:
        print(f"unsupported parameters: {exc}", file=sys.stderr)
        return 3
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 4
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return 5
    except _PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
