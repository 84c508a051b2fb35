"""Command-line surface for the rowmotion engine.

Subcommands: orbits, verify, oy, star, rowmotion, antichains, isomorphic.
Exit codes: 0 success, 1 failed verification / no isomorphism, 2 argument
errors, 3 file-format errors.  Output is deterministic byte-for-byte.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import checks, typea
from .poset import (
    Antichain,
    FileFormatError,
    NotAnAntichain,
    Poset,
    PosetError,
    isomorphism,
    load_poset_file,
)
from .roots import (
    FULL,
    RootPoset,
    RootSystemError,
    build,
    parse_variant,
)

_TYPE_TOKEN = re.compile(r"^([A-Ga-g])(\d+)$")


class _UsageError(Exception):
    pass


def _resolve_system(token: str):
    match = _TYPE_TOKEN.match(token.strip())
    if not match:
        raise _UsageError(
            f"expected a Cartan type like A3 or F4, got {token!r}"
        )
    return build(match.group(1), int(match.group(2)))


def _resolve_poset(args) -> Poset:
    if getattr(args, "custom", None):
        if getattr(args, "variant", "full") not in (None, "full"):
            raise _UsageError("--variant applies to root systems, not custom posets")
        return load_poset_file(args.custom)
    if not getattr(args, "system", None):
        raise _UsageError("give a Cartan type (e.g. F4) or --custom FILE")
    rs = _resolve_system(args.system)
    variant = parse_variant(getattr(args, "variant", None) or "full")
    return rs.root_poset(variant)


def _default_convention(poset: Poset) -> str:
    if isinstance(poset, RootPoset) and poset.system.cartan_type == "A":
        return "interval-a"
    return "bourbaki"


def _format_member(poset: Poset, x: int, convention: str | None) -> str:
    if isinstance(poset, RootPoset):
        token = convention or _default_convention(poset)
        if token == "interval-a":
            lo, hi = poset.system._interval(poset.vectors[x])
            return f"{lo}-{hi}"
        return poset.format_element(x, token)
    return poset.labels[x]

def _member_tokens(poset: Poset, antichain: Antichain, convention: str | None) -> list[str]:
    members = list(antichain)
    token = convention or _default_convention(poset)
    if isinstance(poset, RootPoset) and token == "interval-a":
        members.sort(key=lambda x: poset.system._interval(poset.vectors[x]))
    return [_format_member(poset, x, convention) for x in members]


def _format_antichain(poset: Poset, antichain: Antichain, convention: str | None) -> str:
    return ",".join(_member_tokens(poset, antichain, convention))


def _parse_spec(poset: RootPoset, spec: str, convention: str | None) -> Antichain:
    token = convention or _default_convention(poset)
    if token == "interval-a":
        members = []
        for part in spec.split(","):
            part = part.strip()
            if not part:
                continue
            vector = poset.system.parse_root(part, "interval-a")
            members.append(poset.element_for_vector(vector))
        return poset.antichain(members)
    return poset.parse_antichain(spec, token)


def _emit_rows(rows: list[dict], fmt: str, text_of) -> None:
    for row in rows:
        if fmt == "json":
            print(json.dumps(row, sort_keys=True, default=str))
        elif fmt == "tsv":
            print("\t".join(str(v) for v in row.values()))
        else:
            print(text_of(row))


def cmd_orbits(args) -> int:
    poset = _resolve_poset(args)
    convention = args.convention
    rows = []
    for orbit in poset.orbits():
        rows.append(
            {
                "size": orbit.size,
                "mean": str(orbit.mean_size),
                "representative": _member_tokens(
                    poset, orbit.representative, convention
                ),
            }
        )
    expected = None
    if isinstance(poset, RootPoset):
        try:
            expected = poset.system.expected_antichain_count(poset.variant)
        except RootSystemError:
            expected = None
    summary = {
        "antichains": len(poset.antichains()),
        "order": poset.rowmotion_order(),
    }
    if expected is not None:
        summary["expected"] = expected

    def text_of(row: dict) -> str:
        rep = "{%s}" % ",".join(row["representative"])
        return f"{row['size']:>6}  {row['mean']:>8}  {rep}"

    _emit_rows(rows, args.format, text_of)
    if args.format == "json":
        print(json.dumps(summary, sort_keys=True))
    else:
        line = f"#AN={summary['antichains']} ord={summary['order']}"
        if expected is not None:
            line += f" expected={expected}"
        print(line)
    return 0


def cmd_verify(args) -> int:
    ids = None if args.all or not args.claim else list(args.claim)
    try:
        reports = checks.run_claims(
            ids, types=args.type or None, rank=args.rank, e78=args.e78
        )
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    for report in reports:
        if args.format == "json":
            print(report.to_json())
        else:
            print(f"{report.claim_id} {report.scope}: {report.status}")
            if report.status == checks.FAIL:
                print(f"  evidence: {json.dumps(report.evidence, sort_keys=True, default=str)}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_oy(args) -> int:
    poset = typea.ambient(args.rank)
    antichain = _parse_spec(poset, args.spec, "interval-a")
    ideal = typea.oy_ideal_form(antichain)
    difference = typea.oy_difference_form(antichain)
    if args.form == "ideal":
        print(ideal)
    elif args.form == "difference":
        print(difference)
    else:
        if ideal != difference:
            print(
                f"engine bug: ideal form {ideal} != difference form {difference}",
                file=sys.stderr,
            )
            return 1
        print(ideal)
    return 0


def cmd_star(args) -> int:
    poset = typea.ambient(args.rank)
    antichain = _parse_spec(poset, args.spec, "interval-a")
    print(_format_antichain(poset, typea.star(antichain), "interval-a"))
    return 0


def cmd_rowmotion(args) -> int:
    token = args.system
    if token.isdigit():
        token = f"A{token}"
    rs = _resolve_system(token)
    poset = rs.root_poset(FULL)
    if args.empty:
        if args.spec:
            raise _UsageError("give either an antichain spec or --empty, not both")
        antichain = poset.antichain()
    else:
        if args.spec is None:
            raise _UsageError("an antichain spec (or --empty) is required")
        antichain = _parse_spec(poset, args.spec, args.convention)
    result = poset.rowmotion_power(antichain, args.power)
    print(_format_antichain(poset, result, args.convention))
    return 0


def cmd_antichains(args) -> int:
    poset = _resolve_poset(args)
    if args.list:
        rows = [
            {"members": _member_tokens(poset, a, args.convention)}
            for a in poset.antichains()
        ]
        _emit_rows(
            rows,
            args.format,
            lambda row: ",".join(row["members"]),
        )
    expected = None
    if isinstance(poset, RootPoset):
        try:
            expected = poset.system.expected_antichain_count(poset.variant)
        except RootSystemError:
            expected = None
    summary = {"antichains": len(poset.antichains())}
    if expected is not None:
        summary["expected"] = expected
    if args.format == "json":
        print(json.dumps(summary, sort_keys=True))
    else:
        line = f"#AN={summary['antichains']}"
        if expected is not None:
            line += f" expected={expected}"
        print(line)
    return 0


def _poset_from_token(token: str) -> Poset:
    if token.startswith("@"):
        return load_poset_file(token[1:])
    if ":" in token:
        head, variant = token.split(":", 1)
        return _resolve_system(head).root_poset(parse_variant(variant))
    return _resolve_system(token).root_poset(FULL)


def cmd_isomorphic(args) -> int:
    p = _poset_from_token(args.first)
    q = _poset_from_token(args.second)
    mapping = isomorphism(p, q)
    if args.format == "json":
        payload = {
            "isomorphic": mapping is not None,
            "mapping": None
            if mapping is None
            else {p.labels[a]: q.labels[b] for a, b in sorted(mapping.items())},
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        if mapping is None:
            print("not isomorphic")
        else:
            print("isomorphic")
            for a, b in sorted(mapping.items()):
                print(f"  {p.labels[a]} -> {q.labels[b]}")
    return 0 if mapping is not None else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rowmotion",
        description="rowmotion orbits on root posets, invariants, and claim verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, conventions=True):
        p.add_argument(
            "--format", choices=("text", "json", "tsv"), default="text"
        )
        if conventions:
            p.add_argument(
                "--convention",
                choices=("bourbaki", "paper-f4", "interval-a"),
                default=None,
            )

    p = sub.add_parser("orbits", help="orbit table of a poset")
    p.add_argument("system", nargs="?", help="Cartan type and rank, e.g. F4")
    p.add_argument("--custom", help="poset file (lower < upper per line)")
    p.add_argument("--variant", default="full")
    add_format(p)
    p.set_defaults(handler=cmd_orbits)

    p = sub.add_parser("verify", help="run catalogued claim checks")
    p.add_argument("--claim", action="append", help="claim id (repeatable)")
    p.add_argument("--all", action="store_true", help="run every claim")
    p.add_argument("--type", action="append", help="restrict to a Cartan type")
    p.add_argument("--rank", type=int, help="restrict rank-parametrised claims")
    p.add_argument("--e78", action="store_true", help="include E7/E8 scopes")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("oy", help="oy number of a type-A antichain")
    p.add_argument("rank", type=int)
    p.add_argument("spec", help='comma-separated intervals, e.g. "1-1,3-3"')
    p.add_argument(
        "--form", choices=("ideal", "difference", "both"), default="both"
    )
    p.set_defaults(handler=cmd_oy)

    p = sub.add_parser("star", help="dual of a type-A antichain")
    p.add_argument("rank", type=int)
    p.add_argument("spec")
    p.set_defaults(handler=cmd_star)

    p = sub.add_parser("rowmotion", help="apply rowmotion (or its inverse)")
    p.add_argument("system", help="Cartan type and rank (a bare rank means type A)")
    p.add_argument("spec", nargs="?")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--empty", action="store_true", help="start from the empty antichain")
    p.add_argument(
        "--convention",
        choices=("bourbaki", "paper-f4", "interval-a"),
        default=None,
    )
    p.set_defaults(handler=cmd_rowmotion)

    p = sub.add_parser("antichains", help="count (or list) antichains")
    p.add_argument("system", nargs="?")
    p.add_argument("--custom")
    p.add_argument("--variant", default="full")
    p.add_argument("--list", action="store_true")
    add_format(p)
    p.set_defaults(handler=cmd_antichains)

    p = sub.add_parser("isomorphic", help="search for a poset isomorphism")
    p.add_argument("first", help="TYPE[:variant] or @file")
    p.add_argument("second", help="TYPE[:variant] or @file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_isomorphic)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotAnAntichain as exc:
        print(f"error: not an antichain: {exc}", file=sys.stderr)
        return 2
    except (_UsageError, PosetError, RootSystemError, typea.NotTypeA, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
