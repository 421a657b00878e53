"""``pla`` command-line front end."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .errors import ProfileLinkError
from .ingest import load_aliases, read_dump, read_snapshot, write_snapshot
from .linkanalysis import FEATURE_NAMES, InterestSource, feature_vector
from .matcher import (
    REPORT_COLUMNS, MutualWeightConfig, matching_matrix, rank_candidates, score_friends,
    total_similarity,
)
from .model import build_snapshot
from .validation import check_id
from .weights import Category, binary_scheme, hierarchy_scheme, load_weights, scheme_by_name

SNAPSHOT_ENV = "PLA_SNAPSHOT"
CATEGORY_NAMES = {c.value: c for c in Category} | {"education": Category.EDUCATION_PROFESSIONAL}


class CliError(Exception):
    pass


def render(columns, rows, fmt) -> str:
    """Rows of dicts as CSV (header always written) or one JSON object per line."""
    if fmt == "json":
        return "".join(json.dumps(r, ensure_ascii=False, separators=(",", ":")) + "\n" for r in rows)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def emit(text: str, output) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _snapshot(args):
    path = args.snapshot or os.environ.get(SNAPSHOT_ENV)
    if not path:
        raise CliError(f"no snapshot given; pass --snapshot or set {SNAPSHOT_ENV}")
    return read_snapshot(path)


def _scheme(args, name=None):
    scheme = scheme_by_name(name or args.scheme)
    if args.weights:
        scheme = load_weights(args.weights, scheme)
    return scheme


def _mutual(args):
    return MutualWeightConfig(args.mutual, args.waf)


def _base(g, args):
    base = check_id(args.base)
    if base not in g:
        raise CliError(f"unknown profile {base}")
    return base


def cmd_ingest(args) -> int:
    target = args.snapshot or os.environ.get(SNAPSHOT_ENV)
    if not target:
        raise CliError(f"no snapshot path given; pass --snapshot or set {SNAPSHOT_ENV}")
    aliases = load_aliases(args.aliases) if args.aliases else None
    profiles, failed = [], False
    for path in args.dumps:
        try:
            profiles.append(read_dump(path, aliases))
        except (OSError, UnicodeDecodeError, ProfileLinkError) as e:
            print(f"pla: {path}: {e}", file=sys.stderr)
            failed = True
    if failed:
        return 1
    g = build_snapshot(profiles)
    write_snapshot(g, target)
    n_comm = len({c for p in g.profiles.values() for c in p.communities})
    print(f"profiles={len(g)} edges={g.n_edges} communities={n_comm}")
    return 0


def cmd_score(args) -> int:
    g = _snapshot(args)
    base = _base(g, args)
    scheme, cfg = _scheme(args), _mutual(args)
    if args.candidate:
        reports = [total_similarity(g, base, check_id(c), scheme, cfg) for c in args.candidate]
    else:
        reports = score_friends(g, base, scheme, cfg)
    emit(render(REPORT_COLUMNS, [r.as_row() for r in reports], args.format), args.output)
    return 0


def cmd_rank(args) -> int:
    g = _snapshot(args)
    reports = rank_candidates(g, _base(g, args), _scheme(args), _mutual(args))
    emit(render(REPORT_COLUMNS, [r.as_row() for r in reports], args.format), args.output)
    return 0


def cmd_matrix(args) -> int:
    g = _snapshot(args)
    m = matching_matrix(g, _base(g, args), CATEGORY_NAMES[args.category], _scheme(args))
    columns = ["candidate", *(f.value for f in m.fields), "total"]
    rows = [
        {"candidate": r.candidate, **{f.value: r.indicators[f] for f in m.fields},
         "total": r.weighted_total}
        for r in m.rows
    ]
    emit(render(columns, rows, args.format), args.output)
    return 0


def _feature_cell(value, fmt):
    if value is None:
        return "inf"
    if isinstance(value, int):
        return value
    return float(value) if fmt == "json" else repr(float(value))


def cmd_features(args) -> int:
    g = _snapshot(args)
    source = InterestSource(args.interests)
    rows = []
    for u, v in args.pair:
        fv = feature_vector(g, check_id(u), check_id(v), source)
        row = {"u": u, "v": v}
        row.update((name, _feature_cell(getattr(fv, name), args.format)) for name in FEATURE_NAMES)
        rows.append(row)
    emit(render(["u", "v", *FEATURE_NAMES], rows, args.format), args.output)
    return 0


def cmd_chart(args) -> int:
    g = _snapshot(args)
    if not len(g):
        raise CliError("snapshot is empty")
    base, cfg = _base(g, args), _mutual(args)
    series = {
        "binary": score_friends(g, base, binary_scheme(), cfg),
        "hierarchy": score_friends(g, base, hierarchy_scheme(), cfg),
    }
    columns = ["candidate"] + [f"{s}_{c}" for s in series for c in REPORT_COLUMNS[1:]]
    rows = []
    for reports in zip(*series.values()):
        row = {"candidate": reports[0].candidate}
        for s, r in zip(series, reports):
            row.update((f"{s}_{k}", v) for k, v in r.as_row().items() if k != "candidate")
        rows.append(row)
    emit(render(columns, rows, args.format), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pla", description="Profile closeness and link analysis over social-network dumps.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--snapshot", help=f"snapshot file (default: ${SNAPSHOT_ENV})")

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=["csv", "json"], default="csv")
    out.add_argument("--output", "-o", help="write here instead of stdout")

    scoring = argparse.ArgumentParser(add_help=False)
    scoring.add_argument("--base", required=True, help="id of the profile under investigation")
    scoring.add_argument("--mutual", choices=["raw", "waf"], default="raw")
    scoring.add_argument("--waf", type=int, default=10, help="weight adjustment factor for --mutual waf")

    weighting = argparse.ArgumentParser(add_help=False)
    weighting.add_argument("--scheme", choices=["binary", "hierarchy"], default="binary")
    weighting.add_argument("--weights", help="file of field_key=integer overrides")

    p = sub.add_parser("ingest", parents=[common], help="parse dump files into a snapshot")
    p.add_argument("dumps", nargs="*")
    p.add_argument("--aliases", help="alias table: field<TAB>variant<TAB>canonical")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("score", parents=[common, out, scoring, weighting],
                       help="closeness reports in friend-list order")
    p.add_argument("--candidate", action="append", help="score only this id (repeatable)")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("rank", parents=[common, out, scoring, weighting],
                       help="friends ranked by total closeness")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("matrix", parents=[common, out, scoring, weighting],
                       help="one category matching matrix")
    p.add_argument("--category", choices=sorted(CATEGORY_NAMES), required=True)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("features", parents=[common, out], help="link features for ordered pairs")
    p.add_argument("--pair", nargs=2, action="append", required=True, metavar=("U", "V"))
    p.add_argument("--interests", choices=[s.value for s in InterestSource], default="communities")
    p.set_defaults(func=cmd_features)

    p = sub.add_parser("chart", parents=[common, out, scoring],
                       help="per-candidate components under both schemes")
    p.set_defaults(func=cmd_chart)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "waf", 1) < 1:
        print("pla: error: --waf must be a positive integer", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (CliError, ProfileLinkError, OSError, UnicodeDecodeError) as e:
        print(f"pla: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
