"""Command-line entry point.

Subcommands: build (CSVs -> bundle), stats (bundle report), serve (HTTP
API), export (flat profiles as CSV/JSON). The bundle file is the contract
between the stages, so each is independently usable and testable.

Exit codes: 0 success, 1 input/validation error, 2 analysis infeasible
(era baseline cannot be formed). Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import sys
from datetime import date
from pathlib import Path

from . import bundle as bundle_io
from .ingest import IngestError, build_song_records, parse_charts, parse_features
from .metrics import ZeroEraDispersion
from .profiles import EPOCH_TIMESTAMP, AnalysisError, assemble_bundle

EXPORT_COLUMNS = [
    "artist",
    "decade",
    "appearances",
    "distinct_songs",
    "performance_score",
    "shape",
    "contrast",
    "quadrant",
]


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _parse_date(text: str) -> date:
    return date.fromisoformat(text)


def cmd_build(args: argparse.Namespace) -> int:
    try:
        charts_text = Path(args.charts).read_bytes()
    except OSError as exc:
        return _fail(f"cannot read charts file {args.charts}: {exc}", 1)
    try:
        features_text = Path(args.features).read_bytes()
    except OSError as exc:
        return _fail(f"cannot read features file {args.features}: {exc}", 1)

    window = (args.window_start, args.window_end)
    try:
        entries = parse_charts(charts_text, window=window)
    except IngestError as exc:
        return _fail(f"{args.charts}: {exc}", 1)
    try:
        features = parse_features(features_text)
    except IngestError as exc:
        return _fail(f"{args.features}: {exc}", 1)

    records, warnings = build_song_records(entries, features)
    try:
        result = assemble_bundle(
            records,
            args.top,
            window=window,
            min_songs=args.min_songs,
            ingest_warnings=warnings,
            created_at=EPOCH_TIMESTAMP if args.deterministic else None,
        )
    except (AnalysisError, ZeroEraDispersion) as exc:
        return _fail(str(exc), 2)

    try:
        bundle_io.dump_file(result, args.out)
    except OSError as exc:
        return _fail(f"cannot write bundle to {args.out}: {exc}", 1)

    print(f"warnings: {len(result.warnings)}")
    print(_summary_line(result))
    return 0


def _summary_line(b) -> str:
    median = "n/a" if b.median_shape is None else f"{b.median_shape:.6g}"
    if b.correlation is None:
        corr = "correlation=skipped"
    else:
        corr = (
            f"r={b.correlation.r:.6g} p={b.correlation.p_two_sided:.6g} "
            f"n={b.correlation.n}"
        )
    return (
        f"artists={len(b.artists)} profiles={len(b.profiles)} "
        f"median_shape={median} {corr}"
    )


def _load_bundle(path: str):
    try:
        return bundle_io.load_file(path)
    except OSError as exc:
        raise RuntimeError(f"cannot read bundle {path}: {exc}") from exc
    except bundle_io.BundleFormatError as exc:
        raise RuntimeError(f"{path}: {exc}") from exc


def cmd_stats(args: argparse.Namespace) -> int:
    try:
        b = _load_bundle(args.bundle)
    except RuntimeError as exc:
        return _fail(str(exc), 1)

    width = max([len("artist")] + [len(p.artist) for p in b.profiles])
    print(f"{'artist':<{width}}  decade  {'shape':>10}  {'contrast':>10}  quadrant")
    for p in b.profiles:
        if p.alignment is not None and p.alignment.quadrant is not None:
            shape = f"{p.alignment.shape_similarity:>10.6f}"
            contrast = f"{p.alignment.contrast_ratio:>10.6f}"
            quadrant = p.alignment.quadrant.value
        else:
            shape = f"{'-':>10}"
            contrast = f"{'-':>10}"
            quadrant = f"unclassified ({p.degenerate_reason})"
        print(f"{p.artist:<{width}}  {p.decade}  {shape}  {contrast}  {quadrant}")

    median = "n/a" if b.median_shape is None else f"{b.median_shape:.6f}"
    print(f"median shape boundary: {median}")
    if b.correlation is None:
        print("correlation: skipped")
    else:
        print(
            f"r={b.correlation.r:.6f}, p={b.correlation.p_two_sided:.6f}, "
            f"n={b.correlation.n}"
        )
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    if not 1 <= args.port <= 65535:
        return _fail(f"port {args.port} outside [1, 65535]", 1)
    try:
        b = _load_bundle(args.bundle)
    except RuntimeError as exc:
        return _fail(str(exc), 1)
    if args.static_dir is not None and not Path(args.static_dir).is_dir():
        return _fail(f"static dir {args.static_dir} is not a directory", 1)

    import uvicorn

    from .service import create_app

    app = create_app(b, static_dir=args.static_dir)
    print(f"serving {args.bundle} on http://{args.host}:{args.port}", file=sys.stderr)
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except SystemExit as exc:
        return int(exc.code or 0)
    except OSError as exc:
        return _fail(f"cannot bind {args.host}:{args.port}: {exc}", 1)
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    if args.format not in ("json", "csv"):
        return _fail(f"unknown export format {args.format!r} (expected json or csv)", 1)
    try:
        b = _load_bundle(args.bundle)
    except RuntimeError as exc:
        return _fail(str(exc), 1)

    if args.format == "json":
        import json

        text = (
            json.dumps(
                bundle_io.to_document(b)["profiles"],
                sort_keys=True,
                separators=(",", ":"),
                ensure_ascii=False,
            )
            + "\n"
        )
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            return _fail(f"cannot write {args.out}: {exc}", 1)
        return 0

    try:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(EXPORT_COLUMNS)
            for p in b.profiles:
                classified = p.alignment is not None and p.alignment.quadrant is not None
                writer.writerow(
                    [
                        p.artist,
                        p.decade,
                        p.appearances,
                        p.distinct_songs,
                        repr(p.performance_score),
                        repr(p.alignment.shape_similarity) if classified else "",
                        repr(p.alignment.contrast_ratio) if classified else "",
                        p.alignment.quadrant.value if classified else "unclassified",
                    ]
                )
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc}", 1)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chartalign",
        description="Era-baseline alignment analytics over weekly chart data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="parse CSVs and write an analysis bundle")
    p_build.add_argument("--charts", required=True, help="weekly chart CSV")
    p_build.add_argument("--features", required=True, help="per-song audio feature CSV")
    p_build.add_argument("--out", required=True, help="bundle output path")
    p_build.add_argument("--top", type=int, default=10, help="number of top artists")
    p_build.add_argument(
        "--min-songs",
        type=int,
        default=1,
        help="minimum songs per decade for an artist-decade profile",
    )
    p_build.add_argument(
        "--window-start", type=_parse_date, default=date(1960, 1, 1),
        help="analysis window start (YYYY-MM-DD)",
    )
    p_build.add_argument(
        "--window-end", type=_parse_date, default=date(2019, 12, 31),
        help="analysis window end (YYYY-MM-DD)",
    )
    p_build.add_argument(
        "--deterministic",
        action="store_true",
        help="zero the creation timestamp for byte-identical output",
    )
    p_build.set_defaults(func=cmd_build)

    p_stats = sub.add_parser("stats", help="print a profile table from a bundle")
    p_stats.add_argument("--bundle", required=True)
    p_stats.set_defaults(func=cmd_stats)

    p_serve = sub.add_parser("serve", help="serve a bundle over HTTP")
    p_serve.add_argument("--bundle", required=True)
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument(
        "--static-dir", default=None, help="serve the built web UI from this directory"
    )
    p_serve.set_defaults(func=cmd_serve)

    p_export = sub.add_parser("export", help="export flat profile rows")
    p_export.add_argument("--bundle", required=True)
    p_export.add_argument("--format", required=True, help="json or csv")
    p_export.add_argument("--out", required=True)
    p_export.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
