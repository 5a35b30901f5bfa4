"""Command-line entry points: replay, gen, serve.

Exit codes: 0 on success, 1 on I/O failure, 2 on bad arguments.  Malformed
trace content never fails a replay; it is reported on stderr and skipped.
"""

from __future__ import annotations

import argparse
import sys

from gesplayer.config import FsmConfig, load_config
from gesplayer.pipeline import replay
from gesplayer.scenarios import SCENARIO_NAMES, Scenario, generate_trace
from gesplayer.server import run_server


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gesplayer",
        description="Hand-landmark gesture engine for video player controls",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_replay = sub.add_parser("replay", help="replay a trace file deterministically")
    p_replay.add_argument("--trace", required=True, help="frame trace file, '-' for stdin")
    p_replay.add_argument("--config", help="flat key/value config file")
    p_replay.add_argument("--out", default="-", help="command log output, '-' for stdout")

    p_gen = sub.add_parser("gen", help="generate a synthetic trace")
    p_gen.add_argument("--scenario", required=True, choices=SCENARIO_NAMES)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--fps", type=float, default=30.0)
    p_gen.add_argument("--duration-ms", type=int, default=2000)
    p_gen.add_argument("--noise", type=float, default=0.0, help="landmark noise sigma")
    p_gen.add_argument("--out", default="-", help="trace output, '-' for stdout")

    p_serve = sub.add_parser("serve", help="run the streaming service")
    p_serve.add_argument("--port", type=int, required=True)
    p_serve.add_argument("--config", help="flat key/value config file")
    p_serve.add_argument("--host", default="0.0.0.0")

    return parser


def _load_cfg(path: str | None, parser: argparse.ArgumentParser) -> FsmConfig:
    if path is None:
        return FsmConfig()
    try:
        return load_config(path)
    except OSError as exc:
        print(f"gesplayer: cannot read config: {exc}", file=sys.stderr)
        raise SystemExit(1) from None
    except ValueError as exc:
        parser.error(f"invalid config: {exc}")  # exits 2
        raise AssertionError  # unreachable


def _cmd_replay(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cfg = _load_cfg(args.config, parser)
    try:
        if args.trace == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(args.trace, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        log, _player = replay(lines, cfg, diagnostics=sys.stderr)
        text = "".join(line + "\n" for line in log)
        if args.out == "-":
            sys.stdout.write(text)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"gesplayer: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_gen(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        scenario = Scenario(
            name=args.scenario,
            duration_ms=args.duration_ms,
            fps=args.fps,
            noise_sigma=args.noise,
            seed=args.seed,
        )
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError
    try:
        text = "".join(line + "\n" for line in generate_trace(scenario))
        if args.out == "-":
            sys.stdout.write(text)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"gesplayer: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_serve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cfg = _load_cfg(args.config, parser)
    try:
        run_server(args.port, cfg, host=args.host)
    except OSError as exc:
        print(f"gesplayer: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "replay":
        return _cmd_replay(args, parser)
    if args.command == "gen":
        return _cmd_gen(args, parser)
    return _cmd_serve(args, parser)


if __name__ == "__main__":
    sys.exit(main())
