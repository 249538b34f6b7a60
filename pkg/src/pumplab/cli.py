"""Command-line interface.

Commands: member, gen, mpl, pump, graph, serve. Exit codes: 0 success (and
string is a member), 1 string is not a member, 2 usage or syntax error,
3 resource limit or service startup failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .automata import accepts, compile, determinize, export_graph
from .config import CliConfig, CONFIG_ENV_VAR, load_config
from .enumeration import enumerate_strings
from .errors import RegexSyntaxError, ResourceLimitError
from .pumping import (MplResult, PumpSplit, min_pumping_length_exact,
                      min_pumping_length_sampled, pump)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pumplab",
        description="Regular-language workbench: membership, enumeration, "
                    "minimum pumping length, pumping, graph export.")
    parser.add_argument("--format", choices=("plain", "json-lines"),
                        default=None, help="output format (default plain)")
    parser.add_argument("--config", default=None,
                        help=f"config file path (also ${CONFIG_ENV_VAR})")
    parser.add_argument("--max-len", type=int, default=None,
                        help="length bound for sampled minimum pumping length")
    sub = parser.add_subparsers(dest="command", required=True)

    p_member = sub.add_parser("member", help="test string membership")
    p_member.add_argument("regex")
    p_member.add_argument("input")
    p_member.set_defaults(handler=_cmd_member)

    p_gen = sub.add_parser("gen", help="enumerate language strings in shortlex order")
    p_gen.add_argument("regex")
    p_gen.add_argument("--count", type=int, default=10)
    p_gen.add_argument("--offset", type=int, default=0)
    p_gen.set_defaults(handler=_cmd_gen)

    p_mpl = sub.add_parser("mpl", help="minimum pumping length with witness")
    p_mpl.add_argument("regex")
    p_mpl.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    p_mpl.set_defaults(handler=_cmd_mpl)

    p_pump = sub.add_parser("pump", help="apply x y^i z and test membership")
    p_pump.add_argument("regex")
    p_pump.add_argument("--x", default="")
    p_pump.add_argument("--y", required=True)
    p_pump.add_argument("--z", default="")
    p_pump.add_argument("--i", type=int, required=True)
    p_pump.set_defaults(handler=_cmd_pump)

    p_graph = sub.add_parser("graph", help="print the automaton as DOT text")
    p_graph.add_argument("regex")
    p_graph.set_defaults(handler=_cmd_graph)

    p_serve = sub.add_parser("serve", help="run the HTTP JSON service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(handler=_cmd_serve)
    return parser


def _display(s: str, config: CliConfig) -> str:
    # Plain output renders the empty string as the epsilon character.
    return s if s else config.reserved.epsilon


def _cmd_member(args, config: CliConfig) -> int:
    member = accepts(compile(args.regex, config.reserved), args.input)
    if config.output_format == "json-lines":
        print(json.dumps({"member": member}))
    else:
        print("True" if member else "False")
    return 0 if member else 1


def _cmd_gen(args, config: CliConfig) -> int:
    if args.count < 1 or args.offset < 0:
        print("gen: count must be >= 1 and offset >= 0", file=sys.stderr)
        return 2
    nfa = compile(args.regex, config.reserved)
    batch = enumerate_strings(nfa, args.count, args.offset, config.frontier_cap)
    if config.output_format == "json-lines":
        for s in batch.strings:
            print(json.dumps({"string": s, "epsilon": s == ""}))
        print(json.dumps({"next_offset": batch.next_offset,
                          "exhausted": batch.exhausted}))
    else:
        for s in batch.strings:
            print(_display(s, config))
        if batch.exhausted:
            print(f"language exhausted after {batch.next_offset} strings",
                  file=sys.stderr)
    return 0


def _mpl_record(result: MplResult) -> dict:
    split = None
    if result.split is not None:
        split = {"x": result.split.x, "y": result.split.y, "z": result.split.z}
    return {"p": result.p, "witness": result.witness, "split": split,
            "mode": result.mode,
            "counterexample": result.counterexample_for_p_minus_1}


def _cmd_mpl(args, config: CliConfig) -> int:
    nfa = compile(args.regex, config.reserved)
    if args.mode == "exact":
        result = min_pumping_length_exact(determinize(nfa, config.state_cap),
                                          config.state_cap)
    else:
        result = min_pumping_length_sampled(nfa, config.max_len,
                                            config.state_cap, config.frontier_cap)
    if config.output_format == "json-lines":
        print(json.dumps(_mpl_record(result)))
        return 0
    print(f"p={result.p}")
    if result.witness is not None:
        print(f"witness={_display(result.witness, config)}")
    if result.split is not None:
        print(f"x={_display(result.split.x, config)}")
        print(f"y={result.split.y}")
        print(f"z={_display(result.split.z, config)}")
    print(f"mode={result.mode}")
    if result.counterexample_for_p_minus_1 is not None:
        print(f"counterexample={_display(result.counterexample_for_p_minus_1, config)}")
    return 0


def _cmd_pump(args, config: CliConfig) -> int:
    if not args.y:
        print("pump: y must be non-empty", file=sys.stderr)
        return 2
    if args.i < 0:
        print("pump: i must be non-negative", file=sys.stderr)
        return 2
    nfa = compile(args.regex, config.reserved)
    pumped = pump(PumpSplit(args.x, args.y, args.z), args.i)
    member = accepts(nfa, pumped)
    if config.output_format == "json-lines":
        print(json.dumps({"pumped": pumped, "member": member}))
    else:
        print(f"pumped={_display(pumped, config)}")
        print(f"member={member}")
    return 0


def _cmd_graph(args, config: CliConfig) -> int:
    print(export_graph(compile(args.regex, config.reserved), config.reserved),
          end="")
    return 0


def _cmd_serve(args, config: CliConfig) -> int:
    import socket

    import uvicorn

    from .service import create_app

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, args.port))
    except OSError as exc:
        sock.close()
        print(f"cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 3
    host, port = sock.getsockname()[:2]
    print(f"listening on http://{host}:{port}", flush=True)
    server = uvicorn.Server(uvicorn.Config(create_app(config), log_level="warning"))
    server.run(sockets=[sock])
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        if args.format is not None:
            from dataclasses import replace
            config = replace(config, output_format=args.format)
        if args.max_len is not None:
            from dataclasses import replace
            config = replace(config, max_len=args.max_len)
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.handler(args, config)
    except RegexSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
