"""Command-line interface.

Subcommands reproduce every shipped dataset: topology, the four loss
sweeps, curve fitting, packet-size prediction, and the adaptation trace.
Exit codes: 0 success, 2 configuration error, 3 domain/math error,
4 non-termination.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from fanetsim.adaptation import NonTerminationError, run_adaptation
from fanetsim.config import (
    ConfigError,
    RunConfig,
    _CONFIG_KEYS,
    adaptation_policy,
    area_spec,
    config_to_dict,
    curve_family,
    parse_config,
    sweep_spec,
)
from fanetsim.curves import fit_family_from_power_sweep, predict_with_oracle
from fanetsim.link import BerModel
from fanetsim.output import OutputFormat, emit_table, write_document
from fanetsim.sweeps import (
    SweepAxis,
    run_area_sweep,
    run_count_sweep,
    run_frequency_sweep,
    run_packet_power_sweep,
)
from fanetsim.topology import generate_topology, serialize_topology

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_NONTERMINATION = 4

_SUBCOMMANDS = (
    ("topology", "generate the UAV constellation document"),
    ("sweep-power", "loss vs packet size for each transmit power"),
    ("sweep-frequency", "loss vs packet size for each carrier frequency"),
    ("sweep-area", "loss vs packet size for each flight-area side length"),
    ("sweep-count", "loss vs packet size for each swarm size"),
    ("fit", "fit log-loss curves to the power sweep"),
    ("predict", "packet size for a target loss and power"),
    ("adapt", "run the adaptive-transmission controller"),
)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _add_config_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", metavar="PATH", help="JSON config file (flags take precedence)")
    sub.add_argument("--print-config", action="store_true",
                     help="print the merged effective configuration and exit")
    sub.add_argument("--seed", type=int)
    sub.add_argument("--num-uavs", type=int)
    sub.add_argument("--area-width-m", type=float)
    sub.add_argument("--area-height-m", type=float)
    sub.add_argument("--num-pairs", type=int)
    sub.add_argument("--tx-power-dbm", type=float)
    sub.add_argument("--noise-floor-dbm", type=float)
    sub.add_argument("--frequency-hz", type=float)
    sub.add_argument("--bandwidth-hz", type=float)
    sub.add_argument("--ber-model", choices=[m.value for m in BerModel])
    sub.add_argument("--packet-sizes-bits", type=_int_list, metavar="N,N,...")
    sub.add_argument("--power-axis-dbm", type=_float_list, metavar="P,P,...")
    sub.add_argument("--frequency-axis-hz", type=_float_list, metavar="F,F,...")
    sub.add_argument("--area-axis-m", type=_float_list, metavar="S,S,...")
    sub.add_argument("--count-axis", type=_int_list, metavar="N,N,...")
    sub.add_argument("--replicates", type=int)
    sub.add_argument("--initial-packet-bits", type=int)
    sub.add_argument("--growth-step-bits", type=int)
    sub.add_argument("--backoff-bits", type=int)
    sub.add_argument("--max-ticks", type=int)
    sub.add_argument("--format", choices=["csv", "json"])
    sub.add_argument("--out", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanetsim",
        description="Deterministic packet-loss datasets and adaptive transmission for UAV ad-hoc networks.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, help_text in _SUBCOMMANDS:
        sub = subparsers.add_parser(name, help=help_text)
        _add_config_flags(sub)
        if name == "predict":
            sub.add_argument("--loss", type=float, required=True,
                             help="target loss in percent")
            sub.add_argument("--power", type=float, required=True,
                             help="transmit power in dBm (within the curve family range)")
    return parser


def _execute(command: str, cfg: RunConfig, args: argparse.Namespace) -> str:
    fmt = OutputFormat(cfg.format)
    if command == "topology":
        if fmt is not OutputFormat.JSON:
            raise ConfigError("format: topology documents are json only")
        t = generate_topology(cfg.seed, cfg.num_uavs, area_spec(cfg), cfg.num_pairs)
        return serialize_topology(t)
    if command == "sweep-power":
        return emit_table(run_packet_power_sweep(sweep_spec(cfg, SweepAxis.POWER_DBM)), fmt)
    if command == "sweep-frequency":
        return emit_table(run_frequency_sweep(sweep_spec(cfg, SweepAxis.FREQUENCY_HZ)), fmt)
    if command == "sweep-area":
        return emit_table(run_area_sweep(sweep_spec(cfg, SweepAxis.AREA_SIDE_M)), fmt)
    if command == "sweep-count":
        return emit_table(run_count_sweep(sweep_spec(cfg, SweepAxis.UAV_COUNT)), fmt)
    if command == "fit":
        result = run_packet_power_sweep(sweep_spec(cfg, SweepAxis.POWER_DBM))
        return emit_table(fit_family_from_power_sweep(result), fmt)
    if command == "predict":
        return emit_table(predict_with_oracle(args.loss, args.power, curve_family(cfg)), fmt)
    if command == "adapt":
        return emit_table(run_adaptation(adaptation_policy(cfg), curve_family(cfg)), fmt)
    raise AssertionError(f"unreachable subcommand {command}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        file_text = None
        if args.config is not None:
            try:
                file_text = Path(args.config).read_text(encoding="utf-8")
            except OSError as exc:
                raise ConfigError(f"config: cannot read {args.config}: {exc}") from exc
        overrides = {key: getattr(args, key, None) for key in _CONFIG_KEYS}
        cfg = parse_config(file_text, overrides)
        if args.print_config:
            sys.stdout.write(json.dumps(config_to_dict(cfg), indent=2) + "\n")
            return EXIT_OK
        document = _execute(args.command, cfg, args)
        write_document(document, cfg.out)
        return EXIT_OK
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NonTerminationError as exc:
        print(f"non-termination: {exc}", file=sys.stderr)
        return EXIT_NONTERMINATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
