"""Command-line interface.

Subcommands: capacity, reproduce {fig8|fig9|fig10}, sweep, simulate,
print-config.  Exit codes: 0 ok, 2 config error, 3 numeric domain error,
4 simulation inconsistency.

CSV outputs carry one '#' provenance line with the full effective config,
then a header whose numeric columns are unit-suffixed.  With --svg a line
chart is rendered next to the CSV.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import hybrid, link_sim, molecular_channel, neural_channel, thz_channel
from .config import RunConfig
from .errors import (
    ConfigError,
    DomainError,
    ParameterError,
    SimulationInconsistencyError,
)
from .neural_channel import NATS_TO_BITS

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_SIM_INCONSISTENT = 4


def _log_grid(lo: float, hi: float, n: int) -> list[float]:
    if not (0.0 < lo < hi) or n < 2:
        raise ConfigError("sweep grid", "need 0 < min < max and points >= 2")
    return [lo * (hi / lo) ** (i / (n - 1)) for i in range(n)]


def _lin_grid(lo: float, hi: float, n: int) -> list[float]:
    if not (lo < hi) or n < 2:
        raise ConfigError("sweep grid", "need min < max and points >= 2")
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _write_csv(path: Path, cfg: RunConfig, header: list[str], rows) -> None:
    lines = [f"# config: {cfg.render_inline()}"]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _load_config(args) -> RunConfig:
    cfg = RunConfig.from_file(args.config) if args.config else RunConfig()
    if args.seed is not None:
        cfg.override("seed", args.seed)
    if args.mode is not None:
        cfg.override("mode", args.mode)
    _ = cfg.mode  # validates the mode string
    return cfg


def _cmd_print_config(args) -> int:
    cfg = _load_config(args)
    sys.stdout.write(cfg.render())
    return EXIT_OK


def _cmd_capacity(args) -> int:
    cfg = _load_config(args)
    report = hybrid.full_report(
        cfg.thz_params(), cfg.molecular_params(), cfg.neural_params(), cfg.mode
    )
    c3_nats = neural_channel.capacity_neural(cfg.neural_params())
    print(f"c1_thz_bps = {report.c1_thz_bps!r}")
    print(f"c2_molecular_bps = {report.c2_molecular_bps!r}")
    print(f"c3_neural_nats_ps = {c3_nats!r}")
    print(f"c3_neural_bps = {report.c3_neural_bps!r}")
    print(f"cascade_bps = {report.cascade_bps!r}")
    print(f"bottleneck = {report.bottleneck.value}")
    for name, flag in (
        ("thz", report.negative_thz),
        ("molecular", report.negative_molecular),
        ("neural", report.negative_neural),
    ):
        if flag:
            print(f"warning: negative capacity reported for {name} channel")
    if args.out:
        header = [
            "c1_thz_bps",
            "c2_molecular_bps",
            "c3_neural_nats_ps",
            "c3_neural_bps",
            "cascade_bps",
            "bottleneck",
            "negative_thz",
            "negative_molecular",
            "negative_neural",
        ]
        row = [
            report.c1_thz_bps,
            report.c2_molecular_bps,
            c3_nats,
            report.c3_neural_bps,
            report.cascade_bps,
            report.bottleneck.value,
            int(report.negative_thz),
            int(report.negative_molecular),
            int(report.negative_neural),
        ]
        _write_csv(Path(args.out), cfg, header, [row])
        print(f"wrote {args.out}")
    return EXIT_OK


def _reproduce_fig8(cfg: RunConfig):
    grid = _log_grid(
        float(cfg["fig8.d_min_m"]), float(cfg["fig8.d_max_m"]), int(cfg["fig8.points"])
    )
    pairs = thz_channel.sweep_distance(cfg.fig8_params(grid[0]), grid)
    header = ["distance_m", "capacity_bps"]
    rows = [(d, c) for d, c in pairs]
    plot = {
        "xlabel": "distance (m)",
        "ylabel": "capacity (bits/s)",
        "title": "THz sub-channel capacity vs distance",
        "logx": True,
        "logy": True,
    }
    return header, rows, plot


def _reproduce_fig9(cfg: RunConfig):
    grid = _log_grid(
        float(cfg["fig9.w_min_hz"]), float(cfg["fig9.w_max_hz"]), int(cfg["fig9.points"])
    )
    base = cfg.molecular_params(
        bandwidth_hz=grid[0],
        detector_radius_m=float(cfg["fig9.detector_radius_m"]),
        tau_over_w=float(cfg["fig9.tau_over_w"]),
    )
    pairs = molecular_channel.sweep_bandwidth(
        base, grid, cfg.mode, tau_over_w=float(cfg["fig9.tau_over_w"])
    )
    header = ["bandwidth_hz", "capacity_bps"]
    rows = [(w, c) for w, c in pairs]
    plot = {
        "xlabel": "bandwidth (Hz)",
        "ylabel": "capacity (bits/s)",
        "title": "Molecular sub-channel capacity vs bandwidth",
        "logx": True,
        "logy": False,
    }
    return header, rows, plot


def _reproduce_fig10(cfg: RunConfig):
    grid = _lin_grid(
        float(cfg["fig10.a_min_pps"]),
        float(cfg["fig10.a_max_pps"]),
        int(cfg["fig10.points"]),
    )
    pairs = neural_channel.sweep_input_rate(cfg.neural_params(), grid)
    header = ["rate_pps", "capacity_nats_ps", "capacity_bps"]
    rows = [(a, c, c * NATS_TO_BITS) for a, c in pairs]
    plot = {
        "xlabel": "input rate (pulses/s)",
        "ylabel": "capacity (nats/s)",
        "title": "Neural sub-channel capacity vs input rate",
        "logx": False,
        "logy": False,
    }
    return header, rows, plot


_FIGURES = {"fig8": _reproduce_fig8, "fig9": _reproduce_fig9, "fig10": _reproduce_fig10}
_CHANNEL_TO_FIGURE = {"thz": "fig8", "molecular": "fig9", "neural": "fig10"}


def _emit_sweep(cfg: RunConfig, figure: str, out: str | None, svg: bool, stem: str) -> int:
    header, rows, plot = _FIGURES[figure](cfg)
    out_path = Path(out) if out else Path(str(cfg["out.dir"])) / f"{stem}.csv"
    _write_csv(out_path, cfg, header, rows)
    print(f"wrote {out_path}")
    if svg:
        from . import plotting  # matplotlib loaded only when a figure is asked for

        svg_path = out_path.with_suffix(".svg")
        x = [row[0] for row in rows]
        y = [row[1] for row in rows]
        plotting.render_curve(
            svg_path,
            x,
            y,
            xlabel=plot["xlabel"],
            ylabel=plot["ylabel"],
            title=plot["title"],
            logx=plot["logx"],
            logy=plot["logy"],
        )
        print(f"wrote {svg_path}")
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    cfg = _load_config(args)
    return _emit_sweep(cfg, args.figure, args.out, args.svg, args.figure)


def _cmd_sweep(args) -> int:
    cfg = _load_config(args)
    figure = _CHANNEL_TO_FIGURE[args.channel]
    return _emit_sweep(cfg, figure, args.out, args.svg, f"sweep_{args.channel}")


def _cmd_simulate(args) -> int:
    cfg = _load_config(args)
    n_bits = int(cfg["sim.bits"])
    if n_bits < 1:
        raise ConfigError("sim.bits", f"must be >= 1, got {n_bits}")
    # Bit stream drawn from a stream decorrelated from the link physics seed.
    bit_rng = np.random.default_rng([cfg.seed, 0xB175])
    bits = bit_rng.integers(0, 2, size=n_bits).tolist()
    result, trace = link_sim.run_link(
        bits, cfg.relay_config(), cfg.prop_config(), cfg.seed
    )
    print(f"ber = {result.ber!r}")
    print(f"throughput_bps = {result.throughput_bps!r}")
    print(f"trials = {result.trials}")
    print(f"seed = {result.seed}")
    if args.out:
        header = ["time_s", "event_kind", "payload_count"]
        rows = [(e.time_s, e.kind.value, e.payload) for e in trace.events]
        _write_csv(Path(args.out), cfg, header, rows)
        print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hncsim",
        description=(
            "Capacity reports, figure sweeps, and behavioral link simulation "
            "for the hybrid THz / molecular / neural channel."
        ),
    )
    parser.add_argument("--config", metavar="PATH", help="key = value config file")
    parser.add_argument("--out", metavar="PATH", help="output CSV path")
    parser.add_argument("--svg", action="store_true", help="also render an SVG chart")
    parser.add_argument("--seed", type=int, metavar="U64", help="override config seed")
    parser.add_argument(
        "--mode",
        choices=["verbatim", "nats"],
        help="log-base handling for the molecular capacity",
    )
    parser.add_argument(
        "--print-config",
        action="store_true",
        help="echo the effective configuration and exit",
    )
    sub = parser.add_subparsers(dest="command")

    sub.add_parser("capacity", help="print the three capacities and the cascade")
    p_rep = sub.add_parser("reproduce", help="emit one of the canned figure sweeps")
    p_rep.add_argument("figure", choices=sorted(_FIGURES))
    p_sweep = sub.add_parser("sweep", help="emit a sweep for one sub-channel")
    p_sweep.add_argument(
        "--channel", choices=sorted(_CHANNEL_TO_FIGURE), required=True
    )
    sub.add_parser("simulate", help="run the behavioral link simulation")
    sub.add_parser("print-config", help="echo the effective configuration")
    return parser


_COMMANDS = {
    "capacity": _cmd_capacity,
    "reproduce": _cmd_reproduce,
    "sweep": _cmd_sweep,
    "simulate": _cmd_simulate,
    "print-config": _cmd_print_config,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.print_config:
            return _cmd_print_config(args)
        if args.command is None:
            parser.print_usage(sys.stderr)
            print("error: a subcommand is required", file=sys.stderr)
            return EXIT_CONFIG
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DomainError, ParameterError, OverflowError) as exc:
        print(f"numeric domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SimulationInconsistencyError as exc:
        print(f"simulation inconsistency: {exc}", file=sys.stderr)
        return EXIT_SIM_INCONSISTENT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
