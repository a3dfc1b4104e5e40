"""Command-line front end: rank, sweep, compare, stats, serve.

Reads a mean/std CSV pair, runs the requested analysis and prints a table
(default), JSON or CSV to stdout.  Diagnostics go to stderr; exit status is
0 on success, 1 for validation or I/O failures, 2 for bad flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .atopsis import (
    DEFAULT_TIE_EPSILON,
    GlobalRanking,
    SweepReport,
    atopsis_rank,
    weight_sweep,
)
from .core import (
    CriterionDirection,
    DecisionMatrixPair,
    NormalizationScheme,
    WeightPair,
    load_matrix_pair,
)
from .errors import BadGrid, RankbenchError
from .hellinger import DEFAULT_SIGMA_FLOOR, hellinger_topsis_rank
from .stats import pairwise_wilcoxon

DEFAULT_W_MU = 0.7
GRID_EPS = 1e-9


@dataclass
class RunConfig:
    mean_path: str
    std_path: str
    w_mu: float
    direction: CriterionDirection
    scheme: NormalizationScheme
    method: str
    sigma_floor: float
    tie_epsilon: float
    output_format: str
    exclude: tuple[str, ...]
    out_path: str | None

    def as_dict(self) -> dict:
        return {
            "mu": self.mean_path,
            "sigma": self.std_path,
            "w_mu": self.w_mu,
            "w_sigma": 1.0 - self.w_mu,
            "direction": self.direction.value,
            "norm": self.scheme.value,
            "method": self.method,
            "sigma_floor": self.sigma_floor,
            "tie_eps": self.tie_epsilon,
            "exclude": list(self.exclude),
        }


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        mean_path=args.mu,
        std_path=args.sigma,
        w_mu=args.w_mu,
        direction=CriterionDirection(args.direction),
        scheme=NormalizationScheme(args.norm),
        method=args.method,
        sigma_floor=args.sigma_floor,
        tie_epsilon=args.tie_eps,
        output_format=args.format,
        exclude=tuple(args.exclude or ()),
        out_path=args.out,
    )


def _load_pair(config: RunConfig) -> DecisionMatrixPair:
    with open(config.mean_path, encoding="utf-8") as fh:
        mean_text = fh.read()
    with open(config.std_path, encoding="utf-8") as fh:
        std_text = fh.read()
    pair = load_matrix_pair(mean_text, std_text)
    if config.exclude:
        pair = pair.drop_rows(config.exclude)
    return pair


def _rank_with_method(pair: DecisionMatrixPair, config: RunConfig) -> GlobalRanking:
    if config.method == "hellinger":
        return hellinger_topsis_rank(
            pair,
            direction=config.direction,
            scheme=config.scheme,
            sigma_floor=config.sigma_floor,
            tie_epsilon=config.tie_epsilon,
        )
    return atopsis_rank(
        pair,
        WeightPair.from_w_mu(config.w_mu),
        mean_direction=config.direction,
        scheme=config.scheme,
        tie_epsilon=config.tie_epsilon,
    )


def _tie_group_index(ranking: GlobalRanking) -> dict[str, int]:
    return {
        name: gi + 1 for gi, group in enumerate(ranking.tie_groups) for name in group
    }


def ranking_payload(ranking: GlobalRanking, config: RunConfig) -> dict:
    return {
        "order": list(ranking.order),
        "xi": {name: ranking.xi_of(name) for name in ranking.order},
        "ties": [list(g) for g in ranking.tie_groups],
        "config": config.as_dict(),
    }


def _render_ranking_table(ranking: GlobalRanking) -> list[str]:
    groups = _tie_group_index(ranking)
    width = max(len(n) for n in ranking.order)
    lines = [f"{'rank':>4}  {'algorithm':<{width}}  {'xi_global':>10}  tie_group"]
    for pos, name in enumerate(ranking.order, start=1):
        lines.append(
            f"{pos:>4}  {name:<{width}}  {ranking.xi_of(name):>10.6f}  {groups[name]}"
        )
    return lines


def _render_ranking_csv(ranking: GlobalRanking) -> list[str]:
    groups = _tie_group_index(ranking)
    lines = ["rank,algorithm,xi_global,tie_group"]
    for pos, name in enumerate(ranking.order, start=1):
        lines.append(f"{pos},{name},{ranking.xi_of(name):.6f},{groups[name]}")
    return lines


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_rank(args) -> int:
    config = _config_from_args(args)
    pair = _load_pair(config)
    ranking = _rank_with_method(pair, config)
    if config.output_format == "json":
        text = json.dumps(ranking_payload(ranking, config), indent=2)
    elif config.output_format == "csv":
        text = "\n".join(_render_ranking_csv(ranking))
    else:
        text = "\n".join(_render_ranking_table(ranking))
    _emit(text, config.out_path)
    return 0


def build_grid(start: float, stop: float, step: float) -> list[WeightPair]:
    if not (0.0 <= start <= stop <= 1.0):
        raise BadGrid(f"grid requires 0 <= start <= stop <= 1, got [{start}, {stop}]")
    if step <= 0:
        raise BadGrid(f"grid step must be > 0, got {step}")
    points = []
    w = start
    while w <= stop + GRID_EPS:
        points.append(WeightPair.from_w_mu(min(round(w, 12), 1.0)))
        w += step
    return points


def cmd_sweep(args) -> int:
    config = _config_from_args(args)
    grid = build_grid(args.start, args.stop, args.step)
    pair = _load_pair(config)
    report = weight_sweep(
        pair,
        grid,
        mean_direction=config.direction,
        scheme=config.scheme,
        tie_epsilon=config.tie_epsilon,
    )
    if config.output_format == "json":
        payload = {
            "grid": [p.w_mu for p in report.grid],
            "rankings": [
                {"w_mu": p.w_mu, "order": list(r.order), "xi": r.as_dict()}
                for p, r in zip(report.grid, report.rankings)
            ],
            "stability_w_mu": report.stability_w_mu,
            "config": config.as_dict(),
        }
        text = json.dumps(payload, indent=2)
    elif config.output_format == "csv":
        lines = ["w_mu,w_sigma,order,stable_from_here"]
        for i, (p, r) in enumerate(zip(report.grid, report.rankings)):
            stable = report.stability_index is not None and i >= report.stability_index
            lines.append(
                f"{p.w_mu},{p.w_sigma:.12g},{' > '.join(r.order)},{str(stable).lower()}"
            )
        text = "\n".join(lines)
    else:
        lines = [f"{'[w_mu, w_sigma]':<16} ranking"]
        for i, (p, r) in enumerate(zip(report.grid, report.rankings)):
            mark = " *" if report.stability_index == i else ""
            lines.append(f"[{p.w_mu:g}, {p.w_sigma:g}]".ljust(16) + " > ".join(r.order) + mark)
        if report.stability_w_mu is not None:
            lines.append(f"order stable from w_mu = {report.stability_w_mu:g} (*)")
        else:
            lines.append("order not stable within this grid")
        text = "\n".join(lines)
    _emit(text, config.out_path)
    return 0


def cmd_compare(args) -> int:
    config = _config_from_args(args)
    pair = _load_pair(config)
    a_config = RunConfig(**{**config.__dict__, "method": "atopsis"})
    h_config = RunConfig(**{**config.__dict__, "method": "hellinger"})
    a_rank = _rank_with_method(pair, a_config)
    h_rank = _rank_with_method(pair, h_config)
    agreement = [a == h for a, h in zip(a_rank.order, h_rank.order)]
    if config.output_format == "json":
        payload = {
            "atopsis": {"order": list(a_rank.order), "xi": {n: a_rank.xi_of(n) for n in a_rank.order}},
            "hellinger": {"order": list(h_rank.order), "xi": {n: h_rank.xi_of(n) for n in h_rank.order}},
            "agreement": agreement,
            "config": config.as_dict(),
        }
        text = json.dumps(payload, indent=2)
    elif config.output_format == "csv":
        lines = ["position,atopsis,hellinger,agree"]
        for i, (a, h) in enumerate(zip(a_rank.order, h_rank.order), start=1):
            lines.append(f"{i},{a},{h},{str(a == h).lower()}")
        text = "\n".join(lines)
    else:
        width = max(max(len(n) for n in a_rank.order), len("hellinger")) + 2
        lines = [f"{'pos':>3}  {'atopsis':<{width}}{'hellinger':<{width}}agree"]
        for i, (a, h) in enumerate(zip(a_rank.order, h_rank.order), start=1):
            lines.append(f"{i:>3}  {a:<{width}}{h:<{width}}{'=' if a == h else 'x'}")
        text = "\n".join(lines)
    _emit(text, config.out_path)
    return 0


def cmd_stats(args) -> int:
    config = _config_from_args(args)
    pair = _load_pair(config)
    report = pairwise_wilcoxon(pair.mu, alpha=args.alpha, direction=config.direction)
    ordered = sorted(report.pairwise, key=lambda item: item[1].p_value)
    if config.output_format == "json":
        payload = {
            "friedman": {
                "statistic": report.friedman.statistic,
                "p_value": report.friedman.p_value,
                "k": report.friedman.k,
                "n": report.friedman.n,
            },
            "alpha": report.alpha,
            "pairwise": [
                {
                    "pair": list(names),
                    "w": res.w_statistic,
                    "p_value": res.p_value,
                    "n_effective": res.n_effective,
                    "method": res.method,
                    "undefined": res.undefined,
                    "significant": (not res.undefined) and res.p_value < report.alpha,
                }
                for names, res in ordered
            ],
            "significant": [list(names) for names in report.significant],
            "config": config.as_dict(),
        }
        text = json.dumps(payload, indent=2)
    elif config.output_format == "csv":
        lines = ["pair,w,p_value,n_effective,method,significant"]
        for names, res in ordered:
            sig = (not res.undefined) and res.p_value < report.alpha
            lines.append(
                f"{names[0]}-{names[1]},{res.w_statistic:g},{res.p_value:.6f},"
                f"{res.n_effective},{res.method},{str(sig).lower()}"
            )
        text = "\n".join(lines)
    else:
        lines = [
            f"Friedman: statistic={report.friedman.statistic:.4f} "
            f"p={report.friedman.p_value:.6g} "
            f"({report.friedman.k} algorithms, {report.friedman.n} benchmarks) -> "
            + ("reject H0" if report.friedman.p_value < report.alpha else "fail to reject H0")
            + f" at alpha={report.alpha:g}"
        ]
        width = max(len(a) + len(b) for (a, b), _ in ordered) + 3
        lines.append(f"{'pairwise':<{width}} {'p':>10}  flag")
        for names, res in ordered:
            label = f"{names[0]} - {names[1]}"
            if res.undefined:
                lines.append(f"{label:<{width}} {'undefined':>10}  (all differences zero)")
            else:
                sig = "*" if res.p_value < report.alpha else ""
                lines.append(f"{label:<{width}} {res.p_value:>10.6f}  {sig}")
        lines.append(f"{len(report.significant)} significant pairs at alpha={report.alpha:g}")
        text = "\n".join(lines)
    _emit(text, config.out_path)
    return 0


def cmd_serve(args) -> int:
    from .service import serve_forever

    port = args.port
    if port is None:
        port = int(os.environ.get("RANKBENCH_PORT", "8080"))
    serve_forever(port)
    return 0


def _add_common_flags(parser: argparse.ArgumentParser, need_pair: bool = True) -> None:
    if need_pair:
        parser.add_argument("--mu", required=True, help="path to the means CSV")
        parser.add_argument("--sigma", required=True, help="path to the standard deviations CSV")
    parser.add_argument("--w-mu", dest="w_mu", type=float, default=DEFAULT_W_MU,
                        help="weight of the means (w_sigma = 1 - w_mu)")
    parser.add_argument("--direction", choices=["benefit", "cost"], default="benefit")
    parser.add_argument("--norm", choices=["vector", "max"], default="max")
    parser.add_argument("--method", choices=["atopsis", "hellinger"], default="atopsis")
    parser.add_argument("--sigma-floor", dest="sigma_floor", type=float,
                        default=DEFAULT_SIGMA_FLOOR,
                        help="replacement for zero standard deviations (hellinger)")
    parser.add_argument("--tie-eps", dest="tie_eps", type=float, default=DEFAULT_TIE_EPSILON)
    parser.add_argument("--alpha", type=float, default=0.05)
    parser.add_argument("--format", choices=["table", "json", "csv"], default="table")
    parser.add_argument("--exclude", action="append", default=[],
                        help="drop this algorithm before ranking (repeatable)")
    parser.add_argument("--out", default=None, help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankbench",
        description="Rank stochastic algorithms from mean/std benchmark matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="rank the algorithms once")
    _add_common_flags(p_rank)
    p_rank.set_defaults(func=cmd_rank)

    p_sweep = sub.add_parser("sweep", help="rank across a grid of mean weights")
    _add_common_flags(p_sweep)
    p_sweep.add_argument("--start", type=float, default=0.5)
    p_sweep.add_argument("--stop", type=float, default=1.0)
    p_sweep.add_argument("--step", type=float, default=0.1)
    p_sweep.set_defaults(func=cmd_sweep)

    p_cmp = sub.add_parser("compare", help="A-TOPSIS vs Hellinger-TOPSIS side by side")
    _add_common_flags(p_cmp)
    p_cmp.set_defaults(func=cmd_compare)

    p_stats = sub.add_parser("stats", help="Friedman test plus exact pairwise Wilcoxon")
    _add_common_flags(p_stats)
    p_stats.set_defaults(func=cmd_stats)

    p_serve = sub.add_parser("serve", help="start the JSON HTTP service")
    p_serve.add_argument("--port", type=int, default=None,
                         help="listen port (default: RANKBENCH_PORT or 8080)")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BadGrid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RankbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
