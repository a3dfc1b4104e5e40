"""Stateless JSON HTTP facade over the ranking and stats engines.

Matrices travel inline as JSON arrays; every handler is a pure function of
the request body, so concurrent requests need no coordination.  Responses
carry permissive CORS headers for a browser front end on another origin.
"""

from __future__ import annotations

import json
import math
import sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import numpy as np

from . import __version__
from .atopsis import DEFAULT_TIE_EPSILON, atopsis_rank, stage_one, weight_sweep
from .core import (
    CriterionDirection,
    DecisionMatrixPair,
    LabeledMatrix,
    NormalizationScheme,
    WeightPair,
)
from .errors import RankbenchError
from .hellinger import DEFAULT_SIGMA_FLOOR, hellinger_topsis_rank
from .stats import pairwise_wilcoxon

MAX_BODY_BYTES = 1 << 20  # 1 MiB


class ApiError(Exception):
    def __init__(self, status: int, message: str, field: str | None = None):
        super().__init__(message)
        self.status = status
        self.message = message
        self.field = field


def _bad(message: str, field: str) -> ApiError:
    return ApiError(400, message, field)


def _unprocessable(message: str, field: str | None = None) -> ApiError:
    return ApiError(422, message, field)


def _require(body: dict, key: str):
    if key not in body:
        raise _bad(f"missing field {key!r}", key)
    return body[key]


def _names(body: dict, key: str) -> list[str]:
    raw = _require(body, key)
    if not isinstance(raw, list) or not raw or not all(isinstance(s, str) and s.strip() for s in raw):
        raise _bad(f"{key} must be a non-empty list of names", key)
    names = [s.strip() for s in raw]
    if len(set(names)) != len(names):
        raise _bad(f"{key} contains duplicates", key)
    return names


def _grid_of(body: dict, rows: int, cols: int, key: str) -> np.ndarray:
    raw = _require(body, key)
    if not isinstance(raw, list) or len(raw) != rows:
        raise _bad(f"{key} must be a list of {rows} rows", key)
    values = np.empty((rows, cols), dtype=float)
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != cols:
            raise _bad(f"{key} row {i} must have {cols} numeric cells", key)
        for j, cell in enumerate(row):
            if isinstance(cell, bool) or not isinstance(cell, (int, float)):
                raise _bad(f"{key}[{i}][{j}] is not a number", key)
            values[i, j] = float(cell)
    if not np.all(np.isfinite(values)):
        raise _bad(f"{key} contains non-finite values", key)
    if np.any(values < 0):
        raise _bad(f"{key} contains negative values", key)
    return values


def _enum_of(body: dict, key: str, enum_cls, default):
    raw = body.get(key)
    if raw is None:
        return default
    try:
        return enum_cls(raw)
    except ValueError:
        choices = [e.value for e in enum_cls]
        raise _bad(f"{key} must be one of {choices}", key) from None


def _number(body: dict, key: str, default):
    raw = body.get(key, default)
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise _bad(f"{key} must be a number", key)
    return float(raw)


def parse_pair(body: dict) -> DecisionMatrixPair:
    algorithms = _names(body, "algorithms")
    benchmarks = _names(body, "benchmarks")
    mu_raw = _require(body, "mu")
    if not isinstance(mu_raw, list) or len(mu_raw) != len(algorithms):
        raise _bad(f"mu must have one row per algorithm ({len(algorithms)})", "mu")
    mu = _grid_of(body, len(algorithms), len(benchmarks), "mu")
    sigma_raw = _require(body, "sigma")
    if not isinstance(sigma_raw, list) or len(sigma_raw) != len(algorithms):
        raise _bad("sigma shape differs from mu", "sigma")
    if any(not isinstance(r, list) or len(r) != len(benchmarks) for r in sigma_raw):
        raise _bad("sigma shape differs from mu", "sigma")
    sigma = _grid_of(body, len(algorithms), len(benchmarks), "sigma")
    try:
        return DecisionMatrixPair(
            LabeledMatrix(tuple(algorithms), tuple(benchmarks), mu),
            LabeledMatrix(tuple(algorithms), tuple(benchmarks), sigma),
        )
    except RankbenchError as exc:
        raise _bad(str(exc), "mu") from None


def parse_rank_request(body: dict):
    pair = parse_pair(body)
    weights_raw = body.get("weights")
    if not isinstance(weights_raw, dict) or "w_mu" not in weights_raw:
        raise _bad("weights must be an object with w_mu", "weights")
    w_mu = weights_raw["w_mu"]
    if isinstance(w_mu, bool) or not isinstance(w_mu, (int, float)):
        raise _bad("weights.w_mu must be a number", "weights")
    if not (0.0 <= float(w_mu) <= 1.0) or not math.isfinite(float(w_mu)):
        raise _unprocessable(f"w_mu must lie in [0, 1], got {w_mu}", "weights")
    direction = _enum_of(body, "direction", CriterionDirection, CriterionDirection.BENEFIT)
    scheme = _enum_of(body, "normalization", NormalizationScheme, NormalizationScheme.MAX)
    method = body.get("method", "atopsis")
    if method not in ("atopsis", "hellinger"):
        raise _bad("method must be 'atopsis' or 'hellinger'", "method")
    sigma_floor = _number(body, "sigma_floor", DEFAULT_SIGMA_FLOOR)
    if sigma_floor <= 0 or not math.isfinite(sigma_floor):
        raise _unprocessable(f"sigma_floor must be > 0, got {sigma_floor}", "sigma_floor")
    tie_epsilon = _number(body, "tie_epsilon", DEFAULT_TIE_EPSILON)
    if tie_epsilon < 0 or not math.isfinite(tie_epsilon):
        raise _unprocessable(f"tie_epsilon must be >= 0, got {tie_epsilon}", "tie_epsilon")
    return pair, float(w_mu), direction, scheme, method, sigma_floor, tie_epsilon


def handle_rank(body: dict) -> dict:
    pair, w_mu, direction, scheme, method, sigma_floor, tie_eps = parse_rank_request(body)
    if method == "hellinger":
        ranking = hellinger_topsis_rank(
            pair, direction=direction, scheme=scheme,
            sigma_floor=sigma_floor, tie_epsilon=tie_eps,
        )
        stage1 = None
    else:
        ranking = atopsis_rank(
            pair, WeightPair.from_w_mu(w_mu), mean_direction=direction,
            scheme=scheme, tie_epsilon=tie_eps,
        )
        s1 = stage_one(pair, direction, scheme)
        stage1 = {
            "xi_mu": {name: float(v) for name, v in zip(s1.labels, s1.xi_mu)},
            "xi_sigma": {name: float(v) for name, v in zip(s1.labels, s1.xi_sigma)},
        }
    return {
        "order": list(ranking.order),
        "xi": {name: ranking.xi_of(name) for name in ranking.order},
        "ties": [list(g) for g in ranking.tie_groups],
        "stage1": stage1,
    }


def handle_sweep(body: dict) -> dict:
    pair, _, direction, scheme, method, sigma_floor, tie_eps = parse_rank_request(body)
    grid_raw = body.get("grid")
    if grid_raw is None:
        grid_raw = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0]
    if not isinstance(grid_raw, list) or not grid_raw:
        raise _bad("grid must be a non-empty list of w_mu values", "grid")
    for v in grid_raw:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise _bad("grid entries must be numbers", "grid")
        if not (0.0 <= float(v) <= 1.0):
            raise _unprocessable(f"grid entries must lie in [0, 1], got {v}", "grid")
    values = [float(v) for v in grid_raw]
    if any(b <= a for a, b in zip(values, values[1:])):
        raise _unprocessable("grid must be strictly increasing in w_mu", "grid")
    if method == "hellinger":
        # weight-independent baseline: one ranking repeated per grid point
        ranking = hellinger_topsis_rank(
            pair, direction=direction, scheme=scheme,
            sigma_floor=sigma_floor, tie_epsilon=tie_eps,
        )
        rankings = [
            {"w_mu": v, "order": list(ranking.order), "xi": ranking.as_dict()}
            for v in values
        ]
        stability = values[0]
    else:
        report = weight_sweep(
            pair,
            [WeightPair.from_w_mu(v) for v in values],
            mean_direction=direction,
            scheme=scheme,
            tie_epsilon=tie_eps,
        )
        rankings = [
            {"w_mu": p.w_mu, "order": list(r.order), "xi": r.as_dict()}
            for p, r in zip(report.grid, report.rankings)
        ]
        stability = report.stability_w_mu
    return {"grid": values, "rankings": rankings, "stability_w_mu": stability}


def handle_stats(body: dict) -> dict:
    algorithms = _names(body, "algorithms")
    benchmarks = _names(body, "benchmarks")
    key = "matrix" if "matrix" in body else "mu"
    if key not in body:
        raise _bad("missing field 'matrix'", "matrix")
    values = _grid_of(body, len(algorithms), len(benchmarks), key)
    direction = _enum_of(body, "direction", CriterionDirection, CriterionDirection.BENEFIT)
    alpha = _number(body, "alpha", 0.05)
    if not (0.0 < alpha < 1.0):
        raise _unprocessable(f"alpha must lie in (0, 1), got {alpha}", "alpha")
    try:
        matrix = LabeledMatrix(tuple(algorithms), tuple(benchmarks), values)
        report = pairwise_wilcoxon(matrix, alpha=alpha, direction=direction)
    except RankbenchError as exc:
        raise _unprocessable(str(exc)) from None
    return {
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
            for names, res in report.pairwise
        ],
        "significant": [list(names) for names in report.significant],
    }


ROUTES = {
    "/api/rank": handle_rank,
    "/api/sweep": handle_sweep,
    "/api/stats": handle_stats,
}


class RankHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server_version = f"rankbench/{__version__}"

    def _send_json(self, status: int, payload: dict) -> None:
        data = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        if self.path == "/api/health":
            self._send_json(200, {"status": "ok", "version": __version__})
        elif self.path in ROUTES:
            self._send_json(405, {"error": "use POST", "field": None})
        else:
            self._send_json(404, {"error": "not found", "field": None})

    def do_POST(self):
        handler = ROUTES.get(self.path)
        if handler is None:
            self._send_json(404, {"error": "not found", "field": None})
            return
        length = int(self.headers.get("Content-Length") or 0)
        if length > MAX_BODY_BYTES:
            # drain so the client can finish writing, then refuse
            remaining = length
            while remaining > 0:
                chunk = self.rfile.read(min(remaining, 1 << 16))
                if not chunk:
                    break
                remaining -= len(chunk)
            self._send_json(413, {"error": "request body too large", "field": None})
            return
        raw = self.rfile.read(length)
        try:
            body = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            self._send_json(400, {"error": "body is not valid JSON", "field": "body"})
            return
        if not isinstance(body, dict):
            self._send_json(400, {"error": "body must be a JSON object", "field": "body"})
            return
        try:
            self._send_json(200, handler(body))
        except ApiError as exc:
            self._send_json(exc.status, {"error": exc.message, "field": exc.field})
        except RankbenchError as exc:
            self._send_json(422, {"error": str(exc), "field": None})

    def log_message(self, fmt, *args):  # keep test output clean
        pass


def make_server(port: int = 0) -> ThreadingHTTPServer:
    server = ThreadingHTTPServer(("127.0.0.1", port), RankHandler)
    server.daemon_threads = True
    return server


def serve_forever(port: int) -> None:
    server = ThreadingHTTPServer(("0.0.0.0", port), RankHandler)
    server.daemon_threads = True
    print(f"rankbench service listening on port {server.server_address[1]}", file=sys.stderr)
    try:
        server.serve_forever()
    finally:
        server.server_close()
