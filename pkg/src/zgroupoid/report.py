"""Run reports (JSON) and plot data (CSV)."""
import csv
import datetime
import json
import os

SCHEMA = "1"

# series name -> column header
SERIES_COLUMNS = {
    "tangent": ["k", "I0", "I1", "I2", "I3", "increment"],
    "dynamics_cesaro": ["T", "distance_to_invariant", "transformation", "seed"],
    "groupoid_cocycle_residual_hist": ["bin_left", "bin_right", "count"],
}


def columns_for(series_name):
    if series_name.startswith("tangent"):
        return SERIES_COLUMNS["tangent"]
    return SERIES_COLUMNS[series_name]


def _plain(value):
    """Make numpy scalars and containers JSON serializable."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return value.item()
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    return value


def build_report(suite, seed, checks, series, backend, wall_time, stable=False):
    ordered = sorted(checks, key=lambda c: c.name)
    report = {
        "schema": SCHEMA,
        "suite": suite,
        "seed": seed,
        "backend": backend,
        "passed": all(c.passed for c in ordered if c.asserted),
        "checks": [
            {"name": c.name, "passed": bool(c.passed), "asserted": bool(c.asserted), "details": _plain(c.details)}
            for c in ordered
        ],
        "series": {k: _plain(series[k]) for k in sorted(series)},
    }
    if not stable:
        report["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
        report["wall_time"] = wall_time
    return report


def dumps(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def emit_plot_data(report, out_dir):
    """One CSV per numeric series; known series without data get a header only."""
    os.makedirs(out_dir, exist_ok=True)
    series = report.get("series", {})
    names = set(series) | {"tangent", "dynamics_cesaro", "groupoid_cocycle_residual_hist"}
    # a bare "tangent" header file is only needed when no tangent series exists
    if any(n.startswith("tangent_") for n in series):
        names.discard("tangent")
    written = []
    for name in sorted(names):
        path = os.path.join(out_dir, f"{name}.csv")
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(columns_for(name))
            for row in series.get(name, []):
                w.writerow(["" if v is None else v for v in row])
        written.append(path)
    return written
