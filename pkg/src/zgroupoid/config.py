"""JSON experiment configs -> suite Context."""
import json

from .algebra import func_from_config
from .dynamics import transformation_from_config
from .errors import ConfigError, ZGroupoidError
from .groupoid import build_instance
from .measure import measure_from_config
from .space import space_from_config
from .suites import DEFAULT_TOLERANCES, DEFAULT_TRIALS, Context
from .tangent import hybrid_from_config

KNOWN_KEYS = {"space", "seed", "suite", "trials", "tolerances", "groupoid", "measures",
              "transformations", "hybrid_measures", "net", "orbits"}


def parse_config_text(text, origin="<config>"):
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        lines = text.splitlines()
        line = lines[exc.lineno - 1] if 0 < exc.lineno <= len(lines) else ""
        raise ConfigError(f"{origin}:{exc.lineno}:{exc.colno}: {exc.msg}\n    {line}") from None
    if not isinstance(cfg, dict):
        raise ConfigError(f"{origin}: top level must be a JSON object")
    return cfg


def load_config(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_config_text(text, str(path))


def _at(where, fn, *args):
    try:
        return fn(*args)
    except ConfigError:
        raise
    except (ZGroupoidError, KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: {exc}") from None


def build_context(cfg, seed=None):
    unknown = set(cfg) - KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "space" not in cfg:
        raise ConfigError("config needs a 'space' entry")
    space = _at("space", space_from_config, cfg["space"])

    seed = cfg.get("seed", 0) if seed is None else seed
    if not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed < 2 ** 64:
        raise ConfigError(f"seed must be an unsigned 64-bit integer, got {seed!r}")

    trials = dict(DEFAULT_TRIALS)
    for k, v in cfg.get("trials", {}).items():
        if k not in trials or not isinstance(v, int) or v < 1:
            raise ConfigError(f"trials.{k}: expected a positive integer for a known suite")
        trials[k] = v
    tolerances = dict(DEFAULT_TOLERANCES)
    for k, v in cfg.get("tolerances", {}).items():
        if k not in tolerances or not isinstance(v, (int, float)) or v < 0:
            raise ConfigError(f"tolerances.{k}: expected a nonnegative number for a known tolerance")
        tolerances[k] = float(v)

    instance = None
    if "groupoid" in cfg:
        g = cfg["groupoid"]
        if not isinstance(g, dict):
            raise ConfigError("groupoid: expected an object")
        units = [_at(f"groupoid.units[{i}]", func_from_config, space, u) for i, u in enumerate(g["units"])] if "units" in g else None
        seeds = [_at(f"groupoid.ideal_seed[{i}]", func_from_config, space, f) for i, f in enumerate(g["ideal_seed"])] if "ideal_seed" in g else None
        instance = _at("groupoid", build_instance, space, g.get("base_point", 0), units, seeds, g.get("closure_depth", 3))

    measures = [_at(f"measures[{i}]", measure_from_config, space, m) for i, m in enumerate(cfg.get("measures", []))]
    transforms = [_at(f"transformations[{i}]", transformation_from_config, space, t)
                  for i, t in enumerate(cfg.get("transformations", []))]

    hybrids = []
    for i, h in enumerate(cfg.get("hybrid_measures", [])):
        mu = _at(f"hybrid_measures[{i}]", hybrid_from_config, h)
        entry = {"measure": mu, "name": h.get("name", f"hybrid{i}"), "center": h.get("center", 0.5),
                 "expect_cauchy": h.get("expect_cauchy", True)}
        if "depth" in h:
            entry["depth"] = h["depth"]
        hybrids.append(entry)

    net = cfg.get("net", {})
    ctx = Context(space=space, seed=seed, trials=trials, tolerances=tolerances, instance=instance,
                  measures=measures, transformations=transforms, hybrids=hybrids,
                  net_depth=net.get("depth", 24), cauchy_from=net.get("cauchy_from", 20),
                  orbits_max_n=cfg.get("orbits", {}).get("max_n", 10))
    if ctx.cauchy_from > ctx.net_depth:
        raise ConfigError("net.cauchy_from must not exceed net.depth")
    return ctx
