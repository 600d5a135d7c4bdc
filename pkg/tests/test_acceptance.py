"""The eight acceptance criteria, each at its stated tolerance and time budget.

Suites are timed after kernel warm-up so JIT compilation is not counted.
One PASS/FAIL line per criterion is printed in the terminal summary.
"""
import json
import time

import pytest

from conftest import ACCEPTANCE_LINES
from zgroupoid import _kernels
from zgroupoid.cli import main
from zgroupoid.config import build_context
from zgroupoid.suites import run_suite

CONFIG = {"space": {"kind": "circle", "n": 6}, "seed": 0}


@pytest.fixture(scope="module", autouse=True)
def warm():
    _kernels.warmup()


def timed(suite):
    ctx = build_context(dict(CONFIG))
    t0 = time.perf_counter()
    checks = run_suite(ctx, suite)
    return ctx, {c.name: c for c in checks}, time.perf_counter() - t0


def record(number, title, ok, info):
    line = f"{'PASS' if ok else 'FAIL'}  [{number}] {title}: {info}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def all_asserted_pass(checks):
    return all(c.passed for c in checks.values() if c.asserted)


def test_1_zero_set_lattice():
    ctx, c, dt = timed("algebra")
    lat = c["algebra.lattice_identities"]
    ok = lat.passed and lat.details["trials"] >= 1000 and all_asserted_pass(c) and dt < 1.0
    record(1, "zero-set lattice", ok, f"{lat.details['trials']} pairs, n<=32, {dt:.3f}s (<1s)")


def test_2_action():
    ctx, c, dt = timed("action")
    dev = c["action.tau_plus_normalized_is_one"].details["max_deviation"]
    trials = c["action.zero_set_preservation"].details["trials"]
    ok = (c["action.zero_set_preservation"].passed and c["action.range_bounds"].passed
          and trials >= 1000 and dev <= 1e-15 and all_asserted_pass(c) and dt < 1.0)
    record(2, "G(1) actions", ok, f"{trials} trials, max |tau+h-1|={dev:.1e} (<=1e-15), {dt:.3f}s (<1s)")


def test_3_groupoid():
    ctx, c, dt = timed("groupoid")
    ax = c["groupoid.axioms"]
    ex = c["groupoid.cocycle_residual_example"].details["residual"]
    depth = c["groupoid.instance_closure"].details["closure_depth"]
    ok = (ax.passed and ax.details["triples"] >= 1000 and depth == 3
          and c["groupoid.cocycle_zero_on_Z(f)"].passed and ex == 0.25
          and all_asserted_pass(c) and dt < 2.0)
    record(3, "groupoid axioms", ok,
           f"{ax.details['triples']} triples, depth {depth}, example residual {ex!r} (==0.25), {dt:.3f}s (<2s)")


def test_4_measure():
    ctx, c, dt = timed("measure")
    d = c["measure.disintegration"]
    rn = c["measure.radon_nikodym"]
    ok = d.passed and rn.passed and d.details["trials"] >= 500 and all_asserted_pass(c) and dt < 2.0
    record(4, "measure", ok,
           f"{d.details['trials']} pairs, recon {d.details['max_reconstruction_residual']:.1e}, "
           f"double-sum {d.details['max_double_sum_gap']:.1e} (<=1e-12 rel), {dt:.3f}s (<2s)")


def test_5_tangent():
    ctx, c, dt = timed("tangent")
    gap = c["tangent.one_sided_first_moment"].details
    ok = (c["tangent.lebesgue_interior_constant"].passed and c["tangent.dirac_at_atom"].passed
          and c["tangent.one_sided_first_moment"].passed and ctx.tolerances["net_cauchy"] == 1e-6
          and all_asserted_pass(c) and dt < 1.0)
    record(5, "tangent nets", ok, f"2y first moment gap {gap['gap']:.1e} at k={gap['k']} (<=1e-6), {dt:.3f}s (<1s)")


def test_6_dynamics():
    ctx, c, dt = timed("dynamics")
    names = ["dynamics.invariance_iff_cycle_constant", "dynamics.ergodic_iff_single_cycle_uniform",
             "dynamics.decomposition", "dynamics.cesaro_dirac_on_cycle"]
    trials = c["dynamics.decomposition"].details["trials"]
    ok = all(c[n].passed for n in names) and trials >= 200 and all_asserted_pass(c) and dt < 5.0
    record(6, "dynamics", ok,
           f"{trials} bijections n<=8, recon {c['dynamics.decomposition'].details['max_reconstruction_residual']:.1e}, "
           f"{dt:.3f}s (<5s)")


def test_7_orbits():
    ctx, c, dt = timed("orbits")
    tr = c["orbits.trueness"].details
    ok = (c["orbits.stratification"].passed and c["orbits.trueness"].passed and tr["samples"] >= 500
          and ctx.orbits_max_n == 10 and all_asserted_pass(c) and dt < 5.0)
    record(7, "orbits", ok, f"strata 2^n-1 for n<=10, trueness {tr['composition_respected']}/{tr['samples']}, {dt:.3f}s (<5s)")


def test_8_determinism(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(CONFIG))
    blobs = []
    for i in range(2):
        out = tmp_path / f"run{i}"
        code = main(["run", "--config", str(cfg), "--suite", "all", "--seed", "42", "--stable", "--out", str(out)])
        blobs.append((code, (out / "report.json").read_bytes()))
    ok = blobs[0][0] == blobs[1][0] == 0 and blobs[0][1] == blobs[1][1]
    record(8, "determinism", ok, f"two --stable runs, {len(blobs[0][1])} bytes, identical={blobs[0][1] == blobs[1][1]}")
