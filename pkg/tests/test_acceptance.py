"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in the terminal summary of any pytest run that
collects this module, and by ``python tests/test_acceptance.py``."""

import json
import random
import time
from pathlib import Path

import pytest

from mldsl.groebner import Ideal, same_variety, variety_contains
from mldsl.mlpipeline import (
    LikelihoodRing, ModelSpec, build_context, data_singular_locus, hadamard_product, lower_bound, ml_degree,
    point_ideal, raw_dual, singular_locus, theorem_check,
)
from mldsl.polyring import GF, QQ, PolyRing

RESULTS: dict[int, str] = {}
MODELS = Path(__file__).resolve().parent.parent / "models"

DET = "p0^3 - p0*p1^2 - p0*p2^2 + 2*p1*p2*p3 - p0*p3^2"
TERNARY = "p2*(p1-p2)^2 + (p0-p2)^3"
WHITNEY = "(p0-p1)^2*p3 - (p1-p2)^2*(p2-p3)"
CUSP = "p0^3 + p1^2*p2"
DET_QUADRIC = "3*u0^2-2*u0*u1-5*u1^2-2*u0*u2+6*u1*u2-5*u2^2-2*u0*u3+6*u1*u3+6*u2*u3-5*u3^2"
WHITNEY_CUBIC = ("4*u0^3-3*u0*u1^2+u1^3-6*u0*u1*u2+3*u1^2*u2-3*u0*u2^2+3*u1*u2^2+u2^3-15*u0^2*u3"
                 "+6*u0*u1*u3-6*u1^2*u3+24*u0*u2*u3+6*u1*u2*u3-15*u2^2*u3")


def record(n: int, ok: bool, detail: str):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def _ideal(ring, *srcs):
    return Ideal(ring, [ring(s) for s in srcs])


@pytest.fixture(scope="module")
def det_fp():
    return build_context(ModelSpec.from_strings(4, [DET], label="determinantal-cubic"))


@pytest.mark.slow
def test_criterion_1_determinantal_dsl(det_fp):
    t0 = time.perf_counter()
    D = data_singular_locus(det_fp)
    t_fp = time.perf_counter() - t0
    U = D.ring
    target = _ideal(U, DET_QUADRIC, "u0 + u1 + u2 + u3 + us")
    ok_fp = same_variety(D, target)
    t0 = time.perf_counter()
    Dq = data_singular_locus(build_context(ModelSpec.from_strings(4, [DET], field=QQ)))
    t_q = time.perf_counter() - t0
    ok_q = same_variety(Dq, _ideal(Dq.ring, DET_QUADRIC, "u0 + u1 + u2 + u3 + us"))
    ok = ok_fp and ok_q and t_fp <= 600
    record(1, ok, f"DSL variety equal over fp={ok_fp} ({t_fp:.1f}s, limit 600s) and over Q={ok_q} ({t_q:.1f}s)")


@pytest.mark.slow
def test_criterion_2_determinantal_ml_degree(det_fp):
    degs, times = [], []
    for seed in (0, 1, 2):
        t0 = time.perf_counter()
        degs.append(ml_degree(det_fp, seed))
        times.append(time.perf_counter() - t0)
    # the first seed also pays for the extended correspondence; charge it to every seed
    ok = degs == [10, 10, 10] and max(times) <= 300
    record(2, ok, f"ML degrees {degs} for seeds 0,1,2; slowest seed {max(times):.1f}s (limit 300s)")


@pytest.mark.slow
def test_criterion_3_determinantal_singular_point_and_theorem(det_fp):
    _, sing = singular_locus(det_fp)
    point = point_ideal(sing.ring, det_fp.lr.P, [1, 1, 1, 1, 4])
    ok_pt = same_variety(sing, point)
    rep = theorem_check(det_fp)
    ok_flags = rep.lower_contained and not rep.lower_equal and rep.upper_equal
    record(3, ok_pt and ok_flags,
           f"singular locus is [1/4:1/4:1/4:1/4:1]={ok_pt}; lower_contained={rep.lower_contained} "
           f"lower_equal={rep.lower_equal} upper_equal={rep.upper_equal}")


def test_criterion_4_ternary_cubic():
    t0 = time.perf_counter()
    ctx = build_context(ModelSpec.from_strings(3, [TERNARY], label="ternary-cubic"))
    D = data_singular_locus(ctx)
    U = D.ring
    ok_dsl = same_variety(D, _ideal(U, "2*u0 - u1 - u2", "u0 + u1 + u2 + us"))
    rep = theorem_check(ctx)
    ok_flags = rep.lower_contained and not rep.lower_equal and rep.upper_equal
    ok_low = same_variety(lower_bound(ctx), point_ideal(U, ctx.lr.U, [1, 1, 1, -3]))
    dt = time.perf_counter() - t0
    record(4, ok_dsl and ok_flags and ok_low and dt <= 120,
           f"DSL=V(2u0-u1-u2, sum u) {ok_dsl}; lower strict/upper equal {ok_flags}; "
           f"lower bound [1/3:1/3:1/3:-1] {ok_low}; {dt:.1f}s (limit 120s)")


@pytest.mark.slow
def test_criterion_5_whitney_umbrella():
    t0 = time.perf_counter()
    ctx = build_context(ModelSpec.from_strings(4, [WHITNEY], label="whitney-umbrella"))
    _, sing = singular_locus(ctx)
    R = sing.ring
    line = _ideal(R, "3*p2 + p3 - ps", "3*p1 + p3 - ps", "3*p0 + p3 - ps")
    ok_line = variety_contains(sing, line)
    D = data_singular_locus(ctx)
    U = D.ring
    target = Ideal(U, [U(WHITNEY_CUBIC) * U("u0 + u1 - u2 - u3"), U("u0 + u1 + u2 + u3 + us")])
    ok_dsl = same_variety(D, target)
    rep = theorem_check(ctx)
    ok_flags = rep.lower_contained and not rep.lower_equal and rep.upper_contains and not rep.upper_equal
    dt = time.perf_counter() - t0
    record(5, ok_line and ok_dsl and ok_flags and dt <= 900,
           f"DSL=V(C*(u0+u1-u2-u3), sum u) {ok_dsl}; both inclusions strict {ok_flags}; "
           f"singular locus contains the line {ok_line}; {dt:.1f}s (limit 900s)")


def test_criterion_6_cuspidal_cubic():
    ctx = build_context(ModelSpec.from_strings(3, [CUSP], label="cuspidal-cubic"))
    _, sing = singular_locus(ctx)
    D = data_singular_locus(ctx)
    record(6, sing.is_unit() and D.is_unit(), f"F_sing=<1> {sing.is_unit()}; DSL=<1> {D.is_unit()}")


def test_criterion_7_hadamard_and_duality():
    checks = {}
    lr3 = LikelihoodRing(3, QQ)
    H = hadamard_product(lr3, point_ideal(lr3.ring_p, lr3.P, [1, 1, 1, 3]),
                         point_ideal(lr3.ring_b, lr3.B, [1, 1, 1, -1]))
    checks["point*point"] = H.same_ideal(point_ideal(lr3.ring_u, lr3.U, [1, 1, 1, -3]))

    F = GF()
    lr = LikelihoodRing(2, F)
    line = _ideal(lr.ring_p, "p0 + p1 - ps")
    H = hadamard_product(lr, line, point_ideal(lr.ring_b, lr.B, [1, 1, -1]))
    rng = random.Random(0)
    inside = True
    for _ in range(100):
        t0, t1 = rng.randrange(1, F.modulus), rng.randrange(1, F.modulus)
        pt = dict(zip(lr.U, [t0, F.reduce(-2 * t0 - t1), F.reduce(t0 + t1)]))
        inside &= all(F.reduce(g.evaluate(pt)) == 0 for g in H.generators)
    checks["line*[1:1:-1] contains image"] = inside

    R = PolyRing(["p0", "p1", "p2"], F)
    conic = _ideal(R, "p0*p2 - p1^2")
    D = raw_dual(conic, ("b0", "b1", "b2"))
    checks["conic dual"] = D.same_ideal(_ideal(D.ring, "b1^2 - 4*b0*b2"))
    back = raw_dual(D, ("p0", "p1", "p2"))
    checks["biduality"] = same_variety(back, conic.rebase(back.ring))
    record(7, all(checks.values()), "; ".join(f"{k} {v}" for k, v in checks.items()))


def test_criterion_8_property_suites(tmp_path):
    import test_groebner as tg
    import test_textio as tt
    from mldsl import cli

    done = {}
    tg.test_gb_invariants_random()
    done["GB invariants x200"] = True
    tg.test_saturation_idempotent_random()
    done["saturation idempotence x100"] = True
    tg.test_elimination_vanishes_on_parametrization()
    done["elimination vs parametrization x50"] = True
    tg.test_zero_dimensional_degree_vs_point_count_f7()
    done["dimension/degree vs F_7 count x50"] = True
    tt.test_round_trip_1000(QQ)
    tt.test_round_trip_1000(GF())
    done["parser round trip x1000"] = True

    reports = []
    for i in range(2):
        out = tmp_path / f"r{i}.json"
        cfg = cli.RunConfig("run-all", str(MODELS / "ternary_cubic.model"), json=True,
                            cache_dir=str(tmp_path / f"cache{i}"))
        with open(out, "w") as fh:
            assert cli.run(cfg, out=fh) == 0
        reports.append(out.read_bytes())
    done["run-all byte-identical"] = reports[0] == reports[1]
    json.loads(reports[0])
    record(8, all(done.values()), "; ".join(f"{k} {v}" for k, v in done.items()))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
