"""Compute the data singular locus over Q and modulo a prime and compare.

    python scripts/dsl_over_q.py models/ternary_cubic.model [--prime 2147483647]
"""

import argparse
import time

from mldsl.groebner import same_variety
from mldsl.mlpipeline import build_context
from mldsl.polyring import GF, QQ
from mldsl.textio import parse_model, render_ideal


def main(argv=None):
    ap = argparse.ArgumentParser(description="DSL over Q vs GF(p)")
    ap.add_argument("model")
    ap.add_argument("--prime", type=int, default=2147483647)
    args = ap.parse_args(argv)

    with open(args.model, "rb") as fh:
        raw = fh.read()
    results = {}
    for field in (QQ, GF(args.prime)):
        t0 = time.perf_counter()
        D = build_context(parse_model(raw, default_field=field)).F_DSL
        results[field.spec] = D
        print(f"[{field.spec}] {time.perf_counter() - t0:.1f}s")
        print(render_ideal(D))
    Dq, Dp = results["q"], results[GF(args.prime).spec]
    print("reduction agrees:", same_variety(Dq.change_field(Dp.ring.field), Dp))


if __name__ == "__main__":
    main()
