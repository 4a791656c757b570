"""ML degree of a model for a range of seeds, with per-seed timings.

    python scripts/ml_degree_seeds.py models/determinantal_cubic.model --seeds 10
"""

import argparse
import time

from mldsl.mlpipeline import build_context
from mldsl.polyring import field_from_spec
from mldsl.textio import parse_model


def main(argv=None):
    ap = argparse.ArgumentParser(description="ML degree across seeds")
    ap.add_argument("model")
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--field", default=None)
    args = ap.parse_args(argv)

    field = field_from_spec(args.field) if args.field else None
    with open(args.model, "rb") as fh:
        ctx = build_context(parse_model(fh.read(), default_field=field))
    t0 = time.perf_counter()
    ctx.F_E
    print(f"extended correspondence: {time.perf_counter() - t0:.1f}s")
    degrees = []
    for seed in range(args.seeds):
        t0 = time.perf_counter()
        d = ctx.ml_degree(seed)
        degrees.append(d)
        print(f"seed {seed}: ml_degree={d} ({time.perf_counter() - t0:.2f}s)")
    print("stable" if len(set(degrees)) == 1 else f"UNSTABLE: {sorted(set(degrees))}")


if __name__ == "__main__":
    main()
