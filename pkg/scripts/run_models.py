"""Run the full pipeline on every model in models/ and write JSON reports.

    python scripts/run_models.py [--field q] [--out reports/] [--check]

With --check, each report is compared to models/expected/<name>.json.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from mldsl import cli

ROOT = Path(__file__).resolve().parent.parent


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--models", type=Path, default=ROOT / "models")
    ap.add_argument("--out", type=Path, default=ROOT / "reports")
    ap.add_argument("--field", default=None)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--cache-dir", default=None)
    ap.add_argument("--check", action="store_true", help="compare against models/expected")
    args = ap.parse_args(argv)

    args.out.mkdir(parents=True, exist_ok=True)
    status = 0
    for model in sorted(args.models.glob("*.model")):
        argv = ["run-all", str(model), "--json", "--seed", str(args.seed)]
        if args.field:
            argv += ["--field", args.field]
        argv += ["--cache-dir", args.cache_dir] if args.cache_dir else ["--no-cache"]
        cfg = cli.config_from_args(cli.build_parser().parse_args(argv))
        target = args.out / f"{model.stem}.json"
        t0 = time.perf_counter()
        with open(target, "w") as fh:
            code = cli.run(cfg, out=fh)
        dt = time.perf_counter() - t0
        line = f"{model.stem:24s} exit={code} {dt:7.1f}s"
        if code == 0:
            rep = json.loads(target.read_text())
            line += f"  ml_degree={rep['ml_degree']}  dsl_generators={len(rep['artifacts']['dsl'])}"
            expected = args.models / "expected" / f"{model.stem}.json"
            if args.check and expected.exists():
                same = json.loads(expected.read_text()) == rep
                line += "  matches expected" if same else "  DIFFERS from expected"
                status |= 0 if same else 1
        else:
            status |= 1
        print(line, flush=True)
    return status


if __name__ == "__main__":
    sys.exit(main())
