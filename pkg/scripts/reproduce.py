"""Run the three named constructions end to end and save their reports.

    python3 scripts/reproduce.py [--out results/] [--t 2 3 4]
"""
import argparse
import io
import json
import time
from contextlib import redirect_stdout
from pathlib import Path

from sbcgraph.cli import main


def run(argv):
    buf = io.StringIO()
    t0 = time.perf_counter()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue(), time.perf_counter() - t0


def summary(rep: dict) -> str:
    keys = ("n", "inm", "d", "reg", "projdim", "top_corner", "extremal", "unique_extremal",
            "vanishing_at_top_corner", "initial_equals_h0_doubleprime", "initial_components")
    return ", ".join(f"{k}={rep[k]}" for k in keys if k in rep)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--t", type=int, nargs="*", default=[2])
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    jobs = [("h0", ["reproduce", "h0"]), ("g0", ["reproduce", "g0"])]
    jobs += [(f"g0t_{t}", ["reproduce", "g0t", "--t", str(t)]) for t in args.t]
    for name, argv in jobs:
        code, out, dt = run(argv)
        (args.out / f"{name}.json").write_text(out)
        print(f"{name:8s} exit={code} {dt:6.2f}s  {summary(json.loads(out))}")
