"""Seeded sweep of the fast profile routines against brute force.

    python3 scripts/oracle_sweep.py --seeds 1000 --max-nx 8 --max-vertices 12
"""
import argparse
import time
from collections import Counter
from dataclasses import dataclass, fields

from sbcgraph import (GapParams, brute_force_d, brute_force_inm, d_recursive, greedy_induced_matching,
                      betti_support_sbc, hochster_support, profile_to_graph, random_sbc)


@dataclass
class SweepConfig:
    seeds: int = 500
    first_seed: int = 0
    max_nx: int = 8
    max_vertices: int = 12
    jump_prob: float = 0.4
    max_jump: int = 3
    check_d: bool = True
    hochster_below: int = 10


def sweep(cfg: SweepConfig) -> Counter:
    params = GapParams(jump_prob=cfg.jump_prob, max_jump=cfg.max_jump, max_vertices=cfg.max_vertices)
    tally: Counter = Counter()
    for seed in range(cfg.first_seed, cfg.first_seed + cfg.seeds):
        nx_ = 1 + seed % cfg.max_nx
        try:
            p = random_sbc(seed, nx_, params)
        except ValueError:
            tally["skipped"] += 1
            continue
        g = profile_to_graph(p)
        tally["instances"] += 1
        tally[f"inm={greedy_induced_matching(p).m}"] += 1
        if greedy_induced_matching(p).m != brute_force_inm(g)[0]:
            tally["inm mismatch"] += 1
            print("inm mismatch at seed", seed, p)
        if cfg.check_d and d_recursive(p) != brute_force_d(g)[0]:
            tally["d mismatch"] += 1
            print("d mismatch at seed", seed, p)
        if p.num_vertices <= cfg.hochster_below:
            tally["hochster checked"] += 1
            if betti_support_sbc(p).positions != hochster_support(g, 2).positions:
                tally["support mismatch"] += 1
                print("support mismatch at seed", seed, p)
    return tally


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    for f in fields(SweepConfig):
        flag = "--" + f.name.replace("_", "-")
        if f.type in (bool, "bool"):
            ap.add_argument(flag, action=argparse.BooleanOptionalAction, default=f.default)
        else:
            kind = {"int": int, "float": float}.get(f.type, f.type)
            ap.add_argument(flag, type=kind, default=f.default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    t0 = time.perf_counter()
    tally = sweep(cfg)
    for k in sorted(tally):
        print(f"{k:20s} {tally[k]}")
    print(f"elapsed {time.perf_counter() - t0:.1f}s")
