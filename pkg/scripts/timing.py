"""Greedy matching time versus |X| on staircase and random profiles."""
import time

from sbcgraph import SbcProfile, greedy_induced_matching, random_sbc


def staircase(n: int) -> SbcProfile:
    return SbcProfile(1, n, 2, n + 1, tuple(range(2, n + 2)))


if __name__ == "__main__":
    print(f"{'n':>9} {'staircase s':>12} {'random s':>10} {'ns/vertex':>10}")
    for n in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6):
        out = []
        for p in (staircase(n), random_sbc(n, n)):
            t0 = time.perf_counter()
            greedy_induced_matching(p)
            out.append(time.perf_counter() - t0)
        print(f"{n:>9} {out[0]:>12.4f} {out[1]:>10.4f} {1e9 * out[0] / n:>10.1f}")
