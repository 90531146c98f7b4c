"""Time the Groebner stage under grevlex and grlex on a fixed corpus.

Usage: python3 benchmarks/orders.py [repeats]
"""

import sys
import time

from s3recog.groebner import buchberger
from s3recog.polycore import GREVLEX, GRLEX
from s3recog.presentation import parse_presentation
from s3recog.repvar import representation_ideal

CORPUS = {
    "sphere, genus 2": "gens: a b ; rels: a, b",
    "trefoil": "gens: a b ; rels: a^2 b^-3",
    "torus": "gens: a b ; rels: a b a^-1 b^-1",
    "trivial, two relators": "gens: a b ; rels: a b a^-1 b^-2, b a b^-1 a^-2",
    "trivial, AK(2)": "gens: a b ; rels: a b a b^-1 a^-1 b^-1, a^3 b^-2",
    "trivial, AK(3)": "gens: a b ; rels: a b a b^-1 a^-1 b^-1, a^4 b^-3",
    "Poincare sphere": "gens: a b ; rels: a b a b a^-3, a b a b b^-5",
    "Brieskorn (2,3,7)": "gens: a b ; rels: a b a b a^-3, a b a b b^-7",
}


def best_time(ideal, repeats):
    best, basis = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        basis = buchberger(ideal)
        best = min(best, time.perf_counter() - t0)
    return best, basis


def main(repeats=3):
    print(f"{'presentation':<24}{'grevlex s':>11}{'size':>6}{'grlex s':>11}{'size':>6}")
    totals = {GREVLEX: 0.0, GRLEX: 0.0}
    for name, text in CORPUS.items():
        row = [f"{name:<24}"]
        for order in (GREVLEX, GRLEX):
            ideal = representation_ideal(parse_presentation(text), order).working
            seconds, basis = best_time(ideal, repeats)
            totals[order] += seconds
            row.append(f"{seconds:>11.4f}{len(basis):>6}")
        print("".join(row))
    print(f"{'total':<24}{totals[GREVLEX]:>11.4f}{'':>6}{totals[GRLEX]:>11.4f}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)
