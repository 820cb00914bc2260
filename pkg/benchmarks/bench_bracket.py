"""Time the compiled and pure-Python bracket kernels on the same diagrams.

    python3 benchmarks/bench_bracket.py [--max-crossings 48] [--strands 7] [--repeat 3]

Both kernels sweep the crossings with a frontier of open paths; the
compiled one rewires states in C and packs each count table into one
integer.  Results are checked to agree before timings are reported.
Wider braids give wider frontiers and more states per step.
"""

import argparse
import random
import timeit

from brunnlink import _bracket_py
from brunnlink._bracket import BACKEND, state_counts
from brunnlink.braids import BraidWord, closure


def diagrams(max_c, strands, rng):
    for c in range(8, max_c + 1, 4):
        word = tuple(rng.choice([i for i in range(-(strands - 1), strands) if i]) for _ in range(c))
        yield c, closure(BraidWord(strands, word))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-crossings", type=int, default=48)
    ap.add_argument("--strands", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if BACKEND != "compiled":
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
    print(f"{'crossings':>9} {'compiled s':>11} {'python s':>10} {'ratio':>7}")
    for c, d in diagrams(args.max_crossings, args.strands, random.Random(0)):
        quads = [x.arcs for x in d.crossings]
        assert state_counts(quads) == _bracket_py.state_counts(quads)
        tc = min(timeit.repeat(lambda: state_counts(quads), number=1, repeat=args.repeat))
        tp = min(timeit.repeat(lambda: _bracket_py.state_counts(quads), number=1, repeat=args.repeat))
        print(f"{c:>9} {tc:>11.5f} {tp:>10.5f} {tp / tc:>7.1f}")


if __name__ == "__main__":
    main()
