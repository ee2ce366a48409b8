"""Print the inequality-indexing set tuples for the loop and subspace families."""

import argparse

from quivercone import hat_s_direct, loop_quiver, subspace_quiver
from quivercone.cone import sorted_tuples


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-loops", type=int, default=3)
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--max-subspaces", type=int, default=4)
    args = p.parse_args()

    for m in range(args.max_loops + 1):
        q = loop_quiver(m)
        for d in range(1, args.max_dim + 1):
            tuples = sorted_tuples(hat_s_direct(q, (d,)))
            print(f"loops={m} d={d} count={len(tuples)}: " + "  ".join(k.render(q.vertices) for k in tuples))

    for m in range(2, args.max_subspaces + 1):
        q = subspace_quiver(m)
        d = (1,) * m + (2,)
        tuples = sorted_tuples(hat_s_direct(q, d))
        print(f"\nsubspace m={m} d={d} count={len(tuples)} (3 + m + 2^m = {3 + m + 2**m})")
        for k in tuples:
            print("  " + k.render(q.vertices))


if __name__ == "__main__":
    main()
