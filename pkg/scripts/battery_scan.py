"""Scan small connected quivers: route agreement, maximality, and the volume criterion."""

import argparse
import time

from quivercone import (
    has_positive_volume,
    hat_s_direct,
    hat_s_via_expansion,
    hat_s_via_leg,
    is_maximal_image,
    maximal_image_criterion,
    sufficient_volume_criterion,
)
from quivercone.battery import battery


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-vertices", type=int, default=3)
    p.add_argument("--max-arrows", type=int, default=3)
    p.add_argument("--max-total", type=int, default=6)
    p.add_argument("--expansion-total", type=int, default=4,
                   help="also compare the expansion route when sum(d) is at most this")
    args = p.parse_args()

    start = time.perf_counter()
    counts = dict(pairs=0, route_mismatch=0, expansion_checked=0, expansion_mismatch=0,
                  maximal=0, maximal_disagree=0, volume_positive=0, criterion_true=0,
                  criterion_violated=0)
    for q, d in battery(args.max_vertices, args.max_arrows, args.max_total):
        counts["pairs"] += 1
        direct = hat_s_direct(q, d)
        if direct != hat_s_via_leg(q, d):
            counts["route_mismatch"] += 1
            print(f"route mismatch: {q.arrows} d={d}")
        if sum(d) <= args.expansion_total:
            counts["expansion_checked"] += 1
            if direct != hat_s_via_expansion(q, d):
                counts["expansion_mismatch"] += 1
                print(f"expansion mismatch: {q.arrows} d={d}")
        maximal = is_maximal_image(q, d)
        counts["maximal"] += maximal
        counts["maximal_disagree"] += maximal != maximal_image_criterion(q, d)
        positive = has_positive_volume(q, d)
        counts["volume_positive"] += positive
        if sufficient_volume_criterion(q, d):
            counts["criterion_true"] += 1
            counts["criterion_violated"] += not positive
    for key, value in counts.items():
        print(f"{key}={value}")
    print(f"seconds={time.perf_counter() - start:.1f}")


if __name__ == "__main__":
    main()
