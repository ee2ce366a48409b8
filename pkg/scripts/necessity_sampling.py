"""Sample representations on the battery and report the worst inequality slack per quiver."""

import argparse
import time

from quivercone.battery import battery
from quivercone.numeric import FIELDS, necessity_oracle


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-total", type=int, default=5)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true", help="one line per (quiver, d, field)")
    args = p.parse_args()

    start = time.perf_counter()
    worst = {f: float("inf") for f in FIELDS}
    failures = 0
    for n, (q, d) in enumerate(battery(max_total=args.max_total)):
        for field in FIELDS:
            rep = necessity_oracle(q, d, args.samples, field, seed=args.seed + n)
            worst[field] = min(worst[field], rep.min_slack)
            failures += not rep.passed
            if args.verbose:
                print(f"{q.arrows} d={d} field={field} min_slack={rep.min_slack:.3e} "
                      f"max_abs_trace={rep.max_abs_trace:.2e}")
    for field, value in worst.items():
        print(f"worst_slack[{field}]={value:.3e}")
    print(f"failures={failures}")
    print(f"seconds={time.perf_counter() - start:.1f}")


if __name__ == "__main__":
    main()
