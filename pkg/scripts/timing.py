"""Time `verify` over a range for a few --jobs values and confirm identical output."""

import argparse
import time

from cubeperm.cli import cmd_verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=1000)
    ap.add_argument("--scope", default="all")
    ap.add_argument("--jobs", type=int, nargs="+", default=[1, 2, 4])
    args = ap.parse_args()
    outputs = {}
    for j in args.jobs:
        t0 = time.perf_counter()
        outputs[j], code = cmd_verify(args.scope, args.max_p, "json", j)
        print(f"jobs={j}: {time.perf_counter() - t0:.2f}s exit={code}")
    print("identical:", len(set(outputs.values())) == 1)


if __name__ == "__main__":
    main()
