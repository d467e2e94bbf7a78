"""Tabulate R mod 2 against (h(-p)+1)/2 mod 2 for primes p = 7 mod 12.

R is the number of quadratic residues below p/2. The two columns would have
to agree for the parity shortcut to hold; mismatches are printed.
"""

import argparse

from cubeperm.binform import class_number, half_range_residue_counts, parity_step_comparison
from cubeperm.modular import primes_between


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=500)
    args = ap.parse_args()
    print("p,R,h,R_mod_2,half_h_plus_1_mod_2,match")
    mismatches = 0
    for p in primes_between(7, args.max_p):
        if p % 12 != 7:
            continue
        R, _ = half_range_residue_counts(p)
        left, right = parity_step_comparison(p)
        mismatches += left != right
        print(f"{p},{R},{class_number(p)},{left},{right},{int(left == right)}")
    print(f"# mismatches: {mismatches}")


if __name__ == "__main__":
    main()
