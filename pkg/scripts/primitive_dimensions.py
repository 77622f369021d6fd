"""Dimensions of the primitive spaces by length, with the size of each linear system."""

import argparse
import time

from wmat.primitives import primitive_basis


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-grade", type=int, default=4)
    args = parser.parse_args()
    print("grade  cols  rows  rank  dim  seconds")
    for n in range(1, args.max_grade + 1):
        t0 = time.perf_counter()
        pb = primitive_basis(n)
        print(f"{n:>5} {pb.cols:>5} {pb.rows:>5} {pb.cols - pb.dim:>5} {pb.dim:>4} {time.perf_counter() - t0:8.2f}")


if __name__ == "__main__":
    main()
