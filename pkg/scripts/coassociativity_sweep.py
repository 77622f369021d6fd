"""Check coassociativity on random packed words of each length, several seeds."""

import argparse
import random
import time

from wmat.algebra import coproduct_left, coproduct_right, coproduct_word
from wmat.verify import random_packed_word


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-len", type=int, default=7)
    parser.add_argument("--words", type=int, default=200, help="random words per length")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    for n in range(1, args.max_len + 1):
        t0 = time.perf_counter()
        bad = 0
        terms = 0
        for _ in range(args.words):
            w = random_packed_word(rng, n)
            d = coproduct_word(w)
            lhs = coproduct_left(d)
            terms += len(lhs)
            bad += lhs != coproduct_right(d)
        print(f"length {n}: {args.words} words, {bad} failures, {terms / args.words:.0f} avg 3-tensor terms, "
              f"{time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
