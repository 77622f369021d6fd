"""Print the count tables d(n,k), d_n and i_n next to the published values."""

import argparse

from wmat.enumeration import count_dn, count_in, count_in_compositions, dnk_table, generate_irreducible

PUBLISHED_DN = [1, 2, 6, 26, 150, 1082, 9366, 94586, 1091670, 14174522, 204495126]
PUBLISHED_IN = [1, 2, 2, 10, 66, 538, 5170, 59906, 704226, 9671930, 145992338]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--filter-up-to", type=int, default=7, help="count irreducibles by direct filtering up to n")
    args = parser.parse_args()

    print("d(n,k):")
    for n, row in enumerate(dnk_table(min(args.max_n, 8))):
        print(f"  n={n}: " + " ".join(str(x) for x in row))

    print("\n n          d_n   published          i_n   compositions    filtered   published")
    for n in range(args.max_n + 1):
        filtered = "" if n > args.filter_up_to or n == 0 else sum(1 for _ in generate_irreducible(n))
        pub_d = PUBLISHED_DN[n] if n < len(PUBLISHED_DN) else ""
        pub_i = PUBLISHED_IN[n] if n < len(PUBLISHED_IN) else ""
        flag = "  <-- differs" if pub_i != "" and pub_i != count_in(n) else ""
        print(
            f"{n:>2} {count_dn(n):>12} {pub_d:>11} {count_in(n):>12} {count_in_compositions(n):>14}"
            f" {filtered!s:>11} {pub_i:>11}{flag}"
        )


if __name__ == "__main__":
    main()
