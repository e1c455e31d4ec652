"""Search for simple orderings of every k-subset of Z_v minus J with nonzero sum.

Prints the number of subsets checked and any subset with no simple ordering.
"""
import argparse
import itertools

from heffter.verifier import NotFound, find_simple_ordering


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--v", type=int, default=20)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--k", type=int, default=4)
    args = p.parse_args()
    step = args.v // args.t
    elems = [x for x in range(1, args.v) if x % step]
    checked = 0
    for T in itertools.combinations(elems, args.k):
        if sum(T) % args.v == 0:
            continue
        checked += 1
        try:
            find_simple_ordering(T, args.v, bound=max(12, args.k))
        except NotFound:
            print("no simple ordering:", T)
    print(f"checked {checked} subsets of size {args.k} in Z_{args.v} \\ J (|J|={args.t})")


if __name__ == "__main__":
    main()
