# encoding=utf-8
"""
Lift a fixture to cyclic branched covers of increasing degree and print the
surviving crossings and lifted sign sequences.
"""
from __future__ import division, print_function
import logging
import argparse
from knotoid import load_fixture, lift_cover, index_polynomial


def main():
    """ Demo code """
    parser = argparse.ArgumentParser(description="Branched cover lifts of a fixture")
    parser.add_argument('-f', '--fixture', action="store", type=str, default="spiral", help="Fixture name.")
    parser.add_argument('-n', '--max-degree', action="store", type=int, default=4, help="Highest cover degree.")
    parser.add_argument('-v' , '--verbose', action="store_true", help="Verbose.")
    args = parser.parse_args()

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    kmap = load_fixture(args.fixture)
    print("{}: seq {} F {}".format(args.fixture, kmap.seq(), index_polynomial(kmap)))
    for n in range(1, args.max_degree + 1):
        result = lift_cover(kmap, n)
        seqs = " ".join(str(result.seq(arc)) or "()" for arc in range(n))
        print("n={} surviving={} stabilized={} seqs: {}".format(
            n, result.surviving, result.stabilized, seqs))


if __name__ == "__main__":
    main()
