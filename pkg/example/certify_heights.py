# encoding=utf-8
"""
Print a table of certified signed heights for the built-in knotoid fixtures.
"""
from __future__ import division, print_function
import logging
import time
import argparse
from knotoid import load_fixture, fixture_names, certify_heights, KnotMap
from knotoid.config import Budget


def fmt(value):
    if isinstance(value, list):
        return "[{},{}]".format(*value)
    return str(value)


def main():
    """ Demo code """
    parser = argparse.ArgumentParser(description="Certify signed heights of the fixtures")
    parser.add_argument('-c', '--crossings', action="store", type=int, default=None, help="Extra crossings budget.")
    parser.add_argument('-s', '--states', action="store", type=int, default=2000, help="Diagrams to visit.")
    parser.add_argument('-v' , '--verbose', action="store_true", help="Verbose.")
    args = parser.parse_args()

    if args.verbose:
        logging.basicConfig(level=logging.INFO)
    else:
        logging.basicConfig(level=logging.WARN)

    print("{:16} {:8} {:8} {:8} {:8} {:>8} {:>8}".format(
        "fixture", "status", "h+", "h-", "seqs", "visited", "seconds"))
    for name in fixture_names():
        kmap = load_fixture(name)
        if isinstance(kmap, KnotMap):
            continue
        overrides = {"max_states": args.states}
        if args.crossings is not None:
            overrides["max_crossings"] = len(kmap.crossings()) + args.crossings
        budget = Budget.for_map(kmap, **overrides)
        t0 = time.time()
        result = certify_heights(kmap, budget, debug=args.verbose)
        seqs = ",".join(sorted(str(s) for s in result.minimal_sequences)) or "-"
        print("{:16} {:8} {:8} {:8} {:8} {:8} {:8.2f}".format(
            name, result.status, fmt(result.h_plus), fmt(result.h_minus), seqs,
            result.search.visited, time.time() - t0))


if __name__ == "__main__":
    main()
