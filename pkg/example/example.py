"""
Example of using the knotoid library
"""
from __future__ import division, print_function
import logging
import sys
from knotoid import (load_fixture, fixture_names, index_polynomial, n_writhes, normalized_bracket,
                     normalized_turaev, height_lower_bounds, involution, KnotMap, KnotoidGenericError)
from knotoid.ops import INVOLUTIONS


def main():
    """ Demo code """
    import argparse
    parser = argparse.ArgumentParser(description="Knotoid invariants example")
    parser.add_argument('-f', '--fixture', action="store", type=str, default="kinoshita",
                        help="Fixture: {}.".format(", ".join(fixture_names())))
    parser.add_argument('-v' , '--verbose', action="store_true", help="Verbose.")
    args = parser.parse_args()

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    try:
        kmap = load_fixture(args.fixture)
    except KnotoidGenericError as err:
        print("Error: {}".format(err))
        sys.exit(1)

    print("Diagram           :", kmap)
    if isinstance(kmap, KnotMap):
        print("Normalized bracket:", normalized_bracket(kmap))
        return

    print("Sign sequence     :", kmap.seq())
    print("Index polynomial  :", index_polynomial(kmap))
    print("n-writhes         :", n_writhes(kmap))
    print("Normalized bracket:", normalized_bracket(kmap))
    turaev = normalized_turaev(kmap)
    print("Normalized Turaev :", turaev)
    print("Height bounds     :", height_lower_bounds(kmap, turaev))

    print("Involutions:")
    for kind in INVOLUTIONS:
        image = involution(kmap, kind)
        print("  {:4} seq {:8} F {}".format(kind, str(image.seq()), index_polynomial(image)))


if __name__ == "__main__":
    main()
