# encoding=utf-8
"""
Built-in example diagrams shipped as package data, and small diagram builders.

Each fixture file is a shortcut (or closed knot) diagram in the JSON format of
:mod:`knotoid.diagram`. Knotoid fixtures carry the values they are expected to
produce under ``meta.expected``.
"""
from __future__ import print_function, division
import logging

import pkg_resources

from .diagram import parse, MapBuilder, ShortcutMap, ENDPOINT, MAIN, SHORTCUT, TAIL, HEAD
from .errors import KnotoidGenericError


# Logger
log = logging.getLogger(__file__)

PREFIX = "fixture:"
_DATA_DIR = "fixtures"
_SUFFIX = ".json"


def fixture_names():
    """ Names of the built-in fixtures, sorted """
    names = []
    for entry in pkg_resources.resource_listdir(__name__.rsplit(".", 1)[0], _DATA_DIR):
        if entry.endswith(_SUFFIX):
            names.append(entry[:-len(_SUFFIX)])
    return sorted(names)


def fixture_text(name):
    if name not in fixture_names():
        raise KnotoidGenericError("unknown fixture '{}' (known: {})".format(
            name, ", ".join(fixture_names())))
    package = __name__.rsplit(".", 1)[0]
    raw = pkg_resources.resource_string(package, "{}/{}{}".format(_DATA_DIR, name, _SUFFIX))
    return raw.decode("utf-8")


def load_fixture(name):
    """ Parse a built-in fixture by name """
    kmap = parse(fixture_text(name))
    log.debug("Loaded fixture %s: %s", name, kmap)
    return kmap


def expected(name):
    """ The expected invariant values recorded in a fixture (may be empty) """
    return dict(load_fixture(name).meta.get("expected", {}))


def is_fixture_ref(ref):
    return ref.startswith(PREFIX)


def resolve_text(ref, stdin=None):
    """
    Text behind an input reference: ``fixture:<name>``, ``-`` for stdin, or a path.
    """
    if is_fixture_ref(ref):
        return fixture_text(ref[len(PREFIX):])
    if ref == "-":
        if stdin is None:
            import sys
            stdin = sys.stdin
        return stdin.read()
    with open(ref) as fobj:
        return fobj.read()


# --------------------
# Builders
# --------------------

def trivial_shortcut():
    """ The trivial knotoid with its straight shortcut """
    builder = MapBuilder()
    tail = builder.new_vertex(ENDPOINT, 2, label=TAIL)
    head = builder.new_vertex(ENDPOINT, 2, label=HEAD)
    builder.add_edge(MAIN, (tail, 0), (head, 0))
    builder.add_edge(SHORTCUT, (tail, 1), (head, 1))
    return builder.build(ShortcutMap, meta={"name": "trivial"})


def kinked(kmap, signs, edge=None):
    """
    Add one kink per entry of `signs` (+1/-1) to a main edge of kmap, each on the
    newest main edge so kinks line up along the strand.
    """
    from .moves import apply_move, MoveSite, R1_PLUS, R1_MINUS, LEFT

    for sign in signs:
        eid = edge if edge is not None else max(kmap.main_edges())
        kind = R1_PLUS if sign > 0 else R1_MINUS
        kmap = apply_move(kmap, MoveSite(kind, (eid, LEFT)))
        edge = None
    return kmap
