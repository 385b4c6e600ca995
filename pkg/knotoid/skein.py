# encoding=utf-8
"""
Bracket polynomial by skein expansion.

An independent evaluator used to check the state sum in `invariants`: crossings are
resolved one at a time on an explicit stack, coefficients are sympy expressions and
the circles of a fully resolved diagram are the connected components of a dart graph.
"""
from __future__ import print_function, division
from collections import deque
import logging

import networkx as nx
import sympy as sp

from .diagram import CROSSING, FLAT, MAIN
from .laurent import Laurent1, A, LOOP


# Logger
log = logging.getLogger(__file__)


def _resolved_components(kmap, resolution):
    """ Components of the dart graph once every crossing has a resolution """
    graph = nx.Graph()
    for edge in kmap.edges.values():
        if edge.strand == MAIN:
            graph.add_edge(edge.source, edge.target)
    for vertex in kmap.vertices.values():
        vid = vertex.vid
        if vertex.kind == FLAT:
            graph.add_edge((vid, 0), (vid, 2))
        elif vertex.kind == CROSSING:
            o = vertex.over
            if resolution[vid] == "A":
                joins = ((o + 1, o + 2), (o + 3, o))
            else:
                joins = ((o, o + 1), (o + 2, o + 3))
            for x, y in joins:
                graph.add_edge((vid, x % 4), (vid, y % 4))
    return nx.number_connected_components(graph)


def _circles(kmap, resolution):
    count = _resolved_components(kmap, resolution) + kmap.free_loops
    # The interval of a knotoid, or one circle of a closed diagram, is not counted
    return count - 1


def skein_bracket(kmap):
    """ Bracket polynomial as a Laurent1 in A """
    crossings = kmap.crossings()
    stack = deque([({}, sp.Integer(1))])
    polynomial = sp.Integer(0)
    while stack:
        resolution, coefficient = stack.pop()
        pending = [c for c in crossings if c not in resolution]
        if pending:
            crossing = pending[0]
            smooth_a = dict(resolution)
            smooth_a[crossing] = "A"
            smooth_b = dict(resolution)
            smooth_b[crossing] = "B"
            stack.append((smooth_a, coefficient * A))
            stack.append((smooth_b, coefficient * A ** -1))
        else:
            polynomial += coefficient * LOOP ** _circles(kmap, resolution)
    return to_laurent(sp.expand(polynomial))


def to_laurent(expr):
    """ Wrap a sympy Laurent polynomial in A """
    return Laurent1.from_expr(expr, "A")
