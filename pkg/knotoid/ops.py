# encoding=utf-8
"""
Knotoid operations: the basic involutions, multiplication, overpass and underpass
closures, and lifts to branched covers of the sphere.
"""
from __future__ import print_function, division
import itertools
import logging

from .canon import digest
from .diagram import (ENDPOINT, CROSSING, FLAT, TAIL, HEAD, MAIN, SHORTCUT, Edge, Vertex,
                      KnotMap, KnotoidMap, ShortcutMap, MultiShortcutMap, MapBuilder)
from .errors import KnotoidGenericError
from .invariants import intersection_index


# Logger
log = logging.getLogger(__file__)

REV = "rev"
MIR = "mir"
SYM = "sym"
ROT = "rot"
INVOLUTIONS = (REV, MIR, SYM, ROT)

OVER = "over"
UNDER = "under"


# ----------------------------
# Involutions
# ----------------------------

def _reverse(kmap):
    builder = MapBuilder(kmap)
    for v in builder.vertices.values():
        if v.kind == ENDPOINT:
            v.label = HEAD if v.label == TAIL else TAIL
    for edge in list(builder.edges.values()):
        builder.remove_edge(edge.eid)
        builder.add_edge(edge.strand, edge.target, edge.source, edge.arc)
    return builder.build(type(kmap))


def _mirror(kmap):
    builder = MapBuilder(kmap)
    for v in builder.vertices.values():
        if v.kind == CROSSING:
            v.over = 1 - v.over
    return builder.build(type(kmap))


def _symmetry(kmap):
    """ Reverse the orientation of the sphere: every rotation is read clockwise """
    def flip(dart):
        vid, slot = dart
        return (vid, (-slot) % kmap.vertices[vid].degree)

    vertices = [Vertex(v.vid, v.kind, v.degree, v.over, v.label) for v in kmap.vertices.values()]
    edges = [Edge(e.eid, e.strand, flip(e.source), flip(e.target), e.arc) for e in kmap.edges.values()]
    return type(kmap)(vertices, edges, kmap.meta, kmap.free_loops)


def involution(kmap, which):
    """ rev, mir, sym or rot = sym . mir """
    if which == REV:
        if not kmap.HAS_ENDPOINTS:
            raise KnotoidGenericError("rev needs a knotoid diagram")
        return _reverse(kmap)
    if which == MIR:
        return _mirror(kmap)
    if which == SYM:
        return _symmetry(kmap)
    if which == ROT:
        return _symmetry(_mirror(kmap))
    raise KnotoidGenericError("unknown involution {!r}".format(which))


def involution_group(kmap):
    """ Digests of the eight images under the group generated by rev, mir and sym """
    out = {}
    for use_rev, use_mir, use_sym in itertools.product((False, True), repeat=3):
        image = kmap
        name = []
        if use_rev:
            image = involution(image, REV)
            name.append(REV)
        if use_mir:
            image = involution(image, MIR)
            name.append(MIR)
        if use_sym:
            image = involution(image, SYM)
            name.append(SYM)
        out[".".join(name) or "id"] = digest(image)
    return out


# ----------------------------
# Helpers
# ----------------------------

def _shifted(kmap, vertex_offset, edge_offset):
    vmap = dict((v, v + vertex_offset) for v in kmap.vertices)
    emap = dict((e, e + edge_offset) for e in kmap.edges)
    return kmap.relabeled(vmap, {}, emap)


def _union(m1, m2):
    """ Builder holding both maps with m2's ids moved past m1's """
    shifted = _shifted(m2, max(m1.vertices or [-1]) + 1, max(m1.edges or [-1]) + 1)
    builder = MapBuilder(m1)
    for v in shifted.vertices.values():
        builder.vertices[v.vid] = Vertex(v.vid, v.kind, v.degree, v.over, v.label)
    for e in shifted.edges.values():
        builder._store(Edge(e.eid, e.strand, e.source, e.target, e.arc))
    builder.free_loops += shifted.free_loops
    return builder, shifted


def forget_shortcut(kmap):
    """ The underlying knotoid diagram: shortcut edges and flat vertices removed """
    if not isinstance(kmap, ShortcutMap):
        return kmap
    builder = MapBuilder(kmap)
    for eid in [e.eid for e in builder.edges.values() if e.strand == SHORTCUT]:
        builder.remove_edge(eid)
    for fid in kmap.flats():
        builder.dissolve(fid, 0, 2)
        builder.remove_vertex(fid)
    for v in builder.vertices.values():
        if v.kind == ENDPOINT:
            v.degree = 1
    return builder.build(KnotoidMap)


def restrict_shortcut(kmap, arc):
    """ Keep only one shortcut arc of a multi-shortcut diagram """
    builder = MapBuilder(kmap)
    for eid in [e.eid for e in builder.edges.values() if e.strand == SHORTCUT and e.arc != arc]:
        builder.remove_edge(eid)
    for fid in kmap.flats():
        if kmap.flat_arc(fid) != arc:
            builder.dissolve(fid, 0, 2)
            builder.remove_vertex(fid)
    for v in list(builder.vertices.values()):
        if v.kind != ENDPOINT:
            continue
        kept = [s for s in range(1, v.degree) if (v.vid, s) in builder._dart_edge]
        if len(kept) != 1:
            raise KnotoidGenericError("no shortcut arc {} at endpoint {}".format(arc, v.vid))
        edge = builder.remove_edge(builder.edge_at((v.vid, kept[0])).eid)
        moved = lambda d: (v.vid, 1) if d == (v.vid, kept[0]) else d
        builder.add_edge(SHORTCUT, moved(edge.source), moved(edge.target), 0)
        v.degree = 2
    for edge in builder.edges.values():
        if edge.strand == SHORTCUT:
            edge.arc = 0
    return builder.build(ShortcutMap)


# ----------------------------
# Product
# ----------------------------

def product(m1, m2):
    """
    Glue the head of m1 to the tail of m2. Shortcuts are concatenated when both
    diagrams carry one; otherwise the result is a plain knotoid diagram.
    """
    with_shortcut = isinstance(m1, ShortcutMap) and isinstance(m2, ShortcutMap)
    if not with_shortcut:
        m1 = forget_shortcut(m1)
        m2 = forget_shortcut(m2)
    builder, shifted = _union(m1, m2)
    head = m1.endpoint(HEAD)
    tail = shifted.endpoint(TAIL)
    slots = (0, 1) if with_shortcut else (0,)
    for slot in slots:
        incoming = builder.remove_edge(builder.edge_at((head, slot)).eid)
        outgoing = builder.remove_edge(builder.edge_at((tail, slot)).eid)
        builder.add_edge(incoming.strand, incoming.source, outgoing.target, 0)
    builder.remove_vertex(head)
    builder.remove_vertex(tail)
    cls = ShortcutMap if with_shortcut else KnotoidMap
    return builder.build(cls, meta={})


# ----------------------------
# Closures
# ----------------------------

def closure(kmap, mode=OVER):
    """
    Knot obtained by running the shortcut over (or under) the diagram: flat vertices
    become crossings and the endpoints are smoothed away.
    """
    if not isinstance(kmap, ShortcutMap):
        raise KnotoidGenericError("closure needs a shortcut diagram")
    if mode not in (OVER, UNDER):
        raise KnotoidGenericError("closure mode must be over or under, got {!r}".format(mode))
    builder = MapBuilder(kmap)
    for edge in list(builder.edges.values()):
        if edge.strand == SHORTCUT:
            builder.remove_edge(edge.eid)
            builder.add_edge(MAIN, edge.target, edge.source)
    for v in builder.vertices.values():
        if v.kind == FLAT:
            v.kind = CROSSING
            v.over = 1 if mode == OVER else 0
    for label in (HEAD, TAIL):
        vid = kmap.endpoint(label)
        builder.dissolve(vid, 0, 1)
        builder.remove_vertex(vid)
    return builder.build(KnotMap, meta={})


def connected_sum(k1, k2):
    """ Connected sum of two closed diagrams, joined along their lowest edges """
    if not k1.edges:
        return k2.copy(free_loops=k2.free_loops + k1.free_loops - 1)
    if not k2.edges:
        return k1.copy(free_loops=k1.free_loops + k2.free_loops - 1)
    builder, shifted = _union(k1, k2)
    e1 = builder.remove_edge(min(k1.edges))
    e2 = builder.remove_edge(min(shifted.edges))
    builder.add_edge(MAIN, e1.source, e2.target)
    builder.add_edge(MAIN, e2.source, e1.target)
    return builder.build(KnotMap, meta={})


# ----------------------------
# Lifts
# ----------------------------

class LiftResult(object):
    """
    Lift of a shortcut diagram to the n-fold cover branched over its endpoints.
    `lifted` carries the chosen lift of the main strand and the n lifted shortcut
    arcs, numbered counterclockwise around the tail.
    """
    def __init__(self, lifted, n, surviving, stabilized):
        self.lifted = lifted
        self.n = n
        self.surviving = surviving
        self.stabilized = stabilized

    def shortcut_map(self, arc=0):
        """ The lift with only lifted shortcut `arc` kept """
        return restrict_shortcut(self.lifted, arc % self.n)

    def knotoid_map(self):
        return forget_shortcut(self.shortcut_map(0))

    def seq(self, arc):
        return self.lifted.seq(arc % self.n)

    def __repr__(self):
        return "LiftResult[n={} crossings={} stabilized={}]".format(
            self.n, len(self.surviving), self.stabilized)


def lift_cover(kmap, n, start_sheet=0):
    """
    Lift to the n-fold branched cover. The sheet index goes up by one each time the
    main strand crosses the shortcut positively; lifted arc j separates sheets j - 1
    and j. The tail edge starts on `start_sheet`. Only self-crossings of the chosen
    lift survive; every other preimage arc is erased.
    """
    if not isinstance(kmap, ShortcutMap) or isinstance(kmap, MultiShortcutMap):
        raise KnotoidGenericError("lift_cover needs a shortcut diagram")
    if n < 1:
        raise KnotoidGenericError("cover degree must be positive")
    passages = kmap.passages()
    sheet = start_sheet
    sheets = {}
    flat_arc = {}
    for p in passages:
        if kmap.vertices[p.vid].kind == FLAT:
            sign = kmap.flat_sign_towards(p.vid, p.out_slot)
            after = sheet + sign
            flat_arc[p.vid] = max(sheet, after) % n
            sheet = after
        else:
            sheets.setdefault(p.vid, []).append(sheet % n)
    end_sheet = sheet
    surviving = sorted(c for c, s in sheets.items() if s[0] == s[1])

    vertices = []
    tail = kmap.endpoint(TAIL)
    head = kmap.endpoint(HEAD)
    tail_slot = dict(((start_sheet + k) % n, k) for k in range(1, n + 1))
    head_slot = dict(((end_sheet - (k - 1)) % n, k) for k in range(1, n + 1))
    for vid in (tail, head):
        v = kmap.vertices[vid]
        vertices.append(Vertex(vid, ENDPOINT, n + 1, None, v.label))
    for cid in surviving:
        vertices.append(Vertex(cid, CROSSING, 4, kmap.vertices[cid].over))
    for fid in flat_arc:
        vertices.append(Vertex(fid, FLAT, 4))

    edges = []
    prev = (tail, 0)
    for p in passages:
        if p.vid in flat_arc or p.vid in surviving:
            edges.append(Edge(len(edges), MAIN, prev, (p.vid, p.in_slot)))
            prev = (p.vid, p.out_slot)
    edges.append(Edge(len(edges), MAIN, prev, (head, 0)))

    along_shortcut = kmap.shortcut_walk(0)
    for arc in range(n):
        prev = (tail, tail_slot[arc])
        for p in along_shortcut:
            if flat_arc[p.vid] == arc:
                edges.append(Edge(len(edges), SHORTCUT, prev, (p.vid, p.in_slot), arc))
                prev = (p.vid, p.out_slot)
        edges.append(Edge(len(edges), SHORTCUT, prev, (head, head_slot[arc]), arc))

    lifted = MultiShortcutMap(vertices, edges, {})
    lifted.require_valid()
    indices = dict((c, intersection_index(kmap, c)) for c in kmap.crossings())
    stabilized = all(indices[c] == 0 for c in surviving)
    log.info("Lift by %s keeps %s of %s crossings", n, len(surviving), len(indices))
    return LiftResult(lifted, n, surviving, stabilized)


def stabilize(kmap):
    """ Lift far enough that only index-zero crossings survive """
    indices = [abs(intersection_index(kmap, c)) for c in kmap.crossings()]
    return lift_cover(kmap, 1 + max(indices or [0]))
