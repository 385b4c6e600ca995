# encoding=utf-8
"""
Knotoid diagrams as rotation systems on the sphere.

Every vertex has numbered slots in counterclockwise order; an edge joins two
(vertex, slot) pairs ("darts") and points from its source dart to its target dart
along the strand it belongs to.

Vertex kinds:

* endpoint: the tail or the head. Slot 0 is the main strand, slots 1.. are the
  shortcut arcs (none for a plain knotoid diagram, one for a shortcut diagram).
* crossing: four main slots; strands pass 0-2 and 1-3. ``over`` names the pair
  {over, over + 2} that passes over.
* flat: a crossingless intersection of the main strand (slots 0 and 2) with a
  shortcut (slots 1 and 3).

Sign conventions: a crossing is positive when the under-strand direction is the
over-strand direction turned a quarter counterclockwise. A shortcut intersection is
positive when the main strand crosses the shortcut from its right to its left, which
is the sign the crossing would have with the shortcut on top.
"""
from __future__ import print_function, division
import copy
import json
import logging

from .errors import KnotoidParseError, KnotoidValidationError, KnotoidGenericError
from .seqcalc import SignSequence


# Logger
log = logging.getLogger(__file__)

SCHEMA = 1

ENDPOINT = "endpoint"
CROSSING = "crossing"
FLAT = "flat"
KINDS = (ENDPOINT, CROSSING, FLAT)

TAIL = "tail"
HEAD = "head"

MAIN = "main"
SHORTCUT = "shortcut"


def opposite_slot(slot):
    """ Slot a strand leaves by after entering a four-valent vertex """
    return (slot + 2) % 4


def turn_sign(first_out, second_out):
    """ +1 when second_out is first_out turned a quarter counterclockwise """
    return 1 if second_out == (first_out + 1) % 4 else -1


class Vertex(object):
    """ A vertex of a rotation system """
    def __init__(self, vid, kind, degree=None, over=None, label=None):
        if kind not in KINDS:
            raise KnotoidGenericError("unknown vertex kind {!r}".format(kind))
        self.vid = vid
        self.kind = kind
        self.degree = degree if degree is not None else (1 if kind == ENDPOINT else 4)
        self.over = over
        self.label = label

    def as_dict(self):
        out = {"id": self.vid, "kind": self.kind, "slots": self.degree}
        if self.kind == CROSSING:
            out["over"] = self.over
        if self.kind == ENDPOINT:
            out["label"] = self.label
        return out

    def __repr__(self):
        extra = ""
        if self.kind == CROSSING:
            extra = " over={}".format(self.over)
        elif self.kind == ENDPOINT:
            extra = " {}".format(self.label)
        return "Vertex[{} {}{}]".format(self.vid, self.kind, extra)


class Edge(object):
    """ A directed edge between two darts; `arc` numbers shortcut arcs """
    def __init__(self, eid, strand, source, target, arc=0):
        self.eid = eid
        self.strand = strand
        self.source = tuple(source)
        self.target = tuple(target)
        self.arc = arc

    def other(self, dart):
        """ The dart at the other end """
        if dart == self.source:
            return self.target
        return self.source

    def as_dict(self):
        out = {"id": self.eid, "strand": self.strand,
               "source": list(self.source), "target": list(self.target)}
        if self.strand == SHORTCUT and self.arc:
            out["arc"] = self.arc
        return out

    def __repr__(self):
        return "Edge[{} {} {}->{}]".format(self.eid, self.strand, self.source, self.target)


class Passage(object):
    """ One pass of a strand through a vertex """
    def __init__(self, index, vid, in_slot, out_slot):
        self.index = index
        self.vid = vid
        self.in_slot = in_slot
        self.out_slot = out_slot

    def __repr__(self):
        return "Passage[{} v={} {}->{}]".format(self.index, self.vid, self.in_slot, self.out_slot)


# ---------------------------
# Validation report
# ---------------------------

class Violation(object):
    """ One failed invariant """
    def __init__(self, code, message, ids=()):
        self.code = code
        self.message = message
        self.ids = list(ids)

    def as_dict(self):
        return {"code": self.code, "message": self.message, "ids": self.ids}

    def __repr__(self):
        return "Violation[{}: {}]".format(self.code, self.message)


class ValidationReport(object):
    """ Result of validate(); truthy when the map is valid """
    def __init__(self):
        self.violations = []
        self.faces = None
        self.euler = None

    def add(self, code, message, ids=()):
        self.violations.append(Violation(code, message, ids))

    @property
    def valid(self):
        return not self.violations

    def __bool__(self):
        return self.valid

    __nonzero__ = __bool__

    def as_dict(self):
        return {"valid": self.valid, "faces": self.faces, "euler": self.euler,
                "violations": [v.as_dict() for v in self.violations]}

    def __str__(self):
        if self.valid:
            return "valid (F={}, V-E+F={})".format(self.faces, self.euler)
        return "invalid: " + "; ".join("{}: {}".format(v.code, v.message) for v in self.violations)


# ---------------------------
# Maps
# ---------------------------

class PlanarMap(object):
    """
    Common part of all diagrams: vertices, edges, dart lookup and face tracing.
    Maps are treated as immutable values once built.
    """
    # Number of shortcut arcs at each endpoint; None accepts any positive count
    SHORTCUT_ARCS = 0
    HAS_ENDPOINTS = True
    FORMAT_KIND = "knotoid"

    def __init__(self, vertices, edges, meta=None, free_loops=0):
        self.vertices = dict((v.vid, v) for v in vertices)
        self.edges = dict((e.eid, e) for e in edges)
        self.meta = dict(meta or {})
        self.free_loops = free_loops
        self._dart_edge = {}
        self._duplicate_darts = []
        for edge in self.edges.values():
            for dart in (edge.source, edge.target):
                if dart in self._dart_edge and self._dart_edge[dart] != edge.eid:
                    self._duplicate_darts.append(dart)
                self._dart_edge[dart] = edge.eid
        self._cache = {}

    # -------- lookup --------
    def vertex(self, vid):
        try:
            return self.vertices[vid]
        except KeyError:
            raise KnotoidGenericError("unknown vertex {}".format(vid))

    def edge_at(self, dart):
        """ Edge attached to the dart """
        return self.edges[self._dart_edge[tuple(dart)]]

    def opposite(self, dart):
        """ Dart at the far end of the edge attached to `dart` """
        return self.edge_at(dart).other(tuple(dart))

    def darts(self):
        out = []
        for vid in sorted(self.vertices):
            for slot in range(self.vertices[vid].degree):
                out.append((vid, slot))
        return out

    def kind_ids(self, kind):
        return sorted(v.vid for v in self.vertices.values() if v.kind == kind)

    def crossings(self):
        return self.kind_ids(CROSSING)

    def flats(self):
        return self.kind_ids(FLAT)

    def endpoint(self, label):
        for v in self.vertices.values():
            if v.kind == ENDPOINT and v.label == label:
                return v.vid
        raise KnotoidGenericError("map has no {} endpoint".format(label))

    def main_edges(self):
        return sorted(e.eid for e in self.edges.values() if e.strand == MAIN)

    def shortcut_edges(self):
        return sorted(e.eid for e in self.edges.values() if e.strand == SHORTCUT)

    def is_outgoing(self, dart):
        return self.edge_at(dart).source == tuple(dart)

    # -------- faces --------
    def next_face_dart(self, dart):
        """ Face permutation: cross the edge, then turn to the next slot counterclockwise """
        vid, slot = self.opposite(dart)
        return (vid, (slot + 1) % self.vertices[vid].degree)

    def faces(self):
        """ Face boundaries as lists of darts; the face lies right of each dart's edge """
        if "faces" not in self._cache:
            seen = set()
            faces = []
            for dart in self.darts():
                if dart in seen:
                    continue
                face = []
                cur = dart
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    cur = self.next_face_dart(cur)
                faces.append(face)
            self._cache["faces"] = faces
        return self._cache["faces"]

    def euler_characteristic(self):
        if not self.vertices:
            return 2
        return len(self.vertices) - len(self.edges) + len(self.faces())

    # -------- strands --------
    def _walk(self, start_dart):
        """
        Follow a strand from an outgoing dart, passing straight through four-valent
        vertices. Returns (passages, edge ids, final dart) and stops at an endpoint,
        at a repeated edge or at a malformed step.
        """
        passages = []
        edges = []
        seen = set()
        dart = start_dart
        while True:
            eid = self._dart_edge.get(dart)
            if eid is None or eid in seen:
                return passages, edges, dart
            seen.add(eid)
            edges.append(eid)
            edge = self.edges[eid]
            if edge.source != dart:
                return passages, edges, None
            vid, slot = edge.target
            vertex = self.vertices.get(vid)
            if vertex is None or vertex.kind == ENDPOINT:
                return passages, edges, edge.target
            out = opposite_slot(slot)
            passages.append(Passage(len(passages), vid, slot, out))
            dart = (vid, out)

    def passages(self):
        """ Passages of the main strand in order """
        if "passages" not in self._cache:
            self._cache["passages"] = self._main_walk()[0]
        return self._cache["passages"]

    def _main_walk(self):
        return self._walk((self.endpoint(TAIL), 0))

    def passages_at(self, vid):
        return [p for p in self.passages() if p.vid == vid]

    # -------- signs --------
    def crossing_sign(self, cid):
        """ Sign of a crossing, +1 or -1 """
        vertex = self.vertex(cid)
        if vertex.kind != CROSSING:
            raise KnotoidGenericError("vertex {} is not a crossing".format(cid))
        over_out = under_out = None
        for p in self.passages_at(cid):
            if p.out_slot % 2 == vertex.over:
                over_out = p.out_slot
            else:
                under_out = p.out_slot
        return turn_sign(over_out, under_out)

    def writhe(self):
        return sum(self.crossing_sign(c) for c in self.crossings())

    def sequential_sign(self, cid):
        """ +1 when the later passage is the earlier one turned counterclockwise """
        first, second = self.passages_at(cid)
        return turn_sign(first.out_slot, second.out_slot)

    def validate(self):
        raise NotImplementedError

    def require_valid(self):
        """ Raise KnotoidValidationError unless valid """
        report = self.validate()
        if not report.valid:
            raise KnotoidValidationError(report)
        return self

    # -------- serialization --------
    def as_dict(self):
        out = {
            "schema": SCHEMA,
            "kind": self.FORMAT_KIND,
            "vertices": [self.vertices[v].as_dict() for v in sorted(self.vertices)],
            "edges": [self.edges[e].as_dict() for e in sorted(self.edges)],
        }
        if self.free_loops:
            out["free_loops"] = self.free_loops
        if self.meta:
            out["meta"] = self.meta
        return out

    def to_json(self, indent=None):
        return json.dumps(self.as_dict(), sort_keys=True, indent=indent)

    def copy(self, **kwargs):
        """ Deep copy, optionally replacing meta or free_loops """
        return type(self)(copy.deepcopy(list(self.vertices.values())),
                          copy.deepcopy(list(self.edges.values())),
                          kwargs.get("meta", self.meta),
                          kwargs.get("free_loops", self.free_loops))

    def relabeled(self, vertex_map, slot_shift, edge_map):
        """
        Renamed copy: vertex ids through vertex_map, slot s of v becomes
        (s - slot_shift[v]) mod degree, edge ids through edge_map.
        """
        vertices = []
        for v in self.vertices.values():
            shift = slot_shift.get(v.vid, 0)
            over = None
            if v.kind == CROSSING:
                over = (v.over - shift) % 2
            vertices.append(Vertex(vertex_map[v.vid], v.kind, v.degree, over, v.label))

        def move(dart):
            vid, slot = dart
            deg = self.vertices[vid].degree
            return (vertex_map[vid], (slot - slot_shift.get(vid, 0)) % deg)

        edges = [Edge(edge_map[e.eid], e.strand, move(e.source), move(e.target), e.arc)
                 for e in self.edges.values()]
        return type(self)(vertices, edges, self.meta, self.free_loops)

    def canonical(self):
        """ Canonically relabeled copy; equal for isomorphic diagrams """
        if "canonical" not in self._cache:
            self._cache["canonical"] = _canonical_relabel(self)
        return self._cache["canonical"]

    def __repr__(self):
        return "{}[V={} E={} crossings={} flats={}]".format(
            type(self).__name__, len(self.vertices), len(self.edges),
            len(self.crossings()), len(self.flats()))


class KnotoidMap(PlanarMap):
    """ Knotoid diagram: a single main strand from the tail to the head """

    def arcs(self):
        """ Shortcut arc numbers present """
        return sorted(set(e.arc for e in self.edges.values() if e.strand == SHORTCUT))

    def validate(self):
        """ Check every map invariant; never raises """
        report = ValidationReport()
        _check_structure(self, report)
        if report.valid:
            _check_endpoints(self, report)
        if report.valid:
            _check_main_strand(self, report)
        if report.valid and self.SHORTCUT_ARCS != 0:
            _check_shortcuts(self, report)
        if report.valid:
            _check_sphere(self, report)
        return report

    def shortcut_walk(self, arc=0):
        """ Passages of a shortcut arc, tail to head """
        tail = self.endpoint(TAIL)
        slot = self._endpoint_slot(tail, arc)
        return self._walk((tail, slot))[0]

    def _endpoint_slot(self, vid, arc):
        for slot in range(1, self.vertices[vid].degree):
            edge = self.edge_at((vid, slot))
            if edge.arc == arc:
                return slot
        raise KnotoidGenericError("no shortcut arc {} at vertex {}".format(arc, vid))

    def flat_arc(self, fid):
        return self.edge_at((fid, 1)).arc

    def flat_sign(self, fid):
        """ Sign of a shortcut intersection along the main strand direction """
        passage, = self.passages_at(fid)
        return self.flat_sign_towards(fid, passage.out_slot)

    def flat_sign_towards(self, fid, main_out):
        """ Sign seen by a main traversal leaving the flat vertex by main_out """
        shortcut_out = 1 if self.is_outgoing((fid, 1)) else 3
        return turn_sign(shortcut_out, main_out)

    def seq(self, arc=None):
        """ Sign sequence along the main strand (restricted to one arc if given) """
        out = []
        for p in self.passages():
            if self.vertices[p.vid].kind != FLAT:
                continue
            if arc is not None and self.flat_arc(p.vid) != arc:
                continue
            out.append(self.flat_sign_towards(p.vid, p.out_slot))
        return SignSequence(out)

    def algebraic_height(self):
        return self.seq().total()

    def height(self):
        return len(self.flats())


class ShortcutMap(KnotoidMap):
    """ Knotoid diagram with one shortcut from the tail to the head """
    SHORTCUT_ARCS = 1
    FORMAT_KIND = "shortcut"


class MultiShortcutMap(ShortcutMap):
    """ Knotoid diagram carrying several disjoint shortcut arcs (lifted shortcuts) """
    SHORTCUT_ARCS = None
    FORMAT_KIND = "multishortcut"


class KnotMap(PlanarMap):
    """ Closed knot diagram; free_loops counts vertex-free circles """
    HAS_ENDPOINTS = False
    FORMAT_KIND = "knot"

    def _main_walk(self):
        """ All closed components; passages are listed component after component """
        passages = []
        seen = set()
        for eid in sorted(self.edges):
            if eid in seen:
                continue
            start = self.edges[eid].source
            walk, edges, _ = self._walk(start)
            seen.update(edges)
            for p in walk:
                passages.append(Passage(len(passages), p.vid, p.in_slot, p.out_slot))
        return passages, sorted(seen), None

    def components(self):
        """ Number of closed components, free loops included """
        seen = set()
        count = 0
        for eid in sorted(self.edges):
            if eid in seen:
                continue
            _, edges, _ = self._walk(self.edges[eid].source)
            seen.update(edges)
            count += 1
        return count + self.free_loops

    def validate(self):
        report = ValidationReport()
        _check_structure(self, report)
        if report.valid:
            for v in self.vertices.values():
                if v.kind != CROSSING:
                    report.add("kind", "closed diagrams hold only crossings", [v.vid])
            for e in self.edges.values():
                if e.strand != MAIN:
                    report.add("strand", "closed diagrams hold only main edges", [e.eid])
        if report.valid:
            for eid in sorted(self.edges):
                _, edges, last = self._walk(self.edges[eid].source)
                if last is None:
                    report.add("direction", "edge directions disagree along a component", [eid])
                    break
        if report.valid and self.components() != 1:
            report.add("components", "closed diagram has {} components".format(self.components()))
        if report.valid:
            _check_sphere(self, report)
        return report


# ---------------------------
# Validation helpers
# ---------------------------

def _check_structure(kmap, report):
    for v in kmap.vertices.values():
        if v.kind in (CROSSING, FLAT) and v.degree != 4:
            report.add("slots", "vertex {} needs 4 slots, has {}".format(v.vid, v.degree), [v.vid])
        if v.kind == CROSSING and v.over not in (0, 1):
            report.add("over", "crossing {} has no valid over pair".format(v.vid), [v.vid])
    for e in kmap.edges.values():
        if e.strand not in (MAIN, SHORTCUT):
            report.add("strand", "edge {} has unknown strand {!r}".format(e.eid, e.strand), [e.eid])
        for dart in (e.source, e.target):
            vertex = kmap.vertices.get(dart[0])
            if vertex is None or not 0 <= dart[1] < vertex.degree:
                report.add("dart", "edge {} uses missing dart {}".format(e.eid, dart), [e.eid])
    for dart in kmap._duplicate_darts:
        report.add("dart", "dart {} used by two edges".format(dart), [dart[0]])
    if not report.valid:
        return
    for dart in kmap.darts():
        if dart not in kmap._dart_edge:
            report.add("dart", "dart {} has no edge".format(dart), [dart[0]])
    if not report.valid:
        return
    for v in kmap.vertices.values():
        strands = [kmap.edge_at((v.vid, s)).strand for s in range(v.degree)]
        if v.kind == CROSSING and any(s != MAIN for s in strands):
            report.add("strand", "crossing {} touches a shortcut".format(v.vid), [v.vid])
        if v.kind == FLAT and strands != [MAIN, SHORTCUT, MAIN, SHORTCUT]:
            report.add("strand", "flat vertex {} must alternate main/shortcut from slot 0".format(v.vid),
                       [v.vid])
        if v.kind == ENDPOINT and (strands[0] != MAIN or any(s != SHORTCUT for s in strands[1:])):
            report.add("strand", "endpoint {} must hold main at slot 0, shortcuts after".format(v.vid),
                       [v.vid])


def _check_endpoints(kmap, report):
    ends = [v for v in kmap.vertices.values() if v.kind == ENDPOINT]
    labels = sorted(v.label for v in ends)
    if labels != [HEAD, TAIL]:
        report.add("endpoints", "expected one tail and one head, found {}".format(labels or "none"),
                   [v.vid for v in ends])
        return
    arcs = set(v.degree - 1 for v in ends)
    if len(arcs) != 1:
        report.add("endpoints", "endpoints carry different shortcut counts", [v.vid for v in ends])
        return
    count = arcs.pop()
    if kmap.SHORTCUT_ARCS is None:
        if count < 1:
            report.add("endpoints", "expected at least one shortcut arc", [v.vid for v in ends])
    elif count != kmap.SHORTCUT_ARCS:
        report.add("endpoints", "expected {} shortcut arcs at each endpoint, found {}".format(
            kmap.SHORTCUT_ARCS, count), [v.vid for v in ends])


def _check_main_strand(kmap, report):
    passages, edges, last = kmap._walk((kmap.endpoint(TAIL), 0))
    head = kmap.endpoint(HEAD)
    if last is None:
        report.add("direction", "main edge directions disagree with the strand", edges[-1:])
        return
    if last != (head, 0):
        report.add("main", "main strand does not run from tail to head", [last[0]])
        return
    missing = sorted(set(kmap.main_edges()) - set(edges))
    if missing:
        report.add("main", "main edges off the strand", missing)
    counts = {}
    for p in passages:
        counts[p.vid] = counts.get(p.vid, 0) + 1
        if kmap.vertices[p.vid].kind == FLAT and p.in_slot % 2:
            report.add("main", "main strand enters flat {} through a shortcut slot".format(p.vid), [p.vid])
    for v in kmap.vertices.values():
        want = {CROSSING: 2, FLAT: 1}.get(v.kind)
        if want is not None and counts.get(v.vid, 0) != want:
            report.add("main", "vertex {} passed {} times, expected {}".format(
                v.vid, counts.get(v.vid, 0), want), [v.vid])


def _check_shortcuts(kmap, report):
    tail = kmap.endpoint(TAIL)
    head = kmap.endpoint(HEAD)
    used = set()
    seen_arcs = set()
    for slot in range(1, kmap.vertices[tail].degree):
        arc = kmap.edge_at((tail, slot)).arc
        if arc in seen_arcs:
            report.add("shortcut", "arc {} leaves the tail twice".format(arc), [tail])
        seen_arcs.add(arc)
        passages, edges, last = kmap._walk((tail, slot))
        if last is None or last[0] != head:
            report.add("shortcut", "shortcut arc {} does not run from tail to head".format(arc), edges[-1:])
            continue
        for eid in edges:
            if kmap.edges[eid].arc != arc:
                report.add("shortcut", "edge {} changes arc label".format(eid), [eid])
        for p in passages:
            if kmap.vertices[p.vid].kind != FLAT:
                report.add("shortcut", "shortcut meets non-flat vertex {}".format(p.vid), [p.vid])
        used.update(edges)
    missing = sorted(set(kmap.shortcut_edges()) - used)
    if missing:
        report.add("shortcut", "shortcut edges off every arc", missing)


def _check_sphere(kmap, report):
    faces = kmap.faces() if kmap.vertices else []
    report.faces = len(faces) if kmap.vertices else 1
    report.euler = kmap.euler_characteristic()
    if report.euler != 2:
        report.add("euler", "V - E + F = {} (expected 2)".format(report.euler))


# ---------------------------
# Canonical labelling
# ---------------------------

def _labeling_from(kmap, root):
    """
    Relabel by a breadth-first traversal from a root dart: vertices are numbered in
    discovery order, each vertex's slots are rotated so the dart it was reached
    through comes first (for flats the main dart at or before it), and edges are
    numbered in order of their first dart.
    """
    vertex_map = {}
    slot_shift = {}
    order = []

    def discover(vid, slot):
        vertex = kmap.vertices[vid]
        if vertex.kind == FLAT:
            slot -= slot % 2
        elif vertex.kind == ENDPOINT:
            slot = 0
        vertex_map[vid] = len(order)
        slot_shift[vid] = slot
        order.append(vid)

    discover(*root)
    i = 0
    while i < len(order):
        vid = order[i]
        i += 1
        deg = kmap.vertices[vid].degree
        for k in range(deg):
            slot = (k + slot_shift[vid]) % deg
            w, t = kmap.opposite((vid, slot))
            if w not in vertex_map:
                discover(w, t)
    edge_map = {}
    for vid in order:
        deg = kmap.vertices[vid].degree
        for k in range(deg):
            eid = kmap.edge_at((vid, (k + slot_shift[vid]) % deg)).eid
            if eid not in edge_map:
                edge_map[eid] = len(edge_map)
    return kmap.relabeled(vertex_map, slot_shift, edge_map)


def _canonical_relabel(kmap):
    if kmap.HAS_ENDPOINTS:
        result = _labeling_from(kmap, (kmap.endpoint(TAIL), 0))
        # Arc numbers follow the counterclockwise order at the tail
        tail = result.endpoint(TAIL)
        renumber = dict((result.edge_at((tail, s)).arc, s - 1)
                        for s in range(1, result.vertices[tail].degree))
        for edge in result.edges.values():
            if edge.strand == SHORTCUT:
                edge.arc = renumber.get(edge.arc, edge.arc)
        result._cache = {}
        return result
    if not kmap.vertices:
        return kmap.copy()
    best = None
    for dart in kmap.darts():
        candidate = _labeling_from(kmap, dart)
        key = candidate.to_json()
        if best is None or key < best[0]:
            best = (key, candidate)
    return best[1]


# ---------------------------
# Editing
# ---------------------------

class MapBuilder(object):
    """
    Mutable scratch copy of a map. Moves and operations edit a builder and call
    build() to get a new immutable map.
    """
    def __init__(self, kmap=None):
        self.vertices = {}
        self.edges = {}
        self.free_loops = 0
        self.meta = {}
        self._dart_edge = {}
        if kmap is not None:
            for v in kmap.vertices.values():
                self.vertices[v.vid] = Vertex(v.vid, v.kind, v.degree, v.over, v.label)
            for e in kmap.edges.values():
                self._store(Edge(e.eid, e.strand, e.source, e.target, e.arc))
            self.free_loops = kmap.free_loops
            self.meta = dict(kmap.meta)

    def _store(self, edge):
        self.edges[edge.eid] = edge
        self._dart_edge[edge.source] = edge.eid
        self._dart_edge[edge.target] = edge.eid

    def new_vertex(self, kind, degree=None, over=None, label=None):
        vid = max(self.vertices) + 1 if self.vertices else 0
        self.vertices[vid] = Vertex(vid, kind, degree, over, label)
        return vid

    def add_edge(self, strand, source, target, arc=0):
        eid = max(self.edges) + 1 if self.edges else 0
        self._store(Edge(eid, strand, source, target, arc))
        return eid

    def remove_edge(self, eid):
        edge = self.edges.pop(eid)
        for dart in (edge.source, edge.target):
            if self._dart_edge.get(dart) == eid:
                del self._dart_edge[dart]
        return edge

    def remove_vertex(self, vid):
        """ Remove a vertex whose darts are already detached """
        return self.vertices.pop(vid)

    def edge_at(self, dart):
        return self.edges[self._dart_edge[tuple(dart)]]

    def route_edge(self, eid, start, via):
        """
        Replace edge `eid` by a path leaving dart `start` (one of its ends) and running
        through `via`, a list of (vid, slot towards start, slot away from start).
        Strand, arc and direction are kept. Returns the new edge ids in path order.
        """
        edge = self.remove_edge(eid)
        start = tuple(start)
        end = edge.other(start)
        forward = edge.source == start
        points = [start]
        for vid, near, far in via:
            points.append((vid, near))
            points.append((vid, far))
        points.append(end)
        new_ids = []
        for i in range(0, len(points), 2):
            a, b = points[i], points[i + 1]
            if forward:
                new_ids.append(self.add_edge(edge.strand, a, b, edge.arc))
            else:
                new_ids.append(self.add_edge(edge.strand, b, a, edge.arc))
        return new_ids

    def dissolve(self, vid, slot_a, slot_b):
        """
        Join the edges at two slots of a vertex into one, leaving both slots detached.
        Returns the new edge id, or None when the two slots were joined to each other
        (the strand closed into a free loop).
        """
        ea = self.edge_at((vid, slot_a))
        eb = self.edge_at((vid, slot_b))
        if ea.eid == eb.eid:
            self.remove_edge(ea.eid)
            self.free_loops += 1
            return None
        self.remove_edge(ea.eid)
        self.remove_edge(eb.eid)
        far_a = ea.other((vid, slot_a))
        far_b = eb.other((vid, slot_b))
        if ea.target == (vid, slot_a):
            return self.add_edge(ea.strand, far_a, far_b, ea.arc)
        return self.add_edge(eb.strand, far_b, far_a, eb.arc)

    def build(self, cls, meta=None):
        return cls(list(self.vertices.values()), list(self.edges.values()),
                   meta if meta is not None else self.meta, self.free_loops)


# --------------------
# Public API functions
# --------------------

_CLASSES = {
    "knotoid": KnotoidMap,
    "shortcut": ShortcutMap,
    "multishortcut": MultiShortcutMap,
    "knot": KnotMap,
}


def _locate(text, needle):
    """ (line, column) of the first occurrence of needle, else (1, 1) """
    pos = text.find(needle) if needle else -1
    if pos < 0:
        return 1, 1
    line = text.count("\n", 0, pos) + 1
    column = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, column


def _is_dart(dart):
    return len(dart) == 2 and all(isinstance(n, int) and not isinstance(n, bool) for n in dart)


def from_dict(data, text=""):
    """ Build a map from decoded fixture JSON; structural errors raise KnotoidParseError """
    def fail(message, needle=None):
        line, column = _locate(text, needle)
        raise KnotoidParseError(message, line, column)

    if not isinstance(data, dict):
        fail("diagram must be a JSON object")
    if data.get("schema", SCHEMA) != SCHEMA:
        fail("unsupported schema {!r}".format(data.get("schema")), '"schema"')
    for key in ("vertices", "edges"):
        if not isinstance(data.get(key), list):
            fail("missing list {!r}".format(key), '"{}"'.format(key) if key in data else None)
    vertices = []
    for raw in data["vertices"]:
        if not isinstance(raw, dict) or "id" not in raw or "kind" not in raw:
            fail("vertex record needs id and kind", '"vertices"')
        vid = raw["id"]
        needle = '"id": {}'.format(vid)
        kind = raw["kind"]
        if kind not in KINDS:
            fail("unknown vertex kind {!r}".format(kind), '"{}"'.format(kind))
        slots = raw.get("slots", 1 if kind == ENDPOINT else 4)
        if not isinstance(slots, int) or slots < 1:
            fail("bad slot count for vertex {}".format(vid), needle)
        if kind in (CROSSING, FLAT) and slots != 4:
            fail("{} vertex {} must have 4 slots, has {}".format(kind, vid, slots), needle)
        if kind == ENDPOINT and raw.get("label") not in (TAIL, HEAD):
            fail("endpoint {} needs label tail or head".format(vid), needle)
        if kind == CROSSING and raw.get("over") not in (0, 1):
            fail("crossing {} needs over 0 or 1".format(vid), needle)
        vertices.append(Vertex(vid, kind, slots, raw.get("over"), raw.get("label")))
    edges = []
    for raw in data["edges"]:
        try:
            source = tuple(raw["source"])
            target = tuple(raw["target"])
            eid = raw["id"]
        except (KeyError, TypeError):
            fail("edge record needs id, source and target", '"edges"')
        if not all(_is_dart(d) for d in (source, target)):
            fail("edge {} darts must be [vertex, slot] pairs".format(eid), '"id": {}'.format(eid))
        edges.append(Edge(eid, raw.get("strand", MAIN), source, target, raw.get("arc", 0)))
    kind = data.get("kind")
    if kind is None:
        has_shortcut = any(e.strand == SHORTCUT for e in edges)
        has_ends = any(v.kind == ENDPOINT for v in vertices)
        kind = "shortcut" if has_shortcut else ("knotoid" if has_ends else "knot")
    if kind not in _CLASSES:
        fail("unknown diagram kind {!r}".format(kind), '"kind"')
    return _CLASSES[kind](vertices, edges, data.get("meta"), data.get("free_loops", 0))


def parse(text):
    """ Parse fixture JSON text into a map (semantic checks are left to validate) """
    try:
        data = json.loads(text)
    except ValueError as err:
        raise KnotoidParseError("invalid JSON: {}".format(getattr(err, "msg", err)),
                                getattr(err, "lineno", 1), getattr(err, "colno", 1))
    return from_dict(data, text)


def serialize(kmap, indent=None):
    """ Canonical text: canonically relabeled, keys and records sorted """
    return kmap.canonical().to_json(indent)


def load(path):
    with open(path) as fobj:
        return parse(fobj.read())


def validate(kmap):
    return kmap.validate()


def crossing_sign(kmap, cid):
    return kmap.crossing_sign(cid)


def writhe(kmap):
    return kmap.writhe()


def seq(kmap):
    return kmap.seq()


def algebraic_height(kmap):
    return kmap.algebraic_height()


def framing(kmap):
    """ (writhe, algebraic height): equal pairs mean equal framings """
    return kmap.writhe(), kmap.algebraic_height()


def is_knot_type(kmap):
    """ The diagram's own shortcut misses the main strand """
    return isinstance(kmap, ShortcutMap) and not kmap.flats()
