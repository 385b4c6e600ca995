# encoding=utf-8
"""
Reidemeister and shortcut moves on shortcut diagrams, bounded breadth-first
exploration of the diagrams they reach, and signed-height certification.

Moves are local surgeries on the rotation system:

* R1+/R1-: add a kink of the given sign on a main edge, on its left or right.
* R2: push a main edge across another main edge of a common face.
* R3: slide a strand across the crossing opposite a triangular face.
* S1: swing the shortcut once around an endpoint.
* S2: push a main edge across a shortcut edge (or the reverse) in a common face.
* S3: slide the shortcut across the crossing opposite a triangular face.

and the inverse moves R1undo, R2undo and S1undo/S2undo that remove monogon and
bigon faces.
"""
from __future__ import print_function, division
from collections import deque
import logging
import time

from .canon import CanonicalTable, canonical_key, isomorphic
from .config import Budget
from .diagram import ENDPOINT, CROSSING, FLAT, TAIL, HEAD, MAIN, MapBuilder, MultiShortcutMap
from .errors import KnotoidMoveError, KnotoidConsistencyError
from .invariants import height_lower_bounds
from .seqcalc import shift_connected


# Logger
log = logging.getLogger(__file__)

R1_PLUS = "R1+"
R1_MINUS = "R1-"
R1_UNDO = "R1undo"
R2 = "R2"
R2_UNDO = "R2undo"
R3 = "R3"
S1 = "S1"
S1_UNDO = "S1undo"
S2 = "S2"
S2_UNDO = "S2undo"
S3 = "S3"
KINDS = (R1_PLUS, R1_MINUS, R1_UNDO, R2, R2_UNDO, R3, S1, S1_UNDO, S2, S2_UNDO, S3)

LEFT = "left"
RIGHT = "right"

EXACT = "exact"
INTERVAL = "interval"


class MoveSite(object):
    """ Where and how a move applies """
    def __init__(self, kind, location, variant=None):
        self.kind = kind
        self.location = location
        self.variant = variant

    def key(self):
        return (KINDS.index(self.kind), repr(self.location), repr(self.variant))

    def __eq__(self, other):
        return isinstance(other, MoveSite) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "MoveSite[{} at {} {}]".format(self.kind, self.location, self.variant or "")


# ----------------------------
# Site discovery
# ----------------------------

def _face_vertices(kmap, face):
    return [d[0] for d in face]


def _is_crossing_over(kmap, vid, slot):
    """ Does the strand through `slot` pass over at crossing vid """
    return slot % 2 == kmap.vertices[vid].over


def _polygon(kmap, face):
    """
    Sides of a face: for each dart (X, s) the edge runs to (Y, t) and the next dart
    is (Y, t + 1). Returns [(X, s, Y, t, edge)].
    """
    sides = []
    for dart in face:
        edge = kmap.edge_at(dart)
        far = edge.other(dart)
        sides.append((dart[0], dart[1], far[0], far[1], edge))
    return sides


def _outer_clear(kmap, vids, darts):
    """ The edges at `darts` lead away from the vertex set and are pairwise distinct """
    seen = set()
    for dart in darts:
        if dart[1] >= kmap.vertices[dart[0]].degree:
            return False
        edge = kmap.edge_at(dart)
        if edge.eid in seen or edge.other(dart)[0] in vids:
            return False
        seen.add(edge.eid)
    return True


def _r1_sites(kmap):
    sites = []
    for eid in kmap.main_edges():
        for side in (LEFT, RIGHT):
            sites.append(MoveSite(R1_PLUS, (eid, side)))
            sites.append(MoveSite(R1_MINUS, (eid, side)))
    return sites


def _r1_undo_sites(kmap):
    sites = []
    for face in kmap.faces():
        if len(face) != 1:
            continue
        vid, slot = face[0]
        if kmap.vertices[vid].kind != CROSSING:
            continue
        rest = [s for s in range(4) if s not in (slot, (slot - 1) % 4)]
        if kmap.edge_at((vid, rest[0])).eid == kmap.edge_at((vid, rest[1])).eid:
            continue
        sites.append(MoveSite(R1_UNDO, vid))
    return sites


def _finger_sites(kmap):
    """ R2 and S2 creations: ordered dart pairs on a common face """
    sites = []
    for face in kmap.faces():
        for d1 in face:
            e1 = kmap.edge_at(d1)
            for d2 in face:
                e2 = kmap.edge_at(d2)
                if e1.eid == e2.eid:
                    continue
                if e1.strand == MAIN and e2.strand == MAIN:
                    for pushed_over in (True, False):
                        sites.append(MoveSite(R2, (d1, d2), "over" if pushed_over else "under"))
                elif e1.strand != e2.strand:
                    sites.append(MoveSite(S2, (d1, d2)))
    return sites


def _bigon_sites(kmap):
    sites = []
    for face in kmap.faces():
        if len(face) != 2:
            continue
        (x, s, y, t, e1), (_, t1, _, s2, e2) = _polygon(kmap, face)
        if x == y or e1.eid == e2.eid:
            continue
        kinds = (kmap.vertices[x].kind, kmap.vertices[y].kind)
        if kinds == (CROSSING, CROSSING):
            if _is_crossing_over(kmap, x, s) != _is_crossing_over(kmap, y, t):
                continue
            outer = [(x, (s + 2) % 4), (x, (s2 + 2) % 4), (y, (t + 2) % 4), (y, (t1 + 2) % 4)]
            if _outer_clear(kmap, (x, y), outer):
                sites.append(MoveSite(R2_UNDO, tuple(sorted((x, y)))))
        elif kinds == (FLAT, FLAT):
            if kmap.flat_sign(x) == kmap.flat_sign(y):
                continue
            outer = [(x, (s + 2) % 4), (x, (s2 + 2) % 4), (y, (t + 2) % 4), (y, (t1 + 2) % 4)]
            if _outer_clear(kmap, (x, y), outer):
                sites.append(MoveSite(S2_UNDO, tuple(sorted((x, y)))))
        elif ENDPOINT in kinds and FLAT in kinds:
            flat = x if kinds[0] == FLAT else y
            end = y if flat == x else x
            near = [d[1] for d in ((x, s), (y, t), (y, t1), (x, s2)) if d[0] == flat]
            outer = [(flat, (slot + 2) % 4) for slot in near]
            if _outer_clear(kmap, (flat, end), outer):
                sites.append(MoveSite(S1_UNDO, (flat, end)))
    return sites


def _triangle_sites(kmap):
    sites = []
    for face in kmap.faces():
        if len(face) != 3:
            continue
        sides = _polygon(kmap, face)
        vids = [side[0] for side in sides]
        if len(set(vids)) != 3 or len(set(side[4].eid for side in sides)) != 3:
            continue
        kinds = sorted(kmap.vertices[v].kind for v in vids)
        if kinds not in ([CROSSING] * 3, [CROSSING, FLAT, FLAT]):
            continue
        outer = []
        for x, s, y, t, _ in sides:
            outer.append((x, (s + 2) % 4))
            outer.append((y, (t + 2) % 4))
        if not _outer_clear(kmap, vids, outer):
            continue
        if kinds == [CROSSING] * 3:
            over_both = sum(1 for x, s, y, t, _ in sides
                            if _is_crossing_over(kmap, x, s) and _is_crossing_over(kmap, y, t))
            if over_both == 1:
                sites.append(MoveSite(R3, tuple(face)))
        elif kinds == [CROSSING, FLAT, FLAT]:
            sites.append(MoveSite(S3, tuple(face)))
    return sites


def _s1_sites(kmap):
    sites = []
    for label in (TAIL, HEAD):
        vid = kmap.endpoint(label)
        for side in (LEFT, RIGHT):
            sites.append(MoveSite(S1, vid, side))
    return sites


def enumerate_moves(kmap):
    """ Every applicable move site, in a deterministic order """
    sites = _r1_sites(kmap) + _r1_undo_sites(kmap) + _finger_sites(kmap)
    sites += _bigon_sites(kmap) + _triangle_sites(kmap)
    if kmap.SHORTCUT_ARCS == 1:
        sites += _s1_sites(kmap)
    else:
        sites = [s for s in sites if not s.kind.startswith("S")]
    return sorted(set(sites), key=MoveSite.key)


# ----------------------------
# Surgery
# ----------------------------

def _reattach(builder, dart, new_dart):
    """ Move the end of the edge at `dart` to `new_dart` """
    edge = builder.remove_edge(builder.edge_at(dart).eid)
    source = new_dart if edge.source == dart else edge.source
    target = new_dart if edge.target == dart else edge.target
    return builder.add_edge(edge.strand, source, target, edge.arc)


def _bridge(builder, dart_a, dart_b):
    """ Replace the edges at two darts by one edge joining their far ends """
    ea = builder.remove_edge(builder.edge_at(dart_a).eid)
    eb = builder.remove_edge(builder.edge_at(dart_b).eid)
    if ea.target == dart_a:
        return builder.add_edge(ea.strand, ea.source, eb.target, ea.arc)
    return builder.add_edge(ea.strand, eb.source, ea.target, ea.arc)


def _apply_r1(kmap, site):
    eid, side = site.location
    edge = kmap.edges[eid]
    builder = MapBuilder(kmap)
    if side == LEFT:
        loop, exit_slot = (2, 3), 1
        over = 1 if site.kind == R1_PLUS else 0
    else:
        loop, exit_slot = (2, 1), 3
        over = 0 if site.kind == R1_PLUS else 1
    cid = builder.new_vertex(CROSSING, 4, over)
    builder.remove_edge(eid)
    builder.add_edge(MAIN, edge.source, (cid, 0))
    builder.add_edge(MAIN, (cid, loop[0]), (cid, loop[1]))
    builder.add_edge(MAIN, (cid, exit_slot), edge.target)
    return builder


def _apply_r1_undo(kmap, site):
    cid = site.location
    builder = MapBuilder(kmap)
    loop = [e for e in kmap.edges.values() if e.source[0] == cid and e.target[0] == cid]
    builder.remove_edge(loop[0].eid)
    used = (loop[0].source[1], loop[0].target[1])
    rest = [s for s in range(4) if s not in used]
    builder.dissolve(cid, rest[0], rest[1])
    builder.remove_vertex(cid)
    return builder


def _apply_finger(kmap, site):
    """
    Push the edge of d1 into the face across the edge of d2, creating two vertices.
    Slots before normalisation: pushed strand on 1-3, crossed strand on 0-2.
    """
    d1, d2 = site.location
    e1 = kmap.edge_at(d1)
    e2 = kmap.edge_at(d2)
    builder = MapBuilder(kmap)
    if site.kind == R2:
        kind = CROSSING
        over = 1 if site.variant == "over" else 0
        shift = 0
    else:
        kind = FLAT
        over = None
        # Main strand must sit on the even slots of a flat vertex
        shift = 1 if e1.strand == MAIN else 0

    def slot(k):
        return (k - shift) % 4

    c1 = builder.new_vertex(kind, 4, over)
    c2 = builder.new_vertex(kind, 4, over)
    builder.route_edge(e1.eid, d1, [(c1, slot(1), slot(3)), (c2, slot(3), slot(1))])
    builder.route_edge(e2.eid, d2, [(c2, slot(0), slot(2)), (c1, slot(0), slot(2))])
    return builder


def _apply_bigon_undo(kmap, site):
    x, y = site.location
    builder = MapBuilder(kmap)
    inner = [e for e in kmap.edges.values()
             if set((e.source[0], e.target[0])) == set((x, y))]
    pairs = []
    for edge in inner:
        xs = edge.source[1] if edge.source[0] == x else edge.target[1]
        ys = edge.source[1] if edge.source[0] == y else edge.target[1]
        pairs.append(((x, (xs + 2) % 4), (y, (ys + 2) % 4)))
        builder.remove_edge(edge.eid)
    for dart_x, dart_y in pairs:
        _bridge(builder, dart_x, dart_y)
    builder.remove_vertex(x)
    builder.remove_vertex(y)
    return builder


def _apply_s1(kmap, site):
    vid = site.location
    builder = MapBuilder(kmap)
    fid = builder.new_vertex(FLAT, 4)
    builder.route_edge(kmap.edge_at((vid, 0)).eid, (vid, 0), [(fid, 0, 2)])
    if site.variant == LEFT:
        via = [(fid, 3, 1)]
    else:
        via = [(fid, 1, 3)]
    builder.route_edge(kmap.edge_at((vid, 1)).eid, (vid, 1), via)
    return builder


def _apply_s1_undo(kmap, site):
    fid, end = site.location
    builder = MapBuilder(kmap)
    near = [slot for slot in range(4) if kmap.opposite((fid, slot))[0] == end]
    main_near = [slot for slot in near if slot % 2 == 0][0]
    short_near = [slot for slot in near if slot % 2 == 1][0]
    builder.remove_edge(kmap.edge_at((fid, main_near)).eid)
    builder.remove_edge(kmap.edge_at((fid, short_near)).eid)
    _reattach(builder, (fid, (main_near + 2) % 4), (end, 0))
    _reattach(builder, (fid, (short_near + 2) % 4), (end, 1))
    builder.remove_vertex(fid)
    return builder


def _apply_triangle(kmap, site):
    """
    Reverse the order of the three vertices along each side strand. Every vertex
    keeps its rotation; its slots facing the triangle now face outwards.
    """
    sides = _polygon(kmap, list(site.location))
    builder = MapBuilder(kmap)
    plans = []
    for x, s, y, t, edge in sides:
        x_out = (x, (s + 2) % 4)
        y_out = (y, (t + 2) % 4)
        far_x = kmap.opposite(x_out)
        far_y = kmap.opposite(y_out)
        forward = edge.source == (x, s)
        plans.append((edge, x_out, y_out, far_x, far_y, (x, s), (y, t), forward))
    for edge, x_out, y_out, _, _, _, _, _ in plans:
        builder.remove_edge(edge.eid)
        builder.remove_edge(builder.edge_at(x_out).eid)
        builder.remove_edge(builder.edge_at(y_out).eid)
    for edge, x_out, y_out, far_x, far_y, x_side, y_side, forward in plans:
        path = [(far_x, y_side), (y_out, x_out), (x_side, far_y)]
        for a, b in path:
            if forward:
                builder.add_edge(edge.strand, a, b, edge.arc)
            else:
                builder.add_edge(edge.strand, b, a, edge.arc)
    return builder


_APPLY = {
    R1_PLUS: _apply_r1,
    R1_MINUS: _apply_r1,
    R1_UNDO: _apply_r1_undo,
    R2: _apply_finger,
    S2: _apply_finger,
    R2_UNDO: _apply_bigon_undo,
    S2_UNDO: _apply_bigon_undo,
    R3: _apply_triangle,
    S3: _apply_triangle,
    S1: _apply_s1,
    S1_UNDO: _apply_s1_undo,
}


def apply_move(kmap, site, check=True):
    """ Apply a site from enumerate_moves(kmap); stale sites are rejected """
    if check and site not in set(enumerate_moves(kmap)):
        raise KnotoidMoveError("{} does not apply to this diagram".format(site))
    builder = _APPLY[site.kind](kmap, site)
    result = builder.build(type(kmap), meta={})
    report = result.validate()
    if not report.valid:
        raise KnotoidConsistencyError("{} produced an invalid diagram: {}".format(site, report))
    return result


# ----------------------------
# Exploration
# ----------------------------

class ExploreResult(object):
    """ What a bounded search saw """
    def __init__(self, budget):
        self.budget = budget
        self.visited = 0
        self.sequences = set()
        self.min_height = None
        self.min_plus = None
        self.min_minus = None
        self.best_sequences = set()
        self.best_diagrams = []
        self.partial = False
        self.elapsed = 0.0

    def observe(self, kmap):
        seq = kmap.seq()
        self.sequences.add(seq)
        self.visited += 1
        if self.min_plus is None or seq.h_plus < self.min_plus:
            self.min_plus = seq.h_plus
        if self.min_minus is None or seq.h_minus < self.min_minus:
            self.min_minus = seq.h_minus
        if self.min_height is None or seq.h < self.min_height:
            self.min_height = seq.h
            self.best_sequences = set([seq])
            self.best_diagrams = [kmap]
        elif seq.h == self.min_height:
            if seq not in self.best_sequences:
                self.best_diagrams.append(kmap)
            self.best_sequences.add(seq)

    def merge(self, other):
        """ Fold in a search started from some of this one's diagrams """
        self.visited += other.visited
        self.sequences |= other.sequences
        for attr in ("min_plus", "min_minus"):
            mine, theirs = getattr(self, attr), getattr(other, attr)
            if theirs is not None and (mine is None or theirs < mine):
                setattr(self, attr, theirs)
        if other.min_height is None:
            return
        if self.min_height is None or other.min_height < self.min_height:
            self.min_height = other.min_height
            self.best_sequences = set(other.best_sequences)
            self.best_diagrams = list(other.best_diagrams)
        elif other.min_height == self.min_height:
            for kmap in other.best_diagrams:
                if kmap.seq() not in self.best_sequences:
                    self.best_diagrams.append(kmap)
                    self.best_sequences.add(kmap.seq())
            self.best_sequences |= other.best_sequences

    def as_dict(self):
        return {
            "visited": self.visited,
            "partial": self.partial,
            "min_height": self.min_height,
            "sequences": sorted(str(s) for s in self.sequences),
            "minimal_sequences": sorted(str(s) for s in self.best_sequences),
            "budget": self.budget.as_dict(),
        }

    def __repr__(self):
        return "ExploreResult[visited={} min_height={} partial={}]".format(
            self.visited, self.min_height, self.partial)


class Explorer(object):
    """
    Breadth-first search over shortcut diagrams reachable by moves, restricted to
    the budget. Diagrams are deduplicated by canonical form.
    """
    def __init__(self, budget, debug=False):
        self.budget = budget
        self.debug = debug

    def _dbg(self, msg, *args):
        if self.debug:
            log.info(msg, *args)

    def _within(self, kmap):
        return (len(kmap.crossings()) <= self.budget.max_crossings and
                len(kmap.flats()) <= self.budget.max_height)

    def run(self, seeds, stop=None):
        """
        Explore from one or more diagrams. `stop(result)` may end the search early;
        the result is then marked partial like a budget exhaustion.
        """
        if not isinstance(seeds, (list, tuple)):
            seeds = [seeds]
        start = time.time()
        result = ExploreResult(self.budget)
        table = CanonicalTable()
        queue = deque()
        for seed in seeds:
            if table.add(seed):
                queue.append(seed)
                result.observe(seed)
        while queue:
            if stop is not None and stop(result):
                result.partial = True
                break
            kmap = queue.popleft()
            for site in enumerate_moves(kmap):
                if site.kind in (R1_PLUS, R1_MINUS, R2) and \
                        len(kmap.crossings()) + (2 if site.kind == R2 else 1) > self.budget.max_crossings:
                    continue
                if site.kind in (S1, S2) and \
                        len(kmap.flats()) + (2 if site.kind == S2 else 1) > self.budget.max_height:
                    continue
                reached = apply_move(kmap, site, check=False)
                if not self._within(reached) or not table.add(reached):
                    continue
                # A new diagram past the limit: the level is not exhausted
                if result.visited >= self.budget.max_states:
                    result.partial = True
                    queue.clear()
                    break
                result.observe(reached)
                self._dbg("Reached %s via %s (seq %s)", len(table), site, reached.seq())
                queue.append(reached)
        result.elapsed = time.time() - start
        if result.partial:
            log.warning("Search stopped after {} diagrams; results are partial".format(result.visited))
        return result


def explore(kmap, budget=None, stop=None, debug=False):
    """ Bounded BFS from kmap (or a list of diagrams of one knotoid) """
    seeds = kmap if isinstance(kmap, (list, tuple)) else [kmap]
    if budget is None:
        budget = Budget.for_map(seeds[0])
    return Explorer(budget, debug=debug).run(seeds, stop)


# ----------------------------
# Certification
# ----------------------------

class CertifyResult(object):
    """ Signed heights as exact values or [lower, upper] intervals """
    def __init__(self, bounds, search, rotatable):
        self.bounds = bounds
        self.search = search
        self.upper_plus = search.min_plus
        self.upper_minus = search.min_minus
        self.minimal_sequences = set(search.best_sequences)
        self.rotatable = rotatable
        if (self.upper_plus, self.upper_minus) == bounds.as_tuple():
            self.status = EXACT
        else:
            self.status = INTERVAL

    @property
    def exact(self):
        return self.status == EXACT

    @property
    def h_plus(self):
        if self.exact:
            return self.upper_plus
        return [self.bounds.lower_plus, self.upper_plus]

    @property
    def h_minus(self):
        if self.exact:
            return self.upper_minus
        return [self.bounds.lower_minus, self.upper_minus]

    @property
    def height(self):
        if self.exact:
            return self.upper_plus + self.upper_minus
        return [sum(self.bounds.as_tuple()), self.upper_plus + self.upper_minus]

    def as_dict(self):
        return {
            "status": self.status,
            "h_plus": self.h_plus,
            "h_minus": self.h_minus,
            "height": self.height,
            "minimal_sequences": sorted(str(s) for s in self.minimal_sequences),
            "bounds": self.bounds.as_dict(),
            "rotatable": self.rotatable,
            "search": self.search.as_dict(),
        }

    def __repr__(self):
        return "CertifyResult[{} h+={} h-={}]".format(self.status, self.h_plus, self.h_minus)


def certify_heights(kmap, budget=None, debug=False, workers=1):
    """
    Combine polynomial lower bounds with the best diagrams a bounded search finds.
    Exact only when both meet. Once the search reaches the bounds it stops widening
    and finishes the minimal height level from the best diagrams, so the reported
    minimal sequences are every one reachable at that height.

    A multi-shortcut diagram seeds the search with one diagram per shortcut.
    """
    from .ops import involution, restrict_shortcut, ROT

    if isinstance(kmap, MultiShortcutMap):
        seeds = [restrict_shortcut(kmap, arc) for arc in kmap.arcs()]
    else:
        seeds = [kmap]
    if budget is None:
        budget = Budget.for_map(seeds[0])
    bounds = height_lower_bounds(seeds[0], guard=budget.max_state_crossings, workers=workers)
    index_tight = bounds.source_plus in ("index", "none") and bounds.source_minus in ("index", "none")

    def met(result):
        return (result.min_plus, result.min_minus) == bounds.as_tuple()

    search = Explorer(budget, debug=debug).run(seeds, stop=met)
    if search.min_plus < bounds.lower_plus or search.min_minus < bounds.lower_minus:
        raise KnotoidConsistencyError("search found heights ({}, {}) below the bounds {}".format(
            search.min_plus, search.min_minus, bounds.as_tuple()))
    if search.partial and met(search):
        level = Budget(budget.max_crossings, search.min_height, budget.max_states,
                       budget.max_state_crossings)
        rest = Explorer(level, debug=debug).run(search.best_diagrams)
        search.merge(rest)
        search.partial = rest.partial
        log.info("Minimal level of height %s holds %s sequences", search.min_height,
                 len(search.best_sequences))
    rotatable = isomorphic(seeds[0], involution(seeds[0], ROT))
    result = CertifyResult(bounds, search, rotatable)
    if result.exact:
        _check_exact(result, index_tight)
    return result


def _check_exact(result, index_tight):
    plus, minus = result.upper_plus, result.upper_minus
    if result.search.min_height != plus + minus:
        raise KnotoidConsistencyError("minimal height {} is not {} + {}".format(
            result.search.min_height, plus, minus))
    for seq in result.minimal_sequences:
        if (seq.h_plus, seq.h_minus) != (plus, minus):
            raise KnotoidConsistencyError("minimal sequence {} has the wrong signed counts".format(seq))
    if not shift_connected(result.minimal_sequences):
        raise KnotoidConsistencyError("minimal sequences are not shift-connected")
    if index_tight and len(result.minimal_sequences) != 1:
        raise KnotoidConsistencyError("index bounds are tight but {} minimal sequences were found".format(
            len(result.minimal_sequences)))
    if result.rotatable and (plus + minus) % 2:
        raise KnotoidConsistencyError("rotatable diagram certified with odd height")


def move_key(kmap):
    """ Canonical key of a diagram, exposed for tests comparing move results """
    return canonical_key(kmap)
