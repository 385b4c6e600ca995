# encoding=utf-8
"""
Polynomial and integer invariants of knotoid diagrams: intersection indices,
n-writhes, the index and affine index polynomials, the bracket and Turaev state
sums and the signed-height lower bounds they give.
"""
from __future__ import print_function, division
import logging
from concurrent.futures import ProcessPoolExecutor

import sympy as sp

from .config import state_sum_guard
from .diagram import (CROSSING, FLAT, ENDPOINT, TAIL, MAIN, KnotMap, KnotoidMap, ShortcutMap,
                      turn_sign)
from .errors import KnotoidBudgetError, KnotoidConsistencyError, KnotoidGenericError
from .laurent import Laurent1, Laurent2, PLUS, MINUS, A, U, T, LOOP, signed_degree, minus_a_power


# Logger
log = logging.getLogger(__file__)

# Smoothing pairings relative to the over pair {o, o + 2}
_A_PAIRS = ((1, 2), (3, 0))
_B_PAIRS = ((0, 1), (2, 3))


class CrossingData(object):
    """ Sign, sequential sign and intersection index of one crossing """
    def __init__(self, cid, sign, ssgn, index):
        self.cid = cid
        self.sign = sign
        self.ssgn = ssgn
        self.index = index

    @property
    def w(self):
        return self.sign * self.ssgn * self.index

    def as_dict(self):
        return {"id": self.cid, "sign": self.sign, "ssgn": self.ssgn, "index": self.index}

    def __repr__(self):
        return "CrossingData[{} sign={} ssgn={} ind={}]".format(
            self.cid, self.sign, self.ssgn, self.index)


class WritheTable(object):
    """ n -> J_n for nonzero n; absent entries are zero """
    def __init__(self, values=None):
        self.values = dict((n, j) for n, j in (values or {}).items() if j != 0 and n != 0)

    def __getitem__(self, n):
        return self.values.get(n, 0)

    def __eq__(self, other):
        if not isinstance(other, WritheTable):
            return NotImplemented
        return self.values == other.values

    def __ne__(self, other):
        return not self == other

    def __add__(self, other):
        out = dict(self.values)
        for n, j in other.values.items():
            out[n] = out.get(n, 0) + j
        return WritheTable(out)

    def as_dict(self):
        return dict((str(n), self.values[n]) for n in sorted(self.values))

    def __repr__(self):
        return "WritheTable({})".format(dict(sorted(self.values.items())))


class BoundsReport(object):
    """ Lower bounds for the signed heights and where each came from """
    def __init__(self, lower_plus, lower_minus, source_plus, source_minus):
        self.lower_plus = lower_plus
        self.lower_minus = lower_minus
        self.source_plus = source_plus
        self.source_minus = source_minus

    def as_tuple(self):
        return (self.lower_plus, self.lower_minus)

    def as_dict(self):
        return {"lower_plus": self.lower_plus, "lower_minus": self.lower_minus,
                "source_plus": self.source_plus, "source_minus": self.source_minus}

    def __repr__(self):
        return "BoundsReport[+{} ({}) -{} ({})]".format(
            self.lower_plus, self.source_plus, self.lower_minus, self.source_minus)


class State(object):
    """ One state of the state sum with its derived counts """
    def __init__(self, choice, n, loops, a):
        self.choice = choice
        self.n = n
        self.loops = loops
        self.a = a

    def __repr__(self):
        return "State[n={} loops={} a={}]".format(self.n, self.loops, self.a)


# ----------------------------
# Intersection index and writhes
# ----------------------------

def _require_knotoid(kmap):
    if not isinstance(kmap, KnotoidMap):
        raise KnotoidGenericError("{} has no endpoints".format(type(kmap).__name__))


def intersection_index(kmap, cid):
    """
    Algebraic intersection number of the loop cut off by smoothing crossing `cid`
    with the rest of the strand. On shortcut diagrams it is checked against the
    signs of the shortcut intersections on the loop.
    """
    _require_knotoid(kmap)
    if cid not in kmap.vertices or kmap.vertices[cid].kind != CROSSING:
        raise KnotoidGenericError("unknown crossing {}".format(cid))
    passages = kmap.passages()
    first, second = [p.index for p in passages if p.vid == cid]
    on_loop = {}
    off_loop = {}
    for p in passages:
        if p.vid == cid:
            continue
        bucket = on_loop if first < p.index < second else off_loop
        bucket.setdefault(p.vid, []).append(p)
    index = 0
    for vid, loop_passes in on_loop.items():
        if kmap.vertices[vid].kind != CROSSING or vid not in off_loop:
            continue
        index += turn_sign(off_loop[vid][0].out_slot, loop_passes[0].out_slot)
    if kmap.SHORTCUT_ARCS != 0:
        via_shortcut = sum(kmap.flat_sign_towards(vid, passes[0].out_slot)
                           for vid, passes in on_loop.items() if kmap.vertices[vid].kind == FLAT)
        if via_shortcut != index:
            raise KnotoidConsistencyError(
                "index of crossing {} is {} against the strand but {} against the shortcut".format(
                    cid, index, via_shortcut))
    return index


def crossing_data(kmap):
    """ CrossingData for every crossing, by crossing id """
    _require_knotoid(kmap)
    return [CrossingData(c, kmap.crossing_sign(c), kmap.sequential_sign(c),
                         intersection_index(kmap, c))
            for c in kmap.crossings()]


def n_writhes(kmap):
    """ J_n: half the signed count of the crossings of index n """
    doubled = {}
    for data in crossing_data(kmap):
        if data.index:
            doubled[data.index] = doubled.get(data.index, 0) + data.sign
    values = {}
    for n, twice in doubled.items():
        if twice % 2:
            raise KnotoidConsistencyError("{}-writhe is not an integer ({}/2)".format(n, twice))
        values[n] = twice // 2
    return WritheTable(values)


def index_polynomial(kmap):
    """ F = sum of J_n (t^n - 1) """
    table = n_writhes(kmap)
    return Laurent1.from_expr(sum(j * (T ** n - 1) for n, j in table.values.items()), "t")


def affine_index_polynomial(kmap, check=True):
    """ P = sum over crossings of sign (t^w - 1), checked against F(t) + F(1/t) """
    result = Laurent1.from_expr(sum(data.sign * (T ** data.w - 1) for data in crossing_data(kmap)), "t")
    if check:
        f = index_polynomial(kmap)
        if result != f + f.substitute_inverse():
            raise KnotoidConsistencyError("P = {} but F(t) + F(1/t) = {}".format(
                result, f + f.substitute_inverse()))
    return result


# ----------------------------
# State sums
# ----------------------------

def _tables(kmap, ordering=None):
    """ Plain-dict description of the smoothing problem (picklable for workers) """
    crossings = list(ordering) if ordering is not None else kmap.crossings()
    if sorted(crossings) != kmap.crossings():
        raise KnotoidGenericError("ordering must list every crossing exactly once")
    opposite = {}
    for edge in kmap.edges.values():
        if edge.strand == MAIN:
            opposite[edge.source] = (edge.target, edge.eid)
            opposite[edge.target] = (edge.source, edge.eid)
    smoothing = {}
    for cid in crossings:
        o = kmap.vertices[cid].over
        pairs = []
        for table in (_A_PAIRS, _B_PAIRS):
            partner = {}
            for x, y in table:
                partner[(x + o) % 4] = (y + o) % 4
                partner[(y + o) % 4] = (x + o) % 4
            pairs.append(partner)
        smoothing[cid] = pairs
    flat_sign = {}
    for fid in kmap.flats():
        for main_out in (0, 2):
            flat_sign[(fid, main_out)] = kmap.flat_sign_towards(fid, main_out)
    kinds = dict((v.vid, v.kind) for v in kmap.vertices.values())
    start = None
    if kmap.HAS_ENDPOINTS:
        start = (kmap.endpoint(TAIL), 0)
    return {
        "crossings": crossings,
        "opposite": opposite,
        "smoothing": smoothing,
        "flat_sign": flat_sign,
        "kinds": kinds,
        "start": start,
        "edges": sorted(set(eid for _, eid in opposite.values())),
        "free_loops": kmap.free_loops,
    }


def _trace(tables, choice, dart, visited):
    """ Follow a smoothed component from an outgoing dart; returns its a-count """
    opposite = tables["opposite"]
    kinds = tables["kinds"]
    a = 0
    while True:
        (vid, slot), eid = opposite[dart]
        if eid in visited:
            return a
        visited.add(eid)
        kind = kinds[vid]
        if kind == ENDPOINT:
            return a
        if kind == FLAT:
            out = (slot + 2) % 4
            a += tables["flat_sign"][(vid, out)]
        else:
            out = tables["smoothing"][vid][choice[vid]][slot]
        dart = (vid, out)


def _evaluate(tables, bits):
    """ (n, loops, a) of the state numbered `bits` (bit i set = B-smoothing at crossing i) """
    choice = {}
    n = 0
    for i, cid in enumerate(tables["crossings"]):
        b = (bits >> i) & 1
        choice[cid] = b
        n += -1 if b else 1
    visited = set()
    a = 0
    circles = tables["free_loops"]
    if tables["start"] is not None:
        a = _trace(tables, choice, tables["start"], visited)
    else:
        circles -= 1
    for eid in tables["edges"]:
        if eid in visited:
            continue
        # Any dart of an untouched edge starts a fresh circle
        for dart, (_, other) in tables["opposite"].items():
            if other == eid:
                break
        _trace(tables, choice, dart, visited)
        circles += 1
    return n, circles, a


def _sum_block(tables, start, stop):
    counts = {}
    for bits in range(start, stop):
        key = _evaluate(tables, bits)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _state_counts(kmap, ordering=None, workers=1, guard=None):
    guard = state_sum_guard(guard)
    if len(kmap.crossings()) > guard:
        raise KnotoidBudgetError("state sum over {} crossings exceeds the guard of {}".format(
            len(kmap.crossings()), guard))
    tables = _tables(kmap, ordering)
    total = 1 << len(tables["crossings"])
    if workers <= 1 or total < 2 * workers:
        return _sum_block(tables, 0, total)
    step = (total + workers - 1) // workers
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    counts = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_sum_block, tables, lo, hi) for lo, hi in bounds]
        for future in futures:
            for key, value in future.result().items():
                counts[key] = counts.get(key, 0) + value
    return counts


def states(kmap, ordering=None):
    """ Every state in counter order, for inspection """
    tables = _tables(kmap, ordering)
    for bits in range(1 << len(tables["crossings"])):
        choice = tuple("-" if (bits >> i) & 1 else "+" for i in range(len(tables["crossings"])))
        yield State(choice, *_evaluate(tables, bits))


def _expand(counts, with_u):
    """ Sum of mult * A^n * u^a * loop^circles over the counted states """
    polynomial = sp.Integer(0)
    for (n, loops, a), mult in sorted(counts.items()):
        term = mult * A ** n * LOOP ** loops
        polynomial += term * U ** a if with_u else term
    polynomial = sp.expand(polynomial)
    log.debug("Expanded %s state classes", len(counts))
    if with_u:
        return Laurent2.from_expr(polynomial)
    return Laurent1.from_expr(polynomial, "A")


def bracket(kmap, ordering=None, workers=1, guard=None):
    """
    Bracket state sum: sum of A^n(s) (-A^2 - A^-2)^loops(s). The interval of a
    knotoid is not counted; for closed diagrams one circle is not counted.
    """
    return _expand(_state_counts(kmap, ordering, workers, guard), False)


def normalized_bracket(kmap, **kwargs):
    """ (-A)^(-3 writhe) times the bracket """
    return minus_a_power(-3 * kmap.writhe()) * bracket(kmap, **kwargs)


def turaev_polynomial(kmap, ordering=None, workers=1, guard=None):
    """
    State sum with u^a(s), a(s) the algebraic shortcut count of the interval read
    from tail to head.
    """
    if not isinstance(kmap, ShortcutMap):
        raise KnotoidGenericError("the Turaev polynomial needs a shortcut diagram")
    return _expand(_state_counts(kmap, ordering, workers, guard), True)


def normalized_turaev(kmap, **kwargs):
    """ (-A)^(-3 writhe) u^(-a) times the Turaev polynomial; exponents are all even """
    factor = Laurent2.from_laurent1(minus_a_power(-3 * kmap.writhe()), -kmap.algebraic_height())
    result = factor * turaev_polynomial(kmap, **kwargs)
    if not result.has_even_exponents():
        raise KnotoidConsistencyError("normalized Turaev polynomial has odd exponents: {}".format(result))
    return result


def height_lower_bounds(kmap, turaev=None, index=None, guard=None, workers=1):
    """
    Signed-height lower bounds from the index and Turaev polynomials. `guard` caps
    the crossings of the Turaev state sum when it has to be computed.
    """
    f = index if index is not None else index_polynomial(kmap)
    t = turaev if turaev is not None else normalized_turaev(kmap, guard=guard, workers=workers)
    out = []
    for sign, opposite in ((PLUS, MINUS), (MINUS, PLUS)):
        from_index = signed_degree(f, sign)
        from_turaev = (signed_degree(t, opposite, "u") + 1) // 2
        if from_index == 0 and from_turaev == 0:
            source = "none"
        elif from_index >= from_turaev:
            source = "index"
        else:
            source = "turaev"
        out.append((max(from_index, from_turaev), source))
    return BoundsReport(out[0][0], out[1][0], out[0][1], out[1][1])


def invariant_report(kmap, workers=1, guard=None):
    """ Every invariant of a diagram as canonical strings """
    report = {"writhe": kmap.writhe()}
    if isinstance(kmap, KnotMap):
        report["bracket"] = str(bracket(kmap, workers=workers, guard=guard))
        report["normalized_bracket"] = str(normalized_bracket(kmap, workers=workers, guard=guard))
        return report
    table = n_writhes(kmap)
    f = index_polynomial(kmap)
    report.update({
        "crossings": [d.as_dict() for d in crossing_data(kmap)],
        "writhes": table.as_dict(),
        "index_polynomial": str(f),
        "affine_index_polynomial": str(affine_index_polynomial(kmap)),
        "bracket": str(bracket(kmap, workers=workers, guard=guard)),
        "normalized_bracket": str(normalized_bracket(kmap, workers=workers, guard=guard)),
    })
    if isinstance(kmap, ShortcutMap):
        turaev = normalized_turaev(kmap, workers=workers, guard=guard)
        report.update({
            "seq": str(kmap.seq()),
            "algebraic_height": kmap.algebraic_height(),
            "framing": list((kmap.writhe(), kmap.algebraic_height())),
            "knot_type": not kmap.flats(),
            "turaev": str(turaev_polynomial(kmap, workers=workers, guard=guard)),
            "normalized_turaev": str(turaev),
            "normalized_turaev_by_u": dict((str(u), str(turaev.u_coefficient(u)))
                                           for u in turaev.u_exponents()),
            "bounds": height_lower_bounds(kmap, turaev, f).as_dict(),
        })
    return report
