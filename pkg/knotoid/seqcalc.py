# encoding=utf-8
"""
Sign sequences and the calculus on them: shift moves, shift-connectivity,
consecutive sums, involution transforms, concatenation and lift subsequences.

>>> sorted(str(s) for s in shift_results(SignSequence.parse("--++"), LEFT, 1))
['+--+', '-+-+', '-++-']
>>> str(lift_subsequence(SignSequence.parse("+-"), 2, 1))
'+-'
"""
from __future__ import print_function, division
import itertools
import logging

import networkx as nx

from .errors import KnotoidParseError


# Logger
log = logging.getLogger(__file__)

LEFT = "left"
RIGHT = "right"

_SYMBOLS = {"+": 1, "-": -1, u"−": -1}
_IGNORED = " ,()"


class SignSequence(object):
    """ Finite sequence over {+1, -1}, immutable """
    def __init__(self, entries=()):
        entries = tuple(entries)
        for entry in entries:
            if entry not in (1, -1):
                raise ValueError("sign sequence entries must be +1 or -1, got {!r}".format(entry))
        self.entries = entries

    @classmethod
    def parse(cls, text):
        """ Accepts '+-', '(+, -)', '()' and the empty string """
        entries = []
        for column, ch in enumerate(text.strip(), 1):
            if ch in _IGNORED:
                continue
            if ch not in _SYMBOLS:
                raise KnotoidParseError("bad sign {!r}".format(ch), 1, column)
            entries.append(_SYMBOLS[ch])
        return cls(entries)

    @property
    def h(self):
        return len(self.entries)

    @property
    def h_plus(self):
        return sum(1 for e in self.entries if e > 0)

    @property
    def h_minus(self):
        return sum(1 for e in self.entries if e < 0)

    def total(self):
        """ Algebraic sum of the entries """
        return sum(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, item):
        return self.entries[item]

    def __eq__(self, other):
        if not isinstance(other, SignSequence):
            return NotImplemented
        return self.entries == other.entries

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return (len(self), str(self)) < (len(other), str(other))

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return "".join("+" if e > 0 else "-" for e in self.entries)

    def __repr__(self):
        return "SignSequence('{}')".format(self)


def _as_seq(seq):
    if isinstance(seq, SignSequence):
        return seq
    if isinstance(seq, str):
        return SignSequence.parse(seq)
    return SignSequence(seq)


def shift_results(seq, direction, size):
    """
    All results of a shift move of the given size. A left shift deletes `size`
    disjoint consecutive (-, +) pairs and inserts as many (+, -) pairs anywhere in
    what remains; a right shift exchanges the roles of the pairs.
    """
    seq = _as_seq(seq)
    if size < 1:
        raise ValueError("shift size must be positive")
    removed = (-1, 1) if direction == LEFT else (1, -1)
    inserted = (removed[1], removed[0])
    entries = seq.entries
    starts = [i for i in range(len(entries) - 1) if (entries[i], entries[i + 1]) == removed]
    results = set()
    for chosen in itertools.combinations(starts, size):
        # Two matches of the same pair can't overlap, but keep the guard explicit
        if any(b - a < 2 for a, b in zip(chosen, chosen[1:])):
            continue
        drop = set(chosen) | set(i + 1 for i in chosen)
        remaining = [e for i, e in enumerate(entries) if i not in drop]
        for spots in itertools.combinations_with_replacement(range(len(remaining) + 1), size):
            out = []
            spots = list(spots)
            for pos in range(len(remaining) + 1):
                while spots and spots[0] == pos:
                    out.extend(inserted)
                    spots.pop(0)
                if pos < len(remaining):
                    out.append(remaining[pos])
            results.add(SignSequence(out))
    return results


def shift_neighbours(seq):
    """ Every sequence one shift move (any size, either direction) away """
    seq = _as_seq(seq)
    out = set()
    for direction in (LEFT, RIGHT):
        for size in range(1, len(seq) // 2 + 1):
            out |= shift_results(seq, direction, size)
    out.discard(seq)
    return out


class ShiftWitness(object):
    """ Outcome of a shift-connectivity check with its spanning tree """
    def __init__(self, connected, edges, components):
        self.connected = connected
        self.edges = edges
        self.components = components

    def __bool__(self):
        return self.connected

    __nonzero__ = __bool__

    def as_dict(self):
        return {
            "connected": self.connected,
            "edges": [[str(a), str(b)] for a, b in self.edges],
            "components": [sorted(str(s) for s in comp) for comp in self.components],
        }

    def __repr__(self):
        return "ShiftWitness[connected={} edges={}]".format(self.connected, len(self.edges))


def shift_connected(sequences):
    """
    Is the graph on `sequences` whose edges are single shift moves between members
    connected? The witness carries a spanning tree (as shift edges) when it is.
    """
    members = sorted(set(_as_seq(s) for s in sequences))
    if not members:
        return ShiftWitness(True, [], [])
    shape = set((s.h_plus, s.h_minus) for s in members)
    if len(shape) > 1:
        log.info("Sequences with different signed counts are never shift-connected")
        return ShiftWitness(False, [], [set([s]) for s in members])
    graph = nx.Graph()
    graph.add_nodes_from(members)
    member_set = set(members)
    for seq in members:
        for other in shift_neighbours(seq) & member_set:
            graph.add_edge(seq, other)
    components = [set(c) for c in nx.connected_components(graph)]
    components.sort(key=lambda c: min(c))
    if len(components) != 1:
        return ShiftWitness(False, [], components)
    tree = nx.bfs_tree(graph, members[0])
    return ShiftWitness(True, sorted(tree.edges()), components)


def consecutive_subsum_exists(seq, target):
    """ Does some consecutive run (empty allowed for 0) sum to target? """
    seq = _as_seq(seq)
    if target == 0:
        return True
    entries = seq.entries
    for start in range(len(entries)):
        running = 0
        for entry in entries[start:]:
            running += entry
            if running == target:
                return True
    return False


def reverse(seq):
    return SignSequence(reversed(_as_seq(seq).entries))


def negate(seq):
    return SignSequence(-e for e in _as_seq(seq).entries)


def transforms(seq):
    """ {rev: rev(A), neg: -A, rev_neg: rev(-A)} """
    seq = _as_seq(seq)
    return {"rev": reverse(seq), "neg": negate(seq), "rev_neg": reverse(negate(seq))}


def concat(*seqs):
    out = []
    for seq in seqs:
        out.extend(_as_seq(seq).entries)
    return SignSequence(out)


def prefix_sums(seq):
    """ p_A(0) = 0 and p_A(i) = sum of the first i entries """
    sums = [0]
    for entry in _as_seq(seq).entries:
        sums.append(sums[-1] + entry)
    return sums


def lift_levels(seq):
    """ q_A(i) = max(p_A(i - 1), p_A(i)) for i = 1..h """
    sums = prefix_sums(seq)
    return [max(sums[i - 1], sums[i]) for i in range(1, len(sums))]


def lift_subsequence(seq, n, x):
    """ Entries whose lift level is congruent to x mod n, in order """
    if n < 1:
        raise ValueError("n must be positive")
    seq = _as_seq(seq)
    levels = lift_levels(seq)
    return SignSequence(e for e, q in zip(seq.entries, levels) if q % n == x % n)
