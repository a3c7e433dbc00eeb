"""Minimal-position crossing counts for pairs of drawn multicurves.

Two tight multicurves cross minimally when every crossing is forced by
the way their strands wind around each other, and that winding is
visible in the itineraries alone.  Wherever a strand of one curve and a
strand of the other enter the same slot, they fellow-travel through a
maximal *band* of shared slots before splitting off.  Along the band the
relative position of the two strands cannot change: a triangle transit
reverses the pair's order along the sides once, and crossing an edge
reverses it again.  The order is therefore pinned independently at the
two ends of the band — by the chords that carry the strands into the
first shared edge, and by the chords that take them apart after the
last one.  A chord turning toward the earlier corner of its entry side
attaches closer to the start of that side, so each junction orders the
pair by its turn, and the band contains exactly one crossing when the
two junction verdicts disagree: the strands swap sides across the band.
That happens precisely when a strand's arriving turn differs from its
departing turn.

Summing the swapped bands over all strand pairs (the second strand
taken in both directions, since a band couples definite directions)
counts one crossing per linked pair of lifts, which is the geometric
intersection number of the drawn classes when both weight vectors are
tight.  Strand pairs that never diverge are parallel copies of one
primitive cycle and contribute nothing; within a single multicurve
every band must be unswapped (the drawing is embedded), which is
checked and makes the counter its own canary.

Inputs that are admissible but not tight still get a well-defined
transverse position, but the count is then only an upper bound for the
class; callers wanting intersection numbers tighten first.
"""

from __future__ import annotations

from .errors import MalformedCurveError
from .tracing import Drawing, chord_turn


class Band:
    """A maximal fellow-traveling run between two strand traversals.

    Strand `a` (forward) and strand `b` (in direction b_dir: +1 forward,
    -1 reversed) enter the same slots for `length` consecutive steps,
    starting at passage a_start of a and b_start of b's traversal.
    `swapped` says the strands change sides across the band — the band
    carries exactly one crossing.  For a swapped band, `sign` is +1 when
    the second strand crosses the first from right to left (the frame of
    the two traversal directions at the crossing is positively oriented
    for the orientation in which each triangle's boundary runs side 0,
    1, 2), and -1 for the other way.
    """

    def __init__(self, a_strand, a_start, b_strand, b_dir, b_start,
                 length, arrive, depart):
        self.a_strand = a_strand
        self.a_start = a_start
        self.b_strand = b_strand
        self.b_dir = b_dir
        self.b_start = b_start
        self.length = length
        self.arrive = arrive
        self.depart = depart

    @property
    def swapped(self):
        return self.arrive != self.depart

    @property
    def sign(self):
        if not self.swapped:
            return 0
        return 1 if (self.arrive, self.depart) == (-1, 1) else -1

    def __repr__(self):
        return (f"Band(a={self.a_strand}@{self.a_start}, "
                f"b={self.b_strand}@{self.b_start}x{self.b_dir}, "
                f"len={self.length}, sign={self.sign})")


def _traversals(surface, drawing):
    """Both directed slot itineraries of every strand, with their turns.

    Returns per strand a pair of (slots, turns) entries: index 0 the
    drawn direction, index 1 the reverse.  Reversing a strand enters
    each crossed edge through the partner slot, in the opposite cyclic
    order.
    """
    out = []
    for slots in drawing.itineraries():
        n = len(slots)
        rev = [surface.partner[slots[(n - i) % n]] for i in range(n)]
        entry = []
        for seq in (slots, rev):
            turns = [chord_turn(surface, seq[k], seq[(k + 1) % n])
                     for k in range(n)]
            if any(t == 0 for t in turns):
                raise MalformedCurveError(
                    "drawn strand contains a fold; weights are inadmissible")
            entry.append((seq, turns))
        out.append(entry)
    return out


def _bands_between(a_entry, b_entry, b_dir):
    """Maximal bands between traversal a (forward) and b in b_dir.

    A band starts where the slots agree but did not agree one step
    earlier; fully aligned pairs (parallel strands) have no start and
    are skipped.  Junction turns are read off traversal a: `arrive` is
    a's turn into the first shared edge, `depart` its turn off the last
    one.  Both junctions force the other strand onto the opposite turn,
    which is asserted.
    """
    slots_a, turns_a = a_entry
    slots_b, turns_b = b_entry[0] if b_dir == 1 else b_entry[1]
    na, nb = len(slots_a), len(slots_b)
    bands = []
    for i in range(na):
        for j in range(nb):
            if slots_a[i] != slots_b[j]:
                continue
            if slots_a[i - 1] == slots_b[j - 1]:
                continue  # interior of a band, or a parallel pair
            length = 1
            while slots_a[(i + length) % na] == slots_b[(j + length) % nb]:
                length += 1
                if length > na + nb:
                    raise AssertionError(
                        "band exceeded both periods without closing")
            arrive = turns_a[(i - 1) % na]
            depart = turns_a[(i + length - 1) % na]
            assert turns_b[(j - 1) % nb] == -arrive
            assert turns_b[(j + length - 1) % nb] == -depart
            bands.append((i, j, length, arrive, depart))
    return bands


class Overlay:
    """Several multicurves drawn on one surface, with pairwise crossings.

    weight_vectors: admissible weight vectors, one per curve.  Crossing
    counts between two curves equal the geometric intersection number
    of their classes when both vectors are tight.
    """

    def __init__(self, surface, weight_vectors):
        self.surface = surface
        self.weights = [tuple(w) for w in weight_vectors]
        self.drawings = [Drawing(surface, w) for w in self.weights]
        self._trav = [_traversals(surface, d) for d in self.drawings]
        self._bands = {}

    def bands(self, ci, cj):
        """All maximal bands between strands of curve ci and curve cj.

        Curve ci is traversed forward, curve cj in both directions; a
        physical meeting of the two curves determines the relative
        direction, so each arises exactly once.  For ci == cj this
        enumerates each self-meeting from both sides, which is harmless
        since such bands are never swapped.
        """
        key = (ci, cj)
        if key in self._bands:
            return self._bands[key]
        out = []
        for sa, a_dirs in enumerate(self._trav[ci]):
            for sb, b_dirs in enumerate(self._trav[cj]):
                for b_dir in (1, -1):
                    for (i, j, length, arr, dep) in _bands_between(
                            a_dirs[0], b_dirs, b_dir):
                        out.append(Band(sa, i, sb, b_dir, j,
                                        length, arr, dep))
        self._bands[key] = out
        return out

    def crossings(self, ci=0, cj=1):
        """The swapped bands between two curves: one per crossing point."""
        found = [b for b in self.bands(ci, cj) if b.swapped]
        if ci == cj and found:
            raise AssertionError(
                "a single drawn multicurve produced a self-crossing band")
        return found

    def count(self, ci=0, cj=1):
        """Number of crossings between curves ci and cj as drawn."""
        for c in (ci, cj):
            self.crossings(c, c)  # embeddedness canary
        return len(self.crossings(ci, cj))


def geometric_crossings(surface, weights_a, weights_b):
    """Crossing count of two drawn multicurves.

    Equals the geometric intersection number of the two classes when
    both weight vectors are tight.
    """
    return Overlay(surface, [weights_a, weights_b]).count(0, 1)
