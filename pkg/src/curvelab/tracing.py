"""Strand itineraries, canonical drawings, and curve tightening.

A transverse position of a multicurve is stored per component as a cyclic
*itinerary*: the list of side slots through which the strand successively
enters triangles.  Consecutive entries s_k, s_{k+1} are consistent when the
exit side partner(s_{k+1}) belongs to the triangle of s_k; the piece of the
strand between them is a chord of that triangle.

Every chord between two distinct sides of a triangle cuts off exactly one
corner, so a chord has a *turn*: +1 when it exits through the side after its
entry side (cutting the corner between them), -1 for the side before.  A run
of m equal-turn chords pivots through m consecutive corners of the vertex
link (which has length D = 3F).  When a run reaches half the link or more,
the strand can be isotoped across the vertex onto the complementary corners:
the run's m + 1 crossings (both junction crossings included — the chords
before and after the run stretch around the vertex) become the D - m - 1
crossings of the complementary pivot, a strict reduction.  Tightening is
therefore: remove folds (chords entering and leaving through the same side),
unwrap full loops around the vertex, and reroute runs with 2m >= D.  Runs
with 2m == D - 2 reroute at no cost (the strand slides across the vertex,
trading D/2 crossings for the complementary D/2); a strand stable under the
strict moves can still hide a reduction behind such slides, so stability
triggers a search of the slide orbit before the strand is accepted as taut.
A strand that tightens to nothing was null-homotopic; a strand that is one
full constant-turn loop is vertex-linking.  Both are dropped (and counted) —
the survivors are essential and their crossing counts per edge give the
normal coordinates.

Canonical drawings go the other way: from a weight vector satisfying the
matching conditions, corner counts per triangle are determined, corner arcs
nest innermost-first, and the resulting chords connect edge points whose
positions along each edge are thereby pinned.  Tracing the chords yields the
strands together with each crossing's position along its edge, the data the
overlay and cutting machinery consume.
"""

from __future__ import annotations

import math

from .errors import MalformedCurveError, SearchExhausted


# ---------------------------------------------------------------------------
# itineraries and tightening


def check_itinerary(surface, slots):
    """Raise MalformedCurveError unless `slots` is a consistent cyclic
    itinerary (each consecutive pair spans a chord of one triangle)."""
    n = len(slots)
    for k in range(n):
        s, s_next = slots[k], slots[(k + 1) % n]
        x = surface.partner[s_next]
        if x // 3 != s // 3:
            raise MalformedCurveError(
                f"itinerary breaks at step {k}: slot {s_next} does not exit "
                f"the triangle entered through slot {s}")


def chord_turn(surface, s, s_next):
    """Turn of the chord from entering slot s to the next entering slot.

    +1: exits through the side after the entry side (cuts the corner between
    them); -1: the side before; 0: same side (a fold).
    """
    x = surface.partner[s_next]
    j, jx = s % 3, x % 3
    if jx == j:
        return 0
    return 1 if jx == (j + 1) % 3 else -1


def _remove_folds(surface, slots):
    """Cancel chords that enter and leave a triangle through the same side.

    Removing a fold merges its two neighbour chords, which may create a new
    fold, so scan to a fixed point.  Returns the reduced cyclic list (empty
    when the component was null-homotopic).
    """
    slots = list(slots)
    changed = True
    while changed and slots:
        changed = False
        n = len(slots)
        for k in range(n):
            if slots[(k + 1) % n] == surface.partner[slots[k]]:
                j = (k + 1) % n
                for i in sorted((k, j), reverse=True):
                    del slots[i]
                changed = True
                break
    return slots


def _link_walk(surface, slot, turn, steps):
    """Entering slots of `steps` successive chords all turning `turn`,
    starting from a chord entered through `slot`."""
    out = []
    s = slot
    for _ in range(steps):
        x = 3 * (s // 3) + (s % 3 + turn) % 3
        s = surface.partner[x]
        out.append(s)
    return out


def _link_next(surface, c):
    """Next corner around the vertex link (corner c of triangle c//3)."""
    p = surface.partner[c]
    return 3 * (p // 3) + (p % 3 + 1) % 3


def _link_prev(surface, c):
    """Previous corner around the vertex link."""
    return surface.partner[3 * (c // 3) + (c % 3 + 2) % 3]


def _vertex_reroute(surface, lin, turn, m):
    """Push a run across the vertex onto the complementary link corners.

    lin is the strand linearized so its first m chords form the run (all of
    turn `turn`); the run's chords cut m consecutive link corners, and the
    strand crosses an edge just before, between, and just after them — the
    m + 1 passages lin[0..m].  Rerouting removes all of those and threads
    the D - m - 1 complementary pivot crossings between the kept passages
    lin[-1] and lin[m + 1] instead.  Valid for any run; shortens the strand
    exactly when 2m >= D.
    """
    D = 3 * surface.num_triangles
    t, j = lin[0] // 3, lin[0] % 3
    c = 3 * t + (j if turn == -1 else (j + 1) % 3)  # corner cut first
    new = []
    if turn == -1:
        c = _link_next(surface, c)
        for _ in range(D - m - 1):
            new.append(surface.partner[c])
            c = _link_next(surface, c)
    else:
        c = _link_prev(surface, c)
        for _ in range(D - m - 1):
            c = _link_prev(surface, c)
            new.append(c)
    return lin[m + 1:] + new


def _maximal_runs(turns):
    """All maximal cyclic runs of equal values as (start, length) pairs;
    assumes the sequence is not constant."""
    n = len(turns)
    start = next(k for k in range(n) if turns[k - 1] != turns[k])
    runs = []
    k = start
    while True:
        m = 1
        while turns[(k + m) % n] == turns[k]:
            m += 1
        runs.append((k, m))
        k = (k + m) % n
        if k == start:
            return runs


def _longest_run(turns):
    """(start, length) of a longest cyclic run of equal values; assumes the
    sequence is not constant."""
    return max(_maximal_runs(turns), key=lambda km: km[1])


def _canon_rotation(seq):
    """The lexicographically least rotation of a cyclic sequence, as a
    tuple — a rotation-independent representative."""
    n = len(seq)
    seq = list(seq)
    return min(tuple(seq[i:] + seq[:i]) for i in range(n))


def _slide_orbit(surface, slots):
    """Explore the orbit of cost-free vertex slides.

    `slots` has no folds and no run with 2m >= D, but may have runs with
    2m == D - 2, which reroute to another representative of the same length.
    Walk every itinerary reachable through such slides.  If one of them
    admits a strict move (a fold or a run with 2m >= D), return
    (that itinerary, None) for the main loop to consume; otherwise return
    (None, orbit) where orbit is the set of all visited representatives
    (canonical rotations), certifying the strand is taut.
    """
    D = 3 * surface.num_triangles
    half = D // 2 - 1
    start = _canon_rotation(slots)
    seen = {start}
    queue = [start]
    while queue:
        cur = list(queue.pop())
        n = len(cur)
        turns = [chord_turn(surface, cur[k], cur[(k + 1) % n])
                 for k in range(n)]
        for k, m in _maximal_runs(turns):
            if m != half:
                continue
            lin = cur[k:] + cur[:k]
            cand = _vertex_reroute(surface, lin, turns[k], m)
            if len(_remove_folds(surface, cand)) < len(cand):
                return cand, None
            cn = len(cand)
            cturns = [chord_turn(surface, cand[i], cand[(i + 1) % cn])
                      for i in range(cn)]
            if all(t == cturns[0] for t in cturns):
                return cand, None
            if 2 * _longest_run(cturns)[1] >= D:
                return cand, None
            key = _canon_rotation(cand)
            if key not in seen:
                seen.add(key)
                queue.append(key)
        if len(seen) > 20000:
            raise SearchExhausted("vertex slide orbit exceeded search budget")
    return None, seen


def _best_of_orbit(surface, orbit):
    """Canonical representative of a taut slide orbit: least per-edge weight
    vector, ties broken by the least rotation tuple.  Makes the tightened
    form a function of the orbit rather than of the input presentation."""
    def key(member):
        weights = [0] * surface.num_edges
        for s in member:
            weights[surface.edge_of_slot[s]] += 1
        return (tuple(weights), member)

    return list(min(orbit, key=key))


def _torus_fast_tighten(surface, slots):
    """Exact tightening on the two-triangle torus via algebraic crossings.

    The signed crossing count with each edge (slot_a side positive) is a
    homotopy invariant of the closed strand, and a torus geodesic crosses
    every edge monotonically, so the absolute counts are exactly the
    minimal weights of the strand's class.  Bypassing the local moves
    matters here: with a vertex link of length 6 nearly every taut strand
    is full of cost-free slides, and the slide orbit grows exponentially
    with the weights.  Returns None for homologically trivial strands
    (null-homotopic or vertex-linking), which the generic reduction
    handles.
    """
    signed = [0] * surface.num_edges
    for s in slots:
        signed[surface.edge_of_slot[s]] += 1 if surface.is_slot_a(s) else -1
    if not any(signed):
        return None
    weights = [abs(v) for v in signed]
    d = math.gcd(math.gcd(weights[0], weights[1]), weights[2])
    base = Drawing(surface, [w // d for w in weights])
    assert len(base.strands) == 1, "primitive torus vector drew disconnected"
    loop = [s for s, _ in base.strands[0]]
    return ("curve", list(_canon_rotation(loop * d)))


def tighten_strand(surface, slots):
    """Tighten one closed strand to a taut representative.

    Returns ("curve", slots) for an essential component, ("null", None) for
    a null-homotopic one, ("linking", None) for a vertex-linking one.  The
    returned itinerary depends only on where the tightening lands, not on
    how the input was presented: on the torus it is the canonical drawing
    of the class, elsewhere the canonical member of the final slide orbit
    (least weight vector, then least rotation).
    """
    if surface.num_triangles == 2 and slots:
        check_itinerary(surface, slots)
        fast = _torus_fast_tighten(surface, slots)
        if fast is not None:
            return fast
    D = 3 * surface.num_triangles
    guard = 0
    while True:
        guard += 1
        if guard > 100000:
            raise MalformedCurveError("tightening did not terminate")
        slots = _remove_folds(surface, slots)
        if not slots:
            return ("null", None)
        check_itinerary(surface, slots)
        n = len(slots)
        turns = [chord_turn(surface, slots[k], slots[(k + 1) % n])
                 for k in range(n)]
        if all(t == turns[0] for t in turns):
            # a single full run winds around the vertex and bounds a disk
            # about it on one side
            if n % D != 0:
                raise MalformedCurveError(
                    "constant-turn strand of length not dividing the "
                    "vertex link")
            return ("linking", None)
        runs = _maximal_runs(turns)
        k, m = max(runs, key=lambda km: km[1])
        if 2 * m < D:
            if all(2 * r != D - 2 for _, r in runs):
                return ("curve", list(_canon_rotation(slots)))
            escape, orbit = _slide_orbit(surface, slots)
            if escape is None:
                return ("curve", _best_of_orbit(surface, orbit))
            slots = escape
            continue
        lin = slots[k:] + slots[:k]  # lin[0] enters the first run triangle
        if m >= D:
            # full wrap: inside a constant-turn run passages repeat with
            # period D, so dropping D of them keeps consistency
            slots = [lin[0]] + lin[D + 1:]
            continue
        slots = _vertex_reroute(surface, lin, turns[k], m)


def tighten_strands(surface, strand_list):
    """Tighten every strand independently.

    Returns (weights, tight_strands, null_count, linking_count); weights is
    the per-edge crossing count totalled over the surviving strands.
    """
    weights = [0] * surface.num_edges
    null_count = linking_count = 0
    tight = []
    for slots in strand_list:
        check_itinerary(surface, list(slots))
        kind, out = tighten_strand(surface, list(slots))
        if kind == "null":
            null_count += 1
        elif kind == "linking":
            linking_count += 1
        else:
            tight.append(out)
            for s in out:
                weights[surface.edge_of_slot[s]] += 1
    return tuple(weights), tight, null_count, linking_count


def tighten_weights(surface, weights):
    """Canonical tight weights of the essential part of a multicurve.

    Draws the vector, tightens the strands, and repeats until the vector
    stabilises: the strands of one round may resolve differently once
    their weights are redrawn, so a single pass is not enough.  Returns
    (weights, null_count, linking_count) with the discarded component
    counts totalled over all rounds; the weights are all zero when
    nothing essential remains.
    """
    weights = tuple(weights)
    null_count = linking_count = 0
    for _ in range(1000):
        if not any(weights):
            return weights, null_count, linking_count
        new, _tight, nulls, links = tighten_strands(
            surface, Drawing(surface, weights).itineraries())
        null_count += nulls
        linking_count += links
        if new == weights:
            return weights, null_count, linking_count
        weights = new
    raise AssertionError("weight tightening failed to stabilise")


# ---------------------------------------------------------------------------
# canonical drawings from weight vectors


def corner_counts(surface, weights):
    """Per-triangle corner arc counts [n0, n1, n2] implied by the weights.

    n_j arcs cut off corner j, running between sides j-1 and j.  Raises
    MalformedCurveError when the matching conditions fail (odd triangle sum
    or a violated triangle inequality).
    """
    out = []
    for t in range(surface.num_triangles):
        w = [weights[surface.edge(t, j)] for j in range(3)]
        if (w[0] + w[1] + w[2]) % 2 != 0:
            raise MalformedCurveError(
                f"odd weight sum around triangle {t}")
        n = [(w[j - 1] + w[j] - w[(j + 1) % 3]) // 2 for j in range(3)]
        if min(n) < 0:
            raise MalformedCurveError(
                f"triangle inequality fails at triangle {t}")
        out.append(n)
    return out


class Drawing:
    """A multicurve drawn canonically from its weight vector.

    strands: per component, the cyclic list of passages (slot, point); the
    strand enters triangle slot//3 through `slot`, crossing its edge at
    L-position `point` (positions along an edge are indexed in the traversal
    order of the edge's slot_a side).

    point_table: per edge, entry i names (strand, index) for the passage
    crossing that edge at L-position i.
    """

    def __init__(self, surface, weights):
        self.surface = surface
        self.weights = tuple(weights)
        self.corners = corner_counts(surface, weights)
        self.strands = []
        self.point_table = [[None] * w for w in self.weights]
        self._trace()

    def _trace(self):
        surf = self.surface
        seen = set()
        for e0 in range(surf.num_edges):
            for i0 in range(self.weights[e0]):
                if (e0, i0) in seen:
                    continue
                strand = []
                sid = len(self.strands)
                s, r = surf.slots_of_edge[e0][0], i0
                while True:
                    e = surf.edge_of_slot[s]
                    point = r if surf.is_slot_a(s) else self.weights[e] - 1 - r
                    if (e, point) in seen:
                        if (e, point) != (e0, i0):
                            raise MalformedCurveError(
                                "drawing trace collided mid-strand")
                        break
                    seen.add((e, point))
                    self.point_table[e][point] = (sid, len(strand))
                    strand.append((s, point))
                    t, j = s // 3, s % 3
                    n = self.corners[t]
                    if r < n[j]:
                        k = (j + 2) % 3  # cuts corner j
                        r_out = self.weights[surf.edge(t, k)] - 1 - r
                    else:
                        k = (j + 1) % 3  # cuts corner j+1
                        r_out = self.weights[surf.edge(t, j)] - 1 - r
                    x = 3 * t + k
                    s = surf.partner[x]
                    r = self.weights[surf.edge_of_slot[x]] - 1 - r_out
                    # crossing an edge swaps which slot reads the points, so
                    # the rank seen from the far side is the reversal of the
                    # rank seen from the exit side
                if strand:
                    self.strands.append(strand)
        for e in range(surf.num_edges):
            if any(p is None for p in self.point_table[e]):
                raise AssertionError("drawing trace left points uncovered")

    def itineraries(self):
        """Slot itineraries of the strands (positions stripped)."""
        return [[s for (s, _) in strand] for strand in self.strands]


# ---------------------------------------------------------------------------
# reading raw transverse data


def realize_raw(surface, triangle_arcs):
    """Build strand itineraries from raw per-triangle arc counts.

    triangle_arcs[t] = [a01, a12, a20, f0, f1, f2]: a(j, j+1) arcs join side
    j to side j+1 across their common corner, f_j arcs enter and leave
    through side j (they are removed again by tightening, but raw input may
    contain them).  Arcs are laid out without crossings: corner arcs nest
    innermost toward their corner, folds nest in the middle of their side.
    Endpoint counts on the two sides of every edge must agree.

    Returns a list of cyclic slot itineraries, one per closed strand.
    """
    F = surface.num_triangles
    if len(triangle_arcs) != F:
        raise MalformedCurveError(
            f"expected arc counts for {F} triangles, got {len(triangle_arcs)}")
    for t, row in enumerate(triangle_arcs):
        if len(row) != 6 or any(c < 0 for c in row):
            raise MalformedCurveError(
                f"triangle {t}: need six non-negative counts")

    def arcs(t):
        row = triangle_arcs[t]
        return {(0, 1): row[0], (1, 2): row[1], (2, 0): row[2]}, \
               {0: row[3], 1: row[4], 2: row[5]}

    side_total = [0] * (3 * F)
    for t in range(F):
        a, f = arcs(t)
        for j in range(3):
            side_total[3 * t + j] = (a[(j, (j + 1) % 3)]
                                     + a[((j + 2) % 3, j)]
                                     + 2 * f[j])
    for e in range(surface.num_edges):
        sa, sb = surface.slots_of_edge[e]
        if side_total[sa] != side_total[sb]:
            raise MalformedCurveError(
                f"edge {e}: the two sides carry different endpoint counts "
                f"({side_total[sa]} vs {side_total[sb]})")

    # Along side j (in traversal order, start corner j to far corner j+1):
    # first the corner arcs at corner j, innermost first, then the nested
    # folds, then the corner arcs at corner j+1, outermost first.  The arc
    # at corner j with rank r on side j has rank tot[j-1] - 1 - r on side
    # j-1: nearest the shared corner on both sides.
    link = {}  # (slot, side rank) -> (slot, side rank) across the triangle
    for t in range(F):
        a, f = arcs(t)
        tot = [side_total[3 * t + j] for j in range(3)]
        for j in range(3):
            jm = (j + 2) % 3
            for r in range(a[(jm, j)]):  # corner arcs at corner j
                p = (3 * t + j, r)
                q = (3 * t + jm, tot[jm] - 1 - r)
                link[p] = q
                link[q] = p
            base = a[(jm, j)]
            for i in range(f[j]):  # folds, nested between the corner blocks
                p = (3 * t + j, base + i)
                q = (3 * t + j, base + 2 * f[j] - 1 - i)
                link[p] = q
                link[q] = p

    # crossing an edge: side rank r at slot s meets rank w - 1 - r opposite
    def across(p):
        s, r = p
        return (surface.partner[s], side_total[s] - 1 - r)

    # Walk the strands, alternating chords (link) and edge crossings
    # (across).  Every point on an edge has two (slot, rank) names, one per
    # side; mark both so each strand is traced once, not once per direction.
    visited = set()
    strands = []
    for s0 in range(3 * F):
        for r0 in range(side_total[s0]):
            if (s0, r0) in visited:
                continue
            slots = []
            p = (s0, r0)
            while True:
                if p in visited:
                    raise MalformedCurveError(
                        "raw arc layout collided mid-strand")
                visited.add(p)
                visited.add(across(p))
                slots.append(p[0])
                p = across(link[p])
                if p == (s0, r0):
                    break
            strands.append(slots)
    return strands
