"""Multicurves in normal coordinates and the classification toolkit.

A multicurve is held as one crossing count per edge, in the minimal
(tight, essential) position the tightening engine produces; the vector
doubles as the isotopy-class key.  One caveat is inherited from vertex
slides: a class can own finitely many tight vectors that no slide
connects, so `isotopic` backs vector equality with a cobounding-annulus
test, and the pair classifiers use it rather than raw equality.

Homology works through the intersection pairing: a curve's crossing
parity with the labelled handle loop a_i (or b_i) is its pairing with
that class, and since the pairing is the standard symplectic form, the
coefficient of a_i in the curve's class is its parity on the edge
labelled b_i, and vice versa.  Diagonal edges never enter.

The curve-finding subroutines search the cell complex of a cut surface:
closed walks with bounded cell revisits trace curves clear of the cut
(crossing a cell's bounding chord instead steps over the cut curve
once), walked in deterministic order, shortest first, and every hit is
re-verified against the stated postconditions before it is returned.
"""

from __future__ import annotations

from .cutting import _chord_sides, cut_along
from .errors import DomainError, MalformedCurveError, SearchExhausted
from .overlay import Overlay
from .tracing import (Drawing, realize_raw, tighten_strand,
                      tighten_weights)


class NormalMultiCurve:
    """An essential multicurve in minimal normal position.

    The constructor insists the weights already be their own tightening;
    raw or loose positions go through `normalize` instead.  The empty
    multicurve (all weights zero) is a valid value, rejected only by
    operations whose contracts need an essential curve.
    """

    def __init__(self, surface, weights):
        weights = tuple(int(w) for w in weights)
        if len(weights) != surface.num_edges:
            raise MalformedCurveError(
                f"expected {surface.num_edges} weights, got {len(weights)}")
        if any(w < 0 for w in weights):
            raise MalformedCurveError("negative weight")
        tight, nulls, links = tighten_weights(surface, weights)
        if tight != weights or nulls or links:
            raise MalformedCurveError(
                "weights are not in minimal normal position; "
                "use normalize() on raw input")
        self.surface = surface
        self.weights = weights

    @property
    def is_empty(self):
        return not any(self.weights)

    @property
    def total_weight(self):
        return sum(self.weights)

    @property
    def component_count(self):
        if self.is_empty:
            return 0
        return len(Drawing(self.surface, self.weights).strands)

    def __eq__(self, other):
        if not isinstance(other, NormalMultiCurve):
            return NotImplemented
        return self.weights == other.weights and (
            self.surface is other.surface
            or self.surface.gluing == other.surface.gluing)

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"NormalMultiCurve({list(self.weights)})"

    def to_json_dict(self):
        return {"surface": self.surface.name, "weights": list(self.weights)}


class CurveClass:
    """Classification record: kind, component count, mod-2 homology."""

    def __init__(self, kind, component_count, homology_mod2):
        self.kind = kind
        self.component_count = component_count
        self.homology_mod2 = homology_mod2

    def to_json_dict(self):
        return {"kind": self.kind,
                "component_count": self.component_count,
                "homology_mod2": list(self.homology_mod2)}

    def __repr__(self):
        return (f"CurveClass({self.kind}, components="
                f"{self.component_count}, h2={list(self.homology_mod2)})")


def _same_surface(a, b):
    if a.surface is not b.surface and a.surface.gluing != b.surface.gluing:
        raise DomainError("curves live on different surfaces")


def _require_connected_essential(curve, who):
    if curve.is_empty:
        raise DomainError(f"{who} needs an essential curve, got the empty "
                          "multicurve")
    if curve.component_count != 1:
        raise DomainError(f"{who} needs a connected curve, got "
                          f"{curve.component_count} components")


def normalize(surface, triangle_arcs):
    """Minimal normal form of raw per-triangle arc counts.

    Returns (curve, discarded): the tightened essential multicurve and
    how many null-homotopic or vertex-linking components were dropped on
    the way.  Raw input that does not close up into a 1-manifold raises
    a malformed-curve error.
    """
    itineraries = realize_raw(surface, triangle_arcs)
    discarded = 0
    weights = [0] * surface.num_edges
    for slots in itineraries:
        kind, out = tighten_strand(surface, list(slots))
        if kind != "curve":
            discarded += 1
            continue
        for s in out:
            weights[surface.edge_of_slot[s]] += 1
    tight, nulls, links = tighten_weights(surface, weights)
    discarded += nulls + links
    return NormalMultiCurve(surface, tight), discarded


def components(curve):
    """Connected components as separate curves; edge-wise they sum back
    to the input."""
    if curve.is_empty:
        return []
    surface = curve.surface
    out = []
    for slots in Drawing(surface, curve.weights).itineraries():
        w = [0] * surface.num_edges
        for s in slots:
            w[surface.edge_of_slot[s]] += 1
        out.append(NormalMultiCurve(surface, w))
    assert tuple(sum(ws) for ws in zip(*(c.weights for c in out))) == \
        curve.weights, "components lost weight"
    return out


def _basis_edges(surface):
    """Edge indices of the labelled handle loops, as [(a_i, b_i), ...]."""
    by_name = {name: e for e, (name, _kind) in surface.side_labels.items()}
    pairs = []
    for i in range(1, surface.genus + 1):
        try:
            pairs.append((by_name[f"a{i}"], by_name[f"b{i}"]))
        except KeyError:
            raise DomainError(
                "surface has no labelled handle basis; homology "
                "classification needs the standard labelling")
    return pairs


def homology_mod2(curve):
    """Mod-2 class in the (a_1, b_1, ..., a_g, b_g) basis.

    The a_i coefficient is the crossing parity with the b_i loop and
    vice versa; zero exactly for separating curves.
    """
    _require_connected_essential(curve, "homology_mod2")
    bits = []
    for ea, eb in _basis_edges(curve.surface):
        bits.append(curve.weights[eb] % 2)
        bits.append(curve.weights[ea] % 2)
    return tuple(bits)


def _class_sum_mod2(curve):
    # total class of a possibly disconnected multicurve: parities add
    bits = []
    for ea, eb in _basis_edges(curve.surface):
        bits.append(curve.weights[eb] % 2)
        bits.append(curve.weights[ea] % 2)
    return tuple(bits)


def is_separating(curve, verify=False):
    """Whether a connected essential curve separates the surface.

    The homology answer (class = 0) is the fast path; verify=True also
    runs the cut and insists the two agree.
    """
    _require_connected_essential(curve, "is_separating")
    answer = not any(homology_mod2(curve))
    if verify:
        cut = cut_along(curve.surface, curve.weights)
        cut_answer = cut.component_count == 2
        if cut_answer != answer:
            raise AssertionError(
                f"separation tests disagree on {curve}: homology says "
                f"{answer}, cut says {cut_answer}")
    return answer


def classify(curve, verify=False):
    """CurveClass record for an essential multicurve.

    Connected curves report the homology kind (cross-checked against
    the cut when verify is set); disconnected ones report whether the
    whole multicurve separates, straight from the cut, plus the summed
    class of their components.
    """
    if curve.is_empty:
        raise DomainError("cannot classify the empty multicurve")
    n = curve.component_count
    if n == 1:
        kind = "separating" if is_separating(curve, verify=verify) \
            else "nonseparating"
        return CurveClass(kind, 1, homology_mod2(curve))
    cut = cut_along(curve.surface, curve.weights)
    kind = "separating" if cut.component_count >= 2 else "nonseparating"
    return CurveClass(kind, n, _class_sum_mod2(curve))


def geometric_intersection(alpha, beta):
    """Minimal-position crossing number of two multicurves."""
    _same_surface(alpha, beta)
    if alpha.is_empty or beta.is_empty:
        return 0
    return Overlay(alpha.surface,
                   [alpha.weights, beta.weights]).count(0, 1)


def _union_weights(alpha, beta):
    return tuple(a + b for a, b in zip(alpha.weights, beta.weights))


def isotopic(alpha, beta):
    """Whether two connected essential curves are the same class.

    Equal vectors suffice; distinct tight vectors can still cobound an
    annulus (vertex slides do not connect every pair of tight
    positions), so disjoint pairs are cut along their union and checked
    for an annulus piece with one boundary copy from each strand.
    """
    _same_surface(alpha, beta)
    _require_connected_essential(alpha, "isotopic")
    _require_connected_essential(beta, "isotopic")
    if alpha.weights == beta.weights:
        return True
    if geometric_intersection(alpha, beta) != 0:
        return False
    cut = cut_along(alpha.surface, _union_weights(alpha, beta))
    assert len(cut.strand_sides) == 2
    for comp in cut.components:
        if comp.genus != 0 or comp.boundary_count != 2:
            continue
        touching = [k for k, sides in enumerate(cut.strand_sides)
                    if comp.index in sides]
        if touching == [0, 1]:
            return True
    return False


def is_bounding_pair(alpha, beta, verify=False):
    """Whether two curves cobound: non-isotopic, disjoint, each
    non-separating, with separating union.

    The decision comes from the homology test ([alpha] = [beta] mod 2);
    verify=True also cuts along the union and insists the component
    count agrees.
    """
    _same_surface(alpha, beta)
    _require_connected_essential(alpha, "is_bounding_pair")
    _require_connected_essential(beta, "is_bounding_pair")
    if geometric_intersection(alpha, beta) != 0:
        return False
    ha, hb = homology_mod2(alpha), homology_mod2(beta)
    if not any(ha) or not any(hb):
        return False
    if isotopic(alpha, beta):
        return False
    answer = ha == hb
    if verify:
        cut = cut_along(alpha.surface, _union_weights(alpha, beta))
        cut_answer = cut.component_count == 2
        if cut_answer != answer:
            raise AssertionError(
                "bounding-pair tests disagree: homology says "
                f"{answer}, cut says {cut_answer}")
    return answer


# ---------------------------------------------------------------------------
# standard curves


def polygon_chord_diagonals(surface, j, k, weights):
    """Add the fan diagonals a straight chord between polygon sides j < k
    crosses; the chord's endpoints (the crossings of the glued edges)
    are the caller's to record."""
    tj = 0 if j == 0 else j - 1
    tk = surface.num_triangles - 1 if k == 4 * surface.genus - 1 else k - 1
    for i in range(tj + 2, tk + 2):
        weights[2 * surface.genus + (i - 2)] += 1


def standard_curve(surface, name):
    """The pushoff of a labelled handle loop, e.g. "a1" or "b2".

    Built as the straight arc across the polygon fan joining the two
    copies of the partner side (crossing the partner edge once and the
    fan diagonals in between), then tightened.
    """
    if not getattr(surface, "standard", False):
        raise DomainError("standard curves need the standard fanned "
                          "polygon surface")
    g = surface.genus
    kind, idx = name[:1], name[1:]
    if kind not in ("a", "b") or not idx.isdigit() \
            or not 1 <= int(idx) <= g:
        raise DomainError(f"no standard curve named {name!r}")
    m = int(idx) - 1
    if kind == "a":
        j, k = 4 * m + 1, 4 * m + 3      # the two b_i polygon sides
        partner_edge = 2 * m + 1
    else:
        j, k = 4 * m, 4 * m + 2          # the two a_i polygon sides
        partner_edge = 2 * m
    weights = [0] * surface.num_edges
    weights[partner_edge] = 1
    polygon_chord_diagonals(surface, j, k, weights)
    tight, nulls, links = tighten_weights(surface, weights)
    assert any(tight) and not nulls and not links, \
        "standard curve construction collapsed"
    return NormalMultiCurve(surface, tight)


def standard_curves(surface):
    """All 2g labelled pushoffs as {"a1": curve, "b1": curve, ...}."""
    out = {}
    for i in range(1, surface.genus + 1):
        out[f"a{i}"] = standard_curve(surface, f"a{i}")
        out[f"b{i}"] = standard_curve(surface, f"b{i}")
    return out


# ---------------------------------------------------------------------------
# curve finding inside cut pieces


def _simple_closed_walks(graph, chord_moves=None, need_chords=0, cap=1):
    """Closed walks visiting no cell more than `cap` times, shortest first.

    graph maps cells to sorted (entering_slot, target) segment moves.
    chord_moves, when given, maps cells to (tag, target) moves that step
    across a cut chord without crossing an edge; a yielded walk must use
    exactly `need_chords` chord moves, at most one per tag.  With the
    default cap a walk is cell-simple, hence embeddable: its arcs sit in
    distinct disk cells and arcs only ever cross inside a shared cell.
    A cut vertex of the cell graph blocks some curves from cell-simple
    walks entirely, so callers may raise the cap; revisiting walks are
    not automatically embeddable and need their geometry re-verified.
    Yields (slots, tags) pairs, closures always on a segment move.
    """
    cells = sorted(graph)
    max_moves = cap * len(cells)

    def extend(cell, start, slots, tags, counts, budget):
        if budget == 0:
            return
        for slot, target in graph.get(cell, ()):
            if target == start and len(tags) == need_chords:
                yield slots + [slot], tags
            # canonical rotation: the start is the smallest cell entered
            # by a segment move, so never step below it (chord moves are
            # exempt — a chord-entered cell cannot host the closure)
            if target < start:
                continue
            if counts.get(target, 0) < cap:
                counts[target] = counts.get(target, 0) + 1
                yield from extend(target, start, slots + [slot], tags,
                                  counts, budget - 1)
                counts[target] -= 1
        if chord_moves and len(tags) < need_chords:
            for tag, target in chord_moves.get(cell, ()):
                if tag in tags or counts.get(target, 0) >= cap:
                    continue
                counts[target] = counts.get(target, 0) + 1
                yield from extend(target, start, slots, tags + [tag],
                                  counts, budget - 1)
                counts[target] -= 1

    for length in range(1, max_moves + 1):
        for start in cells:
            for slots, tags in extend(start, start, [], [], {start: 1},
                                      length):
                if len(slots) + len(tags) == length:
                    yield slots, tags


def _candidate_curves(surface, walks, budget):
    """Tightened connected essential curves of walk itineraries, deduped,
    in walk order; stops after examining `budget` walks."""
    seen = set()
    for count, (slots, _tags) in enumerate(walks):
        if count >= budget:
            return
        kind, out = tighten_strand(surface, list(slots))
        if kind != "curve":
            continue
        w = [0] * surface.num_edges
        for s in out:
            w[surface.edge_of_slot[s]] += 1
        tight, _nulls, _links = tighten_weights(surface, w)
        if not any(tight) or tight in seen:
            continue
        seen.add(tight)
        curve = NormalMultiCurve(surface, tight)
        if curve.component_count == 1:
            yield curve


def find_nonseparating_in_component(cut, comp, budget=20000):
    """A connected non-separating curve inside one piece of a cut.

    Walks the piece's cell graph (never crossing the cut curve), so the
    result is embedded in the named component; the homology of every
    candidate is checked and the winner's disjointness from the cut
    curve re-verified.  A planar piece raises a no-such-curve error.
    """
    piece = cut.components[comp]
    if piece.genus == 0:
        raise DomainError(
            f"component {comp} has genus 0: every curve in a planar "
            "piece separates the surface or bounds")
    surface = cut.surface
    walks = _simple_closed_walks(cut.cell_graph(comp))
    for curve in _candidate_curves(surface, walks, budget):
        if not any(homology_mod2(curve)):
            continue
        crossings = Overlay(surface,
                            [curve.weights, cut.weights]).count(0, 1)
        assert crossings == 0, "walk curve left its component"
        return curve
    raise SearchExhausted(
        f"no non-separating curve found in component {comp} within "
        f"{budget} candidate walks")


def find_z_avoiding_bounding_pairs(x, y, budget=20000):
    """A non-separating curve disjoint from a bounding pair that pairs
    with neither member.

    Searches both pieces of the cut along x ∪ y, shortest candidates
    first, and verifies every postcondition on the winner.
    """
    if not is_bounding_pair(x, y, verify=True):
        raise DomainError(
            "find_z_avoiding_bounding_pairs needs a bounding pair")
    surface = x.surface
    cut = cut_along(surface, _union_weights(x, y))
    assert cut.component_count == 2
    for comp in range(2):
        walks = _simple_closed_walks(cut.cell_graph(comp))
        for z in _candidate_curves(surface, walks, budget):
            if not any(homology_mod2(z)):
                continue
            # a parallel copy of x or y passes the pair tests vacuously
            # but is useless downstream; insist on a genuinely new curve
            if isotopic(z, x) or isotopic(z, y):
                continue
            if is_bounding_pair(x, z) or is_bounding_pair(y, z):
                continue
            assert geometric_intersection(z, x) == 0
            assert geometric_intersection(z, y) == 0
            return z
    raise SearchExhausted(
        f"no avoiding curve found within {budget} candidate walks per "
        "piece")


def dual_curve_candidates(alpha, beta, budget=20000, avoid=()):
    """Yield curves meeting each of two disjoint non-pair curves once.

    The two target curves must be disjoint, non-separating, non-isotopic
    and not a bounding pair.  Candidate walks live in the cell complex
    of the cut-open complement, extended by moves that step across a
    chord of either target, each target's chords crossed exactly once.
    Walks may pass through a cell twice — a cut vertex of the cell graph
    can force that — so a walk is not automatically embedded and its
    class may shed the marked crossings when tightened; every
    candidate's crossing numbers are therefore re-measured exactly and
    only verified (1, 1) duals are yielded, in search order.

    avoid: further connected curves, disjoint from the targets and from
    each other, that the duals must not touch.  Their strands wall off
    the search — no crossing moves are offered over them — so every
    candidate is drawn clear of them.  Cutting along the larger union
    may leave several pieces; walks are collected over all of them.
    """
    _same_surface(alpha, beta)
    _require_connected_essential(alpha, "dual curve search")
    _require_connected_essential(beta, "dual curve search")
    avoid = tuple(avoid)
    for av in avoid:
        _same_surface(av, alpha)
        _require_connected_essential(av, "dual curve search avoid entry")
    pool = [alpha, beta] + list(avoid)
    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            if geometric_intersection(pool[i], pool[j]) != 0:
                raise DomainError("dual curve search needs pairwise "
                                  "disjoint input curves")
    if not any(homology_mod2(alpha)) or not any(homology_mod2(beta)):
        raise DomainError("dual curve search needs non-separating curves")
    if isotopic(alpha, beta):
        raise DomainError("dual curve search needs non-isotopic curves")
    if is_bounding_pair(alpha, beta):
        raise DomainError("dual curve search needs a non-bounding pair")
    surface = alpha.surface
    union = tuple(sum(ws) for ws in zip(*[c.weights for c in pool]))
    cut = cut_along(surface, union)
    if not avoid:
        assert cut.component_count == 1, "non-pair union still separated"

    strand_curve = _attribute_strands(cut, alpha, beta, avoid)
    chord_moves = {}
    drawing = cut.drawing
    for k, strand in enumerate(drawing.strands):
        if strand_curve[k] == "avoid":
            continue
        for c in range(len(strand)):
            left, right = _chord_sides(drawing, strand, c)
            tag = strand_curve[k]
            chord_moves.setdefault(left, []).append((tag, right))
            chord_moves.setdefault(right, []).append((tag, left))
    for moves in chord_moves.values():
        moves.sort()

    graph = {}
    for comp in range(cut.component_count):
        graph.update(cut.cell_graph(comp))
    walks = _simple_closed_walks(graph, chord_moves, need_chords=2, cap=2)
    for delta in _candidate_curves(surface, walks, budget):
        ia = geometric_intersection(delta, alpha)
        ib = geometric_intersection(delta, beta)
        if (ia, ib) != (1, 1):
            continue
        assert any(homology_mod2(delta))
        yield delta


def find_dual_curve(alpha, beta, budget=20000, avoid=()):
    """First curve of dual_curve_candidates, or SearchExhausted."""
    for delta in dual_curve_candidates(alpha, beta, budget, avoid):
        return delta
    raise SearchExhausted(
        f"no dual curve found within {budget} candidate walks")


def _attribute_strands(cut, alpha, beta, avoid=()):
    """Which input curve each strand of the union drawing belongs to:
    tags 'alpha'/'beta' for the two dual targets, 'avoid' for walls."""
    surface = cut.surface
    named = [("alpha", alpha), ("beta", beta)] \
        + [("avoid", av) for av in avoid]
    strand_vectors = []
    for slots in cut.drawing.itineraries():
        w = [0] * surface.num_edges
        for s in slots:
            w[surface.edge_of_slot[s]] += 1
        strand_vectors.append(tuple(w))
    tags = [None] * len(strand_vectors)
    free = list(range(len(named)))
    for k, w in enumerate(strand_vectors):
        for pos in free:
            if named[pos][1].weights == w:
                tags[k] = named[pos][0]
                free.remove(pos)
                break
    for k, w in enumerate(strand_vectors):
        if tags[k] is not None:
            continue
        # a strand may sit in a different tight position inside the
        # union; classes still tell the curves apart
        strand = NormalMultiCurve(surface, w)
        for pos in free:
            if isotopic(strand, named[pos][1]):
                tags[k] = named[pos][0]
                free.remove(pos)
                break
    assert not free and None not in tags, \
        "union drawing did not split into the input curves"
    return tags
