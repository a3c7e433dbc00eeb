"""Cutting a surface along a drawn multicurve.

The drawing's chords refine each triangle into cells: every corner with
n nested arcs contributes n cells (the innermost containing the corner),
and one central cell remains between the outermost arcs.  Cells meet
across the segments into which the crossing points divide each edge,
and never across chords — the chords are the cut.  Unioning cells over
the segment gluings yields the components of the cut surface.

Euler characteristics come from the refined complex directly.  Faces
are cells; edges are the glued segments plus two boundary copies of
every chord; vertices are the original vertex plus two copies of every
crossing point, one per side, each identifiable with a segment end.
Genus then follows from chi = 2 - 2*genus - boundary_count, and the
boundary circles are the two side copies of each strand.

Cell keys are (triangle, corner, depth) with corner 3 standing in for
the central cell, so a cell's ambient triangle is its first entry.
Components are numbered by their smallest cell key, which makes the
numbering deterministic for a fixed weight vector.
"""

from __future__ import annotations

from .errors import DomainError
from .tracing import Drawing, chord_turn


def _segment_cell(drawing, t, j, s):
    """Cell of triangle t touching segment s of side j.

    Segments are indexed 0..w in the direction of slot (t, j); the first
    n_j lie between the corner-j arcs, the one past them touches the
    central cell, and the rest count down the corner-(j+1) nest.
    """
    n = drawing.corners[t]
    if s < n[j]:
        return (t, j, s)
    w = drawing.weights[drawing.surface.edge(t, j)]
    if s > n[j]:
        return (t, (j + 1) % 3, w - s)
    return (t, 3, 0)


def _chord_sides(drawing, strand, k):
    """(left, right) cells beside chord k of a strand.

    The chord's cut corner sits left of the traversal exactly when the
    turn is -1, so the corner-side cell is the left cell then and the
    right cell otherwise.
    """
    surface = drawing.surface
    slot, point = strand[k]
    slot_next = strand[(k + 1) % len(strand)][0]
    t, j = slot // 3, slot % 3
    turn = chord_turn(surface, slot, slot_next)
    w = drawing.weights[surface.edge_of_slot[slot]]
    r = point if surface.is_slot_a(slot) else w - 1 - point
    if turn == -1:
        corner, rank = j, r
    else:
        corner, rank = (j + 1) % 3, w - 1 - r
    inner = (t, corner, rank)
    if rank + 1 < drawing.corners[t][corner]:
        outer = (t, corner, rank + 1)
    else:
        outer = (t, 3, 0)
    return (inner, outer) if turn == -1 else (outer, inner)


class CutComponent:
    """One piece of the cut surface."""

    def __init__(self, index, cells, genus, boundary_count):
        self.index = index
        self.cells = cells
        self.genus = genus
        self.boundary_count = boundary_count

    def ambient_triangles(self):
        """Sorted triangles of the original surface this piece meets."""
        return sorted({c[0] for c in self.cells})

    def __repr__(self):
        return (f"CutComponent({self.index}: genus={self.genus}, "
                f"boundaries={self.boundary_count}, "
                f"cells={len(self.cells)})")


class CutSurface:
    """The surface cut along a multicurve, as regrouped triangle cells.

    components are ordered by smallest cell key.  component_of maps each
    cell to its component index.  strand_sides lists, per strand of the
    cut curve, the component indices left and right of the traversal;
    each entry is one boundary circle of the cut surface.  adjacency
    records every glued segment as (cell_a, cell_b, slot_a, slot_b,
    edge, segment): crossing from cell_a into cell_b enters the far
    triangle through slot_b, and through slot_a the other way.
    """

    def __init__(self, surface, weights):
        self.surface = surface
        self.weights = tuple(weights)
        self.drawing = Drawing(surface, self.weights)
        self._build()

    def _build(self):
        surface = self.surface
        drawing = self.drawing

        cells = []
        for t in range(surface.num_triangles):
            n = drawing.corners[t]
            cells.append((t, 3, 0))
            for j in range(3):
                cells.extend((t, j, d) for d in range(n[j]))
        parent = {c: c for c in cells}

        def find(c):
            while parent[c] != c:
                parent[c] = parent[parent[c]]
                c = parent[c]
            return c

        self.adjacency = []
        for e in range(surface.num_edges):
            sa, sb = surface.slots_of_edge[e]
            ta, ja = sa // 3, sa % 3
            tb, jb = sb // 3, sb % 3
            w = self.weights[e]
            for s in range(w + 1):
                ca = _segment_cell(drawing, ta, ja, s)
                cb = _segment_cell(drawing, tb, jb, w - s)
                ra, rb = find(ca), find(cb)
                if ra != rb:
                    parent[ra] = rb
                self.adjacency.append((ca, cb, sa, sb, e, s))

        groups = {}
        for c in cells:
            groups.setdefault(find(c), []).append(c)
        ordered = sorted(groups.values(), key=min)
        self.component_of = {c: i for i, grp in enumerate(ordered)
                             for c in grp}

        k = len(ordered)
        faces = [len(grp) for grp in ordered]
        edges = [0] * k
        verts = [0] * k
        boundaries = [0] * k

        for (ca, _cb, _sa, _sb, e, s) in self.adjacency:
            i = self.component_of[ca]
            edges[i] += 1
            verts[i] += (1 if s > 0 else 0) + (1 if s < self.weights[e] else 0)
        verts[self.component_of[_segment_cell(drawing, 0, 0, 0)]] += 1

        self.strand_sides = []
        for strand in drawing.strands:
            seen = [set(), set()]
            for chord in range(len(strand)):
                for side, cell in enumerate(_chord_sides(
                        drawing, strand, chord)):
                    comp = self.component_of[cell]
                    edges[comp] += 1
                    seen[side].add(comp)
            if any(len(s) != 1 for s in seen):
                raise AssertionError(
                    "one strand side touched several components")
            sides = (seen[0].pop(), seen[1].pop())
            self.strand_sides.append(sides)
            for side in sides:
                boundaries[side] += 1

        self.components = []
        for i in range(k):
            chi = verts[i] - edges[i] + faces[i]
            genus2 = 2 - boundaries[i] - chi
            if genus2 < 0 or genus2 % 2:
                raise AssertionError(
                    f"cut component has chi={chi}, "
                    f"boundaries={boundaries[i]}: not a surface piece")
            self.components.append(CutComponent(
                i, frozenset(ordered[i]), genus2 // 2, boundaries[i]))

        total_chi = sum(2 - 2 * c.genus - c.boundary_count
                        for c in self.components)
        if total_chi != 2 - 2 * surface.genus:
            raise AssertionError("cut lost Euler characteristic")
        if sum(c.boundary_count for c in self.components) != \
                2 * len(drawing.strands):
            raise AssertionError("cut lost boundary circles")

    @property
    def component_count(self):
        return len(self.components)

    def cell_graph(self, comp):
        """Crossing moves available inside one component.

        Maps each cell of the component to a sorted list of moves
        (entering_slot, target_cell): crossing the glued segment into
        the neighbouring triangle enters it through entering_slot.
        Closed walks in this graph are exactly the transverse curve
        positions inside the component, clear of the cut curve.
        """
        graph = {}
        for (ca, cb, sa, sb, _e, _s) in self.adjacency:
            if self.component_of[ca] != comp:
                continue
            graph.setdefault(ca, []).append((sb, cb))
            graph.setdefault(cb, []).append((sa, ca))
        for moves in graph.values():
            moves.sort()
        return graph


def cut_along(surface, weights):
    """Cut the surface along the drawn multicurve of a weight vector.

    The weights must be admissible and describe an essential multicurve:
    an empty vector, or one with a component bounding a disk (which the
    cut exposes as a genus-0 piece with one boundary circle), is refused
    rather than silently absorbed.
    """
    weights = tuple(weights)
    if not any(weights):
        raise DomainError("cannot cut along an empty multicurve")
    cut = CutSurface(surface, weights)
    for comp in cut.components:
        if comp.genus == 0 and comp.boundary_count == 1:
            raise DomainError(
                "multicurve has an inessential component bounding a disk; "
                "cut along essential curves only")
    return cut


class SubsurfaceSpec:
    """A side of a cut: the boundary multicurve plus a component index."""

    def __init__(self, boundary, side):
        self.boundary = boundary
        self.side = side

    def __repr__(self):
        return f"SubsurfaceSpec(side={self.side})"
