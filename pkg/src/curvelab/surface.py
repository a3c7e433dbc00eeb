"""One-vertex triangulations of closed oriented surfaces.

A triangulation is a list of triangles with oriented side slots and a
pairing of the 3F slots into E edges.  Triangle ``t`` has side slots
``(t, 0), (t, 1), (t, 2)``; slot ``(t, j)`` is the oriented arc from corner
``j`` to corner ``j + 1`` (mod 3) in the triangle's positive boundary
orientation.  Slots are also addressed by the flat id ``3*t + j``.

Each edge records its two slots ``(slot_a, slot_b)``.  On an oriented
surface the two boundary traversals run along the edge in opposite
directions, so points on an edge are ordered along slot_a's traversal and
seen reversed from slot_b.  The ``orient`` flag of a gluing is True for this
orientation-compatible identification; False encodes a slip that makes the
surface non-orientable, which ``validate`` reports.

The standard surface of genus g is triangulated by fanning the 4g-gon with
boundary word a1 b1 a1^-1 b1^-1 ... from its corner P0.  All polygon
corners become a single vertex, and the 2g identified side pairs keep their
generator labels; transverse crossing counts against those labelled edges
give mod-2 homology classes directly.
"""

from __future__ import annotations

import json

from .errors import InvalidGenusError, MalformedInputError

FORMAT_TAG = "curve-lab/1"


def _slot(t, j):
    return 3 * t + j


class Triangulation:
    """Closed triangulated surface with oriented triangles.

    Parameters
    ----------
    genus : declared genus (validated against Euler characteristic)
    triangles : number of triangles F
    gluing : list of (slot_a, slot_b, orient) triples pairing all 3F slots
    side_labels : optional map edge -> (name, kind) for edges that came from
        the identified polygon sides of the standard construction; kind is
        "a" or "b" and name is e.g. "a2".  Fan diagonals carry no label.
    """

    def __init__(self, genus, triangles, gluing, side_labels=None, name=None):
        self.genus = genus
        self.num_triangles = triangles
        self.gluing = [tuple(row) for row in gluing]
        self.side_labels = dict(side_labels or {})
        self.name = name or f"genus{genus}"
        self._build_tables()

    def _build_tables(self):
        nslots = 3 * self.num_triangles
        self.num_edges = len(self.gluing)
        self.edge_of_slot = [None] * nslots
        self.partner = [None] * nslots
        self.slots_of_edge = []
        self.orient_of_edge = []
        for e, (sa, sb, orient) in enumerate(self.gluing):
            for s in (sa, sb):
                if not 0 <= s < nslots:
                    raise MalformedInputError(f"slot {s} out of range")
                if self.edge_of_slot[s] is not None:
                    raise MalformedInputError(f"slot {s} glued twice")
                self.edge_of_slot[s] = e
            self.partner[sa] = sb
            self.partner[sb] = sa
            self.slots_of_edge.append((sa, sb))
            self.orient_of_edge.append(bool(orient))
        if any(e is None for e in self.edge_of_slot):
            raise MalformedInputError("not every side is glued")

    # -- elementary queries -------------------------------------------------

    def triangle_of_slot(self, s):
        return s // 3

    def edge(self, t, j):
        return self.edge_of_slot[_slot(t, j)]

    def is_slot_a(self, s):
        return self.slots_of_edge[self.edge_of_slot[s]][0] == s

    def euler_characteristic(self):
        return self.vertex_count() - self.num_edges + self.num_triangles

    def vertex_count(self):
        """Number of vertices, via orbits of the rotation around corners.

        Corner j of triangle t is crossed into the glued triangle through
        side j; the corner-j end of slot (t, j) matches the far end of the
        partner slot, landing at corner j'+1.
        """
        nslots = 3 * self.num_triangles
        seen = [False] * nslots
        count = 0
        for start in range(nslots):
            if seen[start]:
                continue
            count += 1
            c = start
            while not seen[c]:
                seen[c] = True
                p = self.partner[c]
                c = 3 * (p // 3) + (p % 3 + 1) % 3
        return count

    def vertex_link(self):
        """Corner slots in rotation order around the vertex.

        Only meaningful on a one-vertex triangulation; returns the single
        cyclic orbit of the corner rotation as a list of slot ids, where slot
        id s stands for corner s%3 of triangle s//3.
        """
        link = [0]
        p = self.partner[0]
        c = 3 * (p // 3) + (p % 3 + 1) % 3
        while c != 0:
            link.append(c)
            p = self.partner[c]
            c = 3 * (p // 3) + (p % 3 + 1) % 3
        return link

    # -- serialization ------------------------------------------------------

    def to_json_dict(self):
        tri = [[self.edge(t, j) for j in range(3)]
               for t in range(self.num_triangles)]
        return {
            "format": FORMAT_TAG,
            "genus": self.genus,
            "triangles": tri,
            "gluing": [[sa, sb, bool(o)] for sa, sb, o in self.gluing],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True,
                          separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data):
        try:
            if data.get("format") != FORMAT_TAG:
                raise MalformedInputError(
                    f"unknown format tag {data.get('format')!r}")
            genus = int(data["genus"])
            triangles = len(data["triangles"])
            gluing = [(int(a), int(b), bool(o)) for a, b, o in data["gluing"]]
        except MalformedInputError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad surface data: {exc}") from exc
        surf = cls(genus, triangles, gluing)
        # cross-check the redundant per-slot edge table if present
        for t, row in enumerate(data["triangles"]):
            for j, e in enumerate(row):
                if surf.edge(t, j) != e:
                    raise MalformedInputError(
                        f"triangles table disagrees with gluing at slot "
                        f"({t},{j})")
        return surf


def build_standard_surface(genus):
    """The fanned-polygon one-vertex triangulation of the closed genus-g
    surface.

    The 4g-gon with corners P0..P_{4g-1} and boundary word
    a1 b1 a1^-1 b1^-1 a2 ... is fanned from P0: triangle T_i = (P0, P_i,
    P_{i+1}) for i = 1..4g-2, indexed from 0 here.  Side 1 of T_i is the
    polygon side S_i; sides 0 and 2 are the fan diagonals D_i = (P0, P_i)
    and D_{i+1} reversed, except at the two extremes where they are S_0 and
    S_{4g-1}.  Identified polygon sides keep their generator labels.

    Counts: V = 1, E = 6g - 3, F = 4g - 2.
    """
    if genus < 1:
        raise InvalidGenusError(f"genus must be >= 1, got {genus}")
    g = genus
    n = 4 * g           # polygon sides
    F = n - 2

    # edge numbering: 2g labelled side pairs first, then the fan diagonals
    # D_2 .. D_{n-2}
    def side_pair(k):
        # polygon side S_k belongs to pair k//... : S_{4m}~S_{4m+2} (a_{m+1}),
        # S_{4m+1}~S_{4m+3} (b_{m+1})
        m, r = divmod(k, 4)
        return 2 * m + (r % 2)

    def diag_edge(i):
        # diagonal D_i = (P0, P_i), i in 2..n-2
        return 2 * g + (i - 2)

    # slot of polygon side S_k / diagonal D_i in the fan:
    # T_i (0-indexed t = i-1) has side0 = D_i (S_0 when i = 1),
    # side1 = S_i, side2 = D_{i+1} (S_{n-1} when i = n-2).
    def slot_of_polygon_side(k):
        if k == 0:
            return _slot(0, 0)
        if k == n - 1:
            return _slot(F - 1, 2)
        return _slot(k - 1, 1)

    pairs = {}       # edge -> [slots]
    for k in range(n):
        pairs.setdefault(side_pair(k), []).append((k, slot_of_polygon_side(k)))
    gluing_rows = {}
    for e, entries in pairs.items():
        (k1, s1), (k2, s2) = sorted(entries)
        # S_{4m} runs P_{4m}->P_{4m+1} as the generator; S_{4m+2} runs it
        # backwards.  Slot order (inverse copy first as slot_a) is a
        # convention; orientation-compatible either way.
        gluing_rows[e] = (s1, s2, True)
    for i in range(2, n - 1):
        # D_i appears as side0 of T_i (t = i-1) and side2 of T_{i-1}
        # (t = i-2), traversed P0->P_i and P_i->P0 respectively.
        gluing_rows[diag_edge(i)] = (_slot(i - 1, 0), _slot(i - 2, 2), True)

    gluing = [gluing_rows[e] for e in range(len(gluing_rows))]
    labels = {}
    names = []
    for m in range(g):
        names.append((2 * m, f"a{m + 1}", "a"))
        names.append((2 * m + 1, f"b{m + 1}", "b"))
    for e, nm, kind in names:
        labels[e] = (nm, kind)
    surf = Triangulation(g, F, gluing, side_labels=labels,
                         name=f"standard-g{g}")
    surf.standard = True
    report = validate(surf)
    if not report.ok:
        raise AssertionError(f"standard surface failed validation: {report}")
    return surf


class ValidationReport:
    """Outcome of `validate`: per-check booleans plus messages."""

    def __init__(self):
        self.closed = True
        self.orientable = True
        self.connected = True
        self.one_vertex = True
        self.euler_ok = True
        self.messages = []

    @property
    def ok(self):
        return (self.closed and self.orientable and self.connected
                and self.one_vertex and self.euler_ok)

    def __repr__(self):
        status = "ok" if self.ok else "; ".join(self.messages)
        return f"<ValidationReport {status}>"


def validate(surface):
    """Check closedness, orientability, connectedness, the one-vertex
    property and the Euler count against the declared genus."""
    rep = ValidationReport()
    # closedness is structural (constructor enforces the pairing), but the
    # orient flags can still encode a non-orientable identification
    for e, ok in enumerate(surface.orient_of_edge):
        if not ok:
            rep.orientable = False
            rep.messages.append(
                f"edge {e} glued with an orientation-reversing slip")
            break
    # connectedness of the triangle adjacency graph
    F = surface.num_triangles
    if F:
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for j in range(3):
                u = surface.partner[_slot(t, j)] // 3
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != F:
            rep.connected = False
            rep.messages.append("triangle adjacency graph is disconnected")
    v = surface.vertex_count()
    if v != 1:
        rep.one_vertex = False
        rep.messages.append(f"expected one vertex, found {v}")
    chi = v - surface.num_edges + F
    if chi != 2 - 2 * surface.genus:
        rep.euler_ok = False
        rep.messages.append(
            f"Euler characteristic {chi} does not match genus "
            f"{surface.genus}")
    return rep


def euler_characteristic(surface):
    return surface.euler_characteristic()
