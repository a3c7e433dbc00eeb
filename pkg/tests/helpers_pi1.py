"""Free-homotopy oracle for itineraries: conjugacy classes in pi_1.

The surface minus its vertex deformation-retracts onto the dual spine
(triangles are nodes, edges are dual arcs), so the punctured group is free
on the dual edges outside a spanning tree.  Filling the vertex back in
imposes a single relation: the word of the vertex-link loop.  For genus
>= 2 the resulting presentation <x_1 .. x_2g | R> with |R| = 4g has all
pieces of length 1, hence satisfies C'(1/6), and Dehn's algorithm decides
the word problem.

Conjugacy is decided on cyclically Dehn-reduced words by searching relator
applications: first a cheap pass of length-preserving half-relator swaps,
then a bidirectional search over all relator applications bounded slightly
above the reduced lengths.  Half-swaps alone are not complete: an annular
band between two reduced words can sweep through sub-half relator arcs
whose junction letters cancel, which changes the word without ever exposing
more than half a relator.  True answers are certificates (each step is a
relator application); a budget overflow raises rather than guessing.

This module is an independent check on the tightening engine: it shares no
code with the normal-coordinate machinery beyond the triangulation type.
"""
from collections import deque


class Pi1:
    def __init__(self, surf):
        self.surf = surf
        # spanning tree of the dual graph (triangles as nodes)
        tree_edges = set()
        seen = {0}
        frontier = deque([0])
        while frontier:
            t = frontier.popleft()
            for j in range(3):
                s = 3 * t + j
                e = surf.edge_of_slot[s]
                t2 = surf.partner[s] // 3
                if t2 not in seen:
                    seen.add(t2)
                    tree_edges.add(e)
                    frontier.append(t2)
        assert len(seen) == surf.num_triangles
        self.tree = tree_edges
        self.gens = [e for e in range(surf.num_edges) if e not in tree_edges]
        self.gen_index = {e: i for i, e in enumerate(self.gens)}
        # relator: word of the vertex-link loop (constant-turn walk)
        s0 = 0
        slots = [s0]
        D = 3 * surf.num_triangles
        for _ in range(D):
            cur = slots[-1]
            x = 3 * (cur // 3) + (cur % 3 + 1) % 3
            slots.append(surf.partner[x])
        assert slots[-1] == s0
        self.relator = self.word(slots[:-1])
        self._rot_cache = None
        self._rot_index = None

    def word(self, slots):
        """Freely reduced word (tuple of signed letters) of an itinerary."""
        out = []
        for s in slots:
            e = self.surf.edge_of_slot[s]
            if e in self.tree:
                continue
            letter = (self.gen_index[e], 1 if self.surf.is_slot_a(s) else -1)
            if out and out[-1] == (letter[0], -letter[1]):
                out.pop()
            else:
                out.append(letter)
        return tuple(out)

    # ---- cyclic word utilities ----
    @staticmethod
    def _cyc_reduce(w):
        out = []
        for letter in w:
            if out and out[-1] == (letter[0], -letter[1]):
                out.pop()
            else:
                out.append(letter)
        while len(out) >= 2 and out[0] == (out[-1][0], -out[-1][1]):
            out = out[1:-1]
        return tuple(out)

    @staticmethod
    def _inv(w):
        return tuple((g, -s) for g, s in reversed(w))

    @staticmethod
    def _canon(w):
        if not w:
            return w
        return min(w[i:] + w[:i] for i in range(len(w)))

    def _relator_rotations(self):
        if self._rot_cache is None:
            rots = []
            for base in (self.relator, self._inv(self.relator)):
                n = len(base)
                for i in range(n):
                    rots.append(base[i:] + base[:i])
            self._rot_cache = rots
        return self._rot_cache

    def _rotation_index(self):
        if self._rot_index is None:
            index = {}
            for rot in self._relator_rotations():
                index.setdefault(rot[0], []).append(rot)
            self._rot_index = index
        return self._rot_index

    def dehn_reduce(self, w):
        """Cyclic Dehn reduction: shrink while any cyclic subword covers
        more than half a relator rotation.  Empty output certifies the
        input was null-homotopic."""
        R = len(self.relator)
        w = self._cyc_reduce(w)
        changed = True
        while changed and w:
            changed = False
            n = len(w)
            cat = w + w
            for l in range(min(n, R), R // 2, -1):
                for i in range(n):
                    u = cat[i:i + l]
                    for rot in self._relator_rotations():
                        if rot[:l] == u:
                            rest = cat[i + l:i + n]
                            w = self._cyc_reduce(self._inv(rot[l:]) + rest)
                            changed = True
                            break
                    if changed:
                        break
                if changed:
                    break
        return w

    def _abelianized(self, w):
        v = [0] * len(self.gens)
        for g, s in w:
            v[g] += s
        return tuple(v)

    def _neighbors(self, w, bound):
        """Canonical forms one relator application away from the cyclic
        word w, cyclically reduced, of length at most `bound`."""
        n = len(w)
        cat = w + w
        index = self._rotation_index()
        out = set()
        for i in range(n):
            for rot in index.get(cat[i], ()):
                match = 0
                while (match < len(rot) and match < n
                       and rot[match] == cat[i + match]):
                    match += 1
                for l in range(1, match + 1):
                    cand = self._cyc_reduce(
                        self._inv(rot[l:]) + cat[i + l:i + n])
                    if len(cand) <= bound:
                        out.add(self._canon(cand))
        return out

    def _halfswap_search(self, start, target):
        """Cheap incomplete pass: length-preserving half-relator swaps.
        False means only that this pass found nothing; callers escalate."""
        R = len(self.relator)
        half = R // 2
        if len(start) < half:
            return False
        seen = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            n = len(w)
            cat = w + w
            for i in range(n):
                u = cat[i:i + half]
                for rot in self._relator_rotations():
                    if rot[:half] == u:
                        cand = self._cyc_reduce(
                            self._inv(rot[half:]) + cat[i + half:i + n])
                        if len(cand) != n:
                            continue
                        c = self._canon(cand)
                        if c == target:
                            return True
                        if c not in seen:
                            seen.add(c)
                            queue.append(c)
            if len(seen) > 200000:
                return False
        return False

    def same_curve_class(self, w1, w2):
        """Unoriented free-homotopy test: strands drawn independently may
        traverse the same curve in opposite directions, so compare up to
        inversion as well as conjugation."""
        return self.conjugate(w1, w2) or self.conjugate(w1, self._inv(w2))

    def conjugate(self, w1, w2):
        """Decide whether two itinerary words are conjugate."""
        a = self.dehn_reduce(w1)
        b = self.dehn_reduce(w2)
        if (not a) or (not b):
            return a == b
        if self._abelianized(a) != self._abelianized(b):
            return False
        start, target = self._canon(a), self._canon(b)
        if start == target:
            return True
        if len(a) == len(b) and self._halfswap_search(start, target):
            return True
        # bidirectional search over all relator applications; length can dip
        # and climb through band sweeps, so allow a corridor above the inputs
        bound = max(len(a), len(b)) + 6
        color = {start: 0, target: 1}
        queue = deque([start, target])
        while queue:
            w = queue.popleft()
            side = color[w]
            for nb in self._neighbors(w, bound):
                prev = color.get(nb)
                if prev is None:
                    color[nb] = side
                    queue.append(nb)
                elif prev != side:
                    return True
            if len(color) > 60000:
                raise RuntimeError("conjugacy search exceeded budget")
        return False
