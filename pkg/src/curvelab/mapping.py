"""Dehn twists and twist words acting on normal multicurves.

The image of a multicurve under a power of a twist is computed on the
drawn strands: every crossing with the twisting curve shows up as a
swapped band of the overlay, and the twisted strand follows the original
until that band opens, winds |k| times around the twisting curve in the
direction the crossing dictates, then continues.  The spliced
itineraries are tightened back to minimal normal position, so the
result is again a canonical weight vector.
"""

from .curves import (NormalMultiCurve, _require_connected_essential,
                     _same_surface, dual_curve_candidates,
                     geometric_intersection, is_separating, isotopic,
                     standard_curve)
from .errors import DomainError, MalformedInputError, SearchExhausted
from .overlay import Overlay
from .tracing import tighten_strand, tighten_weights

DEFAULT_WORD_BUDGET = 2000


def _directed_slots(surface, slots, direction):
    """Slot itinerary of a strand traversed forward (+1) or reversed (-1)."""
    if direction == 1:
        return list(slots)
    n = len(slots)
    return [surface.partner[slots[(n - i) % n]] for i in range(n)]


def apply_twist(c, curve, k):
    """Image of `curve` under the k-th power of the Dehn twist about c.

    c must be a connected essential curve on the same surface; k may be
    any integer (k < 0 twists the opposite way, k == 0 is the identity).
    Components of `curve` disjoint from c pass through untouched, so for
    i(curve, c) == 0 the result is `curve` itself.

    Each crossing is a swapped band of the overlay.  The inserted loop
    runs around c in the direction d = b_dir * band.sign * sign(k),
    starting just past the band's first shared edge and ending back on
    it, so the splice stays a legal itinerary.  Crossings that open on
    the same passage of `curve` are nested by their transverse position
    on the shared edge, swept from the side the strand arrives on.
    """
    _same_surface(c, curve)
    _require_connected_essential(c, "apply_twist")
    if k != int(k):
        raise DomainError("twist power must be an integer")
    if k == 0 or curve.is_empty:
        return curve
    surface = curve.surface
    ov = Overlay(surface, [curve.weights, c.weights])
    if ov.count(0, 1) == 0:
        return curve

    alpha_itins = ov.drawings[0].itineraries()
    c_itins = ov.drawings[1].itineraries()
    c_strands = ov.drawings[1].strands
    step = 1 if k > 0 else -1

    pending = {}
    for band in ov.crossings(0, 1):
        cs = c_itins[band.b_strand]
        n_c = len(cs)
        d = band.b_dir * band.sign * step
        trav = _directed_slots(surface, cs, d)
        if d == band.b_dir:
            start = (band.b_start + 1) % n_c
        else:
            start = (n_c - band.b_start) % n_c
        loop = [trav[(start + i) % n_c] for i in range(n_c)] * abs(k)
        # transverse position of this passage of c on the shared edge,
        # read in the frame of the slot the twisted strand enters by
        fwd_idx = band.b_start if band.b_dir == 1 else \
            (n_c - band.b_start) % n_c
        shared = alpha_itins[band.a_strand][band.a_start]
        edge = surface.edge_of_slot[shared]
        assert surface.edge_of_slot[c_strands[band.b_strand][fwd_idx][0]] \
            == edge
        point = c_strands[band.b_strand][fwd_idx][1]
        rank = point if surface.is_slot_a(shared) \
            else c.weights[edge] - 1 - point
        order = rank if band.arrive == -1 else -rank
        pending.setdefault(band.a_strand, []).append(
            (band.a_start, order, band.b_dir, band.b_start, loop))

    new_weights = [0] * surface.num_edges
    for idx, slots in enumerate(alpha_itins):
        by_pos = {}
        for rec in sorted(pending.get(idx, ()), key=lambda rec: rec[:4]):
            by_pos.setdefault(rec[0], []).append(rec[4])
        spliced = []
        for p, slot in enumerate(slots):
            spliced.append(slot)
            for loop in by_pos.get(p, ()):
                spliced.extend(loop)
        kind, tight_slots = tighten_strand(surface, spliced)
        assert kind == "curve", "twisted strand tightened to a trivial loop"
        for s in tight_slots:
            new_weights[surface.edge_of_slot[s]] += 1
    tight, nulls, links = tighten_weights(surface, new_weights)
    assert not nulls and not links, "twisted multicurve shed trivial pieces"
    return NormalMultiCurve(surface, tight)


class GeneratorSet:
    """An ordered chain of twisting curves, indexed from 1 in words."""

    def __init__(self, surface, curves):
        self.surface = surface
        self.curves = tuple(curves)

    def __len__(self):
        return len(self.curves)

    def curve(self, index):
        if not 1 <= index <= len(self.curves):
            raise DomainError(f"letter index {index} outside the chain "
                              f"of {len(self.curves)} twisting curves")
        return self.curves[index - 1]


def humphries_generators(surface):
    """The standard chain of 2g+1 twisting curves on the fanned surface.

    Ordered b_1, a_1, x_1, a_2, x_2, ..., x_{g-1}, a_g, b_g, where x_i
    crosses a_i and a_{i+1} once each; consecutive members of the chain
    cross exactly once and all other pairs are disjoint.  Twists about
    these curves generate every mapping class.  On the torus the chain
    degenerates to (b_1, a_1, b_1).

    Each connector x_i comes out of the dual-curve search walled off
    from every other member of the chain, the full crossing grid is
    verified before returning, and the result is cached per surface.
    """
    if not getattr(surface, "standard", False):
        raise DomainError("the twist chain needs the standard fanned "
                          "polygon surface")
    cached = getattr(surface, "_twist_chain", None)
    if cached is not None:
        return cached
    g = surface.genus
    a = [standard_curve(surface, f"a{i}") for i in range(1, g + 1)]
    b1 = standard_curve(surface, "b1")
    if g == 1:
        chain = [b1, a[0], b1]
    else:
        bg = standard_curve(surface, f"b{g}")
        xs = []
        for i in range(1, g):
            left, right = a[i - 1], a[i]
            others = [c for c in a if c is not left and c is not right] \
                + [bg, b1] + xs
            # a wall set must be a multicurve disjoint from the targets,
            # so members crossing a target or an earlier wall can't wall
            # the cut; the connector must still stay clear of them, so
            # they filter the candidate stream instead
            walls, loose = [], []
            for c in others:
                if all(geometric_intersection(c, d) == 0
                       for d in (left, right, *walls)):
                    walls.append(c)
                else:
                    loose.append(c)
            for x in dual_curve_candidates(left, right, avoid=walls):
                if all(geometric_intersection(x, c) == 0 for c in loose):
                    break
            else:
                raise SearchExhausted(
                    f"no chain connector between handles {i} and {i + 1}")
            xs.append(x)
        chain = [b1, a[0]]
        for i, x in enumerate(xs):
            chain += [x, a[i + 1]]
        chain.append(bg)
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            want = 1 if j - i == 1 else 0
            got = geometric_intersection(chain[i], chain[j])
            assert got == want, \
                f"twist chain grid broke at ({i + 1}, {j + 1}): {got}"
    gens = GeneratorSet(surface, chain)
    surface._twist_chain = gens
    return gens


class MappingWord:
    """A finite composition of chain twists, leftmost factor applied last.

    letters: pairs (index, exponent) with a 1-based index into a
    generator chain and exponent +1 or -1.  The empty word is the
    identity.
    """

    def __init__(self, letters=()):
        out = []
        for pair in letters:
            try:
                index, expo = pair
                index, expo = int(index), int(expo)
            except (TypeError, ValueError):
                raise MalformedInputError(
                    "each letter is an (index, exponent) pair")
            if index < 1:
                raise MalformedInputError("letter index must be positive")
            if expo not in (1, -1):
                raise MalformedInputError("letter exponent must be +1 or -1")
            out.append((index, expo))
        self.letters = tuple(out)

    @classmethod
    def from_tokens(cls, text):
        """Parse a word written as signed indices, e.g. "1 -3 2 2"."""
        letters = []
        for token in text.split():
            try:
                value = int(token)
            except ValueError:
                raise MalformedInputError(f"bad word letter {token!r}")
            if value == 0:
                raise MalformedInputError("word letters are signed 1-based "
                                          "indices; 0 names nothing")
            letters.append((abs(value), 1 if value > 0 else -1))
        return cls(letters)

    def tokens(self):
        """The word as signed indices, inverse of from_tokens."""
        return " ".join(str(index * expo) for index, expo in self.letters)

    @classmethod
    def from_json_dict(cls, data):
        if not isinstance(data, dict) or "letters" not in data:
            raise MalformedInputError('a word is {"letters": [[index, '
                                      'exponent], ...]}')
        return cls(data["letters"])

    def to_json_dict(self):
        return {"letters": [[i, s] for i, s in self.letters]}

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, MappingWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"MappingWord({self.tokens()!r})"


def invert_word(word):
    """The inverse word: letters reversed, exponents flipped."""
    return MappingWord([(i, -s) for i, s in reversed(word.letters)])


def apply_word(word, curve, gens=None):
    """Apply a twist word to a multicurve, rightmost letter first.

    gens defaults to the standard chain of the curve's surface.
    """
    if gens is None:
        gens = humphries_generators(curve.surface)
    elif gens.surface is not curve.surface \
            and gens.surface.gluing != curve.surface.gluing:
        raise DomainError("generator chain and curve live on different "
                          "surfaces")
    out = curve
    for index, expo in reversed(word.letters):
        out = apply_twist(gens.curve(index), out, expo)
    return out


def _letter_key(letters):
    # +1 sorts before -1 at the same index
    return tuple((i, 0 if s == 1 else 1) for i, s in letters)


def find_mapping_word(alpha, beta, budget=DEFAULT_WORD_BUDGET, gens=None):
    """Shortest twist word carrying alpha to (an isotopic copy of) beta.

    Both curves must be connected and nonseparating — twists act
    transitively on those, so a word always exists.  Bidirectional
    breadth-first search keyed on exact weight vectors: levels expand in
    a fixed letter order, and among the meets of minimal total length
    the lexicographically least word wins, so the result is
    deterministic for a fixed budget.  budget counts node expansions;
    spending it without a meet raises SearchExhausted.  The returned
    word is verified by applying it before it is handed back.
    """
    _same_surface(alpha, beta)
    for who, cur in (("word search source", alpha),
                     ("word search target", beta)):
        _require_connected_essential(cur, who)
        if is_separating(cur):
            raise DomainError(f"{who} must be nonseparating")
    if isotopic(alpha, beta):
        return MappingWord(())
    if gens is None:
        gens = humphries_generators(alpha.surface)
    letter_order = [(i, s) for i in range(1, len(gens) + 1) for s in (1, -1)]

    # visited: weight vector -> letters of the least word reaching it,
    # where apply_word(word, root) has exactly that vector
    visited = ({alpha.weights: ()}, {beta.weights: ()})
    frontier = ({alpha.weights: alpha}, {beta.weights: beta})
    expanded = 0
    while frontier[0] or frontier[1]:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        if not frontier[side]:
            side = 1 - side
        fresh = {}
        for weights, cur in frontier[side].items():
            if expanded >= budget:
                raise SearchExhausted(
                    f"word search spent its budget of {budget} node "
                    f"expansions without meeting")
            expanded += 1
            word = visited[side][weights]
            for letter in letter_order:
                img = apply_twist(gens.curve(letter[0]), cur, letter[1])
                if img.weights in visited[side]:
                    continue
                cand = (letter,) + word
                prev = fresh.get(img.weights)
                if prev is None or _letter_key(cand) < _letter_key(prev[0]):
                    fresh[img.weights] = (cand, img)
        ordered = sorted(fresh.items(), key=lambda kv: _letter_key(kv[1][0]))
        frontier = list(frontier)
        frontier[side] = {}
        for weights, (letters, img) in ordered:
            visited[side][weights] = letters
            frontier[side][weights] = img
        frontier = tuple(frontier)
        meets = set(visited[0]) & set(visited[1])
        if meets:
            best = None
            for met in meets:
                letters = tuple((i, -s)
                                for i, s in reversed(visited[1][met])) \
                    + visited[0][met]
                cand = (len(letters), _letter_key(letters), letters)
                if best is None or cand < best:
                    best = cand
            word = MappingWord(best[2])
            assert isotopic(apply_word(word, alpha, gens), beta), \
                "word search meet failed verification"
            return word
    raise SearchExhausted("word search frontier emptied without meeting")
