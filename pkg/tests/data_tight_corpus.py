"""Frozen tightening cases on the torus.

Each entry is (itinerary, expected_weights): the itinerary was traced
from an exact polyline (a straight (p, q) line wearing detour loops),
and the expected weights (|q|, |p|, |p - q|) are the geodesic crossing
counts of the straight representative.  These cases historically
stalled intermediate drafts of the tightening loop, so they are kept
verbatim as regressions.
"""

TORUS_TIGHTEN_CASES = [
    ([5, 2, 4, 1, 3, 0, 3, 0, 5, 2],
     (1, 1, 0)),
    ([5, 2, 4, 1, 3, 0, 3, 0, 5, 2],
     (1, 1, 0)),
    ([4, 2, 5, 0, 3, 1, 3, 0, 5, 2],
     (1, 1, 0)),
    ([4, 2, 5, 0, 3, 1, 3, 0, 5, 2],
     (1, 1, 0)),
    ([5, 2, 4, 2, 5, 0, 3, 0],
     (1, 2, 1)),
    ([4, 2, 5, 0, 3, 0, 5, 2],
     (1, 2, 1)),
    ([4, 2, 5, 0, 3, 0, 5, 2],
     (1, 2, 1)),
    ([5, 2, 4, 2, 5, 0, 3, 0],
     (1, 2, 1)),
    ([4, 2, 5, 0, 3, 0, 5, 2],
     (1, 2, 1)),
    ([4, 2, 5, 0, 3, 0, 5, 2],
     (1, 2, 1)),
    ([4, 2, 5, 0, 3, 0, 5, 2],
     (1, 2, 1)),
    ([4, 2, 5, 0, 3, 0, 5, 2],
     (1, 2, 1)),
    ([5, 2, 4, 2, 5, 0, 3, 0],
     (1, 2, 1)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
    ([5, 2, 4, 1, 4, 2, 5, 2],
     (2, 1, 3)),
]
