"""Exact geometric oracle for the square torus.

The standard genus-1 surface is the unit square with opposite sides glued
and the diagonal added: P0=(0,0) P1=(1,0) P2=(1,1) P3=(0,1); triangle T0
below y=x, T1 above; slots: T0: 0=bottom 1=right 2=diagonal; T1:
3=diagonal 4=top 5=left.  Edge a = horizontal sides, edge b = vertical
sides, edge D = diagonal.

A curve is given as a closed polyline in the plane (the universal cover):
waypoints are Fraction pairs, and the last point must differ from the
first by an integer vector.  Crossings happen where a segment meets y in Z
(edge a), x in Z (edge b), or y - x in Z (edge D); waypoints must avoid
all three line families.  All arithmetic is exact, so the traced itinerary
is ground truth, independent of the normal-coordinate machinery.

A straight (p, q) line is geodesic, so its crossing counts (|q|, |p|,
|p - q|) are the true minimal weights for that class.
"""
from fractions import Fraction as Fr


def _crossings(u0, u1):
    """Integers strictly between u0 and u1 in traversal order."""
    out = []
    if u1 > u0:
        n = int(u0 // 1) + 1
        while n < u1:
            out.append(n)
            n += 1
    else:
        n = -int((-u0) // 1) - 1  # largest integer < u0
        while n > u1:
            out.append(n)
            n -= 1
    return out


def trace_polyline(points):
    """Entering-slot itinerary of a closed polyline in plane coordinates."""
    dx = points[-1][0] - points[0][0]
    dy = points[-1][1] - points[0][1]
    assert dx.denominator == 1 and dy.denominator == 1, "must close mod Z^2"
    events = []  # (global time, line family, direction)
    for i in range(len(points) - 1):
        (x0, y0), (x1, y1) = points[i], points[i + 1]
        vx, vy = x1 - x0, y1 - y0
        seg = []
        if vy != 0:
            for n in _crossings(y0, y1):
                seg.append((Fr(n - y0, vy), "a", 1 if vy > 0 else -1))
        if vx != 0:
            for n in _crossings(x0, x1):
                seg.append((Fr(n - x0, vx), "b", 1 if vx > 0 else -1))
        if vy - vx != 0:
            for n in _crossings(y0 - x0, y1 - x1):
                seg.append((Fr(n - (y0 - x0), vy - vx), "D",
                            1 if vy - vx > 0 else -1))
        seg.sort(key=lambda e: e[0])
        for t, fam, d in seg:
            events.append((i + t, fam, d))
    events.sort(key=lambda e: e[0])
    slots = []
    for _, fam, d in events:
        if fam == "a":
            # upward into T0 through the bottom, downward into T1 via the top
            slots.append(0 if d > 0 else 4)
        elif fam == "b":
            slots.append(5 if d > 0 else 1)
        else:
            slots.append(3 if d > 0 else 2)
    return slots


def straight_line_points(p, q, x0=Fr(1, 3), y0=Fr(1, 17)):
    """A (p, q) straight line; geodesic, hence already tight."""
    return [(x0, y0), (x0 + p, y0 + q)]


def loop_points(cx, cy, k, reverse=False):
    """k full loops around the lattice point (cx, cy); null-homotopic."""
    ring = [(Fr(1, 5), Fr(1, 7)), (Fr(-1, 7), Fr(1, 5)),
            (Fr(-1, 5), Fr(-1, 7)), (Fr(1, 7), Fr(-1, 5))]
    if reverse:
        ring = ring[::-1]
    pts = []
    for _ in range(k):
        pts.extend((cx + ex, cy + ey) for ex, ey in ring)
    pts.append(pts[0])
    return pts


def wound_line(p, q, k, reverse=False):
    """A (p, q) line with k detour loops around (1, 0) spliced in; freely
    homotopic to the straight line, but traced loosely."""
    x0, y0 = Fr(1, 3), Fr(1, 17)
    pts = [(x0, y0)]
    pts.extend(loop_points(Fr(1), Fr(0), k, reverse))
    pts.append((x0 + p, y0 + q))
    return pts
