"""Understand slide-orbit structure on heavy taut strands."""
import math
import sys
import time

sys.path.insert(0, "src")

from curvelab.surface import build_standard_surface
from curvelab.tracing import (Drawing, _maximal_runs, _vertex_reroute,
                              _remove_folds, chord_turn)

T = build_standard_surface(1)
D = 3 * T.num_triangles
half = D // 2 - 1
print("torus D =", D, "half =", half)


def turns_of(surf, slots):
    n = len(slots)
    return [chord_turn(surf, slots[k], slots[(k + 1) % n]) for k in range(n)]


def runs_sig(surf, slots):
    return [(t0, m) for (k, m), t0 in
            [((k, m), turns_of(surf, slots)[k]) for k, m in
             _maximal_runs(turns_of(surf, slots))]]


def weight_vec(surf, slots):
    w = [0] * surf.num_edges
    for s in slots:
        w[surf.edge_of_slot[s]] += 1
    return tuple(w)


for (p, q) in [(2, 1), (5, 2), (7, 3), (8, 5)]:
    wv = (abs(q), abs(p), abs(p - q))
    d = Drawing(T, wv)
    slots = [s for s, _ in d.strands[0]]
    turns = turns_of(T, slots)
    runs = _maximal_runs(turns)
    slidable = [(k, m) for k, m in runs if m == half]
    print(f"(p,q)=({p},{q}) weights={wv} len={len(slots)} "
          f"runs={[(turns[k], m) for k, m in runs]} slidable={len(slidable)}")
    # apply one slide, look at the result
    if slidable:
        k, m = slidable[0]
        lin = slots[k:] + slots[:k]
        cand = _vertex_reroute(T, lin, turns[k], m)
        cand2 = _remove_folds(T, cand)
        ct = turns_of(T, cand2)
        print("   after slide: len", len(cand), "after folds:", len(cand2),
              "weights", weight_vec(T, cand2),
              "runs", [(ct[kk], mm) for kk, mm in _maximal_runs(ct)]
              if len(set(ct)) > 1 else f"constant {ct[0]}")

# how big can the orbit get before the cap?
from curvelab.tracing import _slide_orbit
for (p, q) in [(5, 2), (8, 5), (13, 8), (21, 13)]:
    wv = (abs(q), abs(p), abs(p - q))
    d = Drawing(T, wv)
    slots = [s for s, _ in d.strands[0]]
    t0 = time.time()
    try:
        esc, orbit = _slide_orbit(T, slots)
        vecs = set()
        for member in orbit:
            vecs.add(weight_vec(T, member))
        print(f"(p,q)=({p},{q}): orbit={len(orbit)} distinct_vecs={len(vecs)} "
              f"escape={esc is not None} ({time.time()-t0:.2f}s)")
        if len(vecs) > 1:
            print("   vecs:", sorted(vecs))
    except Exception as e:
        print(f"(p,q)=({p},{q}): {type(e).__name__} ({time.time()-t0:.2f}s)")

# same question on genus 2 with a moderately heavy curve
g2 = build_standard_surface(2)
D2 = 3 * g2.num_triangles
print("genus2 D =", D2, "half =", D2 // 2 - 1)
from curvelab.tracing import tighten_weights
from curvelab.curves import standard_curve
wv = [0] * g2.num_edges
# a fairly dense admissible vector: sum of several standard curves' weights
for nm in ("a1", "b1", "a2", "b2"):
    for e, w in enumerate(standard_curve(g2, nm).weights):
        wv[e] += 3 * w
tight, nulls, links = tighten_weights(g2, wv)
d = Drawing(g2, tight)
for sl in d.strands:
    slots = [s for s, _ in sl]
    turns = turns_of(g2, slots)
    runs = _maximal_runs(turns) if len(set(turns)) > 1 else []
    print("strand len", len(slots), "slidable runs",
          sum(1 for k, m in runs if m == D2 // 2 - 1))
