"""Probe mapping.py before freezing tests."""
import itertools
import math
import random
import sys
import time

sys.path.insert(0, "src")

from curvelab.surface import build_standard_surface
from curvelab.curves import (NormalMultiCurve, classify, geometric_intersection,
                             isotopic, standard_curve)
from curvelab.mapping import (MappingWord, apply_twist, apply_word,
                              find_mapping_word, humphries_generators,
                              invert_word)
from curvelab.overlay import Overlay

T = build_standard_surface(1)


def pq_curve(p, q):
    assert math.gcd(p, q) == 1
    return NormalMultiCurve(T, (abs(q), abs(p), abs(p - q)))


def pq_weights(p, q):
    return (abs(q), abs(p), abs(p - q))


# --- 1. chain construction -------------------------------------------------
for g in (1, 2, 3, 4, 5):
    surf = build_standard_surface(g)
    t0 = time.time()
    gens = humphries_generators(surf)
    n = len(gens)
    assert n == 2 * g + 1, (g, n)
    kinds = [classify(c).kind for c in gens.curves]
    assert all(k == "nonseparating" for k in kinds), (g, kinds)
    grid = {}
    for i in range(n):
        for j in range(i + 1, n):
            grid[(i + 1, j + 1)] = geometric_intersection(
                gens.curves[i], gens.curves[j])
    bad = {key: v for key, v in grid.items()
           if v != (1 if key[1] - key[0] == 1 else 0)}
    print(f"g={g}: chain ok={not bad} ({time.time()-t0:.2f}s)", bad or "")

# --- 2. torus oracle -------------------------------------------------------
rng = random.Random(20260818)
eps = None
cases = 0
collisions = 0
t0 = time.time()
for trial in range(120):
    while True:
        p, q = rng.randint(-6, 6), rng.randint(-6, 6)
        if (p, q) != (0, 0) and math.gcd(p, q) == 1:
            break
    while True:
        r, s = rng.randint(-6, 6), rng.randint(-6, 6)
        if (r, s) != (0, 0) and math.gcd(r, s) == 1:
            break
    c = pq_curve(p, q)
    a = pq_curve(r, s)
    inter = r * q - s * p
    k = rng.choice([-3, -2, -1, 1, 2, 3])
    # count same-passage collisions to make sure the sweep rule is exercised
    ov = Overlay(T, [a.weights, c.weights])
    starts = {}
    for b in ov.crossings(0, 1):
        starts[(b.a_strand, b.a_start)] = starts.get((b.a_strand, b.a_start), 0) + 1
    if any(v > 1 for v in starts.values()):
        collisions += 1
    got = apply_twist(c, a, k).weights
    plus = pq_weights(r + k * inter * p, s + k * inter * q)
    minus = pq_weights(r - k * inter * p, s - k * inter * q)
    if inter == 0:
        assert got == a.weights, (p, q, r, s, k, got)
        continue
    cases += 1
    if eps is None:
        if got == plus and got != minus:
            eps = 1
        elif got == minus and got != plus:
            eps = -1
        elif got == plus and got == minus:
            continue  # ambiguous case, wait for a decisive one
        else:
            print("FAIL first case", (p, q, r, s, k), got, plus, minus)
            sys.exit(1)
    expect = plus if eps == 1 else minus
    if got != expect:
        print("FAIL", (p, q, r, s, k), "got", got, "want", expect,
              "(other sign:", (minus if eps == 1 else plus), ")")
        sys.exit(1)
print(f"torus oracle: {cases} crossing cases ok, eps={eps}, "
      f"{collisions} trials had same-passage collisions ({time.time()-t0:.2f}s)")

# --- 3. identities on genus 2/3 --------------------------------------------
g2 = build_standard_surface(2)
gens2 = humphries_generators(g2)
a1, b1 = standard_curve(g2, "a1"), standard_curve(g2, "b1")
a2, b2 = standard_curve(g2, "a2"), standard_curve(g2, "b2")

assert apply_twist(a1, a1, 3).weights == a1.weights
assert apply_twist(a2, a1, 5).weights == a1.weights  # disjoint
for k in (-4, -2, -1, 1, 2, 5):
    img = apply_twist(b1, a1, k)
    got = geometric_intersection(img, a1)
    assert got == abs(k), (k, got)
print("genus-2 basics ok")

# braid move: T_a1 T_b1 (a1) = b1; chain index 1 = b1, 2 = a1
w = MappingWord([(2, 1), (1, 1)])
img = apply_word(w, a1)
print("braid word image == b1:", img.weights == b1.weights,
      "| isotopic:", isotopic(img, b1), "| weights:", img.weights)

# invertibility battery
t0 = time.time()
rng = random.Random(7)
pool = [a1, b1, a2, b2, gens2.curves[2]]
ok = True
for trial in range(40):
    cur = rng.choice(pool)
    word = MappingWord([(rng.randint(1, 5), rng.choice([1, -1]))
                        for _ in range(rng.randint(1, 6))])
    img = apply_word(word, cur)
    back = apply_word(invert_word(word), img)
    if not isotopic(back, cur):
        print("FAIL invert", word, cur.weights)
        ok = False
        break
print(f"invert battery ok={ok} ({time.time()-t0:.2f}s)")

# twist identity battery: i(T_c^k(a), a) = |k| i(a,c)^2
t0 = time.time()
rng = random.Random(99)
checked = 0
for trial in range(60):
    cur = rng.choice(pool)
    word = MappingWord([(rng.randint(1, 5), rng.choice([1, -1]))
                        for _ in range(rng.randint(0, 4))])
    alpha = apply_word(word, cur)
    cword = MappingWord([(rng.randint(1, 5), rng.choice([1, -1]))
                         for _ in range(rng.randint(0, 4))])
    cbase = rng.choice(pool)
    c = apply_word(cword, cbase)
    inter = geometric_intersection(alpha, c)
    if inter == 0 or inter > 3:
        continue
    k = rng.choice([1, 2, 3, 4, 5, -1, -2, -3])
    img = apply_twist(c, alpha, k)
    want = abs(k) * inter * inter
    got = geometric_intersection(img, alpha)
    if got != want:
        print("FAIL identity", trial, "i=", inter, "k=", k, "got", got,
              "want", want, "alpha", alpha.weights, "c", c.weights)
        sys.exit(1)
    checked += 1
print(f"twist identity battery: {checked} cases ok ({time.time()-t0:.2f}s)")

# naturality mini battery
t0 = time.time()
rng = random.Random(123)
for trial in range(25):
    x = rng.choice(pool)
    y = rng.choice(pool)
    word = MappingWord([(rng.randint(1, 5), rng.choice([1, -1]))
                        for _ in range(rng.randint(1, 5))])
    before = geometric_intersection(x, y)
    after = geometric_intersection(apply_word(word, x), apply_word(word, y))
    assert before == after, (trial, before, after)
    kx = classify(apply_word(word, x)).kind
    assert kx == classify(x).kind, trial
print(f"naturality mini battery ok ({time.time()-t0:.2f}s)")

# --- 4. word search --------------------------------------------------------
t0 = time.time()
w0 = find_mapping_word(a1, a1)
print("identity word:", w0.letters, f"({time.time()-t0:.2f}s)")
t0 = time.time()
w1 = find_mapping_word(a1, b1)
print("a1 -> b1 word:", w1.letters, "verify:",
      isotopic(apply_word(w1, a1), b1), f"({time.time()-t0:.2f}s)")
t0 = time.time()
w2 = find_mapping_word(a1, a2)
print("a1 -> a2 word:", w2.letters, "verify:",
      isotopic(apply_word(w2, a1), a2), f"({time.time()-t0:.2f}s)")
try:
    find_mapping_word(a1, b2, budget=3)
    print("tiny budget: NO exception (bad)")
except Exception as e:
    print("tiny budget ->", type(e).__name__, e)
