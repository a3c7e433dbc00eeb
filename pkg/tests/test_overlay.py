"""Crossing counts of simultaneously drawn multicurves."""

import random
from math import gcd

import pytest

from curvelab.errors import MalformedCurveError
from curvelab.overlay import Overlay, geometric_crossings
from test_tracing import random_tight_weights


def torus_weights(p, q):
    """Tight weights of the (p, q) line class (q copies of one labelled
    generator, p of the other, |p - q| over the diagonal)."""
    return (abs(q), abs(p), abs(p - q))


def test_torus_determinant(torus):
    for p in range(-3, 4):
        for q in range(-3, 4):
            if (p, q) == (0, 0):
                continue
            for r in range(-3, 4):
                for s in range(-3, 4):
                    if (r, s) == (0, 0):
                        continue
                    got = geometric_crossings(
                        torus, torus_weights(p, q), torus_weights(r, s))
                    assert got == abs(p * s - q * r), ((p, q), (r, s))


def test_torus_frozen_cases(torus):
    cases = [((1, 0), (0, 1), 1),
             ((1, 0), (1, 1), 1),
             ((1, 1), (1, -1), 2),
             ((2, 1), (1, 2), 3),
             ((3, 1), (1, 3), 8),
             ((2, 3), (3, -2), 13)]
    for a, b, want in cases:
        assert geometric_crossings(
            torus, torus_weights(*a), torus_weights(*b)) == want


def test_self_and_parallel_copies_are_disjoint(torus, genus2, genus3):
    for surf, seed in ((torus, 11), (genus2, 12), (genus3, 13)):
        rng = random.Random(seed)
        for _ in range(40):
            w = random_tight_weights(surf, rng)
            assert geometric_crossings(surf, w, w) == 0
            doubled = tuple(2 * x for x in w)
            assert geometric_crossings(surf, w, doubled) == 0


def test_symmetry_and_multicurve_scaling(genus2, genus3):
    for surf, seed in ((genus2, 21), (genus3, 22)):
        rng = random.Random(seed)
        for _ in range(40):
            wa = random_tight_weights(surf, rng)
            wb = random_tight_weights(surf, rng)
            ab = geometric_crossings(surf, wa, wb)
            assert geometric_crossings(surf, wb, wa) == ab
            w2 = tuple(2 * x for x in wa)
            w3 = tuple(3 * x for x in wb)
            assert geometric_crossings(surf, w2, w3) == 6 * ab


def test_tie_class_forms_are_disjoint(genus2):
    # two distinct minimal weight vectors of one isotopy class (they
    # differ by an isotopy across the vertex); drawn together they must
    # not cross
    f1 = (0, 0, 2, 2, 0, 0, 0, 2, 2)
    f2 = (2, 2, 0, 0, 2, 2, 0, 0, 0)
    assert geometric_crossings(genus2, f1, f2) == 0


def test_crossing_signs_coherent_for_primitive_torus_pairs(torus):
    # two primitive geodesics cross everywhere with the same sign once
    # the second strand's traversal direction is factored out
    rng = random.Random(31)
    checked = 0
    for _ in range(300):
        p, q = rng.randint(-5, 5), rng.randint(-5, 5)
        r, s = rng.randint(-5, 5), rng.randint(-5, 5)
        if gcd(p, q) != 1 or gcd(r, s) != 1 or p * s == q * r:
            continue
        ov = Overlay(torus, [torus_weights(p, q), torus_weights(r, s)])
        crossings = ov.crossings(0, 1)
        assert len(crossings) == abs(p * s - q * r)
        signs = {b.sign * b.b_dir for b in crossings}
        assert len(signs) == 1
        checked += 1
    assert checked > 100


def test_band_fields_identify_shared_slots(genus2):
    rng = random.Random(41)
    wa = random_tight_weights(genus2, rng)
    wb = random_tight_weights(genus2, rng)
    ov = Overlay(genus2, [wa, wb])
    its_a = ov.drawings[0].itineraries()
    its_b = ov.drawings[1].itineraries()
    surf = ov.surface
    for band in ov.bands(0, 1):
        a = its_a[band.a_strand]
        b = its_b[band.b_strand]
        if band.b_dir == -1:
            nb = len(b)
            b = [surf.partner[b[(nb - i) % nb]] for i in range(nb)]
        for t in range(band.length):
            assert a[(band.a_start + t) % len(a)] == \
                b[(band.b_start + t) % len(b)]


def test_inadmissible_weights_rejected(genus2):
    with pytest.raises(MalformedCurveError):
        geometric_crossings(genus2, (1, 0, 0, 0, 0, 0, 0, 0, 0),
                            (0,) * 9)
