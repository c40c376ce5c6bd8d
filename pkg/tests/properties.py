"""Randomised property suites with fixed seeds.

Each ``prop_*`` function draws ``count`` instances and raises AssertionError on the
first counterexample. They are collected as tests in test_properties.py and reused
by the acceptance gate.
"""
from __future__ import annotations

import random
from math import prod

from oracles import cofactor_det
from strangedual import diagrams as dg
from strangedual import ktheory as kt
from strangedual import singularities as sing
from strangedual.exactalg import (
    IntMat,
    IntPoly,
    char_poly,
    cyclotomic,
    cyclotomic_factorization,
    det_bareiss,
    perm_congruent,
    signature_of,
    smith_invariant_factors,
    sturm_inertia,
)

SEED = 20240611
COUNT = 200


def _rand_matrix(rng, n, lo=-3, hi=3):
    return IntMat.from_rows([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def _rand_symmetric(rng, n, lo=-3, hi=3):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(lo, hi)
    return IntMat.from_rows(a)


def _rand_unimodular(rng, n, steps=12):
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            u[i] = [-x for x in u[i]]
            continue
        c = rng.choice([-2, -1, 1, 2])
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]
    if rng.random() < 0.5:
        u[0] = [-x for x in u[0]]
    return IntMat.from_rows(u)


def _rand_triple(rng):
    return tuple(rng.randint(2, 7) for _ in range(3))


def prop_det_matches_cofactor(count=COUNT, seed=SEED):
    rng = random.Random(seed)
    for _ in range(count):
        m = _rand_matrix(rng, 5)
        assert det_bareiss(m) == cofactor_det(m.to_rows()), m


def prop_smith_product_is_abs_det(count=COUNT, seed=SEED + 1):
    rng = random.Random(seed)
    done = 0
    while done < count:
        m = _rand_matrix(rng, 6)
        d = det_bareiss(m)
        if d == 0:
            continue
        f = smith_invariant_factors(m)
        assert prod(f) == abs(d), (m, f)
        assert all(b % a == 0 for a, b in zip(f, f[1:])), f
        u, v = _rand_unimodular(rng, 6), _rand_unimodular(rng, 6)
        assert smith_invariant_factors(u @ m @ v) == f
        done += 1


def prop_signature_congruence_invariant(count=COUNT, seed=SEED + 2):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 6)
        m = _rand_symmetric(rng, n)
        u = _rand_unimodular(rng, n)
        sig = signature_of(m)
        assert sum(sig) == n
        assert signature_of(u @ m @ u.T) == sig, m
        assert sturm_inertia(m) == sig, m


def prop_char_poly_constant_term(count=COUNT, seed=SEED + 3):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 6)
        m = _rand_matrix(rng, n)
        assert char_poly(m)(0) == (-1) ** n * det_bareiss(m)


def prop_cyclotomic_factorization_identity(count=COUNT, seed=SEED + 4):
    rng = random.Random(seed)
    for _ in range(count):
        orders = sorted(rng.randint(1, 30) for _ in range(rng.randint(1, 4)))
        p = prod((cyclotomic(d) for d in orders), start=IntPoly((1,)))
        found = cyclotomic_factorization(p, 84)
        assert found == orders
        assert prod((cyclotomic(d) for d in found), start=IntPoly((1,))) == p


def prop_perm_congruent_witness(count=COUNT, seed=SEED + 5):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 8)
        a = _rand_symmetric(rng, n, -1, 1)
        perm = list(range(n))
        rng.shuffle(perm)
        b = a.permuted(perm)
        found = perm_congruent(a, b)
        assert found is not None and a.permuted(found) == b


def prop_reflection_isometry(count=COUNT, seed=SEED + 6):
    rng = random.Random(seed)
    for _ in range(count):
        lat = kt.that_lattice(_rand_triple(rng))
        n = lat.rank
        # a root: a basis vector moved by a few basis reflections
        start = rng.randrange(n)
        v = tuple(int(i == start) for i in range(n))
        for _ in range(rng.randint(0, 3)):
            k = rng.randrange(n)
            v = kt.reflection(tuple(int(i == k) for i in range(n)), lat).apply(v)
        s = kt.reflection(v, lat)
        assert s.T @ lat.gram @ s == lat.gram
        assert s @ s == IntMat.identity(n)
        assert s.apply(v) == tuple(-x for x in v)


def prop_duality_involution(count=COUNT, seed=SEED + 7):
    rng = random.Random(seed)
    records = sing.table()
    for _ in range(count):
        rec = rng.choice(records)
        dual = sing.strange_dual(rec.name)
        assert sing.strange_dual(dual.name) == rec
        assert dual.gabrielov == rec.dolgachev and dual.dolgachev == rec.gabrielov


def _sheaf_chi(e, f, meets):
    """Euler pairing on a K3 from sheaf cohomology, for O_Y, O_p (p off all curves), O_C(k)."""
    kind_e, kind_f = type(e).__name__, type(f).__name__
    if kind_e == kind_f == "StructureSheaf":
        return 2
    if {kind_e, kind_f} == {"StructureSheaf", "Point"}:
        return 1
    if kind_e == kind_f == "Point":
        return 0
    if {kind_e, kind_f} == {"Point", "CurveTwist"}:
        return 0
    if "StructureSheaf" in (kind_e, kind_f):
        curve = e if kind_e == "CurveTwist" else f
        return curve.k + 1
    if e.curve == f.curve:
        return 2
    return -meets(e.curve, f.curve)


def prop_riemann_roch_sign(count=COUNT, seed=SEED + 8):
    rng = random.Random(seed)
    for _ in range(count):
        delta = _rand_triple(rng)
        graph = dg.divisor_graph(*delta)
        edges = {frozenset((graph.labels[i], graph.labels[j])) for i, j, _ in graph.edges}
        ctx = kt.ns_context(delta)

        def meets(c, d):
            return int(frozenset((c, d)) in edges)

        def draw():
            r = rng.random()
            if r < 0.2:
                return kt.StructureSheaf()
            if r < 0.35:
                return kt.Point()
            return kt.CurveTwist(rng.choice(graph.labels), rng.randint(-3, 3))

        e, f = draw(), draw()
        ve, vf = kt.mukai_vector_of(e, ctx), kt.mukai_vector_of(f, ctx)
        assert -kt.mukai_pairing(ve, vf, ctx) == _sheaf_chi(e, f, meets), (e, f)
        assert kt.mukai_pairing(ve, ve, ctx) % 2 == 0


ALL = [
    prop_det_matches_cofactor,
    prop_smith_product_is_abs_det,
    prop_signature_congruence_invariant,
    prop_char_poly_constant_term,
    prop_cyclotomic_factorization_identity,
    prop_perm_congruent_witness,
    prop_reflection_isometry,
    prop_duality_involution,
    prop_riemann_roch_sign,
]
