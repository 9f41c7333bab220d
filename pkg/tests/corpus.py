"""Seeded test corpora: every simplicial complex on up to 5 vertices (one
representative per isomorphism class, each vertex used), random complexes on
6-7 vertices, and random (stable, nested-stable, homogeneous) ideal samples.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from bwkit import Monomial, MonomialIdeal, Polynomial, RingSpec, SimplicialComplex


def _antichains(sets: list[frozenset[int]]):
    chosen: list[frozenset[int]] = []

    def rec(start: int):
        yield list(chosen)
        for i in range(start, len(sets)):
            s = sets[i]
            if any(s <= t or t <= s for t in chosen):
                continue
            chosen.append(s)
            yield from rec(i + 1)
            chosen.pop()

    yield from rec(0)


def _perm_tables(n: int) -> list[list[int]]:
    tables = []
    for perm in itertools.permutations(range(n)):
        table = [0] * (1 << n)
        for mask in range(1 << n):
            m2 = 0
            for b in range(n):
                if mask >> b & 1:
                    m2 |= 1 << perm[b]
            table[mask] = m2
        tables.append(table)
    return tables


def _canonical_key(tables: list[list[int]], facet_masks: list[int]) -> tuple[int, ...]:
    return min(tuple(sorted(t[m] for m in facet_masks)) for t in tables)


def complexes_upto_5() -> list[SimplicialComplex]:
    """One labeled representative per isomorphism class: for each n = 1..5 the
    empty complex plus every facet family using all of 1..n."""
    out: list[SimplicialComplex] = []
    for n in range(1, 6):
        out.append(SimplicialComplex(n, [frozenset()]))
        ground = list(range(1, n + 1))
        subsets = [
            frozenset(c)
            for k in range(1, n + 1)
            for c in itertools.combinations(ground, k)
        ]
        full = frozenset(ground)
        tables = _perm_tables(n)
        seen: set[tuple[int, ...]] = set()
        for anti in _antichains(subsets):
            if not anti or frozenset().union(*anti) != full:
                continue
            masks = [sum(1 << (v - 1) for v in f) for f in anti]
            key = _canonical_key(tables, masks)
            if key not in seen:
                seen.add(key)
                out.append(SimplicialComplex(n, anti))
    return out


def random_complexes_67(count: int = 100, seed: int = 20240814) -> list[SimplicialComplex]:
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = 6 if k % 2 == 0 else 7
        faces = []
        for _ in range(rng.randint(1, 10)):
            size = rng.randint(1, n)
            faces.append(rng.sample(range(1, n + 1), size))
        out.append(SimplicialComplex(n, faces))
    return out


def random_monomial(rng: random.Random, n: int, max_degree: int) -> Monomial:
    e = [0] * n
    for _ in range(rng.randint(1, max_degree)):
        e[rng.randrange(n)] += 1
    return Monomial(tuple(e))


def random_monomial_ideal(
    rng: random.Random, max_vars: int = 6, max_degree: int = 4, max_gens: int = 6
) -> MonomialIdeal:
    n = rng.randint(2, max_vars)
    ring = RingSpec(n)
    gens = [random_monomial(rng, n, max_degree) for _ in range(rng.randint(1, max_gens))]
    return MonomialIdeal(ring, gens)


def borel_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the input: close the generator
    set under every exchange x_j -> x_i with i < j."""
    n = ideal.ring.n
    work = {g.exponents for g in ideal.gens}
    frontier = list(work)
    while frontier:
        e = frontier.pop()
        for j in range(n):
            if e[j] > 0:
                for i in range(j):
                    e2 = list(e)
                    e2[j] -= 1
                    e2[i] += 1
                    t = tuple(e2)
                    if t not in work:
                        work.add(t)
                        frontier.append(t)
    return MonomialIdeal(ideal.ring, [Monomial(e) for e in work])


def random_stable_ideal(
    rng: random.Random, max_vars: int = 6, max_degree: int = 4, max_seeds: int = 3
) -> MonomialIdeal:
    n = rng.randint(2, max_vars)
    ring = RingSpec(n)
    seeds = [random_monomial(rng, n, max_degree) for _ in range(rng.randint(1, max_seeds))]
    return borel_closure(MonomialIdeal(ring, seeds))


def random_nested_stable_pair(rng: random.Random) -> tuple[MonomialIdeal, MonomialIdeal]:
    inner = random_stable_ideal(rng)
    n = inner.ring.n
    extra = [random_monomial(rng, n, 4) for _ in range(rng.randint(1, 2))]
    outer = borel_closure(MonomialIdeal(inner.ring, list(inner.gens) + extra))
    return inner, outer


def random_homogeneous_polys(
    rng: random.Random, n: int, count: int, degree_max: int = 3
) -> tuple[RingSpec, list[Polynomial]]:
    ring = RingSpec(n)
    polys = []
    for _ in range(count):
        d = rng.randint(1, degree_max)
        monos = [
            Monomial(e)
            for e in itertools.product(range(d + 1), repeat=n)
            if sum(e) == d
        ]
        terms = {}
        for m in rng.sample(monos, min(len(monos), rng.randint(2, 4))):
            terms[m] = Fraction(rng.randint(-3, 3))
        p = Polynomial(ring, terms)
        if not p.is_zero:
            polys.append(p)
    if not polys:
        polys = [Polynomial.variable(ring, 1)]
    return ring, polys
