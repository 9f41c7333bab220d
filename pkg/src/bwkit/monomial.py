"""Monomial ideal algebra: generators, colon/saturation, intersections,
primary decomposition, Krull dimension, Hilbert numerators and the dimension
filtration.

The dimension filtration of R/I is the chain I^<0> <= I^<1> <= ... <= I^<d>,
where I^<i> is the intersection of the primary components whose quotient has
dimension strictly greater than i (empty intersection = <1>).  Writing
I^<-1> = I, the successive quotients U_i = I^<i>/I^<i-1> are zero or
i-dimensional; U_0 can be nonzero (it is the finite-length part), so I^<0> = I
exactly when R/I has positive depth.  For strongly stable ideals the same
chain is computed by saturating with respect to x_n, x_{n-1}, ... in turn.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence

from .ring import HilbertSeries, Monomial, RingSpec, UniPoly, revlex_key

Exps = tuple[int, ...]


def _minimalize(exps: Iterable[Exps]) -> frozenset[Exps]:
    """Keep only divisibility-minimal exponent vectors; <1> collapses to {1}."""
    items = sorted(set(exps), key=lambda e: (sum(e), e))
    kept: list[Exps] = []
    for e in items:
        if not any(all(a <= b for a, b in zip(k, e)) for k in kept):
            kept.append(e)
    return frozenset(kept)


class MonomialIdeal:
    """A monomial ideal, stored by its unique minimal generating set."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: RingSpec, gens: Iterable[Monomial]):
        exps = []
        for g in gens:
            if len(g.exponents) != ring.n:
                raise ValueError("generator does not match ring dimension")
            exps.append(g.exponents)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self, "gens", frozenset(Monomial(e) for e in _minimalize(exps))
        )

    def __setattr__(self, *_):
        raise AttributeError("MonomialIdeal is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def from_exponents(cls, ring: RingSpec, exps: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(ring, (ring.monomial(e) for e in exps))

    @classmethod
    def zero(cls, ring: RingSpec) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: RingSpec) -> "MonomialIdeal":
        return cls(ring, (ring.one(),))

    # -- basic predicates ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(g.is_one for g in self.gens)

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def sorted_gens(self) -> list[Monomial]:
        """Generators in descending revlex order (deterministic output order)."""
        return sorted(self.gens, key=revlex_key, reverse=True)

    def support(self) -> frozenset[int]:
        """1-based variable indices appearing in some generator."""
        out: set[int] = set()
        for g in self.gens:
            out.update(g.support())
        return frozenset(out)

    # -- ideal operations --------------------------------------------------

    def colon(self, m: Monomial) -> "MonomialIdeal":
        """(I : m) for a monomial m; generated by g/gcd(g, m)."""
        return MonomialIdeal(self.ring, (g.quotient(g.gcd(m)) for g in self.gens))

    def saturate_variable(self, i: int) -> "MonomialIdeal":
        """(I : xi^inf): zero out the xi-exponent of every generator."""
        k = i - 1
        return MonomialIdeal(
            self.ring,
            (
                Monomial(g.exponents[:k] + (0,) + g.exponents[k + 1:])
                for g in self.gens
            ),
        )

    def saturate(self, m: Monomial) -> "MonomialIdeal":
        """(I : m^inf): iterate variable saturations over supp(m) to a fixed point."""
        cur = self
        while True:
            nxt = cur
            for i in m.support():
                nxt = nxt.saturate_variable(i)
            if nxt == cur:
                return cur
            cur = nxt

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.ring)
        return MonomialIdeal(
            self.ring,
            (a.lcm(b) for a in self.gens for b in other.gens),
        )

    def plus(self, extra: Iterable[Monomial]) -> "MonomialIdeal":
        return MonomialIdeal(self.ring, itertools.chain(self.gens, extra))

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal(
            self.ring,
            (Monomial(tuple(1 if e else 0 for e in g.exponents)) for g in self.gens),
        )

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.gens))

    def __str__(self) -> str:
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(str(g) for g in self.sorted_gens()) + ">"

    def __repr__(self) -> str:
        return f"MonomialIdeal({self})"

    def to_json(self) -> dict:
        return {
            "vars": self.ring.n,
            "gens": [list(g.exponents) for g in self.sorted_gens()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MonomialIdeal":
        ring = RingSpec(int(data["vars"]))
        return cls.from_exponents(ring, data["gens"])


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    """Borel-fixedness in characteristic zero: every exchange xj -> xi (i < j)
    applied to a minimal generator stays in the ideal."""
    for g in ideal.gens:
        for j in g.support():
            e = list(g.exponents)
            e[j - 1] -= 1
            for i in range(1, j):
                e[i - 1] += 1
                if not ideal.contains(Monomial(tuple(e))):
                    return False
                e[i - 1] -= 1
    return True


def krull_dimension(ideal: MonomialIdeal) -> int:
    """dim R/I.  Unit ideal reports the sentinel -1; zero ideal reports n.

    Equals n minus the minimum height of a minimal prime, i.e. the largest
    cardinality of a variable subset meeting no generator's support.
    """
    if ideal.is_unit:
        return -1
    n = ideal.ring.n
    if ideal.is_zero:
        return n
    supports = [frozenset(g.support()) for g in ideal.gens]
    for k in range(n, -1, -1):
        for cand in itertools.combinations(range(1, n + 1), k):
            s = frozenset(cand)
            if not any(sup <= s for sup in supports):
                return k
    raise AssertionError("unreachable: empty set meets no support")


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Primary components keyed by their associated prime's support."""

    ideal: MonomialIdeal
    components: tuple[tuple[frozenset[int], MonomialIdeal], ...]

    def intersection(self) -> MonomialIdeal:
        out = MonomialIdeal.unit(self.ideal.ring)
        for _, q in self.components:
            out = out.intersect(q)
        return out

    def associated_supports(self) -> frozenset[frozenset[int]]:
        return frozenset(s for s, _ in self.components)


def _split_once(ideal: MonomialIdeal) -> tuple[Monomial, Monomial] | None:
    """First splittable generator (lex order on exponent vectors), split at its
    first support variable; None when all generators are pure powers."""
    for g in sorted(ideal.gens, key=lambda m: m.exponents):
        sup = g.support()
        if len(sup) >= 2:
            v = sup[0]
            e = [0] * len(g.exponents)
            e[v - 1] = g.exponents[v - 1]
            u = Monomial(tuple(e))
            return u, g.quotient(u)
    return None


def _irreducible_components(ideal: MonomialIdeal, memo: dict) -> frozenset[MonomialIdeal]:
    if ideal in memo:
        return memo[ideal]
    split = _split_once(ideal)
    if split is None:
        out = frozenset((ideal,))
    else:
        u, v = split
        out = _irreducible_components(ideal.plus((u,)), memo) | _irreducible_components(
            ideal.plus((v,)), memo
        )
    memo[ideal] = out
    return out


def primary_decomposition(ideal: MonomialIdeal) -> PrimaryDecomposition:
    """Reduced primary decomposition by recursive coprime splitting.

    Irreducible pieces are grouped by radical support and intersected, then
    redundant components are dropped.  Deterministic for a given input.
    """
    if ideal.is_unit or ideal.is_zero:
        raise ValueError("primary decomposition wants a proper nonzero ideal")
    pieces = _irreducible_components(ideal, {})
    by_support: dict[frozenset[int], MonomialIdeal] = {}
    for q in pieces:
        s = q.support()
        cur = by_support.get(s)
        by_support[s] = q if cur is None else cur.intersect(q)
    comps = sorted(
        by_support.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))
    )
    # drop components containing the intersection of the others
    changed = True
    while changed and len(comps) > 1:
        changed = False
        for k in range(len(comps)):
            rest = MonomialIdeal.unit(ideal.ring)
            for j, (_, q) in enumerate(comps):
                if j != k:
                    rest = rest.intersect(q)
            if comps[k][1].contains_ideal(rest):
                del comps[k]
                changed = True
                break
    return PrimaryDecomposition(ideal, tuple((s, q) for s, q in comps))


# -- Hilbert series -----------------------------------------------------------


def _hilbert_numerator_rec(gens: tuple[Exps, ...], memo: dict) -> UniPoly:
    if gens in memo:
        return memo[gens]
    n_vars = len(gens[0]) if gens else 0
    # count how many generators each variable appears in
    best_v, best_count = -1, 0
    if gens:
        counts = [0] * n_vars
        for e in gens:
            for v, x in enumerate(e):
                if x:
                    counts[v] += 1
        best_count = max(counts)
        best_v = counts.index(best_count)
    if best_count <= 1:
        # supports pairwise disjoint: K = prod (1 - t^deg)
        out = UniPoly.one()
        for e in gens:
            out = out * (UniPoly.one() - UniPoly.t_power(sum(e)))
    else:
        # pivot on the most shared variable: K(I) = K(I + <x>) + t * K(I : x)
        plus: list[Exps] = [tuple(1 if v == best_v else 0 for v in range(n_vars))]
        plus.extend(e for e in gens if e[best_v] == 0)
        colon = [
            tuple(x - 1 if v == best_v and x else x for v, x in enumerate(e))
            for e in gens
        ]
        left = _hilbert_numerator_rec(tuple(sorted(_minimalize(plus))), memo)
        right = _hilbert_numerator_rec(tuple(sorted(_minimalize(colon))), memo)
        out = left + right.shift(1)
    memo[gens] = out
    return out


def hilbert_numerator(ideal: MonomialIdeal) -> HilbertSeries:
    """Hilb(R/I) presented as K(t) / (1-t)^n via pivot recursion."""
    if ideal.is_unit:
        return HilbertSeries(UniPoly.zero(), 0)
    gens = tuple(sorted(g.exponents for g in ideal.gens))
    return HilbertSeries(_hilbert_numerator_rec(gens, {}), ideal.ring.n)


def h_polynomial(ideal: MonomialIdeal) -> UniPoly:
    """K(t) / (1-t)^(n-d); exact by the dimension of R/I."""
    if not ideal.is_proper:
        raise ValueError("h-polynomial wants a proper ideal")
    d = krull_dimension(ideal)
    series = hilbert_numerator(ideal)
    return series.numerator.divexact_one_minus_t(ideal.ring.n - d)


# -- dimension filtration ------------------------------------------------------


@dataclass(frozen=True)
class FiltrationChain:
    """Ideals I^<0> <= ... <= I^<d>; I^<d> is always the unit ideal."""

    d: int
    ideals: tuple[MonomialIdeal, ...]

    def __post_init__(self):
        if len(self.ideals) != self.d + 1:
            raise ValueError("filtration chain length must be d + 1")

    def to_json(self) -> dict:
        return {"d": self.d, "ideals": [q.to_json() for q in self.ideals]}

    @classmethod
    def from_json(cls, data: Mapping) -> "FiltrationChain":
        return cls(
            int(data["d"]),
            tuple(MonomialIdeal.from_json(j) for j in data["ideals"]),
        )


def dimension_filtration(ideal: MonomialIdeal, route: str = "decomposition") -> FiltrationChain:
    """The chain I^<i> = intersection of primary components of dimension > i.

    route="borel" computes the same chain for strongly stable ideals by
    successive saturations I^<i> = (I^<i-1> : x_{n-i}^inf), seeded at I.
    """
    if ideal.is_unit:
        raise ValueError("dimension filtration wants a proper ideal")
    ring = ideal.ring
    n = ring.n
    d = krull_dimension(ideal)
    unit = MonomialIdeal.unit(ring)
    if ideal.is_zero:
        return FiltrationChain(d, tuple([ideal] * n + [unit]))
    if route == "decomposition":
        decomp = primary_decomposition(ideal)
        ideals = []
        for i in range(d):
            keep = [q for s, q in decomp.components if n - len(s) > i]
            cur = unit
            for q in keep:
                cur = cur.intersect(q)
            ideals.append(cur)
        ideals.append(unit)
        return FiltrationChain(d, tuple(ideals))
    if route == "borel":
        if not is_strongly_stable(ideal):
            raise ValueError("borel route wants a strongly stable ideal")
        ideals = []
        cur = ideal
        for i in range(d):
            cur = cur.saturate_variable(n - i)
            ideals.append(cur)
        ideals.append(unit)
        return FiltrationChain(d, tuple(ideals))
    raise ValueError(f"unknown filtration route {route!r}")


def borel_depth(ideal: MonomialIdeal) -> int:
    """depth R/J for a strongly stable proper J: the first level where the
    saturation chain moves."""
    if not ideal.is_proper:
        raise ValueError("depth wants a proper ideal")
    chain = dimension_filtration(ideal, route="borel")
    for i, q in enumerate(chain.ideals):
        if q != ideal:
            return i
    raise AssertionError("chain never reached the unit ideal")


# -- graded Betti numbers ------------------------------------------------------


class BettiTable:
    """Graded Betti numbers beta_{i,j} of a quotient R/I, stored sparsely."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int]):
        clean = {}
        for (i, j), v in entries.items():
            v = int(v)
            if v:
                clean[(int(i), int(j))] = v
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, *_):
        raise AttributeError("BettiTable is immutable")

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def totals(self) -> list[int]:
        out = [0] * (self.projective_dimension() + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def rows(self) -> dict[int, list[int]]:
        """Betti diagram rows: row r lists beta_{i, i+r} for i = 0..pd."""
        pd = self.projective_dimension()
        out: dict[int, list[int]] = {}
        for (i, j), v in self.entries.items():
            row = out.setdefault(j - i, [0] * (pd + 1))
            row[i] = v
        return {r: out[r] for r in sorted(out)}

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(frozenset(self.entries.items()))

    def __str__(self) -> str:
        if not self.entries:
            return "(zero)"
        pd = self.projective_dimension()
        lines = ["      " + "".join(f"{i:>6}" for i in range(pd + 1))]
        lines.append("total:" + "".join(f"{v:>6}" for v in self.totals()))
        for r, row in self.rows().items():
            lines.append(f"{r:>5}:" + "".join(f"{v if v else '.':>6}" for v in row))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"BettiTable({self.entries})"

    def to_json(self) -> dict:
        return {
            "entries": [
                {"i": i, "j": j, "value": v}
                for (i, j), v in sorted(self.entries.items())
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "BettiTable":
        return cls({(int(e["i"]), int(e["j"])): int(e["value"]) for e in data["entries"]})


def betti_eliahou_kervaire(ideal: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers of R/J for a strongly stable J:
    beta_{i+1, i+j} = sum over degree-j generators u of C(max(u) - 1, i)."""
    if not ideal.is_proper:
        raise ValueError("Betti numbers want a proper ideal")
    if not is_strongly_stable(ideal):
        raise ValueError("Eliahou-Kervaire formula wants a strongly stable ideal")
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for u in ideal.gens:
        j = u.degree
        m = u.max_index()
        for i in range(m):
            key = (i + 1, i + j)
            entries[key] = entries.get(key, 0) + comb(m - 1, i)
    return BettiTable(entries)
