"""Simplicial complexes on ground set {1..n}: degree-refined face counts
(f- and h-triangles), the Stanley-Reisner bridge to squarefree monomial
ideals, Alexander duality, exact reduced homology, Hochster's formulas for
graded Betti numbers and local cohomology, a homological sequential
Cohen-Macaulayness oracle, and the symmetric algebraic shift.

Homology is computed over Q by default (fraction-free integer elimination)
or over a prime field when a prime is supplied.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence

from .groebner import gin
from .monomial import BettiTable, MonomialIdeal
from .ring import Monomial, RingSpec, UniPoly

Face = frozenset[int]

_HOCHSTER_LIMIT = 14  # 2^n subcomplex scans stop being a desk computation


class SimplicialComplex:
    """A nonvoid simplicial complex, stored by its facets.

    The ground set is {1..n}; vertices may be unused.  The empty complex
    (facets == {frozenset()}) is allowed, the void complex is not.
    """

    __slots__ = ("n", "facets")

    def __init__(self, n: int, faces: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError("ground set needs at least one vertex")
        cand = {frozenset(f) for f in faces}
        if not cand:
            raise ValueError("void complex: supply at least the empty face")
        for f in cand:
            if not all(isinstance(v, int) and 1 <= v <= n for v in f):
                raise ValueError(f"face {sorted(f)} not inside 1..{n}")
        maximal = {f for f in cand if not any(f < g for g in cand)}
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "facets", frozenset(maximal))

    def __setattr__(self, *_):
        raise AttributeError("SimplicialComplex is immutable")

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == frozenset((frozenset(),))

    def faces(self) -> set[Face]:
        out: set[Face] = set()
        for f in self.facets:
            fl = sorted(f)
            for k in range(len(fl) + 1):
                out.update(frozenset(c) for c in itertools.combinations(fl, k))
        return out

    def is_face(self, sigma: Iterable[int]) -> bool:
        s = frozenset(sigma)
        return any(s <= f for f in self.facets)

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted((tuple(sorted(f)) for f in self.facets), key=lambda f: (len(f), f))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.n == other.n
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __str__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.sorted_facets())
        return f"complex[n={self.n}; {inner}]"

    def __repr__(self) -> str:
        return f"SimplicialComplex({self})"

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.sorted_facets()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SimplicialComplex":
        return cls(int(data["n"]), [[int(v) for v in f] for f in data["facets"]])


def face_degree(cpx: SimplicialComplex, sigma: Iterable[int]) -> int:
    """Cardinality of the largest face containing sigma."""
    s = frozenset(sigma)
    degs = [len(f) for f in cpx.facets if s <= f]
    if not degs:
        raise ValueError(f"{sorted(s)} is not a face")
    return max(degs)


class _Triangle:
    """Sparse integer array indexed by (degree i, cardinality j), 0 <= j <= i <= d."""

    __slots__ = ("d", "entries")

    def __init__(self, d: int, entries: Mapping[tuple[int, int], int]):
        clean = {}
        for (i, j), v in entries.items():
            if not 0 <= j <= i <= d:
                raise ValueError(f"triangle index ({i},{j}) outside 0<=j<=i<={d}")
            v = int(v)
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, *_):
        raise AttributeError("triangle is immutable")

    def value(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row(self, i: int) -> UniPoly:
        return UniPoly(self.value(i, j) for j in range(i + 1))

    def rows(self) -> dict[int, UniPoly]:
        return {i: self.row(i) for i in range(self.d + 1)}

    def __eq__(self, other) -> bool:
        return (
            type(self) is type(other)
            and self.d == other.d
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.d, frozenset(self.entries.items())))

    def __str__(self) -> str:
        lines = []
        for i in range(self.d + 1):
            vals = [self.value(i, j) for j in range(i + 1)]
            lines.append(f"{i}: " + " ".join(str(v) for v in vals))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "entries": [
                {"i": i, "j": j, "value": v}
                for (i, j), v in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping):
        return cls(
            int(data["d"]),
            {(int(e["i"]), int(e["j"])): int(e["value"]) for e in data["entries"]},
        )


class FTriangle(_Triangle):
    """f_{i,j}: number of faces of degree i and cardinality j."""


class HTriangle(_Triangle):
    """h_{i,j}: the degree-refined h-numbers; row i sums to the number of
    facets of cardinality i at t = 1."""


def f_triangle(cpx: SimplicialComplex) -> FTriangle:
    d = cpx.dim + 1
    entries: dict[tuple[int, int], int] = {}
    for sigma in cpx.faces():
        i = face_degree(cpx, sigma)
        key = (i, len(sigma))
        entries[key] = entries.get(key, 0) + 1
    return FTriangle(d, entries)


def h_triangle(cpx: SimplicialComplex) -> HTriangle:
    """h_{i,j} by the generating identity row_i(t) = sum_j f_{i,j} t^j (1-t)^{i-j},
    cross-checked against the direct alternating sum."""
    ft = f_triangle(cpx)
    entries: dict[tuple[int, int], int] = {}
    for i in range(ft.d + 1):
        row = UniPoly.zero()
        for j in range(i + 1):
            fij = ft.value(i, j)
            if fij:
                row = row + (UniPoly.t_power(j) * UniPoly.one_minus_t_power(i - j)) * fij
        for j, c in enumerate(row.coeffs):
            if c:
                entries[(i, j)] = c
        # independent route: h_{i,j} = sum_k (-1)^(j-k) C(i-k, j-k) f_{i,k}
        for j in range(i + 1):
            direct = sum(
                (-1) ** (j - k) * comb(i - k, j - k) * ft.value(i, k)
                for k in range(j + 1)
            )
            if direct != row.coeff(j):
                raise AssertionError("h-triangle routes disagree; this is a bug")
    return HTriangle(ft.d, entries)


# -- Stanley-Reisner bridge -----------------------------------------------------


def minimal_nonfaces(cpx: SimplicialComplex) -> list[tuple[int, ...]]:
    faces = cpx.faces()
    out: list[tuple[int, ...]] = []
    for k in range(1, cpx.n + 1):
        for cand in itertools.combinations(range(1, cpx.n + 1), k):
            s = frozenset(cand)
            if s in faces:
                continue
            if all(s - {v} in faces for v in cand):
                out.append(cand)
    return out


def stanley_reisner_ideal(cpx: SimplicialComplex) -> MonomialIdeal:
    """I_Delta: generated by the minimal non-faces (squarefree)."""
    ring = RingSpec(cpx.n)
    gens = []
    for nf in minimal_nonfaces(cpx):
        e = [0] * cpx.n
        for v in nf:
            e[v - 1] = 1
        gens.append(Monomial(tuple(e)))
    return MonomialIdeal(ring, gens)


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is the given squarefree ideal."""
    if not ideal.is_squarefree():
        raise ValueError("Stanley-Reisner correspondence wants a squarefree ideal")
    if ideal.is_unit:
        raise ValueError("the unit ideal corresponds to the void complex")
    n = ideal.ring.n
    supports = [frozenset(g.support()) for g in ideal.gens]
    faces = [
        set(cand)
        for k in range(n + 1)
        for cand in itertools.combinations(range(1, n + 1), k)
        if not any(sup <= set(cand) for sup in supports)
    ]
    return SimplicialComplex(n, faces)


def facet_subcomplex(cpx: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by the facets of dimension >= i; {emptyset} when none."""
    keep = [f for f in cpx.facets if len(f) - 1 >= i]
    if not keep:
        return SimplicialComplex(cpx.n, [frozenset()])
    return SimplicialComplex(cpx.n, keep)


def alexander_dual(cpx: SimplicialComplex) -> SimplicialComplex:
    """Faces are the complements of non-faces; facets complement the minimal
    non-faces.  The full simplex has no non-faces and is rejected."""
    nonfaces = minimal_nonfaces(cpx)
    if not nonfaces:
        raise ValueError("the full simplex has a void Alexander dual")
    ground = frozenset(range(1, cpx.n + 1))
    return SimplicialComplex(cpx.n, [ground - frozenset(nf) for nf in nonfaces])


def link(cpx: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    s = frozenset(sigma)
    if not cpx.is_face(s):
        raise ValueError(f"{sorted(s)} is not a face")
    return SimplicialComplex(cpx.n, [f - s for f in cpx.facets if s <= f])


def induced_subcomplex(cpx: SimplicialComplex, w: Iterable[int]) -> SimplicialComplex:
    ws = frozenset(w)
    return SimplicialComplex(cpx.n, [f & ws for f in cpx.facets])


# -- exact homology -------------------------------------------------------------


def _rank_int(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination with column pivoting."""
    a = [r[:] for r in rows if any(r)]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        top = a[rank]
        for r in range(rank + 1, len(a)):
            arc = a[r][col]
            row = a[r]
            if arc:
                for c2 in range(col + 1, ncols):
                    row[c2] = (row[c2] * top[col] - arc * top[c2]) // prev
                row[col] = 0
            else:
                # rows missing the pivot column still pick up the Bareiss
                # scaling, otherwise later exact divisions truncate
                for c2 in range(col + 1, ncols):
                    row[c2] = row[c2] * top[col] // prev
        prev = top[col]
        rank += 1
        if rank == len(a):
            break
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    a = [r for r in a if any(r)]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][col], -1, p)
        top = [(x * inv) % p for x in a[rank]]
        a[rank] = top
        for r in range(rank + 1, len(a)):
            f = a[r][col]
            if f:
                a[r] = [(x - f * y) % p for x, y in zip(a[r], top)]
        rank += 1
        if rank == len(a):
            break
    return rank


def _matrix_rank(rows: list[list[int]], p: int | None) -> int:
    return _rank_int(rows) if p is None else _rank_mod_p(rows, p)


def reduced_homology_ranks(cpx: SimplicialComplex, p: int | None = None) -> dict[int, int]:
    """dim of reduced homology in each degree -1..dim, over Q or F_p.

    The empty complex has a single unit in degree -1.
    """
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in cpx.faces():
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for k in by_dim:
        by_dim[k].sort()
    top = cpx.dim
    boundary_rank: dict[int, int] = {}
    for i in range(0, top + 1):
        lower = by_dim.get(i - 1, [])
        upper = by_dim.get(i, [])
        if not lower or not upper:
            boundary_rank[i] = 0
            continue
        index = {f: k for k, f in enumerate(lower)}
        rows = []
        for f in upper:
            row = [0] * len(lower)
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1:]
                row[index[sub]] = (-1) ** pos
            rows.append(row)
        boundary_rank[i] = _matrix_rank(rows, p)
    out = {}
    for i in range(-1, top + 1):
        ci = len(by_dim.get(i, []))
        out[i] = ci - boundary_rank.get(i, 0) - boundary_rank.get(i + 1, 0)
    return out


# -- Hochster formulas ----------------------------------------------------------


def graded_betti_hochster(cpx: SimplicialComplex, p: int | None = None) -> BettiTable:
    """beta_{i,j}(k[Delta]) = sum over |W| = j of dim H~_{j-i-1}(Delta_W)."""
    if cpx.n > _HOCHSTER_LIMIT:
        raise ValueError(f"restriction scan over 2^{cpx.n} subsets refused (n > {_HOCHSTER_LIMIT})")
    entries: dict[tuple[int, int], int] = {}
    vertices = range(1, cpx.n + 1)
    for j in range(cpx.n + 1):
        for w in itertools.combinations(vertices, j):
            ranks = reduced_homology_ranks(induced_subcomplex(cpx, w), p)
            for h, r in ranks.items():
                if r:
                    key = (j - h - 1, j)
                    entries[key] = entries.get(key, 0) + r
    return BettiTable(entries)


class LocalCohomologyTable:
    """Hilbert series of the local cohomology modules H^i_m, stored as integer
    coefficients N_{i,c} against the basis (t-1)^(-c):

        Hilb(H^i_m; t) = sum_c N_{i,c} (t-1)^(-c).

    Entries come from Hochster's face formula (then 0 <= c <= i <= d) or from
    re-expanding layer h-polynomials (where c < 0 can occur for non-squarefree
    inputs: the polynomial part of the series).
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int]):
        clean = {}
        for (i, c), v in entries.items():
            v = int(v)
            if v:
                clean[(int(i), int(c))] = v
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, *_):
        raise AttributeError("LocalCohomologyTable is immutable")

    def value(self, i: int, c: int) -> int:
        return self.entries.get((i, c), 0)

    def cohomological_degrees(self) -> list[int]:
        return sorted({i for i, _ in self.entries})

    def numerator(self, i: int) -> UniPoly:
        """Numerator of Hilb(H^i_m) over (t-1)^i (valid when all c >= 0)."""
        out = UniPoly.zero()
        base = UniPoly((-1, 1))
        for (k, c), v in self.entries.items():
            if k != i:
                continue
            if c < 0:
                raise ValueError("series has a polynomial part; no single (t-1)^i form")
            term = UniPoly.one()
            for _ in range(i - c):
                term = term * base
            out = out + term * v
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, LocalCohomologyTable) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(frozenset(self.entries.items()))

    def __str__(self) -> str:
        lines = []
        for i in self.cohomological_degrees():
            try:
                num = str(self.numerator(i))
                num = f"({num})" if " " in num else num
                if i == 0:
                    lines.append(f"H^{i}: {num}")
                else:
                    lines.append(f"H^{i}: {num}/(t-1)^{i}")
            except ValueError:
                body = " + ".join(
                    f"{v}*(t-1)^{-c}" for (k, c), v in sorted(self.entries.items()) if k == i
                )
                lines.append(f"H^{i}: {body}")
        return "\n".join(lines) if lines else "(zero)"

    def __repr__(self) -> str:
        return f"LocalCohomologyTable({self.entries})"

    def to_json(self) -> dict:
        return {
            "entries": [
                {"i": i, "c": c, "value": v}
                for (i, c), v in sorted(self.entries.items())
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LocalCohomologyTable":
        return cls({(int(e["i"]), int(e["c"])): int(e["value"]) for e in data["entries"]})


def local_cohomology_hochster(
    cpx: SimplicialComplex, p: int | None = None
) -> LocalCohomologyTable:
    """N_{i,c} = sum over faces F with |F| = c of dim H~_{i-c-1}(link F)."""
    entries: dict[tuple[int, int], int] = {}
    for sigma in cpx.faces():
        c = len(sigma)
        ranks = reduced_homology_ranks(link(cpx, sigma), p)
        for h, r in ranks.items():
            if r:
                key = (h + c + 1, c)
                entries[key] = entries.get(key, 0) + r
    return LocalCohomologyTable(entries)


# -- Cohen-Macaulay oracles ------------------------------------------------------


def is_cohen_macaulay(cpx: SimplicialComplex, p: int | None = None) -> bool:
    """Homological criterion: every face link has vanishing reduced homology
    below its dimension."""
    for sigma in cpx.faces():
        lk = link(cpx, sigma)
        ranks = reduced_homology_ranks(lk, p)
        if any(r and h < lk.dim for h, r in ranks.items()):
            return False
    return True


def pure_skeleton(cpx: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by all i-dimensional faces."""
    faces = [f for f in cpx.faces() if len(f) == i + 1]
    if not faces:
        raise ValueError(f"no faces of dimension {i}")
    return SimplicialComplex(cpx.n, faces)


def scm_oracle(cpx: SimplicialComplex, p: int | None = None) -> bool:
    """Sequential Cohen-Macaulayness by the skeleton criterion: every pure
    i-skeleton is Cohen-Macaulay."""
    return all(
        is_cohen_macaulay(pure_skeleton(cpx, i), p) for i in range(cpx.dim + 1)
    )


# -- symmetric shift --------------------------------------------------------------


def _is_squarefree_strongly_stable(ideal: MonomialIdeal) -> bool:
    for g in ideal.gens:
        sup = set(g.support())
        for j in sorted(sup):
            for i in range(1, j):
                if i in sup:
                    continue
                e = list(g.exponents)
                e[j - 1] -= 1
                e[i - 1] += 1
                if not ideal.contains(Monomial(tuple(e))):
                    return False
    return True


def symmetric_shift(cpx: SimplicialComplex, seed: int = 0) -> SimplicialComplex:
    """The shifted complex: gin of the Stanley-Reisner ideal, stretched back to
    a squarefree ideal by x_{i1}...x_{ik} -> x_{i1} x_{i2+1} ... x_{ik+k-1}."""
    ideal = stanley_reisner_ideal(cpx)
    if ideal.is_zero:
        return cpx  # full simplex shifts to itself
    ring = ideal.ring
    result = gin(ideal, seed=seed)
    stretched = []
    for g in result.ideal.gens:
        vars_with_mult = [i for i in range(1, ring.n + 1) for _ in range(g.exponent(i))]
        e = [0] * ring.n
        for offset, v in enumerate(sorted(vars_with_mult)):
            idx = v + offset
            if idx > ring.n:
                raise AssertionError(
                    "stretched generator escaped the ring; gin is not squarefree-compatible"
                )
            e[idx - 1] = 1
        stretched.append(Monomial(tuple(e)))
    shifted_ideal = MonomialIdeal(ring, stretched)
    if not _is_squarefree_strongly_stable(shifted_ideal):
        raise AssertionError("shifted ideal is not squarefree strongly stable; this is a bug")
    return complex_of_ideal(shifted_ideal)


# -- dual Betti / h-triangle identity ---------------------------------------------


@dataclass(frozen=True)
class HrwResult:
    """Row-by-row comparison of sum_c beta_{i-c+1, n-c}(dual) (t-1)^(i-c)
    against the h-triangle rows."""

    equal: bool
    residuals: tuple[tuple[int, UniPoly], ...]
    degenerate: bool


def hrw_check(cpx: SimplicialComplex, p: int | None = None) -> HrwResult:
    ht = h_triangle(cpx)
    nonfaces = minimal_nonfaces(cpx)
    if not nonfaces:
        # full simplex: the dual is void, both sides are read as zero rows
        return HrwResult(True, (), True)
    dual = alexander_dual(cpx)
    betti = graded_betti_hochster(dual, p)
    base = UniPoly((-1, 1))
    residuals = []
    ok = True
    for i in range(ht.d + 1):
        lhs = UniPoly.zero()
        for c in range(i + 1):
            b = betti.beta(i - c + 1, cpx.n - c)
            if b:
                term = UniPoly.one()
                for _ in range(i - c):
                    term = term * base
                lhs = lhs + term * b
        res = lhs - ht.row(i)
        residuals.append((i, res))
        if not res.is_zero:
            ok = False
    return HrwResult(ok, tuple(residuals), False)
