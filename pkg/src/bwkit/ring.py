"""Exact arithmetic core: monomials, polynomials over Q, and the univariate
machinery (Hilbert series, bivariate layer polynomials) everything else sits on.

Monomial order is graded reverse lexicographic with x1 > x2 > ... > xn:
higher total degree wins, ties go to the monomial whose last nonzero entry
of the exponent difference is negative. All coefficient arithmetic is exact
(ints and fractions.Fraction); nothing here floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class RingSpec:
    """A standard graded polynomial ring Q[x1..xn], deg xi = 1."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ring needs at least one variable")

    def variable(self, i: int) -> "Monomial":
        """Monomial xi, 1-based index."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")
        exps = [0] * self.n
        exps[i - 1] = 1
        return Monomial(tuple(exps))

    def one(self) -> "Monomial":
        return Monomial((0,) * self.n)

    def monomial(self, exponents: Sequence[int]) -> "Monomial":
        m = Monomial(tuple(int(e) for e in exponents))
        if len(m.exponents) != self.n:
            raise ValueError("exponent vector length does not match ring")
        return m


def revlex_key(m: "Monomial") -> tuple:
    """Sort key: ascending in graded revlex."""
    e = m.exponents
    return (sum(e), tuple(-x for x in reversed(e)))


def revlex_compare(a: "Monomial", b: "Monomial") -> int:
    """-1, 0 or +1 as a <, =, > b in graded revlex (x1 greatest)."""
    ea, eb = a.exponents, b.exponents
    if len(ea) != len(eb):
        raise ValueError("monomials from rings of different dimension")
    da, db = sum(ea), sum(eb)
    if da != db:
        return -1 if da < db else 1
    for x, y in zip(reversed(ea), reversed(eb)):
        if x != y:
            # last nonzero entry of a-b negative  <=>  a > b
            return 1 if x < y else -1
    return 0


class Monomial:
    """Immutable exponent vector. Position k holds the exponent of x(k+1)."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: tuple[int, ...]):
        if any(e < 0 for e in exponents):
            raise ValueError("negative exponent")
        object.__setattr__(self, "exponents", exponents)

    def __setattr__(self, *_):
        raise AttributeError("Monomial is immutable")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> tuple[int, ...]:
        """1-based indices of variables actually present."""
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    def exponent(self, i: int) -> int:
        """Exponent of xi, 1-based."""
        return self.exponents[i - 1]

    def max_index(self) -> int:
        """Largest 1-based variable index dividing the monomial; 0 for 1."""
        for i in range(len(self.exponents) - 1, -1, -1):
            if self.exponents[i] > 0:
                return i + 1
        return 0

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other, exact (other must divide self)."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def coprime(self, other: "Monomial") -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.exponents, other.exponents))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __lt__(self, other: "Monomial") -> bool:
        return revlex_compare(self, other) < 0

    def __le__(self, other: "Monomial") -> bool:
        return revlex_compare(self, other) <= 0

    def __gt__(self, other: "Monomial") -> bool:
        return revlex_compare(self, other) > 0

    def __ge__(self, other: "Monomial") -> bool:
        return revlex_compare(self, other) >= 0

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"


class Polynomial:
    """Element of Q[x1..xn]: a finite map from monomials to nonzero rationals.

    Term iteration is descending revlex; the leading data come from the same
    order. Instances are treated as immutable values.
    """

    __slots__ = ("ring", "_terms", "_sorted")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, Fraction | int]):
        clean: dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            if len(m.exponents) != ring.n:
                raise ValueError("term does not match ring dimension")
            c = Fraction(c)
            if c != 0:
                clean[m] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_sorted", None)

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: RingSpec) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def one(cls, ring: RingSpec) -> "Polynomial":
        return cls(ring, {ring.one(): Fraction(1)})

    @classmethod
    def from_monomial(cls, ring: RingSpec, m: Monomial, c: Fraction | int = 1) -> "Polynomial":
        return cls(ring, {m: Fraction(c)})

    @classmethod
    def variable(cls, ring: RingSpec, i: int) -> "Polynomial":
        return cls.from_monomial(ring, ring.variable(i))

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> tuple[tuple[Monomial, Fraction], ...]:
        """Terms in descending revlex order."""
        if self._sorted is None:
            ordered = tuple(
                sorted(self._terms.items(), key=lambda t: revlex_key(t[0]), reverse=True)
            )
            object.__setattr__(self, "_sorted", ordered)
        return self._sorted

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def leading_monomial(self) -> Monomial:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        return self.terms()[0][0]

    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        return self.terms()[0][1]

    @property
    def is_homogeneous(self) -> bool:
        degs = {m.degree for m in self._terms}
        return len(degs) <= 1

    @property
    def degree(self) -> int | None:
        """Total degree; None for the zero polynomial."""
        if self.is_zero:
            return None
        return max(m.degree for m in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = acc.get(m, Fraction(0)) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Polynomial(self.ring, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_ring(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                s = acc.get(m, Fraction(0)) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def scale(self, c: Fraction | int) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {m: k * c for m, k in self._terms.items()})

    def term_mul(self, m: Monomial, c: Fraction | int = 1) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.ring, {k * m: v * c for k, v in self._terms.items()})

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.leading_coefficient()
        return self.scale(Fraction(1) / lc)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        out = []
        for m, c in self.terms():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if m.is_one:
                body = str(a)
            elif a == 1:
                body = str(m)
            else:
                body = f"{a}*{m}"
            if not out:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


_TERM_SPLIT = re.compile(r"(?<![\^*/])\s*([+-])\s*")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_COEFF = re.compile(r"^(\d+)(?:/(\d+))?$")


def parse_polynomial(ring: RingSpec, text: str) -> Polynomial:
    """Parse the textual polynomial grammar, e.g. ``x1*x2*x3 - 1/2*x4^2``.

    Terms are joined by + or -, each term an optional rational coefficient
    followed by x<i>[^e] factors joined by ``*``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    # normalize a leading sign so the splitter sees sign-term pairs
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # pieces: ['', sign, term, sign, term, ...]
    if pieces[0].strip():
        raise ValueError(f"cannot parse polynomial {text!r}")
    acc: dict[Monomial, Fraction] = {}
    for k in range(1, len(pieces), 2):
        sign = -1 if pieces[k] == "-" else 1
        term = pieces[k + 1].strip()
        if not term:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        exps = [0] * ring.n
        for factor in (f.strip() for f in term.split("*")):
            fm = _FACTOR.match(factor)
            if fm:
                i = int(fm.group(1))
                if not 1 <= i <= ring.n:
                    raise ValueError(f"variable x{i} outside ring with {ring.n} variables")
                exps[i - 1] += int(fm.group(2) or 1)
                continue
            cm = _COEFF.match(factor)
            if cm:
                coeff *= Fraction(int(cm.group(1)), int(cm.group(2) or 1))
                continue
            raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
        m = Monomial(tuple(exps))
        s2 = acc.get(m, Fraction(0)) + coeff
        if s2:
            acc[m] = s2
        else:
            acc.pop(m, None)
    return Polynomial(ring, acc)


def _det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def apply_linear_change(f: Polynomial, matrix: Sequence[Sequence[int | Fraction]]) -> Polynomial:
    """Substitute xi -> sum_j matrix[i][j] * xj (rows give variable images).

    The matrix must be square of the ring's size and invertible; a singular
    matrix is rejected. apply(f, g1 @ g2) == apply(apply(f, g1), g2).
    """
    n = f.ring.n
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError("change-of-coordinates matrix has wrong shape")
    if _det(matrix) == 0:
        raise ValueError("change-of-coordinates matrix is singular")
    images = [
        Polynomial(
            f.ring,
            {f.ring.variable(j + 1): Fraction(matrix[i][j]) for j in range(n)},
        )
        for i in range(n)
    ]
    # cache linear-form powers; generators reuse the same images repeatedly
    powers: list[dict[int, Polynomial]] = [{0: Polynomial.one(f.ring)} for _ in range(n)]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        if e not in cache:
            best = max(k for k in cache if k <= e)
            acc = cache[best]
            for k in range(best + 1, e + 1):
                acc = acc * images[i]
                cache[k] = acc
        return cache[e]

    result = Polynomial.zero(f.ring)
    for m, c in f._terms.items():
        piece = Polynomial.one(f.ring).scale(c)
        for i, e in enumerate(m.exponents):
            if e:
                piece = piece * power(i, e)
        result = result + piece
    return result


class UniPoly:
    """Univariate polynomial in t with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        if any(not isinstance(x, int) for x in c):
            raise TypeError("UniPoly wants integer coefficients")
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, *_):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def t_power(cls, k: int) -> "UniPoly":
        return cls((0,) * k + (1,))

    @classmethod
    def one_minus_t_power(cls, k: int) -> "UniPoly":
        out = cls.one()
        base = cls((1, -1))
        for _ in range(k):
            out = out * base
        return out

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, int):
            return UniPoly(tuple(x * other for x in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        if self.is_zero:
            return self
        return UniPoly((0,) * k + self.coeffs)

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divexact_one_minus_t(self, k: int = 1) -> "UniPoly":
        """Divide by (1-t)^k; raises if the division is not exact."""
        cur = self
        for _ in range(k):
            if cur.is_zero:
                continue
            if cur.evaluate(1) != 0:
                raise ValueError("division by (1-t) is not exact")
            cur = _divide_one_minus_t(cur)
        return cur

    def taylor_at_one(self) -> "UniPoly":
        """Coefficients of p(1+s) as a polynomial in s (binomial transform)."""
        out = [0] * len(self.coeffs)
        for j, c in enumerate(self.coeffs):
            if c:
                # (1+s)^j
                b = 1
                for k in range(j + 1):
                    out[k] += c * b
                    b = b * (j - k) // (k + 1)
        return UniPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if j == 0:
                body = str(a)
            else:
                tp = "t" if j == 1 else f"t^{j}"
                body = tp if a == 1 else f"{a}{tp}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def _divide_one_minus_t(p: UniPoly) -> UniPoly:
    """Exact quotient p / (1-t); caller has checked p(1) == 0."""
    c = list(p.coeffs)
    if not c:
        return p
    # long division from the top: (1 - t) * q = p
    q = [0] * (len(c) - 1)
    rem = list(c)
    for j in range(len(c) - 1, 0, -1):
        q[j - 1] = -rem[j]
        rem[j] = 0
        rem[j - 1] -= q[j - 1]
    if rem[0] != 0:
        raise ValueError("division by (1-t) is not exact")
    return UniPoly(q)


class HilbertSeries:
    """Rational series numerator / (1-t)^denom_power with integer numerator.

    Equality is by value (cross-multiplied numerators), so a series may be held
    in any equivalent presentation; canonical() strips all (1-t) factors.
    """

    __slots__ = ("numerator", "denom_power")

    def __init__(self, numerator: UniPoly, denom_power: int):
        if denom_power < 0:
            raise ValueError("denominator power must be non-negative")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denom_power", 0 if numerator.is_zero else denom_power)

    def __setattr__(self, *_):
        raise AttributeError("HilbertSeries is immutable")

    def canonical(self) -> "HilbertSeries":
        num, k = self.numerator, self.denom_power
        while k > 0 and not num.is_zero and num.evaluate(1) == 0:
            num = _divide_one_minus_t(num)
            k -= 1
        return HilbertSeries(num, k)

    def expand(self, upto: int) -> list[int]:
        """Series coefficients in degrees 0..upto."""
        out = [0] * (upto + 1)
        num = self.numerator
        if self.denom_power == 0:
            for j in range(upto + 1):
                out[j] = num.coeff(j)
            return out
        # repeatedly take partial sums: 1/(1-t)^k
        cur = [num.coeff(j) for j in range(upto + 1)]
        for _ in range(self.denom_power):
            acc = 0
            for j in range(upto + 1):
                acc += cur[j]
                cur[j] = acc
        return cur

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        ka, kb = self.denom_power, other.denom_power
        k = max(ka, kb)
        left = self.numerator * UniPoly.one_minus_t_power(k - ka)
        right = other.numerator * UniPoly.one_minus_t_power(k - kb)
        return left == right

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.numerator, c.denom_power))

    def __str__(self) -> str:
        if self.denom_power == 0:
            return str(self.numerator)
        num = str(self.numerator)
        if " " in num:
            num = f"({num})"
        if self.denom_power == 1:
            return f"{num}/(1-t)"
        return f"{num}/(1-t)^{self.denom_power}"

    def __repr__(self) -> str:
        return f"HilbertSeries({self})"

    def to_json(self) -> dict:
        return {
            "numerator": list(self.numerator.coeffs),
            "denom_power": self.denom_power,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "HilbertSeries":
        return cls(UniPoly(int(c) for c in data["numerator"]), int(data["denom_power"]))


class BWPolynomial:
    """Bivariate layer polynomial sum_{i,j} c_{ij} t^j w^i.

    Row i collects the h-polynomial of the i-dimensional layer; the w-degree
    equals the Krull dimension of the algebra the polynomial describes (the
    zero polynomial, from the unit ideal, reports dimension -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int]):
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in coeffs.items():
            if i < 0 or j < 0:
                raise ValueError("layer and degree indices must be non-negative")
            c = int(c)
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *_):
        raise AttributeError("BWPolynomial is immutable")

    @classmethod
    def from_rows(cls, rows: Mapping[int, UniPoly]) -> "BWPolynomial":
        acc: dict[tuple[int, int], int] = {}
        for i, p in rows.items():
            for j, c in enumerate(p.coeffs):
                if c:
                    acc[(i, j)] = c
        return cls(acc)

    @classmethod
    def zero(cls) -> "BWPolynomial":
        return cls({})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def w_degree(self) -> int:
        """Largest layer index with a nonzero row; -1 for the zero polynomial."""
        return max((i for i, _ in self.coeffs), default=-1)

    def t_degree(self) -> int:
        return max((j for _, j in self.coeffs), default=-1)

    def row(self, i: int) -> UniPoly:
        top = max((j for (k, j) in self.coeffs if k == i), default=-1)
        return UniPoly(self.coeffs.get((i, j), 0) for j in range(top + 1))

    def rows(self) -> dict[int, UniPoly]:
        return {i: self.row(i) for i in sorted({k for k, _ in self.coeffs})}

    def specialize(self) -> HilbertSeries:
        """Substitute w = 1/(1-t), returning the canonical Hilbert series."""
        if self.is_zero:
            return HilbertSeries(UniPoly.zero(), 0)
        d = self.w_degree()
        num = UniPoly.zero()
        for i, p in self.rows().items():
            num = num + p * UniPoly.one_minus_t_power(d - i)
        return HilbertSeries(num, d).canonical()

    def __eq__(self, other) -> bool:
        return isinstance(other, BWPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs, key=lambda ij: (ij[0], ij[1])):
            c = self.coeffs[(i, j)]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            tpart = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            wpart = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
            if tpart or wpart:
                body = ("" if a == 1 else str(a)) + tpart + wpart
            else:
                body = str(a)
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"BWPolynomial({self})"

    def to_json(self) -> dict:
        terms = [
            {"i": i, "j": j, "c": self.coeffs[(i, j)]}
            for (i, j) in sorted(self.coeffs, key=lambda ij: (ij[0], ij[1]))
        ]
        return {"dim": self.w_degree(), "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "BWPolynomial":
        return cls({(int(t["i"]), int(t["j"])): int(t["c"]) for t in data["terms"]})


def bw_specialize(p: BWPolynomial) -> HilbertSeries:
    """w := 1/(1-t); recovers the Hilbert series of the underlying algebra."""
    return p.specialize()
