"""Exact arithmetic over the rationals.

Scalars are :class:`fractions.Fraction`.  On top of that this module provides
univariate polynomials (:class:`Poly`), Sturm-sequence root counting, dense
rational matrices (:class:`RatMatrix`) with canonical echelon forms, and the
ring of exponential numbers ``sum q_i * e**r_i`` (:class:`ExpNumber`).

Every object here is an immutable value.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidInput

Rational = Fraction
Vector = tuple  # tuple of Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# rationals

def rat(x) -> Fraction:
    """Coerce ints, Fractions and rational strings to a Fraction.

    Floats are refused: a float silently turned into a huge dyadic rational
    is almost always a bug in the caller.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InvalidInput(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise InvalidInput(f"not a rational: {x!r}")


def parse_rational(s: str) -> Fraction:
    text = s.strip().replace("−", "-")
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise InvalidInput(f"not a rational string: {s!r}") from None
    if d == 0:
        raise InvalidInput(f"zero denominator in {s!r}")
    return Fraction(n, d)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(xs: Iterable) -> Vector:
    return tuple(rat(x) for x in xs)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return not any(v)


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a):
    return tuple(c * x for x in a)


def vec_comb(coeffs, vectors, n):
    """Linear combination ``sum c_k v_k`` of length-``n`` vectors."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return tuple(out)


# ---------------------------------------------------------------------------
# polynomials

class Poly:
    """Univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Poly:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable) -> Poly:
        p = cls([1])
        for r in roots:
            p = p * cls([-rat(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=ZERO))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        q = [ZERO] * max(len(rem) - dq, 0)
        inv = 1 / other.lc
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] * inv
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(q), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        # Horner; works for Fractions, floats and complex numbers.
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m: RatMatrix) -> RatMatrix:
        n = m.rows
        acc = RatMatrix.zero(n, n)
        ident = RatMatrix.identity(n)
        for c in reversed(self.coeffs):
            acc = acc @ m + ident * c
        return acc

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return Poly(c / self.lc for c in self.coeffs)

    def compose(self, other) -> Poly:
        other = _as_poly(other)
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + Poly([c])
        return acc

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> Poly:
        return cls(rat(c) for c in data)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = "T" if k == 1 else (f"T^{k}" if k > 1 else "")
            if body and a == 1:
                term = body
            elif body:
                term = f"{format_rational(a)}*{body}"
            else:
                term = format_rational(a)
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([x])


T = Poly([0, 1])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (the zero polynomial when both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def _require_nonzero(p: Poly):
    if not isinstance(p, Poly):
        raise InvalidInput(f"expected a Poly, got {type(p).__name__}")
    if p.is_zero():
        raise InvalidInput("the zero polynomial has no finite root set")


def square_free_part(p: Poly) -> Poly:
    """``p / gcd(p, p')`` made monic."""
    _require_nonzero(p)
    if p.degree == 0:
        return Poly([1])
    return (p // poly_gcd(p, p.derivative())).monic()


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.derivative()]
    while seq[-1]:
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at_infinity(seq, positive: bool):
    out = []
    for q in seq:
        s = q.lc
        if not positive and q.degree % 2 == 1:
            s = -s
        out.append(s)
    return out


def real_root_count(p: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    ``None`` bounds mean -infinity / +infinity.  The count is exact: the Sturm
    chain is built on the square-free part with rational arithmetic.
    """
    _require_nonzero(p)
    q = square_free_part(p)
    if q.degree == 0:
        return 0
    seq = sturm_sequence(q)
    if lo is None:
        v_lo = _sign_changes(_signs_at_infinity(seq, positive=False))
    else:
        v_lo = _sign_changes([s(rat(lo)) for s in seq])
    if hi is None:
        v_hi = _sign_changes(_signs_at_infinity(seq, positive=True))
    else:
        v_hi = _sign_changes([s(rat(hi)) for s in seq])
    return v_lo - v_hi


def is_real_rooted(p: Poly) -> bool:
    """True iff every complex root of ``p`` is real."""
    q = square_free_part(p)
    return real_root_count(q) == q.degree


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots, ordered by (denominator, numerator).

    That ordering is the tie-breaking rule used by the flag constructions.
    """
    _require_nonzero(p)
    q = square_free_part(p)
    roots = []
    k = 0
    while k < len(q.coeffs) and q.coeffs[k] == 0:
        k += 1
    if k:
        roots.append(ZERO)
        q = Poly(q.coeffs[k:])
    if q.degree >= 1:
        den_lcm = math.lcm(*(c.denominator for c in q.coeffs))
        ints = [int(c * den_lcm) for c in q.coeffs]
        g = math.gcd(*ints)
        ints = [c // g for c in ints]
        for b in _divisors(ints[-1]):
            for a in _divisors(ints[0]):
                if math.gcd(a, b) != 1:
                    continue
                for cand in (Fraction(a, b), Fraction(-a, b)):
                    if q(cand) == 0 and cand not in roots:
                        roots.append(cand)
    roots.sort(key=lambda r: (r.denominator, r.numerator))
    return roots


# ---------------------------------------------------------------------------
# echelon forms

def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(nonzero_rows, pivot_columns)``.  The result is canonical: two
    row lists spanning the same space give identical output.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def kernel_basis(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(a: RatMatrix, b: Sequence[Fraction]):
    """A particular solution of ``a x = b`` (free variables zero) or None."""
    aug = [list(a.row(i)) + [rat(b[i])] for i in range(a.rows)]
    red, pivots = rref(aug, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [ZERO] * a.cols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return tuple(x)


# ---------------------------------------------------------------------------
# matrices

class RatMatrix:
    """Dense immutable matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(rat(x) for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "entries", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def _raw(cls, data, cols):
        m = object.__new__(cls)
        object.__setattr__(m, "entries", data)
        object.__setattr__(m, "rows", len(data))
        object.__setattr__(m, "cols", cols)
        return m

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> RatMatrix:
        cols = rows if cols is None else cols
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls._raw(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def diagonal(cls, diag: Sequence) -> RatMatrix:
        d = [rat(x) for x in diag]
        n = len(d)
        return cls._raw(tuple(tuple(d[i] if i == j else ZERO for j in range(n))
                              for i in range(n)), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> RatMatrix:
        if not columns:
            return cls.zero(rows or 0, 0)
        return cls(zip(*columns))

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> RatMatrix:
        return cls._raw(tuple(tuple(ONE if (a, b) == (i, j) else ZERO for b in range(n))
                              for a in range(n)), n)

    @classmethod
    def block_diagonal(cls, blocks: Sequence[RatMatrix]) -> RatMatrix:
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[ZERO] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i in range(b.rows):
                out[r + i][c:c + b.cols] = b.entries[i]
            r += b.rows
            c += b.cols
        return cls._raw(tuple(tuple(row) for row in out), m)

    @property
    def shape(self):
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i) -> Vector:
        return self.entries[i]

    def col(self, j) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.cols, self.entries))

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: RatMatrix) -> RatMatrix:
        self._check_same_shape(other)
        return RatMatrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                    for r, s in zip(self.entries, other.entries)), self.cols)

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        self._check_same_shape(other)
        return RatMatrix._raw(tuple(tuple(a - b for a, b in zip(r, s))
                                    for r, s in zip(self.entries, other.entries)), self.cols)

    def __neg__(self):
        return self * -1

    def __mul__(self, c) -> RatMatrix:
        if isinstance(c, RatMatrix):
            raise TypeError("use @ for matrix products")
        c = rat(c)
        return RatMatrix._raw(tuple(tuple(c * a for a in r) for r in self.entries), self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        out = []
        for r in self.entries:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * col[k] for k, a in nz), ZERO) for col in ocols))
        return RatMatrix._raw(tuple(out), other.cols)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        nz = [(k, x) for k, x in enumerate(v) if x]
        return tuple(sum((r[k] * x for k, x in nz), ZERO) for r in self.entries)

    def commutator(self, other: RatMatrix) -> RatMatrix:
        return self @ other - other @ self

    def __pow__(self, k: int) -> RatMatrix:
        out = RatMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def transpose(self) -> RatMatrix:
        return RatMatrix._raw(tuple(self.col(j) for j in range(self.cols)), self.rows)

    def trace(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), ZERO)

    def diagonal_entries(self) -> Vector:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def is_upper_triangular(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.rows)
                   for j in range(min(i, self.cols)))

    def is_strictly_upper_triangular(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.rows)
                   for j in range(min(i + 1, self.cols)))

    def rref(self):
        return rref(self.entries, self.cols)

    def rank(self) -> int:
        return len(rref(self.entries, self.cols)[1])

    def kernel(self) -> list[Vector]:
        return kernel_basis(self.entries, self.cols)

    def inverse(self) -> RatMatrix:
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = [list(r) + list(unit_vector(n, i)) for i, r in enumerate(self.entries)]
        red, pivots = rref(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(red) < n:
            raise ZeroDivisionError("singular matrix")
        return RatMatrix(row[n:] for row in red)

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.entries], dtype=float).reshape(
            self.rows, self.cols)

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.entries]

    @classmethod
    def from_json(cls, data, field="matrix") -> RatMatrix:
        if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
            raise InvalidInput("matrix must be a list of rows", field=field)
        try:
            return cls(data)
        except InvalidInput as exc:
            raise InvalidInput(str(exc), field=field) from None

    def __repr__(self):
        return f"RatMatrix({self.to_json()})"


def kernel(m: RatMatrix) -> list[Vector]:
    """Null space basis; free-column vectors with a 1 in their free slot."""
    return m.kernel()


def char_poly(m: RatMatrix) -> Poly:
    """``det(T*I - M)`` by the Faddeev-LeVerrier recurrence.

    Runs on the integer matrix ``L*M`` (``L`` the common denominator), where
    every division in the recurrence is exact, and rescales at the end.
    """
    if not m.is_square():
        raise DimensionMismatch(f"characteristic polynomial of a {m.rows}x{m.cols} matrix")
    n = m.rows
    den = math.lcm(*(x.denominator for row in m.entries for x in row)) if n else 1
    a = [[x.numerator * (den // x.denominator) for x in row] for row in m.entries]
    c = [0] * (n + 1)
    c[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        mk = [[sum(x * y for x, y in zip(row, col)) for col in zip(*mk)] for row in a] \
            if k > 1 else mk
        for i in range(n):
            mk[i][i] += c[n - k + 1]
        tr = sum(sum(x * y for x, y in zip(a[i], (r[i] for r in mk))) for i in range(n))
        c[n - k] = -tr // k
    # det(T - L M) has coefficients c; det(T - M) = L^-n * that evaluated at L*T
    return Poly([Fraction(c[i], den ** (n - i)) for i in range(n + 1)])


# ---------------------------------------------------------------------------
# exponential numbers

class ExpNumber:
    """Exact scalar ``sum q * e**r`` with rational ``q`` and ``r``.

    The functions ``e**r`` for distinct rational ``r`` are linearly
    independent over the rationals, so the sorted term tuple is a canonical
    form and equality is tuple equality.  No ordering is offered.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc: dict[Fraction, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for r, q in items:
            r, q = rat(r), rat(q)
            acc[r] = acc.get(r, ZERO) + q
        object.__setattr__(self, "terms",
                           tuple(sorted((r, q) for r, q in acc.items() if q)))

    def __setattr__(self, name, value):
        raise AttributeError("ExpNumber is immutable")

    @classmethod
    def rational(cls, q) -> ExpNumber:
        return cls({ZERO: q})

    @classmethod
    def exp(cls, r, coeff=1) -> ExpNumber:
        return cls({r: coeff})

    def term_map(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_single_exponential(self) -> bool:
        """True for numbers of the form ``1 * e**r``."""
        return len(self.terms) == 1 and self.terms[0][1] == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExpNumber.rational(other)
        if not isinstance(other, ExpNumber):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        other = _as_exp(other)
        return ExpNumber(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self):
        return ExpNumber([(r, -q) for r, q in self.terms])

    def __sub__(self, other):
        return self + (-_as_exp(other))

    def __rsub__(self, other):
        return _as_exp(other) - self

    def __mul__(self, other):
        other = _as_exp(other)
        return ExpNumber([(r1 + r2, q1 * q2) for r1, q1 in self.terms for r2, q2 in other.terms])

    __rmul__ = __mul__

    def __float__(self):
        return math.fsum(float(q) * math.exp(float(r)) for r, q in self.terms)

    def to_json(self) -> list[list[str]]:
        return [[format_rational(q), format_rational(r)] for r, q in self.terms]

    @classmethod
    def from_json(cls, data) -> ExpNumber:
        return cls([(rat(r), rat(q)) for q, r in data])

    def __repr__(self):
        if not self.terms:
            return "ExpNumber(0)"
        return "ExpNumber(" + " + ".join(
            f"{format_rational(q)}*e^{format_rational(r)}" for r, q in self.terms) + ")"


def _as_exp(x) -> ExpNumber:
    if isinstance(x, ExpNumber):
        return x
    return ExpNumber.rational(rat(x))
