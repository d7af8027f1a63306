"""Finite-dimensional Lie algebras over the rationals.

A :class:`LieAlgebra` stores structure constants only for basis pairs
``i < j``; the remaining brackets follow from antisymmetry, so that
invariant cannot be violated.  The Jacobi identity is checked exactly on
construction.  Subspaces are kept in canonical reduced echelon form, which
makes equality of subspaces plain tuple equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (DimensionMismatch, InvalidInput, JacobiViolation, NonCommutingDerivations,
                     NotADerivation, NotAnIdeal)
from .exact import (ZERO, RatMatrix, Vector, format_rational, is_zero_vector, kernel_basis, rat,
                    rref, solve, unit_vector, vec, vec_comb)


class Subspace:
    """Subspace of Q^n held as the nonzero rows of its reduced echelon form."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vs = [vec(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vs):
            raise DimensionMismatch(f"vectors do not live in Q^{ambient_dim}")
        rows, pivots = rref(vs, ambient_dim)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n)

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, [unit_vector(n, i) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def _reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for k, x in enumerate(row):
                    if x:
                        w[k] -= c * x
        return w

    def contains(self, v: Sequence[Fraction]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match the ambient space")
        return is_zero_vector(self._reduce(v))

    __contains__ = contains

    def coordinates(self, v: Sequence[Fraction]) -> Vector:
        """Coordinates of ``v`` in the echelon basis; ``v`` must lie in the subspace."""
        if not self.contains(v):
            raise InvalidInput("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Canonical representative of ``v`` modulo this subspace."""
        return tuple(self._reduce(v))

    def complement_indices(self) -> list[int]:
        piv = set(self.pivots)
        return [k for k in range(self.ambient_dim) if k not in piv]

    def issubset(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis)

    __le__ = issubset

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: Subspace) -> Subspace:
        self._check(other)
        n = self.ambient_dim
        a, b = self.basis, other.basis
        if not a or not b:
            return Subspace.zero(n)
        # solve sum x_i a_i - sum y_j b_j = 0
        rows = [[a[i][k] for i in range(len(a))] + [-b[j][k] for j in range(len(b))]
                for k in range(n)]
        sols = kernel_basis(rows, len(a) + len(b))
        return Subspace(n, [vec_comb(s[:len(a)], a, n) for s in sols])

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces of different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in v] for v in self.basis]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={self.to_json()})"


class LieAlgebra:
    """Lie algebra with rational structure constants.

    ``constants`` maps ``(i, j)`` with ``i < j`` to the coordinate vector of
    ``[x_i, x_j]``.  Use :func:`new_lie_algebra` (or the constructor, which
    does the same) to get Jacobi-checked instances.
    """

    def __init__(self, dim: int, names: Sequence[str] | None = None,
                 constants: dict | None = None, name: str = "", check: bool = True):
        if not isinstance(dim, int) or dim < 0:
            raise DimensionMismatch(f"dimension must be a natural number, got {dim!r}")
        names = list(names) if names is not None else [f"x{i + 1}" for i in range(dim)]
        if len(names) != dim:
            raise DimensionMismatch(f"{len(names)} basis names for dimension {dim}")
        if len(set(names)) != dim or any(not isinstance(s, str) or not s for s in names):
            raise InvalidInput("basis names must be distinct non-empty strings")
        table = {}
        for key, value in (constants or {}).items():
            i, j = key
            if not (0 <= i < j < dim):
                raise DimensionMismatch(f"structure constant index {key} outside 0 <= i < j < {dim}")
            v = vec(value)
            if len(v) != dim:
                raise DimensionMismatch(f"bracket {key} has {len(v)} coordinates, expected {dim}")
            if not is_zero_vector(v):
                table[(i, j)] = v
        self.dim = dim
        self.basis_names = tuple(names)
        self.name = name
        self._constants = table
        self._zero = (ZERO,) * dim
        if check:
            self.check_jacobi()

    # -- basic structure ---------------------------------------------------

    @property
    def structure_constants(self) -> dict:
        return dict(self._constants)

    def bracket_basis(self, i: int, j: int) -> Vector:
        if i < j:
            return self._constants.get((i, j), self._zero)
        if i > j:
            v = self._constants.get((j, i))
            return tuple(-x for x in v) if v is not None else self._zero
        return self._zero

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise InvalidInput(f"unknown basis element {name!r}") from None

    def basis_vector(self, i) -> Vector:
        if isinstance(i, str):
            i = self.index(i)
        return unit_vector(self.dim, i)

    def element(self, coords: Sequence) -> Vector:
        v = vec(coords)
        if len(v) != self.dim:
            raise DimensionMismatch(f"element has {len(v)} coordinates, algebra has dim {self.dim}")
        return v

    def bracket(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
        if len(a) != self.dim or len(b) != self.dim:
            raise DimensionMismatch("element length does not match the algebra")
        out = [ZERO] * self.dim
        for (i, j), v in self._constants.items():
            c = a[i] * b[j] - a[j] * b[i]
            if c:
                for k, x in enumerate(v):
                    if x:
                        out[k] += c * x
        return tuple(out)

    @cached_property
    def ad_basis(self) -> tuple[RatMatrix, ...]:
        """``ad(x_i)`` for every basis element."""
        mats = []
        for i in range(self.dim):
            cols = [self.bracket_basis(i, j) for j in range(self.dim)]
            mats.append(RatMatrix.from_columns(cols, self.dim) if self.dim else RatMatrix.zero(0))
        return tuple(mats)

    def ad(self, xi: Sequence[Fraction]) -> RatMatrix:
        xi = self.element(xi)
        acc = RatMatrix.zero(self.dim)
        for c, m in zip(xi, self.ad_basis):
            if c:
                acc = acc + m * c
        return acc

    def check_jacobi(self):
        for i, j, k in combinations(range(self.dim), 3):
            ei, ej, ek = (self.basis_vector(t) for t in (i, j, k))
            r1 = self.bracket(ei, self.bracket_basis(j, k))
            r2 = self.bracket(ej, self.bracket_basis(k, i))
            r3 = self.bracket(ek, self.bracket_basis(i, j))
            res = tuple(a + b + c for a, b, c in zip(r1, r2, r3))
            if not is_zero_vector(res):
                raise JacobiViolation(i, j, k, res)

    def is_abelian(self) -> bool:
        return not self._constants

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.dim, self.basis_names, self._constants) == \
            (other.dim, other.basis_names, other._constants)

    def __hash__(self):
        return hash((self.dim, self.basis_names, tuple(sorted(self._constants.items()))))

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"LieAlgebra({label}dim={self.dim})"

    def full(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.dim)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        brackets = []
        for (i, j), v in sorted(self._constants.items()):
            brackets.append({
                "left": self.basis_names[i],
                "right": self.basis_names[j],
                "result": {self.basis_names[k]: format_rational(x) for k, x in enumerate(v) if x},
            })
        return {"name": self.name, "dim": self.dim, "basis": list(self.basis_names),
                "brackets": brackets}


def new_lie_algebra(dim: int, names: Sequence[str] | None, constants: dict,
                    name: str = "") -> LieAlgebra:
    """Validated constructor; raises :class:`JacobiViolation` on bad constants."""
    return LieAlgebra(dim, names, constants, name=name)


def abelian(n: int, name: str | None = None, names=None) -> LieAlgebra:
    return LieAlgebra(n, names or [f"e{i + 1}" for i in range(n)], {},
                      name=name if name is not None else f"abelian{n}")


# ---------------------------------------------------------------------------
# module-level operations

def bracket(g: LieAlgebra, a, b) -> Vector:
    return g.bracket(g.element(a), g.element(b))


def ad_matrix(g: LieAlgebra, xi) -> RatMatrix:
    return g.ad(xi)


def bracket_space(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != g.dim or b.ambient_dim != g.dim:
        raise DimensionMismatch("subspace ambient dimension differs from the algebra")
    return Subspace(g.dim, [g.bracket(u, v) for u in a.basis for v in b.basis])


def _series(g: LieAlgebra, step) -> list[Subspace]:
    terms = [g.full()]
    # a strictly decreasing chain has at most dim + 1 members
    for _ in range(g.dim + 1):
        nxt = step(terms[-1])
        terms.append(nxt)
        if nxt.is_zero() or nxt == terms[-2]:
            break
    return terms


def derived_series(g: LieAlgebra) -> list[Subspace]:
    """``g, [g,g], [[g,g],[g,g]], ...`` up to 0 or the first repeat (included)."""
    if g.dim == 0:
        return [g.full()]
    return _series(g, lambda s: bracket_space(g, s, s))


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    if g.dim == 0:
        return [g.full()]
    full = g.full()
    return _series(g, lambda s: bracket_space(g, full, s))


def is_solvable(g: LieAlgebra) -> bool:
    return derived_series(g)[-1].is_zero()


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].is_zero()


def nilpotency_class(g: LieAlgebra) -> int:
    """Number of nonzero terms after ``g`` itself, i.e. ``c`` with ``g^(c+1) = 0``."""
    series = lower_central_series(g)
    if not series[-1].is_zero():
        raise InvalidInput(f"{g!r} is not nilpotent")
    return len(series) - 1


def centralizer(g: LieAlgebra, s: Subspace) -> Subspace:
    """``{x : [x, s] = 0 for all s in S}``."""
    rows = []
    for v in s.basis:
        rows.extend(g.ad(v).entries)
    return Subspace(g.dim, kernel_basis(rows, g.dim)) if rows else g.full()


def center(g: LieAlgebra) -> Subspace:
    return centralizer(g, g.full())


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    return bracket_space(g, g.full(), s).issubset(s)


def is_subalgebra(g: LieAlgebra, s: Subspace) -> bool:
    return bracket_space(g, s, s).issubset(s)


def killing_form(g: LieAlgebra) -> RatMatrix:
    ads = g.ad_basis
    return RatMatrix([[(a @ b).trace() for b in ads] for a in ads])


@dataclass(frozen=True)
class Quotient:
    """``g / ideal`` on the complement spanned by the non-pivot unit vectors."""

    algebra: LieAlgebra
    ambient: LieAlgebra
    ideal: Subspace
    complement: tuple[int, ...]

    @property
    def matrix(self) -> RatMatrix:
        n = self.ambient.dim
        cols = [self.project(unit_vector(n, k)) for k in range(n)]
        return RatMatrix([[c[r] for c in cols] for r in range(len(self.complement))], cols=n)

    def project(self, v: Sequence[Fraction]) -> Vector:
        w = self.ideal.reduce(v)
        return tuple(w[k] for k in self.complement)

    def lift(self, u: Sequence[Fraction]) -> Vector:
        out = [ZERO] * self.ambient.dim
        for k, x in zip(self.complement, u):
            out[k] = x
        return tuple(out)

    def preimage(self, s: Subspace) -> Subspace:
        return Subspace(self.ambient.dim, [self.lift(v) for v in s.basis]) + self.ideal


def quotient(g: LieAlgebra, ideal: Subspace) -> Quotient:
    if ideal.ambient_dim != g.dim:
        raise DimensionMismatch("ideal does not live in the algebra")
    if not is_ideal(g, ideal):
        raise NotAnIdeal("subspace is not an ideal: [g, I] is not contained in I")
    comp = tuple(ideal.complement_indices())
    consts = {}
    for a, b in combinations(range(len(comp)), 2):
        w = ideal.reduce(g.bracket_basis(comp[a], comp[b]))
        consts[(a, b)] = tuple(w[k] for k in comp)
    q = LieAlgebra(len(comp), [g.basis_names[k] for k in comp], consts,
                   name=f"{g.name}/I" if g.name else "")
    return Quotient(q, g, ideal, comp)


def is_derivation(h: LieAlgebra, d: RatMatrix):
    """Return None if ``d`` is a derivation of ``h``, else a failing basis pair."""
    if d.shape != (h.dim, h.dim):
        raise DimensionMismatch(f"derivation must be {h.dim}x{h.dim}, got {d.rows}x{d.cols}")
    cols = d.columns()
    for i, j in combinations(range(h.dim), 2):
        lhs = d.apply(h.bracket_basis(i, j))
        rhs = tuple(a + b for a, b in zip(h.bracket(cols[i], h.basis_vector(j)),
                                          h.bracket(h.basis_vector(i), cols[j])))
        if lhs != rhs:
            return (i, j)
    return None


def semidirect_sum(h: LieAlgebra, derivations: Sequence[RatMatrix],
                   names: Sequence[str] | None = None, name: str = "") -> LieAlgebra:
    """``h`` extended by commuting derivations ``D_1..D_m``.

    New generators ``t_j`` come after the basis of ``h`` and satisfy
    ``[t_j, a] = D_j a`` and ``[t_j, t_k] = 0``.
    """
    derivations = list(derivations)
    for j, d in enumerate(derivations):
        bad = is_derivation(h, d)
        if bad is not None:
            raise NotADerivation(j, bad)
    for j, k in combinations(range(len(derivations)), 2):
        if not derivations[j].commutator(derivations[k]).is_zero():
            raise NonCommutingDerivations(j, k)
    n, m = h.dim, len(derivations)
    if names is None:
        names, k = [], 1
        while len(names) < m:
            cand = f"t{k}"
            if cand not in h.basis_names:
                names.append(cand)
            k += 1
    names = list(names)
    if len(names) != m:
        raise DimensionMismatch(f"{len(names)} names for {m} derivations")
    consts = {(i, j): v + (ZERO,) * m for (i, j), v in h.structure_constants.items()}
    for j, d in enumerate(derivations):
        for a, col in enumerate(d.columns()):
            # [t_j, x_a] = D x_a, stored as [x_a, t_j] = -D x_a
            consts[(a, n + j)] = tuple(-x for x in col) + (ZERO,) * m
    return LieAlgebra(n + m, list(h.basis_names) + names, consts, name=name)


def change_basis(g: LieAlgebra, p: RatMatrix, names: Sequence[str] | None = None) -> LieAlgebra:
    """Same algebra written in the basis ``f_i = sum_k p[k][i] x_k`` (columns of ``p``)."""
    if p.shape != (g.dim, g.dim):
        raise DimensionMismatch("change of basis must be a square matrix of size dim")
    pinv = p.inverse()
    cols = p.columns()
    consts = {}
    for i, j in combinations(range(g.dim), 2):
        consts[(i, j)] = pinv.apply(g.bracket(cols[i], cols[j]))
    return LieAlgebra(g.dim, names or g.basis_names, consts, name=g.name)


def matrix_lie_algebra(matrices: Sequence[RatMatrix], names: Sequence[str],
                       name: str = "") -> LieAlgebra:
    """Structure constants of the span of linearly independent matrices.

    Raises :class:`InvalidInput` when the span is not closed under commutators.
    """
    mats = list(matrices)
    flat = [tuple(x for row in m.entries for x in row) for m in mats]
    if len(rref(flat)[0]) != len(mats):
        raise InvalidInput("matrices are linearly dependent")
    basis = RatMatrix.from_columns(flat)
    consts = {}
    for i, j in combinations(range(len(mats)), 2):
        c = mats[i].commutator(mats[j])
        coords = solve(basis, [x for row in c.entries for x in row])
        if coords is None:
            raise InvalidInput(f"commutator of {names[i]} and {names[j]} leaves the span")
        consts[(i, j)] = coords
    return LieAlgebra(len(mats), names, consts, name=name)


# ---------------------------------------------------------------------------
# JSON file format

def algebra_from_json(data, field: str = "") -> LieAlgebra:
    """Parse the algebra object format.

    ``{"name", "dim", "basis": [...], "brackets": [{"left", "right", "result": {name: "p/q"}}]}``
    Unlisted brackets are zero.
    """
    pre = f"{field}." if field else ""
    if not isinstance(data, dict):
        raise InvalidInput("algebra must be a JSON object", field=field or "<root>")
    basis = data.get("basis")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise InvalidInput("basis must be a list of strings", field=pre + "basis")
    dim = data.get("dim", len(basis))
    if not isinstance(dim, int) or isinstance(dim, bool) or dim != len(basis):
        raise DimensionMismatch(f"dim {dim!r} does not match {len(basis)} basis names",
                                field=pre + "dim")
    if len(set(basis)) != len(basis):
        raise InvalidInput("duplicate basis names", field=pre + "basis")
    idx = {b: k for k, b in enumerate(basis)}
    raw = data.get("brackets", [])
    if not isinstance(raw, list):
        raise InvalidInput("brackets must be a list", field=pre + "brackets")
    seen: dict = {}
    for n, entry in enumerate(raw):
        f = f"{pre}brackets[{n}]"
        if not isinstance(entry, dict):
            raise InvalidInput("bracket entry must be an object", field=f)
        try:
            i, j = idx[entry["left"]], idx[entry["right"]]
        except KeyError as exc:
            raise InvalidInput(f"unknown or missing basis name {exc}", field=f) from None
        except TypeError:
            raise InvalidInput("left/right must be basis names", field=f) from None
        result = entry.get("result", {})
        if not isinstance(result, dict):
            raise InvalidInput("result must map basis names to rationals", field=f + ".result")
        v = [ZERO] * dim
        for key, val in result.items():
            if key not in idx:
                raise InvalidInput(f"unknown basis name {key!r}", field=f"{f}.result.{key}")
            if not isinstance(val, (str, int)) or isinstance(val, bool):
                raise InvalidInput("coefficients must be rational strings",
                                   field=f"{f}.result.{key}")
            try:
                v[idx[key]] += rat(val)
            except InvalidInput as exc:
                raise InvalidInput(str(exc), field=f"{f}.result.{key}") from None
        if i == j:
            if any(v):
                raise InvalidInput("[a, a] must be zero", field=f)
            continue
        key = (min(i, j), max(i, j))
        oriented = tuple(v) if i < j else tuple(-x for x in v)
        if key in seen:
            if seen[key] != oriented:
                raise InvalidInput("bracket listed twice without exact antisymmetry", field=f)
            continue
        seen[key] = oriented
    name = data.get("name", "")
    if not isinstance(name, str):
        raise InvalidInput("name must be a string", field=pre + "name")
    return LieAlgebra(dim, basis, seen, name=name)


def algebra_to_json(g: LieAlgebra) -> dict:
    return g.to_json()


def loads_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc.msg}", line=exc.lineno) from None


def load_algebra(path) -> LieAlgebra:
    with open(path, encoding="utf-8") as fh:
        return algebra_from_json(loads_json(fh.read()))


def element_from_json(g: LieAlgebra, data, field="element") -> Vector:
    """An element given either as a coordinate list or as ``{name: "p/q"}``."""
    if isinstance(data, dict):
        out = [ZERO] * g.dim
        for k, v in data.items():
            try:
                out[g.index(k)] += rat(v)
            except InvalidInput as exc:
                raise InvalidInput(str(exc), field=f"{field}.{k}") from None
        return tuple(out)
    if isinstance(data, list):
        try:
            return g.element(data)
        except InvalidInput as exc:
            raise InvalidInput(str(exc), field=field) from None
    raise InvalidInput("element must be a list or an object", field=field)


__all__ = [
    "LieAlgebra", "Subspace", "Quotient", "new_lie_algebra", "abelian", "bracket", "ad_matrix",
    "bracket_space", "derived_series", "lower_central_series", "is_solvable", "is_nilpotent",
    "nilpotency_class", "center", "centralizer", "is_ideal", "is_subalgebra", "killing_form",
    "quotient", "is_derivation", "semidirect_sum", "change_basis", "matrix_lie_algebra",
    "algebra_from_json", "algebra_to_json", "load_algebra", "element_from_json",
]
