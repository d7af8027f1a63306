"""Triangular models: faithful triangular representations and Exp/Log on t_n.

Faithful representations come in four tiers, tried in order:

``AdCenterless``
    the adjoint representation in a basis adapted to a complete flag;
``AdPlusCharacters``
    the same plus diagonal characters that separate the center, when the
    center meets ``[g, g]`` trivially;
``NilpotentPBW``
    left multiplication on a truncated enveloping algebra;
``SplitOverNilradical``
    a truncated enveloping algebra of the nilradical, with a complementary
    subalgebra acting by derivations.

The exact exponential uses the additive Jordan-Chevalley decomposition,
computed with polynomial arithmetic only, and produces entries in the ring of
exponential numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Sequence

import numpy as np
import scipy.linalg

from .errors import (DimensionMismatch, InvalidInput, IrrationalEigenvalues,
                     NonPositiveDiagonal, NotAFlag, NotCompletelySolvable, NotTriangular,
                     NumericCertificateFailed, NumericFlag, SizeLimitExceeded, UnsupportedAdoCase)
from .exact import (ONE, ZERO, ExpNumber, Poly, RatMatrix, T, Vector, char_poly, format_rational,
                    poly_xgcd, rat, rational_roots, solve, square_free_part, unit_vector, vec_comb)
from .liealg import (LieAlgebra, Subspace, bracket_space, center, change_basis, is_nilpotent,
                     is_subalgebra, lower_central_series)
from .solvclass import (COMPLETELY_SOLVABLE, EXACT, NUMERIC, Flag, check_flag, complete_flag,
                        invariant_refinement, is_completely_solvable,
                        nilradical_completely_solvable)

AD_CENTERLESS = "AdCenterless"
AD_PLUS_CHARACTERS = "AdPlusCharacters"
NILPOTENT_PBW = "NilpotentPBW"
SPLIT_OVER_NILRADICAL = "SplitOverNilradical"

PBW_SIZE_LIMIT = 5000
DEFAULT_LOG_TOL = 1e-9


# ---------------------------------------------------------------------------
# representations

def joint_kernel(matrices: Sequence[RatMatrix], dim: int) -> Subspace:
    """``{a : sum a_i M_i = 0}``."""
    if not matrices:
        return Subspace.full(dim)
    n, m = matrices[0].rows, matrices[0].cols
    rows = [[mat[r, c] for mat in matrices] for r in range(n) for c in range(m)]
    if not rows:
        return Subspace.full(dim)
    return Subspace(dim, RatMatrix(rows, cols=dim).kernel())


@dataclass(frozen=True)
class Representation:
    algebra: LieAlgebra
    matrices: tuple[RatMatrix, ...]
    tier: str

    @property
    def target_dim(self) -> int:
        return self.matrices[0].rows if self.matrices else 0

    @property
    def is_triangular(self) -> bool:
        return all(m.is_upper_triangular() for m in self.matrices)

    @property
    def is_faithful(self) -> bool:
        return joint_kernel(self.matrices, self.algebra.dim).is_zero()

    def image(self, xi: Sequence) -> RatMatrix:
        xi = self.algebra.element(xi)
        out = RatMatrix.zero(self.target_dim)
        for c, m in zip(xi, self.matrices):
            if c:
                out = out + m * c
        return out

    def homomorphism_defect(self):
        """First basis pair violating ``rho([x,y]) = [rho x, rho y]``, or None."""
        g = self.algebra
        for i, j in combinations(range(g.dim), 2):
            lhs = self.image(g.bracket_basis(i, j))
            if lhs != self.matrices[i].commutator(self.matrices[j]):
                return (i, j)
        return None

    def is_homomorphism(self) -> bool:
        return self.homomorphism_defect() is None

    def to_json(self) -> dict:
        return {
            "tier": self.tier,
            "target_dim": self.target_dim,
            "basis": list(self.algebra.basis_names),
            "matrices": [m.to_json() for m in self.matrices],
            "is_triangular": self.is_triangular,
            "is_faithful": self.is_faithful,
            "is_homomorphism": self.is_homomorphism(),
        }


def triangularize_ad(g: LieAlgebra, flag: Flag) -> Representation:
    """Adjoint representation in a basis adapted to ``flag`` (upper triangular)."""
    if flag.mode != EXACT:
        raise NumericFlag("exact triangularization needs an exact flag")
    if not check_flag(g, flag):
        raise NotAFlag("not a complete flag of ideals of the algebra")
    b = RatMatrix.from_columns(flag.adapted_basis()) if g.dim else RatMatrix.zero(0)
    binv = b.inverse() if g.dim else b
    mats = tuple(binv @ a @ b for a in g.ad_basis)
    return Representation(g, mats, AD_CENTERLESS)


def _characters(g: LieAlgebra, sep: Subspace) -> list[Vector]:
    """Functionals vanishing on ``[g, g]`` and dual to the echelon basis of ``sep``."""
    derived = bracket_space(g, g.full(), g.full())
    rows = list(derived.basis) + list(sep.basis)
    a = RatMatrix(rows, cols=g.dim)
    out = []
    for i in range(sep.dim):
        rhs = [ZERO] * derived.dim + list(unit_vector(sep.dim, i))
        f = solve(a, rhs)
        if f is None:
            raise UnsupportedAdoCase("cannot separate the kernel by characters")
        out.append(f)
    return out


def _with_characters(g: LieAlgebra, base: list[RatMatrix] | None, sep: Subspace, tier: str):
    chars = _characters(g, sep)
    mats = []
    for k in range(g.dim):
        diag = RatMatrix.diagonal([f[k] for f in chars])
        mats.append(diag if base is None else RatMatrix.block_diagonal([base[k], diag]))
    return Representation(g, tuple(mats), tier)


# -- truncated enveloping algebras ------------------------------------------

class _Envelope:
    """Truncated enveloping algebra of a nilpotent algebra in an adapted basis.

    ``weights[i]`` is the lower-central-series depth of generator ``i``.
    Ordered monomials are sorted index tuples; they are kept when their
    (ordinary or weighted) degree is at most ``cutoff``.  Monomials are listed
    by decreasing weight, then lexicographically, so that left
    multiplications and triangular derivations come out upper triangular.
    """

    def __init__(self, n: LieAlgebra, weights: Sequence[int], cutoff: int, weighted: bool):
        self.n = n
        self.weights = list(weights)
        self.cutoff = cutoff
        self.weighted = weighted
        self._memo: dict = {}
        monos = [m for m in self._enumerate() if self._size(m) <= cutoff]
        monos.sort(key=lambda m: (-self.weight(m), m))
        self.monomials = monos
        self.index = {m: i for i, m in enumerate(monos)}

    def weight(self, m) -> int:
        return sum(self.weights[i] for i in m)

    def _size(self, m) -> int:
        return self.weight(m) if self.weighted else len(m)

    def _enumerate(self):
        d = self.n.dim
        minw = min(self.weights, default=1)
        maxlen = self.cutoff if not self.weighted else self.cutoff // max(minw, 1)
        count = 0
        for length in range(maxlen + 1):
            for m in combinations_with_replacement(range(d), length):
                if self._size(m) <= self.cutoff:
                    count += 1
                    if count > PBW_SIZE_LIMIT:
                        raise SizeLimitExceeded(
                            f"truncated enveloping algebra exceeds {PBW_SIZE_LIMIT} monomials")
                    yield m

    def mul_gen(self, a: int, m: tuple) -> dict:
        """Ordered expansion of ``x_a * m``."""
        key = (a, m)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not m or a <= m[0]:
            out = {(a,) + m: ONE}
        else:
            head, rest = m[0], m[1:]
            out: dict = {}
            for mono, c in self.mul_gen(a, rest).items():
                for mono2, c2 in self.mul_gen(head, mono).items():
                    out[mono2] = out.get(mono2, ZERO) + c * c2
            for k, ck in enumerate(self.n.bracket_basis(a, head)):
                if ck:
                    for mono2, c2 in self.mul_gen(k, rest).items():
                        out[mono2] = out.get(mono2, ZERO) + ck * c2
            out = {k: v for k, v in out.items() if v}
        self._memo[key] = out
        return out

    def mul_word(self, word: Sequence[int]) -> dict:
        acc = {(): ONE}
        for a in reversed(word):
            nxt: dict = {}
            for mono, c in acc.items():
                for mono2, c2 in self.mul_gen(a, mono).items():
                    nxt[mono2] = nxt.get(mono2, ZERO) + c * c2
            acc = {k: v for k, v in nxt.items() if v}
        return acc

    def _matrix(self, columns: list[dict]) -> RatMatrix:
        size = len(self.monomials)
        rows = [[ZERO] * size for _ in range(size)]
        for j, col in enumerate(columns):
            for mono, c in col.items():
                i = self.index.get(mono)
                if i is not None:
                    rows[i][j] += c
        return RatMatrix(rows, cols=size)

    def left(self, a: int) -> RatMatrix:
        return self._matrix([self.mul_gen(a, m) for m in self.monomials])

    def derivation(self, d: RatMatrix) -> RatMatrix:
        """Extension of a derivation ``d`` of ``n`` to the truncated algebra."""
        cols = d.columns()
        out_cols = []
        for m in self.monomials:
            acc: dict = {}
            for pos, i in enumerate(m):
                for k, c in enumerate(cols[i]):
                    if c:
                        word = m[:pos] + (k,) + m[pos + 1:]
                        for mono, c2 in self.mul_word(word).items():
                            acc[mono] = acc.get(mono, ZERO) + c * c2
            out_cols.append(acc)
        return self._matrix(out_cols)


def _adapted_to_series(g: LieAlgebra, series: Sequence[Subspace]):
    """Basis adapted to a decreasing chain, preferring the input unit vectors.

    Returns ``(vectors, weights)`` ordered by increasing weight; weight ``j``
    means the vector lies in ``series[j-1]`` but not ``series[j]``.
    """
    levels = []
    span = Subspace.zero(g.dim)
    for j in range(len(series) - 1, 0, -1):
        target = series[j - 1]
        added = []
        cands = [unit_vector(g.dim, i) for i in range(g.dim)] + list(target.basis)
        for v in cands:
            if span.dim == target.dim:
                break
            if target.contains(v) and not span.contains(v):
                added.append(v)
                span = span + Subspace(g.dim, [v])
        levels.append((j, added))
    vectors, weights = [], []
    for j, added in sorted(levels, key=lambda t: t[0]):
        vectors.extend(added)
        weights.extend([j] * len(added))
    return vectors, weights


def nilpotent_pbw_rep(g: LieAlgebra) -> Representation:
    """Left multiplication on ``U(g)`` truncated at degree ``c`` (class ``c``).

    For class at most 2 the truncation is by ordinary degree and the target
    dimension is ``C(n + c, c)``.  For higher class ordinary-degree
    truncation is not a module, so the weighted degree from the lower
    central series is used instead.
    """
    series = lower_central_series(g)
    if not series[-1].is_zero():
        raise InvalidInput(f"{g!r} is not nilpotent")
    c = len(series) - 1
    vectors, weights = _adapted_to_series(g, series)
    b = RatMatrix.from_columns(vectors)
    ga = change_basis(g, b)
    if c <= 2 and math.comb(g.dim + c, c) > PBW_SIZE_LIMIT:
        raise SizeLimitExceeded(f"C({g.dim}+{c},{c}) exceeds {PBW_SIZE_LIMIT}")
    env = _Envelope(ga, weights, c, weighted=c > 2)
    lefts = [env.left(a) for a in range(g.dim)]
    binv = b.inverse()
    mats = []
    for k in range(g.dim):
        coeffs = binv.col(k)
        acc = RatMatrix.zero(len(env.monomials))
        for a, x in enumerate(coeffs):
            if x:
                acc = acc + lefts[a] * x
        mats.append(acc)
    return Representation(g, tuple(mats), NILPOTENT_PBW)


def _sub_algebra(g: LieAlgebra, vectors: Sequence[Vector]) -> LieAlgebra:
    """Structure constants of the subalgebra with the given (ordered) basis."""
    b = RatMatrix.from_columns(vectors)
    consts = {}
    for i, j in combinations(range(len(vectors)), 2):
        coords = solve(b, g.bracket(vectors[i], vectors[j]))
        if coords is None:
            raise InvalidInput("vectors do not span a subalgebra")
        consts[(i, j)] = coords
    return LieAlgebra(len(vectors), [f"n{i + 1}" for i in range(len(vectors))], consts)


def _complement_subalgebra(g: LieAlgebra, nil: Subspace) -> list[Vector] | None:
    k = g.dim - nil.dim
    canonical = tuple(nil.complement_indices())
    choices = [canonical] + [c for c in combinations(range(g.dim), k) if c != canonical]
    for choice in choices:
        vecs = [unit_vector(g.dim, i) for i in choice]
        span = Subspace(g.dim, vecs)
        if (span + nil).dim == g.dim and is_subalgebra(g, span):
            return vecs
    return None


def split_over_nilradical_rep(g: LieAlgebra) -> Representation:
    nil = nilradical_completely_solvable(g)
    comp = _complement_subalgebra(g, nil)
    if comp is None:
        raise UnsupportedAdoCase("no complementary subalgebra to the nilradical among "
                                 "coordinate complements")
    # lower central series of the nilradical, as subspaces of g
    series = [nil]
    while not series[-1].is_zero():
        nxt = bracket_space(g, nil, series[-1])
        if nxt == series[-1]:
            raise UnsupportedAdoCase("Killing radical is not nilpotent")
        series.append(nxt)
    cls = len(series) - 1
    # refine to a chain of g-ideals; the chain order puts deeper vectors first
    chain, weights = [series[-1]], []
    for j in range(cls, 0, -1):
        part = invariant_refinement(g.ad_basis, series[j], series[j - 1])
        chain.extend(part[1:])
        weights.extend([j] * (len(part) - 1))
    basis = [next(v for v in hi.basis if not lo.contains(v)) for lo, hi in zip(chain, chain[1:])]
    n_alg = _sub_algebra(g, basis)
    env = _Envelope(n_alg, weights, cls, weighted=True)
    nb = RatMatrix.from_columns(basis)
    full = RatMatrix.from_columns(list(comp) + basis)
    fullinv = full.inverse()
    derivs = []
    for t in comp:
        cols = [solve(nb, g.bracket(t, v)) for v in basis]
        derivs.append(env.derivation(RatMatrix.from_columns(cols)))
    lefts = [env.left(a) for a in range(len(basis))]
    pieces = derivs + lefts
    size = len(env.monomials)
    mats = []
    for k in range(g.dim):
        acc = RatMatrix.zero(size)
        for x, m in zip(fullinv.col(k), pieces):
            if x:
                acc = acc + m * x
        mats.append(acc)
    rep = Representation(g, tuple(mats), SPLIT_OVER_NILRADICAL)
    ker = joint_kernel(rep.matrices, g.dim)
    if not ker.is_zero():
        derived = bracket_space(g, g.full(), g.full())
        if not ker.intersection(derived).is_zero():
            raise UnsupportedAdoCase("kernel meets [g, g]; characters cannot separate it")
        rep = _with_characters(g, list(rep.matrices), ker, SPLIT_OVER_NILRADICAL)
    return rep


def faithful_triangular_rep(g: LieAlgebra) -> Representation:
    """Faithful representation by upper triangular rational matrices."""
    verdict = is_completely_solvable(g)
    if verdict.kind != COMPLETELY_SOLVABLE:
        raise NotCompletelySolvable(f"{g!r} is {verdict.kind}")
    z = center(g)
    if z.is_zero():
        rep = triangularize_ad(g, complete_flag(g, EXACT))
    else:
        derived = bracket_space(g, g.full(), g.full())
        if z.intersection(derived).is_zero():
            base = None
            if not g.is_abelian():
                base = list(triangularize_ad(g, complete_flag(g, EXACT)).matrices)
            rep = _with_characters(g, base, z, AD_PLUS_CHARACTERS)
        elif is_nilpotent(g):
            rep = nilpotent_pbw_rep(g)
        else:
            rep = split_over_nilradical_rep(g)
    defect = rep.homomorphism_defect()
    if defect is not None or not rep.is_triangular or not rep.is_faithful:
        raise UnsupportedAdoCase(f"tier {rep.tier} failed certification (hom defect {defect})")
    return rep


# ---------------------------------------------------------------------------
# Jordan-Chevalley and the exponential

@dataclass(frozen=True)
class JCDecomposition:
    semisimple: RatMatrix
    nilpotent: RatMatrix
    poly: Poly  # semisimple = poly(M)

    @property
    def S(self):
        return self.semisimple

    @property
    def N(self):
        return self.nilpotent


def jordan_chevalley(m: RatMatrix) -> JCDecomposition:
    """Additive Jordan-Chevalley decomposition over the rationals.

    Newton iteration ``s <- s - f(s) / f'(s)`` modulo the characteristic
    polynomial, where ``f`` is its square-free part, starting from ``s = T``.
    No eigenvalues are computed.
    """
    if not m.is_square():
        raise DimensionMismatch("Jordan-Chevalley decomposition of a non-square matrix")
    if m.rows == 0:
        return JCDecomposition(m, m, Poly([0, 1]))
    chi = char_poly(m)
    f = square_free_part(chi)
    fp = f.derivative()
    s = T
    for _ in range(m.rows.bit_length() + 2):
        fs = f.compose(s) % chi
        if fs.is_zero():
            break
        g, inv, _ = poly_xgcd(fp.compose(s) % chi, chi)
        if g != Poly([1]):
            raise ArithmeticError("derivative not invertible modulo the characteristic polynomial")
        s = (s - fs * inv) % chi
    else:
        raise ArithmeticError("Newton iteration did not terminate")
    semi = s.eval_matrix(m)
    return JCDecomposition(semi, m - semi, s)


class ExpMatrix:
    """Matrix with :class:`ExpNumber` entries."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries):
        data = tuple(tuple(e if isinstance(e, ExpNumber) else ExpNumber.rational(rat(e))
                           for e in row) for row in entries)
        object.__setattr__(self, "entries", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]) if data else 0)

    def __setattr__(self, name, value):
        raise AttributeError("ExpMatrix is immutable")

    @classmethod
    def from_rational(cls, m: RatMatrix) -> ExpMatrix:
        return cls(m.entries)

    @classmethod
    def identity(cls, n: int) -> ExpMatrix:
        return cls.from_rational(RatMatrix.identity(n))

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other):
        if isinstance(other, RatMatrix):
            other = ExpMatrix.from_rational(other)
        if not isinstance(other, ExpMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other: ExpMatrix) -> ExpMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch("cannot multiply")
        out = []
        for r in self.entries:
            row = []
            for j in range(other.cols):
                acc = ExpNumber()
                for k, a in enumerate(r):
                    if not a.is_zero():
                        b = other.entries[k][j]
                        if not b.is_zero():
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ExpMatrix(out)

    def in_positive_triangular_group(self) -> bool:
        """Strictly lower entries zero and diagonal entries of the form ``1 * e**r``."""
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if j < i and not e.is_zero():
                    return False
                if i == j and not e.is_single_exponential():
                    return False
        return True

    def to_float(self) -> np.ndarray:
        return np.array([[float(e) for e in row] for row in self.entries], dtype=float)

    def to_json(self) -> list:
        return [[e.to_json() for e in row] for row in self.entries]

    @classmethod
    def from_json(cls, data) -> ExpMatrix:
        return cls([[ExpNumber.from_json(e) for e in row] for row in data])

    def __repr__(self):
        return f"ExpMatrix({[[repr(e) for e in r] for r in self.entries]})"


def exp_exact(m: RatMatrix) -> ExpMatrix:
    """``Exp(M)`` for a rational matrix whose eigenvalues are all rational."""
    if not m.is_square():
        raise DimensionMismatch("exponential of a non-square matrix")
    n = m.rows
    chi = char_poly(m)
    roots = rational_roots(chi)
    if square_free_part(chi).degree != len(roots):
        raise IrrationalEigenvalues(square_free_part(chi))
    jc = jordan_chevalley(m)
    s, nil = jc.semisimple, jc.nilpotent
    # Exp(N) is a finite sum since N^n = 0
    exp_n = RatMatrix.identity(n)
    term = RatMatrix.identity(n)
    for k in range(1, n):
        term = term @ nil * Fraction(1, k)
        exp_n = exp_n + term
    ident = RatMatrix.identity(n)
    out = [[ExpNumber() for _ in range(n)] for _ in range(n)]
    for lam in roots:
        proj = ident
        for mu in roots:
            if mu != lam:
                proj = proj @ (s - ident * mu) * (1 / (lam - mu))
        piece = proj @ exp_n
        for i in range(n):
            for j in range(n):
                if piece[i, j]:
                    out[i][j] = out[i][j] + ExpNumber.exp(lam, piece[i, j])
    return ExpMatrix(out)


def _as_float_matrix(m) -> np.ndarray:
    if isinstance(m, RatMatrix):
        return m.to_float()
    a = np.asarray(m, dtype=float)
    if a.ndim != 2:
        raise DimensionMismatch("expected a matrix")
    if not np.all(np.isfinite(a)):
        raise InvalidInput("matrix entries must be finite")
    return a


def exp_triangular(m, mode: str = EXACT):
    """``Exp(M)`` for upper triangular ``M``.

    Exact mode returns an :class:`ExpMatrix` in T+_n; numeric mode returns a
    float array computed by scaling and squaring.
    """
    if mode == EXACT:
        if not isinstance(m, RatMatrix):
            raise InvalidInput("exact mode needs a rational matrix")
        if not m.is_square() or not m.is_upper_triangular():
            raise NotTriangular("exp_triangular needs a square upper triangular matrix")
        return exp_exact(m)
    if mode != NUMERIC:
        raise InvalidInput(f"unknown mode {mode!r}")
    a = _as_float_matrix(m)
    if a.shape[0] != a.shape[1] or np.any(np.tril(a, -1) != 0):
        raise NotTriangular("exp_triangular needs a square upper triangular matrix")
    return np.triu(scipy.linalg.expm(a))


def one_parameter_subgroup(x: RatMatrix, t, mode: str = EXACT):
    """``Exp(t X)``."""
    if mode == EXACT:
        return exp_triangular(x * rat(t), EXACT)
    return exp_triangular(_as_float_matrix(x) * float(t), mode)


def _clusters(values: np.ndarray, rtol: float) -> list[float]:
    out: list[list[float]] = []
    for v in sorted(values):
        if out and abs(v - out[-1][-1]) <= rtol * max(1.0, abs(v)):
            out[-1].append(v)
        else:
            out.append([v])
    return [float(np.mean(c)) for c in out]


def _semisimple_part(a: np.ndarray, eigs: list[float], steps: int = 60) -> np.ndarray:
    n = a.shape[0]
    ident = np.eye(n)
    s = a.copy()
    for _ in range(steps):
        fs = ident.copy()
        for mu in eigs:
            fs = fs @ (s - mu * ident)
        if np.abs(fs).max() <= 1e-15 * max(1.0, np.abs(s).max()) ** len(eigs):
            break
        fps = np.zeros_like(a)
        for j in range(len(eigs)):
            term = ident.copy()
            for k, mu in enumerate(eigs):
                if k != j:
                    term = term @ (s - mu * ident)
            fps += term
        s = s - np.linalg.solve(fps, fs)
    return s


def log_triangular_positive(t, tol: float = DEFAULT_LOG_TOL) -> np.ndarray:
    """Inverse of ``Exp`` on T+_n: upper triangular ``X`` with ``Exp(X) = T``.

    ``T = T_s T_u`` with commuting semisimple and unipotent factors; the log of
    ``T_s`` comes from scalar logs on spectral projectors, the log of
    ``T_u`` from the terminating series in ``T_u - I``.
    """
    a = _as_float_matrix(t)
    n = a.shape[0]
    if a.shape != (n, n):
        raise NotTriangular("log needs a square matrix")
    scale = max(1.0, float(np.abs(a).max()) if a.size else 1.0)
    if np.any(np.abs(np.tril(a, -1)) > 1e-13 * scale):
        raise NotTriangular("log_triangular_positive needs an upper triangular matrix")
    a = np.triu(a)
    diag = np.diag(a)
    if np.any(diag <= 0):
        raise NonPositiveDiagonal(f"diagonal {diag.tolist()} is not positive")
    if n == 0:
        return a.copy()
    eigs = _clusters(diag, 1e-12)
    s = _semisimple_part(a, eigs)
    ident = np.eye(n)
    log_s = np.zeros((n, n))
    for j, lam in enumerate(eigs):
        proj = ident.copy()
        for k, mu in enumerate(eigs):
            if k != j:
                proj = proj @ (s - mu * ident) / (lam - mu)
        log_s += math.log(lam) * proj
    u = np.linalg.solve(s, a) - ident
    log_u = np.zeros((n, n))
    power = ident.copy()
    for k in range(1, n):
        power = power @ u
        log_u += ((-1) ** (k + 1) / k) * power
    x = np.triu(log_s + log_u)
    err = float(np.linalg.norm(scipy.linalg.expm(x) - a, np.inf))
    if err > tol:
        raise NumericCertificateFailed("log_triangular_positive: |Exp(X) - T|", err, tol)
    return x


def float_matrix_to_json(a: np.ndarray) -> list[list[float]]:
    return np.asarray(a, dtype=float).tolist()


__all__ = [
    "AD_CENTERLESS", "AD_PLUS_CHARACTERS", "NILPOTENT_PBW", "SPLIT_OVER_NILRADICAL",
    "Representation", "JCDecomposition", "ExpMatrix", "joint_kernel", "triangularize_ad",
    "faithful_triangular_rep", "nilpotent_pbw_rep", "split_over_nilradical_rep",
    "jordan_chevalley", "exp_exact", "exp_triangular", "one_parameter_subgroup",
    "log_triangular_positive", "float_matrix_to_json", "format_rational",
]
