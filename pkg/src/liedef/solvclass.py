"""Complete solvability: decision, sampling cross-check, flags, nilradical.

The decision runs on the characteristic polynomials of ``ad(x_i)`` for the
basis elements only.  The eigenvalues of ``ad(xi)`` are the values
``lambda_j(xi)`` of finitely many linear weights of the complexified
algebra, so real values on a basis force real weights everywhere.
:func:`sampled_eigenvalue_check` tests the same property on random elements
and is used as an independent oracle in the test suite.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (NeedsIrrationalEigenvalue, NoRealEigenvalue, NotCompletelySolvable,
                     NotSolvable, NumericCertificateFailed, InvalidInput)
from .exact import (Poly, RatMatrix, Vector, char_poly, format_rational, rational_roots,
                    real_root_count, square_free_part, vec_comb)
from .liealg import (LieAlgebra, Subspace, bracket_space, centralizer, derived_series,
                     killing_form, quotient)

log = logging.getLogger(__name__)

NOT_SOLVABLE = "NotSolvable"
SOLVABLE_NOT_COMPLETELY = "SolvableNotCompletely"
COMPLETELY_SOLVABLE = "CompletelySolvable"

EXACT = "exact"
NUMERIC = "numeric"

DEFAULT_NUMERIC_TOL = 1e-8


@dataclass(frozen=True)
class WeightEntry:
    index: int
    name: str
    char_poly: Poly
    square_free: Poly
    real_roots: int

    @property
    def real_rooted(self) -> bool:
        return self.real_roots == self.square_free.degree

    @property
    def nonreal_factor(self) -> Poly:
        """Square-free part with its rational linear factors divided out."""
        return self.square_free // Poly.from_roots(rational_roots(self.square_free))

    @property
    def deficit(self) -> int:
        return self.square_free.degree - self.real_roots

    def to_json(self) -> dict:
        return {"index": self.index, "name": self.name, "char_poly": self.char_poly.to_json(),
                "square_free": self.square_free.to_json(), "real_roots": self.real_roots,
                "real_rooted": self.real_rooted}


def weight_report(g: LieAlgebra) -> tuple[WeightEntry, ...]:
    out = []
    for i, m in enumerate(g.ad_basis):
        p = char_poly(m)
        sf = square_free_part(p)
        out.append(WeightEntry(i, g.basis_names[i], p, sf, real_root_count(sf)))
    return tuple(out)


@dataclass(frozen=True)
class SolvabilityVerdict:
    kind: str
    weights: tuple[WeightEntry, ...] = ()
    derived_term: Subspace | None = None
    witness_index: int | None = None
    flag: Flag | None = None

    @property
    def witness(self) -> WeightEntry | None:
        if self.witness_index is None:
            return None
        return self.weights[self.witness_index]

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == NOT_SOLVABLE:
            out["witness"] = {"derived_term": self.derived_term.to_json()}
        elif self.kind == SOLVABLE_NOT_COMPLETELY:
            w = self.witness
            out["witness"] = {"basis": w.name, "index": w.index,
                              "char_poly": w.char_poly.to_json(),
                              "factor": w.nonreal_factor.to_json(),
                              "square_free": w.square_free.to_json(),
                              "real_root_deficit": w.deficit}
        if self.weights:
            out["weights"] = [w.to_json() for w in self.weights]
        if self.flag is not None:
            out["flag"] = self.flag.to_json()
        return out


def is_completely_solvable(g: LieAlgebra, with_flag: bool = False) -> SolvabilityVerdict:
    series = derived_series(g)
    if not series[-1].is_zero():
        return SolvabilityVerdict(NOT_SOLVABLE, derived_term=series[-1])
    weights = weight_report(g)
    for w in weights:
        if not w.real_rooted:
            return SolvabilityVerdict(SOLVABLE_NOT_COMPLETELY, weights, witness_index=w.index)
    flag = None
    if with_flag:
        try:
            flag = complete_flag(g, EXACT)
        except NeedsIrrationalEigenvalue:
            flag = complete_flag(g, NUMERIC)
    return SolvabilityVerdict(COMPLETELY_SOLVABLE, weights, flag=flag)


def is_solvable_verdict(v: SolvabilityVerdict) -> bool:
    return v.kind != NOT_SOLVABLE


# ---------------------------------------------------------------------------
# randomized reading of the criterion

SAMPLE_BOX = 10
SAMPLE_DENOMINATOR = 7


@dataclass(frozen=True)
class SampleResult:
    ok: bool
    samples: int
    seed: int
    witness: Vector | None = None
    witness_poly: Poly | None = None
    deficit: int = 0

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"ok": self.ok, "samples": self.samples, "seed": self.seed}
        if self.witness is not None:
            out["witness"] = [format_rational(x) for x in self.witness]
            out["char_poly"] = self.witness_poly.to_json()
            out["real_root_deficit"] = self.deficit
        return out


def sampled_eigenvalue_check(g: LieAlgebra, samples: int = 200, seed: int = 0) -> SampleResult:
    """Check real spectra of ``ad(xi)`` on random elements.

    Coordinates are drawn from ``{-10..10}/7`` with ``random.Random(seed)``.
    The witness returned on failure is the sample with the largest deficit
    of real roots (first one on ties).
    """
    if derived_series(g)[-1].dim:
        raise NotSolvable(f"{g!r} is not solvable")
    rng = random.Random(seed)
    worst = None
    for _ in range(samples):
        xi = tuple(Fraction(rng.randint(-SAMPLE_BOX, SAMPLE_BOX), SAMPLE_DENOMINATOR)
                   for _ in range(g.dim))
        p = char_poly(g.ad(xi))
        sf = square_free_part(p)
        deficit = sf.degree - real_root_count(sf)
        if deficit and (worst is None or deficit > worst[2]):
            worst = (xi, p, deficit)
    if worst is None:
        return SampleResult(True, samples, seed)
    return SampleResult(False, samples, seed, worst[0], worst[1], worst[2])


# ---------------------------------------------------------------------------
# flags

@dataclass(frozen=True)
class Flag:
    """Chain ``0 = g_0 < g_1 < ... < g_n = g`` of ideals with ``dim g_i = i``.

    Exact flags hold :class:`Subspace` members.  Numeric flags hold float
    arrays whose rows are an orthonormal basis of each member, plus the
    certified ideal residual of every member.
    """

    subspaces: tuple
    mode: str = EXACT
    tol: float | None = None
    residuals: tuple[float, ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.subspaces) - 1

    def adapted_basis(self) -> list[Vector]:
        """Vectors ``b_i`` in ``g_i`` but not ``g_{i-1}`` (exact flags only)."""
        if self.mode != EXACT:
            raise InvalidInput("adapted rational basis needs an exact flag")
        out = []
        for lower, upper in zip(self.subspaces, self.subspaces[1:]):
            out.append(next(v for v in upper.basis if not lower.contains(v)))
        return out

    def to_json(self) -> dict:
        if self.mode == EXACT:
            members = [s.to_json() for s in self.subspaces]
        else:
            members = [np.asarray(s).tolist() for s in self.subspaces]
        out = {"mode": self.mode, "members": members}
        if self.mode == NUMERIC:
            out["tol"] = self.tol
            out["residuals"] = list(self.residuals)
            out["max_residual"] = max(self.residuals, default=0.0)
        return out


def _restrict(ops: Sequence[RatMatrix], space: Subspace) -> list[RatMatrix]:
    """Matrices of invariant operators restricted to ``space`` (echelon basis coords)."""
    out = []
    for a in ops:
        cols = [space.coordinates(a.apply(v)) for v in space.basis]
        out.append(RatMatrix.from_columns(cols) if cols else RatMatrix.zero(0))
    return out


def common_eigenvector(ops: Sequence[RatMatrix], level: int | None = None) -> Vector:
    """A common eigenvector with rational eigenvalues of commuting matrices.

    Eigenvalues are fixed operator by operator, each time taking the first
    rational root in (denominator, numerator) order and shrinking to the
    eigenspace.  The first echelon vector of the final space is returned.
    Raises :class:`NoRealEigenvalue` if an operator has no real eigenvalue on
    the current space and :class:`NeedsIrrationalEigenvalue` if its real
    eigenvalues are all irrational.
    """
    if not ops:
        raise InvalidInput("no operators")
    r = ops[0].rows
    w = Subspace.full(r)
    for i, a in enumerate(ops):
        (rest,) = _restrict([a], w)
        if rest.rows and rest == RatMatrix.identity(rest.rows) * rest[0, 0]:
            continue
        p = char_poly(rest)
        roots = rational_roots(p)
        if not roots:
            sf = square_free_part(p)
            if real_root_count(sf) == 0:
                raise NoRealEigenvalue(sf, level, i)
            raise NeedsIrrationalEigenvalue(sf, level)
        lam = roots[0]
        ker = (rest - RatMatrix.identity(rest.rows) * lam).kernel()
        w = Subspace(r, [vec_comb(c, w.basis, r) for c in ker])
    return w.basis[0]


def _one_dim_ideal(h: LieAlgebra, level: int | None = None) -> Vector:
    d = bracket_space(h, h.full(), h.full())
    c = centralizer(h, d)
    # g acts on C through g/[g,g], so the restricted operators commute
    ops = _restrict(h.ad_basis, c)
    coords = common_eigenvector(ops, level)
    return vec_comb(coords, c.basis, h.dim)


def search_flag(g: LieAlgebra, mode: str = EXACT, tol: float = DEFAULT_NUMERIC_TOL) -> Flag:
    """Build a complete flag without checking complete solvability first.

    Exact failures raise :class:`NoRealEigenvalue` (a level with no
    invariant real line for the chosen eigenvalues) or
    :class:`NeedsIrrationalEigenvalue`.
    """
    if mode == NUMERIC:
        return _numeric_flag(g, tol)
    if mode != EXACT:
        raise InvalidInput(f"unknown flag mode {mode!r}")
    members = [g.zero()]
    for level in range(g.dim):
        q = quotient(g, members[-1])
        v = _one_dim_ideal(q.algebra, level)
        members.append(q.preimage(Subspace(q.algebra.dim, [v])))
    return Flag(tuple(members), EXACT)


def complete_flag(g: LieAlgebra, mode: str = EXACT, tol: float = DEFAULT_NUMERIC_TOL) -> Flag:
    verdict = is_completely_solvable(g)
    if verdict.kind != COMPLETELY_SOLVABLE:
        raise NotCompletelySolvable(f"{g!r} is {verdict.kind}")
    return search_flag(g, mode, tol)


def check_flag(g: LieAlgebra, flag: Flag) -> bool:
    """Re-verify a flag: dims ``0..n``, nested, each member an ideal."""
    if flag.mode == EXACT:
        subs = flag.subspaces
        if [s.dim for s in subs] != list(range(g.dim + 1)):
            return False
        if any(not a.issubset(b) for a, b in zip(subs, subs[1:])):
            return False
        full = g.full()
        return all(bracket_space(g, full, s).issubset(s) for s in subs)
    res = numeric_flag_residuals(g, flag.subspaces)
    dims = [np.asarray(s).reshape(-1, g.dim).shape[0] for s in flag.subspaces]
    return dims == list(range(g.dim + 1)) and max(res, default=0.0) <= flag.tol


def invariant_refinement(ops: Sequence[RatMatrix], lower: Subspace, upper: Subspace) -> list[Subspace]:
    """Refine ``lower < upper`` to a complete chain of subspaces invariant under ``ops``.

    The operators must preserve both subspaces and induce commuting maps on
    ``upper / lower``.
    """
    n = lower.ambient_dim
    chain = [lower]
    while chain[-1].dim < upper.dim:
        cur = chain[-1]
        reps = Subspace(n, [cur.reduce(v) for v in upper.basis])
        induced = []
        for a in ops:
            cols = [reps.coordinates(cur.reduce(a.apply(u))) for u in reps.basis]
            induced.append(RatMatrix.from_columns(cols))
        coords = common_eigenvector(induced, cur.dim)
        chain.append(cur + Subspace(n, [vec_comb(coords, reps.basis, n)]))
    return chain


# ---------------------------------------------------------------------------
# numeric flags

def structure_tensor(g: LieAlgebra) -> np.ndarray:
    """``c[i, j, k]`` with ``[x_i, x_j] = sum_k c[i, j, k] x_k``, both orders filled."""
    c = np.zeros((g.dim, g.dim, g.dim))
    for (i, j), v in g.structure_constants.items():
        fv = np.array([float(x) for x in v])
        c[i, j] = fv
        c[j, i] = -fv
    return c


def _orth(vectors: np.ndarray, rtol: float) -> np.ndarray:
    """Orthonormal columns spanning the columns of ``vectors`` (numerical rank)."""
    if vectors.size == 0:
        return np.zeros((vectors.shape[0], 0))
    u, s, _ = np.linalg.svd(vectors, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return np.zeros((vectors.shape[0], 0))
    return u[:, s > rtol * max(1.0, s[0])]


def _null(m: np.ndarray, rtol: float) -> np.ndarray:
    ncols = m.shape[1]
    if m.size == 0:
        return np.eye(ncols)
    _, s, vh = np.linalg.svd(m)
    scale = max(1.0, s[0] if s.size else 0.0)
    rank = int(np.sum(s > rtol * scale))
    return vh[rank:].T.conj()


def _cluster_mean(values: np.ndarray, target: complex, tol: float) -> complex:
    close = values[np.abs(values - target) <= tol]
    return complex(close.mean())


def numeric_flag_residuals(g: LieAlgebra, members) -> list[float]:
    ads = [m.to_float() for m in g.ad_basis]
    out = []
    for basis in members:
        b = np.asarray(basis, dtype=float).reshape(-1, g.dim)
        if b.shape[0] in (0, g.dim):
            out.append(0.0)
            continue
        q = _orth(b.T, 1e-12)
        proj = np.eye(g.dim) - q @ q.T
        out.append(float(max(np.abs(proj @ a @ q).max() for a in ads)))
    return out


def _numeric_flag(g: LieAlgebra, tol: float) -> Flag:
    n = g.dim
    c = structure_tensor(g)
    rank_tol = 1e-9
    cluster_tol = 1e-4
    imag_tol = 1e-6
    q = np.zeros((n, 0))
    members = [q.T.copy()]
    for level in range(n):
        p = _null(q.T, 1e-12) if q.shape[1] else np.eye(n)
        m = p.shape[1]
        cq = np.einsum("ia,jb,ijk,kc->abc", p, p, c, p)
        ad = [cq[a].T for a in range(m)]  # ad[a][:, b] = [p_a, p_b]
        derived = _orth(cq.reshape(m * m, m).T, rank_tol)
        if derived.shape[1]:
            stack = np.vstack([np.column_stack([ad[a] @ d for a in range(m)])
                               for d in derived.T])
            cen = _null(stack, rank_tol)
        else:
            cen = np.eye(m)
        w = cen
        for i, a in enumerate(ad):
            r = w.T @ a @ w
            if w.shape[1] == 1:
                continue
            ev = np.linalg.eigvals(r)
            scale = max(1.0, float(np.abs(r).max()))
            real = ev[np.abs(ev.imag) <= imag_tol * scale]
            if real.size == 0:
                raise NoRealEigenvalue(None, level, i, eigenvalues=ev.tolist())
            lam = _cluster_mean(ev, np.sort(real.real)[0], cluster_tol * scale).real
            ker = _null(r - lam * np.eye(r.shape[0]), 1e-9)
            if ker.shape[1] == 0:
                _, _, vh = np.linalg.svd(r - lam * np.eye(r.shape[0]))
                ker = vh[-1:].T
            w = _orth(w @ ker.real, 1e-12)
        v = p @ w[:, 0]
        q = _orth(np.column_stack([q, v]), 1e-12)
        members.append(q.T.copy())
    residuals = numeric_flag_residuals(g, members)
    for level, res in enumerate(residuals):
        if res > tol:
            raise NumericCertificateFailed(f"numeric flag member {level}", res, tol)
    log.debug("numeric flag residuals %s", residuals)
    return Flag(tuple(members), NUMERIC, tol, tuple(residuals))


# ---------------------------------------------------------------------------
# nilradical

def nilradical_completely_solvable(g: LieAlgebra) -> Subspace:
    """Radical of the Killing form; equals the nilradical for completely solvable ``g``.

    With all weights real, ``K(x, x)`` is a sum of squares of weight values,
    so it vanishes exactly on the common kernel of the weights.
    """
    verdict = is_completely_solvable(g)
    if verdict.kind != COMPLETELY_SOLVABLE:
        raise NotCompletelySolvable(
            f"Killing radical is only the nilradical for completely solvable algebras; "
            f"got {verdict.kind}")
    return Subspace(g.dim, killing_form(g).kernel())


__all__ = [
    "NOT_SOLVABLE", "SOLVABLE_NOT_COMPLETELY", "COMPLETELY_SOLVABLE", "EXACT", "NUMERIC",
    "WeightEntry", "SolvabilityVerdict", "SampleResult", "Flag", "weight_report",
    "is_completely_solvable", "sampled_eigenvalue_check", "common_eigenvector", "search_flag",
    "complete_flag", "check_flag", "invariant_refinement", "numeric_flag_residuals",
    "nilradical_completely_solvable", "structure_tensor",
]
