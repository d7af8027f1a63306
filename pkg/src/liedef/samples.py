"""Seeded random inputs: rational matrices, polynomials and small solvable algebras."""

from __future__ import annotations

import random
from fractions import Fraction

from .exact import Poly, RatMatrix
from .liealg import LieAlgebra, abelian, change_basis, semidirect_sum
from .groups import heisenberg


def random_rational(rng: random.Random, box: int = 3, den: int = 2) -> Fraction:
    return Fraction(rng.randint(-box * den, box * den), rng.randint(1, den))


def random_matrix(rng: random.Random, n: int, box: int = 3, den: int = 2) -> RatMatrix:
    return RatMatrix([[random_rational(rng, box, den) for _ in range(n)] for _ in range(n)])


def random_invertible(rng: random.Random, n: int, box: int = 2) -> RatMatrix:
    while True:
        p = RatMatrix([[rng.randint(-box, box) for _ in range(n)] for _ in range(n)])
        if p.rank() == n:
            return p


def random_upper(rng: random.Random, n: int, box: int = 2, den: int = 2) -> RatMatrix:
    return RatMatrix([[random_rational(rng, box, den) if j >= i else 0 for j in range(n)]
                      for i in range(n)])


def random_triangular_float(rng: random.Random, n: int, quarter_steps: int = 8) -> RatMatrix:
    """Upper triangular matrix with entries ``k/4``, ``|k| <= quarter_steps``."""
    return RatMatrix([[Fraction(rng.randint(-quarter_steps, quarter_steps), 4) if j >= i else 0
                       for j in range(n)] for i in range(n)])


def planted_poly(rng: random.Random, max_degree: int = 6):
    """Product of linear factors with planted rational roots and of ``T^2 + c`` factors.

    Returns ``(poly, distinct_real_roots)``.
    """
    deg = rng.randint(1, max_degree)
    p = Poly([rng.choice([1, 2, -3])])
    roots: set[Fraction] = set()
    d = 0
    while d < deg:
        if deg - d >= 2 and rng.random() < 0.3:
            p = p * Poly([Fraction(rng.randint(1, 9), rng.randint(1, 4)), 0, 1])
            d += 2
        else:
            r = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            roots.add(r)
            p = p * Poly([-r, 1])
            d += 1
    return p, len(roots)


def _mixing_block(rng: random.Random, n: int, rotation: bool) -> RatMatrix:
    rows = [[0] * n for _ in range(n)]
    start = 0
    if rotation and n >= 2:
        r = Fraction(rng.randint(1, 3), rng.randint(1, 2))
        s = Fraction(rng.randint(-2, 2), 2)
        rows[0][:2] = [s, r]
        rows[1][:2] = [-r, s]
        start = 2
    for i in range(start, n):
        rows[i][i] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    for i in range(n):
        for j in range(max(i + 1, start), n):
            rows[i][j] = rng.randint(-1, 1)
    return RatMatrix(rows)


def _poly_in(rng: random.Random, m: RatMatrix) -> RatMatrix:
    coeffs = [Fraction(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(rng.randint(1, 3))]
    if all(c == 0 for c in coeffs[1:]):
        coeffs = coeffs[:1] + [Fraction(1)]
    return Poly(coeffs).eval_matrix(m)


def random_solvable_algebra(rng: random.Random, max_dim: int = 5) -> LieAlgebra:
    """A random solvable algebra of dimension at most ``max_dim``.

    Abelian ideals extended by commuting derivations, Heisenberg extended by a
    derivation, or a filiform nilpotent algebra; rotation blocks make about half
    of them fail complete solvability.  A random rational change of basis hides
    the construction.
    """
    kind = rng.choice(["abelian", "abelian", "heisenberg", "heisenberg", "filiform"])
    rotation = rng.random() < 0.5
    if kind == "abelian" or max_dim < 4:
        a = rng.randint(2, max(2, min(4, max_dim - 1)))
        k = rng.randint(1, max(1, min(2, max_dim - a)))
        p = random_invertible(rng, a)
        base = p @ _mixing_block(rng, a, rotation) @ p.inverse()
        ders = [_poly_in(rng, base) for _ in range(k)]
        g = semidirect_sum(abelian(a), ders, [f"t{j + 1}" for j in range(k)])
    elif kind == "heisenberg":
        h = heisenberg()
        a2 = _mixing_block(rng, 2, rotation)
        if rng.random() < 0.5:
            p = random_invertible(rng, 2)
            a2 = p @ a2 @ p.inverse()
        extra = max_dim >= 5 and rng.random() < 0.4
        c1, c2 = (0, 0) if extra else (rng.randint(-1, 1), rng.randint(-1, 1))
        d = RatMatrix([[a2[0, 0], a2[0, 1], 0], [a2[1, 0], a2[1, 1], 0], [c1, c2, a2.trace()]])
        ders = [d]
        if extra:
            # commutes with d because it is scalar on span(x, y)
            ders.append(RatMatrix.diagonal([1, 1, 2]))
        g = semidirect_sum(h, ders, [f"t{j + 1}" for j in range(len(ders))])
    else:
        n = rng.randint(4, max_dim)
        consts = {(0, j): tuple(1 if k == j + 1 else 0 for k in range(n)) for j in range(1, n - 1)}
        g = LieAlgebra(n, None, consts)
    p = random_invertible(rng, g.dim)
    return change_basis(g, p, [f"b{i + 1}" for i in range(g.dim)])


__all__ = [
    "random_rational", "random_matrix", "random_invertible", "random_upper",
    "random_triangular_float", "planted_poly", "random_solvable_algebra",
]
