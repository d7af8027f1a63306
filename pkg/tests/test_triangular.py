import math
from fractions import Fraction

import numpy as np
import pytest
import scipy.linalg
import sympy

import liedef.triangular as tri
from liedef.errors import (IrrationalEigenvalues, NeedsIrrationalEigenvalue, NonPositiveDiagonal,
                           NotAFlag, NotCompletelySolvable, NotTriangular, NumericFlag,
                           SizeLimitExceeded)
from liedef.exact import ExpNumber, RatMatrix, char_poly, square_free_part
from liedef.groups import affine_line, e2tilde, heisenberg, sqrt2_algebra
from liedef.liealg import LieAlgebra, Subspace, abelian, semidirect_sum
from liedef.samples import random_invertible, random_matrix, random_triangular_float, random_upper
from liedef.solvclass import COMPLETELY_SOLVABLE, NUMERIC, Flag, complete_flag, is_completely_solvable
from liedef.triangular import (AD_CENTERLESS, AD_PLUS_CHARACTERS, NILPOTENT_PBW,
                               SPLIT_OVER_NILRADICAL, ExpMatrix, exp_exact, exp_triangular,
                               faithful_triangular_rep, jordan_chevalley, log_triangular_positive,
                               one_parameter_subgroup, triangularize_ad)


def certified(rep):
    return rep.is_homomorphism() and rep.is_faithful and rep.is_triangular


# -- triangularize_ad ----------------------------------------------------------

def test_triangularize_affine():
    g = affine_line()
    flag = Flag((g.zero(), Subspace(2, [(0, 1)]), g.full()))
    rep = triangularize_ad(g, flag)
    assert rep.is_triangular and rep.is_faithful and rep.is_homomorphism()
    assert rep.target_dim == 2


def test_triangularize_heisenberg_not_faithful():
    g = heisenberg()
    rep = triangularize_ad(g, complete_flag(g))
    assert rep.is_triangular and rep.is_homomorphism() and not rep.is_faithful
    assert rep.matrices[2].is_zero()


def test_triangularize_abelian():
    rep = triangularize_ad(abelian(2), complete_flag(abelian(2)))
    assert all(m.is_zero() for m in rep.matrices) and not rep.is_faithful


def test_triangularize_rejects():
    g = affine_line()
    with pytest.raises(NotAFlag):
        triangularize_ad(g, Flag((g.zero(), Subspace(2, [(1, 0)]), g.full())))
    with pytest.raises(NumericFlag):
        triangularize_ad(g, complete_flag(g, NUMERIC))


# -- faithful representations --------------------------------------------------

def test_tier_examples():
    rep = faithful_triangular_rep(affine_line())
    assert rep.tier == AD_CENTERLESS and rep.target_dim == 2 and certified(rep)
    rep = faithful_triangular_rep(heisenberg())
    assert rep.tier == NILPOTENT_PBW and rep.target_dim == math.comb(3 + 2, 2) == 10
    assert certified(rep)
    rep = faithful_triangular_rep(abelian(2))
    assert rep.tier == AD_PLUS_CHARACTERS and rep.target_dim == 2
    assert all(m == RatMatrix.diagonal(m.diagonal_entries()) for m in rep.matrices)
    assert certified(rep)


def test_split_over_nilradical_tier():
    g = semidirect_sum(heisenberg(), [RatMatrix.diagonal([1, -1, 0])], ["t"])
    rep = faithful_triangular_rep(g)
    assert rep.tier == SPLIT_OVER_NILRADICAL and certified(rep)


def test_class_three_nilpotent():
    # filiform: [x1, x2] = x3, [x1, x3] = x4
    g = LieAlgebra(4, None, {(0, 1): (0, 0, 1, 0), (0, 2): (0, 0, 0, 1)})
    rep = faithful_triangular_rep(g)
    assert rep.tier == NILPOTENT_PBW and certified(rep)


def test_all_strictly_upper_for_nilpotent():
    rep = faithful_triangular_rep(heisenberg())
    assert all(m.is_strictly_upper_triangular() for m in rep.matrices)


def test_rep_errors():
    with pytest.raises(NotCompletelySolvable):
        faithful_triangular_rep(e2tilde())
    with pytest.raises(NeedsIrrationalEigenvalue):
        faithful_triangular_rep(sqrt2_algebra())


def test_pbw_size_limit(monkeypatch):
    monkeypatch.setattr(tri, "PBW_SIZE_LIMIT", 5)
    with pytest.raises(SizeLimitExceeded):
        faithful_triangular_rep(heisenberg())


def test_random_reps(rng):
    from liedef.samples import random_solvable_algebra
    done = 0
    while done < 12:
        g = random_solvable_algebra(rng)
        if is_completely_solvable(g).kind != COMPLETELY_SOLVABLE:
            continue
        done += 1
        assert certified(faithful_triangular_rep(g))


def test_rep_json():
    js = faithful_triangular_rep(affine_line()).to_json()
    assert js["tier"] == AD_CENTERLESS and js["target_dim"] == 2
    assert js["is_faithful"] and js["is_triangular"] and js["is_homomorphism"]
    assert all(isinstance(x, str) for m in js["matrices"] for row in m for x in row)


# -- Jordan-Chevalley --------------------------------------------------------

def test_jc_examples():
    d = jordan_chevalley(RatMatrix([[1, 1], [0, 1]]))
    assert d.S == RatMatrix.identity(2) and d.N == RatMatrix([[0, 1], [0, 0]])
    m = RatMatrix.diagonal([1, 2, 2])
    assert jordan_chevalley(m).S == m and jordan_chevalley(m).N.is_zero()
    r = RatMatrix([[0, 1], [-1, 0]])
    assert jordan_chevalley(r).S == r and jordan_chevalley(r).N.is_zero()


def _jc_ok(m):
    d = jordan_chevalley(m)
    s, n = d.S, d.N
    return (s + n == m and s @ n == n @ s and (n ** m.rows).is_zero()
            and square_free_part(char_poly(m)).eval_matrix(s).is_zero()
            and d.poly.eval_matrix(m) == s)


def test_jc_invariants_random(rng):
    for _ in range(30):
        assert _jc_ok(random_matrix(rng, rng.randint(2, 5)))


def test_jc_matches_sympy_jordan_form(rng):
    # matrices with repeated rational eigenvalues, so N is usually nonzero
    for _ in range(8):
        n = rng.randint(2, 4)
        diag = [rng.choice([-1, 2]) for _ in range(n)]
        u = RatMatrix([[diag[i] if i == j else (rng.randint(-1, 1) if j > i else 0)
                        for j in range(n)] for i in range(n)])
        p = random_invertible(rng, n)
        m = p @ u @ p.inverse()
        sm = sympy.Matrix(n, n, [sympy.Rational(x.numerator, x.denominator)
                                 for row in m.entries for x in row])
        pj, jm = sm.jordan_form()
        s_oracle = pj * sympy.diag(*[jm[i, i] for i in range(n)]) * pj.inv()
        s = jordan_chevalley(m).S
        assert all(sympy.nsimplify(s_oracle[i, j]) == sympy.Rational(s[i, j].numerator, s[i, j].denominator)
                   for i in range(n) for j in range(n))


# -- exponential -------------------------------------------------------------

def test_exp_examples():
    n = RatMatrix([[0, 1], [0, 0]])
    assert exp_triangular(n) == RatMatrix([[1, 1], [0, 1]])
    d = exp_triangular(RatMatrix.diagonal([Fraction(1, 2), -3]))
    assert d[0, 0] == ExpNumber.exp(Fraction(1, 2)) and d[1, 1] == ExpNumber.exp(-3)
    assert d[0, 1].is_zero()
    j = exp_triangular(RatMatrix([[1, 1], [0, 1]]))
    e = ExpNumber.exp(1)
    assert j == ExpMatrix([[e, e], [0, e]])
    assert j.to_json()[0][1] == [["1", "1"]]


def test_exp_matches_expm(rng):
    for _ in range(20):
        x = random_upper(rng, rng.randint(1, 4))
        got = exp_triangular(x).to_float()
        want = scipy.linalg.expm(x.to_float())
        assert np.allclose(got, want, rtol=1e-12, atol=1e-12)


def test_exp_identities(rng):
    for _ in range(10):
        n = rng.randint(2, 4)
        x = random_triangular_float(rng, n)
        assert exp_exact(RatMatrix.zero(n)) == RatMatrix.identity(n)
        d = jordan_chevalley(x)
        assert exp_exact(x) == exp_exact(d.S) @ exp_exact(d.N)
        strict = x - RatMatrix.diagonal(x.diagonal_entries())
        partial = sum((strict ** k * Fraction(1, math.factorial(k)) for k in range(1, n)),
                      RatMatrix.identity(n))
        assert exp_exact(strict) == partial
        assert exp_exact(x).in_positive_triangular_group()


def test_exp_errors():
    with pytest.raises(NotTriangular):
        exp_triangular(RatMatrix([[1, 0], [1, 1]]))
    with pytest.raises(NotTriangular):
        exp_triangular(np.array([[1.0, 0.0], [1.0, 1.0]]), NUMERIC)
    with pytest.raises(IrrationalEigenvalues):
        exp_exact(RatMatrix([[0, 1], [2, 0]]))


def test_exp_json_roundtrip():
    e = exp_triangular(RatMatrix([[1, 2], [0, -1]]))
    assert ExpMatrix.from_json(e.to_json()) == e


# -- logarithm ---------------------------------------------------------------

def test_log_examples():
    assert np.array_equal(log_triangular_positive(np.eye(3)), np.zeros((3, 3)))
    x = log_triangular_positive(np.array([[1.0, 1.0], [0.0, 1.0]]))
    assert np.allclose(x, [[0, 1], [0, 0]], atol=1e-15)


def test_log_errors():
    with pytest.raises(NonPositiveDiagonal):
        log_triangular_positive(np.array([[1.0, 1.0], [0.0, -1.0]]))
    with pytest.raises(NotTriangular):
        log_triangular_positive(np.array([[1.0, 0.0], [0.5, 1.0]]))


def test_log_exp_roundtrip(rng):
    for _ in range(30):
        x = random_triangular_float(rng, rng.choice([3, 4])).to_float()
        back = log_triangular_positive(exp_triangular(x, NUMERIC))
        assert np.abs(back - x).max() <= 1e-9


def test_log_repeated_eigenvalues():
    x = np.array([[0.5, 1.0, -2.0], [0.0, 0.5, 1.5], [0.0, 0.0, 0.5]])
    back = log_triangular_positive(scipy.linalg.expm(x))
    assert np.abs(back - x).max() <= 1e-9


# -- one-parameter subgroups -------------------------------------------------

def test_one_parameter_examples():
    x = RatMatrix([[1, 1], [0, 1]])
    assert one_parameter_subgroup(x, 0) == RatMatrix.identity(2)
    e12 = RatMatrix([[0, 1], [0, 0]])
    assert one_parameter_subgroup(e12, 3) == RatMatrix([[1, 3], [0, 1]])
    s, t = 1, 2
    assert one_parameter_subgroup(x, s + t) == one_parameter_subgroup(x, s) @ one_parameter_subgroup(x, t)


def test_one_parameter_numeric():
    x = RatMatrix([[1, 1], [0, -1]])
    a = one_parameter_subgroup(x, 0.5, NUMERIC)
    assert np.allclose(a @ a, one_parameter_subgroup(x, 1.0, NUMERIC))
