from fractions import Fraction

import numpy as np
import pytest

from liedef.errors import (NeedsIrrationalEigenvalue, NoRealEigenvalue, NotCompletelySolvable,
                           NotSolvable)
from liedef.exact import T
from liedef.groups import affine_line, e2tilde, heisenberg, sl2, sqrt2_algebra, upper_triangular
from liedef.liealg import (Subspace, abelian, bracket_space, change_basis, is_ideal, is_nilpotent,
                           quotient)
from liedef.samples import random_invertible, random_solvable_algebra
from liedef.solvclass import (COMPLETELY_SOLVABLE, EXACT, NOT_SOLVABLE, NUMERIC,
                              SOLVABLE_NOT_COMPLETELY, check_flag, complete_flag,
                              is_completely_solvable, nilradical_completely_solvable,
                              sampled_eigenvalue_check, search_flag)


def test_verdict_examples():
    assert is_completely_solvable(upper_triangular(2)).kind == COMPLETELY_SOLVABLE
    v = is_completely_solvable(e2tilde())
    assert v.kind == SOLVABLE_NOT_COMPLETELY
    assert v.witness.name == "X"
    assert v.witness.char_poly == T ** 3 + T
    assert v.witness.square_free == T ** 3 + T
    assert v.witness.deficit == 2
    assert (v.witness.square_free % (T ** 2 + 1)).is_zero()
    v = is_completely_solvable(sl2())
    assert v.kind == NOT_SOLVABLE and v.derived_term.dim == 3


def test_witness_json():
    js = is_completely_solvable(e2tilde()).to_json()
    assert js["witness"]["basis"] == "X"
    assert js["witness"]["factor"] == ["1", "0", "1"]


def test_sampling_examples():
    assert sampled_eigenvalue_check(heisenberg(), 200, 0).ok
    assert sampled_eigenvalue_check(abelian(3), 10, 5).ok
    r = sampled_eigenvalue_check(e2tilde(), 200, 3)
    assert not r.ok and r.witness[2] != 0
    with pytest.raises(NotSolvable):
        sampled_eigenvalue_check(sl2(), 10, 0)


def test_heisenberg_flag():
    g = heisenberg()
    f = complete_flag(g, EXACT)
    assert check_flag(g, f)
    assert f.subspaces[1] == Subspace(3, [(0, 0, 1)])
    # tie-break picks the first echelon vector of the quotient, x
    assert f.subspaces[2] == Subspace(3, [(1, 0, 0), (0, 0, 1)])


def test_abelian_flag():
    f = complete_flag(abelian(2), EXACT)
    assert f.subspaces[1] == Subspace(2, [(1, 0)])


def test_sqrt2_flag():
    g = sqrt2_algebra()
    with pytest.raises(NeedsIrrationalEigenvalue) as info:
        complete_flag(g, EXACT)
    assert info.value.poly == T ** 2 - 2
    f = complete_flag(g, NUMERIC, 1e-8)
    assert max(f.residuals) <= 1e-9
    assert check_flag(g, f)
    line = np.asarray(f.subspaces[1])[0]
    # ad(x) on span(e1, e2) is [[0, 2], [1, 0]]; eigenlines are (+-sqrt2, 1)
    assert abs(line[0]) < 1e-12
    assert abs(abs(line[1] / line[2]) - np.sqrt(2)) < 1e-9


def test_flag_failure_certificates():
    with pytest.raises(NotCompletelySolvable):
        complete_flag(e2tilde())
    with pytest.raises(NoRealEigenvalue) as info:
        search_flag(e2tilde(), EXACT)
    assert info.value.poly == T ** 2 + 1
    with pytest.raises(NoRealEigenvalue):
        search_flag(e2tilde(), NUMERIC)


def test_nilradical_examples():
    h = heisenberg()
    assert nilradical_completely_solvable(h) == h.full()
    assert nilradical_completely_solvable(affine_line()) == Subspace(2, [(0, 1)])
    t2 = upper_triangular(2)
    e11, e22, e12 = (t2.basis_vector(t2.index(n)) for n in ("E11", "E22", "E12"))
    expect = Subspace(3, [e12, tuple(a + b for a, b in zip(e11, e22))])
    assert nilradical_completely_solvable(t2) == expect
    with pytest.raises(NotCompletelySolvable):
        nilradical_completely_solvable(e2tilde())


def _nilpotent_subspace(g, s: Subspace) -> bool:
    cur = s
    for _ in range(g.dim + 1):
        if cur.is_zero():
            return True
        cur = bracket_space(g, s, cur)
    return cur.is_zero()


def test_nilradical_properties(rng):
    seen = 0
    while seen < 12:
        g = random_solvable_algebra(rng)
        if is_completely_solvable(g).kind != COMPLETELY_SOLVABLE:
            continue
        seen += 1
        n = nilradical_completely_solvable(g)
        assert is_ideal(g, n)
        assert _nilpotent_subspace(g, n)
        assert bracket_space(g, g.full(), g.full()).issubset(n)


def test_random_agreement_and_flags(rng):
    for k in range(15):
        g = random_solvable_algebra(rng)
        v = is_completely_solvable(g)
        assert sampled_eigenvalue_check(g, 200, k).ok == (v.kind == COMPLETELY_SOLVABLE)
        if v.kind == COMPLETELY_SOLVABLE:
            f = complete_flag(g, EXACT)
            assert check_flag(g, f)
            # quotients by flag members stay completely solvable
            for member in f.subspaces[1:-1]:
                assert is_completely_solvable(quotient(g, member).algebra).kind == COMPLETELY_SOLVABLE
        else:
            with pytest.raises(NoRealEigenvalue):
                search_flag(g, EXACT)


@pytest.mark.parametrize("name", ["heisenberg", "e2tilde", "sqrt2", "t3", "sl2"])
def test_basis_change_invariance(name, payloads, rng):
    g = payloads[name]
    kind = is_completely_solvable(g).kind
    for _ in range(5):
        g2 = change_basis(g, random_invertible(rng, g.dim))
        assert is_completely_solvable(g2).kind == kind


def test_numeric_flag_matches_exact_dimensions(payloads):
    for name in ("heisenberg", "t3", "affine"):
        g = payloads[name]
        f = complete_flag(g, NUMERIC)
        assert [np.asarray(s).reshape(-1, g.dim).shape[0] for s in f.subspaces] == list(range(g.dim + 1))
        assert max(f.residuals) <= 1e-8
