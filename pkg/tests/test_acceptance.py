"""The seven acceptance criteria, each recorded as one pass/fail line."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from liedef.errors import NeedsIrrationalEigenvalue, NoRealEigenvalue
from liedef.exact import Poly, RatMatrix, char_poly, real_root_count, square_free_part
from liedef.groups import (DEFINABLE, NOT_DEFINABLE, ROTATION, classify_group, e2tilde_group,
                           r2_so2)
from liedef.liealg import abelian, semidirect_sum
from liedef.samples import (planted_poly, random_invertible, random_matrix,
                            random_solvable_algebra, random_triangular_float)
from liedef.solvclass import (COMPLETELY_SOLVABLE, EXACT, NOT_SOLVABLE, NUMERIC,
                              SOLVABLE_NOT_COMPLETELY, check_flag, is_completely_solvable,
                              sampled_eigenvalue_check, search_flag)
from liedef.triangular import (NILPOTENT_PBW, exp_exact, exp_triangular,
                               faithful_triangular_rep, jordan_chevalley,
                               log_triangular_positive)


def record(k: int, ok: bool, detail: str) -> None:
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[k] = line
    print(line)
    assert ok, line


def flag_exists(g) -> bool:
    try:
        flag = search_flag(g, EXACT)
    except NoRealEigenvalue:
        return False
    except NeedsIrrationalEigenvalue:
        flag = search_flag(g, NUMERIC)
    return check_flag(g, flag)


def test_criterion_1_compact_quotient_example():
    g = semidirect_sum(abelian(2, names=["E1", "E2"]), [ROTATION], ["X"])
    v = is_completely_solvable(g)
    w = v.witness
    alg_ok = v.kind == SOLVABLE_NOT_COMPLETELY and w.nonreal_factor == Poly([1, 0, 1])
    sc = classify_group(e2tilde_group()).kind
    compact = classify_group(r2_so2()).kind
    ok = alg_ok and sc == NOT_DEFINABLE and compact == DEFINABLE
    record(1, ok, f"e2tilde {v.kind} witness ad({w.name}) factor {w.nonreal_factor}; "
                  f"simply connected {sc}; R^2 x| SO(2) {compact}")


def test_criterion_2_three_criteria_agree(entries):
    rng = random.Random(2024)
    algebras = [(e.name, e.algebra) for e in entries]
    algebras += [(f"random{k}", random_solvable_algebra(rng, 5)) for k in range(60)]
    bad, checked, complete = [], 0, 0
    for k, (name, g) in enumerate(algebras):
        v = is_completely_solvable(g)
        if v.kind == NOT_SOLVABLE:
            continue
        checked += 1
        basis = v.kind == COMPLETELY_SOLVABLE
        complete += basis
        sampled = sampled_eigenvalue_check(g, 200, seed=k).ok
        flag = flag_exists(g)
        if not basis == sampled == flag:
            bad.append(f"{name}: basis={basis} sampled={sampled} flag={flag}")
    record(2, not bad and checked >= 60,
           f"{checked} solvable algebras ({complete} completely solvable), "
           f"{len(bad)} disagreements {bad[:3]}")


def test_criterion_3_triangular_certificates(entries):
    built, skipped, bad = [], [], []
    for e in entries:
        g = e.algebra
        if is_completely_solvable(g).kind != COMPLETELY_SOLVABLE:
            continue
        try:
            rep = faithful_triangular_rep(g)
        except NeedsIrrationalEigenvalue as exc:
            skipped.append((e.name, str(exc.poly)))
            continue
        if not (rep.is_homomorphism() and rep.is_faithful and rep.is_triangular):
            bad.append(e.name)
        built.append((e.name, rep.tier, rep.target_dim))
    heis = dict((n, (t, d)) for n, t, d in built)["heisenberg"]
    ok = (not bad and heis == (NILPOTENT_PBW, math.comb(5, 2))
          and [n for n, _ in skipped] == ["sqrt2"])
    record(3, ok, f"{len(built)} certified representations, heisenberg {heis[0]} dim {heis[1]}; "
                  f"no exact flag (NeedsIrrationalEigenvalue): {skipped}")


def test_criterion_4_exp_log():
    rng = random.Random(4)
    worst = 0.0
    for k in range(100):
        x = random_triangular_float(rng, 3 if k % 2 else 4).to_float()
        back = log_triangular_positive(exp_triangular(x, NUMERIC))
        worst = max(worst, float(np.abs(back - x).max()))
    ident = True
    for k in range(20):
        n = rng.randint(2, 4)
        x = random_triangular_float(rng, n)
        ident &= exp_exact(RatMatrix.zero(n)) == RatMatrix.identity(n)
        strict = x - RatMatrix.diagonal(x.diagonal_entries())
        finite = sum((strict ** j * Fraction(1, math.factorial(j)) for j in range(1, n)),
                     RatMatrix.identity(n))
        ident &= exp_exact(strict) == finite
        d = jordan_chevalley(x)
        ident &= d.semisimple @ d.nilpotent == d.nilpotent @ d.semisimple
        ident &= exp_exact(x) == exp_exact(d.semisimple) @ exp_exact(d.nilpotent)
    record(4, worst <= 1e-9 and ident,
           f"100 log/exp roundtrips in t3, t4 max error {worst:.2e} (tol 1e-9); "
           f"exact identities {'hold' if ident else 'fail'} on 20 matrices")


def test_criterion_5_flags(entries):
    exact_ok, count = True, 0
    for e in entries:
        g = e.algebra
        if is_completely_solvable(g).kind != COMPLETELY_SOLVABLE or e.name == "sqrt2":
            continue
        flag = search_flag(g, EXACT)
        dims = [s.dim for s in flag.subspaces]
        exact_ok &= dims == list(range(g.dim + 1)) and check_flag(g, flag)
        count += 1
    sqrt2 = next(e.algebra for e in entries if e.name == "sqrt2")
    with pytest.raises(NeedsIrrationalEigenvalue) as info:
        search_flag(sqrt2, EXACT)
    needs = info.value.poly == Poly([-2, 0, 1])
    numeric = search_flag(sqrt2, NUMERIC, tol=1e-8)
    res = max(numeric.residuals)
    ok = exact_ok and needs and res <= 1e-8 and check_flag(sqrt2, numeric)
    record(5, ok, f"{count} exact flags verified; sqrt2 exact raises NeedsIrrationalEigenvalue"
                  f"({info.value.poly}); numeric max residual {res:.2e} (tol 1e-8)")


def test_criterion_6_basis_invariance(entries):
    rng = random.Random(6)
    changed = []

    def kinds(p):
        v = is_completely_solvable(p.f)
        return (v.kind != NOT_SOLVABLE, v.kind, classify_group(p).kind)

    for e in entries:
        p = e.presentation
        base = kinds(p)
        for _ in range(20):
            q = p.change_basis(random_invertible(rng, p.f.dim))
            if kinds(q) != base:
                changed.append(e.name)
                break
    record(6, not changed, f"{len(entries)} entries x 20 changes of basis, "
                           f"verdicts changed for {changed}")


def test_criterion_7_exact_kernels():
    rng = random.Random(7)
    ch = sum(char_poly(m).eval_matrix(m).is_zero()
             for m in (random_matrix(rng, rng.randint(1, 5)) for _ in range(100)))
    sturm = 0
    for _ in range(100):
        p, k = planted_poly(rng, 6)
        sturm += real_root_count(square_free_part(p)) == k and real_root_count(p) == k
    record(7, ch == 100 and sturm == 100,
           f"Cayley-Hamilton {ch}/100; Sturm planted-root counts {sturm}/100")
