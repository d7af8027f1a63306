"""Quick invariant suites behind ``liedef selftest``.

Each check returns ``(name, ok, detail)``.  The suites are small versions of
the test-suite properties so that an installed copy can vouch for itself.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import NeedsIrrationalEigenvalue, NoRealEigenvalue
from .exact import RatMatrix, char_poly, real_root_count, square_free_part
from .groups import (DEFINABLE, NOT_DEFINABLE, algebra_from_json, catalog, classify_group,
                     e2tilde_group, presentation_from_json, r2_so2, recheck)
from .liealg import LieAlgebra, center, quotient
from .samples import (planted_poly, random_invertible, random_matrix, random_solvable_algebra,
                      random_triangular_float)
from .solvclass import (COMPLETELY_SOLVABLE, EXACT, NOT_SOLVABLE, NUMERIC, check_flag,
                        is_completely_solvable, sampled_eigenvalue_check, search_flag)
from .triangular import (exp_exact, exp_triangular, faithful_triangular_rep, jordan_chevalley,
                         log_triangular_positive)

Check = tuple[str, bool, str]


def _exact_suite(rng: random.Random) -> list[Check]:
    ch = all(char_poly(m).eval_matrix(m).is_zero()
             for m in (random_matrix(rng, rng.randint(1, 5)) for _ in range(20)))
    sturm = True
    for _ in range(20):
        p, k = planted_poly(rng)
        sturm &= real_root_count(square_free_part(p)) == k
    return [("exact.cayley_hamilton", ch, "20 random matrices"),
            ("exact.sturm_planted_roots", sturm, "20 random polynomials")]


def _catalog_suite(entries) -> list[Check]:
    out = []
    for e in entries:
        ok = e.observed() == e.expected
        out.append((f"catalog.{e.name}", ok, json.dumps(e.observed(), sort_keys=True)))
        again = (algebra_from_json if e.kind == "algebra" else presentation_from_json)(
            json.loads(json.dumps(e.payload_json())))
        out.append((f"catalog.{e.name}.roundtrip", again.to_json() == e.payload_json(), ""))
    return out


def _algebra_checks(g: LieAlgebra, label: str, seed: int) -> list[Check]:
    out = []
    v = is_completely_solvable(g)
    z = center(g)
    if not z.is_zero():
        q = quotient(g, z)
        ok = all(q.project(g.bracket(a, b)) == q.algebra.bracket(q.project(a), q.project(b))
                 for a in g.full().basis for b in g.full().basis)
        out.append((f"{label}.quotient_brackets", ok, ""))
    if v.kind == NOT_SOLVABLE:
        return out
    sampled = sampled_eigenvalue_check(g, 50, seed).ok
    try:
        flag = search_flag(g, EXACT)
        found = check_flag(g, flag)
    except NoRealEigenvalue:
        found = False
    except NeedsIrrationalEigenvalue:
        flag = search_flag(g, NUMERIC)
        found = check_flag(g, flag)
    cs = v.kind == COMPLETELY_SOLVABLE
    out.append((f"{label}.criteria_agree", cs == sampled == found,
                f"basis={cs} sampled={sampled} flag={found}"))
    if cs:
        try:
            rep = faithful_triangular_rep(g)
            ok = rep.is_homomorphism() and rep.is_faithful and rep.is_triangular
            out.append((f"{label}.triangular_rep", ok, f"{rep.tier} {rep.target_dim}"))
        except NeedsIrrationalEigenvalue:
            out.append((f"{label}.triangular_rep", True, "irrational weights (skipped)"))
    return out


def _triangular_suite(rng: random.Random) -> list[Check]:
    jc = True
    for _ in range(10):
        m = random_matrix(rng, rng.randint(2, 5))
        d = jordan_chevalley(m)
        s, n = d.semisimple, d.nilpotent
        jc &= (s + n == m and s @ n == n @ s and (n ** m.rows).is_zero()
               and square_free_part(char_poly(m)).eval_matrix(s).is_zero())
    ident = True
    for _ in range(5):
        n = rng.randint(2, 4)
        x = random_triangular_float(rng, n)
        strict = x - RatMatrix.diagonal(x.diagonal_entries())
        partial, term = RatMatrix.identity(n), RatMatrix.identity(n)
        for k in range(1, n):
            term = term @ strict * Fraction(1, k)
            partial = partial + term
        d = jordan_chevalley(x)
        ident &= exp_exact(RatMatrix.zero(n)) == RatMatrix.identity(n)
        ident &= exp_exact(strict) == partial
        ident &= exp_exact(x) == exp_exact(d.semisimple) @ exp_exact(d.nilpotent)
        lhs = exp_exact(x * 3)
        ident &= lhs == exp_exact(x) @ exp_exact(x * 2) and lhs.in_positive_triangular_group()
    worst = 0.0
    for _ in range(10):
        x = random_triangular_float(rng, rng.choice([3, 4]))
        xf = x.to_float()
        back = log_triangular_positive(exp_triangular(xf, NUMERIC))
        worst = max(worst, float(np.abs(back - xf).max()))
    return [("triangular.jordan_chevalley", jc, "10 random matrices"),
            ("triangular.exp_identities", ident, "Exp(0), finite nilpotent sums, Exp(S+N), Exp(3X)"),
            ("triangular.log_exp_roundtrip", worst <= 1e-9, f"max error {worst:.2e}")]


def _groups_suite(rng: random.Random, entries) -> list[Check]:
    a, b = classify_group(r2_so2()), classify_group(e2tilde_group())
    out = [("groups.compact_quotient_pair", a.kind == DEFINABLE and b.kind == NOT_DEFINABLE,
            f"{a.kind} / {b.kind}"),
           ("groups.recheck", recheck(a, r2_so2()), "")]
    for e in entries:
        p = e.presentation
        base = classify_group(p).kind
        ok = all(classify_group(p.change_basis(random_invertible(rng, p.f.dim))).kind == base
                 for _ in range(2))
        out.append((f"groups.{e.name}.basis_invariance", ok, base))
    return out


def run_selftest(seed: int = 0, random_algebras: int = 8, workers: int = 4) -> list[Check]:
    rng = random.Random(seed)
    entries = catalog()
    checks: list[Check] = []
    checks += _exact_suite(rng)
    checks += _catalog_suite(entries)
    jobs: list[Callable[[], list[Check]]] = [
        (lambda e=e, k=k: _algebra_checks(e.algebra, f"solvclass.{e.name}", seed + k))
        for k, e in enumerate(entries)]
    randoms = [random_solvable_algebra(rng) for _ in range(random_algebras)]
    jobs += [(lambda g=g, k=k: _algebra_checks(g, f"solvclass.random{k}", seed + k))
             for k, g in enumerate(randoms)]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for part in pool.map(lambda job: job(), jobs):
            checks += part
    checks += _triangular_suite(rng)
    checks += _groups_suite(rng, entries)
    return checks
