"""Connected solvable groups given in the form ``T x| F`` and their definability.

A presentation consists of the Lie algebra ``f`` of the simply connected
part ``F`` and commuting derivations ``D_1..D_m`` of ``f`` generating the
action of an ``m``-torus.  Compactness of the acting torus is checked
infinitesimally: every ``D_j`` must be semisimple with purely imaginary
spectrum.  The group is definable in an o-minimal expansion of the reals
exactly when ``f`` is completely solvable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations

from .errors import InvalidInput, InvalidPresentation, NotSolvable
from .exact import Poly, RatMatrix, char_poly, real_root_count, square_free_part
from .liealg import (LieAlgebra, abelian, algebra_from_json, change_basis, is_derivation,
                     is_nilpotent, loads_json, matrix_lie_algebra, semidirect_sum)
from .solvclass import (COMPLETELY_SOLVABLE, NOT_SOLVABLE, SolvabilityVerdict,
                        is_completely_solvable)

DEFINABLE = "Definable"
NOT_DEFINABLE = "NotDefinable"
INVALID_PRESENTATION = "InvalidPresentation"

RULES = ("shape", "derivation", "commutation", "semisimple", "imaginary-spectrum")


@dataclass(frozen=True)
class GroupPresentation:
    f: LieAlgebra
    torus_rank: int = 0
    derivations: tuple[RatMatrix, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "derivations", tuple(self.derivations))

    def to_json(self) -> dict:
        return {"f": self.f.to_json(), "torus_rank": self.torus_rank,
                "derivations": [d.to_json() for d in self.derivations]}

    def change_basis(self, p: RatMatrix) -> GroupPresentation:
        """Same group with ``f`` written in the basis given by the columns of ``p``."""
        pinv = p.inverse()
        return GroupPresentation(change_basis(self.f, p), self.torus_rank,
                                 tuple(pinv @ d @ p for d in self.derivations))


def presentation_from_json(data) -> GroupPresentation:
    if not isinstance(data, dict):
        raise InvalidInput("presentation must be a JSON object", field="<root>")
    if "f" not in data:
        raise InvalidInput("missing simply connected part", field="f")
    f = algebra_from_json(data["f"], field="f")
    m = data.get("torus_rank", 0)
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise InvalidInput("torus_rank must be a natural number", field="torus_rank")
    raw = data.get("derivations", [])
    if not isinstance(raw, list):
        raise InvalidInput("derivations must be a list of matrices", field="derivations")
    ders = tuple(RatMatrix.from_json(d, field=f"derivations[{k}]") for k, d in enumerate(raw))
    return GroupPresentation(f, m, ders)


def load_presentation(path) -> GroupPresentation:
    with open(path, encoding="utf-8") as fh:
        return presentation_from_json(loads_json(fh.read()))


# ---------------------------------------------------------------------------
# validation

def imaginary_spectrum_certificate(d: RatMatrix) -> dict | None:
    """Certificate that every eigenvalue of ``d`` lies on the imaginary axis, or None.

    ``char_poly(d) = T^k q(T^2)`` with ``q(0) != 0``; ``q(-mu)`` must have all
    of its roots real and positive.
    """
    p = char_poly(d)
    coeffs = list(p.coeffs)
    k = next(i for i, c in enumerate(coeffs) if c)
    rest = coeffs[k:]
    if any(rest[i] for i in range(1, len(rest), 2)):
        return None
    q_neg = Poly([c * (-1) ** (i // 2) for i, c in enumerate(rest) if i % 2 == 0])
    sf = square_free_part(q_neg)
    positive = real_root_count(sf, lo=0)
    if positive != sf.degree:
        return None
    return {"char_poly": p.to_json(), "zero_multiplicity": k, "q_of_minus_mu": q_neg.to_json(),
            "distinct_positive_roots": positive}


def validate_presentation(p: GroupPresentation) -> list[dict]:
    """Check the torus data exactly; returns one certificate per rule."""
    n = p.f.dim
    if len(p.derivations) != p.torus_rank:
        raise InvalidPresentation("shape", [len(p.derivations), p.torus_rank],
                                  f"{len(p.derivations)} derivations for torus rank {p.torus_rank}")
    for j, d in enumerate(p.derivations):
        if d.shape != (n, n):
            raise InvalidPresentation("shape", [j], f"derivation {j} is not {n}x{n}")
    certs: list[dict] = [{"rule": "shape", "ok": True, "torus_rank": p.torus_rank, "dim": n}]
    for j, d in enumerate(p.derivations):
        bad = is_derivation(p.f, d)
        if bad is not None:
            raise InvalidPresentation("derivation", [j, *bad],
                                      f"derivation {j} violates the Leibniz rule on {bad}")
    certs.append({"rule": "derivation", "ok": True, "checked_pairs": n * (n - 1) // 2})
    for j, k in combinations(range(len(p.derivations)), 2):
        if not p.derivations[j].commutator(p.derivations[k]).is_zero():
            raise InvalidPresentation("commutation", [j, k], f"derivations {j} and {k} do not commute")
    certs.append({"rule": "commutation", "ok": True})
    sf_polys = []
    for j, d in enumerate(p.derivations):
        sf = square_free_part(char_poly(d))
        if not sf.eval_matrix(d).is_zero():
            raise InvalidPresentation("semisimple", [j], f"derivation {j} is not semisimple")
        sf_polys.append(sf.to_json())
    certs.append({"rule": "semisimple", "ok": True, "annihilators": sf_polys})
    spectra = []
    for j, d in enumerate(p.derivations):
        c = imaginary_spectrum_certificate(d)
        if c is None:
            raise InvalidPresentation("imaginary-spectrum", [j],
                                      f"derivation {j} has an eigenvalue off the imaginary axis")
        spectra.append(c)
    certs.append({"rule": "imaginary-spectrum", "ok": True, "certificates": spectra})
    return certs


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class DefinabilityVerdict:
    kind: str
    solvability: SolvabilityVerdict | None = None
    certificates: tuple = ()
    failed_rule: InvalidPresentation | None = None

    @property
    def reason(self) -> dict:
        if self.kind == INVALID_PRESENTATION:
            e = self.failed_rule
            return {"rule": e.rule, "witness": e.witness, "message": str(e)}
        out = {"solvability": self.solvability.to_json()}
        if self.kind == DEFINABLE:
            out["torus"] = list(self.certificates)
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "reason": self.reason}


def classify_simply_connected(g: LieAlgebra) -> DefinabilityVerdict:
    """Definable iff ``g`` is completely solvable; ``g`` must be solvable."""
    v = is_completely_solvable(g)
    if v.kind == NOT_SOLVABLE:
        raise NotSolvable(f"{g!r} is not solvable")
    kind = DEFINABLE if v.kind == COMPLETELY_SOLVABLE else NOT_DEFINABLE
    return DefinabilityVerdict(kind, v)


def classify_group(p: GroupPresentation) -> DefinabilityVerdict:
    try:
        certs = validate_presentation(p)
    except InvalidPresentation as exc:
        return DefinabilityVerdict(INVALID_PRESENTATION, failed_rule=exc)
    v = is_completely_solvable(p.f)
    if v.kind == NOT_SOLVABLE:
        exc = InvalidPresentation("solvable", None, "simply connected part is not solvable")
        return DefinabilityVerdict(INVALID_PRESENTATION, v, failed_rule=exc)
    kind = DEFINABLE if v.kind == COMPLETELY_SOLVABLE else NOT_DEFINABLE
    return DefinabilityVerdict(kind, v, tuple(certs))


def recheck(verdict: DefinabilityVerdict, p: GroupPresentation) -> bool:
    """Re-verify the reasons attached to a Definable verdict."""
    if verdict.kind != DEFINABLE:
        return False
    return (is_completely_solvable(p.f).kind == COMPLETELY_SOLVABLE
            and validate_presentation(p) == list(verdict.certificates))


# ---------------------------------------------------------------------------
# builtin examples

ROTATION = RatMatrix([[0, 1], [-1, 0]])


def heisenberg() -> LieAlgebra:
    return LieAlgebra(3, ["x", "y", "z"], {(0, 1): (0, 0, 1)}, name="heisenberg")


def affine_line() -> LieAlgebra:
    return LieAlgebra(2, ["x", "y"], {(0, 1): (0, 1)}, name="affine")


def e2tilde() -> LieAlgebra:
    """``R^2`` extended by the rotation generator: ``[X, E1] = -E2``, ``[X, E2] = E1``."""
    return semidirect_sum(abelian(2, names=["E1", "E2"]), [ROTATION], ["X"], name="e2tilde")


def sqrt2_algebra() -> LieAlgebra:
    """``[x, e1] = e2``, ``[x, e2] = 2 e1``: ad(x) has eigenvalues +-sqrt(2)."""
    return LieAlgebra(3, ["x", "e1", "e2"], {(0, 1): (0, 0, 1), (0, 2): (0, 2, 0)}, name="sqrt2")


def sl2() -> LieAlgebra:
    return LieAlgebra(3, ["h", "e", "f"],
                      {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)}, name="sl2")


def upper_triangular(n: int, strict: bool = False) -> LieAlgebra:
    """Matrix units ``E_ij`` (``i <= j``, or ``i < j`` if strict), ordered by ``j - i``."""
    lo = 1 if strict else 0
    pairs = sorted(((i, j) for i in range(n) for j in range(i + lo, n)),
                   key=lambda ij: (ij[1] - ij[0], ij))
    return matrix_lie_algebra([RatMatrix.elementary(n, i, j) for i, j in pairs],
                              [f"E{i + 1}{j + 1}" for i, j in pairs],
                              name=("s" if strict else "t") + str(n))


def r2_so2() -> GroupPresentation:
    return GroupPresentation(abelian(2, name="R2", names=["E1", "E2"]), 1, (ROTATION,))


def e2tilde_group() -> GroupPresentation:
    return GroupPresentation(e2tilde(), 0, ())


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    kind: str  # "algebra" or "presentation"
    payload: LieAlgebra | GroupPresentation
    expected: dict = field(default_factory=dict)
    provenance: str = ""

    @property
    def algebra(self) -> LieAlgebra:
        return self.payload if isinstance(self.payload, LieAlgebra) else self.payload.f

    @property
    def presentation(self) -> GroupPresentation:
        if isinstance(self.payload, GroupPresentation):
            return self.payload
        return GroupPresentation(self.payload, 0, ())

    def payload_json(self) -> dict:
        return self.payload.to_json()

    def observed(self) -> dict:
        """Verdicts recomputed from scratch, in the shape of ``expected``."""
        g = self.algebra
        v = is_completely_solvable(g)
        out = {"solvable": v.kind != NOT_SOLVABLE, "nilpotent": is_nilpotent(g),
               "complete": v.kind}
        out["definability"] = classify_group(self.presentation).kind
        return out

    def to_json(self) -> dict:
        return {"name": self.name, "description": self.description, "kind": self.kind,
                "expected": dict(self.expected), "provenance": self.provenance,
                self.kind: self.payload_json()}


def builtin_payloads() -> dict:
    """Catalog payloads constructed in code (the shipped files must agree)."""
    return {
        "abelian1": abelian(1, name="abelian1", names=["x"]),
        "abelian2": abelian(2, name="abelian2", names=["x", "y"]),
        "abelian3": abelian(3, name="abelian3", names=["x", "y", "z"]),
        "heisenberg": heisenberg(),
        "affine": affine_line(),
        "t2": upper_triangular(2),
        "t3": upper_triangular(3),
        "s3": upper_triangular(3, strict=True),
        "e2tilde": e2tilde(),
        "sqrt2": sqrt2_algebra(),
        "sl2": sl2(),
        "r2-so2": r2_so2(),
        "e2tilde-group": e2tilde_group(),
    }


def _data_text(name: str) -> str:
    return resources.files("liedef").joinpath("data", name).read_text(encoding="utf-8")


def catalog() -> list[CatalogEntry]:
    index = json.loads(_data_text("catalog.json"))
    out = []
    for item in index["entries"]:
        data = loads_json(_data_text(item["file"]))
        if item["kind"] == "algebra":
            payload = algebra_from_json(data)
        else:
            payload = presentation_from_json(data)
        out.append(CatalogEntry(item["name"], item["description"], item["kind"], payload,
                                item["expected"], item["provenance"]))
    return out


def catalog_entry(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise InvalidInput(f"no catalog entry named {name!r}", field="name")


__all__ = [
    "DEFINABLE", "NOT_DEFINABLE", "INVALID_PRESENTATION", "RULES", "GroupPresentation",
    "DefinabilityVerdict", "CatalogEntry", "presentation_from_json", "load_presentation",
    "validate_presentation", "imaginary_spectrum_certificate", "classify_simply_connected",
    "classify_group", "recheck", "heisenberg", "affine_line", "e2tilde", "sqrt2_algebra",
    "sl2", "upper_triangular", "r2_so2", "e2tilde_group", "builtin_payloads", "catalog",
    "catalog_entry",
]
