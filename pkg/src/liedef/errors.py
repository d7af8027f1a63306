"""Exception hierarchy.

Every failure raised by the library derives from :class:`LieDefError`.  The
``exit_code`` class attribute is what the command line front end returns
when the exception escapes a subcommand.
"""


class LieDefError(Exception):
    exit_code = 2

    def to_json(self):
        return {"error": type(self).__name__, "message": str(self)}


class InvalidInput(LieDefError, ValueError):
    """Malformed data: bad shapes, unparsable files, zero polynomials."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)

    def to_json(self):
        out = super().to_json()
        if self.field is not None:
            out["field"] = self.field
        if self.line is not None:
            out["line"] = self.line
        return out


class DimensionMismatch(InvalidInput):
    pass


class JacobiViolation(InvalidInput):
    def __init__(self, i, j, k, residual):
        self.triple = (i, j, k)
        self.residual = tuple(residual)
        super().__init__(
            f"Jacobi identity fails on basis triple ({i}, {j}, {k}); "
            f"residual {[str(r) for r in self.residual]}")

    def to_json(self):
        out = super().to_json()
        out["triple"] = list(self.triple)
        out["residual"] = [str(r) for r in self.residual]
        return out


class NotAnIdeal(InvalidInput):
    pass


class NotADerivation(InvalidInput):
    def __init__(self, index, pair):
        self.index = index
        self.pair = tuple(pair)
        super().__init__(
            f"matrix {index} violates the Leibniz rule on basis pair {self.pair}")


class NonCommutingDerivations(InvalidInput):
    def __init__(self, j, k):
        self.pair = (j, k)
        super().__init__(f"derivations {j} and {k} do not commute")


class NotAFlag(InvalidInput):
    pass


class NumericFlag(InvalidInput):
    """An exact construction was handed a floating point flag."""


class NotTriangular(InvalidInput):
    pass


class NonPositiveDiagonal(InvalidInput):
    pass


class NotSolvable(InvalidInput):
    """Raised where only solvable algebras are meaningful."""


class NotCompletelySolvable(InvalidInput):
    exit_code = 1


class InvalidPresentation(InvalidInput):
    def __init__(self, rule, witness=None, message=None):
        self.rule = rule
        self.witness = witness
        super().__init__(message or f"presentation fails rule {rule!r} (witness {witness})")

    def to_json(self):
        out = super().to_json()
        out["rule"] = self.rule
        out["witness"] = self.witness
        return out


class Unsupported(LieDefError):
    """The input is valid but outside what the constructive routines handle."""

    exit_code = 3


class NeedsIrrationalEigenvalue(Unsupported):
    def __init__(self, poly, level=None):
        self.poly = poly
        self.level = level
        super().__init__(
            f"exact construction needs a root of {poly} which has no rational root; "
            "use numeric mode")

    def to_json(self):
        out = super().to_json()
        out["polynomial"] = self.poly.to_json()
        if self.level is not None:
            out["level"] = self.level
        return out


class IrrationalEigenvalues(NeedsIrrationalEigenvalue):
    """Exact exponential requested for a matrix with non-rational diagonal data."""


class UnsupportedAdoCase(Unsupported):
    pass


class SizeLimitExceeded(Unsupported):
    pass


class NoRealEigenvalue(LieDefError):
    """Flag search certificate: an operator on the current level has no real eigenvalue."""

    exit_code = 1

    def __init__(self, poly, level, basis_index, eigenvalues=None):
        self.poly = poly
        self.level = level
        self.basis_index = basis_index
        self.eigenvalues = eigenvalues
        what = f"{poly} has no real root" if poly is not None else "no real eigenvalue"
        super().__init__(
            f"no invariant line at level {level}: {what} "
            f"(operator of basis element {basis_index})")

    def to_json(self):
        out = super().to_json()
        out.update(level=self.level, basis_index=self.basis_index)
        if self.poly is not None:
            out["polynomial"] = self.poly.to_json()
        if self.eigenvalues is not None:
            out["eigenvalues"] = [[z.real, z.imag] for z in map(complex, self.eigenvalues)]
        return out


class NumericCertificateFailed(LieDefError):
    exit_code = 3

    def __init__(self, what, residual, tol):
        self.what = what
        self.residual = residual
        self.tol = tol
        super().__init__(f"{what}: residual {residual:.3e} exceeds tolerance {tol:.1e}")

    def to_json(self):
        out = super().to_json()
        out.update(residual=self.residual, tol=self.tol)
        return out
