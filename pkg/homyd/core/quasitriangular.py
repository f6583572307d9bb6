"""
Quasitriangular and cobraided structures on a Hom-bialgebra (H, beta).

An R-matrix is an element R = R1 (x) R2 of H (x) H, stored as an n^2 x 1
column (the map K -> H (x) H). A cobraiding form sigma: H (x) H -> K is a
1 x n^2 row. The element r below is a second copy of R.
"""

from typing import Sequence, Union

from .actions import (
    ActionMap,
    CoactionMap,
    YDModule,
    check_action_axioms,
    check_coaction_axioms,
    check_hyd,
    regular_action,
    regular_coaction,
)
from .exact import Matrix, compose, flip, kron, permutation
from .exceptions import ConstructionError, ValidationError
from .report import SCALARS, Report, compare, verdict
from .structures import HomBialgebra


class RMatrix:
    """R = sum R[i, j] e_i (x) e_j in H (x) H."""

    def __init__(self, H: HomBialgebra, coefficients: Union[Matrix, Sequence[object]]):
        n = H.dim
        if isinstance(coefficients, Matrix):
            if coefficients.shape != (n * n, 1):
                raise ValidationError(f"an R-matrix over dimension {n} is {n * n}x1")
            element = coefficients
        else:
            if len(coefficients) != n * n:
                raise ValidationError(f"an R-matrix over dimension {n} has {n * n} coefficients")
            element = Matrix.column_vector(coefficients, H.field)
        self.H = H
        self.element = element

    def coefficient(self, left: str, right: str):
        return self.element[self.H.index(left) * self.H.dim + self.H.index(right), 0]

    def flip(self) -> "RMatrix":
        """R21 = R2 (x) R1."""
        return RMatrix(self.H, flip(self.H.dim, self.H.dim, self.H.field) @ self.element)

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.element == other.element

    __hash__ = None


class CobraidingForm:
    """sigma(e_i, e_j) = matrix[i, j]."""

    def __init__(self, H: HomBialgebra, matrix: Union[Matrix, Sequence[Sequence[object]]]):
        n = H.dim
        if not isinstance(matrix, Matrix):
            matrix = Matrix.from_rows(matrix, H.field)
        if matrix.shape != (n, n):
            raise ValidationError(f"a bilinear form on dimension {n} is {n}x{n}")
        self.H = H
        self.matrix = matrix

    @property
    def functional(self) -> Matrix:
        """sigma as the 1 x n^2 map H (x) H -> K."""
        n = self.H.dim
        return Matrix.row_vector([self.matrix[i, j] for i in range(n) for j in range(n)], self.H.field)

    def value(self, left: str, right: str):
        return self.matrix[self.H.index(left), self.H.index(right)]

    def dual(self) -> RMatrix:
        """The same coefficients read as an element of H (x) H."""
        n = self.H.dim
        return RMatrix(self.H, [self.matrix[i, j] for i in range(n) for j in range(n)])


def check_quasitriangular(H: HomBialgebra, R: RMatrix) -> Report:
    """The five quasitriangularity axioms for (H, R)."""
    n, field, hb = H.dim, H.field, H.basis
    I = H.identity()
    beta = H.twist
    r = R.element
    RR = kron(r, r)
    report = Report("quasitriangular")
    report.add(compare("QHA1 left counit", kron(H.counit, I) @ r, H.unit, SCALARS, (hb,)))
    report.add(compare("QHA1 right counit", kron(I, H.counit) @ r, H.unit, SCALARS, (hb,)))
    report.add(compare(
        "QHA2",
        kron(H.delta, beta) @ r,
        compose(kron(beta, beta, H.mu), permutation((n, n, n, n), (0, 2, 1, 3), field), RR),
        SCALARS, (hb, hb, hb),
    ))
    report.add(compare(
        "QHA3",
        kron(beta, H.delta) @ r,
        compose(kron(H.mu, beta, beta), permutation((n, n, n, n), (0, 2, 3, 1), field), RR),
        SCALARS, (hb, hb, hb),
    ))
    spread = kron(H.delta, r)
    report.add(compare(
        "QHA4",
        compose(kron(H.mu, H.mu), permutation((n, n, n, n), (1, 2, 0, 3), field), spread),
        compose(kron(H.mu, H.mu), permutation((n, n, n, n), (2, 0, 3, 1), field), spread),
        (hb,), (hb, hb),
    ))
    report.add(compare("QHA5", kron(beta, beta) @ r, r, SCALARS, (hb, hb)))
    return report


def induced_coaction(H: HomBialgebra, R: RMatrix, checked: bool = True) -> CoactionMap:
    """rho(h) = beta^-3(R2) (x) R1 h, a coaction of H on itself."""
    if checked:
        report = check_quasitriangular(H, R)
        if not report.passed:
            raise ConstructionError(f"not quasitriangular: {report.failures[0].name}", report)
    n = H.dim
    matrix = compose(
        kron(H.twist_power(-3), H.mu),
        permutation((n, n, n), (1, 0, 2), H.field),
        kron(R.element, H.identity()),
    )
    return CoactionMap(H, matrix, carrier=H, name="induced")


def decompile_coaction(H: HomBialgebra, coact: CoactionMap) -> RMatrix:
    """Read R back from rho(1) = beta^-3(R2) (x) beta(R1)."""
    n = H.dim
    swapped = kron(H.twist_power(3), H.twist_power(-1)) @ (coact.matrix @ H.unit)
    return RMatrix(H, flip(n, n, H.field) @ swapped)


def yd_side(H: HomBialgebra, coact: CoactionMap) -> Report:
    """H with its regular action and the given coaction: comodule-coalgebra plus HYD."""
    coact = CoactionMap(H, coact.matrix, carrier=H, name=coact.name)
    report = Report("Yetter-Drinfeld side")
    report.extend(check_coaction_axioms(coact, "comodule-coalgebra"))
    report.extend(check_hyd(YDModule(regular_action(H), coact), include_axioms=False))
    return report


def check_quasitriangular_equivalence(H: HomBialgebra, given: Union[RMatrix, CoactionMap]) -> Report:
    """(H, R) is quasitriangular exactly when the induced coaction makes H,
    with its regular action, a comodule Hom-coalgebra satisfying HYD.

    A coaction is first decompiled into R; if it is not of the induced
    shape the reverse direction is skipped.
    """
    report = Report("quasitriangular ⇔ Yetter-Drinfeld")
    if isinstance(given, CoactionMap):
        R = decompile_coaction(H, given)
        shaped = given.matrix == induced_coaction(H, R, checked=False).matrix
        report.add(verdict("induced shape", shaped, "" if shaped else "shape not induced"))
        if not shaped:
            return report
        coact = given
    else:
        R = given
        coact = induced_coaction(H, R, checked=False)
    qt = check_quasitriangular(H, R)
    yd = yd_side(H, coact)
    report.add(verdict("QHA side", qt.passed, _first(qt)))
    report.add(verdict("HYD side", yd.passed, _first(yd)))
    report.add(verdict("equivalence", qt.passed == yd.passed))
    report.qt = qt
    report.yd = yd
    return report


def _first(report: Report) -> str:
    failure = report.first_failure()
    if failure is None:
        return ""
    return f"first failure {failure.name}" + (f" at {failure.witness}" if failure.witness else "")


def induced_action_from_form(H: HomBialgebra, sigma: CobraidingForm) -> ActionMap:
    """h |> g = sigma(g1, beta^-3(h)) g2, an action of H on itself."""
    n = H.dim
    matrix = compose(
        kron(sigma.functional, H.identity()),
        permutation((n, n, n), (1, 0, 2), H.field),
        kron(H.twist_power(-3), H.delta),
    )
    return ActionMap(H, matrix, carrier=H, name="induced")


def check_cobraided_equivalence(H: HomBialgebra, sigma: CobraidingForm) -> Report:
    """The action induced by sigma, with the regular coaction: module
    Hom-algebra axioms and the HYD condition."""
    act = induced_action_from_form(H, sigma)
    report = Report("cobraiding form ⇒ Yetter-Drinfeld")
    report.extend(check_action_axioms(act, "module-algebra"))
    report.extend(check_hyd(YDModule(act, regular_coaction(H)), include_axioms=False))
    return report
