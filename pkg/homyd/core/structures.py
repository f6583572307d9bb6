"""
Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras over an
exact field, with their axiom checkers.

All structure maps are matrices (see ``homyd.core.exact``):

    mu      n x n^2     unit    n x 1       twist   n x n
    delta   n^2 x n     counit  1 x n       antipode n x n

Constructors validate by default and raise ``ConstructionError`` carrying
the failing report. ``unchecked`` builds the object without validation;
the document layer and the negative tests use it.
"""

from typing import Dict, Optional, Sequence, Tuple, Union

from ..utils.simple import logger
from .exact import (
    QQ,
    ComultMap,
    Field,
    Matrix,
    MultCube,
    Scalar,
    compose,
    flip,
    invert,
    kron,
    permutation,
)
from .exceptions import ConstructionError, SingularMatrixError, ValidationError
from .report import SCALARS, CheckResult, Report, compare, verdict

Labels = Tuple[str, ...]


def _field_of(*candidates, field: Optional[Field] = None) -> Field:
    if field is not None:
        return field
    for c in candidates:
        if isinstance(c, Matrix):
            return c.field
        if isinstance(c, (MultCube, ComultMap)):
            return c.field
    return QQ


def _product_matrix(mult, n: int, field: Field) -> Matrix:
    if isinstance(mult, MultCube):
        mult = mult.matrix()
    if not isinstance(mult, Matrix) or mult.shape != (n, n * n):
        raise ValidationError(f"a product on dimension {n} must be an {n}x{n * n} matrix")
    return mult


def _coproduct_matrix(comult, n: int, field: Field) -> Matrix:
    if isinstance(comult, ComultMap):
        comult = comult.matrix()
    if not isinstance(comult, Matrix) or comult.shape != (n * n, n):
        raise ValidationError(f"a coproduct on dimension {n} must be an {n * n}x{n} matrix")
    return comult


def _vector(values, n: int, field: Field, column: bool) -> Matrix:
    if isinstance(values, Matrix):
        expected = (n, 1) if column else (1, n)
        if values.shape != expected:
            raise ValidationError(f"expected a {expected[0]}x{expected[1]} matrix, got {values.shape}")
        return values
    if len(values) != n:
        raise ValidationError(f"expected {n} coefficients, got {len(values)}")
    return Matrix.column_vector(values, field) if column else Matrix.row_vector(values, field)


def _square(m, n: int, field: Field, what: str) -> Matrix:
    if m is None:
        return Matrix.identity(n, field)
    if not isinstance(m, Matrix):
        m = Matrix.from_rows(m, field)
    if m.shape != (n, n):
        raise ValidationError(f"{what} must be {n}x{n}, got {m.shape}")
    return m


class TwistedSpace:
    """A finite-dimensional space with a labelled basis and a twist map."""

    def __init__(self, basis: Sequence[str], twist: Matrix, field: Field):
        self.basis: Labels = tuple(str(b) for b in basis)
        if len(set(self.basis)) != len(self.basis):
            raise ValidationError(f"repeated basis labels in {self.basis}")
        self.field = field
        self.twist = _square(twist, len(self.basis), field, "twist")
        if self.twist.field != field:
            raise ValidationError(f"twist over {self.twist.field}, structure over {field}")
        self._powers: Dict[int, Matrix] = {1: self.twist, 0: Matrix.identity(self.dim, field)}
        try:
            self.twist_inverse: Optional[Matrix] = invert(self.twist)
            self._powers[-1] = self.twist_inverse
        except SingularMatrixError:
            self.twist_inverse = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def space(self) -> Tuple[Labels]:
        return (self.basis,)

    def identity(self) -> Matrix:
        return self._powers[0]

    def twist_power(self, k: int) -> Matrix:
        """alpha^k; negative powers need an invertible twist."""
        if k not in self._powers:
            if k < 0 and self.twist_inverse is None:
                raise SingularMatrixError("twist is not invertible")
            base = self.twist if k > 0 else self.twist_inverse
            self._powers[k] = base.power(abs(k))
        return self._powers[k]

    def index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise ValidationError(f"no basis element named {label!r}") from None

    def vector(self, coefficients: Dict[str, object]) -> Matrix:
        """Column vector from ``{label: coefficient}``."""
        values = [0] * self.dim
        for label, c in coefficients.items():
            values[self.index(label)] = c
        return Matrix.column_vector(values, self.field)

    def describe(self, column: Dict[int, Scalar]) -> Dict[str, Scalar]:
        return {self.basis[i]: v for i, v in sorted(column.items())}

    def _same_carrier(self, other: "TwistedSpace") -> bool:
        return (
            self.basis == other.basis
            and self.field == other.field
            and self.twist == other.twist
        )


class HomAlgebra(TwistedSpace):
    """(A, mu, 1_A, alpha): a unital Hom-associative algebra with invertible twist."""

    def __init__(
        self,
        basis: Sequence[str],
        mult: Union[MultCube, Matrix],
        unit,
        twist=None,
        field: Optional[Field] = None,
        checked: bool = True,
        name: str = "",
    ):
        field = _field_of(mult, twist, field=field)
        super().__init__(basis, twist, field)
        self.name = name
        self.mu = _product_matrix(mult, self.dim, field)
        self.unit = _vector(unit, self.dim, field, column=True)
        self.provenance: Optional[Report] = None
        if checked:
            report = check_hom_algebra(self)
            if not report.passed:
                raise ConstructionError(
                    f"not a Hom-algebra: {report.failures[0].name}", report
                )

    @classmethod
    def unchecked(cls, basis, mult, unit, twist=None, field=None, name=""):
        return cls(basis, mult, unit, twist, field, checked=False, name=name)

    @property
    def cube(self) -> MultCube:
        return MultCube.from_matrix(self.mu)

    def product(self, left: str, right: str) -> Dict[str, Scalar]:
        """e_left * e_right as ``{label: coefficient}``."""
        col = self.index(left) * self.dim + self.index(right)
        return self.describe(self.mu.column(col))

    def __eq__(self, other):
        if not isinstance(other, HomAlgebra):
            return NotImplemented
        return self._same_carrier(other) and self.mu == other.mu and self.unit == other.unit

    __hash__ = None

    def __repr__(self):
        return f"HomAlgebra({self.name or 'anonymous'}, dim={self.dim}, over {self.field})"


class HomCoalgebra(TwistedSpace):
    """(C, Delta, eps, beta): a counital Hom-coassociative coalgebra."""

    def __init__(
        self,
        basis: Sequence[str],
        comult: Union[ComultMap, Matrix],
        counit,
        twist=None,
        field: Optional[Field] = None,
        checked: bool = True,
        name: str = "",
    ):
        field = _field_of(comult, twist, field=field)
        super().__init__(basis, twist, field)
        self.name = name
        self.delta = _coproduct_matrix(comult, self.dim, field)
        self.counit = _vector(counit, self.dim, field, column=False)
        self.provenance: Optional[Report] = None
        if checked:
            report = check_hom_coalgebra(self)
            if not report.passed:
                raise ConstructionError(
                    f"not a Hom-coalgebra: {report.failures[0].name}", report
                )

    @classmethod
    def unchecked(cls, basis, comult, counit, twist=None, field=None, name=""):
        return cls(basis, comult, counit, twist, field, checked=False, name=name)

    @property
    def comult_map(self) -> ComultMap:
        return ComultMap.from_matrix(self.delta)

    def coproduct(self, label: str) -> Dict[Tuple[str, str], Scalar]:
        """Delta(e_label) as ``{(left, right): coefficient}``."""
        n = self.dim
        return {
            (self.basis[r // n], self.basis[r % n]): v
            for r, v in sorted(self.delta.column(self.index(label)).items())
        }

    def __eq__(self, other):
        if not isinstance(other, HomCoalgebra):
            return NotImplemented
        return (
            self._same_carrier(other)
            and self.delta == other.delta
            and self.counit == other.counit
        )

    __hash__ = None

    def __repr__(self):
        return f"HomCoalgebra({self.name or 'anonymous'}, dim={self.dim}, over {self.field})"


class HomBialgebra(TwistedSpace):
    """A Hom-algebra and a Hom-coalgebra on one space, sharing the twist.

    ``unchecked`` instances are also used for carriers that are only
    candidates, such as the algebra-and-coalgebra object fed into a
    biproduct gate.
    """

    def __init__(self, algebra: HomAlgebra, coalgebra: HomCoalgebra, checked: bool = True, name: str = ""):
        if algebra.field != coalgebra.field:
            raise ValidationError(f"field mismatch: {algebra.field} vs {coalgebra.field}")
        if algebra.basis != coalgebra.basis:
            raise ValidationError("algebra and coalgebra bases differ")
        if algebra.twist != coalgebra.twist:
            raise ValidationError("algebra and coalgebra twists differ")
        super().__init__(algebra.basis, algebra.twist, algebra.field)
        self.name = name or algebra.name or coalgebra.name
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.provenance: Optional[Report] = None
        if checked:
            self._validate()

    def _validate(self):
        report = check_hom_bialgebra(self)
        if not report.passed:
            raise ConstructionError(
                f"not a Hom-bialgebra: {report.failures[0].name}", report
            )

    @classmethod
    def from_parts(cls, algebra: HomAlgebra, coalgebra: HomCoalgebra, checked: bool = True, name: str = ""):
        return cls(algebra, coalgebra, checked=checked, name=name)

    @classmethod
    def build(cls, basis, mult, unit, comult, counit, twist=None, field=None, checked=True, name=""):
        field = _field_of(mult, comult, twist, field=field)
        algebra = HomAlgebra(basis, mult, unit, twist, field, checked=False, name=name)
        coalgebra = HomCoalgebra(basis, comult, counit, twist, field, checked=False, name=name)
        return cls(algebra, coalgebra, checked=checked, name=name)

    @classmethod
    def unchecked(cls, basis, mult, unit, comult, counit, twist=None, field=None, name=""):
        return cls.build(basis, mult, unit, comult, counit, twist, field, checked=False, name=name)

    mu = property(lambda self: self.algebra.mu)
    unit = property(lambda self: self.algebra.unit)
    delta = property(lambda self: self.coalgebra.delta)
    counit = property(lambda self: self.coalgebra.counit)

    def product(self, left: str, right: str) -> Dict[str, Scalar]:
        return self.algebra.product(left, right)

    def coproduct(self, label: str) -> Dict[Tuple[str, str], Scalar]:
        return self.coalgebra.coproduct(label)

    def __eq__(self, other):
        if not isinstance(other, HomBialgebra):
            return NotImplemented
        return self.algebra == other.algebra and self.coalgebra == other.coalgebra

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}({self.name or 'anonymous'}, dim={self.dim}, over {self.field})"


class HomHopf(HomBialgebra):
    """A Hom-bialgebra with an antipode S (S * id = id * S = 1 eps, S commutes with the twist)."""

    def __init__(self, algebra: HomAlgebra, coalgebra: HomCoalgebra, antipode, checked: bool = True, name: str = ""):
        self.antipode = _square(antipode, algebra.dim, algebra.field, "antipode")
        super().__init__(algebra, coalgebra, checked=checked, name=name)
        try:
            self.antipode_inverse: Optional[Matrix] = invert(self.antipode)
        except SingularMatrixError:
            self.antipode_inverse = None

    def _validate(self):
        report = check_hom_bialgebra(self)
        report.extend(check_antipode(self))
        if not report.passed:
            raise ConstructionError(
                f"not a Hom-Hopf algebra: {report.failures[0].name}", report
            )

    @classmethod
    def from_parts(cls, algebra, coalgebra, antipode=None, checked=True, name=""):
        return cls(algebra, coalgebra, antipode, checked=checked, name=name)

    @classmethod
    def build(cls, basis, mult, unit, comult, counit, antipode, twist=None, field=None, checked=True, name=""):
        field = _field_of(mult, comult, twist, field=field)
        algebra = HomAlgebra(basis, mult, unit, twist, field, checked=False, name=name)
        coalgebra = HomCoalgebra(basis, comult, counit, twist, field, checked=False, name=name)
        return cls(algebra, coalgebra, antipode, checked=checked, name=name)

    @classmethod
    def unchecked(cls, basis, mult, unit, comult, counit, antipode, twist=None, field=None, name=""):
        return cls.build(basis, mult, unit, comult, counit, antipode, twist, field, checked=False, name=name)

    def __eq__(self, other):
        if not isinstance(other, HomHopf):
            return NotImplemented
        return HomBialgebra.__eq__(self, other) and self.antipode == other.antipode

    __hash__ = None


# checkers


def _twist_invertible(X: TwistedSpace) -> CheckResult:
    return verdict("twist invertible", X.twist_inverse is not None)


def check_hom_algebra(A) -> Report:
    """Hom-multiplicativity, Hom-associativity and the Hom-unit laws."""
    algebra = A.algebra if isinstance(A, HomBialgebra) else A
    mu, u, a = algebra.mu, algebra.unit, algebra.twist
    I = algebra.identity()
    b = algebra.basis
    report = Report(f"Hom-algebra {algebra.name}".strip())
    report.add(_twist_invertible(algebra))
    report.add(compare("HA1 multiplicative", a @ mu, mu @ kron(a, a), (b, b), (b,)))
    report.add(compare("HA1 unit", a @ u, u, SCALARS, (b,)))
    report.add(compare("HA2 associativity", mu @ kron(a, mu), mu @ kron(mu, a), (b, b, b), (b,)))
    report.add(compare("HA2 right unit", mu @ kron(I, u), a, (b,), (b,)))
    report.add(compare("HA2 left unit", mu @ kron(u, I), a, (b,), (b,)))
    return report


def check_hom_coalgebra(C) -> Report:
    """Hom-comultiplicativity, Hom-coassociativity and the Hom-counit laws."""
    coalgebra = C.coalgebra if isinstance(C, HomBialgebra) else C
    delta, eps, b_ = coalgebra.delta, coalgebra.counit, coalgebra.twist
    I = coalgebra.identity()
    b = coalgebra.basis
    report = Report(f"Hom-coalgebra {coalgebra.name}".strip())
    report.add(_twist_invertible(coalgebra))
    report.add(compare("HC1 comultiplicative", delta @ b_, kron(b_, b_) @ delta, (b,), (b, b)))
    report.add(compare("HC1 counit", eps @ b_, eps, (b,), SCALARS))
    report.add(compare("HC2 coassociativity", kron(b_, delta) @ delta, kron(delta, b_) @ delta, (b,), (b, b, b)))
    report.add(compare("HC2 left counit", kron(eps, I) @ delta, b_, (b,), (b,)))
    report.add(compare("HC2 right counit", kron(I, eps) @ delta, b_, (b,), (b,)))
    return report


def bialgebra_compatibility(H: HomBialgebra) -> Report:
    """The four compatibilities between product and coproduct."""
    n, field, b = H.dim, H.field, H.basis
    mu, u, delta, eps = H.mu, H.unit, H.delta, H.counit
    middle = permutation((n, n, n, n), (0, 2, 1, 3), field)
    report = Report()
    report.add(
        compare("Δ multiplicative", delta @ mu, compose(kron(mu, mu), middle, kron(delta, delta)), (b, b), (b, b))
    )
    report.add(compare("Δ unital", delta @ u, kron(u, u), SCALARS, (b, b)))
    report.add(compare("ε multiplicative", eps @ mu, kron(eps, eps), (b, b), SCALARS))
    report.add(compare("ε unital", eps @ u, Matrix.scalar(1, field), SCALARS, SCALARS))
    return report


def check_hom_bialgebra(H: HomBialgebra) -> Report:
    report = Report(f"Hom-bialgebra {H.name}".strip())
    report.extend(check_hom_algebra(H.algebra))
    coalgebra = check_hom_coalgebra(H.coalgebra)
    report.extend(Report(results=[r for r in coalgebra if r.name != "twist invertible"]))
    report.extend(bialgebra_compatibility(H))
    return report


def convolution(f: Matrix, g: Matrix, H: HomBialgebra) -> Matrix:
    """f * g = mu o (f (x) g) o Delta."""
    return compose(H.mu, kron(f, g), H.delta)


def check_antipode(H: HomBialgebra, S: Optional[Matrix] = None) -> Report:
    if S is None:
        S = getattr(H, "antipode", None)
    if S is None:
        raise ValidationError("no antipode supplied")
    b = H.basis
    I = H.identity()
    counit_unit = H.unit @ H.counit
    report = Report(f"antipode {H.name}".strip())
    report.add(compare("S left convolution", convolution(S, I, H), counit_unit, (b,), (b,)))
    report.add(compare("S right convolution", convolution(I, S, H), counit_unit, (b,), (b,)))
    report.add(compare("S twist commutation", S @ H.twist, H.twist @ S, (b,), (b,)))
    return report


def check_hom_hopf(H: HomHopf) -> Report:
    report = check_hom_bialgebra(H)
    report.title = f"Hom-Hopf algebra {H.name}".strip()
    report.extend(check_antipode(H))
    return report


# morphisms


def check_hom_algebra_morphism(f: Matrix, A: HomAlgebra, B: HomAlgebra) -> Report:
    a, b = A.basis, B.basis
    report = Report("Hom-algebra morphism")
    report.add(compare("morphism multiplicative", f @ A.mu, B.mu @ kron(f, f), (a, a), (b,)))
    report.add(compare("morphism unital", f @ A.unit, B.unit, SCALARS, (b,)))
    report.add(compare("morphism twist", f @ A.twist, B.twist @ f, (a,), (b,)))
    return report


def check_hom_coalgebra_morphism(f: Matrix, C: HomCoalgebra, D: HomCoalgebra) -> Report:
    c, d = C.basis, D.basis
    report = Report("Hom-coalgebra morphism")
    report.add(compare("morphism comultiplicative", kron(f, f) @ C.delta, D.delta @ f, (c,), (d, d)))
    report.add(compare("morphism counital", D.counit @ f, C.counit, (c,), SCALARS))
    report.add(compare("morphism twist", f @ C.twist, D.twist @ f, (c,), (d,)))
    return report


# constructions on Hom-structures


def tensor_labels(*bases: Sequence[str]) -> Labels:
    labels = [()]
    for basis in bases:
        labels = [prefix + (b,) for prefix in labels for b in basis]
    return tuple("⊗".join(parts) for parts in labels)


def tensor_hom_algebra(A: HomAlgebra, B: HomAlgebra) -> HomAlgebra:
    """A (x) B with (a (x) b)(a' (x) b') = aa' (x) bb' and twist alpha (x) beta."""
    if A.field != B.field:
        raise ValidationError(f"field mismatch: {A.field} vs {B.field}")
    field = A.field
    middle = kron(A.identity(), flip(B.dim, A.dim, field), B.identity())
    return HomAlgebra(
        tensor_labels(A.basis, B.basis),
        kron(A.mu, B.mu) @ middle,
        kron(A.unit, B.unit),
        kron(A.twist, B.twist),
        field,
        name=f"{A.name}⊗{B.name}" if A.name or B.name else "",
    )


def tensor_hom_coalgebra(C: HomCoalgebra, D: HomCoalgebra) -> HomCoalgebra:
    if C.field != D.field:
        raise ValidationError(f"field mismatch: {C.field} vs {D.field}")
    field = C.field
    middle = kron(C.identity(), flip(C.dim, D.dim, field), D.identity())
    return HomCoalgebra(
        tensor_labels(C.basis, D.basis),
        middle @ kron(C.delta, D.delta),
        kron(C.counit, D.counit),
        kron(C.twist, D.twist),
        field,
        name=f"{C.name}⊗{D.name}" if C.name or D.name else "",
    )


def hopf_automorphism_report(H: HomHopf, gamma: Matrix) -> Report:
    """Whether gamma is an automorphism of the classical Hopf algebra H."""
    b = H.basis
    report = Report("Hopf automorphism")
    try:
        invert(gamma)
        report.add(verdict("γ invertible", True))
    except SingularMatrixError:
        report.add(verdict("γ invertible", False))
    report.add(compare("γ multiplicative", gamma @ H.mu, H.mu @ kron(gamma, gamma), (b, b), (b,)))
    report.add(compare("γ unital", gamma @ H.unit, H.unit, SCALARS, (b,)))
    report.add(compare("γ comultiplicative", H.delta @ gamma, kron(gamma, gamma) @ H.delta, (b,), (b, b)))
    report.add(compare("γ counital", H.counit @ gamma, H.counit, (b,), SCALARS))
    report.add(compare("γ antipode", H.antipode @ gamma, gamma @ H.antipode, (b,), (b,)))
    return report


def yau_twist(H: HomHopf, gamma) -> HomHopf:
    """Twist a classical Hopf algebra by a Hopf automorphism gamma.

    The result has product gamma o mu, coproduct Delta o gamma, twist gamma
    and the same unit, counit and antipode.
    """
    gamma = _square(gamma, H.dim, H.field, "twist automorphism")
    if not H.twist.is_identity():
        raise ValidationError("the Yau twist starts from a Hopf algebra with identity twist")
    report = hopf_automorphism_report(H, gamma)
    if not report.passed:
        logger.warning("twist rejected: %s", report.failures[0].name)
        raise ConstructionError(
            f"not a Hopf automorphism: {report.failures[0].name}", report
        )
    twisted = HomHopf.build(
        H.basis,
        gamma @ H.mu,
        H.unit,
        H.delta @ gamma,
        H.counit,
        H.antipode,
        gamma,
        H.field,
        name=f"{H.name}_twisted" if H.name else "",
    )
    twisted.provenance = report
    return twisted
