"""
Smash products, smash coproducts, T-smash coproducts and the Radford
biproduct of a Hom-bialgebra A with (H, beta), together with its gate
conditions and its antipode.

Elements of A (x) H are written a (x) h; A carries twist alpha and H
carries twist beta. Every constructor checks its preconditions first and
refuses with a ``ConstructionError`` that carries the failing report.
"""

from dataclasses import dataclass
from typing import Optional

from ..utils.simple import logger
from .actions import (
    ActionMap,
    CoactionMap,
    YDModule,
    check_action_axioms,
    check_coaction_axioms,
    hyd_sides,
    trivial_action,
    trivial_coaction,
)
from .exact import Matrix, compose, flip, kron, permutation
from .exceptions import ConstructionError, ValidationError
from .report import SCALARS, CheckResult, Report, compare, verdict
from .structures import (
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    HomHopf,
    TwistedSpace,
    check_antipode,
    check_hom_algebra,
    check_hom_bialgebra,
    check_hom_coalgebra,
    tensor_labels,
)


def _require(report: Report, what: str):
    if not report.passed:
        failure = report.failures[0]
        logger.warning("%s refused: %s failed", what, failure.name)
        raise ConstructionError(f"{what} refused: {failure.name} failed", report)


def _same_carrier(rep, X: TwistedSpace, role: str):
    if rep.basis != X.basis or rep.twist != X.twist:
        raise ValidationError(f"the {role} does not live on {X.name or 'the given carrier'}")


# smash product and coproduct


def smash_multiplication(A: TwistedSpace, H: HomBialgebra, act: ActionMap) -> Matrix:
    """(a (x) h)(a' (x) h') = a (h1 |> alpha^-1(a')) (x) beta^-1(h2) h'."""
    m, n, field = A.dim, H.dim, H.field
    I_A, I_H = A.identity(), H.identity()
    return compose(
        kron(A.mu, H.mu),
        kron(I_A, act.matrix, H.twist_power(-1), I_H),
        permutation((m, n, n, m, n), (0, 1, 3, 2, 4), field),
        kron(I_A, H.delta, A.twist_power(-1), I_H),
    )


def smash_comultiplication(C: TwistedSpace, H: HomBialgebra, coact: CoactionMap) -> Matrix:
    """Delta(c (x) h) = c1 (x) c2_(-1) beta^-1(h1) (x) alpha^-1(c2_(0)) (x) h2."""
    m, n, field = C.dim, H.dim, H.field
    I_C, I_H = C.identity(), H.identity()
    return compose(
        kron(I_C, H.mu, I_C, I_H),
        permutation((m, n, m, n, n), (0, 1, 3, 2, 4), field),
        kron(I_C, I_H, C.twist_power(-1), H.twist_power(-1), I_H),
        kron(I_C, coact.matrix, I_H, I_H),
        kron(C.delta, H.delta),
    )


def smash_product(A: HomAlgebra, H: HomBialgebra, act: ActionMap) -> HomAlgebra:
    """A # H; needs act to make A an (H, beta)-module Hom-algebra."""
    algebra = A.algebra if isinstance(A, HomBialgebra) else A
    _same_carrier(act, algebra, "action")
    act = act if act.carrier is not None else ActionMap(H, act.matrix, carrier=algebra, name=act.name)
    gate = Report("smash product gate")
    gate.extend(check_hom_algebra(algebra))
    gate.extend(check_action_axioms(act, "module-algebra"))
    _require(gate, "smash product")
    product = HomAlgebra(
        tensor_labels(A.basis, H.basis),
        smash_multiplication(algebra, H, act),
        kron(algebra.unit, H.unit),
        kron(algebra.twist, H.twist),
        H.field,
        name=f"{A.name}#{H.name}" if A.name else "",
    )
    product.provenance = gate
    return product


def smash_coproduct(C: HomCoalgebra, H: HomBialgebra, coact: CoactionMap) -> HomCoalgebra:
    """C x H; needs coact to make C an (H, beta)-comodule Hom-coalgebra."""
    coalgebra = C.coalgebra if isinstance(C, HomBialgebra) else C
    _same_carrier(coact, coalgebra, "coaction")
    coact = coact if coact.carrier is not None else CoactionMap(H, coact.matrix, carrier=coalgebra, name=coact.name)
    gate = Report("smash coproduct gate")
    gate.extend(check_hom_coalgebra(coalgebra))
    gate.extend(check_coaction_axioms(coact, "comodule-coalgebra"))
    _require(gate, "smash coproduct")
    coproduct = HomCoalgebra(
        tensor_labels(C.basis, H.basis),
        smash_comultiplication(coalgebra, H, coact),
        kron(coalgebra.counit, H.counit),
        kron(coalgebra.twist, H.twist),
        H.field,
        name=f"{C.name}×{H.name}" if C.name else "",
    )
    coproduct.provenance = gate
    return coproduct


# T-smash coproduct


class TwistMap:
    """A linear map T: C (x) H -> H (x) C."""

    def __init__(self, C: HomCoalgebra, H: HomBialgebra, matrix: Matrix, name: str = ""):
        if matrix.shape != (H.dim * C.dim, C.dim * H.dim):
            raise ValidationError(
                f"T: C⊗H -> H⊗C is {H.dim * C.dim}x{C.dim * H.dim}, got {matrix.shape}"
            )
        self.C = C
        self.H = H
        self.matrix = matrix
        self.name = name

    def check_invariant(self) -> Report:
        C, H = self.C, self.H
        T = self.matrix
        report = Report("T twist compatibility")
        report.add(compare(
            "T twist compatibility",
            T @ kron(C.twist, H.twist),
            kron(H.twist, C.twist) @ T,
            (C.basis, H.basis), (H.basis, C.basis),
        ))
        return report


def coaction_twist_map(C: HomCoalgebra, H: HomBialgebra, coact: CoactionMap) -> TwistMap:
    """T(c (x) h) = c_(-1) h (x) c_(0)."""
    m, n = C.dim, H.dim
    matrix = compose(kron(H.mu, C.identity()), kron(H.identity(), flip(m, n, H.field)), kron(coact.matrix, H.identity()))
    return TwistMap(C, H, matrix, name=coact.name)


def check_t_conditions(C: HomCoalgebra, H: HomBialgebra, T: TwistMap) -> Report:
    """Twist compatibility and the counit (C1), H-side (C2) and C-side (C3) conditions."""
    cb, hb = C.basis, H.basis
    I_C, I_H = C.identity(), H.identity()
    t = T.matrix
    report = Report("T-smash conditions")
    report.extend(T.check_invariant())
    report.add(compare("C1 counit on H", kron(H.counit, I_C) @ t, kron(C.twist, H.counit), (cb, hb), (cb,)))
    report.add(compare("C1 counit on C", kron(I_H, C.counit) @ t, kron(C.counit, H.twist), (cb, hb), (hb,)))
    report.add(compare(
        "C2",
        kron(H.delta, C.twist) @ t,
        compose(kron(H.twist, I_H, I_C), kron(I_H, t), kron(t, I_H), kron(I_C, H.twist_power(-1), I_H), kron(I_C, H.delta)),
        (cb, hb), (hb, hb, cb),
    ))
    report.add(compare(
        "C3",
        compose(kron(H.twist, C.delta), t, kron(C.twist, I_H)),
        compose(kron(I_H, I_C, C.twist), kron(t, I_C), kron(C.twist, I_H, I_C), kron(I_C, t), kron(C.delta, I_H)),
        (cb, hb), (hb, cb, cb),
    ))
    return report


def t_smash_comultiplication(C: HomCoalgebra, H: HomBialgebra, T: TwistMap) -> Matrix:
    I_C, I_H = C.identity(), H.identity()
    return compose(
        kron(I_C, I_H, C.twist_power(-1), I_H),
        kron(I_C, T.matrix, I_H),
        kron(I_C, I_C, H.twist_power(-1), I_H),
        kron(C.delta, H.delta),
    )


def t_smash_coproduct(C: HomCoalgebra, H: HomBialgebra, T: TwistMap) -> HomCoalgebra:
    """Delta(c (x) h) = c1 (x) T(c2 (x) beta^-1(h1)) (x) h2, twisted back by alpha^-1."""
    coalgebra = C.coalgebra if isinstance(C, HomBialgebra) else C
    gate = check_t_conditions(coalgebra, H, T)
    _require(gate, "T-smash coproduct")
    result = HomCoalgebra(
        tensor_labels(C.basis, H.basis),
        t_smash_comultiplication(coalgebra, H, T),
        kron(coalgebra.counit, H.counit),
        kron(coalgebra.twist, H.twist),
        H.field,
        name=f"{C.name}×T{H.name}" if C.name else "",
    )
    result.provenance = gate
    return result


# Radford biproduct


def radford_braiding(A: TwistedSpace, H: HomBialgebra, act: ActionMap, coact: CoactionMap) -> Matrix:
    """a (x) b -> beta^2(a_(-1)) |> alpha^-1(b) (x) alpha^-1(a_(0)) on A (x) A."""
    m, n = A.dim, H.dim
    inv = A.twist_power(-1)
    return compose(
        kron(act.matrix, A.identity()),
        kron(H.twist_power(2), inv, inv),
        permutation((n, m, m), (0, 2, 1), H.field),
        kron(coact.matrix, A.identity()),
    )


def r4_sides(A: HomBialgebra, H: HomBialgebra, act: ActionMap, coact: CoactionMap):
    """Delta_A(ab) against a1 (beta^2(a2_(-1)) |> alpha^-1(b1)) (x) alpha^-1(a2_(0)) b2."""
    I = A.identity()
    X = radford_braiding(A, H, act, coact)
    left = A.delta @ A.mu
    right = compose(kron(A.mu, A.mu), kron(I, X, I), kron(A.delta, A.delta))
    return left, right


def check_radford_conditions(A: HomBialgebra, H: HomBialgebra, act: ActionMap, coact: CoactionMap) -> Report:
    """The five biproduct conditions:

    R1  A is an (H, beta)-comodule Hom-algebra
    R2  A is an (H, beta)-module Hom-coalgebra
    R3  eps_A is an algebra map and Delta_A(1) = 1 (x) 1
    R4  Delta_A is multiplicative through the braiding built from act and coact
    R5  the Yetter-Drinfeld compatibility of act and coact
    """
    if act.H is not H and act.H != H:
        raise ValidationError("the action is over a different Hom-bialgebra")
    if coact.H is not H and coact.H != H:
        raise ValidationError("the coaction is over a different Hom-bialgebra")
    _same_carrier(act, A, "action")
    _same_carrier(coact, A, "coaction")
    act = ActionMap(H, act.matrix, carrier=A, name=act.name)
    coact = CoactionMap(H, coact.matrix, carrier=A, name=coact.name)
    ab = A.basis
    field = H.field

    report = Report(f"Radford biproduct conditions {A.name}#{H.name}".strip())
    r1 = check_coaction_axioms(coact, "comodule-algebra")
    for r in r1:
        if r.name.startswith("HCMA"):
            report.add(CheckResult(f"R1 {r.name}", r.passed, r.witness, r.note))
    r2 = check_action_axioms(act, "module-coalgebra")
    for r in r2:
        if r.name.startswith("HMC"):
            report.add(CheckResult(f"R2 {r.name}", r.passed, r.witness, r.note))
    report.add(compare("R3 ε multiplicative", A.counit @ A.mu, kron(A.counit, A.counit), (ab, ab), SCALARS))
    report.add(compare("R3 ε unital", A.counit @ A.unit, Matrix.scalar(1, field), SCALARS, SCALARS))
    report.add(compare("R3 Δ unital", A.delta @ A.unit, kron(A.unit, A.unit), SCALARS, (ab, ab)))
    left, right = r4_sides(A, H, act, coact)
    report.add(compare("R4", left, right, (ab, ab), (ab, ab)))
    left, right = hyd_sides(YDModule(act, coact))
    report.add(compare("R5", left, right, (H.basis, ab), (H.basis, ab)))
    return report


def radford_preconditions(A: HomBialgebra, H: HomBialgebra, act: ActionMap, coact: CoactionMap) -> Report:
    """What the biproduct needs before R1-R5 make sense."""
    act = ActionMap(H, act.matrix, carrier=A, name=act.name)
    coact = CoactionMap(H, coact.matrix, carrier=A, name=coact.name)
    report = Report("biproduct preconditions")
    report.extend(check_hom_algebra(A.algebra))
    report.extend(Report(results=[r for r in check_hom_coalgebra(A.coalgebra) if r.name != "twist invertible"]))
    hopf = check_hom_bialgebra(H)
    report.add(verdict("H is a Hom-bialgebra", hopf.passed, hopf.failures[0].name if not hopf.passed else ""))
    report.extend(check_action_axioms(act, "module-algebra"))
    report.extend(check_coaction_axioms(coact, "comodule-coalgebra"))
    return report


@dataclass
class RadfordBundle:
    """Inputs of a Radford biproduct, with optional antipodes of A and H."""

    A: HomBialgebra
    H: HomBialgebra
    act: ActionMap
    coact: CoactionMap
    S_A: Optional[Matrix] = None
    S_H: Optional[Matrix] = None
    name: str = ""

    def preconditions(self) -> Report:
        return radford_preconditions(self.A, self.H, self.act, self.coact)

    def conditions(self) -> Report:
        return check_radford_conditions(self.A, self.H, self.act, self.coact)

    def assemble(self, checked: bool = True) -> HomBialgebra:
        if checked:
            return radford_biproduct(self.A, self.H, self.act, self.coact)
        return assemble_biproduct(self.A, self.H, self.act, self.coact)

    def antipode(self) -> Matrix:
        if self.S_A is None or self.S_H is None:
            raise ValidationError("the bundle carries no antipodes")
        return biproduct_antipode(self.A, self.H, self.act, self.coact, self.S_A, self.S_H)

    def hopf(self) -> HomHopf:
        """The biproduct as a Hom-Hopf algebra, validated."""
        B = self.assemble()
        H = HomHopf.from_parts(B.algebra, B.coalgebra, self.antipode(), name=B.name)
        H.provenance = B.provenance
        return H


def assemble_biproduct(A: HomBialgebra, H: HomBialgebra, act: ActionMap, coact: CoactionMap) -> HomBialgebra:
    """The smash product and smash coproduct on A (x) H, without any check."""
    basis = tensor_labels(A.basis, H.basis)
    twist = kron(A.twist, H.twist)
    return HomBialgebra.unchecked(
        basis,
        smash_multiplication(A, H, act),
        kron(A.unit, H.unit),
        smash_comultiplication(A, H, coact),
        kron(A.counit, H.counit),
        twist,
        H.field,
        name=f"{A.name}⋆{H.name}" if A.name else "",
    )


def radford_biproduct(A: HomBialgebra, H: HomBialgebra, act: ActionMap, coact: CoactionMap) -> HomBialgebra:
    """A ⋆ H: refuses unless the preconditions and R1-R5 all pass."""
    gate = Report(f"Radford biproduct gate {A.name}⋆{H.name}".strip())
    gate.extend(radford_preconditions(A, H, act, coact))
    gate.extend(check_radford_conditions(A, H, act, coact))
    _require(gate, "Radford biproduct")
    logger.debug("assembling biproduct of dimension %d", A.dim * H.dim)
    candidate = assemble_biproduct(A, H, act, coact)
    biproduct = HomBialgebra.from_parts(candidate.algebra, candidate.coalgebra, name=candidate.name)
    biproduct.provenance = gate
    return biproduct


def tensor_bialgebra(A: HomBialgebra, H: HomBialgebra) -> HomBialgebra:
    """The biproduct with trivial partners: the tensor product Hom-bialgebra."""
    return radford_biproduct(A, H, trivial_action(H, A), trivial_coaction(H, A))


# antipodes


def _antipode_gate(A: HomBialgebra, H: HomBialgebra, S_A: Matrix, S_H: Matrix) -> Report:
    gate = Report("antipode inputs")
    gate.extend(check_antipode(A, S_A), prefix="A: ")
    gate.extend(check_antipode(H, S_H), prefix="H: ")
    return gate


def biproduct_antipode(A: HomBialgebra, H: HomBialgebra, act: ActionMap, coact: CoactionMap,
                       S_A: Matrix, S_H: Matrix) -> Matrix:
    """S(a (x) h) = (S_H(a_(-1) beta^-1(h))_1 |> S_A(alpha^-2(a_(0)))) (x) beta^-1(S_H(a_(-1) beta^-1(h))_2)."""
    _require(_antipode_gate(A, H, S_A, S_H), "biproduct antipode")
    m, n, field = A.dim, H.dim, H.field
    I_A, I_H = A.identity(), H.identity()
    return compose(
        kron(act.matrix, H.twist_power(-1)),
        permutation((n, n, m), (0, 2, 1), field),
        kron(H.delta @ S_H, I_A),
        kron(H.mu @ kron(I_H, H.twist_power(-1)), S_A @ A.twist_power(-2)),
        permutation((n, m, n), (0, 2, 1), field),
        kron(coact.matrix, I_H),
    )


def smash_product_antipode(A: HomBialgebra, H: HomBialgebra, act: ActionMap, S_A: Matrix, S_H: Matrix) -> Matrix:
    """Closed form under the trivial coaction:
    S(a (x) h) = (S_H(h)_1 |> alpha^-1(S_A(a))) (x) beta^-1(S_H(h)_2)."""
    _require(_antipode_gate(A, H, S_A, S_H), "smash product antipode")
    m, n = A.dim, H.dim
    return compose(
        kron(act.matrix, H.twist_power(-1)),
        permutation((m, n, n), (1, 0, 2), H.field),
        kron(A.twist_power(-1) @ S_A, H.delta @ S_H),
    )


def smash_coproduct_antipode(A: HomBialgebra, H: HomBialgebra, coact: CoactionMap, S_A: Matrix, S_H: Matrix) -> Matrix:
    """Closed form under the trivial action:
    S(c (x) h) = S_C(alpha^-1(c_(0))) (x) S_H(c_(-1) beta^-1(h))."""
    _require(_antipode_gate(A, H, S_A, S_H), "smash coproduct antipode")
    m, n = A.dim, H.dim
    return compose(
        kron(S_A @ A.twist_power(-1), S_H @ H.mu @ kron(H.identity(), H.twist_power(-1))),
        permutation((n, m, n), (1, 0, 2), H.field),
        kron(coact.matrix, H.identity()),
    )


# one-sided gates


def check_trivial_coaction_gate(A: HomBialgebra, H: HomBialgebra, act: ActionMap) -> Report:
    """With the trivial coaction the biproduct needs h1 (x) h2 |> a = h2 (x) h1 |> a.

    The report also records that this symmetry agrees with R5 for the
    trivial coaction.
    """
    n, m = H.dim, A.dim
    I_H = H.identity()
    hb, ab = H.basis, A.basis
    spread = kron(H.delta, A.identity())
    left = kron(I_H, act.matrix) @ spread
    right = compose(kron(I_H, act.matrix), kron(flip(n, n, H.field), A.identity()), spread)
    report = Report("trivial coaction gate")
    symmetry = report.add(compare("cocommutative action", left, right, (hb, ab), (hb, ab)))
    r5 = check_radford_conditions(A, H, act, trivial_coaction(H, A))["R5"]
    report.add(verdict("agrees with R5 under the trivial coaction", symmetry.passed == r5.passed))
    return report


def check_trivial_action_gate(A: HomBialgebra, H: HomBialgebra, coact: CoactionMap) -> Report:
    """With the trivial action the biproduct needs h c_(-1) (x) c_(0) = c_(-1) h (x) c_(0)."""
    n, m = H.dim, A.dim
    hb, ab = H.basis, A.basis
    spread = kron(H.identity(), coact.matrix)
    left = kron(H.mu, A.identity()) @ spread
    right = compose(kron(H.mu, A.identity()), permutation((n, n, m), (1, 0, 2), H.field), spread)
    report = Report("trivial action gate")
    symmetry = report.add(compare("commuting coaction", left, right, (hb, ab), (hb, ab)))
    r5 = check_radford_conditions(A, H, trivial_action(H, A), coact)["R5"]
    report.add(verdict("agrees with R5 under the trivial action", symmetry.passed == r5.passed))
    return report
