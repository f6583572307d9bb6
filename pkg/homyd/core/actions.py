"""
Hom-module and Hom-comodule maps over a Hom-bialgebra (H, beta), and the
Hom-Yetter-Drinfeld condition linking them.

An action is an m x (n*m) matrix (h (x) m -> h |> m), a coaction an
(n*m) x m matrix (m -> m_(-1) (x) m_(0)), with n = dim H, m = dim M.
Action and coaction objects are candidates: they are not validated on
construction, the ``check_*`` functions report on them.
"""

from typing import Optional, Sequence, Tuple

from .exact import Matrix, compose, kron, permutation
from .exceptions import SingularMatrixError, ValidationError
from .report import SCALARS, Report, compare, verdict
from .structures import HomAlgebra, HomBialgebra, HomCoalgebra, HomHopf, TwistedSpace

MODULE_KINDS = ("module", "module-algebra", "module-coalgebra")
COMODULE_KINDS = ("comodule", "comodule-algebra", "comodule-coalgebra")


class _Represented(TwistedSpace):
    """Common part of action and coaction maps: the bialgebra and the carrier."""

    def __init__(self, H: HomBialgebra, basis, twist, carrier, name):
        if carrier is not None:
            if basis is not None and tuple(basis) != carrier.basis:
                raise ValidationError("basis differs from the carrier's basis")
            if twist is not None and twist != carrier.twist:
                raise ValidationError("twist differs from the carrier's twist")
            basis, twist = carrier.basis, carrier.twist
        if basis is None:
            raise ValidationError("a basis or a carrier is required")
        super().__init__(basis, twist, H.field)
        self.H = H
        self.carrier = carrier
        self.name = name or (carrier.name if carrier is not None else "")


class ActionMap(_Represented):
    """h (x) m -> h |> m."""

    def __init__(self, H: HomBialgebra, matrix: Matrix, basis: Optional[Sequence[str]] = None,
                 twist: Optional[Matrix] = None, carrier: Optional[TwistedSpace] = None, name: str = ""):
        super().__init__(H, basis, twist, carrier, name)
        if matrix.shape != (self.dim, H.dim * self.dim):
            raise ValidationError(
                f"an action of a {H.dim}-dimensional bialgebra on dimension {self.dim}"
                f" is {self.dim}x{H.dim * self.dim}, got {matrix.shape}"
            )
        if matrix.field != H.field:
            raise ValidationError(f"field mismatch: {matrix.field} vs {H.field}")
        self.matrix = matrix

    def act(self, h: str, m: str):
        """h |> e_m as ``{label: coefficient}``."""
        return self.describe(self.matrix.column(self.H.index(h) * self.dim + self.index(m)))

    def __eq__(self, other):
        if not isinstance(other, ActionMap):
            return NotImplemented
        return self._same_carrier(other) and self.matrix == other.matrix and self.H == other.H

    __hash__ = None


class CoactionMap(_Represented):
    """m -> m_(-1) (x) m_(0)."""

    def __init__(self, H: HomBialgebra, matrix: Matrix, basis: Optional[Sequence[str]] = None,
                 twist: Optional[Matrix] = None, carrier: Optional[TwistedSpace] = None, name: str = ""):
        super().__init__(H, basis, twist, carrier, name)
        if matrix.shape != (H.dim * self.dim, self.dim):
            raise ValidationError(
                f"a coaction of a {H.dim}-dimensional bialgebra on dimension {self.dim}"
                f" is {H.dim * self.dim}x{self.dim}, got {matrix.shape}"
            )
        if matrix.field != H.field:
            raise ValidationError(f"field mismatch: {matrix.field} vs {H.field}")
        self.matrix = matrix

    def coact(self, m: str):
        """rho(e_m) as ``{(h, m'): coefficient}``."""
        return {
            (self.H.basis[r // self.dim], self.basis[r % self.dim]): v
            for r, v in sorted(self.matrix.column(self.index(m)).items())
        }

    def __eq__(self, other):
        if not isinstance(other, CoactionMap):
            return NotImplemented
        return self._same_carrier(other) and self.matrix == other.matrix and self.H == other.H

    __hash__ = None


class YDModule:
    """A Hom-Yetter-Drinfeld module candidate: an action and a coaction on one
    space over one Hom-bialgebra."""

    def __init__(self, action: ActionMap, coaction: CoactionMap, label: str = ""):
        if action.H is not coaction.H and action.H != coaction.H:
            raise ValidationError("action and coaction are over different Hom-bialgebras")
        if action.basis != coaction.basis:
            raise ValidationError("action and coaction live on different bases")
        if action.twist != coaction.twist:
            raise ValidationError("twist mismatch between action and coaction")
        self.action = action
        self.coaction = coaction
        self.label = label or action.name or coaction.name

    H = property(lambda self: self.action.H)
    basis = property(lambda self: self.action.basis)
    dim = property(lambda self: self.action.dim)
    field = property(lambda self: self.action.field)
    twist = property(lambda self: self.action.twist)
    twist_inverse = property(lambda self: self.action.twist_inverse)
    carrier = property(lambda self: self.action.carrier or self.coaction.carrier)

    def twist_power(self, k: int) -> Matrix:
        return self.action.twist_power(k)

    def identity(self) -> Matrix:
        return self.action.identity()

    def __repr__(self):
        return f"YDModule({self.label or 'anonymous'}, dim={self.dim})"


# checkers


def _carrier_of(rep, kind, wanted):
    carrier = rep.carrier
    if not isinstance(carrier, wanted):
        raise ValidationError(f"a {kind} check needs a carrier {wanted[0].__name__.lower()}")
    return carrier


def check_action_axioms(act: ActionMap, kind: str = "module") -> Report:
    """HM1/HM2, plus HMA or HMC for module-(co)algebras."""
    if kind not in MODULE_KINDS:
        raise ValidationError(f"unknown module kind {kind!r}")
    H, field = act.H, act.field
    n, m = H.dim, act.dim
    hb, mb = H.basis, act.basis
    beta, alpha, a = H.twist, act.twist, act.matrix
    I_M = act.identity()
    report = Report(f"{kind} {act.name}".strip())
    report.add(compare("HM1 twist compatibility", alpha @ a, a @ kron(beta, alpha), (hb, mb), (mb,)))
    report.add(compare("HM2 associativity", a @ kron(beta, a), a @ kron(H.mu, alpha), (hb, hb, mb), (mb,)))
    report.add(compare("HM2 unit", a @ kron(H.unit, I_M), alpha, (mb,), (mb,)))

    if kind == "module-algebra":
        A = _carrier_of(act, kind, (HomAlgebra, HomBialgebra))
        middle = permutation((n, n, m, m), (0, 2, 1, 3), field)
        report.add(compare(
            "HMA1 multiplicativity",
            a @ kron(H.twist_power(2), A.mu),
            compose(A.mu, kron(a, a), middle, kron(H.delta, I_M, I_M)),
            (hb, mb, mb), (mb,),
        ))
        report.add(compare("HMA2 unit", a @ kron(H.identity(), A.unit), A.unit @ H.counit, (hb,), (mb,)))
    elif kind == "module-coalgebra":
        C = _carrier_of(act, kind, (HomCoalgebra, HomBialgebra))
        middle = permutation((n, n, m, m), (0, 2, 1, 3), field)
        report.add(compare(
            "HMC1 comultiplicativity",
            C.delta @ a,
            compose(kron(a, a), middle, kron(H.delta, C.delta)),
            (hb, mb), (mb, mb),
        ))
        report.add(compare("HMC2 counit", C.counit @ a, kron(H.counit, C.counit), (hb, mb), SCALARS))
    return report


def check_coaction_axioms(coact: CoactionMap, kind: str = "comodule") -> Report:
    """HCM1/HCM2, plus HCMA or HCMC for comodule-(co)algebras."""
    if kind not in COMODULE_KINDS:
        raise ValidationError(f"unknown comodule kind {kind!r}")
    H, field = coact.H, coact.field
    n, m = H.dim, coact.dim
    hb, mb = H.basis, coact.basis
    beta, alpha, rho = H.twist, coact.twist, coact.matrix
    I_M = coact.identity()
    report = Report(f"{kind} {coact.name}".strip())
    report.add(compare("HCM1 twist compatibility", rho @ alpha, kron(beta, alpha) @ rho, (mb,), (hb, mb)))
    report.add(compare("HCM2 coassociativity", kron(beta, rho) @ rho, kron(H.delta, alpha) @ rho, (mb,), (hb, hb, mb)))
    report.add(compare("HCM2 counit", kron(H.counit, I_M) @ rho, alpha, (mb,), (mb,)))

    if kind == "comodule-algebra":
        A = _carrier_of(coact, kind, (HomAlgebra, HomBialgebra))
        middle = permutation((n, m, n, m), (0, 2, 1, 3), field)
        report.add(compare(
            "HCMA1 multiplicativity",
            rho @ A.mu,
            compose(kron(H.mu, A.mu), middle, kron(rho, rho)),
            (mb, mb), (hb, mb),
        ))
        report.add(compare("HCMA2 unit", rho @ A.unit, kron(H.unit, A.unit), SCALARS, (hb, mb)))
    elif kind == "comodule-coalgebra":
        C = _carrier_of(coact, kind, (HomCoalgebra, HomBialgebra))
        middle = permutation((n, m, n, m), (0, 2, 1, 3), field)
        report.add(compare(
            "HCMC1 comultiplicativity",
            kron(H.twist_power(2), C.delta) @ rho,
            compose(kron(H.mu, I_M, I_M), middle, kron(rho, rho), C.delta),
            (mb,), (hb, mb, mb),
        ))
        report.add(compare("HCMC2 counit", kron(H.identity(), C.counit) @ rho, H.unit @ C.counit, (mb,), (hb,)))
    return report


def hyd_sides(M: YDModule) -> Tuple[Matrix, Matrix]:
    """Both sides of the Hom-Yetter-Drinfeld condition as maps H (x) M -> H (x) M:

        h1 beta(m_(-1)) (x) beta^3(h2) |> m_(0)
            = (beta^2(h1) |> m)_(-1) h2 (x) (beta^2(h1) |> m)_(0)
    """
    H, field = M.H, M.field
    n, m = H.dim, M.dim
    a, rho = M.action.matrix, M.coaction.matrix
    I_H, I_M = H.identity(), M.identity()
    left = compose(
        kron(H.mu @ kron(I_H, H.twist), a @ kron(H.twist_power(3), I_M)),
        permutation((n, n, n, m), (0, 2, 1, 3), field),
        kron(H.delta, rho),
    )
    right = compose(
        kron(H.mu, I_M),
        permutation((n, m, n), (0, 2, 1), field),
        kron(rho, I_H),
        kron(a @ kron(H.twist_power(2), I_M), I_H),
        permutation((n, n, m), (0, 2, 1), field),
        kron(H.delta, I_M),
    )
    return left, right


def hyd_prime_sides(M: YDModule) -> Tuple[Matrix, Matrix]:
    """The antipode form of the condition, for Hom-Hopf H:

        rho(beta^4(h) |> m)
            = beta^-2(h11 beta(m_(-1))) S(h2) (x) beta^3(h12) |> m_(0)
    """
    H, field = M.H, M.field
    if not isinstance(H, HomHopf):
        raise ValidationError("the antipode form of the condition needs a Hom-Hopf algebra")
    n, m = H.dim, M.dim
    a, rho = M.action.matrix, M.coaction.matrix
    I_H, I_M = H.identity(), M.identity()
    left = compose(rho, a, kron(H.twist_power(4), I_M))
    right = compose(
        kron(H.mu @ kron(H.twist_power(-2), I_H), I_M),
        kron(H.mu @ kron(I_H, H.twist), H.antipode, a @ kron(H.twist_power(3), I_M)),
        permutation((n, n, n, n, m), (0, 3, 2, 1, 4), field),
        kron(Matrix.identity(n ** 3, field), rho),
        kron(H.delta, I_H, I_M),
        kron(H.delta, I_M),
    )
    return left, right


def check_hyd(M: YDModule, include_axioms: bool = True) -> Report:
    """Plain module and comodule axioms, then the Yetter-Drinfeld condition."""
    report = Report(f"Yetter-Drinfeld {M.label}".strip())
    if include_axioms:
        report.extend(check_action_axioms(M.action))
        report.extend(check_coaction_axioms(M.coaction))
    hb, mb = M.H.basis, M.basis
    left, right = hyd_sides(M)
    report.add(compare("HYD", left, right, (hb, mb), (hb, mb)))
    return report


def check_hyd_prime(M: YDModule) -> Report:
    """The antipode form, and its agreement with the plain condition."""
    hb, mb = M.H.basis, M.basis
    report = Report(f"Yetter-Drinfeld (antipode form) {M.label}".strip())
    try:
        left, right = hyd_prime_sides(M)
    except SingularMatrixError:
        report.add(verdict("HYD′", False, "twist not invertible"))
        return report
    prime = report.add(compare("HYD′", left, right, (hb, mb), (hb, mb)))
    plain = check_hyd(M, include_axioms=False)["HYD"]
    report.add(verdict("HYD ⇔ HYD′", prime.passed == plain.passed))
    return report


def check_yd_twist_compatibility(M: YDModule) -> Report:
    """Both sides of the YD condition commute with beta (x) alpha_M."""
    hb, mb = M.H.basis, M.basis
    twist = kron(M.H.twist, M.twist)
    left, right = hyd_sides(M)
    report = Report(f"YD twist compatibility {M.label}".strip())
    report.add(compare("YD left side commutes with twists", left @ twist, twist @ left, (hb, mb), (hb, mb)))
    report.add(compare("YD right side commutes with twists", right @ twist, twist @ right, (hb, mb), (hb, mb)))
    return report


# builders


def trivial_action(H: HomBialgebra, carrier: TwistedSpace, name: str = "") -> ActionMap:
    """h |> m = eps(h) alpha(m)."""
    return ActionMap(H, kron(H.counit, carrier.twist), carrier=carrier, name=name)


def trivial_coaction(H: HomBialgebra, carrier: TwistedSpace, name: str = "") -> CoactionMap:
    """rho(m) = 1 (x) alpha(m)."""
    return CoactionMap(H, kron(H.unit, carrier.twist), carrier=carrier, name=name)


def regular_action(H: HomBialgebra) -> ActionMap:
    return ActionMap(H, H.mu, carrier=H, name=f"{H.name} regular".strip())


def regular_coaction(H: HomBialgebra) -> CoactionMap:
    return CoactionMap(H, H.delta, carrier=H, name=f"{H.name} regular".strip())


def unit_module(H: HomBialgebra) -> YDModule:
    """The ground field K with eps-action and unit coaction."""
    field = H.field
    one = Matrix.identity(1, field)
    action = ActionMap(H, H.counit, basis=("k",), twist=one, name="K")
    coaction = CoactionMap(H, H.unit, basis=("k",), twist=one, name="K")
    return YDModule(action, coaction, "K")
