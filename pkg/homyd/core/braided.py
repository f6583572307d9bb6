"""
The braided monoidal structure on Hom-Yetter-Drinfeld modules.

Tensor products carry the diagonal action and the beta^-2-corrected
product coaction. The associator only moves twists around, so (M (x) N) (x) P
and M (x) (N (x) P) share one basis and one flattening.
"""

from typing import Callable, Optional

from .actions import ActionMap, CoactionMap, YDModule, check_hyd
from .constructions import check_radford_conditions, radford_braiding, r4_sides
from .exact import Matrix, compose, kron, permutation
from .exceptions import SingularMatrixError, ValidationError
from .report import Report, compare, verdict
from .structures import HomBialgebra, HomHopf, tensor_labels


class CategoryMorphism:
    """A linear map between YD modules, claimed to be a morphism of the category."""

    def __init__(self, source: YDModule, target: YDModule, matrix: Matrix, name: str = ""):
        if matrix.shape != (target.dim, source.dim):
            raise ValidationError(
                f"{name or 'morphism'}: expected {target.dim}x{source.dim}, got {matrix.shape}"
            )
        self.source = source
        self.target = target
        self.matrix = matrix
        self.name = name

    def check(self) -> Report:
        S, T, f = self.source, self.target, self.matrix
        hb = S.H.basis
        report = Report(f"morphism {self.name}".strip())
        report.add(compare(f"{self.name} commutes with twists".strip(), f @ S.twist, T.twist @ f, (S.basis,), (T.basis,)))
        report.add(compare(
            f"{self.name} H-linear".strip(),
            f @ S.action.matrix,
            T.action.matrix @ kron(S.H.identity(), f),
            (hb, S.basis), (T.basis,),
        ))
        report.add(compare(
            f"{self.name} H-colinear".strip(),
            T.coaction.matrix @ f,
            kron(S.H.identity(), f) @ S.coaction.matrix,
            (S.basis,), (hb, T.basis),
        ))
        return report

    def __matmul__(self, other: "CategoryMorphism") -> "CategoryMorphism":
        return CategoryMorphism(other.source, self.target, self.matrix @ other.matrix, f"{self.name}∘{other.name}")


def _same_h(*modules: YDModule) -> HomBialgebra:
    H = modules[0].H
    for M in modules[1:]:
        if M.H is not H and M.H != H:
            raise ValidationError("modules over different Hom-bialgebras")
    return H


def yd_tensor(M: YDModule, N: YDModule) -> YDModule:
    """M (x) N with h |> (m (x) n) = h1 |> m (x) h2 |> n and
    rho(m (x) n) = beta^-2(m_(-1) n_(-1)) (x) m_(0) (x) n_(0)."""
    H = _same_h(M, N)
    field = H.field
    n, p, q = H.dim, M.dim, N.dim
    basis = tensor_labels(M.basis, N.basis)
    twist = kron(M.twist, N.twist)
    action = compose(
        kron(M.action.matrix, N.action.matrix),
        permutation((n, n, p, q), (0, 2, 1, 3), field),
        kron(H.delta, M.identity(), N.identity()),
    )
    coaction = compose(
        kron(H.twist_power(-2) @ H.mu, M.identity(), N.identity()),
        permutation((n, p, n, q), (0, 2, 1, 3), field),
        kron(M.coaction.matrix, N.coaction.matrix),
    )
    label = f"{M.label}⊗{N.label}"
    return YDModule(
        ActionMap(H, action, basis=basis, twist=twist, name=label),
        CoactionMap(H, coaction, basis=basis, twist=twist, name=label),
        label,
    )


def associator(M: YDModule, N: YDModule, P: YDModule) -> CategoryMorphism:
    """a(m (x) n (x) p) = alpha_M^-1(m) (x) n (x) alpha_P(p)."""
    matrix = kron(M.twist_power(-1), N.identity(), P.twist)
    return CategoryMorphism(yd_tensor(yd_tensor(M, N), P), yd_tensor(M, yd_tensor(N, P)), matrix, "a")


def associator_inverse(M: YDModule, N: YDModule, P: YDModule) -> CategoryMorphism:
    matrix = kron(M.twist, N.identity(), P.twist_power(-1))
    return CategoryMorphism(yd_tensor(M, yd_tensor(N, P)), yd_tensor(yd_tensor(M, N), P), matrix, "a⁻¹")


def braiding(M: YDModule, N: YDModule) -> CategoryMorphism:
    """c(m (x) n) = beta^2(m_(-1)) |> alpha_N^-1(n) (x) alpha_M^-1(m_(0))."""
    H = _same_h(M, N)
    n, p, q = H.dim, M.dim, N.dim
    matrix = compose(
        kron(N.action.matrix, M.identity()),
        kron(H.twist_power(2), N.twist_power(-1), M.twist_power(-1)),
        permutation((n, p, q), (0, 2, 1), H.field),
        kron(M.coaction.matrix, N.identity()),
    )
    return CategoryMorphism(yd_tensor(M, N), yd_tensor(N, M), matrix, "c")


def braiding_inverse(M: YDModule, N: YDModule) -> CategoryMorphism:
    """c^-1(n (x) m) = alpha_M^-1(m_(0)) (x) S^-1(beta^2(m_(-1))) |> alpha_N^-1(n).

    Needs a Hom-Hopf algebra with bijective antipode.
    """
    H = _same_h(M, N)
    if not isinstance(H, HomHopf):
        raise ValidationError("the inverse braiding needs a Hom-Hopf algebra")
    if H.antipode_inverse is None:
        raise SingularMatrixError("the antipode is not invertible, so c has no inverse")
    n, p, q = H.dim, M.dim, N.dim
    matrix = compose(
        kron(M.identity(), N.action.matrix),
        kron(M.twist_power(-1), H.antipode_inverse @ H.twist_power(2), N.twist_power(-1)),
        permutation((q, n, p), (2, 1, 0), H.field),
        kron(N.identity(), M.coaction.matrix),
    )
    return CategoryMorphism(yd_tensor(N, M), yd_tensor(M, N), matrix, "c⁻¹")


def check_braiding_invertible(M: YDModule, N: YDModule) -> Report:
    """c and the candidate c^-1 compose to identities in both orders."""
    c = braiding(M, N)
    report = Report(f"braiding inverse {M.label},{N.label}")
    try:
        c_inv = braiding_inverse(M, N)
    except (SingularMatrixError, ValidationError) as e:
        report.add(verdict("c invertible", False, str(e)))
        return report
    mn = (M.basis, N.basis)
    nm = (N.basis, M.basis)
    report.add(compare("c⁻¹∘c = id", c_inv.matrix @ c.matrix, Matrix.identity(M.dim * N.dim, M.field), mn, mn))
    report.add(compare("c∘c⁻¹ = id", c.matrix @ c_inv.matrix, Matrix.identity(M.dim * N.dim, M.field), nm, nm))
    return report


def check_braiding_naturality(M: YDModule, N: YDModule) -> Report:
    """c commutes with the twists alpha_M (x) alpha_N."""
    c = braiding(M, N).matrix
    report = Report(f"braiding naturality {M.label},{N.label}")
    report.add(compare(
        "c commutes with twists",
        c @ kron(M.twist, N.twist),
        kron(N.twist, M.twist) @ c,
        (M.basis, N.basis), (N.basis, M.basis),
    ))
    return report


def hybe_tau(M: YDModule, N: YDModule) -> Matrix:
    """tau(m (x) n) = beta^3(m_(-1)) |> n (x) m_(0)."""
    H = _same_h(M, N)
    n, p, q = H.dim, M.dim, N.dim
    return compose(
        kron(N.action.matrix, M.identity()),
        kron(H.twist_power(3), N.identity(), M.identity()),
        permutation((n, p, q), (0, 2, 1), H.field),
        kron(M.coaction.matrix, N.identity()),
    )


def check_hybe(M: YDModule, N: YDModule, P: YDModule) -> Report:
    """Twist compatibility of tau and the Hom-Yang-Baxter equation on M (x) N (x) P."""
    report = Report(f"Hom-Yang-Baxter {M.label},{N.label},{P.label}")
    for X, Y in ((M, N), (M, P), (N, P)):
        tau = hybe_tau(X, Y)
        report.add(compare(
            f"τ twist compatibility ({X.label},{Y.label})",
            tau @ kron(X.twist, Y.twist),
            kron(Y.twist, X.twist) @ tau,
            (X.basis, Y.basis), (Y.basis, X.basis),
        ))
    t_mn, t_mp, t_np = hybe_tau(M, N), hybe_tau(M, P), hybe_tau(N, P)
    left = compose(kron(P.twist, t_mn), kron(t_mp, N.twist), kron(M.twist, t_np))
    right = compose(kron(t_np, M.twist), kron(N.twist, t_mp), kron(t_mn, P.twist))
    report.add(compare("HYBE", left, right, (M.basis, N.basis, P.basis), (P.basis, N.basis, M.basis)))
    return report


BraidFactory = Callable[[YDModule, YDModule], CategoryMorphism]


def check_hexagons(M: YDModule, N: YDModule, P: YDModule, braid: Optional[BraidFactory] = None) -> Report:
    """Both hexagon identities; ``braid`` lets callers substitute a candidate braiding."""
    braid = braid or braiding
    mnp = (M.basis, N.basis, P.basis)
    report = Report(f"hexagons {M.label},{N.label},{P.label}")

    left = compose(
        kron(N.identity(), braid(M, P).matrix),
        associator(N, M, P).matrix,
        kron(braid(M, N).matrix, P.identity()),
    )
    right = compose(
        associator(N, P, M).matrix,
        braid(M, yd_tensor(N, P)).matrix,
        associator(M, N, P).matrix,
    )
    report.add(compare("hexagon 1", left, right, mnp, (N.basis, P.basis, M.basis)))

    left = compose(
        kron(braid(M, P).matrix, N.identity()),
        associator_inverse(M, P, N).matrix,
        kron(M.identity(), braid(N, P).matrix),
    )
    right = compose(
        associator_inverse(P, M, N).matrix,
        braid(yd_tensor(M, N), P).matrix,
        associator_inverse(M, N, P).matrix,
    )
    report.add(compare("hexagon 2", left, right, mnp, (P.basis, M.basis, N.basis)))
    return report


def check_pentagon(M: YDModule, N: YDModule, P: YDModule, Q: YDModule) -> Report:
    I_M, I_Q = M.identity(), Q.identity()
    left = associator(M, N, yd_tensor(P, Q)).matrix @ associator(yd_tensor(M, N), P, Q).matrix
    right = compose(
        kron(I_M, associator(N, P, Q).matrix),
        associator(M, yd_tensor(N, P), Q).matrix,
        kron(associator(M, N, P).matrix, I_Q),
    )
    domain = (M.basis, N.basis, P.basis, Q.basis)
    report = Report(f"pentagon {M.label},{N.label},{P.label},{Q.label}")
    report.add(compare("pentagon", left, right, domain, domain))
    return report


def check_braided_category(M: YDModule, N: YDModule, P: YDModule) -> Report:
    """Morphism checks for a and c, inverses, naturality, hexagons and the pentagon."""
    report = Report(f"braided category {M.label},{N.label},{P.label}")
    for X in (yd_tensor(M, N), yd_tensor(yd_tensor(M, N), P), yd_tensor(M, yd_tensor(N, P))):
        report.extend(check_hyd(X, include_axioms=True), prefix=f"{X.label}: ")
    report.extend(associator(M, N, P).check(), prefix="a: ")
    report.extend(associator_inverse(M, N, P).check(), prefix="a⁻¹: ")
    report.extend(braiding(M, N).check(), prefix="c: ")
    report.extend(check_braiding_naturality(M, N))
    report.extend(check_braiding_invertible(M, N))
    report.extend(check_hexagons(M, N, P))
    report.extend(check_pentagon(M, N, P, M))
    return report


# bialgebras in the category


def check_bialgebra_in_hyd(A, H: HomBialgebra, act: ActionMap, coact: CoactionMap) -> Report:
    """A as a bialgebra in the YD category of (H, beta), for beta^2 = id.

    Combines the YD condition on A, the structural conditions R1-R3 and
    multiplicativity of Delta_A through the braiding c_{A,A}. The braided
    composite is also compared with the R4 right-hand side.
    """
    if not H.twist_power(2).is_identity():
        raise ValidationError("the categorical comparison needs beta^2 = id")
    act = ActionMap(H, act.matrix, carrier=A, name=act.name)
    coact = CoactionMap(H, coact.matrix, carrier=A, name=coact.name)
    M = YDModule(act, coact, A.name or "A")
    ab = A.basis
    report = Report(f"bialgebra in the Yetter-Drinfeld category {A.name}".strip())
    report.extend(check_hyd(M))
    radford = check_radford_conditions(A, H, act, coact)
    for r in radford:
        if r.name[:2] in ("R1", "R2", "R3"):
            report.add(r)

    I = A.identity()
    c = braiding(M, M).matrix
    braided = compose(kron(A.mu, A.mu), kron(I, c, I), kron(A.delta, A.delta))
    report.add(compare("braided multiplicativity", A.delta @ A.mu, braided, (ab, ab), (ab, ab)))
    _, r4_right = r4_sides(A, H, act, coact)
    report.add(compare("R4 realized through c", r4_right, braided, (ab, ab), (ab, ab)))
    report.add(compare("c matches the biproduct braiding", radford_braiding(A, H, act, coact), c, (ab, ab), (ab, ab)))
    return report


def check_biproduct_category_equivalence(A, H: HomBialgebra, act: ActionMap, coact: CoactionMap) -> Report:
    """R1-R5 hold exactly when A is a bialgebra in the YD category (beta^2 = id)."""
    radford = check_radford_conditions(A, H, act, coact)
    category = check_bialgebra_in_hyd(A, H, act, coact)
    report = Report(f"biproduct vs braided bialgebra {A.name}".strip())
    note = f"R1–R5 {_word(radford.passed)}, bialgebra in the category {_word(category.passed)}"
    report.add(verdict("equivalence", radford.passed == category.passed, note))
    return report


def _word(passed: bool) -> str:
    return "PASS" if passed else "FAIL"
