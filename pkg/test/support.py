"""Builders shared by the property tests: group algebras with diagonal
Yetter-Drinfeld modules and Radford bundles over them."""

from homyd.core import catalog
from homyd.core.actions import ActionMap, CoactionMap, YDModule, trivial_coaction
from homyd.core.constructions import RadfordBundle
from homyd.core.exact import Matrix
from homyd.core.structures import yau_twist

# roots of unity in GF(7) by order
ROOTS = {2: (1, 6), 3: (1, 2, 4)}


def group(name: str, field, twisted: bool = False):
    """KZ2, KZ3 or the Klein four group algebra, optionally Yau-twisted by
    inversion (KZ3) or by swapping a and b (Klein)."""
    if name == "KZ2":
        return catalog.kz2(field)
    if name == "KZ3":
        H = catalog.cyclic_group_algebra(3, field)
        if twisted:
            return yau_twist(H, Matrix.from_entries(3, 3, field, {(0, 0): 1, (2, 1): 1, (1, 2): 1}))
        return H
    H = catalog.klein_group_algebra(field)
    if twisted:
        return yau_twist(H, Matrix.from_entries(4, 4, field, {(0, 0): 1, (2, 1): 1, (1, 2): 1, (3, 3): 1}))
    return H


def characters(name: str):
    """Characters of the group as value lists over the basis order."""
    if name == "KZ2":
        return [[1, w] for w in ROOTS[2]]
    if name == "KZ3":
        return [[1, w, w * w] for w in ROOTS[3]]
    return [[1, s, t, s * t] for s in ROOTS[2] for t in ROOTS[2]]


def fixed(H, chi=None, d=None) -> bool:
    """Whether the twist fixes the character and the group element."""
    beta = H.twist
    n = H.dim
    if d is not None and beta.column(d) != {d: 1}:
        return False
    if chi is not None:
        image = [next(iter(beta.column(g))) for g in range(n)]
        return all(chi[image[g]] % 7 == chi[g] % 7 for g in range(n))
    return True


def diagonal_module(H, twists, chis, elements, label=""):
    """Basis v_i with alpha(v_i) = t_i v_i, g |> v_i = chi_i(g) t_i v_i and
    rho(v_i) = t_i d_i (x) v_i."""
    field = H.field
    m, n = len(twists), H.dim
    basis = tuple(f"v{i}" for i in range(m))
    twist = Matrix.from_entries(m, m, field, {(i, i): t for i, t in enumerate(twists)})
    act, coact = {}, {}
    for i, (t, chi, d) in enumerate(zip(twists, chis, elements)):
        for g in range(n):
            act[(i, g * m + i)] = chi[g] * t
        coact[(d * m + i, i)] = t
    return YDModule(
        ActionMap(H, Matrix.from_entries(m, n * m, field, act), basis=basis, twist=twist, name=label),
        CoactionMap(H, Matrix.from_entries(n * m, m, field, coact), basis=basis, twist=twist, name=label),
        label,
    )


def dual_numbers_bundle(H, l, chi, d) -> RadfordBundle:
    """span(1, z) over a group algebra: g |> z = chi(g) lz, rho(z) = l d (x) z."""
    field = H.field
    A = catalog.dual_numbers(field, l)
    n = H.dim
    act = {}
    for g in range(n):
        act[(0, g * 2)] = 1
        act[(1, g * 2 + 1)] = chi[g] * l
    coact = {(0, 0): 1, (d * 2 + 1, 1): l}
    return RadfordBundle(
        A,
        H,
        ActionMap(H, Matrix.from_entries(2, 2 * n, field, act), carrier=A, name="A"),
        CoactionMap(H, Matrix.from_entries(2 * n, 2, field, coact), carrier=A, name="A"),
    )


def group_bundle(H, chi) -> RadfordBundle:
    """K[Z2] = span(1, b) acted on by b -> chi(g) b, with the trivial coaction."""
    field = H.field
    A = catalog.kz2(field)
    n = H.dim
    act = {}
    for g in range(n):
        act[(0, g * 2)] = 1
        act[(1, g * 2 + 1)] = chi[g]
    return RadfordBundle(
        A,
        H,
        ActionMap(H, Matrix.from_entries(2, 2 * n, field, act), carrier=A, name="A"),
        trivial_coaction(H, A, name="A"),
    )
