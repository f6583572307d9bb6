"""
Worked examples: group algebras, the Taft algebra and its Yau twists, two
Radford biproduct bundles over K[Z2] and the Z2 triangular structures.

Each ``CatalogEntry`` builds its structures for a field and an optional
scalar parameter and knows which checks the structures must pass. The
reference tables (expected products, coproducts and antipodes) are
written out by hand and compared with the computed maps entry by entry.
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..utils.simple import logger
from .actions import ActionMap, CoactionMap, check_hyd, check_hyd_prime, trivial_action, unit_module
from .braided import check_bialgebra_in_hyd, check_biproduct_category_equivalence
from .constructions import RadfordBundle, smash_coproduct_antipode
from .exact import QQ, Field, Matrix, Scalar
from .exceptions import FieldError, ValidationError
from .quasitriangular import (
    CobraidingForm,
    RMatrix,
    check_cobraided_equivalence,
    check_quasitriangular,
    check_quasitriangular_equivalence,
)
from .report import Report, verdict
from .structures import (
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    HomHopf,
    bialgebra_compatibility,
    check_hom_hopf,
    yau_twist,
)

Table = Mapping[object, Mapping[str, object]]

TAFT_BASIS = ("1", "g", "x", "y")

# nonzero products of the classical Taft algebra
TAFT_PRODUCTS = {
    ("g", "g"): {"1": 1},
    ("g", "x"): {"y": 1},
    ("g", "y"): {"x": 1},
    ("x", "g"): {"y": -1},
    ("y", "g"): {"x": -1},
}

TAFT_COPRODUCTS = {
    "1": {("1", "1"): 1},
    "g": {("g", "g"): 1},
    "x": {("x", "g"): 1, ("1", "x"): 1},
    "y": {("y", "1"): 1, ("g", "y"): 1},
}

TAFT_ANTIPODE = {"1": {"1": 1}, "g": {"g": 1}, "x": {"y": 1}, "y": {"x": -1}}

TAFT_RADFORD_ANTIPODE = {
    "1⊗1": {"1⊗1": 1},
    "1⊗a": {"1⊗a": 1},
    "g⊗1": {"g⊗1": 1},
    "g⊗a": {"g⊗a": 1},
    "x⊗1": {"y⊗a": 1},
    "x⊗a": {"y⊗1": 1},
    "y⊗1": {"x⊗a": -1},
    "y⊗a": {"x⊗1": -1},
}

DUAL_NUMBERS_RADFORD_ANTIPODE = {
    "1⊗1": {"1⊗1": 1},
    "1⊗a": {"1⊗a": 1},
    "z⊗1": {"z⊗a": 1},
    "z⊗a": {"z⊗1": -1},
}

ERRATA = {
    "taft": (
        "The relation printed as gy = -gy = x is self-contradictory. The table used is"
        " g^2 = 1, x^2 = 0, y = gx, gy = x, yg = -x, xg = -y, xy = yx = y^2 = 0;"
        " at k = 1 it passes the classical Hopf axioms.",
    ),
    "taft-radford": (
        "Both group elements act on x and y by the same scalar k, as printed. This"
        " action is eps-trivial and passes the Radford conditions.",
    ),
    "taft-radford-sign": (
        "The sign-corrected action a |> x = -kx, a |> y = -ky fails R4 and passes"
        " every other Radford condition.",
    ),
}


# builders


def _scalar(field: Field, value, what: str, nonzero: bool = True) -> Scalar:
    scalar = field(value)
    if nonzero and not scalar:
        raise ValidationError(f"{what} must be nonzero in {field}")
    return scalar


def _half(field: Field) -> Scalar:
    if field.characteristic == 2:
        raise FieldError("2 is not invertible in GF(2)")
    return field(1) / field(2)


def _table_product(basis: Sequence[str], table: Mapping[Tuple[str, str], Mapping[str, object]],
                   field: Field) -> Matrix:
    """Product matrix from nonzero products; the first label is the unit."""
    n = len(basis)
    index = {b: i for i, b in enumerate(basis)}
    entries = {}
    for b in basis:
        entries[(index[b], index[b])] = 1
        entries[(index[b], index[b] * n)] = 1
    for (left, right), image in table.items():
        col = index[left] * n + index[right]
        for label, c in image.items():
            entries[(index[label], col)] = c
    return Matrix.from_entries(n, n * n, field, entries)


def _table_coproduct(basis: Sequence[str], table: Mapping[str, Mapping[Tuple[str, str], object]],
                     field: Field) -> Matrix:
    n = len(basis)
    index = {b: i for i, b in enumerate(basis)}
    entries = {}
    for label, image in table.items():
        for (left, right), c in image.items():
            entries[(index[left] * n + index[right], index[label])] = c
    return Matrix.from_entries(n * n, n, field, entries)


def _table_map(basis: Sequence[str], table: Mapping[str, Mapping[str, object]], field: Field) -> Matrix:
    index = {b: i for i, b in enumerate(basis)}
    entries = {}
    for label, image in table.items():
        for target, c in image.items():
            entries[(index[target], index[label])] = c
    return Matrix.from_entries(len(basis), len(basis), field, entries)


def group_algebra(elements: Sequence[str], product: Callable[[str, str], str],
                  inverse: Callable[[str], str], field: Field = QQ, name: str = "") -> HomHopf:
    """K[G] with group-like basis; the first element is the identity."""
    n = len(elements)
    index = {g: i for i, g in enumerate(elements)}
    mult = {(index[product(g, h)], index[g] * n + index[h]): 1 for g in elements for h in elements}
    comult = {(index[g] * n + index[g], index[g]): 1 for g in elements}
    antipode = {(index[inverse(g)], index[g]): 1 for g in elements}
    return HomHopf.build(
        elements,
        Matrix.from_entries(n, n * n, field, mult),
        [1] + [0] * (n - 1),
        Matrix.from_entries(n * n, n, field, comult),
        [1] * n,
        Matrix.from_entries(n, n, field, antipode),
        field=field,
        name=name,
    )


def cyclic_group_algebra(order: int, field: Field = QQ) -> HomHopf:
    """K[Z_order] on 1, a, a2, ..."""
    labels = ["1", "a"] + [f"a{i}" for i in range(2, order)]
    power = {label: i for i, label in enumerate(labels)}
    return group_algebra(
        labels,
        lambda g, h: labels[(power[g] + power[h]) % order],
        lambda g: labels[-power[g] % order],
        field,
        name=f"KZ{order}",
    )


def klein_group_algebra(field: Field = QQ) -> HomHopf:
    """K[Z2 x Z2] on 1, a, b, ab."""
    labels = ["1", "a", "b", "ab"]
    bits = {"1": 0, "a": 1, "b": 2, "ab": 3}
    return group_algebra(labels, lambda g, h: labels[bits[g] ^ bits[h]], lambda g: g, field, name="KZ2xZ2")


def kz2(field: Field = QQ) -> HomHopf:
    """K[Z2] = K{1, a}, a^2 = 1, identity twist, S = id."""
    return cyclic_group_algebra(2, field)


def taft(field: Field = QQ) -> HomHopf:
    """The classical four-dimensional Taft algebra on 1, g, x, y."""
    return HomHopf.build(
        TAFT_BASIS,
        _table_product(TAFT_BASIS, TAFT_PRODUCTS, field),
        [1, 0, 0, 0],
        _table_coproduct(TAFT_BASIS, TAFT_COPRODUCTS, field),
        [1, 1, 0, 0],
        _table_map(TAFT_BASIS, TAFT_ANTIPODE, field),
        field=field,
        name="Taft",
    )


def taft_twisted(field: Field = QQ, k=2) -> HomHopf:
    """Yau twist of the Taft algebra by alpha(x) = kx, alpha(y) = ky."""
    k = _scalar(field, k, "k")
    twisted = yau_twist(taft(field), Matrix.from_entries(4, 4, field, {(0, 0): 1, (1, 1): 1, (2, 2): k, (3, 3): k}))
    twisted.name = "Ha"
    return twisted


def taft_radford_bundle(field: Field = QQ, k=2, sign: int = 1) -> RadfordBundle:
    """H_alpha over K[Z2]: 1 |> x = kx, a |> x = sign*kx, rho(x) = ka (x) x.

    ``sign=-1`` is the sign-corrected action, which breaks R4.
    """
    k = _scalar(field, k, "k")
    H = kz2(field)
    A = taft_twisted(field, k)
    m, n = A.dim, H.dim
    act = {}
    for h in range(n):
        factor = k if h == 0 or sign > 0 else -k
        act[(0, h * m)] = 1
        act[(1, h * m + 1)] = 1
        act[(2, h * m + 2)] = factor
        act[(3, h * m + 3)] = factor
    coact = {(0, 0): 1, (1, 1): 1, (m + 2, 2): k, (m + 3, 3): k}
    return RadfordBundle(
        A,
        H,
        ActionMap(H, Matrix.from_entries(m, n * m, field, act), carrier=A, name="Ha"),
        CoactionMap(H, Matrix.from_entries(n * m, m, field, coact), carrier=A, name="Ha"),
        A.antipode,
        H.antipode,
        name="taft-radford" if sign > 0 else "taft-radford-sign",
    )


def dual_numbers(field: Field = QQ, l=2) -> HomBialgebra:
    """A = span(1, z): 1z = z1 = lz, z^2 = 0, Delta(z) = lz (x) 1 + l1 (x) z,
    twist z -> lz.

    Not a Hom-bialgebra in the ordinary sense, so it is built unchecked;
    its algebra and coalgebra halves are checked.
    """
    l = _scalar(field, l, "l")
    basis = ("1", "z")
    twist = Matrix.from_entries(2, 2, field, {(0, 0): 1, (1, 1): l})
    mult = Matrix.from_entries(2, 4, field, {(0, 0): 1, (1, 1): l, (1, 2): l})
    comult = Matrix.from_entries(4, 2, field, {(0, 0): 1, (2, 1): l, (1, 1): l})
    algebra = HomAlgebra(basis, mult, [1, 0], twist, field, name="A")
    coalgebra = HomCoalgebra(basis, comult, [1, 0], twist, field, name="A")
    return HomBialgebra(algebra, coalgebra, checked=False, name="A")


def dual_numbers_radford_bundle(field: Field = QQ, l=2) -> RadfordBundle:
    """A = span(1, z) over K[Z2]: a |> z = -lz, rho(z) = la (x) z."""
    l = _scalar(field, l, "l")
    H = kz2(field)
    A = dual_numbers(field, l)
    act = {(0, 0): 1, (1, 1): l, (0, 2): 1, (1, 3): -l}
    coact = {(0, 0): 1, (3, 1): l}
    return RadfordBundle(
        A,
        H,
        ActionMap(H, Matrix.from_entries(2, 4, field, act), carrier=A, name="A"),
        CoactionMap(H, Matrix.from_entries(4, 2, field, coact), carrier=A, name="A"),
        Matrix.from_entries(2, 2, field, {(0, 0): 1, (1, 1): -1}),
        H.antipode,
        name="dual-numbers-radford",
    )


def taft_biproduct(field: Field = QQ, k=2) -> HomHopf:
    return taft_radford_bundle(field, k).hopf()


def dual_numbers_biproduct(field: Field = QQ, l=2) -> HomHopf:
    return dual_numbers_radford_bundle(field, l).hopf()


def kz2_r_matrix(field: Field = QQ) -> RMatrix:
    """R = 1/2 (1 (x) 1 + 1 (x) a + a (x) 1 - a (x) a)."""
    half = _half(field)
    return RMatrix(kz2(field), [half, half, half, -half])


def kz2_form(field: Field = QQ) -> CobraidingForm:
    """sigma(a, a) = -1 and sigma = 1 on the other pairs of group-likes."""
    return CobraidingForm(kz2(field), [[1, 1], [1, -1]])


# reference tables


def _normalize(table: Mapping, field: Field) -> Dict:
    return {
        key: {label: field(c) for label, c in image.items() if field(c)}
        for key, image in table.items()
    }


def compare_table(name: str, computed: Callable[[object], Mapping], expected: Table, field: Field):
    """One verdict for a whole reference table; the note names the first mismatch."""
    for key, image in _normalize(expected, field).items():
        actual = dict(computed(key))
        if actual != image:
            return verdict(name, False, f"at {key}: expected {_show(image)}, got {_show(actual)}")
    return verdict(name, True)


def _show(image: Mapping) -> str:
    if not image:
        return "0"
    parts = []
    for label, c in image.items():
        if isinstance(label, tuple):
            label = "⊗".join(label)
        parts.append(f"{c}·{label}")
    return " + ".join(parts)


def taft_twisted_tables(k, field: Field) -> Dict[str, Table]:
    """Expected products, coproducts and antipode of H_alpha."""
    k = field(k)
    scale = {"1": 1, "g": 1, "x": k, "y": k}
    products = {}
    for left in TAFT_BASIS:
        for right in TAFT_BASIS:
            if left == "1" or right == "1":
                image = {left if right == "1" else right: 1}
            else:
                image = dict(TAFT_PRODUCTS.get((left, right), {}))
            products[(left, right)] = {b: field(c) * scale[b] for b, c in image.items()}
    coproducts = {
        b: {pair: field(c) * scale[b] for pair, c in image.items()}
        for b, image in TAFT_COPRODUCTS.items()
    }
    return {"products": products, "coproducts": coproducts, "antipode": TAFT_ANTIPODE}


def antipode_images(H: HomHopf, label: str) -> Dict[str, Scalar]:
    return H.describe(H.antipode.column(H.index(label)))


# entries


@dataclass(frozen=True)
class CatalogEntry:
    """A named example and the checks it is expected to pass."""

    id: str
    summary: str
    build: Callable[[Field, object], Dict[str, object]]
    check: Callable[[Dict[str, object], Field, object], Report]
    parameter: Optional[str] = None
    errata: Tuple[str, ...] = ()

    @property
    def parameterized(self) -> bool:
        return self.parameter is not None

    def instantiate(self, field: Field = QQ, param=None) -> "CatalogInstance":
        if self.parameterized:
            param = 2 if param is None else param
            param = _scalar(field, param, self.parameter)
        elif param is not None:
            raise ValidationError(f"catalog entry {self.id} takes no parameter")
        logger.debug("building catalog entry %s over %s (param %s)", self.id, field, param)
        return CatalogInstance(self, field, param, self.build(field, param))


@dataclass
class CatalogInstance:
    entry: CatalogEntry
    field: Field
    param: object
    structures: Dict[str, object] = dataclass_field(default_factory=dict)

    @property
    def title(self) -> str:
        suffix = f", {self.entry.parameter} = {self.param}" if self.entry.parameterized else ""
        return f"{self.entry.id} over {self.field}{suffix}"

    def check(self) -> Report:
        report = Report(self.title)
        report.extend(self.entry.check(self.structures, self.field, self.param))
        return report

    def __getitem__(self, name: str):
        return self.structures[name]


def _bundle_structures(bundle: RadfordBundle) -> Dict[str, object]:
    """The bundle's parts by block name; A carries S_A so an export keeps it."""
    A, H = bundle.A, bundle.H
    if not isinstance(A, HomHopf) and bundle.S_A is not None:
        A = HomHopf(A.algebra, A.coalgebra, bundle.S_A, checked=False, name=A.name)
    return {
        H.name: H,
        A.name: A,
        "action": ActionMap(H, bundle.act.matrix, carrier=A, name=A.name),
        "coaction": CoactionMap(H, bundle.coact.matrix, carrier=A, name=A.name),
        "bundle": bundle,
    }


def _check_hopf(structures, field, param) -> Report:
    report = Report()
    for value in structures.values():
        if isinstance(value, HomHopf):
            report.extend(check_hom_hopf(value), prefix=f"{value.name}: ")
    return report


def _check_taft(structures, field, param) -> Report:
    H = structures["Ha"]
    tables = taft_twisted_tables(param, field)
    report = check_hom_hopf(H)
    report.add(compare_table("product table", lambda key: H.product(*key), tables["products"], field))
    report.add(compare_table("coproduct table", H.coproduct, tables["coproducts"], field))
    report.add(compare_table("antipode table", lambda key: antipode_images(H, key), tables["antipode"], field))
    return report


def _check_taft_radford(structures, field, param) -> Report:
    bundle = structures["bundle"]
    report = Report()
    report.extend(bundle.preconditions())
    report.extend(bundle.conditions())
    report.extend(check_biproduct_category_equivalence(bundle.A, bundle.H, bundle.act, bundle.coact))
    return report


def _check_taft_radford_sign(structures, field, param) -> Report:
    """The sign-corrected action against the printed one."""
    bundle = structures["bundle"]
    conditions = bundle.conditions()
    printed = taft_radford_bundle(field, param).conditions()
    others = [r for r in conditions if not r.name.startswith("R4")]
    report = Report()
    report.extend(bundle.preconditions())
    report.add(verdict("printed action passes R1-R5", printed.passed))
    report.add(verdict("sign-corrected action fails R4", not conditions.verdict("R4"), _first(conditions, "R4")))
    report.add(verdict("sign-corrected action passes R1-R3 and R5", all(others)))
    report.extend(check_biproduct_category_equivalence(bundle.A, bundle.H, bundle.act, bundle.coact))
    return report


def _check_dual_numbers_radford(structures, field, param) -> Report:
    bundle = structures["bundle"]
    A = bundle.A
    ordinary = bialgebra_compatibility(A)["Δ multiplicative"]
    report = Report()
    report.extend(bundle.preconditions())
    report.extend(bundle.conditions())
    report.add(verdict(
        "A is not an ordinary Hom-bialgebra",
        not ordinary.passed,
        f"Δ multiplicative fails at {ordinary.witness}" if ordinary.witness else "",
    ))
    report.extend(check_bialgebra_in_hyd(A, bundle.H, bundle.act, bundle.coact), prefix="in the category: ")
    report.extend(check_biproduct_category_equivalence(A, bundle.H, bundle.act, bundle.coact))
    return report


def _check_biproduct(table: Table):
    def check(structures, field, param) -> Report:
        bundle = structures["bundle"]
        B = structures["biproduct"]
        report = check_hom_hopf(B)
        report.add(compare_table("antipode table", lambda key: antipode_images(B, key), table, field))
        if all(r.passed for r in check_trivial_action_shape(bundle)):
            closed = smash_coproduct_antipode(bundle.A, bundle.H, bundle.coact, bundle.S_A, bundle.S_H)
            report.add(verdict("agrees with the trivial-action closed form", closed == B.antipode))
        return report

    return check


def check_trivial_action_shape(bundle: RadfordBundle) -> Report:
    """Whether the bundle's action is h |> a = eps(h) alpha(a)."""
    report = Report()
    report.add(verdict("eps-trivial action", bundle.act == trivial_action(bundle.H, bundle.A)))
    return report


def _check_r_matrix(structures, field, param) -> Report:
    H, R = structures["KZ2"], structures["R"]
    report = check_quasitriangular(H, R)
    report.extend(check_quasitriangular_equivalence(H, R), prefix="induced coaction: ")
    return report


def _check_form(structures, field, param) -> Report:
    return check_cobraided_equivalence(structures["KZ2"], structures["sigma"])


def _check_unit_module(structures, field, param) -> Report:
    K = structures["K"]
    report = check_hyd(K)
    report.extend(check_hyd_prime(K))
    return report


def _first(report: Report, name: str) -> str:
    failure = report.first_failure(name)
    return f"witness {failure.witness}" if failure is not None and failure.witness else ""


def _taft_radford(sign: int):
    def build(field, k):
        bundle = taft_radford_bundle(field, k, sign)
        return _bundle_structures(bundle)

    return build


def _biproduct(factory: Callable[[Field, object], RadfordBundle]):
    def build(field, param):
        bundle = factory(field, param)
        structures = _bundle_structures(bundle)
        structures["biproduct"] = bundle.hopf()
        structures["biproduct"].name = "B"
        return structures

    return build


def _kz2_with(name: str, factory):
    def build(field, param):
        value = factory(field)
        return {"KZ2": value.H, name: value}

    return build


def _unit(field, param):
    K = unit_module(kz2(field))
    return {"KZ2": K.H, "K": K}


CATALOG: Dict[str, CatalogEntry] = {}


def register(entry: CatalogEntry) -> CatalogEntry:
    if entry.id in CATALOG:
        raise ValidationError(f"duplicate catalog id {entry.id}")
    CATALOG[entry.id] = entry
    return entry


register(CatalogEntry("kz2", "group algebra K[Z2], identity twist", lambda f, p: {"KZ2": kz2(f)}, _check_hopf))
register(CatalogEntry(
    "taft", "Yau-twisted Taft algebra H_alpha, alpha(x) = kx, alpha(y) = ky",
    lambda f, k: {"Ha": taft_twisted(f, k)}, _check_taft, "k", ERRATA["taft"],
))
register(CatalogEntry(
    "taft-radford", "H_alpha over K[Z2] with the eps-trivial action and rho(x) = ka (x) x",
    _taft_radford(1), _check_taft_radford, "k", ERRATA["taft-radford"],
))
register(CatalogEntry(
    "taft-radford-sign", "H_alpha over K[Z2] with a |> x = -kx",
    _taft_radford(-1), _check_taft_radford_sign, "k", ERRATA["taft-radford-sign"],
))
register(CatalogEntry(
    "dual-numbers-radford", "span(1, z) over K[Z2] with a |> z = -lz and rho(z) = la (x) z",
    lambda f, l: _bundle_structures(dual_numbers_radford_bundle(f, l)), _check_dual_numbers_radford, "l",
))
register(CatalogEntry(
    "taft-biproduct", "the eight-dimensional biproduct H_alpha ⋆ K[Z2]",
    _biproduct(taft_radford_bundle), _check_biproduct(TAFT_RADFORD_ANTIPODE), "k",
))
register(CatalogEntry(
    "dual-numbers-biproduct", "the four-dimensional biproduct span(1, z) ⋆ K[Z2]",
    _biproduct(dual_numbers_radford_bundle), _check_biproduct(DUAL_NUMBERS_RADFORD_ANTIPODE), "l",
))
register(CatalogEntry(
    "kz2-r-matrix", "R = 1/2 (1⊗1 + 1⊗a + a⊗1 - a⊗a) on K[Z2]",
    _kz2_with("R", kz2_r_matrix), _check_r_matrix,
))
register(CatalogEntry(
    "kz2-form", "sigma(a, a) = -1, sigma = 1 elsewhere on K[Z2]",
    _kz2_with("sigma", kz2_form), _check_form,
))
register(CatalogEntry("unit-module", "the unit object K over K[Z2]", _unit, _check_unit_module))


def entry(entry_id: str) -> CatalogEntry:
    try:
        return CATALOG[entry_id]
    except KeyError:
        raise ValidationError(
            f"unknown catalog entry {entry_id!r}; known: {', '.join(CATALOG)}"
        ) from None


def instances(field: Field, params: Iterable[object], ids: Optional[Sequence[str]] = None) -> List[CatalogInstance]:
    """Every requested entry, swept over ``params`` when parameterized."""
    params = list(params)
    out = []
    for entry_id in ids or list(CATALOG):
        item = entry(entry_id)
        for param in (params if item.parameterized else [None]):
            out.append(item.instantiate(field, param))
    return out
