"""
Classical (untwisted) axiom checks written element by element.

These read the structure constants once and then work with sparse
vectors ``{index: coefficient}``; they share nothing with the matrix
checkers except the scalar fields. Every function returns a plain bool.
All twists must be the identity.
"""

from collections import defaultdict
from itertools import product
from typing import Dict, Tuple

from .exceptions import ValidationError

Vector = Dict[object, object]


def _clean(v: Vector) -> Vector:
    return {k: c for k, c in v.items() if c}


def _add(target: defaultdict, v: Vector, factor=1):
    for k, c in v.items():
        target[k] += factor * c


class Tables:
    """Structure constants of an untwisted algebra, coalgebra or bialgebra,
    read into dictionaries; the halves a structure lacks stay empty."""

    def __init__(self, H):
        if not H.twist.is_identity():
            raise ValidationError("classical checks need the identity twist")
        self.n = H.dim
        self.zero = H.field.zero
        n = self.n
        mu = getattr(H, "mu", None)
        unit = getattr(H, "unit", None)
        self.mult = {} if mu is None else {(i, j): dict(mu.column(i * n + j)) for i in range(n) for j in range(n)}
        self.unit = {} if unit is None else dict(unit.column(0))
        delta = getattr(H, "delta", None)
        counit = getattr(H, "counit", None)
        self.comult = {} if delta is None else {
            i: {divmod(r, n): c for r, c in delta.column(i).items()} for i in range(n)
        }
        self.counit = [] if counit is None else [counit[0, i] for i in range(n)]
        antipode = getattr(H, "antipode", None)
        self.antipode = None if antipode is None else {i: dict(antipode.column(i)) for i in range(n)}

    def acc(self) -> defaultdict:
        return defaultdict(lambda: self.zero)

    def multiply(self, x: Vector, y: Vector) -> Vector:
        out = self.acc()
        for i, a in x.items():
            for j, b in y.items():
                _add(out, self.mult[(i, j)], a * b)
        return _clean(out)

    def coproduct(self, x: Vector) -> Vector:
        out = self.acc()
        for i, a in x.items():
            _add(out, self.comult[i], a)
        return _clean(out)

    def eps(self, x: Vector):
        total = self.zero
        for i, a in x.items():
            total += a * self.counit[i]
        return total


def _basis(i) -> Vector:
    return {i: 1}


def is_algebra(H) -> bool:
    T = Tables(H)
    if not T.mult:
        raise ValidationError(f"{type(H).__name__} has no multiplication")
    for i, j, k in product(range(T.n), repeat=3):
        left = T.multiply(T.multiply(_basis(i), _basis(j)), _basis(k))
        right = T.multiply(_basis(i), T.multiply(_basis(j), _basis(k)))
        if left != right:
            return False
    for i in range(T.n):
        e = _clean({i: T.zero + 1})
        if T.multiply(T.unit, _basis(i)) != e or T.multiply(_basis(i), T.unit) != e:
            return False
    return True


def is_coalgebra(H) -> bool:
    T = Tables(H)
    if not T.comult:
        raise ValidationError(f"{type(H).__name__} has no comultiplication")
    for i in range(T.n):
        left, right = T.acc(), T.acc()
        for (j, k), c in T.comult[i].items():
            for (p, q), d in T.comult[j].items():
                left[(p, q, k)] += c * d
            for (p, q), d in T.comult[k].items():
                right[(j, p, q)] += c * d
        if _clean(left) != _clean(right):
            return False
        lcount, rcount = T.acc(), T.acc()
        for (j, k), c in T.comult[i].items():
            lcount[k] += c * T.counit[j]
            rcount[j] += c * T.counit[k]
        e = _clean({i: T.zero + 1})
        if _clean(lcount) != e or _clean(rcount) != e:
            return False
    return True


def _tensor_product(T: Tables, x: Vector, y: Vector) -> Vector:
    """Product in H (x) H with componentwise multiplication."""
    out = T.acc()
    for (a, b), c in x.items():
        for (p, q), d in y.items():
            for u, s in T.mult[(a, p)].items():
                for v, t in T.mult[(b, q)].items():
                    out[(u, v)] += c * d * s * t
    return _clean(out)


def is_bialgebra(H) -> bool:
    if not (is_algebra(H) and is_coalgebra(H)):
        return False
    T = Tables(H)
    for i, j in product(range(T.n), repeat=2):
        xy = T.multiply(_basis(i), _basis(j))
        if T.coproduct(xy) != _tensor_product(T, T.comult[i], T.comult[j]):
            return False
        if T.eps(xy) != T.counit[i] * T.counit[j]:
            return False
    unit_pair = T.acc()
    for i, a in T.unit.items():
        for j, b in T.unit.items():
            unit_pair[(i, j)] += a * b
    return T.coproduct(T.unit) == _clean(unit_pair) and T.eps(T.unit) == 1


def is_hopf(H) -> bool:
    """Bialgebra axioms plus S(x1) x2 = eps(x) 1 = x1 S(x2)."""
    if not is_bialgebra(H):
        return False
    T = Tables(H)
    if T.antipode is None:
        return False
    for i in range(T.n):
        left, right = T.acc(), T.acc()
        for (j, k), c in T.comult[i].items():
            _add(left, T.multiply(T.antipode[j], _basis(k)), c)
            _add(right, T.multiply(_basis(j), T.antipode[k]), c)
        expected = _clean({u: a * T.counit[i] for u, a in T.unit.items()})
        if _clean(left) != expected or _clean(right) != expected:
            return False
    return True


def _action_table(act) -> Dict[Tuple[int, int], Vector]:
    if not act.twist.is_identity():
        raise ValidationError("classical checks need the identity twist")
    m = act.dim
    return {(h, v): dict(act.matrix.column(h * m + v)) for h in range(act.H.dim) for v in range(m)}


def _coaction_table(coact) -> Dict[int, Vector]:
    if not coact.twist.is_identity():
        raise ValidationError("classical checks need the identity twist")
    m = coact.dim
    return {v: {divmod(r, m): c for r, c in coact.matrix.column(v).items()} for v in range(m)}


def _act(T: Tables, table, h: Vector, x: Vector) -> Vector:
    out = T.acc()
    for i, a in h.items():
        for v, b in x.items():
            _add(out, table[(i, v)], a * b)
    return _clean(out)


def is_module(act) -> bool:
    T = Tables(act.H)
    table = _action_table(act)
    for h, k, v in product(range(T.n), range(T.n), range(act.dim)):
        left = _act(T, table, T.multiply(_basis(h), _basis(k)), _basis(v))
        right = _act(T, table, _basis(h), _act(T, table, _basis(k), _basis(v)))
        if left != right:
            return False
    return all(_act(T, table, T.unit, _basis(v)) == {v: T.zero + 1} for v in range(act.dim))


def _coact(table, x: Vector, zero) -> Vector:
    out = defaultdict(lambda: zero)
    for v, a in x.items():
        _add(out, table[v], a)
    return _clean(out)


def _outer(x: Vector, y: Vector, zero) -> Vector:
    out = defaultdict(lambda: zero)
    for u, s in x.items():
        for v, t in y.items():
            out[(u, v)] += s * t
    return _clean(out)


def _module_algebra_laws(T: Tables, A: Tables, table) -> bool:
    for h in range(T.n):
        for a, b in product(range(A.n), repeat=2):
            left = _act(T, table, _basis(h), A.multiply(_basis(a), _basis(b)))
            right = A.acc()
            for (p, q), c in T.comult[h].items():
                _add(right, A.multiply(_act(T, table, _basis(p), _basis(a)), _act(T, table, _basis(q), _basis(b))), c)
            if left != _clean(right):
                return False
        if _act(T, table, _basis(h), A.unit) != _clean({u: c * T.counit[h] for u, c in A.unit.items()}):
            return False
    return True


def is_module_algebra(act) -> bool:
    """h |> (ab) = (h1 |> a)(h2 |> b) and h |> 1 = eps(h) 1 on the carrier algebra."""
    if not is_module(act):
        return False
    return _module_algebra_laws(Tables(act.H), Tables(act.carrier), _action_table(act))


def _module_coalgebra_laws(T: Tables, C: Tables, table) -> bool:
    for h, c in product(range(T.n), range(C.n)):
        image = _act(T, table, _basis(h), _basis(c))
        right = C.acc()
        for (p, q), a in T.comult[h].items():
            for (u, v), b in C.comult[c].items():
                _add(right, _outer(_act(T, table, _basis(p), _basis(u)), _act(T, table, _basis(q), _basis(v)), T.zero), a * b)
        if C.coproduct(image) != _clean(right):
            return False
        if C.eps(image) != T.counit[h] * C.counit[c]:
            return False
    return True


def is_module_coalgebra(act) -> bool:
    """Delta(h |> c) = (h1 |> c1) (x) (h2 |> c2) and eps(h |> c) = eps(h) eps(c)."""
    if not is_module(act):
        return False
    return _module_coalgebra_laws(Tables(act.H), Tables(act.carrier), _action_table(act))


def is_comodule(coact) -> bool:
    T = Tables(coact.H)
    table = _coaction_table(coact)
    for v in range(coact.dim):
        left, right = T.acc(), T.acc()
        for (h, w), c in table[v].items():
            for (p, q), d in T.comult[h].items():
                left[(p, q, w)] += c * d
            for (p, u), d in table[w].items():
                right[(h, p, u)] += c * d
        if _clean(left) != _clean(right):
            return False
        counit = T.acc()
        for (h, w), c in table[v].items():
            counit[w] += T.counit[h] * c
        if _clean(counit) != {v: T.zero + 1}:
            return False
    return True


def _comodule_algebra_laws(T: Tables, A: Tables, table) -> bool:
    for a, b in product(range(A.n), repeat=2):
        left = _coact(table, A.multiply(_basis(a), _basis(b)), T.zero)
        right = T.acc()
        for (g, x), c in table[a].items():
            for (k, y), d in table[b].items():
                _add(right, _outer(T.mult[(g, k)], A.mult[(x, y)], T.zero), c * d)
        if left != _clean(right):
            return False
    return _coact(table, A.unit, T.zero) == _outer(T.unit, A.unit, T.zero)


def is_comodule_algebra(coact) -> bool:
    """rho(ab) = a_(-1) b_(-1) (x) a_(0) b_(0) and rho(1) = 1 (x) 1."""
    if not is_comodule(coact):
        return False
    return _comodule_algebra_laws(Tables(coact.H), Tables(coact.carrier), _coaction_table(coact))


def _comodule_coalgebra_laws(T: Tables, C: Tables, table) -> bool:
    for c in range(C.n):
        left, right = T.acc(), T.acc()
        for (g, x), a in table[c].items():
            for (p, q), b in C.comult[x].items():
                left[(g, p, q)] += a * b
        for (i, j), a in C.comult[c].items():
            for (g, x), b in table[i].items():
                for (k, y), d in table[j].items():
                    for u, s in T.mult[(g, k)].items():
                        right[(u, x, y)] += a * b * d * s
        if _clean(left) != _clean(right):
            return False
        counit = T.acc()
        for (g, x), a in table[c].items():
            counit[g] += a * C.counit[x]
        if _clean(counit) != _clean({u: s * C.counit[c] for u, s in T.unit.items()}):
            return False
    return True


def is_comodule_coalgebra(coact) -> bool:
    """c_(-1) (x) c_(0)1 (x) c_(0)2 = c1_(-1) c2_(-1) (x) c1_(0) (x) c2_(0)
    and c_(-1) eps(c_(0)) = eps(c) 1."""
    if not is_comodule(coact):
        return False
    return _comodule_coalgebra_laws(Tables(coact.H), Tables(coact.carrier), _coaction_table(coact))


def _yetter_drinfeld_law(T: Tables, acting, coacting, dim: int) -> bool:
    for h, v in product(range(T.n), range(dim)):
        left, right = T.acc(), T.acc()
        for (p, q), c in T.comult[h].items():
            for (g, w), d in coacting[v].items():
                for u, s in T.multiply(_basis(p), _basis(g)).items():
                    for x, t in _act(T, acting, _basis(q), _basis(w)).items():
                        left[(u, x)] += c * d * s * t
            for w, d in _act(T, acting, _basis(p), _basis(v)).items():
                for (g, x), e in coacting[w].items():
                    for u, s in T.multiply(_basis(g), _basis(q)).items():
                        right[(u, x)] += c * d * e * s
        if _clean(left) != _clean(right):
            return False
    return True


def is_yetter_drinfeld(act, coact) -> bool:
    """h1 m_(-1) (x) h2 |> m_(0) = (h1 |> m)_(-1) h2 (x) (h1 |> m)_(0)."""
    if not (is_module(act) and is_comodule(coact)):
        return False
    return _yetter_drinfeld_law(Tables(act.H), _action_table(act), _coaction_table(coact), act.dim)


def is_radford_pair(A, act, coact) -> bool:
    """The five biproduct conditions on a bialgebra A, element by element.

    Like the matrix gate, this checks the compatibility laws only; whether
    act and coact are a module and a comodule is a separate question.
    """
    T = Tables(act.H)
    B = Tables(A)
    acting = _action_table(act)
    coacting = _coaction_table(coact)
    if not _comodule_algebra_laws(T, B, coacting):
        return False
    if not _module_coalgebra_laws(T, B, acting):
        return False
    for a, b in product(range(B.n), repeat=2):
        if B.eps(B.multiply(_basis(a), _basis(b))) != B.counit[a] * B.counit[b]:
            return False
    if B.eps(B.unit) != 1 or B.coproduct(B.unit) != _outer(B.unit, B.unit, B.zero):
        return False
    # Delta(ab) = a1 (a2_(-1) |> b1) (x) a2_(0) b2
    for a, b in product(range(B.n), repeat=2):
        right = B.acc()
        for (a1, a2), c in B.comult[a].items():
            for (b1, b2), d in B.comult[b].items():
                for (g, x), e in coacting[a2].items():
                    moved = B.multiply(_basis(a1), _act(T, acting, _basis(g), _basis(b1)))
                    _add(right, _outer(moved, B.mult[(x, b2)], B.zero), c * d * e)
        if B.coproduct(B.multiply(_basis(a), _basis(b))) != _clean(right):
            return False
    return _yetter_drinfeld_law(T, acting, coacting, B.n)


def is_quasitriangular(H, R) -> bool:
    """(eps (x) id)R = 1 = (id (x) eps)R, (Delta (x) id)R = R13 R23,
    (id (x) Delta)R = R13 R12 and Delta^cop(h) R = R Delta(h)."""
    T = Tables(H)
    n = T.n
    r = {divmod(i, n): c for i, c in R.element.column(0).items()}
    left, right = T.acc(), T.acc()
    for (i, j), c in r.items():
        _add(left, _basis(j), c * T.counit[i])
        _add(right, _basis(i), c * T.counit[j])
    if _clean(left) != T.unit or _clean(right) != T.unit:
        return False
    left, right = T.acc(), T.acc()
    for (i, j), c in r.items():
        for (p, q), d in T.comult[i].items():
            left[(p, q, j)] += c * d
    for ((i, j), c), ((k, l), d) in product(r.items(), repeat=2):
        for u, s in T.mult[(j, l)].items():
            right[(i, k, u)] += c * d * s
    if _clean(left) != _clean(right):
        return False
    left, right = T.acc(), T.acc()
    for (i, j), c in r.items():
        for (p, q), d in T.comult[j].items():
            left[(i, p, q)] += c * d
    for ((i, j), c), ((k, l), d) in product(r.items(), repeat=2):
        for u, s in T.mult[(i, k)].items():
            right[(u, l, j)] += c * d * s
    if _clean(left) != _clean(right):
        return False
    for h in range(n):
        left, right = T.acc(), T.acc()
        for (p, q), c in T.comult[h].items():
            for (i, j), d in r.items():
                _add(left, _outer(T.mult[(q, i)], T.mult[(p, j)], T.zero), c * d)
                _add(right, _outer(T.mult[(i, p)], T.mult[(j, q)], T.zero), c * d)
        if _clean(left) != _clean(right):
            return False
    return True
