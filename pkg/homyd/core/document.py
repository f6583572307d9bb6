"""
Structure documents: the line-oriented FORMAT 1 text format.

``parse`` reads text into a ``StructureDocument`` (syntax, duplicate and
range checks, line-numbered ``DocumentError``); ``resolve`` turns the
blocks into unchecked structures; ``export`` goes the other way. The
printer is canonical: blocks in document order, headers first, stanzas
in keyword then index order, zero rows omitted and scalars in lowest
terms.
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from ..utils.config import FORMAT_VERSION
from ..utils.formats import (
    BLOCK_KINDS,
    FORMAT_HEADER,
    HEADER_STANZAS,
    KIND_HEADERS,
    KIND_STANZAS,
    STANZA_ORDER,
    STANZAS,
    STRUCTURE_KINDS,
)
from ..utils.simple import logger
from .actions import ActionMap, CoactionMap, YDModule
from .constructions import TwistMap
from .exact import QQ, Field, Matrix, Scalar, field_from_name
from .exceptions import DocumentError, FieldError, HomydError
from .quasitriangular import CobraidingForm, RMatrix
from .structures import HomAlgebra, HomBialgebra, HomCoalgebra, HomHopf

Key = Tuple  # (keyword, *indices)


@dataclass(eq=False)
class Block:
    kind: str
    name: str
    dim: Optional[int] = None
    basis: Optional[Tuple[str, ...]] = None
    over: Optional[str] = None
    carrier: Optional[str] = None
    source: Optional[str] = None
    rows: Dict[Key, Tuple[Scalar, ...]] = dataclass_field(default_factory=dict)
    explicit_twist: bool = False
    line: int = 0
    lines: Dict[object, int] = dataclass_field(default_factory=dict)

    def entries(self) -> Dict[Key, Tuple[Scalar, ...]]:
        """Nonzero rows in canonical order."""
        return _canonical({k: v for k, v in self.rows.items() if any(v)})

    def where(self, key) -> Optional[int]:
        return self.lines.get(key, self.line or None)

    def _signature(self):
        return (
            self.kind, self.name, self.dim, self.basis, self.over, self.carrier,
            self.source, self.explicit_twist, self.entries(),
        )

    def __eq__(self, other):
        if not isinstance(other, Block):
            return NotImplemented
        return self._signature() == other._signature()

    __hash__ = None


def _canonical(rows: Mapping[Key, Tuple[Scalar, ...]]) -> Dict[Key, Tuple[Scalar, ...]]:
    return dict(sorted(rows.items(), key=lambda kv: (STANZA_ORDER.index(kv[0][0]), kv[0][1:])))


@dataclass
class StructureDocument:
    field: Field = QQ
    blocks: List[Block] = dataclass_field(default_factory=list)

    def block(self, kind: str, name: str) -> Block:
        for b in self.blocks:
            if b.kind == kind and b.name == name:
                return b
        raise DocumentError(f"no {kind} block named {name!r}")

    def dumps(self) -> str:
        return dumps(self)

    def resolve(self) -> "Workspace":
        return resolve(self)


# parsing


def _int(token: str, what: str, line: int) -> int:
    if not token.isdigit():
        raise DocumentError(f"{what} must be a nonnegative integer, got {token!r}", line)
    return int(token)


def _count(spec, dims: Mapping[str, int]) -> Optional[int]:
    if isinstance(spec, int):
        return spec
    if spec == "nm":
        if "n" not in dims or "m" not in dims:
            return None
        return dims["n"] * dims["m"]
    return dims.get(spec)


def _check_row(block: Block, key: Key, values, dims: Mapping[str, int], line: Optional[int]):
    """Range and arity of one stanza against whatever dimensions are known."""
    keyword, indices = key[0], key[1:]
    spaces, arity = STANZAS[keyword]
    for space, index in zip(spaces, indices):
        bound = dims.get(space)
        if bound is not None and index >= bound:
            raise DocumentError(f"{keyword} index {index} out of range (dimension {bound})", line)
    expected = _count(arity, dims)
    if expected is not None and len(values) != expected:
        raise DocumentError(f"{keyword} takes {expected} scalar(s), got {len(values)}", line)


def _field_line(words: List[str], line: int) -> Field:
    if len(words) < 2:
        raise DocumentError("FIELD needs Q or GF p", line)
    try:
        return field_from_name(" ".join(words[1:]))
    except FieldError as e:
        raise DocumentError(str(e), line) from None


def _header(block: Block, keyword: str, words: List[str], line: int):
    if keyword not in KIND_HEADERS[block.kind]:
        raise DocumentError(f"{keyword} is not allowed in a {block.kind} block", line)
    if keyword in block.lines:
        raise DocumentError(f"duplicate {keyword} in {block.kind} {block.name}", line)
    block.lines[keyword] = line
    args = words[1:]
    if keyword == "BASIS":
        if not args:
            raise DocumentError("BASIS needs at least one label", line)
        if len(set(args)) != len(args):
            raise DocumentError("repeated basis label", line)
        if block.dim is not None and len(args) != block.dim:
            raise DocumentError(f"BASIS has {len(args)} labels but DIM is {block.dim}", line)
        block.basis = tuple(args)
        return
    if len(args) != 1:
        raise DocumentError(f"{keyword} takes exactly one value", line)
    if keyword == "DIM":
        dim = _int(args[0], "DIM", line)
        if dim == 0:
            raise DocumentError("DIM must be positive", line)
        if block.basis is not None and len(block.basis) != dim:
            raise DocumentError(f"BASIS has {len(block.basis)} labels but DIM is {dim}", line)
        block.dim = dim
    else:
        setattr(block, keyword.lower(), args[0])


def _stanza(block: Block, keyword: str, text: str, line: int, field: Field):
    if keyword not in KIND_STANZAS[block.kind]:
        raise DocumentError(f"{keyword} is not allowed in a {block.kind} block", line)
    head, colon, tail = text.partition(":")
    if not colon:
        raise DocumentError(f"{keyword} stanza needs ':' before its scalars", line)
    spaces, _ = STANZAS[keyword]
    tokens = head.split()[1:]
    if len(tokens) != len(spaces):
        raise DocumentError(f"{keyword} takes {len(spaces)} index(es), got {len(tokens)}", line)
    indices = tuple(_int(t, "index", line) for t in tokens)
    try:
        values = tuple(field.parse(t) for t in tail.split())
    except FieldError as e:
        raise DocumentError(str(e), line) from None
    key = (keyword,) + indices
    if key in block.rows:
        raise DocumentError(f"duplicate entry {' '.join(map(str, key))} in {block.kind} {block.name}", line)
    own = block.dim if block.dim is not None else (len(block.basis) if block.basis else None)
    dims = {"m": own} if own is not None and block.kind not in ("RMATRIX", "FORM", "TMAP") else {}
    _check_row(block, key, values, dims, line)
    block.rows[key] = values
    block.lines[key] = line
    if keyword == "TWIST":
        block.explicit_twist = True


def parse(text: str) -> StructureDocument:
    """Read a FORMAT 1 document."""
    version_seen = False
    field: Optional[Field] = None
    blocks: List[Block] = []
    names = set()
    current: Optional[Block] = None
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        keyword = words[0]
        if not version_seen:
            if keyword != FORMAT_HEADER or len(words) != 2:
                raise DocumentError(f"expected '{FORMAT_HEADER} {FORMAT_VERSION}' header", number)
            if words[1] != str(FORMAT_VERSION):
                raise DocumentError(f"unsupported format version {words[1]}", number)
            version_seen = True
        elif field is None:
            if keyword != "FIELD":
                raise DocumentError("expected a FIELD line after the header", number)
            field = _field_line(words, number)
        elif current is None:
            if keyword not in BLOCK_KINDS:
                raise DocumentError(f"expected a block header, got {keyword!r}", number)
            if len(words) != 2:
                raise DocumentError("a block header is KIND NAME", number)
            # structure names share one namespace: OVER and CARRIER refer to them
            scope = "STRUCTURE" if keyword in STRUCTURE_KINDS else keyword
            if (scope, words[1]) in names:
                raise DocumentError(f"duplicate block name {words[1]!r}", number)
            names.add((scope, words[1]))
            current = Block(keyword, words[1], line=number)
        elif keyword == "END":
            if len(words) != 1:
                raise DocumentError("END takes no arguments", number)
            blocks.append(current)
            current = None
        elif keyword in HEADER_STANZAS:
            _header(current, keyword, words, number)
        elif keyword in STANZAS:
            _stanza(current, keyword, line, number, field)
        else:
            raise DocumentError(f"unknown stanza {keyword!r}", number)
    if current is not None:
        raise DocumentError(f"{current.kind} {current.name} is not closed by END", current.line)
    if not version_seen:
        raise DocumentError(f"missing '{FORMAT_HEADER} {FORMAT_VERSION}' header")
    if field is None:
        raise DocumentError("missing FIELD line")
    logger.debug("parsed %d block(s) over %s", len(blocks), field)
    return StructureDocument(field, blocks)


# printing


def _format_block(block: Block, field: Field) -> List[str]:
    out = [f"{block.kind} {block.name}"]
    if block.dim is not None:
        out.append(f"DIM {block.dim}")
    if block.basis is not None:
        out.append("BASIS " + " ".join(block.basis))
    for keyword in ("OVER", "CARRIER", "SOURCE"):
        value = getattr(block, keyword.lower())
        if value is not None:
            out.append(f"{keyword} {value}")
    entries = block.entries()
    if block.explicit_twist and not any(k[0] == "TWIST" for k in entries):
        # an all-zero twist must stay distinguishable from the default identity
        zero_row = block.rows.get(("TWIST", 0))
        if zero_row is None:
            zero_row = (field.zero,) * (block.dim or len(block.basis or ()) or 1)
        entries = _canonical({**entries, ("TWIST", 0): zero_row})
    for key, values in entries.items():
        head = " ".join([key[0]] + [str(i) for i in key[1:]])
        out.append(f"{head} : " + " ".join(field.format(v) for v in values))
    out.append("END")
    return out


def dumps(document: StructureDocument) -> str:
    field = document.field
    lines = [f"{FORMAT_HEADER} {FORMAT_VERSION}"]
    lines.append("FIELD Q" if field.characteristic == 0 else f"FIELD GF {field.characteristic}")
    for block in document.blocks:
        lines.append("")
        lines.extend(_format_block(block, field))
    return "\n".join(lines) + "\n"


# resolving blocks into structures


class Workspace:
    """The structures of a document, by name and in document order."""

    def __init__(self, field: Field):
        self.field = field
        self.structures: Dict[str, HomAlgebra] = {}
        self.actions: Dict[str, ActionMap] = {}
        self.coactions: Dict[str, CoactionMap] = {}
        self.rmatrices: Dict[str, RMatrix] = {}
        self.forms: Dict[str, CobraidingForm] = {}
        self.tmaps: Dict[str, TwistMap] = {}
        self.order: List[Tuple[str, str]] = []

    def _table(self, kind: str) -> Dict[str, object]:
        if kind in STRUCTURE_KINDS:
            return self.structures
        return {
            "ACTION": self.actions,
            "COACTION": self.coactions,
            "RMATRIX": self.rmatrices,
            "FORM": self.forms,
            "TMAP": self.tmaps,
        }[kind]

    def items(self) -> Iterator[Tuple[str, str, object]]:
        """(kind, name, object) in document order."""
        for kind, name in self.order:
            yield kind, name, self._table(kind)[name]

    def get(self, name: str):
        try:
            return self.structures[name]
        except KeyError:
            raise DocumentError(f"no structure block named {name!r}") from None

    def modules(self) -> Dict[str, YDModule]:
        """ACTION/COACTION pairs with one name over one Hom-bialgebra."""
        out = {}
        for name, act in self.actions.items():
            coact = self.coactions.get(name)
            if coact is not None and coact.H is act.H:
                out[name] = YDModule(act, coact, name)
        return out

    def module(self, name: str) -> YDModule:
        modules = self.modules()
        if name not in modules:
            raise DocumentError(f"no ACTION/COACTION pair named {name!r}")
        return modules[name]


def _rows_of(block: Block, keyword: str):
    return [(key, values) for key, values in block.rows.items() if key[0] == keyword]


def _validate_rows(block: Block, dims: Mapping[str, int]):
    for key, values in block.rows.items():
        _check_row(block, key, values, dims, block.where(key))


def _columns(block: Block, keyword: str, rows: int, cols: int, field: Field, column_of) -> Matrix:
    store = {}
    for key, values in _rows_of(block, keyword):
        store[column_of(key[1:])] = dict(enumerate(values))
    return Matrix(rows, cols, field, store)


def _space(block: Block) -> Tuple[int, Tuple[str, ...]]:
    if block.dim is None and block.basis is None:
        raise DocumentError(f"{block.kind} {block.name} needs DIM or BASIS", block.line)
    dim = block.dim if block.dim is not None else len(block.basis)
    basis = block.basis or tuple(f"e{i}" for i in range(dim))
    return dim, basis


def _twist(block: Block, dim: int, field: Field) -> Optional[Matrix]:
    if not block.explicit_twist:
        return None
    return _columns(block, "TWIST", dim, dim, field, lambda ix: ix[0])


def _structure(block: Block, field: Field):
    m, basis = _space(block)
    _validate_rows(block, {"m": m})
    twist = _twist(block, m, field)
    kind = block.kind
    parts = {}
    if kind != "COALGEBRA":
        parts["mult"] = _columns(block, "MULT", m, m * m, field, lambda ix: ix[0] * m + ix[1])
        parts["unit"] = list(block.rows.get(("UNIT",), (field.zero,) * m))
    if kind != "ALGEBRA":
        comult = {}
        for key, values in _rows_of(block, "COMULT"):
            i, j, k = key[1:]
            comult[(j * m + k, i)] = values[0]
        parts["comult"] = Matrix.from_entries(m * m, m, field, comult)
        parts["counit"] = list(block.rows.get(("COUNIT",), (field.zero,) * m))
    if kind == "ALGEBRA":
        return HomAlgebra.unchecked(basis, parts["mult"], parts["unit"], twist, field, block.name)
    if kind == "COALGEBRA":
        return HomCoalgebra.unchecked(basis, parts["comult"], parts["counit"], twist, field, block.name)
    if kind == "BIALGEBRA":
        return HomBialgebra.unchecked(
            basis, parts["mult"], parts["unit"], parts["comult"], parts["counit"], twist, field, block.name
        )
    antipode = _columns(block, "ANTIPODE", m, m, field, lambda ix: ix[0])
    return HomHopf.unchecked(
        basis, parts["mult"], parts["unit"], parts["comult"], parts["counit"], antipode, twist, field, block.name
    )


def _over(block: Block, space: Workspace) -> HomBialgebra:
    if block.over is None:
        raise DocumentError(f"{block.kind} {block.name} needs OVER", block.line)
    H = space.structures.get(block.over)
    if not isinstance(H, HomBialgebra):
        raise DocumentError(f"OVER {block.over} is not a BIALGEBRA or HOPF block", block.where("OVER"))
    return H


def _named_structure(block: Block, space: Workspace, keyword: str):
    name = getattr(block, keyword.lower())
    if name is None:
        return None
    if name not in space.structures:
        raise DocumentError(f"{keyword} {name} names no structure block", block.where(keyword))
    return space.structures[name]


def _representation(block: Block, space: Workspace, field: Field):
    H = _over(block, space)
    n = H.dim
    carrier = _named_structure(block, space, "CARRIER")
    if carrier is not None:
        m, basis = carrier.dim, None
        if block.dim is not None and block.dim != m:
            raise DocumentError(f"DIM {block.dim} differs from the carrier's {m}", block.where("DIM"))
    else:
        m, basis = _space(block)
    _validate_rows(block, {"m": m, "n": n})
    twist = _twist(block, m, field)
    if block.kind == "ACTION":
        matrix = _columns(block, "ACT", m, n * m, field, lambda ix: ix[0] * m + ix[1])
        return ActionMap(H, matrix, basis, twist, carrier, block.name)
    matrix = _columns(block, "COACT", n * m, m, field, lambda ix: ix[0])
    return CoactionMap(H, matrix, basis, twist, carrier, block.name)


def _pairing(block: Block, space: Workspace, field: Field):
    H = _over(block, space)
    n = H.dim
    _validate_rows(block, {"n": n})
    values = [[field.zero] * n for _ in range(n)]
    for key, row in _rows_of(block, "ENTRY"):
        values[key[1]][key[2]] = row[0]
    if block.kind == "FORM":
        return CobraidingForm(H, values)
    return RMatrix(H, [v for row in values for v in row])


def _tmap(block: Block, space: Workspace, field: Field) -> TwistMap:
    H = _over(block, space)
    C = _named_structure(block, space, "SOURCE")
    if C is None or not hasattr(C, "delta"):
        raise DocumentError(f"TMAP {block.name} needs SOURCE naming a coalgebra", block.where("SOURCE"))
    n, m = H.dim, C.dim
    _validate_rows(block, {"m": m, "n": n})
    matrix = _columns(block, "T", n * m, m * n, field, lambda ix: ix[0] * n + ix[1])
    return TwistMap(C, H, matrix, block.name)


def resolve(document: StructureDocument) -> Workspace:
    """Build every block's structure, unchecked, structures first."""
    space = Workspace(document.field)
    field = document.field
    ordered = sorted(document.blocks, key=lambda b: 0 if b.kind in STRUCTURE_KINDS else 1)
    for block in ordered:
        try:
            if block.kind in STRUCTURE_KINDS:
                value = _structure(block, field)
            elif block.kind in ("ACTION", "COACTION"):
                value = _representation(block, space, field)
            elif block.kind in ("RMATRIX", "FORM"):
                value = _pairing(block, space, field)
            else:
                value = _tmap(block, space, field)
        except DocumentError:
            raise
        except HomydError as e:
            raise DocumentError(f"{block.kind} {block.name}: {e}", block.line) from e
        space._table(block.kind)[block.name] = value
    space.order = [(b.kind, b.name) for b in document.blocks]
    return space


def load(text: str) -> Workspace:
    return resolve(parse(text))


# exporting structures


def _kind_of(value) -> Optional[str]:
    for cls, kind in ((HomHopf, "HOPF"), (HomBialgebra, "BIALGEBRA"), (HomAlgebra, "ALGEBRA"), (HomCoalgebra, "COALGEBRA")):
        if isinstance(value, cls):
            return kind
    return None


def _column_rows(matrix: Matrix, keyword: str, index_of) -> Dict[Key, Tuple[Scalar, ...]]:
    rows = {}
    zero = matrix.field.zero
    for j in range(matrix.cols):
        column = matrix.column(j)
        if column:
            rows[(keyword,) + index_of(j)] = tuple(column.get(i, zero) for i in range(matrix.rows))
    return rows


def _twist_rows(block: Block, twist: Matrix):
    if twist.is_identity():
        return
    block.explicit_twist = True
    block.rows.update(_column_rows(twist, "TWIST", lambda j: (j,)))


def _structure_block(kind: str, name: str, S) -> Block:
    m = S.dim
    block = Block(kind, name, dim=m, basis=S.basis)
    if hasattr(S, "mu"):
        block.rows.update(_column_rows(S.mu, "MULT", lambda j: divmod(j, m)))
        block.rows[("UNIT",)] = tuple(S.unit.column(0).get(i, S.field.zero) for i in range(m))
    if hasattr(S, "delta"):
        for r, i, v in S.delta.nonzero():
            block.rows[("COMULT", i) + divmod(r, m)] = (v,)
        block.rows[("COUNIT",)] = tuple(S.counit[0, i] for i in range(m))
    _twist_rows(block, S.twist)
    if kind == "HOPF":
        block.rows.update(_column_rows(S.antipode, "ANTIPODE", lambda j: (j,)))
    return block


class _Names:
    def __init__(self, items: Mapping[str, object]):
        self.items = items

    def of(self, value, what: str) -> str:
        for name, v in self.items.items():
            if v is value:
                return name
        for name, v in self.items.items():
            if _kind_of(v) and _kind_of(v) == _kind_of(value) and v == value:
                return name
        raise DocumentError(f"{what} must be exported together with its dependants")

    def find(self, value) -> Optional[str]:
        try:
            return self.of(value, "")
        except DocumentError:
            return None


def _representation_block(kind: str, name: str, rep, names: _Names) -> Block:
    m, n = rep.dim, rep.H.dim
    carrier = names.find(rep.carrier) if rep.carrier is not None else None
    block = Block(kind, carrier or name, over=names.of(rep.H, "the Hom-bialgebra of a representation"))
    if carrier is not None:
        block.carrier = carrier
    else:
        block.dim, block.basis = m, rep.basis
        _twist_rows(block, rep.twist)
    if kind == "ACTION":
        block.rows.update(_column_rows(rep.matrix, "ACT", lambda j: divmod(j, m)))
    else:
        block.rows.update(_column_rows(rep.matrix, "COACT", lambda j: (j,)))
    return block


def export(items: Mapping[str, object], field: Field) -> StructureDocument:
    """A document holding the given structures under the given names.

    Representations are named after their carrier when it is exported
    too; bundles and other composite values are skipped.
    """
    names = _Names(items)
    blocks: List[Block] = []
    for name, value in items.items():
        kind = _kind_of(value)
        if kind is not None:
            blocks.append(_structure_block(kind, name, value))
        elif isinstance(value, ActionMap):
            blocks.append(_representation_block("ACTION", name, value, names))
        elif isinstance(value, CoactionMap):
            blocks.append(_representation_block("COACTION", name, value, names))
        elif isinstance(value, YDModule):
            blocks.append(_representation_block("ACTION", name, value.action, names))
            blocks.append(_representation_block("COACTION", name, value.coaction, names))
        elif isinstance(value, (RMatrix, CobraidingForm)):
            n = value.H.dim
            kind = "RMATRIX" if isinstance(value, RMatrix) else "FORM"
            block = Block(kind, name, over=names.of(value.H, "the Hom-bialgebra of an R-matrix or form"))
            for i in range(n):
                for j in range(n):
                    c = value.element[i * n + j, 0] if kind == "RMATRIX" else value.matrix[i, j]
                    block.rows[("ENTRY", i, j)] = (c,)
            blocks.append(block)
        elif isinstance(value, TwistMap):
            n = value.H.dim
            block = Block(
                "TMAP", name,
                over=names.of(value.H, "the Hom-bialgebra of a twist map"),
                source=names.of(value.C, "the coalgebra of a twist map"),
            )
            block.rows.update(_column_rows(value.matrix, "T", lambda j: divmod(j, n)))
            blocks.append(block)
        else:
            logger.debug("export skips %s (%s)", name, type(value).__name__)
    return StructureDocument(field, blocks)


def export_text(items: Mapping[str, object], field: Field) -> str:
    return dumps(export(items, field))
