"""
Check results and reports.

Every checker compares two linear maps and records a ``CheckResult``. On
failure the result carries a ``Witness``: the first domain basis tuple (in
flattening order) whose images differ, the output coordinate where they
differ, and the two values. A ``Report`` is an ordered list of results.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..utils.colors import OutputFormater as OF
from .exact import Matrix, Scalar, maps_equal, unflatten

Space = Sequence[Sequence[str]]

SCALARS: Space = ()


@dataclass(frozen=True)
class Witness:
    labels: Tuple[str, ...]
    coordinate: str
    left: Scalar
    right: Scalar
    column: int = 0
    row: int = 0

    def __str__(self):
        where = "(" + ", ".join(self.labels) + ")" if self.labels else "()"
        return f"{where} at {self.coordinate}: {self.left} vs {self.right}"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Optional[Witness] = None
    note: str = ""

    def __bool__(self):
        return self.passed


def coordinate_label(index: int, space: Space) -> str:
    if not space:
        return "k"
    parts = unflatten(index, [len(b) for b in space])
    return "⊗".join(basis[i] for basis, i in zip(space, parts))


def compare(name: str, left: Matrix, right: Matrix, domain: Space, codomain: Space) -> CheckResult:
    """Compare two maps domain -> codomain and name the first failing input."""
    outcome = maps_equal(left, right, order="column")
    if outcome.equal:
        return CheckResult(name, True)
    dims = [len(b) for b in domain]
    parts = unflatten(outcome.col, dims)
    labels = tuple(basis[i] for basis, i in zip(domain, parts))
    witness = Witness(
        labels,
        coordinate_label(outcome.row, codomain),
        outcome.left,
        outcome.right,
        column=outcome.col,
        row=outcome.row,
    )
    return CheckResult(name, False, witness)


def verdict(name: str, passed: bool, note: str = "") -> CheckResult:
    return CheckResult(name, bool(passed), None, note)


class Report:
    """Ordered collection of named check results."""

    def __init__(self, title: str = "", results: Iterable[CheckResult] = ()):
        self.title = title
        self.results: List[CheckResult] = list(results)

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for r in other.results:
            name = f"{prefix}{r.name}" if prefix else r.name
            self.results.append(CheckResult(name, r.passed, r.witness, r.note))
        return self

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def names(self) -> List[str]:
        return [r.name for r in self.results]

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(r.name == name for r in self.results)

    def verdict(self, name: str) -> bool:
        """Combined verdict of ``name`` and every result named ``name ...``."""
        group = [r for r in self.results if r.name == name or r.name.startswith(name + " ")]
        if not group:
            raise KeyError(name)
        return all(r.passed for r in group)

    def first_failure(self, name: str = "") -> Optional[CheckResult]:
        for r in self.results:
            if not r.passed and (not name or r.name == name or r.name.startswith(name + " ")):
                return r
        return None

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 2

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.results)

    def __len__(self):
        return len(self.results)

    def __bool__(self):
        return True

    def render(self, witness: bool = True, color: bool = False) -> str:
        lines = []
        if self.title:
            lines.append(f"== {self.title} ==")
        for r in self.results:
            tag = _tag(r.passed, color)
            line = f"{tag}  {r.name}"
            if r.note:
                line += f"  ({r.note})"
            if witness and r.witness is not None:
                w = r.witness
                line += f"  [witness: {w}]"
            lines.append(line)
        failed = len(self.failures)
        lines.append(f"-- {len(self.results) - failed} passed, {failed} failed")
        return "\n".join(lines)

    def __str__(self):
        return self.render()


def _tag(passed: bool, color: bool) -> str:
    if not color:
        return "PASS" if passed else "FAIL"
    return OF.PASS if passed else OF.FAIL
