#!/usr/bin/env python3
import argparse
import logging
import sys
import time
from typing import List, Optional, Sequence

from .. import __version__
from ..core.exceptions import ConstructionError, HomydError
from ..core.report import Report
from ..utils.colors import OutputFormater as OF
from ..utils.colors import fg, rs
from ..utils.config import (
    CATALOG_PARAMETERS,
    DEFAULT_FIELD,
    EXIT_FAILURE,
    EXIT_INTERRUPT,
    EXIT_OK,
    EXIT_USAGE,
    Config,
    env_color,
    env_log_level,
)
from ..utils.formats import EPILOG, FORMAT_GRAMMAR
from ..utils.logging_utils import LoggingContext
from ..utils.simple import logger

RESET = rs

COMMANDS = (
    "check",
    "construct",
    "antipode",
    "braiding-test",
    "ybe-test",
    "quasitriangular-check",
    "catalog",
)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--witness", action="store_true", help="Print counterexample tuples for failing checks")
    common.add_argument("--color", action="store_true", help="Color PASS/FAIL tags")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging, progress and timing on stderr")
    common.add_argument("--log-file", help="Also write the log to this file")
    return common


def CliInit() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="homyd",
        description="Exact-arithmetic workbench for Hom-Hopf algebras, their Yetter-Drinfeld modules and Radford biproducts",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-V", "--version", action="store_true", help="Show software version and exit.")
    sub = parser.add_subparsers(dest="command", metavar="command")

    check = sub.add_parser(
        "check",
        parents=[common],
        help="Run the axiom checks on every block of a structure file",
        epilog=FORMAT_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    check.add_argument("file", help="Structure document (FORMAT 1)")
    check.add_argument("--block", help="Only check the blocks with this name")

    construct = sub.add_parser("construct", parents=[common], help="Build a smash, cosmash, T-smash or biproduct structure")
    construct.add_argument("kind", choices=["smash", "cosmash", "tsmash", "biproduct"])
    construct.add_argument("file", help="Structure document holding the inputs")
    construct.add_argument("--carrier", required=True, help="Block name of A (or C)")
    construct.add_argument("--over", required=True, help="Block name of the Hom-bialgebra H")
    construct.add_argument("--action", help="ACTION block name (default: the carrier's name)")
    construct.add_argument("--coaction", help="COACTION block name (default: the carrier's name)")
    construct.add_argument("--tmap", help="TMAP block name for tsmash (default: built from the coaction)")
    construct.add_argument("--name", help="Block name of the result (default: the construction kind)")
    construct.add_argument("--emit", help="Write the constructed structure to this file")

    antipode = sub.add_parser("antipode", parents=[common], help="Print and check the antipode of HOPF blocks")
    antipode.add_argument("file")
    antipode.add_argument("--block", help="Only this HOPF block")

    for name, text in (
        ("braiding-test", "Associator, braiding, inverse, pentagon and hexagon checks on YD modules"),
        ("ybe-test", "Twist compatibility of tau and the Hom-Yang-Baxter equation on YD modules"),
    ):
        test = sub.add_parser(name, parents=[common], help=text)
        test.add_argument("file")
        test.add_argument("--modules", nargs="+", metavar="NAME", help="Up to three ACTION/COACTION pair names")

    qt = sub.add_parser("quasitriangular-check", parents=[common], help="Check RMATRIX and FORM blocks")
    qt.add_argument("file")

    catalog = sub.add_parser("catalog", parents=[common], help="Built-in examples")
    catalog.add_argument("action", choices=["list", "show", "check", "export"])
    catalog.add_argument("ids", nargs="*", metavar="ID", help="Catalog entry id(s)")
    catalog.add_argument("--field", default=DEFAULT_FIELD, help="Q or GF p (default: %(default)s)")
    catalog.add_argument("--param", action="append", help="Value of k or l; repeat to sweep")
    catalog.add_argument("--emit", help="Output file for export")
    return parser


class CommandMapper:
    """Dispatch parsed arguments to the handler of their subcommand."""

    def __init__(self, args, parser):
        self.args = args
        self.parser = parser
        self.config = Config().update(
            witness=getattr(args, "witness", False),
            color=getattr(args, "color", False) or env_color(),
            verbose=getattr(args, "verbose", False),
        )

    # output

    def emit(self, report: Report):
        print(report.render(witness=self.config.get("witness"), color=self.config.get("color")))
        print()

    def note(self, text: str):
        print(text, file=sys.stderr)

    def load(self):
        from ..core.document import load
        from ..utils.file_utils import read_document

        return load(read_document(self.args.file))

    # handlers

    def handle_check(self) -> List[Report]:
        from ..core.actions import check_action_axioms, check_coaction_axioms, check_hyd_prime, check_hyd
        from ..core.constructions import check_t_conditions
        from ..core.quasitriangular import check_cobraided_equivalence, check_quasitriangular
        from ..core.structures import check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, check_hom_hopf

        space = self.load()
        structure_checks = {
            "ALGEBRA": check_hom_algebra,
            "COALGEBRA": check_hom_coalgebra,
            "BIALGEBRA": check_hom_bialgebra,
            "HOPF": check_hom_hopf,
        }
        reports = []
        for kind, name, value in space.items():
            if self.args.block and name != self.args.block:
                continue
            report = Report(f"{kind} {name}")
            if kind in structure_checks:
                report.extend(structure_checks[kind](value))
            elif kind == "ACTION":
                for axioms in _representation_kinds(value, "module"):
                    _merge(report, check_action_axioms(value, axioms))
            elif kind == "COACTION":
                for axioms in _representation_kinds(value, "comodule"):
                    _merge(report, check_coaction_axioms(value, axioms))
            elif kind == "RMATRIX":
                report.extend(check_quasitriangular(value.H, value))
            elif kind == "FORM":
                report.extend(check_cobraided_equivalence(value.H, value))
            else:
                report.extend(check_t_conditions(value.C, value.H, value))
            reports.append(report)
        for name, module in space.modules().items():
            if self.args.block and name != self.args.block:
                continue
            report = Report(f"YD module {name}")
            report.extend(check_hyd(module, include_axioms=False))
            if hasattr(module.H, "antipode"):
                report.extend(check_hyd_prime(module))
            reports.append(report)
        if not reports:
            raise HomydError("nothing to check")
        return reports

    def handle_construct(self) -> List[Report]:
        from ..core import constructions as cons
        from ..core.document import export_text
        from ..core.structures import HomHopf, check_antipode

        args = self.args
        space = self.load()
        A, H = space.get(args.carrier), space.get(args.over)
        name = args.name or args.kind
        logger.debug("construct %s of %s over %s", args.kind, args.carrier, args.over)
        if args.kind == "smash":
            result = cons.smash_product(A, H, _lookup(space.actions, args.action or args.carrier, "ACTION"))
        elif args.kind == "cosmash":
            result = cons.smash_coproduct(A, H, _lookup(space.coactions, args.coaction or args.carrier, "COACTION"))
        elif args.kind == "tsmash":
            if args.tmap:
                T = _lookup(space.tmaps, args.tmap, "TMAP")
            else:
                coact = _lookup(space.coactions, args.coaction or args.carrier, "COACTION")
                T = cons.coaction_twist_map(A, H, coact)
            result = cons.t_smash_coproduct(A, H, T)
        else:
            act = _lookup(space.actions, args.action or args.carrier, "ACTION")
            coact = _lookup(space.coactions, args.coaction or args.carrier, "COACTION")
            result = cons.radford_biproduct(A, H, act, coact)
            if isinstance(A, HomHopf) and isinstance(H, HomHopf):
                S = cons.biproduct_antipode(A, H, act, coact, A.antipode, H.antipode)
                hopf = HomHopf.from_parts(result.algebra, result.coalgebra, S, checked=False, name=name)
                hopf.provenance = result.provenance
                result = hopf
        reports = [result.provenance]
        if isinstance(result, HomHopf):
            reports.append(check_antipode(result))
        if args.emit:
            from ..utils.file_utils import write_document

            path = write_document(args.emit, export_text({name: result}, space.field))
            self.note(f"{OF.OK if self.config.get('color') else '[ok]'} wrote {path}")
        return reports

    def handle_antipode(self) -> List[Report]:
        from ..core.structures import check_antipode

        space = self.load()
        reports = []
        for kind, name, value in space.items():
            if kind != "HOPF" or (self.args.block and name != self.args.block):
                continue
            print(f"antipode of {name}")
            for label in value.basis:
                image = value.describe(value.antipode.column(value.index(label)))
                print(f"  S({label}) = {_combination(image)}")
            print()
            reports.append(check_antipode(value))
        if not reports:
            raise HomydError("no HOPF block to report on")
        return reports

    def _modules(self):
        space = self.load()
        modules = space.modules()
        names = self.args.modules or list(modules)
        if not names:
            raise HomydError("the document holds no ACTION/COACTION pair")
        picked = [space.module(n) for n in names[:3]]
        while len(picked) < 3:
            picked.append(picked[len(picked) - 1])
        return picked

    def handle_braiding_test(self) -> List[Report]:
        from ..core.braided import check_braided_category

        M, N, P = self._modules()
        return [check_braided_category(M, N, P)]

    def handle_ybe_test(self) -> List[Report]:
        from ..core.braided import check_hybe

        M, N, P = self._modules()
        return [check_hybe(M, N, P)]

    def handle_quasitriangular_check(self) -> List[Report]:
        from ..core.quasitriangular import (
            check_cobraided_equivalence,
            check_quasitriangular,
            check_quasitriangular_equivalence,
        )

        space = self.load()
        reports = []
        for name, R in space.rmatrices.items():
            report = Report(f"RMATRIX {name}")
            report.extend(check_quasitriangular(R.H, R))
            report.extend(check_quasitriangular_equivalence(R.H, R), prefix="induced coaction: ")
            reports.append(report)
        for name, sigma in space.forms.items():
            report = Report(f"FORM {name}")
            report.extend(check_cobraided_equivalence(sigma.H, sigma))
            reports.append(report)
        if not reports:
            raise HomydError("no RMATRIX or FORM block to check")
        return reports

    def handle_catalog(self) -> List[Report]:
        from ..core import catalog
        from ..core.exact import field_from_name

        args = self.args
        field = field_from_name(args.field)
        if args.action == "list":
            for entry in catalog.CATALOG.values():
                param = f"[{entry.parameter}]" if entry.parameterized else ""
                print(f"{entry.id:<24}{param:<5}{entry.summary}")
            return []
        if args.action in ("show", "export"):
            if len(args.ids) != 1:
                raise HomydError(f"catalog {args.action} takes exactly one id")
            params = args.param or [None]
            instance = catalog.entry(args.ids[0]).instantiate(field, params[0])
            from ..core.document import export_text

            text = export_text(instance.structures, field)
            if args.action == "show":
                print(f"# {instance.title}: {instance.entry.summary}")
                for note in instance.entry.errata:
                    print(f"# erratum: {note}")
                print(text, end="")
            elif args.emit:
                from ..utils.file_utils import write_document

                path = write_document(args.emit, text)
                self.note(f"wrote {path}")
            else:
                print(text, end="")
            return []
        grid = args.param or [
            p for p in CATALOG_PARAMETERS["Q" if field.characteristic == 0 else "GF"] if field(p)
        ]
        instances = catalog.instances(field, grid, args.ids or None)
        return self._run_batch(instances)

    def _run_batch(self, instances) -> List[Report]:
        reports = []
        if self.config.get("verbose"):
            from rich.console import Console
            from rich.progress import Progress

            with Progress(console=Console(stderr=True)) as progress:
                task = progress.add_task("[yellow]Checking catalog...", total=len(instances))
                for instance in instances:
                    reports.append(instance.check())
                    progress.update(task, advance=1)
        else:
            reports = [instance.check() for instance in instances]
        return reports

    def display_version(self):
        print(f"{fg.BLUE}homyd: V-{fg.BGREEN}{__version__}{RESET}" if self.config.get("color") else f"homyd {__version__}")

    def get_method(self):
        method_mapper = {
            "check": self.handle_check,
            "construct": self.handle_construct,
            "antipode": self.handle_antipode,
            "braiding-test": self.handle_braiding_test,
            "ybe-test": self.handle_ybe_test,
            "quasitriangular-check": self.handle_quasitriangular_check,
            "catalog": self.handle_catalog,
        }
        return method_mapper.get(self.args.command)

    def run(self) -> int:
        if self.args.version:
            self.display_version()
            return EXIT_OK
        method = self.get_method()
        if method is None:
            self.parser.print_help(sys.stderr)
            return EXIT_USAGE
        started = time.perf_counter()
        try:
            reports = method()
        except ConstructionError as e:
            if e.report is not None:
                self.emit(e.report)
            self.note(f"{OF.ERR if self.config.get('color') else 'error:'} {e}")
            return EXIT_FAILURE
        except HomydError as e:
            self.note(f"{OF.ERR if self.config.get('color') else 'error:'} {e}")
            return EXIT_USAGE
        for report in reports:
            self.emit(report)
        if self.config.get("verbose"):
            # timing goes after the stable section, on stderr
            self.note(f"elapsed {time.perf_counter() - started:.3f}s")
        return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE


def _lookup(table, name, kind):
    if name not in table:
        raise HomydError(f"no {kind} block named {name!r}")
    return table[name]


def _representation_kinds(rep, base: str) -> List[str]:
    """Every axiom set the carrier supports; a bialgebra carrier gets both."""
    carrier = rep.carrier
    if carrier is None:
        return [base]
    kinds = []
    if hasattr(carrier, "mu"):
        kinds.append(f"{base}-algebra")
    if hasattr(carrier, "delta"):
        kinds.append(f"{base}-coalgebra")
    return kinds


def _merge(report: Report, other: Report):
    """Add the results of ``other`` not already in ``report``."""
    for result in other:
        if result.name not in report:
            report.add(result)


def _combination(image) -> str:
    if not image:
        return "0"
    return " + ".join(f"{c}·{label}" for label, c in image.items())


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = CliInit()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors; the workbench reserves 2 for FAIL verdicts
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        level = logging.DEBUG if getattr(args, "verbose", False) else env_log_level()
        with LoggingContext(level=level, log_file=getattr(args, "log_file", None), color=getattr(args, "color", False)):
            return CommandMapper(args, parser).run()
    except HomydError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("\nQuit!", file=sys.stderr)
        return EXIT_INTERRUPT


if __name__ == "__main__":
    sys.exit(main())
