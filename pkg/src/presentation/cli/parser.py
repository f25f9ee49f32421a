import argparse
import re
import sys

# Vectores como -1,2 son valores de --z y --target, no opciones
_NEGATIVE_VECTOR = re.compile(r"^-\d+(\s*,\s*-?\d+)*$")


class CliArgumentParser(argparse.ArgumentParser):
    """Los errores de uso salen con código 1 (2 está reservado para Unknown)"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VECTOR

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _search_flags() -> argparse.ArgumentParser:
    flags = argparse.ArgumentParser(add_help=False)
    group = flags.add_argument_group("search")
    group.add_argument("--seed", type=int, help="seed of the witness sampler")
    group.add_argument("--max-scale", type=int, help="largest k of the boxes [-2^k, 2^k]^n")
    group.add_argument("--samples", type=int, help="sampled points per box")
    group.add_argument("--denom-bound", type=int, help="denominator of sampled coordinates")
    group.add_argument("--preordering", action="store_true",
                       help="close the generators under products before checking")
    group.add_argument("--by-class", action="store_true",
                       help="search one witness per mod-2 class")
    group.add_argument("--workers", type=int, help="threads for independent directions")
    return flags


def _output_flags() -> argparse.ArgumentParser:
    flags = argparse.ArgumentParser(add_help=False)
    group = flags.add_argument_group("output")
    fmt = group.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="text", action="store_false", help="JSON report (default)")
    fmt.add_argument("--text", dest="text", action="store_true", help="human readable summary")
    group.add_argument("--timing", action="store_true", help="include elapsed_seconds in the report")
    group.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                       help="diagnostics level on stderr (default: QMSTAB_LOG_LEVEL)")
    flags.set_defaults(text=False)
    return flags


def build_parser() -> argparse.ArgumentParser:
    search, output = _search_flags(), _output_flags()
    parser = CliArgumentParser(
        prog="qmstab",
        description="Stability of finitely generated quadratic modules with exact certificates",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", parents=[search, output],
                                help="z-direction criteria combined by a positive combination")
    check.add_argument("file", help="system file (.qm)")
    check.add_argument("--z", action="append", default=[], metavar="Z",
                       help="grading vector such as 1,-1 (repeatable)")
    check.add_argument("--verify", metavar="REPORT", help="re-verify a saved JSON report instead")

    term_order = commands.add_parser("term-order", parents=[search, output],
                                     help="exact sign criterion for a term order")
    term_order.add_argument("file", help="system file (.qm)")
    term_order.add_argument("--order", required=True, help="deglex:x,y or lex:x,y")
    term_order.add_argument("--verify", metavar="REPORT", help="re-verify a saved JSON report instead")

    bounded = commands.add_parser("bounded", parents=[output],
                                  help="bounded monomials on the union of tentacles")
    bounded.add_argument("--z", action="append", required=True, metavar="Z")

    covering = commands.add_parser("covering", parents=[output],
                                   help="integer certificate that the --z gradings cover --target")
    covering.add_argument("--target", required=True, metavar="Z")
    covering.add_argument("--z", action="append", required=True, metavar="Z")
    covering.add_argument("--bound", type=int, help="bound of the integer search")

    tentacle = commands.add_parser("tentacle-sample", parents=[output],
                                   help="sample generators on a tentacle (falsifier only)")
    tentacle.add_argument("file", help="system file (.qm)")
    tentacle.add_argument("--z", required=True, metavar="Z")
    tentacle.add_argument("--box", action="append", required=True, metavar="LO:HI",
                          help="interval per coordinate, e.g. 1:11/10 (repeat in variable order)")
    tentacle.add_argument("--lambda", dest="lambdas", action="append", metavar="L",
                          help="rational lambda >= 1 (repeatable, default 1, 2, 4)")
    tentacle.add_argument("--grid", type=int, default=3)

    suggest = commands.add_parser("suggest-z", parents=[output], help="primitive grading vectors")
    suggest.add_argument("file", help="system file (.qm)")
    suggest.add_argument("--bound", type=int, default=1)
    suggest.add_argument("--positive-leading", action="store_true",
                         help="keep only vectors whose first nonzero entry is positive")

    commands.add_parser("examples", parents=[search, output], help="run the bundled example systems")
    return parser
