"""
Command line front end.

Command groups:

- ``family``: relation matrices and certificates for members of the cut-number-one family
- ``alex``: Alexander-module ranks of infinite cyclic covers of presented groups
- ``group``: free group identities and Fox derivatives
- ``magnus``: free metabelian and free nilpotent quotient checks

Exit codes: 0 when everything requested holds, 2 when a check fails or an identity is false,
1 on usage, parse or parameter errors. Errors are printed on stderr as a JSON object.
"""

import argparse
import random
import sys
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence

from pydantic import BaseModel

from cutnumber import TOOL_NAME, __version__, setup_logger
from cutnumber.core.alexander import (
    PhiMap,
    corank_obstruction,
    h1_rank_of_cover,
    load_presentation,
    sample_primitive_phis,
)
from cutnumber.core.certificate import ErrorReport, to_json_data
from cutnumber.core.family import (
    FamilyParams,
    f4_obstruction_certificate,
    format_case_table,
    model_relation_matrix,
    nonsingularity_certificate,
    relation_matrix,
    relation_matrix_mod_j2,
    sweep,
)
from cutnumber.core.group import (
    Alphabet,
    abelianize_derivative,
    fox_derivative,
    parse_word,
    verify_commutator_expansion,
)
from cutnumber.core.quotients import (
    equal_mod_lcs,
    equal_mod_second_derived,
    lcs_weight,
    verify_all_jacobi,
)
from cutnumber.utils.config import Settings, load_settings
from cutnumber.utils.errors import CheckFailedError, CutNumberError, UsageError
from cutnumber.utils.io import dumps_json, json_write_atomic, resolve_output_path
from cutnumber.utils.logger import get_logger

logger = get_logger("cli")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REFUSED = 2

Handler = Callable[[argparse.Namespace, Settings], int]


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting, so usage errors map to exit code 1."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message, usage=self.format_usage().strip())


def _int_list(text: str) -> List[int]:
    try:
        values = [int(p) for p in text.replace(" ", "").split(",") if p != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _name_list(text: str) -> List[str]:
    names = [p for p in text.replace(" ", "").split(",") if p != ""]
    if not names:
        raise argparse.ArgumentTypeError("expected at least one generator name")
    return names


def _emit(data: Any, json_path: Optional[str], settings: Settings) -> None:
    """Write JSON data atomically when a path is given, otherwise print it on stdout."""
    if isinstance(data, BaseModel):
        data = to_json_data(data)
    if json_path:
        path = json_write_atomic(resolve_output_path(json_path, settings.output_dir), data)
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(dumps_json(data))


def _verdict(holds: bool) -> int:
    print("true" if holds else "false")
    return EXIT_OK if holds else EXIT_REFUSED


def _params(args: argparse.Namespace) -> FamilyParams:
    return FamilyParams.create(args.m, args.n, args.N)


# Family commands


def cmd_family_certify(args: argparse.Namespace, settings: Settings) -> int:
    certificate = nonsingularity_certificate(_params(args))
    _emit(certificate, args.json, settings)
    return EXIT_OK


def cmd_family_f4(args: argparse.Namespace, settings: Settings) -> int:
    certificate = f4_obstruction_certificate(_params(args))
    _emit(certificate, args.json, settings)
    return EXIT_OK


def cmd_family_matrix(args: argparse.Namespace, settings: Settings) -> int:
    if args.n is None:
        if args.full or args.jets:
            raise UsageError("--full and --jets need --n")
        N = args.N if args.N is not None else 1
        if args.m < 1 or not 1 <= N <= args.m:
            raise UsageError(f"--N must lie in 1..{args.m}, got {N}")
        print(format_case_table(args.m, N))
        return EXIT_OK

    params = _params(args)
    data: Dict[str, Any] = {
        "params": {"m": params.m, "n": list(params.n), "N": params.N},
    }
    if args.jets:
        jets = relation_matrix_mod_j2(params)
        data["jets"] = [[j.to_json() for j in row] for row in jets]
        text = "\n".join("[ " + "  ".join(str(j) for j in row) + " ]" for row in jets)
    else:
        matrix = model_relation_matrix(params) if args.full else relation_matrix(params)
        data["matrix"] = matrix.to_json()
        text = matrix.format()

    if args.json:
        _emit(data, args.json, settings)
    print(text if text else "[0x0 matrix]")
    return EXIT_OK


def cmd_family_sweep(args: argparse.Namespace, settings: Settings) -> int:
    seed = args.seed if args.seed is not None else settings.seed
    workers = args.workers if args.workers is not None else settings.workers
    certificates = sweep(
        args.count,
        seed,
        args.max_m,
        bound=args.bound,
        workers=workers,
        show_progress=not args.quiet,
    )
    for certificate in certificates:
        p = certificate.params
        n_text = ",".join(str(v) for v in p.n)
        print(f"m={p.m} n={n_text} N={p.N} det A(1)={certificate.det_a_at_one}")
    if args.json:
        _emit(
            {"seed": seed, "certificates": [to_json_data(c) for c in certificates]},
            args.json,
            settings,
        )
    logger.info(f"Certified {len(certificates)} family members (seed {seed})")
    return EXIT_OK


# Alexander commands


def cmd_alex_rank(args: argparse.Namespace, settings: Settings) -> int:
    presentation = load_presentation(args.pres)
    phi = PhiMap(tuple(args.phi)).validate(presentation)
    rank = h1_rank_of_cover(presentation, phi)
    print(f"rank {rank}")
    if args.json:
        _emit(corank_obstruction(presentation, [phi]), args.json, settings)
    return EXIT_OK


def cmd_alex_obstruct(args: argparse.Namespace, settings: Settings) -> int:
    seed = args.seed if args.seed is not None else settings.seed
    presentation = load_presentation(args.pres)
    phis = sample_primitive_phis(presentation, args.samples, random.Random(seed), args.bound)
    certificate = corank_obstruction(presentation, phis, exhaustive=False, seed=seed)
    _emit(certificate, args.json, settings)
    if any(r.rank != 0 for r in certificate.phis):
        logger.warning("Some sampled cover has positive rank; no obstruction certified")
        return EXIT_REFUSED
    return EXIT_OK


# Free group commands


def cmd_group_check(args: argparse.Namespace, settings: Settings) -> int:
    alphabet = Alphabet.from_names(args.gens)
    a, b, c = (parse_word(text, alphabet) for text in (args.a, args.b, args.c))
    return _verdict(verify_commutator_expansion(a, b, c))


def cmd_group_fox(args: argparse.Namespace, settings: Settings) -> int:
    alphabet = Alphabet.from_names(args.gens)
    word = parse_word(args.word, alphabet)
    for gen in alphabet.gens():
        derivative = fox_derivative(word, gen.index)
        abelian = abelianize_derivative(derivative).format(alphabet.names)
        print(f"d/d{gen}: {derivative}    [abelianized: {abelian}]")
    return EXIT_OK


# Quotient commands


def cmd_magnus_weight(args: argparse.Namespace, settings: Settings) -> int:
    word = parse_word(args.word, Alphabet.from_names(args.gens))
    print(lcs_weight(word, args.max_k))
    return EXIT_OK


def cmd_magnus_equal(args: argparse.Namespace, settings: Settings) -> int:
    alphabet = Alphabet.from_names(args.gens)
    u, v = parse_word(args.u, alphabet), parse_word(args.v, alphabet)
    if args.k is None:
        return _verdict(equal_mod_second_derived(u, v))
    return _verdict(equal_mod_lcs(u, v, args.k))


def cmd_magnus_jacobi(args: argparse.Namespace, settings: Settings) -> int:
    failures = verify_all_jacobi(args.m)
    for triple in failures:
        print(f"Jacobi relation fails for {triple}")
    return _verdict(not failures)


def _add_family_parser(subparsers: Any) -> None:
    family = subparsers.add_parser("family", help="Relation matrices and certificates")
    commands = family.add_subparsers(dest="subcommand")

    def member_options(p: argparse.ArgumentParser, n_required: bool = True) -> None:
        p.add_argument("--m", type=int, required=True, help="Number of generators")
        p.add_argument(
            "--n",
            type=_int_list,
            required=n_required,
            help="Character, e.g. 1,1,1 (write --n=-1,2 for a leading minus)",
        )
        p.add_argument("--N", type=int, default=None, help="Distinguished index (1-based)")
        p.add_argument("--json", default=None, help="Write JSON to this path")

    certify = commands.add_parser("certify", help="Nonsingularity certificate")
    member_options(certify)
    certify.set_defaults(handler=cmd_family_certify)

    matrix = commands.add_parser("matrix", help="Print the relation matrix or the case table")
    member_options(matrix, n_required=False)
    shape = matrix.add_mutually_exclusive_group()
    shape.add_argument("--full", action="store_true", help="Model matrix over Z[t^{+-1}]")
    shape.add_argument("--jets", action="store_true", help="Matrix modulo (t - 1)^2 as jets")
    matrix.set_defaults(handler=cmd_family_matrix)

    f4 = commands.add_parser("f4", help="Obstruction to epimorphisms onto F/F_4")
    member_options(f4)
    f4.set_defaults(handler=cmd_family_f4)

    batch = commands.add_parser("sweep", help="Certify a seeded batch of random members")
    batch.add_argument("--count", type=int, required=True)
    batch.add_argument("--max-m", type=int, required=True)
    batch.add_argument("--bound", type=int, default=5, help="Bound on the entries of n")
    batch.add_argument("--seed", type=int, default=None)
    batch.add_argument("--workers", type=int, default=None)
    batch.add_argument("--json", default=None, help="Write JSON to this path")
    batch.set_defaults(handler=cmd_family_sweep)


def _add_alex_parser(subparsers: Any) -> None:
    alex = subparsers.add_parser("alex", help="Alexander-module ranks of cyclic covers")
    commands = alex.add_subparsers(dest="subcommand")

    rank = commands.add_parser("rank", help="Rank of H1 of the cover for one character")
    rank.add_argument("--pres", required=True, help="Presentation file or bundled name")
    rank.add_argument("--phi", type=_int_list, required=True, help="Character, e.g. 1,0,0")
    rank.add_argument("--json", default=None, help="Write a rank certificate to this path")
    rank.set_defaults(handler=cmd_alex_rank)

    obstruct = commands.add_parser("obstruct", help="Corank obstruction over sampled characters")
    obstruct.add_argument("--pres", required=True, help="Presentation file or bundled name")
    obstruct.add_argument("--samples", type=int, default=20)
    obstruct.add_argument("--bound", type=int, default=3, help="Bound on character entries")
    obstruct.add_argument("--seed", type=int, default=None)
    obstruct.add_argument("--json", default=None, help="Write JSON to this path")
    obstruct.set_defaults(handler=cmd_alex_obstruct)


def _add_group_parser(subparsers: Any) -> None:
    group = subparsers.add_parser("group", help="Free group identities and Fox calculus")
    commands = group.add_subparsers(dest="subcommand")

    check = commands.add_parser("check", help="Check [a, bc] = [a, b] [a, c]^b")
    check.add_argument("--a", required=True)
    check.add_argument("--b", required=True)
    check.add_argument("--c", required=True)
    check.add_argument("--gens", type=_name_list, default=["x", "y", "z"])
    check.set_defaults(handler=cmd_group_check)

    fox = commands.add_parser("fox", help="Fox derivatives of a word")
    fox.add_argument("--word", required=True)
    fox.add_argument("--gens", type=_name_list, required=True)
    fox.set_defaults(handler=cmd_group_fox)


def _add_magnus_parser(subparsers: Any) -> None:
    magnus = subparsers.add_parser("magnus", help="Free metabelian and nilpotent quotients")
    commands = magnus.add_subparsers(dest="subcommand")

    weight = commands.add_parser("weight", help="Lower central series weight of a word")
    weight.add_argument("--word", required=True)
    weight.add_argument("--gens", type=_name_list, required=True)
    weight.add_argument("--max-k", type=int, default=6)
    weight.set_defaults(handler=cmd_magnus_weight)

    equal = commands.add_parser("equal", help="Compare words modulo F'' (or F_k with --k)")
    equal.add_argument("--u", required=True)
    equal.add_argument("--v", required=True)
    equal.add_argument("--gens", type=_name_list, required=True)
    equal.add_argument("--k", type=int, default=None, help="Compare modulo F_k instead")
    equal.set_defaults(handler=cmd_magnus_equal)

    jacobi = commands.add_parser("jacobi", help="Check every Jacobi relation of F(m) mod F''")
    jacobi.add_argument("--m", type=int, required=True)
    jacobi.set_defaults(handler=cmd_magnus_jacobi)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog=TOOL_NAME,
        description="Exact certificates for cut number and corank obstructions",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings only")
    parser.add_argument("--no-color", action="store_true", help="Plain log output")
    parser.add_argument("--output-dir", default=None, help="Directory for relative JSON paths")

    subparsers = parser.add_subparsers(dest="command")
    _add_family_parser(subparsers)
    _add_alex_parser(subparsers)
    _add_group_parser(subparsers)
    _add_magnus_parser(subparsers)
    return parser


def _report(exc: Exception) -> None:
    sys.stderr.write(dumps_json(to_json_data(ErrorReport.from_exception(exc))))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line front end.

    Args:
        argv: Arguments without the program name (default: ``sys.argv[1:]``)

    Returns:
        Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        _report(e)
        return EXIT_ERROR
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)

    handler: Optional[Handler] = getattr(args, "handler", None)
    if handler is None:
        parser.print_help(sys.stderr)
        return EXIT_ERROR

    settings = load_settings()
    if args.output_dir:
        settings = Settings(
            output_dir=args.output_dir,
            log_level=settings.log_level,
            seed=settings.seed,
            workers=settings.workers,
        )
    level = "DEBUG" if args.verbose else "WARNING" if args.quiet else settings.log_level
    setup_logger(TOOL_NAME, level, use_colors=not args.no_color)

    try:
        return handler(args, settings)
    except CheckFailedError as e:
        logger.warning(f"Refused: {e.message}")
        _report(e)
        return EXIT_REFUSED
    except CutNumberError as e:
        _report(e)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
