import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from dotenv import load_dotenv

from . import circle, enumeration, gf2, hieroglyph, mobius, render, ribbon
from .config import MobiusCheckError, config
from .errors import Error, InputError, IoError, UnknownSubcommand, VerificationError

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    status: str
    payload: dict = field(default_factory=dict)
    error_message: Optional[str] = None
    exit_code: int = 0
    command: Optional[str] = None
    table: Optional[str] = None

    def as_dict(self):
        if self.status == "ok":
            return {"status": "ok", "command": self.command, "payload": self.payload}
        return {"status": "error", "command": self.command, "error": self.payload}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        if "invalid choice" in message:
            raise UnknownSubcommand(message)
        raise InputError(message)


def _read(path):
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise IoError("Cannot read {}: {}".format(path, e))


def _ordered(letters, word):
    position = {letter: i for i, letter in enumerate(word.letters)}
    return sorted(letters, key=position.__getitem__)


def _matrix(args):
    return gf2.SymMatrixGF2.from_text(_read(args.matrix))


# ---------------------------------------------------------------- subcommands


def cmd_check(args):
    word = hieroglyph.parse_word(args.word)
    realizable = mobius.is_weakly_realizable(word)
    certificate = mobius.certify(word)
    if certificate.realizable != realizable:
        raise VerificationError("Checker and certificate disagree on {}.".format(word))
    payload = {"word": str(word), "n": word.n, "realizable": realizable}
    payload.update(
        (key, value) for key, value in certificate.as_dict(word.letters).items() if key != "variant"
    )
    return payload


def cmd_certify(args):
    word = hieroglyph.parse_word(args.word)
    return {"word": str(word), "certificate": mobius.certify(word).as_dict(word.letters)}


def cmd_cond4(args):
    word = hieroglyph.parse_word(args.word)
    return {"word": str(word), "condition4": mobius.check_condition4(word)}


def cmd_reduce(args):
    word = hieroglyph.parse_word(args.word)
    reduction = mobius.reduce_condition3(word)
    return {
        "word": str(word),
        "core": str(reduction.core),
        "removed": _ordered(reduction.removed, word),
        "is_canonical_clique": reduction.is_canonical_clique,
    }


def cmd_oracle(args):
    word = hieroglyph.parse_word(args.word)
    result = ribbon.oracle_weak_realizability(word)
    payload = {
        "word": str(word),
        "realizable": result.realizable,
        "twists": ribbon.format_twists(result.twists) if result.twists is not None else None,
    }
    if args.bands is not None:
        payload["bands"] = args.bands
        payload["realizable_on_bands"] = ribbon.realizable_on_m_bands(word, args.bands)
    return payload


def cmd_mohar(args):
    word = hieroglyph.parse_word(args.word)
    twists = ribbon.parse_twists(args.twists, word.n) if args.twists is not None else (0,) * word.n
    disk = ribbon.RibbonDisk(word, twists)
    return {
        "word": str(word),
        "twists": ribbon.format_twists(twists),
        "min_bands": ribbon.min_mobius_bands(disk),
        "crossing_matrix": ribbon.crossing_matrix(disk).to_lists(),
        "surface": ribbon.surface_summary(disk).as_dict(),
    }


def cmd_rank(args):
    return {"rank": gf2.rank_gf2(_matrix(args))}


def cmd_minrank(args):
    result = gf2.min_rank_over_diagonal(_matrix(args))
    return {"R": result.rank, "diagonal": list(result.diagonal)}


def cmd_blockform(args):
    matrix = _matrix(args)
    form = gf2.block_form(matrix)
    witness = gf2.find_pq_witness(matrix)
    diagonal = gf2.rank_le1_with_diagonal(matrix)
    R = gf2.min_rank_over_diagonal(matrix).rank
    agree = (form is not None) == (witness is None) == (diagonal is not None) == (R <= 1)
    if not agree:
        raise VerificationError("Rank <= 1 characterizations disagree.")
    return {
        "block_form": form.as_dict() if form else None,
        "pq_witness": witness.as_dict() if witness else None,
        "rank_le1_diagonal": list(diagonal) if diagonal is not None else None,
        "R": R,
    }


def cmd_enumerate(args):
    if args.classes:
        words = [str(key) for key in enumeration.enumerate_classes(args.n)]
    else:
        words = [str(word) for word in enumeration.enumerate_words(args.n)]
    return {"n": args.n, "classes": args.classes, "count": len(words), "words": words}


def cmd_census(args):
    return enumeration.census(args.n, include_classes=args.classes)


def cmd_realize_graph(args):
    graph = circle.LabeledGraph.from_text(_read(args.edges))
    word = circle.realize_graph(graph)
    payload = {
        "graph": graph.as_dict(),
        "realizable": word is not None,
        "word": str(word) if word is not None else None,
        "vertices": circle.letter_vertices(word) if word is not None else None,
    }
    if args.count:
        payload["witnesses"] = circle.count_realizations(graph)
    return payload


def cmd_nonrealizable(args):
    graphs = circle.find_nonrealizable(args.n)
    payload = {"n": args.n, "count": len(graphs), "graphs": [g.as_dict() for g in graphs]}
    if args.confirm:
        payload["confirmed"] = all(circle.confirm_nonrealizable(g) for g in graphs)
    return payload


def cmd_render(args):
    word = hieroglyph.parse_word(args.word)
    twists = ribbon.parse_twists(args.twists, word.n) if args.twists is not None else None
    return {"word": str(word), "path": render.render(word, twists, args.output)}


def build_parser():
    parser = _ArgumentParser(
        prog="mobiuscheck",
        description="Weak realizability of hieroglyphs (chord diagrams) on the Moebius band",
    )
    parser.add_argument("--config", metavar="CONFIG", help="env file with settings")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="output_mode", action="store_const", const="json")
    mode.add_argument("--table", dest="output_mode", action="store_const", const="table")
    parser.set_defaults(output_mode="json")

    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    def word_command(name, func, help):
        sub = commands.add_parser(name, help=help)
        sub.add_argument("word", metavar="WORD", help="hieroglyph, e.g. abcacb or 'a1 a2 a1 a2'")
        sub.set_defaults(func=func)
        return sub

    word_command("check", cmd_check, "quadratic weak realizability test with certificate")
    word_command("certify", cmd_certify, "red/blue coloring or forbidden sub-hieroglyph")
    word_command("cond4", cmd_cond4, "scan for induced abcacb / ababcdcd")
    word_command("reduce", cmd_reduce, "delete isolated letters and test for a1..am a1..am")
    oracle = word_command("oracle", cmd_oracle, "brute force over all 2^n twistings")
    oracle.add_argument("--bands", type=int, metavar="M", help="also test a disk with M Moebius bands")
    mohar = word_command("mohar", cmd_mohar, "rank of the crossing matrix of one ribbon disk")
    mohar.add_argument("--twists", metavar="BITS", help="twist bits, indexed by first occurrence")
    render_cmd = word_command("render", cmd_render, "write an SVG picture of a ribbon disk")
    render_cmd.add_argument("--twists", metavar="BITS")
    render_cmd.add_argument("-o", "--output", required=True, metavar="PATH")

    for name, aliases, func, help in (
        ("rank", [], cmd_rank, "GF(2) rank of a matrix"),
        ("minrank", [], cmd_minrank, "least rank over all diagonals"),
        ("lemma1", ["blockform"], cmd_blockform, "block form, P/Q witness and rank <= 1 diagonal"),
    ):
        sub = commands.add_parser(name, aliases=aliases, help=help)
        sub.add_argument("--matrix", required=True, metavar="PATH")
        sub.set_defaults(func=func)

    for name, func, help in (
        ("enumerate", cmd_enumerate, "all hieroglyphs with N letters"),
        ("census", cmd_census, "count classes and weakly realizable classes"),
    ):
        sub = commands.add_parser(name, help=help)
        sub.add_argument("n", type=int, metavar="N")
        sub.add_argument("--classes", action="store_true", help="one word per equivalence class")
        sub.set_defaults(func=func)

    realize = commands.add_parser("realize-graph", help="find a hieroglyph with a given interlacement graph")
    realize.add_argument("--edges", required=True, metavar="PATH")
    realize.add_argument("--count", action="store_true", help="also count all witnesses")
    realize.set_defaults(func=cmd_realize_graph)

    nonrealizable = commands.add_parser("nonrealizable", help="graphs on N vertices that are not interlacement graphs")
    nonrealizable.add_argument("n", type=int, metavar="N")
    nonrealizable.add_argument("--confirm", action="store_true", help="re-check by full enumeration")
    nonrealizable.set_defaults(func=cmd_nonrealizable)

    return parser


def _load_config(path):
    if not os.path.isfile(path):
        raise IoError("Configuration file {} not found.".format(path))
    load_dotenv(path, override=True)
    config.refresh(os.environ)


def dispatch(argv):
    """Parse ``argv`` and run one subcommand; errors come back as results."""
    command = None
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        if args.config:
            _load_config(args.config)
        configure_logging(args.verbose)
        logger.debug("Running {}".format(command))
        outcome = args.func(args)
        payload = outcome if isinstance(outcome, dict) else outcome.as_dict()
        table = outcome.as_table() if hasattr(outcome, "as_table") else None
        return CommandResult("ok", payload, command=command, table=table)
    except Error as e:
        return CommandResult("error", e.as_dict(), e.message, e.exit_code, command)
    except MobiusCheckError as e:
        return CommandResult("error", {"type": type(e).__name__, "message": str(e)}, str(e), 1, command)


def _table(result):
    if result.table:
        return result.table
    return "".join(
        "{}\t{}\n".format(key, value if isinstance(value, (str, int, bool)) else json.dumps(value))
        for key, value in result.payload.items()
    )


def configure_logging(verbose=False):
    package_logger = logging.getLogger("mobiuscheck")
    level = "DEBUG" if verbose else config.get("LOG_LEVEL").upper()
    if not isinstance(logging.getLevelName(level), int):
        raise MobiusCheckError("Unknown LOG_LEVEL {!r}.".format(config.get("LOG_LEVEL")))
    package_logger.setLevel(level)
    formatter = logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
        handler.close()
    handlers = []
    if config.get("STDERR"):
        handlers.append(logging.StreamHandler(sys.stderr))
    if config.get("LOG_FILE"):
        try:
            handlers.append(logging.FileHandler(config.get("LOG_FILE")))
        except OSError as e:
            raise IoError("Cannot open log file {}: {}".format(config.get("LOG_FILE"), e))
    for handler in handlers:
        handler.setFormatter(formatter)
        package_logger.addHandler(handler)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    result = dispatch(argv)
    if result.status != "ok":
        sys.stderr.write(json.dumps(result.as_dict()) + "\n")
        sys.exit(result.exit_code)
    if "--table" in argv:
        sys.stdout.write(_table(result))
    else:
        sys.stdout.write(json.dumps(result.as_dict()) + "\n")


if __name__ == "__main__":
    main()
