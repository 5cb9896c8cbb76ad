"""Command-line interface: verbalize classes, survey a corpus, score re-codings.

Usage:
    owlprose verbalize --ontology FILE [--lexicon FILE] --class SELECTOR
    owlprose survey DIRECTORY
    owlprose eval --reference FILE --candidate FILE --class ID

The class selector is a single id (":Settlement"), "@FILE" naming a file with
one id per line, or "all". Batch selections are verbalized in sorted id order
with each paragraph preceded by its class id. Diagnostics go to stderr; only
data is written to stdout. Exit status: 0 on success, 1 on parse trouble or
an unreadable input, 2 on an unknown class.
"""

from __future__ import annotations

import argparse
import logging
import os
import pathlib
import sys

from . import __version__
from .classifier import classify
from .evaluate import DEFAULT_CAP, emit_report as emit_eval_report, score_submission
from .model import UnknownClass, collect_frame
from .parser import (
    GRAMMAR_VERSION,
    LexiconFormatError,
    ParseError,
    SourceDocument,
    UndeclaredEntity,
    load_lexicon,
    parse_ontology,
)
from .planner import build_rst, render_debug
from .realizer import RealizeOptions, realize
from .survey import emit_report as emit_survey_report, survey

log = logging.getLogger("owlprose")


def _read_id_list(path: str) -> list[str]:
    ids = []
    for line in pathlib.Path(path).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            ids.append(line)
    return ids


def cmd_verbalize(args: argparse.Namespace) -> int:
    ontology = parse_ontology(SourceDocument.from_path(args.ontology), strict=args.strict)
    lexicon = {}
    lexicon_path = args.lexicon or os.environ.get("OWLPROSE_LEXICON")
    if lexicon_path:
        lexicon = load_lexicon(SourceDocument.from_path(lexicon_path))

    if args.class_id == "all":
        ids, batch = sorted(ontology.classes), True
    elif args.class_id.startswith("@"):
        ids, batch = sorted(_read_id_list(args.class_id[1:])), True
    else:
        ids, batch = [args.class_id], False

    options = RealizeOptions(
        elide_rolegroup=args.elide_rolegroup, guess_articles=args.guess_articles
    )
    chunks = []
    for class_id in ids:
        frame = collect_frame(ontology, class_id)
        classified = [classify(axiom, class_id) for axiom in frame.axioms]
        tree = build_rst(frame, classified)
        if args.rst_debug:
            print(render_debug(tree), file=sys.stderr)
        paragraph = realize(tree, lexicon, options)
        if args.format == "records":
            body = "\n".join(f"{label}\t{text}" for label, text in paragraph.records)
        else:
            body = paragraph.text
        chunks.append(f"{class_id}\n{body}" if batch else body)
    if chunks:
        sys.stdout.write("\n\n".join(chunks) + "\n")
    return 0


def cmd_survey(args: argparse.Namespace) -> int:
    directory = pathlib.Path(args.directory)
    if not directory.is_dir():
        print(f"owlprose: not a readable directory: {directory}", file=sys.stderr)
        return 1
    corpus = []
    skipped = 0
    for path in sorted(directory.rglob("*.ofs")):
        try:
            corpus.append(parse_ontology(SourceDocument.from_path(path), strict=args.strict))
        except (ParseError, UndeclaredEntity, OSError) as exc:
            log.warning("skipping %s: %s", path, exc)
            skipped += 1
    stats = survey(corpus)
    stats.skipped = skipped
    if skipped:
        print(f"skipped {skipped} file(s)", file=sys.stderr)
    sys.stdout.write(emit_survey_report(stats))
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    reference = parse_ontology(SourceDocument.from_path(args.reference), strict=args.strict)
    candidate = parse_ontology(SourceDocument.from_path(args.candidate), strict=args.strict)
    reference_frame = collect_frame(reference, args.class_id)
    candidate_frame = collect_frame(candidate, args.class_id)
    report = score_submission(candidate_frame, reference_frame, cap=args.cap)
    if report.truncated:
        print(
            f"owlprose: equivalence family larger than cap={args.cap}; "
            "the score is a lower bound",
            file=sys.stderr,
        )
    if args.mean_only:
        print(f"{report.mean:.4f}")
    else:
        sys.stdout.write(emit_eval_report(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="owlprose",
        description="Verbalize OWL-EL class descriptions as English paragraphs.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"owlprose {__version__} (grammar {GRAMMAR_VERSION})",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--strict",
        action="store_true",
        help="reject undeclared entities instead of auto-declaring them",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verbalize = sub.add_parser(
        "verbalize", parents=[common], help="render class descriptions as paragraphs"
    )
    verbalize.add_argument("--ontology", required=True, help="ontology file to read")
    verbalize.add_argument(
        "--lexicon",
        help="lexicon TSV (default: the OWLPROSE_LEXICON environment variable)",
    )
    verbalize.add_argument(
        "--class",
        dest="class_id",
        required=True,
        metavar="SELECTOR",
        help='class id, "@FILE" with one id per line, or "all"',
    )
    verbalize.add_argument(
        "--elide-rolegroup",
        action="store_true",
        help="skip RoleGroup wrappers instead of verbalizing them",
    )
    verbalize.add_argument(
        "--guess-articles",
        action="store_true",
        help="apply a/an by initial vowel when the lexicon gives no article",
    )
    verbalize.add_argument(
        "--rst-debug", action="store_true", help="print the discourse tree to stderr"
    )
    verbalize.add_argument(
        "--format", choices=("text", "records"), default="text",
        help="plain paragraphs or one labeled record per sentence",
    )
    verbalize.set_defaults(func=cmd_verbalize)

    survey_cmd = sub.add_parser(
        "survey", parents=[common], help="tally axiom patterns over a directory"
    )
    survey_cmd.add_argument("directory", help="directory walked for *.ofs files")
    survey_cmd.set_defaults(func=cmd_survey)

    eval_cmd = sub.add_parser(
        "eval", parents=[common], help="score a re-coding against a reference"
    )
    eval_cmd.add_argument("--reference", required=True, help="reference ontology file")
    eval_cmd.add_argument("--candidate", required=True, help="candidate ontology file")
    eval_cmd.add_argument("--class", dest="class_id", required=True, help="class id to score")
    eval_cmd.add_argument(
        "--mean-only", action="store_true", help="print only the mean score"
    )
    eval_cmd.add_argument(
        "--cap", type=int, default=DEFAULT_CAP,
        help="most equivalent versions to scan (default %(default)s)",
    )
    eval_cmd.set_defaults(func=cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownClass as exc:
        print(f"owlprose: unknown class {exc.args[0]}", file=sys.stderr)
        return 2
    except (ParseError, UndeclaredEntity, LexiconFormatError) as exc:
        print(f"owlprose: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"owlprose: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
