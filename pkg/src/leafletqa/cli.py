"""Command-line interface: ingest, stats, ask, repl and serve.

Exit codes: 0 success, 2 input error (unreadable corpus, bad config,
empty corpus or vocabulary), 3 model error (missing or corrupt model).
"""

from __future__ import annotations

import argparse
import sys

from .config import load_config
from .errors import EmptyCorpusError, EmptyVocabularyError, ModelFormatError
from .model import build_model, load_model, save_model
from .stats import write_stats_bundle

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MODEL = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leafletqa",
        description="Question answering over a medication package insert",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="build a model from an insert text file")
    p.add_argument("corpus", help="UTF-8 plain text file")
    p.add_argument("--config", help="JSON configuration file")
    p.add_argument("--out", default="model.json", help="output model path")

    p = sub.add_parser("stats", help="export statistics CSVs for a model")
    p.add_argument("model")
    p.add_argument("--outdir", default="stats", help="directory for the CSV bundle")

    p = sub.add_parser("ask", help="answer a single question")
    p.add_argument("model")
    p.add_argument("question")
    p.add_argument("--top-k", type=int, default=None)

    p = sub.add_parser("repl", help="interactive question loop")
    p.add_argument("model")

    p = sub.add_parser("serve", help="run the HTTP JSON service")
    p.add_argument("model")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--static", default=None, help="directory of web client files")

    return parser


def _load(path: str):
    try:
        return load_model(path)
    except (OSError, ModelFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_MODEL)


def _print_answers(result) -> None:
    if result.fallback is not None:
        print(result.fallback)
        return
    for ans in result.answers:
        print(f"{ans.relative_relevance:.2f}  [{ans.doc_index}] {ans.text}")


def _cmd_ingest(args) -> int:
    try:
        config = load_config(args.config)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        with open(args.corpus, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        model = build_model(text, config)
    except EmptyCorpusError:
        print("error: empty corpus", file=sys.stderr)
        return EXIT_INPUT
    except EmptyVocabularyError:
        print("error: no relevant words in corpus", file=sys.stderr)
        return EXIT_INPUT
    save_model(model, args.out)
    s = model.stats
    print(f"documents:      {s.documents}")
    print(f"tokens:         {s.tokens}")
    print(f"relevant terms: {s.relevant_terms} ({100.0 * s.relevant_fraction:.2f}%)")
    print(f"clusters:       {s.clusters}")
    print(f"model written:  {args.out}")
    return EXIT_OK


def _cmd_stats(args) -> int:
    model = _load(args.model)
    for path in write_stats_bundle(model, args.outdir):
        print(path)
    return EXIT_OK


def _cmd_ask(args) -> int:
    model = _load(args.model)
    if not args.question.strip():
        print("error: empty question", file=sys.stderr)
        return EXIT_INPUT
    if args.top_k is not None and args.top_k < 1:
        print("error: --top-k must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    result = model.answer(args.question, top_k=args.top_k)
    _print_answers(result)
    return EXIT_OK


def _cmd_repl(args) -> int:
    model = _load(args.model)
    print("ask a question, or type 'exit' to quit")
    while True:
        try:
            line = input("? ")
        except EOFError:
            print()
            return EXIT_OK
        question = line.strip()
        if question == "exit":
            return EXIT_OK
        if not question:
            continue
        result = model.answer(question, top_k=1)
        if result.fallback is not None:
            print(result.fallback)
        else:
            top = result.answers[0]
            print(f"{top.relative_relevance:.2f}  {top.text}")


def _cmd_serve(args) -> int:
    from .server import serve_forever

    model = _load(args.model)
    if args.port < 0 or args.port > 65535:
        print("error: invalid port", file=sys.stderr)
        return EXIT_INPUT
    serve_forever(model, args.port, static_dir=args.static)
    return EXIT_OK


_COMMANDS = {
    "ingest": _cmd_ingest,
    "stats": _cmd_stats,
    "ask": _cmd_ask,
    "repl": _cmd_repl,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


def entrypoint() -> None:
    raise SystemExit(main())
