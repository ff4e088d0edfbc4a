"""Command-line surface tying the pipeline stages together.

Every subcommand reads and writes plain files so stages can be re-run and
inspected independently; `pipeline` composes them end to end.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import axis as axis_mod
from . import evaluation as eval_mod
from . import patterns, pmi
from .corpus import (
    FORMAT_INLINE,
    FORMAT_ONE_TOKEN_PER_LINE,
    TaggedToken,
    load_labeled_reviews,
    load_polarity_lexicon,
    load_tagged_corpus,
)
from .errors import ParseError, SentaxisError
from .sgns import SgnsConfig, train_sgns
from .vectors import load_embeddings, save_embeddings


def _add_corpus_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--corpus", required=True, help="tagged corpus file")
    parser.add_argument("--format", default=FORMAT_ONE_TOKEN_PER_LINE,
                        choices=[FORMAT_ONE_TOKEN_PER_LINE, FORMAT_INLINE],
                        help="tagged corpus file format")


def _add_review_filter_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--limit", type=int, default=None,
                        help="evaluate only the first N reviews")
    parser.add_argument("--min-tokens", type=int, default=None,
                        help="drop reviews shorter than N tokens")


def _load_reviews(args) -> "eval_mod.TaggedCorpus":
    reviews = load_labeled_reviews(args.reviews)
    if args.limit is not None or args.min_tokens is not None:
        reviews = eval_mod.filter_reviews(reviews, limit=args.limit,
                                          min_tokens=args.min_tokens)
    return reviews


def _parse_cutoffs(text: str) -> list[int]:
    """Accept 'A..B' ranges or comma-separated lists."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(part) for part in text.split(",") if part]
    if not values or any(v < 1 for v in values):
        raise ValueError(f"invalid cutoff range {text!r}")
    return values


def _sgns_config_from(args) -> SgnsConfig:
    return SgnsConfig(
        dim=args.dim, window=args.window, negatives=args.negatives,
        epochs=args.epochs, initial_learning_rate=args.lr,
        min_count=args.min_count, subsample_threshold=args.subsample,
        rng_seed=args.seed, workers=args.workers,
    )


def _add_training_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dim", type=int, default=100)
    parser.add_argument("--window", type=int, default=5)
    parser.add_argument("--negatives", type=int, default=5)
    parser.add_argument("--epochs", type=int, default=5)
    parser.add_argument("--lr", type=float, default=0.025,
                        help="initial learning rate")
    parser.add_argument("--min-count", type=int, default=5)
    parser.add_argument("--subsample", type=float, default=1e-3,
                        help="frequent-word subsampling threshold (0 disables)")
    parser.add_argument("--seed", type=int, default=1, help="training RNG seed")
    parser.add_argument("--workers", type=int, default=1,
                        help=">1 enables lossy lock-free parallel training")


def cmd_train_embeddings(args) -> int:
    corpus = load_tagged_corpus(args.corpus, args.format)
    table = train_sgns(corpus, _sgns_config_from(args))
    save_embeddings(table, args.out)
    print(f"trained {len(table)} x {table.dim} vectors -> {args.out}")
    return 0


def cmd_extract_phrases(args) -> int:
    corpus = load_tagged_corpus(args.corpus, args.format)
    phrases = patterns.extract_phrases(corpus)
    patterns.save_phrases(phrases, args.out)
    print(f"extracted {len(phrases)} phrase occurrences "
          f"({len(set(p.phrase for p in phrases))} types) -> {args.out}")
    return 0


def cmd_select_points(args) -> int:
    corpus = load_tagged_corpus(args.corpus, args.format)
    phrases = patterns.load_phrases(args.phrases)
    points = patterns.select_point_words(phrases, corpus, args.cutoff)
    patterns.save_point_words(points, args.out)
    print(f"selected {len(points.words)} point words at cutoff {args.cutoff} -> {args.out}")
    return 0


def cmd_build_axis(args) -> int:
    table = load_embeddings(args.embeddings)
    points = patterns.load_point_words(args.points)
    lexicon = load_polarity_lexicon(args.lexicon) if args.lexicon else None
    oriented, projection = eval_mod.induce_axis(points, table, args.mode,
                                                lexicon=lexicon,
                                                seed_word=args.seed_word)
    axis_path = axis_mod.save_axis(oriented, args.out)
    if projection is not None:
        axis_mod.save_projection_csv(projection, Path(args.out) / "projection.csv")
    print(f"axis ({oriented.mode}, {len(oriented.pos_words)} pos / "
          f"{len(oriented.neg_words)} neg words) -> {axis_path}")
    return 0


def cmd_score(args) -> int:
    table = load_embeddings(args.embeddings)
    oriented = axis_mod.load_axis(args.axis)
    lexicon = axis_mod.score_vocabulary(oriented, table)
    axis_mod.save_orientation_lexicon(lexicon, args.out)
    print(f"scored {len(lexicon.scores)} words -> {args.out}")
    return 0


def cmd_classify(args) -> int:
    lexicon = axis_mod.load_orientation_lexicon(args.lexicon)
    reviews = _load_reviews(args)
    report = eval_mod.evaluate(reviews, lexicon,
                               config_snapshot={"lexicon": args.lexicon,
                                                "reviews": args.reviews})
    eval_mod.write_report(report, args.report)
    print(f"accuracy={report.accuracy:.4f} over {report.n_total} reviews -> {args.report}")
    return 0


def cmd_sweep(args) -> int:
    corpus = load_tagged_corpus(args.corpus, args.format)
    reviews = _load_reviews(args)
    table = load_embeddings(args.embeddings)
    lexicon = load_polarity_lexicon(args.lexicon) if args.lexicon else None
    rows = eval_mod.sweep_cutoffs(corpus, reviews, args.mode,
                                  _parse_cutoffs(args.cutoffs), table,
                                  lexicon=lexicon, seed_word=args.seed_word)
    eval_mod.write_sweep_csv(rows, args.csv)
    done = sum(1 for r in rows if r.accuracy is not None)
    print(f"swept {len(rows)} cutoffs ({done} evaluated) -> {args.csv}")
    return 0


def cmd_pmi_baseline(args) -> int:
    corpus = load_tagged_corpus(args.corpus, args.format)
    reviews = _load_reviews(args)
    pos_seed, _, neg_seed = args.seeds.partition(",")
    if not pos_seed or not neg_seed:
        raise SentaxisError(f"--seeds must be 'pos,neg', got {args.seeds!r}")
    index = pmi.build_near_index(corpus, window=args.window)
    report = eval_mod.evaluate_pmi(index, reviews, pos_seed=pos_seed, neg_seed=neg_seed,
                                   unit=args.hit_unit,
                                   config_snapshot={"window": args.window,
                                                    "seeds": args.seeds,
                                                    "hit_unit": args.hit_unit,
                                                    "corpus": args.corpus,
                                                    "reviews": args.reviews})
    eval_mod.write_report(report, args.report)
    print(f"pmi accuracy={report.accuracy:.4f} over {report.n_total} reviews -> {args.report}")
    return 0


def cmd_tag_variance(args) -> int:
    annotated = []
    path = Path(args.annotated)
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ParseError("expected 'token<TAB>tag<TAB>polarity'", path=path, line=lineno)
        try:
            polarity = float(parts[2])
        except ValueError:
            raise ParseError(f"non-numeric polarity {parts[2]!r}",
                             path=path, line=lineno) from None
        annotated.append((TaggedToken(text=parts[0].lower(), tag=parts[1]), polarity))
    report = patterns.tag_polarity_variance(annotated)
    patterns.save_tag_variance(report, args.out)
    print(f"{len(report.per_tag)} tags, total variance {report.total_variance:.6g} -> {args.out}")
    return 0


def cmd_pipeline(args) -> int:
    config = eval_mod.PipelineConfig(
        corpus_path=args.corpus, reviews_path=args.reviews, out_dir=args.out,
        mode=args.mode, cutoff=args.cutoff, seed_word=args.seed_word,
        corpus_format=args.format, embeddings_path=args.embeddings,
        lexicon_path=args.lexicon, sgns=_sgns_config_from(args),
    )
    report = eval_mod.run_pipeline(config)
    print(f"accuracy={report.accuracy:.4f} over {report.n_total} reviews -> {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sentaxis",
        description="Induce per-word sentiment orientations from a review corpus "
                    "and evaluate them by review classification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train-embeddings", help="train skip-gram vectors on a corpus")
    _add_corpus_args(p)
    _add_training_args(p)
    p.add_argument("--out", required=True, help="output vector file")
    p.set_defaults(func=cmd_train_embeddings)

    p = sub.add_parser("extract-phrases", help="extract two-word phrases by tag rules")
    _add_corpus_args(p)
    p.add_argument("--out", required=True, help="output phrase TSV")
    p.set_defaults(func=cmd_extract_phrases)

    p = sub.add_parser("select-points", help="select point words by phrase frequency")
    p.add_argument("--phrases", required=True, help="phrase TSV from extract-phrases")
    _add_corpus_args(p)
    p.add_argument("--cutoff", type=int, required=True, help="minimum phrase frequency")
    p.add_argument("--out", required=True, help="output point-word TSV")
    p.set_defaults(func=cmd_select_points)

    p = sub.add_parser("build-axis", help="discover and orient the sentiment axis")
    p.add_argument("--embeddings", required=True)
    p.add_argument("--points", required=True, help="point-word TSV from select-points")
    p.add_argument("--mode", required=True, choices=[eval_mod.MODE_UNSUP, eval_mod.MODE_SEMI])
    p.add_argument("--lexicon", default=None, help="polarity lexicon TSV (semi mode)")
    p.add_argument("--seed-word", default=axis_mod.DEFAULT_SEED_WORD)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_build_axis)

    p = sub.add_parser("score", help="score the whole vocabulary against an axis")
    p.add_argument("--axis", required=True, help="axis directory or axis.tsv")
    p.add_argument("--embeddings", required=True)
    p.add_argument("--out", required=True, help="output orientation lexicon TSV")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("classify", help="evaluate an orientation lexicon on labeled reviews")
    p.add_argument("--lexicon", required=True, help="orientation lexicon TSV")
    p.add_argument("--reviews", required=True, help="labeled reviews file")
    p.add_argument("--report", required=True, help="output report file")
    _add_review_filter_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="accuracy across a range of frequency cutoffs")
    _add_corpus_args(p)
    p.add_argument("--reviews", required=True)
    p.add_argument("--embeddings", required=True)
    p.add_argument("--cutoffs", required=True, help="range 'A..B' or list 'a,b,c'")
    p.add_argument("--mode", required=True, choices=[eval_mod.MODE_UNSUP, eval_mod.MODE_SEMI])
    p.add_argument("--lexicon", default=None)
    p.add_argument("--seed-word", default=axis_mod.DEFAULT_SEED_WORD)
    p.add_argument("--csv", required=True, help="output CSV")
    _add_review_filter_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("pmi-baseline", help="PMI proximity baseline over a local index")
    _add_corpus_args(p)
    p.add_argument("--reviews", required=True)
    p.add_argument("--window", type=int, default=pmi.DEFAULT_WINDOW)
    p.add_argument("--seeds", default=f"{pmi.DEFAULT_POS_SEED},{pmi.DEFAULT_NEG_SEED}",
                   help="comma-separated positive,negative seed words")
    p.add_argument("--hit-unit", default=pmi.HIT_UNIT_DOCS,
                   choices=[pmi.HIT_UNIT_DOCS, pmi.HIT_UNIT_TOKENS],
                   help="count hits per document or per occurrence")
    p.add_argument("--report", required=True)
    _add_review_filter_args(p)
    p.set_defaults(func=cmd_pmi_baseline)

    p = sub.add_parser("tag-variance", help="polarity variance per POS tag")
    p.add_argument("--annotated", required=True,
                   help="TSV 'token<TAB>tag<TAB>polarity'")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_tag_variance)

    p = sub.add_parser("pipeline", help="run the full pipeline into an output directory")
    _add_corpus_args(p)
    p.add_argument("--reviews", required=True)
    p.add_argument("--mode", required=True, choices=[eval_mod.MODE_UNSUP, eval_mod.MODE_SEMI])
    p.add_argument("--cutoff", type=int, default=2)
    p.add_argument("--embeddings", default=None,
                   help="load vectors instead of training")
    p.add_argument("--lexicon", default=None)
    p.add_argument("--seed-word", default=axis_mod.DEFAULT_SEED_WORD)
    _add_training_args(p)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SentaxisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
