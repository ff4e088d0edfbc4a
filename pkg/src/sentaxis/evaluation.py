"""Review classification, accuracy evaluation, cutoff sweeps and the pipeline.

A review is labeled by the mean orientation of its in-lexicon tokens (token
occurrences count with multiplicity): negative when the mean is below zero,
positive otherwise. Reviews with no in-lexicon token keep the zero-mean
convention (labeled POS) and are reported separately as undecided.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Iterable, Sequence

from . import axis as axis_mod
from . import patterns, pmi
from .corpus import (
    NEG,
    POS,
    FORMAT_ONE_TOKEN_PER_LINE,
    TaggedCorpus,
    TaggedDocument,
    load_labeled_reviews,
    load_polarity_lexicon,
    load_tagged_corpus,
)
from .errors import ConfigError, EmptyInputError, PipelineError, SentaxisError
from .sgns import SgnsConfig, train_sgns
from .vectors import EmbeddingTable, load_embeddings, save_embeddings

MODE_UNSUP = "unsup"
MODE_SEMI = "semi"
MODE_PMI = "pmi"

_MODE_NAMES = {
    MODE_UNSUP: axis_mod.MODE_UNSUPERVISED,
    MODE_SEMI: axis_mod.MODE_SEMI_SUPERVISED,
}


@dataclass(frozen=True, slots=True)
class EvalReport:
    accuracy: float
    n_total: int
    n_correct: int
    n_pos_gold: int
    n_neg_gold: int
    n_undecided: int
    confusion: tuple[tuple[int, int], tuple[int, int]]
    config_snapshot: dict = field(default_factory=dict)


@dataclass(frozen=True, slots=True)
class SweepRow:
    cutoff: int
    k_point_words: int
    accuracy: float | None
    mode: str
    reason: str = ""


def review_mean(review: TaggedDocument, lexicon: axis_mod.OrientationLexicon) -> tuple[float, int]:
    """Mean orientation over in-lexicon tokens and how many tokens scored."""
    total = 0.0
    n = 0
    for token in review.tokens:
        if token.text in lexicon:
            total += lexicon.score(token.text)
            n += 1
    return (total / n if n else 0.0), n


def classify_review(review: TaggedDocument, lexicon: axis_mod.OrientationLexicon) -> str:
    """NEG when the mean orientation is below zero, else POS."""
    mean, _ = review_mean(review, lexicon)
    return NEG if mean < 0.0 else POS


def _gold_documents(reviews: TaggedCorpus | Iterable[TaggedDocument]) -> list[TaggedDocument]:
    docs = list(reviews)
    if not docs:
        raise EmptyInputError("no reviews to evaluate")
    unlabeled = [d.id for d in docs if d.label not in (POS, NEG)]
    if unlabeled:
        raise ConfigError(f"reviews without gold labels: {unlabeled[:5]}")
    return docs


def _tally(outcomes: Iterable[tuple[str, str, bool]], config_snapshot: dict) -> EvalReport:
    """Aggregate (gold, predicted, undecided) triples into a report."""
    confusion = {(POS, POS): 0, (POS, NEG): 0, (NEG, POS): 0, (NEG, NEG): 0}
    undecided = 0
    for gold, predicted, is_undecided in outcomes:
        confusion[(gold, predicted)] += 1
        undecided += is_undecided
    n_total = sum(confusion.values())
    n_correct = confusion[(POS, POS)] + confusion[(NEG, NEG)]
    return EvalReport(
        accuracy=n_correct / n_total,
        n_total=n_total,
        n_correct=n_correct,
        n_pos_gold=confusion[(POS, POS)] + confusion[(POS, NEG)],
        n_neg_gold=confusion[(NEG, POS)] + confusion[(NEG, NEG)],
        n_undecided=undecided,
        confusion=((confusion[(POS, POS)], confusion[(POS, NEG)]),
                   (confusion[(NEG, POS)], confusion[(NEG, NEG)])),
        config_snapshot=dict(config_snapshot),
    )


def evaluate(reviews: TaggedCorpus | Iterable[TaggedDocument],
             lexicon: axis_mod.OrientationLexicon,
             config_snapshot: dict | None = None) -> EvalReport:
    """Accuracy and confusion of lexicon classification against gold labels."""
    docs = _gold_documents(reviews)

    def outcomes():
        for doc in docs:
            mean, n = review_mean(doc, lexicon)
            yield doc.label, (NEG if mean < 0.0 else POS), n == 0

    return _tally(outcomes(), config_snapshot or {})


def evaluate_pmi(index: pmi.NearIndex, reviews: TaggedCorpus | Iterable[TaggedDocument],
                 pos_seed: str = pmi.DEFAULT_POS_SEED,
                 neg_seed: str = pmi.DEFAULT_NEG_SEED,
                 config_snapshot: dict | None = None,
                 unit: str = pmi.HIT_UNIT_DOCS) -> EvalReport:
    """PMI baseline accuracy; phrase orientations are cached across reviews."""
    docs = _gold_documents(reviews)
    rules = patterns.builtin_rules()
    cache: dict = {}

    def outcomes():
        for doc in docs:
            result = pmi.classify_review_pmi(index, doc, rules, pos_seed=pos_seed,
                                             neg_seed=neg_seed, so_cache=cache,
                                             unit=unit)
            yield doc.label, result.label, result.no_phrase

    return _tally(outcomes(), config_snapshot or {})


def filter_reviews(reviews: TaggedCorpus, limit: int | None = None,
                   min_tokens: int | None = None) -> TaggedCorpus:
    """Review-filter hook: drop short reviews, then truncate to the first N."""
    docs = reviews.documents
    if min_tokens is not None:
        docs = tuple(d for d in docs if len(d.tokens) >= min_tokens)
    if limit is not None:
        docs = docs[:limit]
    if not docs:
        raise EmptyInputError("review filter left no reviews")
    return TaggedCorpus(documents=docs, source=reviews.source)


def induce_axis(points: patterns.PointWordSet, table: EmbeddingTable, mode: str,
                lexicon=None, seed_word: str = axis_mod.DEFAULT_SEED_WORD):
    """Point words -> oriented sentiment axis (plus the projection when computed).

    mode 'unsup' partitions at the origin of the principal axis; mode 'semi'
    partitions by lexicon sign (the projection is still computed best-effort
    for diagnostics).
    """
    if mode not in _MODE_NAMES:
        raise ConfigError(f"mode must be one of {sorted(_MODE_NAMES)}, got {mode!r}")
    dm = axis_mod.build_distance_matrix(points, table)
    projection = None
    if mode == MODE_UNSUP:
        projection = axis_mod.principal_axis(dm)
        set_a, set_b = axis_mod.partition_by_origin(projection)
    else:
        if lexicon is None:
            raise ConfigError("semi-supervised mode requires a polarity lexicon")
        set_a, set_b, _dropped = axis_mod.partition_by_lexicon(points, lexicon)
        try:
            projection = axis_mod.principal_axis(dm)
        except SentaxisError:
            projection = None  # diagnostics only; the partition came from the lexicon
    vec_a, vec_b = axis_mod.build_reference_vectors(set_a, set_b, table)
    oriented = axis_mod.orient_by_seed(vec_a, vec_b, set_a, set_b, table,
                                       seed=seed_word, mode=_MODE_NAMES[mode])
    return oriented, projection


def sweep_cutoffs(corpus: TaggedCorpus, reviews: TaggedCorpus, mode: str,
                  cutoffs: Sequence[int], table: EmbeddingTable,
                  lexicon=None, seed_word: str = axis_mod.DEFAULT_SEED_WORD) -> list[SweepRow]:
    """Re-run selection -> axis -> scoring -> evaluation per cutoff.

    Per-cutoff failures become rows with a reason code instead of aborting.
    """
    if mode not in _MODE_NAMES:
        raise ConfigError(f"sweep mode must be one of {sorted(_MODE_NAMES)}, got {mode!r}")
    if not cutoffs:
        raise ConfigError("cutoff range is empty")
    phrases = patterns.extract_phrases(corpus)
    rows: list[SweepRow] = []
    for cutoff in cutoffs:
        k = 0
        try:
            points = patterns.select_point_words(phrases, corpus, cutoff)
            k = len(points.words)
            oriented, _ = induce_axis(points, table, mode, lexicon=lexicon,
                                      seed_word=seed_word)
            lex = axis_mod.score_vocabulary(oriented, table)
            report = evaluate(reviews, lex)
            rows.append(SweepRow(cutoff=cutoff, k_point_words=k,
                                 accuracy=report.accuracy, mode=mode))
        except SentaxisError as exc:
            rows.append(SweepRow(cutoff=cutoff, k_point_words=k, accuracy=None,
                                 mode=mode, reason=type(exc).__name__))
    return rows


# ---------------------------------------------------------------------------
# pipeline

@dataclass(frozen=True, slots=True)
class PipelineConfig:
    corpus_path: str
    reviews_path: str
    out_dir: str
    mode: str = MODE_UNSUP
    cutoff: int = 2
    seed_word: str = axis_mod.DEFAULT_SEED_WORD
    corpus_format: str = FORMAT_ONE_TOKEN_PER_LINE
    embeddings_path: str | None = None
    lexicon_path: str | None = None
    sgns: SgnsConfig = field(default_factory=SgnsConfig)

    def snapshot(self) -> dict:
        flat = asdict(self)
        for key, value in flat.pop("sgns").items():
            flat[f"sgns_{key}"] = value
        return flat


def _stage(name: str, func, *args, **kwargs):
    try:
        return func(*args, **kwargs)
    except SentaxisError as exc:
        raise PipelineError(name, exc) from exc


def run_pipeline(config: PipelineConfig) -> EvalReport:
    """Corpus -> embeddings -> point words -> axis -> lexicon -> evaluation.

    Writes lexicon.tsv, axis.tsv, projection.csv, report.txt (and
    embeddings.txt when vectors were trained here) under config.out_dir.
    Deterministic given the configured seeds.
    """
    if config.mode == MODE_SEMI and config.lexicon_path is None:
        raise ConfigError("semi-supervised mode requires --lexicon")
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    corpus = _stage("load-corpus", load_tagged_corpus, config.corpus_path,
                    config.corpus_format)
    reviews = _stage("load-reviews", load_labeled_reviews, config.reviews_path)
    polarity = None
    if config.lexicon_path is not None:
        polarity = _stage("load-lexicon", load_polarity_lexicon, config.lexicon_path)

    if config.embeddings_path is not None:
        table = _stage("load-embeddings", load_embeddings, config.embeddings_path)
    else:
        table = _stage("train-embeddings", train_sgns, corpus, config.sgns)
        save_embeddings(table, out_dir / "embeddings.txt")

    phrases = _stage("extract-phrases", patterns.extract_phrases, corpus)
    points = _stage("select-points", patterns.select_point_words, phrases, corpus,
                    config.cutoff)
    oriented, projection = _stage("build-axis", induce_axis, points, table,
                                  config.mode, polarity, config.seed_word)
    lexicon = _stage("score", axis_mod.score_vocabulary, oriented, table)
    report = _stage("evaluate", evaluate, reviews, lexicon, config.snapshot())

    axis_mod.save_axis(oriented, out_dir)
    axis_mod.save_orientation_lexicon(lexicon, out_dir / "lexicon.tsv")
    if projection is not None:
        axis_mod.save_projection_csv(projection, out_dir / "projection.csv")
    write_report(report, out_dir / "report.txt")
    return report


# ---------------------------------------------------------------------------
# report and sweep serialization

def write_report(report: EvalReport, path) -> None:
    """Line-oriented key=value dump with the confusion matrix."""
    lines = [
        f"accuracy={report.accuracy!r}",
        f"n_total={report.n_total}",
        f"n_correct={report.n_correct}",
        f"n_pos_gold={report.n_pos_gold}",
        f"n_neg_gold={report.n_neg_gold}",
        f"n_undecided={report.n_undecided}",
        f"confusion_gold_pos_pred_pos={report.confusion[0][0]}",
        f"confusion_gold_pos_pred_neg={report.confusion[0][1]}",
        f"confusion_gold_neg_pred_pos={report.confusion[1][0]}",
        f"confusion_gold_neg_pred_neg={report.confusion[1][1]}",
    ]
    for key in sorted(report.config_snapshot):
        lines.append(f"config_{key}={report.config_snapshot[key]}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_report(path) -> dict[str, str]:
    values = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip():
            key, _, value = line.partition("=")
            values[key] = value
    return values


def write_sweep_csv(rows: Iterable[SweepRow], path) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["cutoff", "k", "mode", "accuracy", "reason"])
        for row in rows:
            accuracy = "" if row.accuracy is None else repr(row.accuracy)
            writer.writerow([row.cutoff, row.k_point_words, row.mode, accuracy, row.reason])
