"""Sentiment-axis construction and word orientation scoring.

Pipeline: pairwise cosine-distance matrix over the point words -> principal
components of the row space -> split at the origin of the first component (or
by a polarity lexicon) -> average each side into a reference vector -> orient
the pair by closeness to a seed word -> score every vocabulary word by the
difference of cosine similarities to the two references.

The orientation of a word w is cos(vec_pos, w) - cos(vec_neg, w), i.e. the
distance-to-negative minus distance-to-positive, so positive words score
positive and the seed's own score is non-negative by construction.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import pca
from .corpus import PolarityLexicon
from .errors import (
    AmbiguousOrientationError,
    DegenerateMatrixError,
    DegenerateVectorError,
    InsufficientDataError,
    ParseError,
    PartitionError,
    SeedMissingError,
    UndefinedCorrelationError,
)
from .patterns import PointWordSet
from .vectors import EmbeddingTable, cosine_distance

MODE_UNSUPERVISED = "unsupervised"
MODE_SEMI_SUPERVISED = "semi-supervised"

DEFAULT_SEED_WORD = "excellent"

#: Distance differences below this are treated as an orientation tie.
ORIENTATION_TIE_EPS = 1e-12


@dataclass(frozen=True, slots=True)
class DistanceMatrix:
    words: tuple[str, ...]
    d: np.ndarray
    dropped: tuple[str, ...] = ()

    def __post_init__(self):
        k = len(self.words)
        if k < 3:
            raise InsufficientDataError(f"need at least 3 point words, got {k}")
        if self.d.shape != (k, k):
            raise ValueError(f"matrix shape {self.d.shape} does not match {k} words")


@dataclass(frozen=True, slots=True)
class AxisProjection:
    words: tuple[str, ...]
    pc1: np.ndarray
    pc2: np.ndarray
    explained_variance: tuple[float, float]


@dataclass(frozen=True, slots=True)
class SentimentAxis:
    pos_words: tuple[str, ...]
    neg_words: tuple[str, ...]
    vec_pos: np.ndarray
    vec_neg: np.ndarray
    seed: str = DEFAULT_SEED_WORD
    mode: str = MODE_UNSUPERVISED

    def __post_init__(self):
        if set(self.pos_words) & set(self.neg_words):
            raise ValueError("pos_words and neg_words overlap")
        if np.array_equal(self.vec_pos, self.vec_neg):
            raise ValueError("reference vectors are identical")


@dataclass(frozen=True, slots=True)
class OrientationLexicon:
    scores: dict[str, float]
    axis: SentimentAxis | None
    fingerprint: str

    def __contains__(self, word: str) -> bool:
        return word in self.scores

    def score(self, word: str) -> float:
        return self.scores[word]


def build_distance_matrix(points: PointWordSet, table: EmbeddingTable) -> DistanceMatrix:
    """K x K cosine distances over the in-vocabulary point words (sorted).

    Out-of-vocabulary point words are dropped and reported on the result.
    """
    in_vocab = sorted(w for w in points.words if w in table)
    dropped = tuple(sorted(set(points.words) - set(in_vocab)))
    if len(in_vocab) < 3:
        raise InsufficientDataError(
            f"only {len(in_vocab)} point words are in the embedding vocabulary; need 3")
    vectors = np.stack([table[w] for w in in_vocab])
    norms = np.linalg.norm(vectors, axis=1)
    if np.any(norms == 0.0):
        bad = in_vocab[int(np.argmin(norms))]
        raise DegenerateVectorError(f"point word {bad!r} has a zero vector")
    unit = vectors / norms[:, None]
    d = 1.0 - np.clip(unit @ unit.T, -1.0, 1.0)
    d = (d + d.T) / 2.0  # exact symmetry against BLAS round-off
    np.fill_diagonal(d, 0.0)
    np.clip(d, 0.0, 2.0, out=d)
    return DistanceMatrix(words=tuple(in_vocab), d=d, dropped=dropped)


def principal_axis(dm: DistanceMatrix) -> AxisProjection:
    """Project each word's distance-matrix row onto the top two principal axes.

    Rows are column-mean-centered first; eigenvectors come from deterministic
    power iteration with deflation and a canonical sign (largest-magnitude
    component positive). explained_variance holds each component's share of
    the total.
    """
    x = dm.d
    centered = x - x.mean(axis=0)
    k = x.shape[0]
    cov = centered.T @ centered / (k - 1)
    cov = (cov + cov.T) / 2.0
    total = float(np.trace(cov))
    if total <= 0.0:
        raise DegenerateMatrixError("all rows identical: rank 0 after centering")
    values, vectors = pca.top_two_components(cov)
    pc1 = centered @ vectors[0]
    pc2 = centered @ vectors[1]
    return AxisProjection(
        words=dm.words,
        pc1=pc1,
        pc2=pc2,
        explained_variance=(values[0] / total, values[1] / total),
    )


def partition_by_origin(proj: AxisProjection) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Split words at zero on the principal axis; pc1 == 0 goes to the first set."""
    set_a = tuple(w for w, v in zip(proj.words, proj.pc1) if v >= 0.0)
    set_b = tuple(w for w, v in zip(proj.words, proj.pc1) if v < 0.0)
    if not set_a or not set_b:
        raise PartitionError("principal axis did not separate the point words")
    return set_a, set_b


def partition_by_lexicon(points: PointWordSet, lex: PolarityLexicon):
    """Split point words by polarity sign relative to the lexicon's threshold.

    Words missing from the lexicon or exactly at the threshold are dropped.
    Returns (positive_side, negative_side, dropped).
    """
    set_a, set_b, dropped = [], [], []
    threshold = lex.neutral_threshold
    for word in sorted(points.words):
        if word not in lex:
            dropped.append(word)
        elif lex.score(word) > threshold:
            set_a.append(word)
        elif lex.score(word) < threshold:
            set_b.append(word)
        else:
            dropped.append(word)
    if not set_a or not set_b:
        raise PartitionError(
            f"lexicon left one side empty ({len(set_a)} positive / {len(set_b)} negative)")
    return tuple(set_a), tuple(set_b), tuple(dropped)


def build_reference_vectors(set_a, set_b, table: EmbeddingTable):
    """Component-wise mean vector of each side's in-vocabulary members."""
    return _mean_vector(set_a, table, "first"), _mean_vector(set_b, table, "second")


def _mean_vector(words, table: EmbeddingTable, side: str) -> np.ndarray:
    members = sorted(w for w in words if w in table)
    if not members:
        raise InsufficientDataError(f"{side} set has no in-vocabulary words")
    mean = np.mean(np.stack([table[w] for w in members]), axis=0)
    if not np.any(mean):
        raise DegenerateVectorError(f"{side} set averages to the zero vector")
    return mean


def orient_by_seed(vec_a: np.ndarray, vec_b: np.ndarray, set_a, set_b,
                   table: EmbeddingTable, seed: str = DEFAULT_SEED_WORD,
                   mode: str = MODE_UNSUPERVISED) -> SentimentAxis:
    """Name the reference closer to the seed word 'positive'."""
    if seed not in table:
        raise SeedMissingError(f"seed word {seed!r} not in embedding vocabulary")
    seed_vec = table[seed]
    dist_a = cosine_distance(vec_a, seed_vec)
    dist_b = cosine_distance(vec_b, seed_vec)
    if abs(dist_a - dist_b) < ORIENTATION_TIE_EPS:
        raise AmbiguousOrientationError(
            f"references are equidistant from seed {seed!r} (distance {dist_a})")
    if dist_a < dist_b:
        pos_words, neg_words, vec_pos, vec_neg = set_a, set_b, vec_a, vec_b
    else:
        pos_words, neg_words, vec_pos, vec_neg = set_b, set_a, vec_b, vec_a
    return SentimentAxis(pos_words=tuple(pos_words), neg_words=tuple(neg_words),
                         vec_pos=vec_pos, vec_neg=vec_neg, seed=seed, mode=mode)


def sentiment_orientation(word: str, axis: SentimentAxis, table: EmbeddingTable) -> float:
    """cos(vec_pos, w) - cos(vec_neg, w), in [-2, 2]."""
    from .vectors import cosine_similarity

    vec = table[word]
    return cosine_similarity(axis.vec_pos, vec) - cosine_similarity(axis.vec_neg, vec)


def score_vocabulary(axis: SentimentAxis, table: EmbeddingTable) -> OrientationLexicon:
    """Orientation score for every vocabulary word."""
    norms = np.linalg.norm(table.matrix, axis=1)
    if np.any(norms == 0.0):
        bad = table.words[int(np.argmin(norms))]
        raise DegenerateVectorError(f"vocabulary word {bad!r} has a zero vector")
    sims_pos = _similarities(table.matrix, norms, axis.vec_pos)
    sims_neg = _similarities(table.matrix, norms, axis.vec_neg)
    values = sims_pos - sims_neg
    scores = {w: float(values[i]) for i, w in enumerate(table.words)}
    return OrientationLexicon(scores=scores, axis=axis, fingerprint=table.fingerprint())


def _similarities(matrix: np.ndarray, norms: np.ndarray, reference: np.ndarray) -> np.ndarray:
    ref_norm = float(np.linalg.norm(reference))
    if ref_norm == 0.0:
        raise DegenerateVectorError("reference vector is zero")
    return np.clip((matrix @ reference) / (norms * ref_norm), -1.0, 1.0)


def correlate_with_gold(proj: AxisProjection, gold: PolarityLexicon) -> float:
    """Absolute Pearson correlation between pc1 and gold scores on shared words."""
    pairs = [(v, gold.score(w)) for w, v in zip(proj.words, proj.pc1) if w in gold]
    if len(pairs) < 2:
        raise InsufficientDataError(
            f"only {len(pairs)} words shared between projection and gold lexicon")
    x = np.array([p[0] for p in pairs])
    y = np.array([p[1] for p in pairs])
    if np.ptp(x) == 0.0 or np.ptp(y) == 0.0:
        raise UndefinedCorrelationError("zero variance on one side of the correlation")
    return abs(float(np.corrcoef(x, y)[0, 1]))


# ---------------------------------------------------------------------------
# persistence

AXIS_FILENAME = "axis.tsv"


def save_axis(axis: SentimentAxis, directory) -> Path:
    """Write the axis as one record-per-line TSV under the directory."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / AXIS_FILENAME
    lines = [f"mode\t{axis.mode}", f"seed\t{axis.seed}"]
    lines.extend(f"pos\t{w}" for w in axis.pos_words)
    lines.extend(f"neg\t{w}" for w in axis.neg_words)
    lines.append("vec_pos\t" + " ".join(repr(float(v)) for v in axis.vec_pos))
    lines.append("vec_neg\t" + " ".join(repr(float(v)) for v in axis.vec_neg))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def load_axis(directory_or_file) -> SentimentAxis:
    path = Path(directory_or_file)
    if path.is_dir():
        path = path / AXIS_FILENAME
    fields: dict[str, str] = {}
    pos_words: list[str] = []
    neg_words: list[str] = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, value = line.partition("\t")
        if not sep:
            raise ParseError("expected 'key<TAB>value'", path=path, line=lineno)
        if key == "pos":
            pos_words.append(value)
        elif key == "neg":
            neg_words.append(value)
        elif key in ("mode", "seed", "vec_pos", "vec_neg"):
            fields[key] = value
        else:
            raise ParseError(f"unknown record type {key!r}", path=path, line=lineno)
    missing = {"mode", "seed", "vec_pos", "vec_neg"} - fields.keys()
    if missing:
        raise ParseError(f"missing records: {sorted(missing)}", path=path)
    return SentimentAxis(
        pos_words=tuple(pos_words),
        neg_words=tuple(neg_words),
        vec_pos=np.array([float(v) for v in fields["vec_pos"].split()]),
        vec_neg=np.array([float(v) for v in fields["vec_neg"].split()]),
        seed=fields["seed"],
        mode=fields["mode"],
    )


def save_orientation_lexicon(lexicon: OrientationLexicon, path) -> None:
    """TSV ``word<TAB>score`` sorted by word, with provenance header comments."""
    path = Path(path)
    mode = lexicon.axis.mode if lexicon.axis is not None else "unknown"
    seed = lexicon.axis.seed if lexicon.axis is not None else "unknown"
    with path.open("w", encoding="utf-8") as fh:
        fh.write(f"# embedding_fingerprint={lexicon.fingerprint}\n")
        fh.write(f"# mode={mode}\n")
        fh.write(f"# seed={seed}\n")
        for word in sorted(lexicon.scores):
            fh.write(f"{word}\t{lexicon.scores[word]!r}\n")


def load_orientation_lexicon(path) -> OrientationLexicon:
    path = Path(path)
    scores: dict[str, float] = {}
    fingerprint = ""
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            body = line.lstrip("# ")
            if body.startswith("embedding_fingerprint="):
                fingerprint = body.partition("=")[2]
            continue
        word, sep, value = line.partition("\t")
        if not sep or not word:
            raise ParseError("expected 'word<TAB>score'", path=path, line=lineno)
        try:
            scores[word] = float(value)
        except ValueError:
            raise ParseError(f"non-numeric score {value!r}", path=path, line=lineno) from None
    if not scores:
        raise ParseError("no scores found", path=path)
    return OrientationLexicon(scores=scores, axis=None, fingerprint=fingerprint)


def save_projection_csv(proj: AxisProjection, path) -> None:
    """CSV ``word,pc1,pc2`` for external plotting."""
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["word", "pc1", "pc2"])
        for word, v1, v2 in zip(proj.words, proj.pc1, proj.pc2):
            writer.writerow([word, repr(float(v1)), repr(float(v2))])
