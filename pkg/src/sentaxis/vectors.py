"""Dense word-vector tables and cosine geometry primitives.

Vectors are stored unnormalized; the geometry helpers normalize on the fly.
The on-disk text format is: a header line ``vocab_count dim`` followed by one
``word v1 v2 ... v_dim`` line per word (space separators, UTF-8). The same
format imports externally trained vectors.
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import DegenerateVectorError, OovError, ParseError


class EmbeddingTable(Mapping[str, np.ndarray]):
    """Immutable word -> vector mapping backed by a single matrix."""

    def __init__(self, words: Sequence[str], matrix: np.ndarray,
                 metadata: dict | None = None):
        matrix = np.asarray(matrix, dtype=np.float64)
        if matrix.ndim != 2:
            raise ValueError("matrix must be 2-dimensional")
        if len(words) != matrix.shape[0]:
            raise ValueError("word count does not match matrix rows")
        if matrix.shape[1] < 1:
            raise ValueError("vector dimension must be positive")
        if not np.all(np.isfinite(matrix)):
            raise ValueError("vectors must be finite")
        if any(not w for w in words):
            raise ValueError("words must be non-empty")
        if len(set(words)) != len(words):
            raise ValueError("words must be unique")
        self._words = tuple(words)
        self._index = {w: i for i, w in enumerate(self._words)}
        self._matrix = matrix
        self._matrix.flags.writeable = False
        self.metadata = dict(metadata or {})

    @property
    def dim(self) -> int:
        return self._matrix.shape[1]

    @property
    def words(self) -> tuple[str, ...]:
        return self._words

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def __len__(self) -> int:
        return len(self._words)

    def __iter__(self) -> Iterator[str]:
        return iter(self._words)

    def __contains__(self, word) -> bool:
        return word in self._index

    def __getitem__(self, word: str) -> np.ndarray:
        try:
            return self._matrix[self._index[word]]
        except KeyError:
            raise OovError(f"word {word!r} not in vocabulary") from None

    vector = __getitem__

    def row(self, word: str) -> int:
        try:
            return self._index[word]
        except KeyError:
            raise OovError(f"word {word!r} not in vocabulary") from None

    def fingerprint(self) -> str:
        """Stable short hash over vocabulary and vector bytes."""
        h = hashlib.sha256()
        h.update(str(self.dim).encode())
        for w in self._words:
            h.update(b"\x00")
            h.update(w.encode("utf-8"))
        h.update(np.ascontiguousarray(self._matrix).tobytes())
        return h.hexdigest()[:16]


def save_embeddings(table: EmbeddingTable, path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        fh.write(f"{len(table)} {table.dim}\n")
        for word in table.words:
            values = " ".join(repr(float(v)) for v in table[word])
            fh.write(f"{word} {values}\n")


def load_embeddings(path) -> EmbeddingTable:
    path = Path(path)
    with path.open("r", encoding="utf-8") as fh:
        header = fh.readline()
        parts = header.split()
        if len(parts) != 2:
            raise ParseError("header must be 'vocab_count dim'", path=path, line=1)
        try:
            vocab_count, dim = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("header must be 'vocab_count dim'", path=path, line=1) from None
        if vocab_count < 1 or dim < 1:
            raise ParseError("vocab_count and dim must be positive", path=path, line=1)
        words: list[str] = []
        matrix = np.empty((vocab_count, dim), dtype=np.float64)
        lineno = 1
        for line in fh:
            lineno += 1
            if not line.strip():
                continue
            row = line.split()
            if len(row) != dim + 1:
                raise ParseError(
                    f"expected {dim} values for word {row[0]!r}, got {len(row) - 1}",
                    path=path, line=lineno)
            if len(words) >= vocab_count:
                raise ParseError("more rows than the header promised", path=path, line=lineno)
            word = row[0]
            if word in set(words):
                raise ParseError(f"duplicate word {word!r}", path=path, line=lineno)
            try:
                matrix[len(words)] = [float(v) for v in row[1:]]
            except ValueError:
                raise ParseError(f"non-numeric vector component for {word!r}",
                                 path=path, line=lineno) from None
            words.append(word)
    if len(words) != vocab_count:
        raise ParseError(f"header promised {vocab_count} rows, found {len(words)}", path=path)
    return EmbeddingTable(words, matrix, metadata={"source": str(path)})


def _checked_norms(a: np.ndarray, b: np.ndarray) -> tuple[float, float]:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"vector lengths differ: {a.shape} vs {b.shape}")
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        raise DegenerateVectorError("cosine of a zero vector is undefined")
    return na, nb


def cosine_similarity(a: np.ndarray, b: np.ndarray) -> float:
    """dot(a,b) / (|a||b|), clamped into [-1, 1] against round-off."""
    na, nb = _checked_norms(a, b)
    sim = float(np.dot(a, b)) / (na * nb)
    return max(-1.0, min(1.0, sim))


def cosine_distance(a: np.ndarray, b: np.ndarray) -> float:
    """1 - cosine_similarity; ranges over [0, 2]."""
    return 1.0 - cosine_similarity(a, b)


def nearest_neighbors(table: EmbeddingTable, word: str, k: int) -> list[tuple[str, float]]:
    """Top-k vocabulary words by cosine similarity, query excluded.

    Ties break lexicographically; k is clamped to vocabulary size - 1.
    Zero-norm candidate rows (possible in imported tables) are skipped.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    query = table[word]
    qnorm = float(np.linalg.norm(query))
    if qnorm == 0.0:
        raise DegenerateVectorError(f"query vector for {word!r} is zero")
    norms = np.linalg.norm(table.matrix, axis=1)
    sims = table.matrix @ query
    scored = []
    for i, candidate in enumerate(table.words):
        if candidate == word or norms[i] == 0.0:
            continue
        sim = max(-1.0, min(1.0, float(sims[i]) / (float(norms[i]) * qnorm)))
        scored.append((candidate, sim))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:k]
