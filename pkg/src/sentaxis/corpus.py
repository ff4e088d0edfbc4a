"""Tagged-corpus, polarity-lexicon and frequency-table I/O.

Two tagged-corpus file formats are supported:

* ``one-token-per-line`` -- ``token<TAB>TAG`` per line, blank line between
  documents, UTF-8.
* ``inline`` -- one document per line, tokens written ``token_TAG`` and
  separated by spaces (the tag follows the last underscore).

Labeled review sets use a third format: ``LABEL<TAB>token_TAG token_TAG ...``
with one review per line and LABEL in {POS, NEG}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EmptyInputError, ParseError

POS = "POS"
NEG = "NEG"

FORMAT_ONE_TOKEN_PER_LINE = "one-token-per-line"
FORMAT_INLINE = "inline"

#: Penn Treebank word-level tag inventory; anything else classifies as OTHER.
PTB_TAGS = frozenset(
    """CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$
    RB RBR RBS RP SYM TO UH VB VBD VBG VBN VBP VBZ WDT WP WP$ WRB
    . , : ; ! ? `` '' -LRB- -RRB- $ #""".split()
)

OTHER_TAG = "OTHER"


def tag_class(tag: str) -> str:
    """Return the tag itself when it is a recognized PTB tag, else OTHER."""
    return tag if tag in PTB_TAGS else OTHER_TAG


@dataclass(frozen=True, slots=True)
class TaggedToken:
    text: str
    tag: str

    def __post_init__(self):
        if not self.text:
            raise ValueError("token text must be non-empty")
        if not self.tag:
            raise ValueError("token tag must be non-empty")


@dataclass(frozen=True, slots=True)
class TaggedDocument:
    id: str
    tokens: tuple[TaggedToken, ...]
    label: str | None = None

    def __post_init__(self):
        if not self.tokens:
            raise ValueError(f"document {self.id!r} has no tokens")
        if self.label is not None and self.label not in (POS, NEG):
            raise ValueError(f"document {self.id!r} has label {self.label!r}")

    def words(self) -> list[str]:
        return [t.text for t in self.tokens]


@dataclass(frozen=True, slots=True)
class TaggedCorpus:
    documents: tuple[TaggedDocument, ...]
    source: str = ""

    def __post_init__(self):
        ids = [d.id for d in self.documents]
        if len(ids) != len(set(ids)):
            seen, dup = set(), None
            for i in ids:
                if i in seen:
                    dup = i
                    break
                seen.add(i)
            raise ValueError(f"duplicate document id {dup!r}")

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    def document(self, doc_id: str) -> TaggedDocument:
        for doc in self.documents:
            if doc.id == doc_id:
                return doc
        raise KeyError(doc_id)


@dataclass(frozen=True, slots=True)
class PolarityLexicon:
    """word -> centered real polarity score; 0 is neutral."""

    entries: dict[str, float]
    neutral_threshold: float = 0.0
    duplicate_count: int = 0

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def score(self, word: str) -> float:
        return self.entries[word]


@dataclass(frozen=True, slots=True)
class FreqTable:
    counts: dict[str, int]
    total: int = field(default=0)

    def __post_init__(self):
        if self.total != sum(self.counts.values()):
            raise ValueError("total does not match sum of counts")


def _finish_document(doc_index: int, tokens: list[TaggedToken]) -> TaggedDocument:
    return TaggedDocument(id=f"d{doc_index:06d}", tokens=tuple(tokens))


def load_tagged_corpus(path, format: str = FORMAT_ONE_TOKEN_PER_LINE) -> TaggedCorpus:
    """Parse a tagged corpus file; tokens are lowercased at load time."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if format == FORMAT_ONE_TOKEN_PER_LINE:
        documents = _parse_one_token_per_line(text, path)
    elif format == FORMAT_INLINE:
        documents = _parse_inline(text, path)
    else:
        raise ValueError(f"unknown corpus format {format!r}")
    if not documents:
        raise EmptyInputError(f"{path}: no documents found")
    return TaggedCorpus(documents=tuple(documents), source=str(path))


def _parse_one_token_per_line(text: str, path) -> list[TaggedDocument]:
    documents: list[TaggedDocument] = []
    tokens: list[TaggedToken] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            if tokens:
                documents.append(_finish_document(len(documents), tokens))
                tokens = []
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise ParseError("expected 'token<TAB>TAG'", path=path, line=lineno)
        tokens.append(TaggedToken(text=parts[0].strip().lower(), tag=parts[1].strip()))
    if tokens:
        documents.append(_finish_document(len(documents), tokens))
    return documents


def _parse_inline(text: str, path) -> list[TaggedDocument]:
    documents: list[TaggedDocument] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        tokens = _parse_inline_tokens(line, path, lineno)
        documents.append(_finish_document(len(documents), tokens))
    return documents


def _parse_inline_tokens(line: str, path, lineno: int) -> list[TaggedToken]:
    tokens = []
    for piece in line.split():
        word, sep, tag = piece.rpartition("_")
        if not sep or not word or not tag:
            raise ParseError(
                f"expected 'token_TAG', got {piece!r}", path=path, line=lineno
            )
        tokens.append(TaggedToken(text=word.lower(), tag=tag))
    return tokens


def save_tagged_corpus(corpus: TaggedCorpus, path, format: str = FORMAT_ONE_TOKEN_PER_LINE) -> None:
    """Serialize a corpus; formats carry tokens and tags only (no ids, no labels)."""
    path = Path(path)
    lines: list[str] = []
    if format == FORMAT_ONE_TOKEN_PER_LINE:
        for i, doc in enumerate(corpus.documents):
            if i:
                lines.append("")
            lines.extend(f"{t.text}\t{t.tag}" for t in doc.tokens)
    elif format == FORMAT_INLINE:
        for doc in corpus.documents:
            lines.append(" ".join(f"{t.text}_{t.tag}" for t in doc.tokens))
    else:
        raise ValueError(f"unknown corpus format {format!r}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_labeled_reviews(path, drop_other_labels: bool = False) -> TaggedCorpus:
    """Parse a labeled review file: ``LABEL<TAB>token_TAG token_TAG ...``.

    Reviews whose label is neither POS nor NEG raise a parse error unless
    ``drop_other_labels`` is set, in which case they are skipped (the hook for
    excluding neutral-labeled reviews from a binary evaluation).
    """
    path = Path(path)
    documents: list[TaggedDocument] = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        label_part, sep, text_part = line.partition("\t")
        if not sep or not text_part.strip():
            raise ParseError("expected 'LABEL<TAB>tagged text'", path=path, line=lineno)
        label = label_part.strip().upper()
        if label not in (POS, NEG):
            if drop_other_labels:
                continue
            raise ParseError(f"label must be POS or NEG, got {label_part!r}",
                             path=path, line=lineno)
        tokens = _parse_inline_tokens(text_part, path, lineno)
        documents.append(
            TaggedDocument(id=f"r{len(documents):06d}", tokens=tuple(tokens), label=label)
        )
    if not documents:
        raise EmptyInputError(f"{path}: no labeled reviews found")
    return TaggedCorpus(documents=tuple(documents), source=str(path))


def load_polarity_lexicon(path, neutral_threshold: float = 0.0) -> PolarityLexicon:
    """Parse a TSV polarity lexicon (``word<TAB>score``); '#' lines are comments.

    Duplicate words keep the last entry; the number of overwritten entries is
    recorded in ``duplicate_count``.
    """
    path = Path(path)
    entries: dict[str, float] = {}
    duplicates = 0
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip():
            raise ParseError("expected 'word<TAB>score'", path=path, line=lineno)
        word = parts[0].strip().lower()
        try:
            score = float(parts[1])
        except ValueError:
            raise ParseError(f"non-numeric score {parts[1]!r}", path=path, line=lineno) from None
        if score != score or score in (float("inf"), float("-inf")):
            raise ParseError(f"score must be finite, got {parts[1]!r}", path=path, line=lineno)
        if word in entries:
            duplicates += 1
        entries[word] = score
    if not entries:
        raise EmptyInputError(f"{path}: no lexicon entries found")
    return PolarityLexicon(entries=entries, neutral_threshold=neutral_threshold,
                           duplicate_count=duplicates)


def save_polarity_lexicon(lexicon: PolarityLexicon, path) -> None:
    lines = [f"{w}\t{s!r}" for w, s in sorted(lexicon.entries.items())]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def count_frequencies(corpus: TaggedCorpus | Iterable[TaggedDocument]) -> FreqTable:
    """Token-occurrence counts over the whole corpus, keyed by word string."""
    counts: Counter[str] = Counter()
    for doc in corpus:
        counts.update(t.text for t in doc.tokens)
    return FreqTable(counts=dict(counts), total=sum(counts.values()))


def corpus_fingerprint(corpus: TaggedCorpus) -> str:
    """Stable short hash over document ids and token content."""
    import hashlib

    h = hashlib.sha256()
    for doc in corpus.documents:
        h.update(doc.id.encode("utf-8"))
        for t in doc.tokens:
            h.update(b"\x00")
            h.update(t.text.encode("utf-8"))
            h.update(b"\x01")
            h.update(t.tag.encode("utf-8"))
        h.update(b"\x02")
    return h.hexdigest()[:16]


def make_corpus(token_lists: Sequence[Sequence[tuple[str, str]]],
                labels: Sequence[str | None] | None = None,
                source: str = "inline") -> TaggedCorpus:
    """Build a corpus from (token, tag) tuples; convenience for tests and fixtures."""
    docs = []
    for i, pairs in enumerate(token_lists):
        label = labels[i] if labels is not None else None
        docs.append(TaggedDocument(
            id=f"d{i:06d}",
            tokens=tuple(TaggedToken(text=w.lower(), tag=t) for w, t in pairs),
            label=label,
        ))
    return TaggedCorpus(documents=tuple(docs), source=source)
