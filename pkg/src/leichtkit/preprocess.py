"""Corpus standardization for Easy Language text, plus corpus splitting.

The cleaning pipeline removes markup noise (tags, entities, URLs, control
characters), folds bullet lists into comma-separated phrases, and rewrites
known compound nouns into their hyphenated Easy Language form. Every stage
is idempotent, so running the pipeline on already-clean text is a no-op.
"""

from __future__ import annotations

import html
import json
import random
import re
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable

from .errors import ConfigError, DataError
from .textstats import tokenize

__all__ = [
    "Document",
    "HyphenationLexicon",
    "CorpusSplit",
    "strip_markup",
    "convert_bullets",
    "build_hyphenation_lexicon",
    "apply_hyphenation",
    "preprocess_text",
    "preprocess",
    "split_corpus",
]


@dataclass(frozen=True)
class Document:
    """One text unit flowing through the pipeline."""

    id: str
    raw_text: str
    clean_text: str | None = None
    meta: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.raw_text:
            raise DataError(f"document {self.id!r} has empty text")

    @classmethod
    def from_dict(cls, row: dict) -> "Document":
        try:
            return cls(id=str(row["id"]), raw_text=row["text"], meta=dict(row.get("meta", {})))
        except KeyError as exc:
            raise DataError(f"document row is missing field {exc}") from exc

    def to_dict(self) -> dict:
        """External JSONL shape; clean text replaces the raw text once set."""
        text = self.clean_text if self.clean_text is not None else self.raw_text
        return {"id": self.id, "text": text, "meta": self.meta}


# ---------------------------------------------------------------------------
# markup stripping
# ---------------------------------------------------------------------------

# C0/C1 control characters except newline; tab and carriage return survive
# here and are folded by the whitespace pass.
_CONTROL_CHARS = re.compile(r"[\x00-\x08\x0b\x0c\x0e-\x1f\x7f-\x9f]")
_TAG_SPAN = re.compile(r"<[^>]*>")
_LEFTOVER_ENTITY = re.compile(r"&(?:#[0-9]+|#[xX][0-9a-fA-F]+|[a-zA-Z][a-zA-Z0-9]*);")
_SCHEME_URL = re.compile(r"https?://\S+")
_WWW_TOKEN = re.compile(r"(?:(?<=\s)|^)www\.\S+")
_WHITESPACE_RUN = re.compile(r"\s+")


def _decode_entities(text: str) -> str:
    # Iterate to a fixed point so double-encoded input ("&amp;amp;") cannot
    # leave decodable entities behind, which would break idempotence.
    for _ in range(10):
        decoded = html.unescape(text)
        if decoded == text:
            return text
        text = decoded
    return text


def _collapse_whitespace(match: re.Match) -> str:
    return "\n" if "\n" in match.group() else " "


def strip_markup(raw: str) -> str:
    """Remove tags, entities, URLs, and control characters; normalize space.

    Entities are decoded before tags are stripped, so escaped markup is
    cleaned away in a single pass. Runs of whitespace collapse to one
    space, or to one newline if the run contained a line break.
    """
    text = _CONTROL_CHARS.sub("", raw)
    text = _decode_entities(text)
    while True:
        stripped = _TAG_SPAN.sub(" ", text)
        if stripped == text:
            break
        text = stripped
    text = _LEFTOVER_ENTITY.sub(" ", text)
    text = _SCHEME_URL.sub(" ", text)
    text = _WWW_TOKEN.sub(" ", text)
    return _WHITESPACE_RUN.sub(_collapse_whitespace, text).strip()


# ---------------------------------------------------------------------------
# bullet lists
# ---------------------------------------------------------------------------

_BULLET_PREFIX = re.compile(r"^\s*[•\-*–] ")
_SENTENCE_FINAL = (".", "!", "?")


def _strip_bullet_markers(line: str) -> str:
    while _BULLET_PREFIX.match(line):
        line = _BULLET_PREFIX.sub("", line, count=1)
    return line.strip()


def convert_bullets(text: str) -> str:
    """Fold each run of bullet lines into one comma-separated phrase.

    The joined phrase is appended to the previous line when that line ends
    with a colon, and receives a final period unless it already ends in
    sentence punctuation. All other lines pass through untouched.
    """
    out: list[str] = []
    items: list[str] = []

    def flush_items() -> None:
        if not items:
            return
        joined = ", ".join(items)
        if out and out[-1].endswith(":"):
            joined = f"{out.pop()} {joined}"
        if joined and not joined.endswith(_SENTENCE_FINAL):
            joined += "."
        out.append(joined)
        items.clear()

    for line in text.split("\n"):
        if _BULLET_PREFIX.match(line):
            items.append(_strip_bullet_markers(line))
        else:
            flush_items()
            out.append(line)
    flush_items()
    return "\n".join(out)


# ---------------------------------------------------------------------------
# compound-noun hyphenation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HyphenationLexicon:
    """Maps concatenated compounds to their hyphenated Easy Language form.

    Keys are the lowercase form with hyphens removed; values keep the
    original capitalization, e.g. ``{"bundesland": "Bundes-Land"}``.
    """

    entries: dict[str, str] = field(default_factory=dict)
    frequency: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for key, form in self.entries.items():
            if form.replace("-", "").lower() != key:
                raise DataError(f"lexicon entry {key!r} -> {form!r} is inconsistent")
            if "-" not in form or form.startswith("-") or form.endswith("-"):
                raise DataError(f"lexicon form {form!r} is not properly hyphenated")

    def __len__(self) -> int:
        return len(self.entries)

    def to_dict(self) -> dict:
        return {"entries": dict(sorted(self.entries.items())),
                "frequency": dict(sorted(self.frequency.items()))}

    @classmethod
    def from_dict(cls, payload: dict) -> "HyphenationLexicon":
        try:
            return cls(dict(payload["entries"]), {k: int(v) for k, v in payload["frequency"].items()})
        except (KeyError, TypeError, ValueError) as exc:
            raise DataError(f"malformed lexicon payload: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "HyphenationLexicon":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DataError(f"lexicon file is not valid JSON: {exc}") from exc
        return cls.from_dict(payload)


def _is_hyphenated_noun(token: str) -> bool:
    parts = token.split("-")
    if len(parts) < 2:
        return False
    return all(len(p) >= 2 and p[0].isupper() and p.isalpha() for p in parts)


def _document_text(doc: "Document | str") -> str:
    if isinstance(doc, str):
        return doc
    return doc.clean_text if doc.clean_text is not None else doc.raw_text


def build_hyphenation_lexicon(
    corpus: Iterable["Document | str"], min_count: int = 2
) -> HyphenationLexicon:
    """Collect hyphenated noun compounds occurring at least min_count times.

    A qualifying token consists of two or more hyphen-joined segments, each
    at least two letters long and starting uppercase (German nouns are
    capitalized, so this needs no tagger). When several hyphenations share
    a concatenated key, the most frequent form wins; ties go to the
    lexicographically smallest.
    """
    if min_count < 1:
        raise ConfigError("min_count must be >= 1")
    counts: Counter[str] = Counter()
    for doc in corpus:
        for token in tokenize(_document_text(doc)):
            if "-" in token and _is_hyphenated_noun(token):
                counts[token] += 1
    frequency = {form: n for form, n in counts.items() if n >= min_count}
    entries: dict[str, str] = {}
    best: dict[str, tuple[int, str]] = {}
    for form, n in frequency.items():
        key = form.replace("-", "").lower()
        rank = (-n, form)
        if key not in best or rank < best[key]:
            best[key] = rank
            entries[key] = form
    return HyphenationLexicon(entries, frequency)


_WORD_TOKEN = re.compile(r"(?<![^\W_])[^\W\d_]+(?:-[^\W\d_]+)*(?![^\W_])")


def apply_hyphenation(text: str, lexicon: HyphenationLexicon) -> str:
    """Rewrite whole tokens found in the lexicon to their hyphenated form.

    Matching is exact on the lowercase token; inflected forms are left
    alone, as are tokens that already contain a hyphen. The replacement
    keeps the casing of the original first letter and is single-pass.
    """
    if not lexicon.entries:
        return text

    def rewrite(match: re.Match) -> str:
        token = match.group()
        if "-" in token:
            return token
        canonical = lexicon.entries.get(token.lower())
        if canonical is None:
            return token
        if token[0].islower():
            return canonical[0].lower() + canonical[1:]
        return canonical

    return _WORD_TOKEN.sub(rewrite, text)


# ---------------------------------------------------------------------------
# full pipeline
# ---------------------------------------------------------------------------


def preprocess_text(text: str, lexicon: HyphenationLexicon | None = None) -> str:
    """Markup stripping, bullet conversion, and optional hyphenation."""
    cleaned = convert_bullets(strip_markup(text))
    if lexicon is not None:
        cleaned = apply_hyphenation(cleaned, lexicon)
    return cleaned


def preprocess(doc: Document, lexicon: HyphenationLexicon | None = None) -> Document:
    """Return a copy of the document with clean_text filled in."""
    return replace(doc, clean_text=preprocess_text(doc.raw_text, lexicon))


# ---------------------------------------------------------------------------
# corpus splitting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusSplit:
    train: list[Document]
    validation: list[Document]
    test: list[Document] | None
    seed: int
    ratios: tuple[float, ...]

    def parts(self) -> dict[str, list[Document]]:
        parts = {"train": self.train, "validation": self.validation}
        if self.test is not None:
            parts["test"] = self.test
        return parts


def split_corpus(docs: list[Document], ratios: Iterable[float], seed: int) -> CorpusSplit:
    """Deterministic shuffled split into train/validation(/test) parts.

    The shuffle is the Fisher-Yates pass of CPython's ``random.shuffle``
    driven by a Mersenne Twister (MT19937) seeded with ``seed``; any
    implementation reproducing that stream yields identical splits. After
    shuffling, documents are assigned contiguously with boundaries at
    ``round(cumulative_ratio * n)``, so part sizes match the ratios within
    one document.
    """
    ratios = tuple(float(r) for r in ratios)
    if not 2 <= len(ratios) <= 3:
        raise ConfigError("ratios must list two or three fractions")
    if any(not 0.0 < r <= 1.0 for r in ratios):
        raise ConfigError("each ratio must be in (0, 1]")
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise ConfigError(f"ratios must sum to 1, got {sum(ratios)!r}")
    docs = list(docs)
    if len(docs) < len(ratios):
        raise ConfigError(f"cannot split {len(docs)} documents into {len(ratios)} parts")

    shuffled = list(docs)
    random.Random(seed).shuffle(shuffled)

    n = len(shuffled)
    cuts = [0]
    cumulative = 0.0
    for ratio in ratios[:-1]:
        cumulative += ratio
        cuts.append(max(cuts[-1], round(cumulative * n)))
    cuts.append(n)
    parts = [shuffled[cuts[i] : cuts[i + 1]] for i in range(len(ratios))]
    return CorpusSplit(
        train=parts[0],
        validation=parts[1],
        test=parts[2] if len(parts) == 3 else None,
        seed=seed,
        ratios=ratios,
    )
