"""German tokenization, sentence splitting, and readability statistics.

The readability score is the German adaptation of the Flesch Reading Ease:

    FRE = 180 - ASL - 58.5 * ASW

where ASL is the average sentence length in words and ASW the average
number of syllables per word. Higher scores mean more accessible text.
Syllables are counted heuristically as vowel groups with a fixed list of
German digraphs, which is deterministic and adequate for comparing
averages between texts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

__all__ = [
    "TokenizedText",
    "ReadabilityReport",
    "EasyLanguageReport",
    "tokenize",
    "split_sentences",
    "count_syllables",
    "tokenized",
    "flesch_reading_ease",
    "easy_language_report",
]

# Words keep internal hyphens and apostrophes; everything else that is not
# whitespace becomes a single-character token.
_TOKEN = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*|\S")

_VOWELS = set("aeiouäöüy")
_DIGRAPHS = {"ei", "ie", "au", "eu", "äu", "aa", "ee", "oo"}

_TERMINALS = ".!?:"
_OPENERS = "([{\"'„“‚«»"


@dataclass(frozen=True)
class TokenizedText:
    """Tokens plus sentence structure of one text."""

    tokens: tuple[str, ...]
    sentence_spans: tuple[tuple[int, int], ...]
    newline_count: int


@dataclass(frozen=True)
class ReadabilityReport:
    fre: float
    avg_sentence_length_words: float
    avg_syllables_per_word: float
    sentence_count: int
    word_count: int
    newlines_per_sentence: float


@dataclass(frozen=True)
class EasyLanguageReport(ReadabilityReport):
    """Readability plus Easy Language conformance signals.

    One-sentence-per-line text has newlines_per_sentence close to 1, and
    texts that avoid chained clauses have few commas per sentence.
    """

    newline_count: int = 0
    commas_per_sentence: float = 0.0


@lru_cache(maxsize=1)
def _abbreviations() -> frozenset[str]:
    raw = resources.files("leichtkit").joinpath("data/abbreviations.txt").read_text("utf-8")
    entries = set()
    for line in raw.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.add(line.lower())
    return frozenset(entries)


def tokenize(text: str) -> list[str]:
    """Split on whitespace and detach punctuation into separate tokens."""
    return _TOKEN.findall(text)


def _is_boundary(text: str, i: int) -> bool:
    """A terminal at index i ends a sentence if followed by whitespace and
    an uppercase letter, or by nothing but whitespace."""
    n = len(text)
    j = i + 1
    while j < n and text[j].isspace():
        j += 1
    if j >= n:
        return True
    if j == i + 1:
        return False  # glued to the next character, e.g. "z.B." or "1:0"
    return text[j].isupper()


def _is_abbreviation(text: str, i: int) -> bool:
    """True if the period at index i belongs to a known abbreviation or a
    single-letter initial."""
    match = re.search(r"\S+$", text[: i + 1])
    if not match:
        return False
    token = match.group().lstrip(_OPENERS)
    if token.lower() in _abbreviations():
        return True
    return re.fullmatch(r"[^\W\d_]\.", token) is not None


def split_sentences(text: str) -> list[str]:
    """Rule-based sentence splitting.

    Boundaries sit after ``. ! ? :`` when followed by whitespace and an
    uppercase letter (or end of text), and at every newline. A fixed
    abbreviation list shipped with the package suppresses false splits.
    """
    sentences: list[str] = []
    start = 0
    for i, ch in enumerate(text):
        if ch == "\n":
            segment = text[start:i].strip()
            if segment:
                sentences.append(segment)
            start = i + 1
        elif ch in _TERMINALS and _is_boundary(text, i):
            if ch == "." and _is_abbreviation(text, i):
                continue
            segment = text[start : i + 1].strip()
            if segment:
                sentences.append(segment)
            start = i + 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def count_syllables(word: str) -> int:
    """Number of vowel groups in a word; 0 for tokens without letters.

    The digraphs ei, ie, au, eu, äu, aa, ee, oo absorb their second
    vowel; any other adjacent vowel starts a new group.
    """
    if not any(ch.isalpha() for ch in word):
        return 0
    w = word.lower()
    count = 0
    i = 0
    while i < len(w):
        if w[i] in _VOWELS:
            count += 1
            i += 2 if w[i : i + 2] in _DIGRAPHS else 1
        else:
            i += 1
    return count


def tokenized(text: str) -> TokenizedText:
    """Tokenize with per-sentence spans over the token list."""
    tokens: list[str] = []
    spans: list[tuple[int, int]] = []
    for sentence in split_sentences(text):
        sent_tokens = tokenize(sentence)
        spans.append((len(tokens), len(tokens) + len(sent_tokens)))
        tokens.extend(sent_tokens)
    return TokenizedText(tuple(tokens), tuple(spans), text.count("\n"))


def _is_word(token: str) -> bool:
    return any(ch.isalpha() for ch in token)


def _report_fields(text: str) -> dict:
    sentences = split_sentences(text)
    words = [t for t in tokenize(text) if _is_word(t)]
    sentence_count = len(sentences)
    word_count = len(words)
    newline_count = text.count("\n")
    if word_count == 0:
        asl = asw = fre = 0.0
    else:
        asl = word_count / max(sentence_count, 1)
        asw = sum(count_syllables(w) for w in words) / word_count
        fre = 180.0 - asl - 58.5 * asw
    per_sentence = 1.0 / sentence_count if sentence_count else 0.0
    return {
        "fre": fre,
        "avg_sentence_length_words": asl,
        "avg_syllables_per_word": asw,
        "sentence_count": sentence_count,
        "word_count": word_count,
        "newlines_per_sentence": newline_count * per_sentence,
        "newline_count": newline_count,
        "commas_per_sentence": text.count(",") * per_sentence,
    }


def flesch_reading_ease(text: str) -> ReadabilityReport:
    """Readability report; empty text yields zero counts and fre 0."""
    fields = _report_fields(text)
    fields.pop("newline_count")
    fields.pop("commas_per_sentence")
    return ReadabilityReport(**fields)


def easy_language_report(text: str) -> EasyLanguageReport:
    """Readability report extended with Easy Language conformance fields."""
    return EasyLanguageReport(**_report_fields(text))
