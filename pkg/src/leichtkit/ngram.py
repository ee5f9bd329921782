"""Smoothed n-gram language models with sample-wise perplexity.

Two interpolated smoothing schemes are available. Witten-Bell reserves
probability mass proportional to the number of distinct successors of a
context; Kneser-Ney subtracts a fixed discount from every seen count and
backs off to continuation counts (how many distinct predecessors an
n-gram has) at the lower orders. Both recurse down to a uniform
distribution over the full vocabulary, so conditional probabilities sum
to one over the vocabulary for every context.

Count bookkeeping: the table at the model's own order holds prediction
events (each position of a padded sequence, including the closing
``</s>``). Each lower-order table is the prefix marginal of the table
above it, i.e. the count of an n-gram equals the summed successor counts
of that n-gram one order up. That keeps all count tables mutually
consistent by construction.
"""

from __future__ import annotations

import hashlib
import json
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConfigError, EvaluationError, ModelFormatError, TrainingError

__all__ = [
    "UNK",
    "BOS",
    "EOS",
    "NgramModel",
    "PerplexityResult",
    "train",
    "corpus_perplexity",
    "style_discriminate",
    "save",
    "load",
]

UNK = "<unk>"
BOS = "<s>"
EOS = "</s>"

_MAGIC = b"NGLM"
_VERSION = 1

_SMOOTHINGS = ("witten_bell", "kneser_ney")

Context = tuple[str, ...]
CountTable = dict[Context, dict[str, int]]


@dataclass(frozen=True)
class PerplexityResult:
    """Per-sample perplexities and their arithmetic mean."""

    per_sample: list[tuple[str, float, int]]
    mean_ppl: float
    model_id: str

    def to_dict(self) -> dict:
        return {
            "model_id": self.model_id,
            "mean_ppl": self.mean_ppl,
            "per_sample": [
                {"id": sid, "ppl": ppl, "token_count": n}
                for sid, ppl, n in self.per_sample
            ],
        }


class NgramModel:
    """Immutable trained model; see module docstring for the math."""

    def __init__(
        self,
        order: int,
        smoothing: str,
        discount: float,
        min_vocab_count: int,
        vocab_tokens: Iterable[str],
        top_counts: CountTable,
        trained_tokens: int,
    ):
        if not 1 <= order <= 5:
            raise ConfigError(f"order must be in [1, 5], got {order}")
        if smoothing not in _SMOOTHINGS:
            raise ConfigError(f"smoothing must be one of {_SMOOTHINGS}, got {smoothing!r}")
        if smoothing == "kneser_ney" and not 0.0 < discount < 1.0:
            raise ConfigError(f"kneser_ney discount must be in (0, 1), got {discount}")
        self.order = order
        self.smoothing = smoothing
        self.discount = float(discount)
        self.min_vocab_count = min_vocab_count
        tokens = sorted(set(vocab_tokens) | {UNK, BOS, EOS})
        self.vocab: dict[str, int] = {tok: i for i, tok in enumerate(tokens)}
        self.trained_tokens = trained_tokens
        self._counts = self._derive_lower_orders(top_counts)
        self._totals = {
            m: {ctx: sum(succ.values()) for ctx, succ in table.items()}
            for m, table in self._counts.items()
        }
        if smoothing == "kneser_ney":
            self._continuation = self._derive_continuations()
            self._cont_totals = {
                m: {ctx: sum(succ.values()) for ctx, succ in table.items()}
                for m, table in self._continuation.items()
            }
        else:
            self._continuation = {}
            self._cont_totals = {}
        self._model_id: str | None = None

    # -- count tables -------------------------------------------------

    def _derive_lower_orders(self, top: CountTable) -> dict[int, CountTable]:
        counts: dict[int, CountTable] = {self.order: {ctx: dict(succ) for ctx, succ in top.items()}}
        for m in range(self.order - 1, 0, -1):
            lower: dict[Context, Counter] = defaultdict(Counter)
            for ctx, succ in counts[m + 1].items():
                lower[ctx[:-1]][ctx[-1]] += sum(succ.values())
            counts[m] = {ctx: dict(succ) for ctx, succ in lower.items()}
        return counts

    def _derive_continuations(self) -> dict[int, CountTable]:
        """Distinct-predecessor counts used by the Kneser-Ney lower orders."""
        continuation: dict[int, CountTable] = {}
        for m in range(1, self.order):
            table: dict[Context, Counter] = defaultdict(Counter)
            for ctx, succ in self._counts[m + 1].items():
                for token in succ:
                    table[ctx[1:]][token] += 1
            continuation[m] = {ctx: dict(succ) for ctx, succ in table.items()}
        return continuation

    # -- probabilities ------------------------------------------------

    def _level_prob(self, level: int, context: Context, token: str) -> float:
        if level == 0:
            return 1.0 / len(self.vocab)
        lower = lambda: self._level_prob(level - 1, context[1:], token)  # noqa: E731
        if self.smoothing == "kneser_ney" and level < self.order:
            table = self._continuation[level]
            totals = self._cont_totals[level]
        else:
            table = self._counts[level]
            totals = self._totals[level]
        successors = table.get(context)
        if not successors:
            return lower()
        total = totals[context]
        count = successors.get(token, 0)
        distinct = len(successors)
        if self.smoothing == "witten_bell":
            return (count + distinct * lower()) / (total + distinct)
        return (max(count - self.discount, 0.0) + self.discount * distinct * lower()) / total

    def _lookup(self, token: str) -> str:
        return token if token in self.vocab else UNK

    def conditional_prob(self, token: str, context: Sequence[str] = ()) -> float:
        """p(token | context); context shorter than order-1 is padded."""
        mapped = tuple(self._lookup(t) for t in context)
        padded = (BOS,) * (self.order - 1) + mapped
        return self._level_prob(self.order, padded[len(padded) - self.order + 1 :], self._lookup(token))

    def log_prob(self, tokens: Sequence[str]) -> float:
        """Natural-log probability of the sequence, including ``</s>``."""
        seq = (BOS,) * (self.order - 1) + tuple(self._lookup(t) for t in tokens) + (EOS,)
        lp = 0.0
        for pos in range(self.order - 1, len(seq)):
            lp += math.log(self._level_prob(self.order, seq[pos - self.order + 1 : pos], seq[pos]))
        return lp

    def perplexity(self, tokens: Sequence[str]) -> float:
        """exp of the mean negative log probability per predicted position.

        The closing ``</s>`` counts as a predicted position, which makes
        the score sensitive to sentence-ending behavior.
        """
        if not tokens:
            raise EvaluationError("cannot compute perplexity of an empty sample")
        n = len(tokens) + 1
        return math.exp(-self.log_prob(tokens) / n)

    # -- identity and serialization ------------------------------------

    @property
    def model_id(self) -> str:
        if self._model_id is None:
            self._model_id = hashlib.sha256(self.save()).hexdigest()[:12]
        return self._model_id

    def save(self) -> bytes:
        """Versioned bytes: magic ``NGLM``, version byte, JSON payload.

        Only the top-order table is stored; lower orders and continuation
        counts are integer-derived on load, so a round trip reproduces
        bit-identical log probabilities.
        """
        rows = sorted(
            (list(ctx), token, count)
            for ctx, succ in self._counts[self.order].items()
            for token, count in succ.items()
        )
        payload = {
            "order": self.order,
            "smoothing": self.smoothing,
            "discount": self.discount,
            "min_vocab_count": self.min_vocab_count,
            "trained_tokens": self.trained_tokens,
            "vocab": sorted(self.vocab),
            "counts": rows,
        }
        body = json.dumps(payload, ensure_ascii=False, sort_keys=True).encode("utf-8")
        return _MAGIC + bytes([_VERSION]) + body

    @classmethod
    def uniform(cls, vocab_tokens: Iterable[str]) -> "NgramModel":
        """Untrained baseline assigning 1/V to every token in the vocabulary."""
        return cls(1, "witten_bell", 0.75, 1, vocab_tokens, {}, 0)


def train(
    corpus: Sequence[Sequence[str]],
    order: int = 3,
    smoothing: str = "kneser_ney",
    discount: float = 0.75,
    min_vocab_count: int = 2,
) -> NgramModel:
    """Count a token-sequence corpus into a smoothed model.

    Tokens seen fewer than ``min_vocab_count`` times train the ``<unk>``
    probability instead of entering the vocabulary. Each sequence is
    padded with ``order - 1`` start symbols and one end symbol.
    """
    corpus = [tuple(seq) for seq in corpus]
    if not corpus:
        raise TrainingError("training corpus is empty")
    if min_vocab_count < 1:
        raise ConfigError(f"min_vocab_count must be >= 1, got {min_vocab_count}")
    raw_counts = Counter(token for seq in corpus for token in seq)
    vocab_tokens = [t for t, c in raw_counts.items() if c >= min_vocab_count]
    known = set(vocab_tokens) | {BOS, EOS}

    top: dict[Context, Counter] = defaultdict(Counter)
    events = 0
    pad = (BOS,) * (max(order, 1) - 1)
    for seq in corpus:
        padded = pad + tuple(t if t in known else UNK for t in seq) + (EOS,)
        for pos in range(len(pad), len(padded)):
            top[padded[pos - len(pad) : pos]][padded[pos]] += 1
            events += 1
    top_counts = {ctx: dict(succ) for ctx, succ in top.items()}
    return NgramModel(order, smoothing, discount, min_vocab_count, vocab_tokens, top_counts, events)


def corpus_perplexity(
    model: NgramModel,
    samples: Sequence[Sequence[str]],
    ids: Sequence[str] | None = None,
) -> PerplexityResult:
    """Sample-wise perplexities averaged arithmetically (not token-pooled)."""
    if ids is None:
        ids = [str(i) for i in range(len(samples))]
    per_sample: list[tuple[str, float, int]] = []
    for sid, sample in zip(ids, samples):
        if not sample:
            raise EvaluationError(f"sample {sid!r} is empty")
        per_sample.append((sid, model.perplexity(sample), len(sample)))
    if not per_sample:
        raise EvaluationError("no samples to evaluate")
    mean = math.fsum(ppl for _, ppl, _ in per_sample) / len(per_sample)
    return PerplexityResult(per_sample, mean, model.model_id)


def style_discriminate(
    easy_model: NgramModel,
    normal_model: NgramModel,
    tokens: Sequence[str],
) -> tuple[str, float, float]:
    """Label a sample by which style model matches it better.

    Returns ``(label, easy_ppl, normal_ppl)`` where the label is ``"easy"``
    exactly when the easy model's perplexity is strictly lower; ties go to
    ``"normal"`` so easiness is never over-claimed.
    """
    easy_ppl = easy_model.perplexity(tokens)
    normal_ppl = normal_model.perplexity(tokens)
    label = "easy" if easy_ppl < normal_ppl else "normal"
    return label, easy_ppl, normal_ppl


def save(model: NgramModel) -> bytes:
    return model.save()


def load(data: bytes) -> NgramModel:
    """Rebuild a model from ``save`` output; reject bad magic or version."""
    if len(data) < len(_MAGIC) + 1 or data[: len(_MAGIC)] != _MAGIC:
        raise ModelFormatError("not a language-model file (bad magic header)")
    version = data[len(_MAGIC)]
    if version != _VERSION:
        raise ModelFormatError(f"unsupported model version {version}")
    try:
        payload = json.loads(data[len(_MAGIC) + 1 :].decode("utf-8"))
        order = payload["order"]
        top: CountTable = defaultdict(dict)
        for ctx, token, count in payload["counts"]:
            if len(ctx) != order - 1 or not isinstance(count, int) or count < 1:
                raise ModelFormatError("corrupted count table")
            top[tuple(ctx)][token] = count
        return NgramModel(
            order=order,
            smoothing=payload["smoothing"],
            discount=payload["discount"],
            min_vocab_count=payload["min_vocab_count"],
            vocab_tokens=payload["vocab"],
            top_counts=dict(top),
            trained_tokens=payload["trained_tokens"],
        )
    except ModelFormatError:
        raise
    except (ValueError, KeyError, TypeError, UnicodeDecodeError) as exc:
        raise ModelFormatError(f"corrupted model payload: {exc}") from exc
