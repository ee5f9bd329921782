"""SARI, BLEU, and ROUGE-L for simplification output against references.

All three metrics operate on pre-tokenized sequences. The intended
convention for raw text is the shared tokenizer with lowercasing, which
``instances_from_texts`` applies; parity with any particular external
toolkit is not claimed. Corpus aggregation uses ``math.fsum``, so scores
are independent of instance order, bit for bit.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConfigError, DataError, EvaluationError
from .textstats import tokenize

__all__ = [
    "EvalInstance",
    "BleuScore",
    "RougeLScore",
    "SariScore",
    "MetricReport",
    "extract_ngrams",
    "bleu",
    "rouge_l",
    "sari",
    "evaluate",
    "instances_from_texts",
]

Tokens = tuple[str, ...]

_BLEU_EPS = 1e-9
_MAX_N = 4


@dataclass(frozen=True)
class EvalInstance:
    source: Tokens
    hypothesis: Tokens
    references: tuple[Tokens, ...]

    def __post_init__(self) -> None:
        if not self.references:
            raise DataError("an evaluation instance needs at least one reference")


def instances_from_texts(rows: Iterable[dict]) -> list[EvalInstance]:
    """Build instances from ``{"source", "hypothesis", "references"}`` rows."""
    instances = []
    for row in rows:
        try:
            instances.append(
                EvalInstance(
                    source=tuple(tokenize(row["source"].lower())),
                    hypothesis=tuple(tokenize(row["hypothesis"].lower())),
                    references=tuple(tuple(tokenize(r.lower())) for r in row["references"]),
                )
            )
        except (KeyError, AttributeError, TypeError) as exc:
            raise DataError(f"malformed evaluation row: {exc}") from exc
    return instances


def extract_ngrams(tokens: Sequence[str], n: int) -> Counter:
    """Multiset of contiguous n-grams; empty when the sequence is shorter than n."""
    if n < 1:
        raise ConfigError(f"n must be >= 1, got {n}")
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


# ---------------------------------------------------------------------------
# BLEU
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BleuScore:
    """Corpus BLEU-4 on a 0-100 scale.

    ``precisions`` holds the effective per-n values: clipped precision,
    the epsilon-smoothed value for zero numerators, or exactly 0.0 for
    n-gram orders with an empty denominator, which are excluded from the
    geometric mean (the remaining orders are reweighted).
    """

    score: float
    precisions: tuple[float, float, float, float]
    brevity_penalty: float
    hypothesis_length: int
    reference_length: int

    def recompute(self) -> float:
        included = [p for p in self.precisions if p > 0.0]
        if not included or self.brevity_penalty == 0.0:
            return 0.0
        mean_log = math.fsum(math.log(p) for p in included) / len(included)
        return 100.0 * self.brevity_penalty * math.exp(mean_log)


def _closest_ref_length(hyp_len: int, references: tuple[Tokens, ...]) -> int:
    return min((len(r) for r in references), key=lambda L: (abs(L - hyp_len), L))


def bleu(instances: Sequence[EvalInstance]) -> BleuScore:
    """Pooled clipped n-gram precisions with the standard brevity penalty."""
    if not instances:
        raise EvaluationError("no instances to evaluate")
    numer = [0] * _MAX_N
    denom = [0] * _MAX_N
    hyp_len = 0
    ref_len = 0
    for inst in instances:
        hyp_len += len(inst.hypothesis)
        ref_len += _closest_ref_length(len(inst.hypothesis), inst.references)
        for n in range(1, _MAX_N + 1):
            hyp_grams = extract_ngrams(inst.hypothesis, n)
            if not hyp_grams:
                continue
            max_ref: Counter = Counter()
            for ref in inst.references:
                for gram, count in extract_ngrams(ref, n).items():
                    if count > max_ref[gram]:
                        max_ref[gram] = count
            numer[n - 1] += sum(min(c, max_ref[g]) for g, c in hyp_grams.items())
            denom[n - 1] += sum(hyp_grams.values())
    if hyp_len == 0:
        return BleuScore(0.0, (0.0,) * 4, 0.0, 0, ref_len)
    precisions = []
    logs = []
    for n in range(_MAX_N):
        if denom[n] == 0:
            precisions.append(0.0)
            continue
        p = (numer[n] if numer[n] > 0 else _BLEU_EPS) / denom[n]
        precisions.append(p)
        logs.append(math.log(p))
    bp = 1.0 if hyp_len >= ref_len else math.exp(1.0 - ref_len / hyp_len)
    score = 0.0 if not logs else 100.0 * bp * math.exp(math.fsum(logs) / len(logs))
    return BleuScore(score, tuple(precisions), bp, hyp_len, ref_len)


# ---------------------------------------------------------------------------
# ROUGE-L
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RougeLScore:
    precision: float
    recall: float
    f1: float


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    """Longest common subsequence length by row-rolling dynamic programming."""
    if not a or not b:
        return 0
    previous = [0] * (len(b) + 1)
    for tok_a in a:
        current = [0]
        for j, tok_b in enumerate(b):
            if tok_a == tok_b:
                current.append(previous[j] + 1)
            else:
                current.append(max(previous[j + 1], current[j]))
        previous = current
    return previous[-1]


def _rouge_l_instance(inst: EvalInstance) -> tuple[float, float, float]:
    best = (0.0, 0.0, 0.0)
    for ref in inst.references:
        if not inst.hypothesis or not ref:
            candidate = (0.0, 0.0, 0.0)
        else:
            lcs = lcs_length(inst.hypothesis, ref)
            p = lcs / len(inst.hypothesis)
            r = lcs / len(ref)
            f1 = 0.0 if p + r == 0.0 else 2.0 * p * r / (p + r)
            candidate = (p, r, f1)
        if candidate[2] > best[2]:
            best = candidate
    return best


def rouge_l(instances: Sequence[EvalInstance]) -> RougeLScore:
    """Per instance, take the max-F1 reference; macro-average P, R, and F1."""
    if not instances:
        raise EvaluationError("no instances to evaluate")
    rows = [_rouge_l_instance(inst) for inst in instances]
    n = len(rows)
    return RougeLScore(
        precision=math.fsum(r[0] for r in rows) / n,
        recall=math.fsum(r[1] for r in rows) / n,
        f1=math.fsum(r[2] for r in rows) / n,
    )


# ---------------------------------------------------------------------------
# SARI
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SariScore:
    """SARI and its components, all on a 0-100 scale.

    The total is exactly ``(f_keep + f_add + p_del) / 3``.
    """

    score: float
    f_keep: float
    f_add: float
    p_del: float


def _sari_instance_components(inst: EvalInstance) -> tuple[float, float, float]:
    numref = len(inst.references)
    # An instance where source, hypothesis, and every reference coincide is
    # a perfect keep; n-gram orders with empty candidate sets then score 1
    # instead of 0 so short identical triples are not penalized.
    identical = inst.hypothesis == inst.source and all(
        ref == inst.source for ref in inst.references
    )
    keeps, adds, dels = [], [], []
    for n in range(1, _MAX_N + 1):
        src = extract_ngrams(inst.source, n)
        hyp = extract_ngrams(inst.hypothesis, n)
        ref_all: Counter = Counter()
        for ref in inst.references:
            ref_all.update(extract_ngrams(ref, n))
        # Source and hypothesis counts are scaled by the number of
        # references, which weights pooled reference counts fractionally.
        src_rep = Counter({g: c * numref for g, c in src.items()})
        hyp_rep = Counter({g: c * numref for g, c in hyp.items()})

        keep_cand = src_rep & hyp_rep
        keep_good = keep_cand & ref_all
        keep_all = src_rep & ref_all
        keep_p_sum = math.fsum(keep_good[g] / keep_cand[g] for g in keep_good)
        keep_r_sum = math.fsum(keep_good[g] / keep_all[g] for g in keep_good)
        keep_p = keep_p_sum / len(keep_cand) if keep_cand else 0.0
        keep_r = keep_r_sum / len(keep_all) if keep_all else 0.0
        if keep_p + keep_r > 0.0:
            keep = 2.0 * keep_p * keep_r / (keep_p + keep_r)
        else:
            keep = 1.0 if identical else 0.0

        del_cand = src_rep - hyp_rep
        del_good = del_cand - ref_all
        del_sum = math.fsum(del_good[g] / del_cand[g] for g in del_good)
        delete = del_sum / len(del_cand) if del_cand else 0.0

        add_cand = set(hyp) - set(src)
        add_good = add_cand & set(ref_all)
        add_all = set(ref_all) - set(src)
        add_p = len(add_good) / len(add_cand) if add_cand else 0.0
        add_r = len(add_good) / len(add_all) if add_all else 0.0
        add = 0.0 if add_p + add_r == 0.0 else 2.0 * add_p * add_r / (add_p + add_r)

        keeps.append(keep)
        adds.append(add)
        dels.append(delete)
    scale = 100.0 / _MAX_N
    return (
        math.fsum(keeps) * scale,
        math.fsum(adds) * scale,
        math.fsum(dels) * scale,
    )


def sari(instances: Sequence[EvalInstance]) -> SariScore:
    """Keep-F1, add-F1, and delete-precision averaged over n=1..4 and instances."""
    if not instances:
        raise EvaluationError("no instances to evaluate")
    rows = [_sari_instance_components(inst) for inst in instances]
    n = len(rows)
    f_keep = math.fsum(r[0] for r in rows) / n
    f_add = math.fsum(r[1] for r in rows) / n
    p_del = math.fsum(r[2] for r in rows) / n
    return SariScore((f_keep + f_add + p_del) / 3.0, f_keep, f_add, p_del)


# ---------------------------------------------------------------------------
# combined report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MetricReport:
    instance_count: int
    sari: SariScore | None = None
    bleu: BleuScore | None = None
    rouge_l: RougeLScore | None = None

    def to_dict(self) -> dict:
        out: dict = {"instance_count": self.instance_count}
        if self.sari is not None:
            out["sari"] = {
                "score": self.sari.score,
                "f_keep": self.sari.f_keep,
                "f_add": self.sari.f_add,
                "p_del": self.sari.p_del,
            }
        if self.bleu is not None:
            out["bleu"] = {
                "score": self.bleu.score,
                "precisions": list(self.bleu.precisions),
                "brevity_penalty": self.bleu.brevity_penalty,
                "hypothesis_length": self.bleu.hypothesis_length,
                "reference_length": self.bleu.reference_length,
            }
        if self.rouge_l is not None:
            out["rouge_l"] = {
                "precision": self.rouge_l.precision,
                "recall": self.rouge_l.recall,
                "f1": self.rouge_l.f1,
            }
        return out


def evaluate(
    instances: Sequence[EvalInstance],
    metrics: Sequence[str] = ("sari", "bleu", "rouge_l"),
) -> MetricReport:
    """Score the requested metrics over one instance list."""
    known = {"sari", "bleu", "rouge_l"}
    unknown = set(metrics) - known
    if unknown:
        raise ConfigError(f"unknown metrics: {sorted(unknown)}; choose from {sorted(known)}")
    return MetricReport(
        instance_count=len(instances),
        sari=sari(instances) if "sari" in metrics else None,
        bleu=bleu(instances) if "bleu" in metrics else None,
        rouge_l=rouge_l(instances) if "rouge_l" in metrics else None,
    )
