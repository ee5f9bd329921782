"""Feature-based prediction of sentence complexity on the 1-7 scale.

A ridge regressor over interpretable surface features stands in for a
neural regression head, so the protocol (split, few-shot fit, MSE on the
unseen test part) runs deterministically on a CPU. Features are
standardized with training-set statistics; constant features are dropped
and recorded. The closed-form solution leaves the bias unregularized.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CompatibilityError, ConfigError, DataError, EvaluationError, FeatureError, FitError
from .ngram import NgramModel
from .textstats import count_syllables, easy_language_report, tokenize

__all__ = [
    "FEATURE_NAMES",
    "FeatureVector",
    "LabeledSentence",
    "ComplexityModel",
    "extract_features",
    "feature_spec_version",
    "ridge_fit",
    "fit",
    "predict",
    "evaluate_mse",
]

FEATURE_NAMES = (
    "avg_sentence_length_words",
    "avg_word_length_chars",
    "avg_syllables_per_word",
    "fre",
    "type_token_ratio",
    "comma_density",
    "word_count",
    "log_easy_ppl",
    "log_normal_ppl",
    "log_ppl_ratio",
)

_SCALE_MIN = 1.0
_SCALE_MAX = 7.0


@dataclass(frozen=True)
class FeatureVector:
    values: tuple[float, ...]
    spec_version: str


@dataclass(frozen=True)
class LabeledSentence:
    text: str
    complexity: float

    def __post_init__(self) -> None:
        if not _SCALE_MIN <= self.complexity <= _SCALE_MAX:
            raise DataError(
                f"complexity {self.complexity} outside [{_SCALE_MIN}, {_SCALE_MAX}]"
            )


def feature_spec_version(with_lms: bool) -> str:
    return "fv1+lm" if with_lms else "fv1"


def extract_features(
    text: str,
    easy_lm: NgramModel | None = None,
    normal_lm: NgramModel | None = None,
) -> FeatureVector:
    """Fixed-order surface features, optionally with style-model signals.

    When both language models are given, the last three slots carry the
    log perplexities and their difference; otherwise they stay zero and
    the spec version marks the text-only configuration.
    """
    if not text.strip():
        raise FeatureError("cannot extract features from empty text")
    report = easy_language_report(text)
    words = [t for t in tokenize(text) if any(ch.isalpha() for ch in t)]
    word_count = len(words)
    avg_word_len = math.fsum(len(w) for w in words) / word_count if word_count else 0.0
    ttr = len({w.lower() for w in words}) / word_count if word_count else 0.0
    comma_density = text.count(",") / word_count if word_count else 0.0

    with_lms = easy_lm is not None and normal_lm is not None
    if with_lms:
        tokens = tokenize(text)
        log_easy = math.log(easy_lm.perplexity(tokens))
        log_normal = math.log(normal_lm.perplexity(tokens))
        lm_values = (log_easy, log_normal, log_easy - log_normal)
    else:
        lm_values = (0.0, 0.0, 0.0)

    values = (
        report.avg_sentence_length_words,
        avg_word_len,
        report.avg_syllables_per_word,
        report.fre,
        ttr,
        comma_density,
        float(word_count),
    ) + lm_values
    if not all(math.isfinite(v) for v in values):
        raise FeatureError(f"non-finite feature for text {text[:40]!r}")
    return FeatureVector(values, feature_spec_version(with_lms))


@dataclass(frozen=True)
class ComplexityModel:
    """Linear weights over standardized features; bias stored first."""

    weights: tuple[float, ...]
    regularization: float
    feature_means: tuple[float, ...]
    feature_stds: tuple[float, ...]
    kept_features: tuple[int, ...]
    dropped_features: tuple[int, ...]
    spec_version: str

    def standardize(self, values: Sequence[float]) -> np.ndarray:
        x = np.asarray([values[i] for i in self.kept_features], dtype=float)
        return (x - np.asarray(self.feature_means)) / np.asarray(self.feature_stds)

    def raw_prediction(self, values: Sequence[float]) -> float:
        z = self.standardize(values)
        return self.weights[0] + float(np.dot(self.weights[1:], z))

    def destandardized_weights(self) -> tuple[float, tuple[float, ...]]:
        """Equivalent intercept and per-feature weights in original units."""
        w = np.asarray(self.weights[1:])
        stds = np.asarray(self.feature_stds)
        means = np.asarray(self.feature_means)
        raw_w = w / stds
        intercept = self.weights[0] - float(np.dot(raw_w, means))
        return intercept, tuple(raw_w)

    def to_dict(self) -> dict:
        return {
            "weights": list(self.weights),
            "regularization": self.regularization,
            "feature_means": list(self.feature_means),
            "feature_stds": list(self.feature_stds),
            "kept_features": list(self.kept_features),
            "dropped_features": list(self.dropped_features),
            "spec_version": self.spec_version,
            "feature_names": list(FEATURE_NAMES),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    @classmethod
    def from_dict(cls, payload: dict) -> "ComplexityModel":
        try:
            return cls(
                weights=tuple(float(v) for v in payload["weights"]),
                regularization=float(payload["regularization"]),
                feature_means=tuple(float(v) for v in payload["feature_means"]),
                feature_stds=tuple(float(v) for v in payload["feature_stds"]),
                kept_features=tuple(int(v) for v in payload["kept_features"]),
                dropped_features=tuple(int(v) for v in payload["dropped_features"]),
                spec_version=str(payload["spec_version"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DataError(f"malformed complexity model: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "ComplexityModel":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DataError(f"complexity model is not valid JSON: {exc}") from exc
        return cls.from_dict(payload)


def ridge_fit(X: np.ndarray, y: np.ndarray, regularization: float) -> np.ndarray:
    """Solve the L2-penalized least squares with an unpenalized bias column.

    Returns ``[bias, w_1, ..., w_p]``. Raises FitError when the system is
    singular, which can only happen with zero regularization.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float).reshape(-1)
    design = np.column_stack([np.ones(X.shape[0]), X])
    penalty = np.eye(design.shape[1]) * regularization
    penalty[0, 0] = 0.0
    lhs = design.T @ design + penalty
    rhs = design.T @ y
    try:
        return np.linalg.solve(lhs, rhs)
    except np.linalg.LinAlgError as exc:
        raise FitError(f"normal equations are singular (regularization={regularization})") from exc


def fit(
    train: Sequence[LabeledSentence],
    regularization: float = 1.0,
    easy_lm: NgramModel | None = None,
    normal_lm: NgramModel | None = None,
) -> ComplexityModel:
    """Standardize features on the training set and solve in closed form."""
    if regularization < 0:
        raise ConfigError(f"regularization must be >= 0, got {regularization}")
    if len(train) < 2:
        raise FitError(f"need at least 2 training sentences, got {len(train)}")
    version = feature_spec_version(easy_lm is not None and normal_lm is not None)
    X = np.asarray(
        [extract_features(s.text, easy_lm, normal_lm).values for s in train], dtype=float
    )
    y = np.asarray([s.complexity for s in train], dtype=float)
    means = X.mean(axis=0)
    stds = X.std(axis=0)
    kept = tuple(int(i) for i in np.flatnonzero(stds > 0.0))
    dropped = tuple(int(i) for i in np.flatnonzero(stds == 0.0))
    Z = (X[:, kept] - means[list(kept)]) / stds[list(kept)] if kept else np.empty((len(train), 0))
    beta = ridge_fit(Z, y, regularization)
    return ComplexityModel(
        weights=tuple(float(b) for b in beta),
        regularization=float(regularization),
        feature_means=tuple(float(means[i]) for i in kept),
        feature_stds=tuple(float(stds[i]) for i in kept),
        kept_features=kept,
        dropped_features=dropped,
        spec_version=version,
    )


def predict(
    model: ComplexityModel,
    text: str,
    easy_lm: NgramModel | None = None,
    normal_lm: NgramModel | None = None,
) -> float:
    """Linear prediction clamped to the 1-7 label scale."""
    features = extract_features(text, easy_lm, normal_lm)
    if features.spec_version != model.spec_version:
        raise CompatibilityError(
            f"model was fitted with feature spec {model.spec_version!r}, "
            f"extractor produced {features.spec_version!r}"
        )
    return min(max(model.raw_prediction(features.values), _SCALE_MIN), _SCALE_MAX)


def evaluate_mse(
    model: ComplexityModel,
    test: Sequence[LabeledSentence],
    easy_lm: NgramModel | None = None,
    normal_lm: NgramModel | None = None,
) -> float:
    """Mean squared error of clamped predictions on a labeled set."""
    if not test:
        raise EvaluationError("no test sentences to evaluate")
    squared = [
        (predict(model, s.text, easy_lm, normal_lm) - s.complexity) ** 2 for s in test
    ]
    return math.fsum(squared) / len(squared)
