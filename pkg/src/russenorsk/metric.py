"""Character n-gram F-score (chrF) with Russenorsk-oriented preprocessing.

The score averages character n-gram precision and recall over orders
1..max_ngram_order and combines them with an F-beta (beta=2 weighs recall
twice as heavily as precision), scaled to 0-100. Match counts are clipped
multiset intersections, so repeated n-grams only count as often as they
occur on both sides.

Preprocessing defaults mirror how Russenorsk/Norwegian/Russian sentences
are best compared at the character level: case folding, diacritic stripping
with explicit Nordic folds (å→a, ø→o, æ→ae), and whitespace removal before
n-gram extraction.

Corpus scoring is a micro-average: per-sentence statistics are summed and
the F-score is applied once to the totals, so replicating a corpus k times
leaves the score unchanged.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .textnorm import fold_diacritics

_WHITESPACE = re.compile(r"\s+")


@dataclass(frozen=True)
class ChrfParams:
    """Scoring knobs. Defaults follow the common chrF configuration."""

    max_ngram_order: int = 6
    beta: float = 2.0
    remove_whitespace: bool = True
    lowercase: bool = True
    strip_diacritics: bool = True

    def __post_init__(self) -> None:
        if self.max_ngram_order < 1:
            raise ValueError("max_ngram_order must be >= 1")
        if self.beta <= 0:
            raise ValueError("beta must be > 0")


@dataclass(frozen=True)
class NgramStats:
    """Per-order (hypothesis, reference, matched) n-gram counts.

    Index i holds the counts for order i+1. Summable, so corpus-level
    statistics are just the sum of sentence-level ones.
    """

    hyp_counts: tuple[int, ...]
    ref_counts: tuple[int, ...]
    match_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (len(self.hyp_counts) == len(self.ref_counts) == len(self.match_counts)):
            raise ValueError("per-order count tuples must have equal length")
        for h, r, m in zip(self.hyp_counts, self.ref_counts, self.match_counts):
            if h < 0 or r < 0 or m < 0:
                raise ValueError("n-gram counts must be non-negative")
            if m > min(h, r):
                raise ValueError("matched count exceeds hypothesis or reference count")

    @property
    def order(self) -> int:
        return len(self.hyp_counts)

    def __add__(self, other: "NgramStats") -> "NgramStats":
        if self.order != other.order:
            raise ValueError("cannot sum statistics of different orders")
        return NgramStats(
            tuple(a + b for a, b in zip(self.hyp_counts, other.hyp_counts)),
            tuple(a + b for a, b in zip(self.ref_counts, other.ref_counts)),
            tuple(a + b for a, b in zip(self.match_counts, other.match_counts)),
        )

    @classmethod
    def zero(cls, order: int) -> "NgramStats":
        return cls((0,) * order, (0,) * order, (0,) * order)


@dataclass(frozen=True)
class ChrfScore:
    """A 0-100 chrF value together with the statistics it was computed from."""

    value: float
    params: ChrfParams
    stats: NgramStats


def preprocess(text: str, params: ChrfParams) -> str:
    """Normalize a sentence before n-gram extraction.

    Case folding first, then diacritic stripping (canonical decomposition
    plus combining-mark removal, with å/ø/æ folded explicitly), then
    whitespace removal when requested. Idempotent.
    """
    if params.lowercase:
        text = text.casefold()
    if params.strip_diacritics:
        text = fold_diacritics(text)
    if params.remove_whitespace:
        text = _WHITESPACE.sub("", text)
    return text


def _ngram_counter(text: str, n: int) -> Counter:
    return Counter(text[i : i + n] for i in range(len(text) - n + 1))


def sentence_stats(hypothesis: str, reference: str, params: ChrfParams | None = None) -> NgramStats:
    """Clipped n-gram match statistics for one sentence pair.

    Both strings are preprocessed internally; passing already-preprocessed
    text is harmless since preprocessing is idempotent.
    """
    params = params or ChrfParams()
    hyp = preprocess(hypothesis, params)
    ref = preprocess(reference, params)
    hyp_counts, ref_counts, match_counts = [], [], []
    for n in range(1, params.max_ngram_order + 1):
        hyp_ngrams = _ngram_counter(hyp, n)
        ref_ngrams = _ngram_counter(ref, n)
        matched = hyp_ngrams & ref_ngrams
        hyp_counts.append(sum(hyp_ngrams.values()))
        ref_counts.append(sum(ref_ngrams.values()))
        match_counts.append(sum(matched.values()))
    return NgramStats(tuple(hyp_counts), tuple(ref_counts), tuple(match_counts))


def chrf(stats: NgramStats, params: ChrfParams | None = None) -> ChrfScore:
    """Combine n-gram statistics into a 0-100 F-beta score.

    Averages run over effective orders only (orders where the hypothesis or
    the reference contributed at least one n-gram); an order where exactly
    one side is empty contributes zero precision and recall. When every
    order is empty on both sides the two texts were both empty, which counts
    as a perfect match.
    """
    params = params or ChrfParams()
    prec_sum = 0.0
    rec_sum = 0.0
    effective = 0
    for h, r, m in zip(stats.hyp_counts, stats.ref_counts, stats.match_counts):
        if h == 0 and r == 0:
            continue
        effective += 1
        prec_sum += m / h if h > 0 else 0.0
        rec_sum += m / r if r > 0 else 0.0
    if effective == 0:
        return ChrfScore(100.0, params, stats)
    avg_prec = prec_sum / effective
    avg_rec = rec_sum / effective
    beta_sq = params.beta ** 2
    denom = beta_sq * avg_prec + avg_rec
    if denom == 0.0:
        return ChrfScore(0.0, params, stats)
    value = 100.0 * (1 + beta_sq) * avg_prec * avg_rec / denom
    return ChrfScore(value, params, stats)


def sentence_chrf(hypothesis: str, reference: str, params: ChrfParams | None = None) -> ChrfScore:
    """Score a single sentence pair."""
    params = params or ChrfParams()
    return chrf(sentence_stats(hypothesis, reference, params), params)


def corpus_chrf(pairs: list[tuple[str, str]], params: ChrfParams | None = None) -> ChrfScore:
    """Micro-averaged corpus score over (hypothesis, reference) pairs."""
    if not pairs:
        raise ValueError("corpus_chrf requires at least one sentence pair")
    params = params or ChrfParams()
    total = NgramStats.zero(params.max_ngram_order)
    for hypothesis, reference in pairs:
        total = total + sentence_stats(hypothesis, reference, params)
    return chrf(total, params)
