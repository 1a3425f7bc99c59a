"""Evaluation metrics: overlap scores, controllability, diversity,
agreement, and significance tests.

All text metrics operate on lowercased, edge-punctuation-stripped word
tokens so that "Food." and "food" count as the same token.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from scipy import stats as _scipy_stats

from .annotate import derive_control_code
from .tokens import detached_tokens, rouge_tokens


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f1: float


def _f1(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def _ngrams(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(reference: str, candidate: str, n: int = 1) -> RougeScore:
    """Clipped n-gram overlap between one reference and one candidate."""
    if n < 1:
        raise ValueError("n must be at least 1")
    ref = _ngrams(rouge_tokens(reference), n)
    cand = _ngrams(rouge_tokens(candidate), n)
    overlap = sum(min(count, ref[gram]) for gram, count in cand.items())
    total_ref = sum(ref.values())
    total_cand = sum(cand.values())
    precision = overlap / total_cand if total_cand else 0.0
    recall = overlap / total_ref if total_ref else 0.0
    return RougeScore(precision, recall, _f1(precision, recall))


def _lcs_length(a: list[str], b: list[str]) -> int:
    if not a or not b:
        return 0
    previous = [0] * (len(b) + 1)
    for token in a:
        current = [0]
        for j, other in enumerate(b, start=1):
            if token == other:
                current.append(previous[j - 1] + 1)
            else:
                current.append(max(previous[j], current[j - 1]))
        previous = current
    return previous[len(b)]


def rouge_l(reference: str, candidate: str) -> RougeScore:
    """Longest-common-subsequence F-measure."""
    ref = rouge_tokens(reference)
    cand = rouge_tokens(candidate)
    lcs = _lcs_length(ref, cand)
    precision = lcs / len(cand) if cand else 0.0
    recall = lcs / len(ref) if ref else 0.0
    return RougeScore(precision, recall, _f1(precision, recall))


def mean_rouge(
    references: list[str], candidates: list[str], kind: str = "1"
) -> float:
    """Mean F1 of rouge-1 / rouge-2 / rouge-l over aligned lists."""
    if len(references) != len(candidates):
        raise ValueError("references and candidates differ in length")
    if not references:
        raise ValueError("nothing to score")
    if kind == "l":
        scores = (rouge_l(r, c).f1 for r, c in zip(references, candidates))
    else:
        n = int(kind)
        scores = (rouge_n(r, c, n).f1 for r, c in zip(references, candidates))
    return sum(scores) / len(references)


def ctrl_accuracy(
    requested_codes: list[str], slogans: list[str], tagger=None
) -> dict[str, float]:
    """Per-code fraction of outputs whose first word realises the
    requested class. Unparseable outputs count as misses."""
    if len(requested_codes) != len(slogans):
        raise ValueError("codes and slogans differ in length")
    hits: Counter = Counter()
    totals: Counter = Counter()
    for code, slogan in zip(requested_codes, slogans):
        totals[code] += 1
        try:
            derived = derive_control_code(slogan, tagger)
        except ValueError:
            continue
        if derived == code:
            hits[code] += 1
    return {code: hits[code] / totals[code] for code in sorted(totals)}


def diversity(candidate_sets: list[list[str]]) -> float:
    """Mean per-set ratio of unique to total tokens. A set of six copies
    of one slogan scores 1/6; six fully distinct slogans score 1.0."""
    ratios = []
    for candidates in candidate_sets:
        tokens: list[str] = []
        for slogan in candidates:
            tokens.extend(t.lower() for t in detached_tokens(slogan))
        if tokens:
            ratios.append(len(set(tokens)) / len(tokens))
    if not ratios:
        raise ValueError("no tokens in any candidate set")
    return sum(ratios) / len(ratios)


def abstractiveness(
    descriptions: list[str], candidate_sets: list[list[str]]
) -> float:
    """Mean fraction of candidate tokens that never appear in the paired
    description."""
    if len(descriptions) != len(candidate_sets):
        raise ValueError("descriptions and candidate sets differ in length")
    set_means = []
    for description, candidates in zip(descriptions, candidate_sets):
        vocab = set(rouge_tokens(description))
        fractions = []
        for slogan in candidates:
            tokens = rouge_tokens(slogan)
            if tokens:
                fractions.append(
                    sum(1 for t in tokens if t not in vocab) / len(tokens)
                )
        if fractions:
            set_means.append(sum(fractions) / len(fractions))
    if not set_means:
        raise ValueError("no scorable candidates")
    return sum(set_means) / len(set_means)


def cohens_kappa(ratings_a: list, ratings_b: list) -> float:
    """Chance-corrected agreement between two raters over the same items."""
    if len(ratings_a) != len(ratings_b):
        raise ValueError("rating lists differ in length")
    n = len(ratings_a)
    if n == 0:
        raise ValueError("no ratings")
    observed = sum(1 for a, b in zip(ratings_a, ratings_b) if a == b) / n
    marginal_a = Counter(ratings_a)
    marginal_b = Counter(ratings_b)
    expected = sum(
        (marginal_a[label] / n) * (marginal_b[label] / n)
        for label in set(marginal_a) | set(marginal_b)
    )
    if expected == 1.0:
        return 1.0
    return (observed - expected) / (1 - expected)


def paired_t_test(xs: list[float], ys: list[float]) -> tuple[float, float]:
    """Two-sided paired t-test. Constant differences are decided directly
    instead of returning the nan scipy produces for zero variance."""
    if len(xs) != len(ys):
        raise ValueError("samples differ in length")
    if len(xs) < 2:
        raise ValueError("need at least two pairs")
    diffs = [x - y for x, y in zip(xs, ys)]
    if len(set(diffs)) == 1:
        if diffs[0] == 0:
            return 0.0, 1.0
        return math.copysign(math.inf, diffs[0]), 0.0
    result = _scipy_stats.ttest_rel(xs, ys)
    return float(result.statistic), float(result.pvalue)


def _exact_wilcoxon_p(doubled_ranks: list[int], doubled_w: int) -> float:
    """Exact two-sided p by enumerating sign assignments via subset sums.

    Ranks arrive doubled so midranks (x.5 from ties) stay integral.
    """
    counts = {0: 1}
    for rank in doubled_ranks:
        nxt = dict(counts)
        for total, ways in counts.items():
            nxt[total + rank] = nxt.get(total + rank, 0) + ways
        counts = nxt
    n_total = 2 ** len(doubled_ranks)
    p_le = sum(ways for total, ways in counts.items() if total <= doubled_w)
    p_ge = sum(ways for total, ways in counts.items() if total >= doubled_w)
    return min(1.0, 2 * min(p_le, p_ge) / n_total)


def wilcoxon_signed_rank(
    xs: list[float], ys: list[float], exact_threshold: int = 25
) -> tuple[float, float]:
    """Two-sided Wilcoxon signed-rank test on paired samples.

    Zero differences are dropped; ties share midranks. Small samples get
    the exact null distribution, larger ones a tie-corrected normal
    approximation with continuity correction. Returns (W+, p).
    """
    if len(xs) != len(ys):
        raise ValueError("samples differ in length")
    diffs = [x - y for x, y in zip(xs, ys) if x != y]
    n = len(diffs)
    if n == 0:
        return 0.0, 1.0

    by_magnitude = sorted(range(n), key=lambda i: abs(diffs[i]))
    ranks = [0.0] * n
    position = 0
    while position < n:
        tied_end = position
        while (
            tied_end + 1 < n
            and abs(diffs[by_magnitude[tied_end + 1]])
            == abs(diffs[by_magnitude[position]])
        ):
            tied_end += 1
        midrank = (position + tied_end) / 2 + 1
        for k in range(position, tied_end + 1):
            ranks[by_magnitude[k]] = midrank
        position = tied_end + 1

    w_plus = sum(rank for rank, diff in zip(ranks, diffs) if diff > 0)

    if n <= exact_threshold:
        doubled = [round(2 * rank) for rank in ranks]
        return w_plus, _exact_wilcoxon_p(doubled, round(2 * w_plus))

    tie_sizes = Counter(abs(d) for d in diffs).values()
    mean = n * (n + 1) / 4
    variance = n * (n + 1) * (2 * n + 1) / 24 - sum(
        t**3 - t for t in tie_sizes
    ) / 48
    if variance <= 0:
        return w_plus, 1.0
    correction = 0.5 if w_plus > mean else -0.5 if w_plus < mean else 0.0
    z = (w_plus - mean - correction) / math.sqrt(variance)
    return w_plus, min(1.0, math.erfc(abs(z) / math.sqrt(2)))
