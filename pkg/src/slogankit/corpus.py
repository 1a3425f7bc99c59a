"""Corpus construction: record cleaning, dataset splits, and statistics.

The cleaning pipeline turns crawled (name, title, meta-description) records
into (description, slogan) pairs. Steps, in order:

 1. delexicalise the company name in the page title,
 2. strip non-alphanumeric characters from both ends of the title,
 3. reject titles carrying blocked crawler/error phrases,
 4. strip structural site phrases ("Welcome to ...", "... | Home"),
 5. split the title on separator runs and pick the longest chunk, rejecting
    records whose company name sits inside the chunk,
 6. deduplicate slogans keeping the first company,
 7. enforce slogan (3-12 words) and description (>= 10 words) lengths,
 8. keep only English pairs,
 9. reject punctuation-heavy slogans,
10. reject slogans that are mostly geopolitical entity names.

Every rejected record produces a log entry with the step number, so inputs
are always fully accounted for.
"""
from __future__ import annotations

import logging
import re
from collections import Counter
from dataclasses import dataclass, field, replace
from random import Random
from typing import Callable, Iterable

from .delex import delexicalise_company
from .entmask import MASKED_ENTITY_TYPES
from .tokens import (
    COMPANY_MASK,
    english_stopword_ratio,
    rouge_tokens,
    strip_edge_punct,
    word_count,
)

logger = logging.getLogger(__name__)

SPLITS = ("train", "valid", "test")

# Stands in for the company mask token while title edges are stripped and
# separators are split, so the token's own punctuation survives both.
_SENTINEL = ""

_SEPARATOR_RUN_RE = re.compile(r"[|<>/\-]+")
_EDGE_RE = re.compile(r"^[^0-9A-Za-z]+|[^0-9A-Za-z]+$")

DEFAULT_BLOCKED_PHRASES = (
    "page could not be loaded",
    "access to this page is denied",
    "access denied",
    "page not found",
    "404",
    "403",
    "503",
    "under construction",
    "coming soon",
    "just a moment",
    "attention required",
    "please wait",
    "site maintenance",
    "maintenance mode",
    "domain for sale",
    "parked domain",
    "this domain is for sale",
    "account suspended",
    "login",
    "sign in",
    "cloudflare",
    "captcha",
    "untitled",
)

DEFAULT_STRUCTURAL_AFFIXES = (
    # Connector-ending phrases are stripped from the front of the title;
    # the single-phrase entries disqualify a whole chunk instead.
    "welcome to",
    "the official website of",
    "the official site of",
    "official website of",
    "official site of",
    "home",
    "homepage",
    "home page",
    "welcome",
    "welcome page",
    "about",
    "about us",
    "contact",
    "contact us",
    "official site",
    "official website",
    "main page",
    "start page",
    "sitemap",
    "site map",
    "index",
)


@dataclass
class CompanyRecord:
    company_name: str
    url: str
    raw_title: str
    raw_description: str
    industry: str = ""


@dataclass
class SloganPair:
    id: str
    company_name: str
    description: str
    slogan: str
    split: str = "train"
    industry: str = ""


@dataclass
class Rejection:
    id: str
    step: int
    reason: str


@dataclass
class CleaningConfig:
    blocked_phrases: tuple[str, ...] = DEFAULT_BLOCKED_PHRASES
    structural_affixes: tuple[str, ...] = DEFAULT_STRUCTURAL_AFFIXES
    separator_chars: str = "|<>-/"
    min_desc_words: int = 10
    slogan_word_range: tuple[int, int] = (3, 12)
    max_slogan_punct: int = 3
    min_punct_free_run: int = 3
    max_gpe_ratio: float = 0.30
    english_min_stopword_ratio: float = 0.12

    def __post_init__(self) -> None:
        lo, hi = self.slogan_word_range
        counts = (self.min_desc_words, lo, hi, self.max_slogan_punct, self.min_punct_free_run)
        if any(c <= 0 for c in counts):
            raise ValueError("all word/punctuation counts must be positive")
        if lo > hi:
            raise ValueError("slogan_word_range must be (low, high) with low <= high")
        if not 0 < self.max_gpe_ratio <= 1:
            raise ValueError("max_gpe_ratio must lie in (0, 1]")
        if not self.separator_chars:
            raise ValueError("separator_chars must not be empty")

    @classmethod
    def from_dict(cls, raw: dict) -> "CleaningConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(raw) - known
        if unknown:
            raise ValueError("unknown cleaning config keys: %s" % sorted(unknown))
        kwargs = dict(raw)
        for key in ("blocked_phrases", "structural_affixes"):
            if key in kwargs:
                kwargs[key] = tuple(kwargs[key])
        if "slogan_word_range" in kwargs:
            kwargs["slogan_word_range"] = tuple(kwargs["slogan_word_range"])
        return cls(**kwargs)


def _phrase_re(phrase: str) -> re.Pattern[str]:
    return re.compile(
        r"(?<![0-9A-Za-z])" + re.escape(phrase) + r"(?![0-9A-Za-z])",
        re.IGNORECASE,
    )


def _strip_edges(text: str) -> str:
    return _EDGE_RE.sub("", text)


def _strip_prefix_affixes(text: str, affixes: Iterable[str]) -> str:
    prefixes = [a for a in affixes if a.endswith((" to", " of"))]
    changed = True
    while changed:
        changed = False
        for affix in prefixes:
            pattern = re.compile(
                r"^" + re.escape(affix) + r"(?![0-9A-Za-z])\s*", re.IGNORECASE
            )
            new = pattern.sub("", text)
            if new != text:
                text = _strip_edges(new)
                changed = True
    return text


def _separator_run_re(separator_chars: str) -> re.Pattern[str]:
    if separator_chars == "|<>-/":
        return _SEPARATOR_RUN_RE
    return re.compile("[%s]+" % re.escape(separator_chars))


def _split_title(title: str, separator_chars: str = "|<>-/") -> list[str]:
    """Split on separator runs that touch whitespace or a string edge.

    Separators buried inside a word ("Cross-Channel", "24/7") stay put;
    anything functioning as a visual divider becomes a split point.
    """
    chunks = []
    last = 0
    for m in _separator_run_re(separator_chars).finditer(title):
        at_start = m.start() == 0 or title[m.start() - 1].isspace()
        at_end = m.end() == len(title) or title[m.end()].isspace()
        if at_start or at_end:
            chunks.append(title[last : m.start()])
            last = m.end()
    chunks.append(title[last:])
    return [c.strip() for c in chunks if c.strip()]


def _strip_company_prefix(chunk: str) -> str:
    """Drop a leading company sentinel plus its trailing connector."""
    rest = chunk[len(_SENTINEL) :]
    return _strip_edges(rest)


def extract_title_slogan(
    record: CompanyRecord,
    config: CleaningConfig,
    delexicaliser: Callable = delexicalise_company,
) -> tuple[str | None, Rejection | None]:
    """Run title steps 1-5 for one record.

    Returns (slogan, None) on success, or (None, rejection). The caller
    owns the record id used in the rejection, passed back via ``record``
    position; here the rejection id is left blank for the pipeline to fill.
    """
    # Step 1: delexicalise the title; protect the mask for string surgery.
    delexed = delexicaliser(record.company_name, record.raw_title, COMPANY_MASK)
    title = delexed.text.replace(COMPANY_MASK, _SENTINEL)

    # Step 2: strip non-alphanumeric title edges.
    title = _strip_edges(title.strip())
    if not title:
        return None, Rejection("", 2, "empty")

    # Step 3: blocked crawler/error phrases anywhere in the title.
    restored = title.replace(_SENTINEL, COMPANY_MASK)
    for phrase in config.blocked_phrases:
        if _phrase_re(phrase).search(restored):
            return None, Rejection("", 3, "blocked-phrase")

    # Step 4: structural prefix phrases ("Welcome to ...").
    title = _strip_prefix_affixes(title, config.structural_affixes)
    if not title:
        return None, Rejection("", 4, "no-chunk")

    # Step 5: split, drop structural chunks, keep the longest.
    structural = {a.lower() for a in config.structural_affixes}
    chunks = [
        c
        for c in _split_title(title, config.separator_chars)
        if _strip_edges(c).lower() not in structural
    ]
    if not chunks:
        return None, Rejection("", 5, "no-chunk")
    candidate = max(
        chunks, key=lambda c: len(c.replace(_SENTINEL, COMPANY_MASK))
    )

    if _SENTINEL in candidate:
        if not candidate.startswith(_SENTINEL):
            return None, Rejection("", 5, "name-in-middle")
        candidate = _strip_company_prefix(candidate)
        if _SENTINEL in candidate:
            return None, Rejection("", 5, "name-in-middle")
    candidate = _strip_prefix_affixes(_strip_edges(candidate), config.structural_affixes)

    # The title-level delexicalisation can match a longer surface than the
    # one inside this chunk ("Best Tools Inc" vs a bare "Best Tools"), so
    # re-check the candidate itself until no prefix of the name survives.
    while candidate:
        recheck = delexicaliser(record.company_name, candidate, COMPANY_MASK)
        if not recheck.matched:
            break
        if not recheck.text.startswith(COMPANY_MASK):
            return None, Rejection("", 5, "name-in-middle")
        rest = recheck.text[len(COMPANY_MASK) :]
        if COMPANY_MASK in rest:
            return None, Rejection("", 5, "name-in-middle")
        candidate = _strip_edges(rest)

    if not candidate:
        return None, Rejection("", 5, "no-chunk")
    return " ".join(candidate.split()), None


_INTRA_WORD = ("'", "-")


def _punctuation_positions(word: str) -> int:
    """Punctuation marks in a word; apostrophes/hyphens between
    alphanumerics are spelling, not punctuation."""
    count = 0
    for i, ch in enumerate(word):
        if ch.isalnum() or ch.isspace():
            continue
        if ch in _INTRA_WORD:
            prev_ok = i > 0 and word[i - 1].isalnum()
            next_ok = i + 1 < len(word) and word[i + 1].isalnum()
            if prev_ok and next_ok:
                continue
        count += 1
    return count


def _passes_punctuation_rules(slogan: str, config: CleaningConfig) -> bool:
    per_word = [_punctuation_positions(w) for w in slogan.split()]
    if sum(per_word) > config.max_slogan_punct:
        return False
    longest = run = 0
    for count in per_word:
        run = run + 1 if count == 0 else 0
        longest = max(longest, run)
    return longest >= config.min_punct_free_run


def _gpe_surface_ratio(slogan: str, annotator) -> float:
    if not slogan:
        return 0.0
    gpe_chars = sum(
        span.end - span.start
        for span in annotator.entities(slogan)
        if span.etype == "GPE"
    )
    return gpe_chars / len(slogan)


def _default_language_detector(description: str, slogan: str, config: CleaningConfig) -> bool:
    combined = description + " " + slogan
    return english_stopword_ratio(combined) >= config.english_min_stopword_ratio


def clean_pipeline(
    records: list[CompanyRecord],
    config: CleaningConfig,
    annotator,
    language_detector: Callable[[str, str], bool] | None = None,
) -> tuple[list[SloganPair], list[Rejection]]:
    """Run the full cleaning pipeline. Never raises on bad records —
    every failure becomes a rejection-log entry instead."""
    rejections: list[Rejection] = []
    extracted: list[tuple[str, CompanyRecord, str]] = []

    for index, record in enumerate(records):
        record_id = "r%06d" % index
        slogan, rejection = extract_title_slogan(record, config)
        if rejection is not None:
            rejections.append(replace(rejection, id=record_id))
            continue
        extracted.append((record_id, record, slogan))

    # Step 6: deduplicate on normalised slogan text, keep the first.
    seen: set[str] = set()
    survivors: list[tuple[str, CompanyRecord, str]] = []
    for record_id, record, slogan in extracted:
        key = " ".join(slogan.lower().split())
        if key in seen:
            rejections.append(Rejection(record_id, 6, "duplicate"))
            continue
        seen.add(key)
        survivors.append((record_id, record, slogan))

    pairs: list[SloganPair] = []
    lo, hi = config.slogan_word_range
    for record_id, record, slogan in survivors:
        description = " ".join(record.raw_description.split())

        # Step 7: length limits.
        n_slogan = word_count(slogan)
        if not lo <= n_slogan <= hi:
            rejections.append(Rejection(record_id, 7, "slogan-length"))
            continue
        if word_count(description) < config.min_desc_words:
            rejections.append(Rejection(record_id, 7, "desc-length"))
            continue

        # Step 8: language.
        if language_detector is not None:
            is_english = language_detector(description, slogan)
        else:
            is_english = _default_language_detector(description, slogan, config)
        if not is_english:
            rejections.append(Rejection(record_id, 8, "non-english"))
            continue

        # Step 9: punctuation budget and punctuation-free run.
        if not _passes_punctuation_rules(slogan, config):
            rejections.append(Rejection(record_id, 9, "punctuation"))
            continue

        # Step 10: slogans that are mostly place names.
        if _gpe_surface_ratio(slogan, annotator) > config.max_gpe_ratio:
            rejections.append(Rejection(record_id, 10, "gpe-ratio"))
            continue

        pairs.append(
            SloganPair(
                id=record_id,
                company_name=record.company_name,
                description=description,
                slogan=slogan,
                split="train",
                industry=record.industry,
            )
        )
    logger.info(
        "cleaning kept %d/%d records (%d rejected)",
        len(pairs),
        len(records),
        len(rejections),
    )
    return pairs, rejections


def split_dataset(
    pairs: list[SloganPair],
    valid_fraction: float = 0.02,
    test_fraction: float = 0.02,
    seed: int = 0,
) -> list[SloganPair]:
    """Deterministically partition pairs into train/valid/test."""
    if not 0 < valid_fraction < 0.5 or not 0 < test_fraction < 0.5:
        raise ValueError("fractions must lie in (0, 0.5)")
    if valid_fraction + test_fraction >= 1:
        raise ValueError("fractions must sum to less than 1")
    n = len(pairs)
    if n < 3:
        raise ValueError("too-small: need at least 3 pairs to split")
    indices = list(range(n))
    Random(seed).shuffle(indices)
    n_valid = round(n * valid_fraction)
    n_test = round(n * test_fraction)
    assignment = {}
    for position, index in enumerate(indices):
        if position < n_valid:
            assignment[index] = "valid"
        elif position < n_valid + n_test:
            assignment[index] = "test"
        else:
            assignment[index] = "train"
    return [replace(pair, split=assignment[i]) for i, pair in enumerate(pairs)]


@dataclass
class CorpusStats:
    pct_slogan_in_desc: float
    pct_unigram_overlap: float
    pct_desc_with_company: float
    entity_type_table: dict[str, dict[str, float]]
    industry_histogram: dict[str, int]
    slogan_length_histogram: dict[int, int]
    description_length_histogram: dict[int, int]
    n_pairs: int

    def to_dict(self) -> dict:
        return {
            "pct_slogan_in_desc": self.pct_slogan_in_desc,
            "pct_unigram_overlap": self.pct_unigram_overlap,
            "pct_desc_with_company": self.pct_desc_with_company,
            "entity_type_table": self.entity_type_table,
            "industry_histogram": dict(self.industry_histogram),
            "slogan_length_histogram": {
                str(k): v for k, v in sorted(self.slogan_length_histogram.items())
            },
            "description_length_histogram": {
                str(k): v
                for k, v in sorted(self.description_length_histogram.items())
            },
            "n_pairs": self.n_pairs,
        }


def compute_corpus_stats(pairs: list[SloganPair], annotator) -> CorpusStats:
    """Aggregate statistics answering the corpus-analysis questions.

    All percentages are order-invariant means over pairs. Unigram overlap
    is the per-pair fraction of slogan word tokens found anywhere in the
    description, averaged.
    """
    if not pairs:
        raise ValueError("no pairs to analyse")
    in_desc = 0
    with_company = 0
    overlap_sum = 0.0
    industry = Counter()
    slogan_lengths = Counter()
    desc_lengths = Counter()
    type_in_desc = Counter()
    type_in_slogan = Counter()
    type_slogan_minus_desc = Counter()

    for pair in pairs:
        desc_lower = pair.description.lower()
        if pair.slogan.lower() in desc_lower:
            in_desc += 1
        if delexicalise_company(pair.company_name, pair.description).matched:
            with_company += 1
        slogan_toks = rouge_tokens(pair.slogan)
        desc_vocab = set(rouge_tokens(pair.description))
        if slogan_toks:
            overlap_sum += sum(1 for t in slogan_toks if t in desc_vocab) / len(
                slogan_toks
            )
        industry[pair.industry or "unknown"] += 1
        slogan_lengths[word_count(pair.slogan)] += 1
        desc_lengths[word_count(pair.description)] += 1

        desc_types = {s.etype for s in annotator.entities(pair.description)}
        slogan_spans = annotator.entities(pair.slogan)
        slogan_types = {s.etype for s in slogan_spans}
        hallucinated_types = {
            s.etype for s in slogan_spans if s.surface.lower() not in desc_lower
        }
        for etype in MASKED_ENTITY_TYPES:
            type_in_desc[etype] += etype in desc_types
            type_in_slogan[etype] += etype in slogan_types
            type_slogan_minus_desc[etype] += etype in hallucinated_types

    n = len(pairs)
    table = {
        etype: {
            "pct_desc": type_in_desc[etype] / n,
            "pct_slogan": type_in_slogan[etype] / n,
            "pct_slogan_minus_desc": type_slogan_minus_desc[etype] / n,
        }
        for etype in MASKED_ENTITY_TYPES
    }
    return CorpusStats(
        pct_slogan_in_desc=in_desc / n,
        pct_unigram_overlap=overlap_sum / n,
        pct_desc_with_company=with_company / n,
        entity_type_table=table,
        industry_histogram=dict(industry),
        slogan_length_histogram=dict(slogan_lengths),
        description_length_histogram=dict(desc_lengths),
        n_pairs=n,
    )
