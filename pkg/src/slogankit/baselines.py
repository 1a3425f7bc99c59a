"""Non-neural baselines: description prefixes and a genetic slogan search.

The extractive baselines exploit how often real slogans hide in the first
line of a company description. The genetic search goes the other way: it
mines part-of-speech skeletons from reference slogans and fills them with
pooled words, scored by cheap proxies instead of a learned model.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from random import Random

from .corpus import SloganPair
from .metrics import rouge_n
from .tokens import MASK_TOKEN_RE, strip_edge_punct
from .annotate import tag_pos, tag_word

# Tokens that end with one of these are not sentence boundaries.
_ABBREVIATIONS = frozenset(
    "inc ltd llc co corp plc mr mrs ms dr prof st ave blvd no vs etc al eg ie jr sr".split()
)

_TERMINATOR_RE = re.compile(r"[.!?]+")


def first_sentence(text: str) -> str:
    """The first sentence of ``text``, with common abbreviations and
    decimals not treated as boundaries."""
    text = text.strip()
    for match in _TERMINATOR_RE.finditer(text):
        end = match.end()
        if end < len(text) and not text[end].isspace():
            continue
        if "." in match.group():
            preceding = text[: match.start()].split()
            last = strip_edge_punct(preceding[-1]).lower() if preceding else ""
            if last in _ABBREVIATIONS or len(last) == 1:
                continue
        return text[:end].strip()
    return text


def first_k_words(text: str, k: int = 11) -> str:
    if k <= 0:
        raise ValueError("k must be positive")
    return " ".join(text.split()[:k])


def sweep_first_k(
    pairs: list[SloganPair], ks=range(1, 21)
) -> tuple[int, dict[int, float]]:
    """Mean unigram-overlap F1 of the first-k-words baseline for each k.

    Returns the best k (ties favour the smaller prefix) and the full
    score table for plotting.
    """
    if not pairs:
        raise ValueError("no pairs to sweep")
    ks = list(ks)
    if not ks:
        raise ValueError("no k values to try")
    scores = {}
    for k in ks:
        total = sum(
            rouge_n(pair.slogan, first_k_words(pair.description, k), 1).f1
            for pair in pairs
        )
        scores[k] = total / len(pairs)
    best = min(scores, key=lambda k: (-scores[k], k))
    return best, scores


# --- genetic slogan search -------------------------------------------------


@dataclass
class SkeletonModel:
    """Mined POS-sequence frequencies plus per-tag word pools."""

    skeletons: dict[tuple[str, ...], int] = field(default_factory=dict)
    pools: dict[str, list[str]] = field(default_factory=dict)


@dataclass
class GAConfig:
    population_size: int = 50
    generations: int = 30
    tournament_size: int = 3
    elitism_fraction: float = 0.1
    crossover_prob: float = 0.9
    mutation_prob: float = 0.2
    weight_keyword_coverage: float = 1.0
    weight_length_prior: float = 0.5
    weight_skeleton_frequency: float = 0.3
    weight_repetition: float = 1.0


def _pool_form(token: str) -> str:
    """How a token is stored in a word pool: mask tokens verbatim,
    anything else without edge punctuation."""
    if MASK_TOKEN_RE.match(token):
        return token
    return strip_edge_punct(token)


def mine_skeleton_model(
    slogans: list[str],
    tagger=None,
    min_words: int = 3,
    max_words: int = 12,
) -> SkeletonModel:
    """Collect POS skeletons and word pools from reference slogans.

    Because the pools are keyed by the tag each stored word receives on
    its own, any skeleton slot filled from its pool re-tags to the slot's
    tag, so generated candidates always match a mined skeleton exactly.
    """
    model = SkeletonModel()
    seen: dict[str, set[str]] = {}
    for slogan in slogans:
        tagged = tag_pos(slogan, tagger)
        if not min_words <= len(tagged) <= max_words:
            continue
        tags = tuple(tag for _, tag in tagged)
        model.skeletons[tags] = model.skeletons.get(tags, 0) + 1
        for token, tag in tagged:
            form = _pool_form(token)
            if not form:
                continue
            bucket = seen.setdefault(tag, set())
            if form not in bucket:
                bucket.add(form)
                model.pools.setdefault(tag, []).append(form)
    return model


def adapt_case(word: str, template: str) -> str:
    """Give ``word`` the casing shape of ``template``."""
    if template.isupper() and len(template) > 1:
        return word.upper()
    if template[:1].isupper():
        return word[:1].upper() + word[1:].lower()
    if template.islower():
        return word.lower()
    return word


def _word_tags(slogan: str, tagger) -> tuple[list[str], list[str]]:
    tagged = tag_pos(slogan, tagger)
    return [tok for tok, _ in tagged], [tag for _, tag in tagged]


def crossover(
    slogan_a: str,
    slogan_b: str,
    positions: tuple[int, int] | None = None,
    seed: int = 0,
    tagger=None,
) -> tuple[str, str]:
    """Swap one same-tag word pair between two slogans.

    The incoming word adopts the outgoing word's casing, so sentence-
    initial capitals survive the swap. Without explicit positions a
    random swappable pair is picked; if none exists the parents come
    back unchanged.
    """
    words_a, tags_a = _word_tags(slogan_a, tagger)
    words_b, tags_b = _word_tags(slogan_b, tagger)
    if positions is None:
        swappable = [
            (i, j)
            for i in range(len(words_a))
            for j in range(len(words_b))
            if tags_a[i] == tags_b[j]
            and words_a[i].lower() != words_b[j].lower()
        ]
        if not swappable:
            return slogan_a, slogan_b
        i, j = Random(seed).choice(swappable)
    else:
        i, j = positions
        if not (0 <= i < len(words_a) and 0 <= j < len(words_b)):
            raise ValueError("positions out of range")
        if tags_a[i] != tags_b[j]:
            raise ValueError(
                "cannot swap %r (%s) with %r (%s): tags differ"
                % (words_a[i], tags_a[i], words_b[j], tags_b[j])
            )
    out_a, out_b = list(words_a), list(words_b)
    out_a[i] = adapt_case(words_b[j], words_a[i])
    out_b[j] = adapt_case(words_a[i], words_b[j])
    return " ".join(out_a), " ".join(out_b)


def _swap_words(
    words_a: list[str],
    tags_a: list[str],
    words_b: list[str],
    tags_b: list[str],
    rng: Random,
) -> tuple[list[str], list[str]]:
    swappable = [
        (i, j)
        for i in range(len(words_a))
        for j in range(len(words_b))
        if tags_a[i] == tags_b[j] and words_a[i].lower() != words_b[j].lower()
    ]
    out_a, out_b = list(words_a), list(words_b)
    if swappable:
        i, j = rng.choice(swappable)
        out_a[i] = adapt_case(words_b[j], words_a[i])
        out_b[j] = adapt_case(words_a[i], words_b[j])
    return out_a, out_b


def _mutate(
    words: list[str], tags: list[str], pools: dict[str, list[str]], rng: Random
) -> list[str]:
    index = rng.randrange(len(words))
    tag = tags[index]
    options = [
        w for w in pools.get(tag, []) if w.lower() != words[index].lower()
    ]
    if not options:
        return words
    replacement = adapt_case(rng.choice(options), words[index])
    if tag_word(replacement) != tag:
        replacement = rng.choice(options)
        if tag_word(replacement) != tag:
            return words
    out = list(words)
    out[index] = replacement
    return out


def generate_slogans(
    model: SkeletonModel,
    keywords: list[str],
    n: int = 6,
    config: GAConfig | None = None,
    seed: int = 0,
    tagger=None,
) -> list[str]:
    """Evolve slogan candidates over the mined skeletons.

    Fitness is a weighted sum of keyword coverage, a length prior peaking
    at five words, mined-skeleton frequency, and a repetition score (the
    unique-word ratio). Deterministic for a fixed seed.
    """
    config = config or GAConfig()
    if not model.skeletons:
        raise ValueError("no skeletons: mine_skeleton_model saw no usable slogans")
    rng = Random(seed)

    pools = {tag: list(words) for tag, words in model.pools.items()}
    for keyword in keywords:
        form = _pool_form(keyword.strip())
        if not form:
            continue
        tag = tag_word(form)
        bucket = pools.setdefault(tag, [])
        if form not in bucket:
            bucket.append(form)

    fillable = [
        skeleton
        for skeleton in model.skeletons
        if all(pools.get(tag) for tag in skeleton)
    ]
    if not fillable:
        raise ValueError("no skeletons: none of the mined skeletons is fillable")
    weights = [model.skeletons[s] for s in fillable]
    max_freq = max(model.skeletons.values())

    keyword_forms = {
        _pool_form(k.strip()).lower() for k in keywords if _pool_form(k.strip())
    }

    def fitness(words: list[str], tags: tuple[str, ...]) -> float:
        lowered = {strip_edge_punct(w).lower() for w in words}
        coverage = (
            len(keyword_forms & lowered) / len(keyword_forms)
            if keyword_forms
            else 0.0
        )
        length_prior = max(0.0, 1 - abs(len(words) - 5) / 7)
        skeleton_frequency = model.skeletons.get(tags, 0) / max_freq
        repetition = len({w.lower() for w in words}) / len(words)
        return (
            config.weight_keyword_coverage * coverage
            + config.weight_length_prior * length_prior
            + config.weight_skeleton_frequency * skeleton_frequency
            + config.weight_repetition * repetition
        )

    def spawn() -> tuple[list[str], tuple[str, ...]]:
        skeleton = rng.choices(fillable, weights=weights, k=1)[0]
        return [rng.choice(pools[tag]) for tag in skeleton], skeleton

    population = [spawn() for _ in range(config.population_size)]
    best: dict[str, tuple[float, str]] = {}

    def remember(words: list[str], tags: tuple[str, ...]) -> float:
        score = fitness(words, tags)
        text = " ".join(words)
        key = text.lower()
        if key not in best or best[key][0] < score:
            best[key] = (score, text)
        return score

    def tournament(scored) -> tuple[list[str], tuple[str, ...]]:
        picks = rng.sample(range(len(scored)), min(config.tournament_size, len(scored)))
        winner = max(picks, key=lambda i: scored[i][0])
        return scored[winner][1]

    for _ in range(config.generations):
        scored = [
            (remember(words, tags), (words, tags)) for words, tags in population
        ]
        scored.sort(key=lambda item: (-item[0], " ".join(item[1][0])))
        n_elite = math.ceil(config.elitism_fraction * config.population_size)
        next_population = [item[1] for item in scored[:n_elite]]
        while len(next_population) < config.population_size:
            words_a, tags_a = tournament(scored)
            words_b, tags_b = tournament(scored)
            if rng.random() < config.crossover_prob:
                child_a, child_b = _swap_words(
                    words_a, list(tags_a), words_b, list(tags_b), rng
                )
            else:
                child_a, child_b = list(words_a), list(words_b)
            for child, tags in ((child_a, tags_a), (child_b, tags_b)):
                if rng.random() < config.mutation_prob:
                    child = _mutate(child, list(tags), pools, rng)
                next_population.append((child, tags))
        population = next_population[: config.population_size]
    for words, tags in population:
        remember(words, tags)

    ranked = sorted(best.values(), key=lambda item: (-item[0], item[1]))
    return [text for _, text in ranked[:n]]
