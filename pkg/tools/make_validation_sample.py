#!/usr/bin/env python3
"""Build the bundled 500-pair validation sample deterministically.

Three pair families give the file its measured properties:

  A (56 pairs)   slogan embedded verbatim in the description, ending at
                 word 11  -> slogan-in-description rate 56/500 = 11.2%
  B (180 pairs)  slogan words embedded in order ending at word 11, but
                 the slogan carries a comma the description lacks, so the
                 unigram containment is 1.0 without a verbatim hit
  C (264 pairs)  abstractive: exactly one or two of the five slogan
                 words appear in the description, and only after word 20
                 so prefix baselines never see them

A and B make the first-k sweep peak at k = 11; C tunes mean unigram
containment to 62.7%. The script verifies every target with the real
library code and refuses to write a file that misses any of them.

Usage: python3 tools/make_validation_sample.py [output.jsonl]
"""
from __future__ import annotations

import json
import sys
from random import Random

from slogankit import (
    BuiltinTagger,
    SloganPair,
    compute_corpus_stats,
    delexicalise_company,
    first_k_words,
    sweep_first_k,
)
from slogankit.corpus import (
    CleaningConfig,
    _default_language_detector,
    _gpe_surface_ratio,
    _passes_punctuation_rules,
)
from slogankit.tokens import rouge_tokens, word_count

SEED = 74520
N_VERBATIM = 56
N_EMBEDDED = 180
N_ABSTRACT = 264
TWO_SHARED = 124  # abstractive pairs sharing two words; the rest share one

# Slogan content words. Deliberately disjoint from the filler and company
# pools below, so per-pair token overlap is exactly what we construct.
ADJECTIVES = """premium organic artisan modern flexible reliable trusted proven
smart simple bold bright clean clever creative curated custom digital dynamic
effortless elegant essential everyday expert fine finest friendly genuine
golden honest ideal inspired instant lasting mindful natural nimble polished
practical pure quiet radiant refined seasonal sensible serene sharp sleek
steady sturdy subtle swift tailored thoughtful timeless vibrant vivid warm
wholesome""".split()

NOUNS = """coffee tea bakery kitchen garden studio gallery workshop library
market boutique press goods wares provisions essentials comfort craft design
print paper fabric timber stone copper harvest pantry cellar brew roast blend
bloom grove meadow harbor summit trail voyage journey quest spark glow pulse
rhythm echo canvas palette thread stitch weave forge wheel compass lantern
orchard hearth haven nook alcove veranda atrium loft annex parlor""".split()

# Description filler, disjoint from the slogan pool.
FILLER = """customers clients families households businesses partners
neighbors visitors guests people orders projects needs budgets schedules
standards promises advice guidance support care attention detail process
approach experience knowledge background history tradition values mission
passion region area community doorstep storefront warehouse catalogue
selection assortment lineup collection offering""".split()

COMPANY_HEADS = """Crestline Harborview Northwind Bluepeak Silverbirch
Oakfield Stonebridge Brightwater Fairmount Westgate Eastbrook Clearfield
Maplewood Ridgeline Lakeshore Fernbrook Hollowell Marlowe Tidemark Quarry
Vantage Pinnacle Beacon Corridor Meridian Foundry Keystone Paragon Sterling
Winslow Ashford Bramble Cobalt Damson Elmsworth Farrow Gildad Harrow Ivywell
Juniper Kestrel Larkspur Moorland Nettlefold Osprey Pembrook Quill Rowanby
Saxon Thistledown Umberly Verity Wexford Yardley Zephyrline""".split()

COMPANY_TAILS = "Group Partners Holdings Ventures Industries Associates Enterprises".split()

INDUSTRIES = """advertising technology food-and-beverage retail travel
finance healthcare education media construction logistics hospitality""".split()

ENTITY_SNIPPETS = [
    "since 2012",
    "since March 2015",
    "across Belgium",
    "from our Oslo workshop",
    "serving over 25,000 households",
    "recognised in 2019",
]

LEAD_WITH_COMPANY = {
    # lead length -> template; {c} is the three-word company name
    5: "{c} offers you",
    6: "At {c} we offer",
    7: "Here at {c} we offer",
}
LEAD_PLAIN = {
    5: "We proudly bring you the",
    6: "Our team is known for truly",
    7: "We are a family business offering only",
}

BURRITO_LEAD = "We may not be the only burrito in town, but we've"
BURRITO_SLOGAN = "Fast, Fresh & Tasty Mexican Food"


def _company_name(rng: Random, used: set[str]) -> str:
    while True:
        name = "%s %s %s" % (
            rng.choice(COMPANY_HEADS),
            rng.choice(COMPANY_HEADS),
            rng.choice(COMPANY_TAILS),
        )
        if name not in used:
            used.add(name)
            return name


def _slogan_words(rng: Random, length: int, used: set[str]) -> list[str]:
    while True:
        n_adj = max(1, length - 3)
        words = rng.sample(ADJECTIVES, n_adj) + rng.sample(NOUNS, length - n_adj)
        key = " ".join(words)
        if key not in used:
            used.add(key)
            return words


def _continuation(rng: Random, n_words: int) -> list[str]:
    """Filler text with a realistic share of function words."""
    connectors = (
        ["for", "the"],
        ["and", "the"],
        ["with", "our"],
        ["to", "your"],
        ["across", "their"],
    )
    words: list[str] = []
    step = 0
    while len(words) < n_words:
        if n_words - len(words) >= 3:
            words.extend(connectors[step % len(connectors)])
            step += 1
        words.append(rng.choice(FILLER))
    return words[:n_words]


def _build_pairs() -> list[SloganPair]:
    rng = Random(SEED)
    used_names: set[str] = set()
    used_slogans: set[str] = set()
    pairs: list[SloganPair] = []
    index = 0

    def emit(company: str, description: str, slogan: str) -> None:
        nonlocal index
        pairs.append(
            SloganPair(
                id="v%06d" % index,
                company_name=company,
                description=description,
                slogan=slogan,
                split="valid",
                industry=INDUSTRIES[index % len(INDUSTRIES)],
            )
        )
        index += 1

    # Families A and B: slogan words occupy description words (12-L)..11.
    for family, count in (("A", N_VERBATIM), ("B", N_EMBEDDED)):
        for i in range(count):
            length = 4 + (i % 3)  # 4, 5, 6
            words = _slogan_words(rng, length, used_slogans)
            company = _company_name(rng, used_names)
            lead_len = 11 - length
            if rng.random() < 0.63:
                lead = LEAD_WITH_COMPANY[lead_len].format(c=company)
            else:
                lead = LEAD_PLAIN[lead_len]
            assert len(lead.split()) == lead_len, lead
            tail = _continuation(rng, rng.randint(7, 9))
            if rng.random() < 0.25:
                tail.extend(rng.choice(ENTITY_SNIPPETS).split())
            description = "%s %s %s." % (lead, " ".join(words), " ".join(tail))
            if family == "A":
                slogan = " ".join(w.capitalize() for w in words)
            else:
                # Comma after the first word defeats the substring test
                # without touching the token set.
                titled = [w.capitalize() for w in words]
                slogan = titled[0] + ", " + " ".join(titled[1:])
            emit(company, description, slogan)

    # Family C: shared words only after description word 20.
    for i in range(N_ABSTRACT - 1):
        shared_count = 2 if i < TWO_SHARED - 1 else 1
        words = _slogan_words(rng, 5, used_slogans)
        company = _company_name(rng, used_names)
        shared = words[:shared_count]
        lead = LEAD_PLAIN[7] if rng.random() < 0.37 else "%s is proud to offer you" % company
        filler = _continuation(rng, 20 - len(lead.split()))
        closing = _continuation(rng, 3)
        if rng.random() < 0.25:
            closing.extend(rng.choice(ENTITY_SNIPPETS).split())
        description = "%s %s %s %s." % (
            lead,
            " ".join(filler),
            " ".join(shared),
            " ".join(closing),
        )
        slogan = " ".join(w.capitalize() for w in words)
        emit(company, description, slogan)

    # The burrito pair: a two-shared abstractive pair with a pinned lead.
    burrito_desc = (
        BURRITO_LEAD
        + " got the friendliest counter crew and an honest menu of mexican food"
        + " made fresh-daily for the neighborhood."
    )
    emit("Rio Grande Cantina", burrito_desc, BURRITO_SLOGAN)

    rng.shuffle(pairs)
    return [
        SloganPair(
            id="v%06d" % i,
            company_name=p.company_name,
            description=p.description,
            slogan=p.slogan,
            split=p.split,
            industry=p.industry,
        )
        for i, p in enumerate(pairs)
    ]


def _verify(pairs: list[SloganPair]) -> None:
    slogan_pool = set(ADJECTIVES) | set(NOUNS)
    lead_words = {
        w.lower()
        for lead in (*LEAD_PLAIN.values(), *LEAD_WITH_COMPANY.values())
        for w in lead.split()
        if "{" not in w
    }
    assert not slogan_pool & set(FILLER), "filler words collide with slogan pool"
    assert not slogan_pool & lead_words, "lead words collide with slogan pool"
    assert not slogan_pool & {w.lower() for w in COMPANY_HEADS + COMPANY_TAILS}

    assert len(pairs) == 500, len(pairs)
    tagger = BuiltinTagger()
    config = CleaningConfig()
    for pair in pairs:
        n = word_count(pair.slogan)
        assert 3 <= n <= 12, pair.slogan
        assert word_count(pair.description) >= 10, pair.id
        assert _passes_punctuation_rules(pair.slogan, config), pair.slogan
        assert _default_language_detector(pair.description, pair.slogan, config), pair.id
        assert _gpe_surface_ratio(pair.slogan, tagger) <= config.max_gpe_ratio, pair.slogan
        assert not delexicalise_company(pair.company_name, pair.slogan).matched, pair.id

    stats = compute_corpus_stats(pairs, tagger)
    assert abs(stats.pct_slogan_in_desc - 0.112) < 1e-9, stats.pct_slogan_in_desc
    assert abs(stats.pct_unigram_overlap - 0.627) <= 0.005, stats.pct_unigram_overlap

    best_k, _ = sweep_first_k(pairs)
    assert best_k == 11, best_k

    burrito = [p for p in pairs if p.description.startswith("We may not")]
    assert len(burrito) == 1
    assert first_k_words(burrito[0].description, 11) == BURRITO_LEAD


def main() -> int:
    out_path = sys.argv[1] if len(sys.argv) > 1 else "src/slogankit/data/valid_sample.jsonl"
    pairs = _build_pairs()
    _verify(pairs)
    with open(out_path, "w", encoding="utf-8") as handle:
        for pair in pairs:
            handle.write(
                json.dumps(
                    {
                        "id": pair.id,
                        "company_name": pair.company_name,
                        "description": pair.description,
                        "slogan": pair.slogan,
                        "split": pair.split,
                        "industry": pair.industry,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )
    print("wrote %d pairs to %s" % (len(pairs), out_path))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
