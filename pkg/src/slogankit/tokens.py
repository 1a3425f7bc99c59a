"""Shared tokenisation rules and reserved-token definitions.

Every module that counts words, compares slogans, or inspects mask tokens
goes through the helpers in this file so the rules stay consistent across
the cleaning pipeline, the baselines, and the metrics.
"""
from __future__ import annotations

import re

# Reserved token standing in for the company name after delexicalisation.
COMPANY_MASK = "<company>"

# Placeholder words used for typed entity mask tokens, keyed by entity type.
ENTITY_TYPE_TO_WORD = {
    "GPE": "country",
    "DATE": "date",
    "CARDINAL": "number",
    "LOCATION": "location",
    "PERSON": "person",
    "NORP": "national",
}

MASK_WORDS = tuple(ENTITY_TYPE_TO_WORD.values())

# Legal entity mask token: "[country]" for the first entity of a type,
# "[country1]", "[country2]", ... thereafter.
MASK_TOKEN_RE = re.compile(
    r"\[(?:%s)(?:[1-9][0-9]*)?\]" % "|".join(MASK_WORDS)
)

# An opening mask token missing its closing bracket at the end of a string
# (generation can truncate mid-token).
UNCLOSED_MASK_RE = re.compile(
    r"\[(?:%s)(?:[1-9][0-9]*)?$" % "|".join(MASK_WORDS)
)

# Words removed together with an illegal/unknown mask token: articles and
# the prepositions that typically introduce an entity mention.
REPAIR_STOP_WORDS = frozenset(
    "the a an of for in from at by with on to".split()
)

# General-purpose English stop words. Used by the language heuristic, the
# keyword extractor, and nowhere else (ROUGE keeps stop words on purpose).
STOP_WORDS = frozenset("""
a about above after again all also am an and any are as at be because been
before being below between both but by can did do does doing down during
each few for from further had has have having he her here hers him his how
i if in into is it its itself just me more most my no nor not now of off
on once only or other our ours out over own same she so some such than that
the their theirs them then there these they this those through to too under
until up very was we were what when where which while who whom why will
with you your yours
""".split())

_EDGE_PUNCT_RE = re.compile(r"^[^0-9A-Za-z]+|[^0-9A-Za-z]+$")


def strip_edge_punct(token: str) -> str:
    """Remove non-alphanumeric characters from both ends of a token."""
    return _EDGE_PUNCT_RE.sub("", token)


def words(text: str) -> list[str]:
    """Whitespace tokens, verbatim."""
    return text.split()


def word_count(text: str) -> int:
    """Number of whitespace tokens that still contain an alphanumeric
    character once edge punctuation is stripped.

    This is the "word" used by all length rules: a stray "&" or "—" does
    not count as a word, but "don't", "[country]" and "B2B" each count as
    one.
    """
    return sum(1 for tok in text.split() if strip_edge_punct(tok))


def rouge_tokens(text: str) -> list[str]:
    """Lowercased word tokens with edge punctuation stripped.

    This tokenisation reproduces the published worked example for the
    n-gram overlap metrics and is also used wherever slogan/description
    vocabularies are compared.
    """
    out = []
    for tok in text.lower().split():
        tok = strip_edge_punct(tok)
        if tok:
            out.append(tok)
    return out


_DETACH_RE = re.compile(
    # word cores keep internal apostrophes/hyphens: "world's", "cross-channel"
    r"[0-9A-Za-z]+(?:['\-][0-9A-Za-z]+)*|[^0-9A-Za-z\s]"
)


def detached_tokens(text: str) -> list[str]:
    """Word tokens with punctuation detached as separate tokens.

    "World's Best, Fast!" -> ["World's", "Best", ",", "Fast", "!"].
    Intra-word apostrophes and hyphens stay attached.
    """
    return _DETACH_RE.findall(text)


def mask_tokens_in(text: str) -> set[str]:
    """The set of legal entity mask tokens occurring in ``text``."""
    return set(MASK_TOKEN_RE.findall(text))


def is_mask_token(token: str) -> bool:
    return MASK_TOKEN_RE.fullmatch(token) is not None


def starts_with_mask_token(text: str) -> bool:
    """True when the first thing in ``text`` is a legal entity mask token."""
    return MASK_TOKEN_RE.match(text.lstrip()) is not None


def english_stopword_ratio(text: str) -> float:
    """Fraction of word tokens that are common English stop words.

    Cheap, deterministic language signal: genuinely English marketing text
    sits well above 0.12, while foreign-language or keyword-stuffed text
    falls below it.
    """
    toks = rouge_tokens(text)
    if not toks:
        return 0.0
    hits = sum(1 for t in toks if t in STOP_WORDS)
    return hits / len(toks)
