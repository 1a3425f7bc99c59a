"""Deterministic POS tagging and control-code derivation.

The built-in tagger is lexicon-first with suffix and casing fallbacks. It
is not meant to rival a trained tagger; it is meant to give identical
answers on every run with zero model downloads, which is what the test
suite and the desk-scale baselines need. A process-boundary adapter to a
real tagger lives in ``annotate.remote``.
"""
from __future__ import annotations

import re

from ..tokens import MASK_TOKEN_RE, starts_with_mask_token, strip_edge_punct
from .lexicon import LEXICON

CONTROL_CODES = ("NN", "JJ", "VB", "DT", "PR", "OTHER", "ENT")

# The six codes a slogan can carry without entity masking.
POS_CONTROL_CODES = ("NN", "JJ", "VB", "DT", "PR", "OTHER")

_NUMBER_RE = re.compile(r"^#?\d[\d,.]*%?$")


def _suffix_tag(word: str) -> str | None:
    """Suffix heuristics for words missing from the lexicon."""
    if word.endswith("ly") and len(word) > 3:
        return "RB"
    if word.endswith("ing") and len(word) > 4:
        return "VBG"
    if word.endswith("ed") and len(word) > 3:
        return "VBD"
    if word.endswith("ies") and len(word) > 4:
        stem = word[:-3] + "y"
        if LEXICON.get(stem) == "NN":
            return "NNS"
        if LEXICON.get(stem, "").startswith("VB"):
            return "VBZ"
        return "NNS"
    if word.endswith("s") and not word.endswith("ss") and len(word) > 2:
        for stem in (word[:-1], word[:-2] if word.endswith("es") else None):
            if not stem:
                continue
            tag = LEXICON.get(stem)
            if tag == "NN":
                return "NNS"
            if tag == "VB":
                return "VBZ"
            if tag == "JJ":
                return "NNS"
        return "NNS"
    if word.endswith("est") and len(word) > 4 and LEXICON.get(word[:-3]) == "JJ":
        return "JJS"
    if word.endswith("er") and len(word) > 3 and LEXICON.get(word[:-2]) == "JJ":
        return "JJR"
    return None


def tag_word(token: str) -> str:
    """Tag a single token as it appears in running text."""
    if MASK_TOKEN_RE.match(token):
        # Entity placeholders stand in for proper names.
        return "NNP"
    core = strip_edge_punct(token)
    if not core:
        return "SYM"
    if _NUMBER_RE.match(core):
        return "CD"
    lowered = core.lower()
    if lowered in LEXICON:
        return LEXICON[lowered]
    if lowered.endswith("'s") and lowered[:-2] in LEXICON:
        # Genitives inherit a nominal reading: "World's" -> noun-like.
        base = LEXICON[lowered[:-2]]
        return base if base.startswith("NN") else "NN"
    suffixed = _suffix_tag(lowered)
    if suffixed:
        return suffixed
    if core[:1].isupper():
        return "NNPS" if core.endswith("s") and not core.endswith("ss") else "NNP"
    return "NN"


class BuiltinTagger:
    """POS tags and (via composition) entity spans, fully deterministic."""

    def tag(self, text: str) -> list[tuple[str, str]]:
        return [(tok, tag_word(tok)) for tok in text.split()]

    def entities(self, text: str):
        # Imported lazily so postags stays usable without the gazetteer.
        from .ner import find_entities

        return find_entities(text)


_DEFAULT = BuiltinTagger()


def tag_pos(text: str, tagger=None) -> list[tuple[str, str]]:
    """One (token, tag) per whitespace token; [] for empty text."""
    if not text.strip():
        return []
    return (tagger or _DEFAULT).tag(text)


def coarse_pos(tag: str) -> str:
    """Collapse a fine-grained tag into one of the six POS control codes.

    Nouns of any kind map to NN; adjectives and adverbs merge into JJ;
    verbs of any form map to VB; determiners and personal/possessive
    pronouns keep their own codes; everything else (numbers, prepositions,
    question words, ...) is OTHER.
    """
    if not tag:
        return "OTHER"
    if tag == "DT":
        return "DT"
    if tag in ("PRP", "PRP$"):
        return "PR"
    head = tag[:2]
    if head == "NN":
        return "NN"
    if head in ("JJ", "RB"):
        return "JJ"
    if head == "VB":
        return "VB"
    return "OTHER"


def derive_control_code(slogan: str, tagger=None) -> str:
    """Control code of a slogan: ENT when it opens with an entity mask
    token, otherwise the coarse POS of its first word."""
    if not slogan.strip():
        raise ValueError("empty: cannot derive a control code from an empty slogan")
    if starts_with_mask_token(slogan):
        return "ENT"
    first_token = slogan.split()[0]
    tags = tag_pos(first_token, tagger)
    return coarse_pos(tags[0][1])
