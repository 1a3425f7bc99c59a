"""Typed entity masking with reverse maps, plus output repair.

Each (description, slogan) pair gets its own mask map. Entities are
replaced by type-indexed placeholder tokens ("[country]", "[country1]",
...), the map records how to undo the substitution at inference time, and
a repair pass cleans up the malformed tokens a generator occasionally
emits before the reverse substitution runs.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .tokens import (
    ENTITY_TYPE_TO_WORD,
    MASK_TOKEN_RE,
    REPAIR_STOP_WORDS,
    UNCLOSED_MASK_RE,
    mask_tokens_in,
    strip_edge_punct,
)

MASKED_ENTITY_TYPES = tuple(ENTITY_TYPE_TO_WORD)


class OverlapError(ValueError):
    """Raised when entity spans overlap within one text."""


@dataclass(frozen=True)
class EntitySpan:
    start: int
    end: int
    surface: str
    etype: str

    @classmethod
    def from_text(cls, text: str, start: int, end: int, etype: str) -> "EntitySpan":
        return cls(start=start, end=end, surface=text[start:end], etype=etype)


@dataclass
class MaskMap:
    """Per-pair bidirectional mapping between surfaces and mask tokens.

    ``forward`` maps every seen surface (including coreferring variants) to
    its token; ``reverse`` maps each token back to the first surface that
    minted it. ``counters`` tracks how many distinct tokens exist per type.
    """

    forward: dict[str, str] = field(default_factory=dict)
    reverse: dict[str, str] = field(default_factory=dict)
    counters: dict[str, int] = field(default_factory=dict)

    def _coreferring_token(self, surface: str, etype: str) -> str | None:
        # Substring coreference, case-insensitive, earliest prior entity
        # wins: "Zealand" reuses the token minted for "New Zealand".
        low = surface.lower()
        for token, first_surface in self.reverse.items():
            if self.token_type(token) != etype:
                continue
            prior = first_surface.lower()
            if low in prior or prior in low:
                return token
        return None

    @staticmethod
    def token_type(token: str) -> str | None:
        word = token.strip("[]").rstrip("0123456789")
        for etype, w in ENTITY_TYPE_TO_WORD.items():
            if w == word:
                return etype
        return None

    def assign(self, surface: str, etype: str) -> str:
        """Return the mask token for ``surface``, minting one if needed."""
        if surface in self.forward:
            return self.forward[surface]
        token = self._coreferring_token(surface, etype)
        if token is None:
            word = ENTITY_TYPE_TO_WORD[etype]
            index = self.counters.get(etype, 0)
            token = "[%s]" % word if index == 0 else "[%s%d]" % (word, index)
            self.counters[etype] = index + 1
            self.reverse[token] = surface
        self.forward[surface] = token
        return token


def assign_entity_ids(spans: list[EntitySpan], mask_map: MaskMap | None = None) -> MaskMap:
    """Assign tokens to spans in order (description spans first)."""
    mask_map = mask_map if mask_map is not None else MaskMap()
    for span in spans:
        mask_map.assign(span.surface, span.etype)
    return mask_map


def _check_no_overlap(spans: list[EntitySpan]) -> None:
    ordered = sorted(spans, key=lambda s: s.start)
    for prev, cur in zip(ordered, ordered[1:]):
        if cur.start < prev.end:
            raise OverlapError(
                "overlap: spans %r and %r intersect" % (prev, cur)
            )


def _substitute(text: str, spans: list[EntitySpan], mask_map: MaskMap) -> str:
    for span in sorted(spans, key=lambda s: s.start, reverse=True):
        token = mask_map.forward[span.surface]
        text = text[: span.start] + token + text[span.end :]
    return text


def mask_pair(
    description: str,
    slogan: str,
    desc_spans: list[EntitySpan],
    slogan_spans: list[EntitySpan],
) -> tuple[str, str, MaskMap]:
    """Mask both texts of a pair against a shared, fresh mask map.

    Description spans are processed first so a slogan entity coreferring
    with a description entity reuses the description's token, while a
    slogan-only entity mints a fresh token — the hallucination filter
    depends on that asymmetry.
    """
    _check_no_overlap(desc_spans)
    _check_no_overlap(slogan_spans)
    mask_map = MaskMap()
    ordered = sorted(desc_spans, key=lambda s: s.start) + sorted(
        slogan_spans, key=lambda s: s.start
    )
    assign_entity_ids(ordered, mask_map)
    return (
        _substitute(description, desc_spans, mask_map),
        _substitute(slogan, slogan_spans, mask_map),
        mask_map,
    )


def _token_is_clean(token: str, mask_map: MaskMap) -> bool:
    """A whitespace token survives repair iff every bracketed thing in it
    is a legal mask token present in the reverse map."""
    found = MASK_TOKEN_RE.findall(token)
    if any(tok not in mask_map.reverse for tok in found):
        return False
    rest = MASK_TOKEN_RE.sub("", token)
    return "[" not in rest and "]" not in rest


def repair_mask_tokens(text: str, mask_map: MaskMap) -> str:
    """Clean up generator output before unmasking.

    Completes a closing bracket the generator truncated at the end of the
    text, then removes every illegal or unknown bracketed token together
    with the run of articles/prepositions directly before it ("from the
    [country]" disappears as a unit, not leaving "from the" dangling).
    """
    if UNCLOSED_MASK_RE.search(text):
        text = text + "]"
    kept: list[str] = []
    for token in text.split():
        if _token_is_clean(token, mask_map):
            kept.append(token)
            continue
        while kept and strip_edge_punct(kept[-1]).lower() in REPAIR_STOP_WORDS:
            kept.pop()
    return " ".join(kept)


def unmask_slogan(text: str, mask_map: MaskMap) -> str:
    """Substitute every mask token with its original entity mention.

    Must run on repaired text; hitting a token the map does not know at
    this point is a pipeline defect, not an input problem.
    """

    def _sub(match: re.Match[str]) -> str:
        token = match.group(0)
        try:
            return mask_map.reverse[token]
        except KeyError:
            raise RuntimeError(
                "unknown mask token %r survived repair" % token
            ) from None

    return MASK_TOKEN_RE.sub(_sub, text)


def filter_hallucination_pairs(pairs: list[dict]) -> list[dict]:
    """Drop pairs whose masked slogan mentions entities the masked
    description does not contain.

    Expects rows with ``masked_description`` and ``masked_slogan`` keys and
    keeps a row iff the slogan's mask-token set is a subset of the
    description's. Intended for the training split only; validation and
    test stay untouched so results remain comparable across systems.
    """
    kept = []
    for pair in pairs:
        slogan_tokens = mask_tokens_in(pair["masked_slogan"])
        desc_tokens = mask_tokens_in(pair["masked_description"])
        if slogan_tokens <= desc_tokens:
            kept.append(pair)
    return kept
