"""Built-in deterministic entity recogniser.

Gazetteer lookups for places and group adjectives, regexes for dates and
numbers, and a capitalized-bigram heuristic for person names. Documented
as a test oracle: it is deliberately simple, case-sensitive, and fully
reproducible. Overlaps are resolved earliest-start, then longest, then by
a fixed type priority.
"""
from __future__ import annotations

import re

from ..entmask import EntitySpan
from .gazetteer import GPE, LOCATION, MONTHS, NORP, PERSON_FIRST_NAMES

# Lower number = stronger claim on a span.
_PRIORITY = {"DATE": 0, "GPE": 1, "LOCATION": 2, "NORP": 3, "PERSON": 4, "CARDINAL": 5}


def _alternation(entries: tuple[str, ...]) -> re.Pattern[str]:
    ordered = sorted(entries, key=len, reverse=True)
    body = "|".join(re.escape(e) for e in ordered)
    return re.compile(r"(?<![0-9A-Za-z])(?:%s)(?![0-9A-Za-z])" % body)


_GPE_RE = _alternation(GPE)
_NORP_RE = _alternation(NORP)
_LOCATION_RE = _alternation(LOCATION)

_YEAR_RE = re.compile(r"(?<![0-9A-Za-z])(?:19|20)\d{2}s?(?![0-9A-Za-z])")
_MONTH_RE = re.compile(
    r"(?<![0-9A-Za-z])(?:%s)(?:\s+(?:19|20)\d{2})?(?![0-9A-Za-z])"
    % "|".join(MONTHS)
)
_CARDINAL_RE = re.compile(
    r"(?<![0-9A-Za-z.,])(?:\d{1,3}(?:,\d{3})+|\d+(?:\.\d+)?)(?![0-9A-Za-z%])"
)

_CAPITALIZED_RE = re.compile(r"^[A-Z][a-z]+$")
_TOKEN_RE = re.compile(r"\S+")


def _gazetteer_spans(text: str) -> list[tuple[int, int, str]]:
    found = []
    for etype, pattern in (
        ("GPE", _GPE_RE),
        ("NORP", _NORP_RE),
        ("LOCATION", _LOCATION_RE),
    ):
        for m in pattern.finditer(text):
            found.append((m.start(), m.end(), etype))
    return found


def _date_spans(text: str) -> list[tuple[int, int, str]]:
    found = [(m.start(), m.end(), "DATE") for m in _YEAR_RE.finditer(text)]
    found.extend((m.start(), m.end(), "DATE") for m in _MONTH_RE.finditer(text))
    return found


def _cardinal_spans(text: str) -> list[tuple[int, int, str]]:
    return [(m.start(), m.end(), "CARDINAL") for m in _CARDINAL_RE.finditer(text)]


def _person_spans(text: str) -> list[tuple[int, int, str]]:
    tokens = list(_TOKEN_RE.finditer(text))
    found = []
    for first, second in zip(tokens, tokens[1:]):
        first_core = first.group(0).strip("\"'().,;:!?")
        if first_core not in PERSON_FIRST_NAMES:
            continue
        second_core = second.group(0).strip("\"'().,;:!?")
        if not _CAPITALIZED_RE.match(second_core):
            continue
        start = first.start() + first.group(0).index(first_core)
        end = second.start() + second.group(0).index(second_core) + len(second_core)
        found.append((start, end, "PERSON"))
    return found


def find_entities(text: str) -> list[EntitySpan]:
    """Non-overlapping entity spans of the six masked types, by offset."""
    candidates = (
        _date_spans(text)
        + _gazetteer_spans(text)
        + _cardinal_spans(text)
        + _person_spans(text)
    )
    candidates.sort(key=lambda c: (c[0], -(c[1] - c[0]), _PRIORITY[c[2]]))
    spans: list[EntitySpan] = []
    last_end = -1
    for start, end, etype in candidates:
        if start < last_end:
            continue
        spans.append(EntitySpan.from_text(text, start, end, etype))
        last_end = end
    return spans
