"""POS tagging, entity recognition, and control-code derivation."""
from __future__ import annotations

from .ner import find_entities
from .postags import (
    CONTROL_CODES,
    POS_CONTROL_CODES,
    BuiltinTagger,
    coarse_pos,
    derive_control_code,
    tag_pos,
    tag_word,
)
from .remote import HttpTagger, SubprocessTagger

__all__ = [
    "CONTROL_CODES",
    "POS_CONTROL_CODES",
    "BuiltinTagger",
    "HttpTagger",
    "SubprocessTagger",
    "coarse_pos",
    "derive_control_code",
    "find_entities",
    "tag_pos",
    "tag_word",
]
