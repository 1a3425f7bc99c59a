"""Company-name delexicalisation via longest-prefix matching.

Companies rarely use their full legal name in marketing copy ("Google LLC"
goes by "Google"). We therefore try the full registered name first and keep
dropping the last word until some prefix is found in the text; that prefix
becomes the recorded surface form and every occurrence of it is replaced
with a reserved mask token.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .tokens import COMPANY_MASK


class NoSurfaceError(ValueError):
    """Raised when a mask token is present but no surface form is known."""


@dataclass
class DelexResult:
    text: str
    surface_form: str
    matched: bool


def _boundary_pattern(surface: str) -> re.Pattern[str]:
    # Word-boundary match that also treats punctuation as a boundary, so
    # "Knorex" matches inside "Knorex.com" but not inside "Knorexify".
    return re.compile(
        r"(?<![0-9A-Za-z])" + re.escape(surface) + r"(?![0-9A-Za-z])",
        re.IGNORECASE,
    )


def delexicalise_company(
    company_name: str, text: str, mask_token: str = COMPANY_MASK
) -> DelexResult:
    """Replace the longest matching prefix of ``company_name`` in ``text``.

    Matching is case-insensitive and bounded at word edges; all occurrences
    of the matched prefix are replaced. The returned surface form preserves
    the casing actually found in the text, so substituting it back restores
    the original string.
    """
    candidate = company_name.strip()
    while candidate:
        pattern = _boundary_pattern(candidate)
        match = pattern.search(text)
        if match:
            surface = match.group(0)
            return DelexResult(
                text=pattern.sub(mask_token, text),
                surface_form=surface,
                matched=True,
            )
        cut = candidate.rfind(" ")
        if cut == -1:
            break
        candidate = candidate[:cut].rstrip()
    return DelexResult(text=text, surface_form="", matched=False)


def relexicalise(text: str, surface_form: str, mask_token: str = COMPANY_MASK) -> str:
    """Substitute every ``mask_token`` with the recorded surface form."""
    if mask_token not in text:
        return text
    if not surface_form:
        raise NoSurfaceError(
            "no-surface: text contains %r but no surface form was recorded"
            % mask_token
        )
    return text.replace(mask_token, surface_form)
