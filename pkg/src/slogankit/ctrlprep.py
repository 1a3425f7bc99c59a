"""Conditioning preparation: prompts, code balancing, inference codes.

A conditioned training row pairs a control code (the syntactic class of
the slogan's first word) with the masked description. At inference time
codes are sampled instead, which is how output shape gets steered.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from random import Random
from typing import Callable

from .annotate import CONTROL_CODES, derive_control_code

logger = logging.getLogger(__name__)

PROMPT_SEPARATOR = "</s>"

# Codes sampled at inference time when no explicit strategy is given; the
# dominant noun class is excluded so sampled codes actually steer output.
PAPER_DEFAULT_POOL = ("JJ", "VB", "DT", "PR", "OTHER")
UNIFORM_POOL = ("NN", "JJ", "VB", "DT", "PR", "OTHER")

# Average subwords produced per whitespace token, used to convert a
# subword budget into a word budget when no tokenizer is attached.
SUBWORDS_PER_WORD = 1.3


def truncate_description(
    text: str,
    max_source_tokens: int = 80,
    token_counter: Callable[[str], int] | None = None,
) -> str:
    """Trim ``text`` to fit a subword budget.

    ``token_counter`` maps one whitespace token to its subword count; when
    absent the budget is converted with the average rate instead.
    """
    if max_source_tokens <= 0:
        raise ValueError("max_source_tokens must be positive")
    words = text.split()
    if token_counter is None:
        return " ".join(words[: int(max_source_tokens / SUBWORDS_PER_WORD)])
    kept: list[str] = []
    used = 0
    for word in words:
        cost = token_counter(word)
        if cost <= 0:
            raise ValueError("token_counter returned %r for %r" % (cost, word))
        if used + cost > max_source_tokens:
            break
        kept.append(word)
        used += cost
    return " ".join(kept)


def assemble_prompt(
    control_code: str,
    masked_description: str,
    max_source_tokens: int = 80,
    token_counter: Callable[[str], int] | None = None,
    separator: str = PROMPT_SEPARATOR,
) -> str:
    if control_code not in CONTROL_CODES:
        raise ValueError("unknown control code: %r" % control_code)
    body = truncate_description(masked_description, max_source_tokens, token_counter)
    return "%s %s %s" % (control_code, separator, body)


def condition_rows(rows: list[dict], tagger=None) -> list[dict]:
    """Attach a control code to each masked pair."""
    out = []
    for row in rows:
        code = derive_control_code(row["masked_slogan"], tagger)
        out.append(
            {
                "code": code,
                "masked_description": row["masked_description"],
                "masked_slogan": row["masked_slogan"],
                "reverse_map": row["reverse_map"],
            }
        )
    return out


def upsample_by_code(
    rows: list[dict], target: int = 100_000, seed: int = 0
) -> list[dict]:
    """Duplicate minority-code rows until each code reaches ``target``.

    The majority noun code is left alone. Originals are all preserved, in
    their input order, with sampled duplicates appended code by code.
    """
    if target <= 0:
        raise ValueError("target must be positive")
    by_code: dict[str, list[dict]] = defaultdict(list)
    for row in rows:
        by_code[row["code"]].append(row)

    for code in CONTROL_CODES:
        if code != "NN" and code not in by_code:
            logger.warning("no rows with code %s; nothing to upsample", code)

    rng = Random(seed)
    out = list(rows)
    for code in sorted(by_code):
        if code == "NN":
            continue
        group = by_code[code]
        if len(group) > target:
            raise ValueError(
                "code %s has %d rows, already above the target %d"
                % (code, len(group), target)
            )
        out.extend(rng.choice(group) for _ in range(target - len(group)))
    return out


def sample_inference_codes(
    n: int,
    strategy: str = "paper_default",
    seed: int = 0,
    without_replacement: bool = False,
) -> list[str]:
    """Draw ``n`` control codes for inference.

    Strategies: ``paper_default`` (non-noun pool), ``uniform_all`` (all six
    first-word classes), or ``fixed:CODE``. Without replacement, the pool
    is dealt out in shuffled passes so counts stay as even as possible.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if strategy.startswith("fixed:"):
        code = strategy.split(":", 1)[1]
        if code not in CONTROL_CODES:
            raise ValueError("unknown control code: %r" % code)
        return [code] * n
    pools = {"paper_default": PAPER_DEFAULT_POOL, "uniform_all": UNIFORM_POOL}
    if strategy not in pools:
        raise ValueError("unknown sampling strategy: %r" % strategy)
    pool = list(pools[strategy])
    rng = Random(seed)
    if not without_replacement:
        return [rng.choice(pool) for _ in range(n)]
    out: list[str] = []
    while len(out) < n:
        out.extend(rng.sample(pool, min(len(pool), n - len(out))))
    return out
