"""Client for a slogan-generation service and the end-to-end pipeline.

The service is any HTTP endpoint speaking the small JSON protocol below;
a backend is any object with a ``generate(request) -> response`` method,
which keeps tests and local experiments free of sockets.

Request payload::

    {"description": "...", "control_code": "VB" | null,
     "decoding": {"strategy": "greedy" | "nucleus", "top_p": 0.95,
                  "temperature": 1.0, "repetition_penalty": 1.2,
                  "max_new_tokens": 20},
     "num_return": 1}

Response payload::

    {"slogans": ["..."], "backend_id": "..."}
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable

import requests

from .annotate import BuiltinTagger
from .ctrlprep import sample_inference_codes, truncate_description
from .delex import delexicalise_company, relexicalise
from .entmask import mask_pair, repair_mask_tokens, unmask_slogan

logger = logging.getLogger(__name__)

DECODING_STRATEGIES = ("greedy", "nucleus")


class GenerationError(RuntimeError):
    """The service answered, but not with a valid response payload."""


@dataclass
class DecodingConfig:
    strategy: str = "nucleus"
    top_p: float = 0.95
    temperature: float = 1.0
    repetition_penalty: float = 1.2
    max_new_tokens: int = 20

    def __post_init__(self) -> None:
        if self.strategy not in DECODING_STRATEGIES:
            raise ValueError("unknown decoding strategy: %r" % self.strategy)
        if not 0 < self.top_p <= 1:
            raise ValueError("top_p must lie in (0, 1]")
        if self.temperature <= 0:
            raise ValueError("temperature must be positive")
        if self.max_new_tokens <= 0:
            raise ValueError("max_new_tokens must be positive")

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "top_p": self.top_p,
            "temperature": self.temperature,
            "repetition_penalty": self.repetition_penalty,
            "max_new_tokens": self.max_new_tokens,
        }


@dataclass
class GenerationRequest:
    description: str
    control_code: str | None = None
    decoding: DecodingConfig = field(default_factory=DecodingConfig)
    num_return: int = 1

    def to_payload(self) -> dict:
        return {
            "description": self.description,
            "control_code": self.control_code,
            "decoding": self.decoding.to_dict(),
            "num_return": self.num_return,
        }


@dataclass
class GenerationResponse:
    slogans: list[str]
    backend_id: str

    @classmethod
    def from_payload(cls, payload: object) -> "GenerationResponse":
        if not isinstance(payload, dict):
            raise GenerationError("response is not an object: %r" % payload)
        slogans = payload.get("slogans")
        backend_id = payload.get("backend_id")
        if not isinstance(slogans, list) or not all(
            isinstance(s, str) for s in slogans
        ):
            raise GenerationError("response field 'slogans' must be a string list")
        if not isinstance(backend_id, str):
            raise GenerationError("response field 'backend_id' must be a string")
        return cls(slogans=slogans, backend_id=backend_id)


class HttpBackend:
    """One generation service endpoint."""

    def __init__(self, base_url: str, timeout: float = 30.0, session=None):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self._session = session or requests.Session()

    def generate(self, request: GenerationRequest) -> GenerationResponse:
        response = self._session.post(
            self.base_url + "/generate",
            json=request.to_payload(),
            timeout=self.timeout,
        )
        response.raise_for_status()
        try:
            payload = response.json()
        except ValueError as exc:
            raise GenerationError("response is not JSON: %s" % exc)
        return GenerationResponse.from_payload(payload)


def generate_with_retry(
    backend,
    request: GenerationRequest,
    attempts: int = 3,
    initial_delay: float = 0.2,
    sleep: Callable[[float], None] = time.sleep,
) -> GenerationResponse:
    """Call the backend, retrying transient failures with exponential
    backoff. The last failure is re-raised untouched."""
    if attempts < 1:
        raise ValueError("attempts must be at least 1")
    delay = initial_delay
    for attempt in range(attempts):
        try:
            return backend.generate(request)
        except (requests.RequestException, GenerationError) as exc:
            if attempt == attempts - 1:
                raise
            logger.warning(
                "generation attempt %d/%d failed (%s); retrying in %.1fs",
                attempt + 1,
                attempts,
                exc,
                delay,
            )
            sleep(delay)
            delay *= 2
    raise AssertionError("unreachable")


def end_to_end_generate(
    company_name: str,
    description: str,
    backend,
    codes: list[str] | None = None,
    decoding: DecodingConfig | None = None,
    num_return: int = 1,
    tagger=None,
    max_source_tokens: int = 80,
    token_counter: Callable[[str], int] | None = None,
    seed: int = 0,
) -> list[tuple[str, str]]:
    """Produce display-ready slogans for one company description.

    The description is name-masked and entity-masked before it goes over
    the wire; whatever comes back is repaired, unmasked, and has the
    company surface form restored, so callers never see internal tokens.
    Returns (control_code, slogan) pairs in generation order.
    """
    if codes is None:
        codes = sample_inference_codes(6, "paper_default", seed=seed)
    decoding = decoding or DecodingConfig()
    annotator = tagger or BuiltinTagger()

    delexed = delexicalise_company(company_name, description)
    spans = annotator.entities(delexed.text)
    masked_desc, _, mask_map = mask_pair(delexed.text, "", spans, [])
    body = truncate_description(masked_desc, max_source_tokens, token_counter)
    surface = delexed.surface_form if delexed.matched else company_name

    results: list[tuple[str, str]] = []
    for code in codes:
        request = GenerationRequest(
            description=body,
            control_code=code,
            decoding=decoding,
            num_return=num_return,
        )
        response = generate_with_retry(backend, request)
        for raw in response.slogans:
            repaired = repair_mask_tokens(raw, mask_map)
            unmasked = unmask_slogan(repaired, mask_map)
            results.append((code, relexicalise(unmasked, surface)))
    return results
