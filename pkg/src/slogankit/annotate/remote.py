"""Process-boundary adapters for plugging in a real tagger.

Wire protocol, shared by both transports: one JSON object per line.

    request:  {"text": "<input text>"}
    response: {"tokens": [{"text": "...", "tag": "..."}, ...],
               "entities": [{"start": 0, "end": 7, "type": "GPE"}, ...]}

A subprocess adapter keeps a worker process alive and speaks the protocol
over stdin/stdout; an HTTP adapter POSTs each request to a fixed URL.
Both expose the same ``tag``/``entities`` interface as the built-in
tagger, so they drop into every call site that accepts a tagger.
"""
from __future__ import annotations

import json
import subprocess

import requests

from ..entmask import MASKED_ENTITY_TYPES, EntitySpan


class TaggerProtocolError(RuntimeError):
    """The external tagger answered with something unparseable."""


def _parse_response(payload: dict, text: str):
    try:
        tokens = [(t["text"], t["tag"]) for t in payload["tokens"]]
        entities = [
            EntitySpan.from_text(text, e["start"], e["end"], e["type"])
            for e in payload["entities"]
            if e["type"] in MASKED_ENTITY_TYPES
        ]
    except (KeyError, TypeError) as exc:
        raise TaggerProtocolError(
            "malformed tagger response: %r" % (payload,)
        ) from exc
    return tokens, entities


class SubprocessTagger:
    """Line-delimited JSON over a long-lived child process."""

    def __init__(self, command: list[str]):
        self._command = list(command)
        self._proc: subprocess.Popen | None = None

    def _ensure_started(self) -> subprocess.Popen:
        if self._proc is None or self._proc.poll() is not None:
            self._proc = subprocess.Popen(
                self._command,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                bufsize=1,
            )
        return self._proc

    def _annotate(self, text: str):
        proc = self._ensure_started()
        assert proc.stdin is not None and proc.stdout is not None
        proc.stdin.write(json.dumps({"text": text}) + "\n")
        proc.stdin.flush()
        line = proc.stdout.readline()
        if not line:
            raise TaggerProtocolError("tagger process closed its stdout")
        return _parse_response(json.loads(line), text)

    def tag(self, text: str) -> list[tuple[str, str]]:
        return self._annotate(text)[0]

    def entities(self, text: str) -> list[EntitySpan]:
        return self._annotate(text)[1]

    def close(self) -> None:
        if self._proc is not None and self._proc.poll() is None:
            self._proc.stdin.close()  # type: ignore[union-attr]
            self._proc.wait(timeout=5)
        self._proc = None


class HttpTagger:
    """POSTs each request to an HTTP endpoint speaking the same protocol."""

    def __init__(self, url: str, timeout: float = 10.0):
        self.url = url
        self.timeout = timeout
        self._session = requests.Session()

    def _annotate(self, text: str):
        response = self._session.post(
            self.url, json={"text": text}, timeout=self.timeout
        )
        response.raise_for_status()
        return _parse_response(response.json(), text)

    def tag(self, text: str) -> list[tuple[str, str]]:
        return self._annotate(text)[0]

    def entities(self, text: str) -> list[EntitySpan]:
        return self._annotate(text)[1]
