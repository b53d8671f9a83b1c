"""Sentence embedders behind a single ``embed(texts)`` interface.

Two implementations: a deterministic hashed token-bag embedder for tests and
offline scoring, and a client for a remote embedding endpoint. Reward scoring
only needs cosine geometry, so any implementation with ``sim(x, x) = 1`` and
a uniform output dimension plugs in.
"""

from __future__ import annotations

import hashlib
import math
import re
import time

import requests

from apexsearch.errors import EmbeddingBackendError, InvalidInputError

_TOKEN = re.compile(r"[a-z0-9]+")


def _check_texts(texts) -> None:
    if not texts:
        raise InvalidInputError("texts must be non-empty")
    for i, t in enumerate(texts):
        if not isinstance(t, str) or not t.strip():
            raise InvalidInputError(f"texts[{i}] is empty")


class HashEmbedder:
    """Deterministic embedder: lowercase alphanumeric token bag hashed into a
    fixed-dimension vector, L2-normalized.

    Identical strings always map to identical unit vectors, so cosine
    similarity of a text with itself is exactly 1 — which is what makes this
    suitable as the offline stand-in for a sentence-transformer service.
    """

    def __init__(self, dim: int = 256):
        if dim < 1:
            raise InvalidInputError("dim must be >= 1")
        self.dim = dim

    def _bucket(self, token: str) -> int:
        digest = hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest()
        return int.from_bytes(digest, "big") % self.dim

    def embed(self, texts: list[str]) -> list[list[float]]:
        _check_texts(texts)
        vectors = []
        for text in texts:
            counts = [0.0] * self.dim
            tokens = _TOKEN.findall(text.lower())
            if not tokens:
                # No alphanumeric content: hash the raw text so the vector
                # stays nonzero and sim(x, x) = 1 still holds.
                tokens = [text.strip()]
            for tok in tokens:
                counts[self._bucket(tok)] += 1.0
            norm = math.sqrt(sum(c * c for c in counts))
            vectors.append([c / norm for c in counts])
        return vectors


class RemoteEmbedder:
    """Client for an embedding endpoint.

    Wire format: POST ``{"input": [texts...]}``, response
    ``{"data": [{"embedding": [floats...]}, ...]}`` in input order.
    Retries with exponential backoff; persistent failure raises
    EmbeddingBackendError.
    """

    def __init__(self, url: str, token: str = "", timeout_s: float = 30.0,
                 retries: int = 2, session: requests.Session | None = None):
        if not url:
            raise InvalidInputError("embedding endpoint url is required")
        self.url = url
        self.token = token
        self.timeout_s = timeout_s
        self.retries = retries
        self._session = session or requests.Session()

    def embed(self, texts: list[str]) -> list[list[float]]:
        _check_texts(texts)
        headers = {"Content-Type": "application/json"}
        if self.token:
            headers["Authorization"] = f"Bearer {self.token}"

        last_err = None
        for attempt in range(self.retries + 1):
            try:
                resp = self._session.post(
                    self.url,
                    json={"input": list(texts)},
                    headers=headers,
                    timeout=self.timeout_s,
                )
                resp.raise_for_status()
                payload = resp.json()
                vectors = [row["embedding"] for row in payload["data"]]
                if len(vectors) != len(texts):
                    raise KeyError("embedding count does not match input count")
                return [[float(x) for x in vec] for vec in vectors]
            except (requests.RequestException, KeyError, TypeError, ValueError) as exc:
                last_err = exc
                if attempt < self.retries:
                    time.sleep(0.5 * (2 ** attempt))

        raise EmbeddingBackendError(
            f"embedding request failed after {self.retries + 1} attempts: {last_err}"
        )
