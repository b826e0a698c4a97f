"""Certificates recording that an identity was checked, and by which engine."""

import hashlib
import json
from datetime import UTC, datetime
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from lefschetz._braid.garside import equals, normal_form
from lefschetz._braid.word import BraidWord
from lefschetz._invariants.symplectic import SpElement


def engine_version() -> str:
    try:
        from lefschetz._version import __version__
    except ImportError:
        return "unknown"
    return __version__


def sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


class Certificate(BaseModel):
    claim: str
    strands: int | None
    word_digest: str
    normal_form_digest: str
    target_digest: str
    verified: bool
    timestamp: str
    engine_version: str
    normal_form: dict[str, Any] | None = None

    def dumps(self) -> str:
        """Every key is always present except `normal_form`, written only with --full.

        `strands` is null for certificates about homology actions.
        """
        exclude = {"normal_form"} if self.normal_form is None else set()
        return json.dumps(self.model_dump(mode="json", exclude=exclude), indent=2)

    def write(self, path: Path) -> None:
        path.write_text(self.dumps() + "\n")


def _now() -> str:
    return datetime.now(UTC).isoformat(timespec="seconds")


def braid_certificate(
    claim: str, word: BraidWord, target: BraidWord, *, full: bool = False
) -> Certificate:
    """Compare two braids by their normal forms."""
    nf = normal_form(word)
    return Certificate(
        claim=claim,
        strands=word.strands,
        word_digest=sha256(word.canonical_json()),
        normal_form_digest=nf.digest(),
        target_digest=normal_form(target).digest(),
        verified=equals(word, target),
        timestamp=_now(),
        engine_version=engine_version(),
        normal_form=nf.to_json_dict() if full else None,
    )


def _matrix_json(element: SpElement) -> str:
    rows = [[int(entry) for entry in row] for row in element.matrix]
    return json.dumps(rows, separators=(",", ":"))


def symplectic_certificate(
    claim: str,
    word_json: str,
    image: SpElement,
    target: SpElement,
    *,
    full: bool = False,
) -> Certificate:
    """Compare the homology actions of two factorizations."""
    return Certificate(
        claim=claim,
        strands=None,
        word_digest=sha256(word_json),
        normal_form_digest=sha256(_matrix_json(image)),
        target_digest=sha256(_matrix_json(target)),
        verified=image == target,
        timestamp=_now(),
        engine_version=engine_version(),
        normal_form={"matrix": json.loads(_matrix_json(image))} if full else None,
    )
