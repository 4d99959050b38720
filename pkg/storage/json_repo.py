import csv
import json
import logging
import os
from typing import Any, Dict, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from storage.repository import ArtifactRepository

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class ArtifactHeader(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="allow")

    schema_version: int = Field(alias="schema")
    kind: str


class ArtifactError(RuntimeError):
    """An export could not be written, read back or validated."""


def canonical_json(payload: Any) -> str:
    """Sorted keys, fixed indentation and a trailing newline: reruns are byte-identical."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


class JsonArtifactRepository(ArtifactRepository):
    """
    Schema-1 JSON documents and CSV tables on the local filesystem.

    Every document carries {"schema": 1, "kind": ...} at the top level;
    load() refuses anything else.
    """

    def save(self, path: str, payload: Dict[str, Any]) -> str:
        try:
            ArtifactHeader.model_validate(payload)
        except ValidationError as e:
            raise ArtifactError(f"refusing to write a document without a schema header: {e}") from e
        if payload.get("schema") != SCHEMA_VERSION:
            raise ArtifactError(f"unsupported schema {payload.get('schema')!r}")
        self._write(path, canonical_json(payload))
        logger.info(f"✓ Wrote {payload['kind']} → {path}")
        return path

    def load(self, path: str, kind: Optional[str] = None) -> Dict[str, Any]:
        try:
            with open(path, "r", encoding="utf-8") as f:
                payload = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ArtifactError(f"cannot read {path}: {e}") from e
        try:
            header = ArtifactHeader.model_validate(payload)
        except ValidationError as e:
            raise ArtifactError(f"{path} has no schema header: {e}") from e
        if header.schema_version != SCHEMA_VERSION:
            raise ArtifactError(f"{path}: schema {header.schema_version}, expected {SCHEMA_VERSION}")
        if kind is not None and header.kind != kind:
            raise ArtifactError(f"{path}: kind {header.kind!r}, expected {kind!r}")
        return payload

    def save_table(self, path: str, headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        try:
            with open(path, "w", encoding="utf-8", newline="") as f:
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(headers)
                writer.writerows(rows)
        except OSError as e:
            raise ArtifactError(f"cannot write {path}: {e}") from e
        logger.info(f"✓ Wrote table ({len(rows)} rows) → {path}")
        return path

    # ================================================================== #
    #  HELPERS                                                             #
    # ================================================================== #

    @staticmethod
    def _write(path: str, text: str) -> None:
        directory = os.path.dirname(os.path.abspath(path))
        if not os.path.isdir(directory):
            raise ArtifactError(f"cannot write {path}: directory {directory} does not exist")
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        except OSError as e:
            raise ArtifactError(f"cannot write {path}: {e}") from e


def round_trips(repo: ArtifactRepository, path: str, payload: Dict[str, Any]) -> bool:
    """The document read back equals the JSON image of what was written."""
    return repo.load(path, payload["kind"]) == json.loads(canonical_json(payload))
