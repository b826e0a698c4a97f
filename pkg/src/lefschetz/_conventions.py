"""Frozen conventions shipped alongside the engine.

Two choices are settled once by a search over a small finite space and then frozen
here: how the block-pass braids combine their pass word with an internal chain word,
and the global sign (plus separating local term) of the Meyer signature formula.
"""

import tomllib
from importlib import resources
from pathlib import Path
from typing import Literal

import tomlkit
from pydantic import BaseModel, ValidationError

from lefschetz.errors import ParameterError

ChainKind = Literal["chain", "reversed"]
BlockChoice = Literal["first", "last"]
Placement = Literal["left", "right"]


class ConventionsError(ParameterError):
    """Raised when the conventions file is missing or malformed."""


class BlockPassConvention(BaseModel):
    t_internal: ChainKind
    t_inverse: bool
    t_block: BlockChoice
    t_placement: Placement
    u_internal: ChainKind
    u_inverse: bool
    u_block: BlockChoice
    u_placement: Placement
    derived_on: list[tuple[int, int]] = []


class MeyerCalibration(BaseModel):
    global_sign: Literal[-1, 1]
    separating_local: Literal[-1, 0, 1]
    transcript: list[str] = []


class Conventions(BaseModel):
    block_pass: BlockPassConvention
    meyer: MeyerCalibration


def default_conventions_path() -> Path:
    return Path(str(resources.files("lefschetz").joinpath("conventions.toml")))


def read_conventions(path: Path | None = None) -> Conventions:
    if path is None:
        path = default_conventions_path()

    try:
        with path.open("rb") as f:
            try:
                data = tomllib.load(f)
            except tomllib.TOMLDecodeError as err:
                msg = f"Error decoding conventions file '{path}': {err}"
                raise ConventionsError(msg) from None
    except FileNotFoundError:
        msg = f"Conventions file '{path}' not found."
        raise ConventionsError(msg) from None

    try:
        return Conventions.model_validate(data)
    except ValidationError as err:
        msg = f"Invalid conventions file '{path}': {err}"
        raise ConventionsError(msg) from None


def write_conventions(conventions: Conventions, path: Path) -> None:
    """Write conventions, preserving comments when the file already exists."""
    if path.exists():
        document = tomlkit.parse(path.read_text())
    else:
        document = tomlkit.document()

    dump = conventions.model_dump(mode="json")
    for section, values in dump.items():
        if section not in document:
            document[section] = tomlkit.table()
        for key, value in values.items():
            document[section][key] = value  # pyright: ignore[reportIndexIssue]

    path.write_text(tomlkit.dumps(document))
