"""Access to data files bundled with the package."""

from __future__ import annotations

from importlib.resources import files


def read_data(name: str) -> str:
    """Read a bundled data file (path relative to the data directory)."""
    node = files("russenorsk") / "data"
    for part in name.split("/"):
        node = node / part
    return node.read_text(encoding="utf-8")
