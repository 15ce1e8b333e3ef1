"""Flat ``key = value`` documents: one pair per line, order preserved."""
from __future__ import annotations

import re

_KEY = re.compile(r"^[A-Za-z0-9_.\-]+$")


def _format(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(int(value))
    text = str(value)
    if "\n" in text or "\r" in text:
        raise ValueError(f"value may not contain newlines: {text!r}")
    return text


def dumps(pairs) -> str:
    lines = []
    for key, value in pairs:
        if not _KEY.match(key):
            raise ValueError(f"bad key {key!r}")
        lines.append(f"{key} = {_format(value)}")
    return "".join(line + "\n" for line in lines)


def loads(text: str) -> list:
    """Parse a document into ``(key, value)`` string pairs."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        key, sep, value = line.partition(" = ")
        if not sep or not _KEY.match(key):
            raise ValueError(f"line {lineno}: not a 'key = value' line: {line!r}")
        pairs.append((key, value))
    return pairs
