"""Canonical JSON rendering.

The archive format and every HTTP body use one canonical form so that
serialize -> parse -> serialize is byte-identical across platforms:

* object keys sorted, no insignificant whitespace, ASCII-escaped strings;
* every float rendered as fixed-point with 6 decimals (``-0.0`` normalised
  to ``0.0``), ints left as ints;
* a single trailing newline is NOT appended (callers decide framing).
"""

from __future__ import annotations

import json
import math
from typing import Any


def _render(value: Any, out: list[str]) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite float not representable: {value!r}")
        text = format(value, ".6f")
        if text == "-0.000000":
            text = "0.000000"  # tiny negatives and -0.0 collapse to zero
        out.append(text)
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=True))
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(",")
            _render(item, out)
        out.append("]")
    elif isinstance(value, dict):
        out.append("{")
        for i, key in enumerate(sorted(value)):
            if not isinstance(key, str):
                raise TypeError(f"object keys must be str, got {type(key).__name__}")
            if i:
                out.append(",")
            out.append(json.dumps(key, ensure_ascii=True))
            out.append(":")
            _render(value[key], out)
        out.append("}")
    else:
        raise TypeError(f"not canonically serializable: {type(value).__name__}")


def dumps_canonical(value: Any) -> str:
    """Render ``value`` (plain dict/list/scalar tree) in canonical form."""
    out: list[str] = []
    _render(value, out)
    return "".join(out)


def dumps_canonical_bytes(value: Any) -> bytes:
    return dumps_canonical(value).encode("ascii")


def loads(text: str | bytes) -> Any:
    """Parse JSON produced by :func:`dumps_canonical` (plain ``json.loads``)."""
    return json.loads(text)
