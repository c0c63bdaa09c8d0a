"""Rendering of report objects as JSON or ``key: value`` text.

Rationals are always written as ``"p/q"`` strings, floats with 12 significant
digits.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any


def fmt_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fmt_float(x: float) -> str:
    return f"{x:.12g}"


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return fmt_rational(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return fmt_float(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        if hasattr(obj, "as_dict"):
            return to_jsonable(obj.as_dict())
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return "-".join(str(x) for x in k)
    return str(k)


def dumps_json(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True)


def dumps_text(obj: Any) -> str:
    """Flat ``key: value`` lines; nested keys are joined with dots."""
    lines: list[str] = []
    _flatten(to_jsonable(obj), "", lines)
    return "\n".join(lines)


def _flatten(value: Any, prefix: str, out: list[str]) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(value[k], f"{prefix}.{k}" if prefix else k, out)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(v, f"{prefix}[{i}]", out)
    else:
        if isinstance(value, list):
            rendered = " ".join("null" if v is None else str(v).lower() if isinstance(v, bool) else str(v) for v in value)
        elif isinstance(value, bool):
            rendered = str(value).lower()
        elif value is None:
            rendered = "null"
        else:
            rendered = str(value)
        out.append(f"{prefix}: {rendered}")
