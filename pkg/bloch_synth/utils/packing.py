from __future__ import annotations

from typing import Any


def remove_none(data: dict, **kwargs) -> dict:
    return {
        key: value for key, value in dict(data, **kwargs).items() if value is not None
    }


def render_packed(
    data: Any = None,
    code: int | None = None,
    message: str | None = None,
    **extra: Any,
) -> dict:
    return remove_none({"code": code, "message": message, "data": data}, **extra)
