from __future__ import annotations

from ..exceptions import InvalidOrderError


def require_order(n: int, minimum: int = 0) -> int:
    if not isinstance(n, int) or n < minimum:
        raise InvalidOrderError(f"order must be an integer >= {minimum}, got {n!r}.")
    return n
