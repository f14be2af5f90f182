"""Exhaustive generation of rooted trees up to isomorphism (as canonical keys)."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence


def _multisets(items: Sequence[tuple[str, int]], budget: int, exact: bool) -> Iterator[list[str]]:
    """Non-empty multisets of ``items`` whose weights sum to ``budget``
    (``exact``) or to at most ``budget``."""

    def go(start: int, left: int, acc: list[str]) -> Iterator[list[str]]:
        if acc and (not exact or left == 0):
            yield list(acc)
        for i in range(start, len(items)):
            key, w = items[i]
            if w <= left:
                acc.append(key)
                yield from go(i, left - w, acc)
                acc.pop()

    yield from go(0, budget, [])


def _join(children: list[str]) -> str:
    return "(" + "".join(sorted(children)) + ")"


@lru_cache(maxsize=None)
def rooted_tree_keys(n: int) -> tuple[str, ...]:
    """All rooted trees with exactly ``n`` nodes."""
    if n < 1:
        return ()
    if n == 1:
        return ("()",)
    items = [(k, size) for size in range(1, n) for k in rooted_tree_keys(size)]
    return tuple(sorted({_join(ms) for ms in _multisets(items, n - 1, exact=True)}))


def si_tree_keys(n: int) -> tuple[str, ...]:
    """Single-atom rooted trees with exactly ``n`` nodes (``n = 1`` is trivial)."""
    if n == 1:
        return ("()",)
    return tuple("(" + k + ")" for k in rooted_tree_keys(n - 1))


def si_tree_keys_upto(max_nodes: int) -> list[str]:
    return [k for n in range(1, max_nodes + 1) for k in si_tree_keys(n)]


@lru_cache(maxsize=None)
def _bounded(max_height: int, max_leaves: int) -> tuple[tuple[str, int], ...]:
    """Rooted trees with height <= h and at most w leaves, with leaf counts."""
    if max_leaves < 1:
        return ()
    out = {"()": 1}
    if max_height > 0:
        items = list(_bounded(max_height - 1, max_leaves))
        weight = dict(items)
        for ms in _multisets(items, max_leaves, exact=False):
            leaves = sum(weight[k] for k in ms)
            out[_join(ms)] = leaves
    return tuple(sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0])))


def si_tree_keys_bounded(max_height: int, max_leaves: int) -> list[str]:
    """Single-atom trees with height <= ``max_height`` and at most
    ``max_leaves`` maximal elements, the trivial tree included."""
    out = ["()"]
    if max_height >= 1:
        out.extend("(" + k + ")" for k, _ in _bounded(max_height - 1, max_leaves))
    return out
