"""Rooted-tree canonical forms (AHU parenthesis strings).

The operation of an algebra is a function of its tree, so two algebras are
isomorphic exactly when their trees are; the canonical key is used
everywhere as the identifier of an isomorphism class.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence, TypeVar

from .core import CbckAlgebra, RootedTree, build_algebra
from .errors import ParseError

T = TypeVar("T")


def canonical_form(tree: RootedTree) -> str:
    enc: list[str] = [""] * len(tree)
    for v in reversed(tree.preorder):
        enc[v] = "(" + "".join(sorted(enc[c] for c in tree.children[v])) + ")"
    return enc[0]


def is_isomorphic(a: RootedTree, b: RootedTree) -> bool:
    return len(a) == len(b) and canonical_form(a) == canonical_form(b)


def dedup(items: Iterable[T]) -> list[T]:
    """Keep the first item of every isomorphism class, in input order.

    Accepts trees or algebras.
    """
    seen: set[str] = set()
    out = []
    for item in items:
        tree = item.tree if isinstance(item, CbckAlgebra) else item
        key = canonical_form(tree)
        if key not in seen:
            seen.add(key)
            out.append(item)
    return out


def tree_from_key(key: str) -> RootedTree:
    """Rebuild the tree a key encodes; nodes are numbered in preorder."""
    if not key or key[0] != "(":
        raise ParseError(f"not a canonical key: {key!r}")
    parents: list[int] = []
    stack: list[int] = []
    for i, ch in enumerate(key):
        if ch == "(":
            parents.append(stack[-1] if stack else -1)
            stack.append(len(parents) - 1)
        elif ch == ")":
            if not stack:
                raise ParseError(f"unbalanced key at position {i}")
            stack.pop()
            if not stack and i != len(key) - 1:
                raise ParseError("key encodes more than one root")
        else:
            raise ParseError(f"unexpected character {ch!r} in key")
    if stack:
        raise ParseError("unbalanced key")
    return RootedTree(tuple(parents))


@lru_cache(maxsize=None)
def algebra_from_key(key: str) -> CbckAlgebra:
    return build_algebra(tree_from_key(key))


def key_size(key: str) -> int:
    return len(key) // 2


def sort_keys(keys: Iterable[str]) -> list[str]:
    """Deterministic output order: by size, then lexicographically."""
    return sorted(keys, key=lambda k: (len(k), k))


def key_name(key: str) -> str:
    """Human name for chains ``S_n`` and glued chains ``M_P(S_q)``."""
    tree = tree_from_key(key)
    kids = tree.children
    n = len(tree)
    if n == 1:
        return "S_0"
    # walk the stem
    v, q = 0, 0
    while len(kids[v]) == 1:
        v = kids[v][0]
        q += 1
    if not kids[v]:
        return f"S_{q}"
    branches = []
    for c in kids[v]:
        length, u = 1, c
        while len(kids[u]) == 1:
            u = kids[u][0]
            length += 1
        if kids[u]:
            return key
        branches.append(length)
    branches.sort(reverse=True)
    if all(p == 1 for p in branches):
        return f"M_{len(branches)}(S_{q})"
    return "M_[" + ",".join(map(str, branches)) + f"](S_{q})"


def rooted_isomorphism_bruteforce(a: RootedTree, b: RootedTree) -> bool:
    """Search for a root-preserving bijection respecting parenthood.

    Independent of the canonical key; used as an oracle in tests.
    """
    if len(a) != len(b):
        return False
    n = len(a)
    da, db = a.depth, b.depth
    order = sorted(range(n), key=lambda v: da[v])
    image = [-1] * n
    used = [False] * n

    def go(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or db[w] != da[v]:
                continue
            if v and b.parent[w] != image[a.parent[v]]:
                continue
            if len(a.children[v]) != len(b.children[w]):
                continue
            image[v], used[w] = w, True
            if go(i + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return go(0)


def algebra_isomorphism_bruteforce(A: CbckAlgebra, B: CbckAlgebra) -> bool:
    """Search for a bijection preserving the operation table (and 0)."""
    if len(A) != len(B):
        return False
    n = len(A)
    image = [-1] * n
    used = [False] * n
    image[0], used[0] = 0, True

    def consistent(v: int) -> bool:
        for u in range(n):
            if image[u] < 0:
                continue
            for x, y in ((u, v), (v, u)):
                r = A.table[x][y]
                if image[r] >= 0 and image[r] != B.table[image[x]][image[y]]:
                    return False
        return True

    order = sorted(range(1, n), key=lambda v: A.depth[v])

    def go(i: int) -> bool:
        if i == len(order):
            return all(
                image[A.table[x][y]] == B.table[image[x]][image[y]]
                for x in range(n)
                for y in range(n)
            )
        v = order[i]
        for w in range(1, n):
            if used[w]:
                continue
            image[v], used[w] = w, True
            if consistent(v) and go(i + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return go(0)


def relabel(tree: RootedTree, perm: Sequence[int]) -> RootedTree:
    """Apply a node permutation fixing 0: new node ``perm[v]`` is old ``v``."""
    n = len(tree)
    parents = [-1] * n
    for v in range(1, n):
        parents[perm[v]] = perm[tree.parent[v]]
    return RootedTree(tuple(parents))
