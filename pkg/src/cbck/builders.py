"""Named families: chains ``S_n`` and glued chains ``M_P(S_q)``."""

from __future__ import annotations

from typing import Sequence

from .core import CbckAlgebra, RootedTree, build_algebra
from .errors import ArityError, AtomError, ParseError, ValidationError


def chain(n: int) -> CbckAlgebra:
    """``S_n``: the chain ``0 < 1 < ... < n`` with truncated subtraction."""
    if n < 0:
        raise ValidationError("chain length must be non-negative")
    return build_algebra(RootedTree(tuple([-1] + list(range(n)))))


def glued(P: Sequence[int], q: int) -> CbckAlgebra:
    """``M_P(S_q)``: chains of lengths ``P`` glued on top of ``S_q``.

    ``P`` is sorted descending first, so equal multisets give the same
    node numbering.
    """
    if len(P) < 2:
        raise ArityError(f"need at least two glued chains, got {len(P)}")
    if any(p < 1 for p in P):
        raise ValidationError("glued chain lengths must be positive")
    if q < 1:
        raise AtomError("q = 0 would put several atoms on the root")
    parents = [-1] + list(range(q))
    for p in sorted(P, reverse=True):
        below = q
        for _ in range(p):
            parents.append(below)
            below = len(parents) - 1
    return build_algebra(RootedTree(tuple(parents)))


def glued_uniform(k: int, q: int, p: int = 1) -> CbckAlgebra:
    """``M_P(S_q)`` with ``P = k x p``; ``p = 1`` gives ``M_k(S_q)``."""
    return glued([p] * k, q)


def parse_shorthand(text: str) -> CbckAlgebra:
    """``S:n`` or ``M:p1,...,pk:q``."""
    parts = text.strip().split(":")
    try:
        if parts[0] == "S" and len(parts) == 2:
            n = int(parts[1])
            return chain(n)
        if parts[0] == "M" and len(parts) == 3:
            P, q = [int(p) for p in parts[1].split(",")], int(parts[2])
            return glued(P, q)
    except ValidationError:
        raise
    except ValueError:
        pass
    raise ParseError(f"bad shorthand {text!r}; expected S:n or M:p1,...,pk:q")
