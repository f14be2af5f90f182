"""Finitely generated varieties, identified with their s.i. members.

A finitely generated variety is determined by the set of its subdirectly
irreducible members, which up to isomorphism are exactly the subalgebras
of its s.i. generators.  Here a variety *is* that set of canonical keys,
and its generators are the maximal keys under embeddability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .core import CbckAlgebra
from .errors import PreconditionError, SizeError
from .iso import algebra_from_key, key_name, sort_keys
from .subalgebras import embeds, subalgebra_keys

ORACLE_CAP = 20

AlgebraLike = Union[CbckAlgebra, str]


@dataclass(frozen=True)
class Variety:
    generators: tuple[str, ...]
    si_closure: frozenset[str]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Variety):
            return NotImplemented
        return self.si_closure == other.si_closure

    def __hash__(self) -> int:
        return hash(self.si_closure)

    def is_trivial(self) -> bool:
        return self.si_closure == frozenset({"()"})

    def sort_key(self) -> tuple:
        return (len(self.si_closure), [(len(g), g) for g in self.generators])

    def describe(self) -> str:
        return " v ".join(f"<{key_name(g)}>" for g in self.generators)


def _key(a: AlgebraLike) -> str:
    return a.key if isinstance(a, CbckAlgebra) else a


def _antichain(keys: Iterable[str]) -> tuple[str, ...]:
    """Keys not embeddable in another key of the collection."""
    keys = sort_keys(set(keys))
    top = [k for k in keys if not any(k != o and embeds(k, o) for o in keys)]
    return tuple(top)


def variety_of(algebras: Iterable[AlgebraLike]) -> Variety:
    keys = {_key(a) for a in algebras} or {"()"}
    gens = _antichain(keys)
    closure: set[str] = set()
    for g in gens:
        closure |= subalgebra_keys(algebra_from_key(g))
    return Variety(gens, frozenset(closure))


def includes(V: Variety, W: Variety) -> bool:
    """``W`` is a subvariety of ``V``."""
    return W.si_closure <= V.si_closure


def equals(V: Variety, W: Variety) -> bool:
    return V.si_closure == W.si_closure


def join(V: Variety, W: Variety) -> Variety:
    return Variety(_antichain(V.generators + W.generators), V.si_closure | W.si_closure)


def n_generated(V: Variety) -> int:
    return len(V.generators)


def cover_oracle(V: Variety, W: Variety, cap: int = ORACLE_CAP) -> bool:
    """Does ``W`` cover ``V``?

    Enumerates every subset ``X`` of ``Si(W) - Si(V)``; when some non-empty
    proper ``X`` keeps ``Si(V) | X`` closed under subalgebras, that family
    lies strictly between and ``W`` is not a cover.
    """
    if not includes(W, V) or equals(V, W):
        raise PreconditionError("the oracle needs V strictly below W")
    diff = sort_keys(W.si_closure - V.si_closure)
    if len(diff) > cap:
        raise SizeError(f"difference has {len(diff)} members; enumeration is capped at {cap}")
    index = {k: i for i, k in enumerate(diff)}
    below = []
    for k in diff:
        mask = 0
        for s in subalgebra_keys(algebra_from_key(k)):
            if s in index:
                mask |= 1 << index[s]
        below.append(mask)
    full = (1 << len(diff)) - 1
    for X in range(1, full):
        closed = True
        bits = X
        while bits:
            low = bits & -bits
            i = low.bit_length() - 1
            if below[i] & ~X:
                closed = False
                break
            bits ^= low
        if closed:
            return False
    return True
