"""Subalgebras of finite subdirectly irreducible cBCK-algebras.

Every order ideal (downset) of the tree is a subuniverse.  The remaining
subuniverses come from divisor subalgebras: for ``k`` a proper non-trivial
divisor of the height, the nodes whose height is divisible by ``k``
together with the maximal nodes.  Up to isomorphism, every subalgebra is a
downset or a divisor subalgebra of a downset.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Optional

from .core import (
    CbckAlgebra,
    branching_elements,
    height_of,
    induced_algebra,
    induced_tree,
    is_chain,
    maximal_elements,
)
from .errors import DivisorError, LimitError, PreconditionError, PropertyViolation
from .iso import canonical_form

DEFAULT_SIZE_CAP = 16

DOWNSET = "downset"
OTHER = "other"


def divisor_kind(k: int) -> str:
    return f"divisor({k})"


def size_cap() -> int:
    return int(os.environ.get("CBCK_SIZE_CAP", DEFAULT_SIZE_CAP))


@dataclass(frozen=True, eq=False)
class Subuniverse:
    carrier: frozenset[int]
    parent: CbckAlgebra = field(repr=False)
    kind: Optional[str] = None
    # True when the kind was only matched up to isomorphism
    via_iso: bool = False

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subuniverse):
            return NotImplemented
        return self.carrier == other.carrier and self.parent == other.parent

    def __hash__(self) -> int:
        return hash(self.carrier)

    def __len__(self) -> int:
        return len(self.carrier)

    @cached_property
    def _induced(self) -> tuple[CbckAlgebra, tuple[int, ...]]:
        return induced_algebra(self.parent, self.carrier)

    @property
    def algebra(self) -> CbckAlgebra:
        return self._induced[0]

    @property
    def embed(self) -> tuple[int, ...]:
        return self._induced[1]

    @cached_property
    def key(self) -> str:
        return canonical_form(induced_tree(self.parent, self.carrier)[0])

    def sorted_carrier(self) -> list[int]:
        return sorted(self.carrier)


def is_subuniverse(A: CbckAlgebra, S: Iterable[int]) -> bool:
    S = set(S)
    if 0 not in S:
        return False
    t = A.table
    return all(t[x][y] in S for x in S for y in S)


def _close_from(A: CbckAlgebra, closed: Iterable[int], new: Iterable[int]) -> frozenset[int]:
    """Closure of ``closed | new`` where ``closed`` is already a subuniverse."""
    t = A.table
    members = set(closed)
    frontier = []
    for x in new:
        if x not in members:
            members.add(x)
            frontier.append(x)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            for r in (t[x][y], t[y][x]):
                if r not in members:
                    members.add(r)
                    frontier.append(r)
    return frozenset(members)


def closure(A: CbckAlgebra, X: Iterable[int]) -> frozenset[int]:
    return _close_from(A, (0,), X)


def generated_subalgebra(A: CbckAlgebra, X: Iterable[int]) -> Subuniverse:
    return Subuniverse(closure(A, X), A)


def enumerate_subuniverses(A: CbckAlgebra, containing: Iterable[int] = ()) -> list[frozenset[int]]:
    """All subuniverses containing ``containing``, by closure search.

    Every subuniverse is reached by adding its elements one at a time to the
    least subuniverse containing ``containing``, so the search is exhaustive.
    """
    start = closure(A, containing)
    seen = {start}
    stack = [start]
    while stack:
        S = stack.pop()
        for x in A.nodes:
            if x in S:
                continue
            T = _close_from(A, S, (x,))
            if T not in seen:
                seen.add(T)
                stack.append(T)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


@lru_cache(maxsize=None)
def _subalgebra_keys_cached(key: str) -> frozenset[str]:
    from .iso import algebra_from_key

    A = algebra_from_key(key)
    return frozenset(canonical_form(induced_tree(A, S)[0]) for S in enumerate_subuniverses(A))


def subalgebra_keys(A: CbckAlgebra) -> frozenset[str]:
    """Canonical keys of all subalgebras of ``A`` (``A`` itself included)."""
    return _subalgebra_keys_cached(A.key)


def embeds(small_key: str, big_key: str) -> bool:
    """Is the algebra ``small_key`` isomorphic to a subalgebra of ``big_key``?"""
    if len(small_key) > len(big_key):
        return False
    if small_key == big_key:
        return True
    from .iso import algebra_from_key

    return small_key in subalgebra_keys(algebra_from_key(big_key))


def enumerate_subalgebras_bruteforce(A: CbckAlgebra, cap: Optional[int] = None) -> list[Subuniverse]:
    """Test every subset containing 0 for closure, smallest subsets first."""
    cap = size_cap() if cap is None else cap
    if len(A) > cap:
        raise LimitError(f"algebra has {len(A)} elements; brute force is capped at {cap}")
    rest = list(range(1, len(A)))
    found = []
    for r in range(len(rest) + 1):
        for combo in combinations(rest, r):
            S = (0,) + combo
            if is_subuniverse(A, S):
                found.append(frozenset(S))
    return classify_all(A, found)


def _ideals_below(A: CbckAlgebra, v: int) -> list[frozenset[int]]:
    """Downsets of the subtree at ``v`` that contain ``v``."""
    options = [frozenset((v,))]
    for c in A.tree.children[v]:
        sub = _ideals_below(A, c)
        options = [o | extra for o in options for extra in [frozenset()] + sub]
    return options


def downset_carriers(A: CbckAlgebra) -> list[frozenset[int]]:
    return sorted(_ideals_below(A, 0), key=lambda s: (len(s), sorted(s)))


def downset_subalgebras(A: CbckAlgebra) -> list[Subuniverse]:
    return [Subuniverse(S, A, DOWNSET) for S in downset_carriers(A)]


def is_downset(A: CbckAlgebra, S: Iterable[int]) -> bool:
    S = set(S)
    return 0 in S and all(A.tree.parent[v] in S for v in S if v)


def delta_star(n: int) -> list[int]:
    """Divisors of ``n`` other than 1 and ``n``."""
    return [k for k in range(2, n) if n % k == 0]


def divisor_carrier(A: CbckAlgebra, k: int) -> frozenset[int]:
    """``A_k`` together with the maximal elements."""
    return frozenset(v for v in A.nodes if A.depth[v] % k == 0) | maximal_elements(A)


def divisor_condition(A: CbckAlgebra, k: int) -> bool:
    """Branching and maximal nodes all have height divisible by ``k``."""
    return all(A.depth[v] % k == 0 for v in branching_elements(A) | maximal_elements(A))


def divisor_subalgebra(A: CbckAlgebra, k: int) -> Optional[Subuniverse]:
    if k not in delta_star(height_of(A)):
        raise DivisorError(f"{k} is not a proper divisor of the height {height_of(A)}")
    if not divisor_condition(A, k):
        return None
    return Subuniverse(divisor_carrier(A, k), A, divisor_kind(k))


def s_delta(A: CbckAlgebra) -> list[Subuniverse]:
    out = []
    for k in delta_star(height_of(A)):
        S = divisor_subalgebra(A, k)
        if S is not None:
            out.append(S)
    return out


def s_delta_of_downsets(A: CbckAlgebra) -> list[Subuniverse]:
    """Divisor subalgebras of every downset, mapped back into ``A``."""
    out: dict[frozenset[int], Subuniverse] = {}
    for D in downset_subalgebras(A):
        for S in s_delta(D.algebra):
            carrier = frozenset(D.embed[v] for v in S.carrier)
            out.setdefault(carrier, Subuniverse(carrier, A, S.kind))
    return sorted(out.values(), key=lambda s: (len(s), s.sorted_carrier()))


@lru_cache(maxsize=4096)
def _classification_index(A: CbckAlgebra) -> tuple[dict[frozenset[int], str], dict[str, str]]:
    literal: dict[frozenset[int], str] = {}
    by_key: dict[str, str] = {}
    for S in downset_subalgebras(A):
        literal[S.carrier] = DOWNSET
        by_key.setdefault(S.key, DOWNSET)
    for S in s_delta_of_downsets(A):
        literal.setdefault(S.carrier, S.kind)
        by_key.setdefault(S.key, S.kind)
    return literal, by_key


def classified_keys(A: CbckAlgebra) -> frozenset[str]:
    """Keys of ``S_d(A)`` together with ``S_delta(S_d(A))``."""
    return frozenset(_classification_index(A)[1])


def classify(A: CbckAlgebra, S: Subuniverse | Iterable[int]) -> tuple[str, bool]:
    """Return ``(kind, via_iso)``.

    ``kind`` is ``downset`` for order ideals and ``divisor(k)`` for divisor
    subalgebras of a downset.  A subuniverse that is neither literally but is
    isomorphic to one of them gets that member's kind with ``via_iso``
    set; ``other`` means no match at all.
    """
    carrier = S.carrier if isinstance(S, Subuniverse) else frozenset(S)
    literal, by_key = _classification_index(A)
    if carrier in literal:
        return literal[carrier], False
    key = canonical_form(induced_tree(A, carrier)[0])
    if key in by_key:
        return by_key[key], True
    return OTHER, False


def classify_all(A: CbckAlgebra, carriers: Iterable[frozenset[int]]) -> list[Subuniverse]:
    out = []
    for c in carriers:
        kind, via_iso = classify(A, c)
        out.append(Subuniverse(frozenset(c), A, kind, via_iso))
    return out


def all_subalgebras(A: CbckAlgebra) -> list[Subuniverse]:
    """Every subuniverse of ``A``, classified."""
    return classify_all(A, enumerate_subuniverses(A))


def gcd_downset_check(A: CbckAlgebra, B: Subuniverse | Iterable[int]) -> Optional[tuple[int, int]]:
    """Find non-zero ``a <= b`` in ``B`` with coprime heights.

    When a pair exists ``B`` must be an order ideal; a non-ideal raises
    ``PropertyViolation``.
    """
    carrier = B.carrier if isinstance(B, Subuniverse) else frozenset(B)
    nonzero = sorted((v for v in carrier if v), key=lambda v: (A.depth[v], v))
    for i, a in enumerate(nonzero):
        for b in nonzero[i:]:
            if gcd(A.depth[a], A.depth[b]) == 1:
                if not is_downset(A, carrier):
                    raise PropertyViolation(
                        f"{sorted(carrier)} holds coprime heights at {a}, {b} but is not a downset"
                    )
                return a, b
    return None


def smallest_generating_set_is_maximals(A: CbckAlgebra) -> bool:
    if len(A) == 1 or is_chain(A):
        raise PreconditionError("defined for non-trivial algebras that are not chains")
    return len(closure(A, maximal_elements(A))) == len(A)
