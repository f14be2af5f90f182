"""Covers of varieties generated by a finite s.i. cBCK-algebra.

For a subalgebra ``B`` of ``A`` and a non-zero ``a`` in ``B``, add a fresh
leaf ``c`` directly above ``a``.  Among the subalgebras of the extension that
contain ``c`` and do not embed in ``A`` there is a least one; joining the
variety of ``A`` with the variety it generates gives a cover, and every
cover arises this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Optional

from .core import CbckAlgebra, build_algebra, height_of, width_of
from .errors import AnchorError, MinimalityError, PreconditionError, PropertyViolation
from .iso import algebra_from_key, sort_keys
from .subalgebras import (
    Subuniverse,
    downset_subalgebras,
    embeds,
    enumerate_subuniverses,
    s_delta_of_downsets,
    subalgebra_keys,
)
from .varieties import Variety, cover_oracle, join, variety_of

Mode = Literal["full", "reduced"]
Ties = Literal["raise", "all"]


@dataclass(frozen=True)
class LeafExtension:
    base: CbckAlgebra
    anchor: int
    extended: CbckAlgebra
    new_node: int


@dataclass(frozen=True)
class CoverCandidate:
    algebra: CbckAlgebra
    origin: LeafExtension
    carrier: frozenset[int]

    @property
    def key(self) -> str:
        return self.algebra.key


def add_leaf(B: CbckAlgebra, a: int) -> LeafExtension:
    if len(B) == 1:
        raise AnchorError("cannot extend the trivial algebra")
    if a == 0:
        raise AnchorError("the anchor must be non-zero")
    if not 0 < a < len(B):
        raise AnchorError(f"anchor {a} is not a node of the algebra")
    ext = build_algebra(B.tree.with_leaf(a))
    return LeafExtension(B, a, ext, len(B))


def subalgebras_containing_c(ext: LeafExtension) -> list[Subuniverse]:
    return [Subuniverse(S, ext.extended) for S in enumerate_subuniverses(ext.extended, (ext.new_node,))]


def minimal_new(ext: LeafExtension, A: CbckAlgebra | Iterable[str]) -> list[Subuniverse]:
    """Inclusion-minimal subalgebras of the extension that contain the new
    leaf and do not embed in ``A``.

    ``A`` may also be given directly as the set of keys that count as
    already present (used for multi-generator varieties).
    """
    present = subalgebra_keys(A) if isinstance(A, CbckAlgebra) else frozenset(A)
    fresh = [S for S in subalgebras_containing_c(ext) if S.key not in present]
    fresh.sort(key=len)
    minimal: list[Subuniverse] = []
    for S in fresh:
        if not any(M.carrier <= S.carrier for M in minimal):
            minimal.append(S)
    return minimal


def smallest_new(ext: LeafExtension, A: CbckAlgebra | Iterable[str]) -> Optional[CoverCandidate]:
    """Least subalgebra of the extension, up to isomorphism, containing the
    new leaf and not embedding in ``A``.

    The answer must embed in every other such subalgebra; when the minimal
    ones include two that do not embed in each other ``MinimalityError`` is
    raised.
    """
    minimal = minimal_new(ext, A)
    if not minimal:
        return None
    least = minimal[0]
    for S in minimal[1:]:
        if not embeds(least.key, S.key):
            raise MinimalityError(
                f"extension {ext.extended.tree.to_text()} at anchor {ext.anchor}: "
                f"{sorted(least.carrier)} and {sorted(S.carrier)} are minimal "
                "and neither embeds in the other"
            )
    return CoverCandidate(least.algebra, ext, least.carrier)


def minimal_new_classes(ext: LeafExtension, A: CbckAlgebra | Iterable[str]) -> list[CoverCandidate]:
    """One candidate per isomorphism class that is minimal, under
    embeddability, among the new subalgebras containing the leaf."""
    minimal = minimal_new(ext, A)
    by_key: dict[str, Subuniverse] = {}
    for S in minimal:
        by_key.setdefault(S.key, S)
    keep = [
        k for k in by_key if not any(o != k and embeds(o, k) for o in by_key)
    ]
    return [CoverCandidate(by_key[k].algebra, ext, by_key[k].carrier) for k in sort_keys(keep)]


def candidates_from(
    B: CbckAlgebra, A: CbckAlgebra | Iterable[str], ties: Ties = "raise"
) -> list[CoverCandidate]:
    """``C_a`` for every non-zero anchor of ``B``.

    With ``ties="all"`` an anchor whose new subalgebras have several
    minimal isomorphism classes contributes all of them instead of raising.
    """
    present = subalgebra_keys(A) if isinstance(A, CbckAlgebra) else frozenset(A)
    out = []
    for a in range(1, len(B)):
        ext = add_leaf(B, a)
        if ties == "all":
            out.extend(minimal_new_classes(ext, present))
            continue
        cand = smallest_new(ext, present)
        if cand is not None:
            out.append(cand)
    return out


def base_algebras(A: CbckAlgebra, mode: Mode = "reduced") -> list[CbckAlgebra]:
    """Subalgebras ``B`` to extend, one per isomorphism class.

    ``full`` takes every subalgebra; ``reduced`` takes ``A`` and the divisor
    subalgebras of its downsets.
    """
    if mode == "full":
        keys = subalgebra_keys(A)
    elif mode == "reduced":
        keys = {A.key} | {S.key for S in s_delta_of_downsets(A)}
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return [algebra_from_key(k) for k in sort_keys(keys) if len(k) > 2]


def cov_set(A: CbckAlgebra, mode: Mode = "reduced", ties: Ties = "raise") -> list[CoverCandidate]:
    if len(A) == 1:
        raise PreconditionError("covers are built for non-trivial algebras")
    present = subalgebra_keys(A)
    out: dict[str, CoverCandidate] = {}
    for B in base_algebras(A, mode):
        for cand in candidates_from(B, present, ties):
            out.setdefault(cand.key, cand)
    return [out[k] for k in sort_keys(out)]


def downset_only_cov_keys(A: CbckAlgebra, ties: Ties = "raise") -> frozenset[str]:
    """Candidate keys reachable from downset bases alone."""
    present = subalgebra_keys(A)
    keys = {D.key for D in downset_subalgebras(A) if len(D) > 1}
    return frozenset(
        c.key for k in keys for c in candidates_from(algebra_from_key(k), present, ties)
    )


def covers_of_si(A: CbckAlgebra, mode: Mode = "reduced", ties: Ties = "raise") -> list[Variety]:
    """All covers of the variety generated by ``A``, one per variety."""
    V = variety_of([A])
    out: dict[frozenset[str], Variety] = {}
    for cand in cov_set(A, mode, ties):
        W = join(V, variety_of([cand.algebra]))
        out.setdefault(W.si_closure, W)
    return sorted(out.values(), key=lambda W: W.sort_key())


def covers_of_variety(
    V: Variety,
    method: Literal["recipe", "extension"] = "recipe",
    ties: Ties = "raise",
    check: bool = True,
) -> list[Variety]:
    """Covers of a finitely generated variety.

    ``recipe`` joins ``V`` with every cover of each generator's variety.
    ``extension`` runs the leaf-extension construction against all of
    ``Si(V)`` rather than against one generator; it also finds covers
    whose new algebra has proper subalgebras spread over several
    generators.  With ``check`` each result is confirmed by the oracle.
    """
    found: dict[frozenset[str], Variety] = {}
    if V.is_trivial():
        # nothing to extend; the only cover is generated by S_1
        S1 = variety_of(["(())"])
        found[S1.si_closure] = S1
    elif method == "recipe":
        for g in V.generators:
            for K in covers_of_si(algebra_from_key(g), ties=ties):
                W = join(V, K)
                if W != V:
                    found.setdefault(W.si_closure, W)
    elif method == "extension":
        for key in V.si_closure:
            if len(key) <= 2:
                continue
            for cand in candidates_from(algebra_from_key(key), V.si_closure, ties):
                W = join(V, variety_of([cand.algebra]))
                found.setdefault(W.si_closure, W)
    else:
        raise ValueError(f"unknown method {method!r}")
    result = sorted(found.values(), key=lambda W: W.sort_key())
    if check:
        for W in result:
            if not cover_oracle(V, W):
                raise PropertyViolation(f"{W.describe()} is not a cover of {V.describe()}")
    return result


def bounds_hold(A: CbckAlgebra, C: CbckAlgebra) -> bool:
    """Height at most one more, and at most one more maximal element."""
    return height_of(C) <= height_of(A) + 1 and width_of(C) <= width_of(A) + 1
