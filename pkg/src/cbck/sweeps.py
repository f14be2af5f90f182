"""Exhaustive checks over all small single-atom trees."""

from __future__ import annotations

from typing import Optional

from .core import (
    check_height_identity,
    check_width_identity,
    height_of,
    maximal_elements,
    verify_axioms,
    width_of,
)
from .covers import Ties, bounds_hold, covers_of_si
from .enumerate import si_tree_keys_bounded
from .errors import MinimalityError, PropertyViolation
from .iso import algebra_from_key
from .subalgebras import (
    OTHER,
    classified_keys,
    delta_star,
    divisor_carrier,
    divisor_condition,
    enumerate_subalgebras_bruteforce,
    gcd_downset_check,
    is_subuniverse,
    subalgebra_keys,
)
from .varieties import cover_oracle, join, variety_of


def brute_force_covers(A, limit_nodes: Optional[int] = None) -> set[frozenset[str]]:
    """Covers of ``<A>`` of the form ``<A> v <B>``, ``B`` ranging over every
    s.i. algebra within one extra unit of height and width.

    A ``B`` one of whose leaf deletions does not embed in ``A`` is rejected
    without the oracle: adding that deletion's subalgebras to ``Si(<A>)``
    already gives a family strictly in between.
    """
    V = variety_of([A])
    present = V.si_closure
    found = set()
    for key in si_tree_keys_bounded(height_of(A) + 1, width_of(A) + 1):
        if limit_nodes is not None and len(key) // 2 > limit_nodes:
            continue
        if key in present:
            continue
        B = algebra_from_key(key)
        if any(_delete_leaf_key(B, m) not in present for m in maximal_elements(B)):
            continue
        W = join(V, variety_of([B]))
        if cover_oracle(V, W):
            found.add(W.si_closure)
    return found


def _delete_leaf_key(B, leaf: int) -> str:
    from .core import induced_tree
    from .iso import canonical_form

    return canonical_form(induced_tree(B, [v for v in B.nodes if v != leaf])[0])


def check_tree(key: str, max_identity_n: int = 6, covers: bool = False, ties: Ties = "raise") -> dict:
    """Per-tree verdicts; every list holds failures (empty = pass)."""
    A = algebra_from_key(key)
    out: dict = {"key": key, "size": len(A)}
    out["axioms"] = [] if verify_axioms(A) else [verify_axioms(A).identity]
    ident = []
    for n in range(1, max_identity_n + 1):
        if check_height_identity(A, n) != (height_of(A) <= n):
            ident.append(f"height n={n}")
        if check_width_identity(A, n) != (width_of(A) <= n):
            ident.append(f"width n={n}")
    out["identities"] = ident
    subs = enumerate_subalgebras_bruteforce(A)
    brute = {s.key for s in subs}
    out["classification"] = sorted(brute ^ classified_keys(A))
    out["other"] = [sorted(s.carrier) for s in subs if s.kind == OTHER]
    out["closure_enum"] = sorted(brute ^ subalgebra_keys(A))
    div = []
    for k in delta_star(height_of(A)):
        if is_subuniverse(A, divisor_carrier(A, k)) != divisor_condition(A, k):
            div.append(k)
    out["divisor"] = div
    gcd_bad = []
    for s in subs:
        try:
            gcd_downset_check(A, s)
        except PropertyViolation:
            gcd_bad.append(sorted(s.carrier))
    out["gcd"] = gcd_bad
    if covers and len(A) > 1:
        cov_fail = []
        try:
            V = variety_of([A])
            for W in covers_of_si(A, ties=ties):
                if not cover_oracle(V, W):
                    cov_fail.append(W.describe())
                for g in W.generators:
                    if not bounds_hold(A, algebra_from_key(g)):
                        cov_fail.append(f"bounds {g}")
        except MinimalityError as exc:
            cov_fail.append(f"minimality: {exc}")
        out["covers"] = cov_fail
    return out


def failures(report: dict) -> list[str]:
    return [name for name, v in report.items() if isinstance(v, list) and v]


def search_iso_only_witness(max_nodes: int = 9) -> Optional[str]:
    """An algebra whose subalgebras are all isomorphic to downsets while a
    divisor subalgebra of some downset is not a chain."""
    from .enumerate import si_tree_keys_upto
    from .subalgebras import downset_subalgebras, s_delta_of_downsets

    for key in si_tree_keys_upto(max_nodes):
        A = algebra_from_key(key)
        if not any(width_of(S.algebra) > 1 for S in s_delta_of_downsets(A)):
            continue
        if subalgebra_keys(A) == {D.key for D in downset_subalgebras(A)}:
            return key
    return None


def search_reduced_only_witness(max_nodes: int = 9, ties: Ties = "raise") -> Optional[tuple[str, list[str]]]:
    """An algebra with a cover candidate that downset bases never produce."""
    from .covers import cov_set, downset_only_cov_keys
    from .enumerate import si_tree_keys_upto

    for key in si_tree_keys_upto(max_nodes):
        if len(key) <= 2:
            continue
        A = algebra_from_key(key)
        try:
            reduced = {c.key for c in cov_set(A, "reduced", ties)}
            extra = reduced - downset_only_cov_keys(A, ties)
        except MinimalityError:
            continue
        if extra:
            return key, sorted(extra)
    return None
