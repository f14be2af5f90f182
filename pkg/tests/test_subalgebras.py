from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cbck.builders import chain, glued
from cbck.core import algebra_from_parents, height_of, induced_algebra, maximal_elements, verify_axioms
from cbck.enumerate import si_tree_keys_upto
from cbck.errors import DivisorError, LimitError, PreconditionError
from cbck.iso import algebra_from_key
from cbck.subalgebras import (
    DOWNSET,
    OTHER,
    classify,
    closure,
    delta_star,
    divisor_subalgebra,
    downset_carriers,
    downset_subalgebras,
    enumerate_subalgebras_bruteforce,
    enumerate_subuniverses,
    gcd_downset_check,
    generated_subalgebra,
    is_downset,
    is_subuniverse,
    s_delta,
    s_delta_of_downsets,
    smallest_generating_set_is_maximals,
    subalgebra_keys,
)

TWO_LEAVES = [None, 0, 1, 1]
# branching at height 2, both leaves at height 4
EVEN_BRANCH = [None, 0, 1, 2, 3, 2, 5]
# branching at height 1, leaves at height 4
ODD_BRANCH = [None, 0, 1, 2, 3, 1, 5, 6]


def test_is_subuniverse_examples():
    S4 = chain(4)
    assert is_subuniverse(S4, {0})
    assert is_subuniverse(S4, range(5))
    assert is_subuniverse(S4, {0, 2, 4})
    assert is_subuniverse(S4, {0, 3})
    assert not is_subuniverse(S4, {0, 2, 3})
    assert not is_subuniverse(S4, {2, 4})


def test_bruteforce_small_cases():
    carriers = {s.carrier for s in enumerate_subalgebras_bruteforce(chain(2))}
    assert carriers == {frozenset(c) for c in [{0}, {0, 1}, {0, 2}, {0, 1, 2}]}
    assert [s.carrier for s in enumerate_subalgebras_bruteforce(chain(0))] == [frozenset({0})]
    S6 = {s.carrier for s in enumerate_subalgebras_bruteforce(chain(6))}
    assert frozenset({0, 2, 4, 6}) in S6 and frozenset({0, 3, 6}) in S6


def test_bruteforce_cap(monkeypatch):
    with pytest.raises(LimitError):
        enumerate_subalgebras_bruteforce(chain(6), cap=5)
    monkeypatch.setenv("CBCK_SIZE_CAP", "4")
    with pytest.raises(LimitError):
        enumerate_subalgebras_bruteforce(chain(6))


def test_closure_search_matches_bruteforce(algebras_upto_9):
    for A in algebras_upto_9:
        brute = {s.carrier for s in enumerate_subalgebras_bruteforce(A)}
        assert set(enumerate_subuniverses(A)) == brute


def test_downsets():
    assert downset_carriers(chain(3)) == [frozenset(range(j + 1)) for j in range(4)]
    A = algebra_from_parents(TWO_LEAVES)
    expected = [{0}, {0, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 2, 3}]
    assert set(downset_carriers(A)) == {frozenset(e) for e in expected}
    assert len(downset_carriers(A)) == 5


def test_every_downset_is_subuniverse(algebras_upto_9):
    for A in algebras_upto_9:
        for D in downset_subalgebras(A):
            assert is_downset(A, D.carrier)
            assert is_subuniverse(A, D.carrier)


def test_downset_count_matches_bruteforce_ideals(algebras_upto_9):
    for A in algebras_upto_9[:60]:
        ideals = {s.carrier for s in enumerate_subalgebras_bruteforce(A) if is_downset(A, s.carrier)}
        assert ideals == set(downset_carriers(A))


def test_delta_star():
    assert delta_star(6) == [2, 3]
    assert delta_star(7) == []
    assert all(delta_star(n) == [] for n in range(4))


def test_divisor_subalgebra_examples():
    S6 = chain(6)
    assert divisor_subalgebra(S6, 2).carrier == {0, 2, 4, 6}
    assert divisor_subalgebra(S6, 2).algebra.key == chain(3).key
    assert divisor_subalgebra(chain(4), 2).carrier == {0, 2, 4}
    with pytest.raises(DivisorError):
        divisor_subalgebra(S6, 4)


def test_divisor_fails_on_odd_branch():
    A = algebra_from_parents(ODD_BRANCH)
    assert divisor_subalgebra(A, 2) is None
    carrier = {v for v in A.nodes if A.depth[v] % 2 == 0} | maximal_elements(A)
    assert not is_subuniverse(A, carrier)


def test_s_delta():
    assert s_delta(chain(7)) == []
    assert [s.kind for s in s_delta(chain(6))] == ["divisor(2)", "divisor(3)"]
    assert len(s_delta(algebra_from_parents(EVEN_BRANCH))) == 1


def test_s_delta_empty_for_some_non_chain():
    assert s_delta(algebra_from_parents(ODD_BRANCH)) == []
    assert s_delta(algebra_from_parents(TWO_LEAVES)) == []


def test_classify():
    S6 = chain(6)
    assert classify(S6, {0, 1, 2}) == (DOWNSET, False)
    assert classify(S6, {0, 2, 4, 6}) == ("divisor(2)", False)
    # {0, 2} in S_2 is neither a downset nor a divisor subalgebra; it is a copy of S_1
    assert classify(chain(2), {0, 2}) == (DOWNSET, True)


def test_nothing_classifies_as_other(algebras_upto_9):
    for A in algebras_upto_9:
        for s in enumerate_subalgebras_bruteforce(A):
            assert s.kind != OTHER


def test_s_delta_of_downsets_are_subuniverses(algebras_upto_9):
    for A in algebras_upto_9:
        for S in s_delta_of_downsets(A):
            assert is_subuniverse(A, S.carrier)


def test_induced_algebras_restrict_the_table(algebras_upto_9):
    for A in algebras_upto_9[::7]:
        for S in enumerate_subuniverses(A):
            B, embed = induced_algebra(A, S)
            assert verify_axioms(B)
            for i in B.nodes:
                for j in B.nodes:
                    assert embed[B.table[i][j]] == A.table[embed[i]][embed[j]]


def test_generated_subalgebra():
    A = algebra_from_parents(EVEN_BRANCH)
    full = generated_subalgebra(A, maximal_elements(A) | {A.atom})
    assert full.carrier == frozenset(A.nodes)
    assert generated_subalgebra(A, []).carrier == {0}
    assert generated_subalgebra(A, maximal_elements(A)).carrier < frozenset(A.nodes)


def test_maximals_and_atom_generate(algebras_upto_9):
    for A in algebras_upto_9[1:]:
        assert closure(A, maximal_elements(A) | {A.atom}) == frozenset(A.nodes)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(si_tree_keys_upto(9)), st.data())
def test_closure_is_monotone(key, data):
    A = algebra_from_key(key)
    X = data.draw(st.sets(st.sampled_from(list(A.nodes))))
    Y = X | data.draw(st.sets(st.sampled_from(list(A.nodes))))
    assert closure(A, X) <= closure(A, Y)
    assert is_subuniverse(A, closure(A, X))


def test_gcd_check_examples():
    S6 = chain(6)
    assert gcd_downset_check(chain(4), {0, 1, 2}) is not None
    assert gcd_downset_check(chain(4), {0, 2, 4}) is None
    B = generated_subalgebra(S6, {2, 3})
    assert 1 in B.carrier
    assert gcd_downset_check(S6, B) is not None


def test_coprime_heights_force_downset_sweep(algebras_upto_9):
    for A in algebras_upto_9:
        for s in enumerate_subalgebras_bruteforce(A):
            gcd_downset_check(A, s)


def test_smallest_generating_set():
    assert smallest_generating_set_is_maximals(algebra_from_parents(TWO_LEAVES))
    assert not smallest_generating_set_is_maximals(algebra_from_parents(EVEN_BRANCH))
    with pytest.raises(PreconditionError):
        smallest_generating_set_is_maximals(chain(3))


def test_generating_set_iff_no_divisor_subalgebra(algebras_upto_9):
    for A in algebras_upto_9:
        if len(A) == 1 or len(maximal_elements(A)) == 1:
            continue
        assert smallest_generating_set_is_maximals(A) == (s_delta(A) == [])


def test_subalgebra_keys_of_m2_s1():
    keys = subalgebra_keys(glued([1, 1], 1))
    assert keys == {"()", "(())", "((()))", "((()()))"}


def test_pairs_never_exceed_cap():
    # combinations helper sanity: S_4 has exactly 2^4 subsets containing 0
    assert sum(1 for r in range(5) for _ in combinations(range(1, 5), r)) == 16


def test_iso_only_witness():
    from cbck.sweeps import search_iso_only_witness

    key = search_iso_only_witness(8)
    assert key == "((((())(()))()))"
    A = algebra_from_key(key)
    assert any(S.algebra.key != chain(height_of(S.algebra)).key for S in s_delta_of_downsets(A))
