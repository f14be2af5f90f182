import pytest

from cbck.builders import chain, glued
from cbck.core import algebra_from_parents, height_of, width_of
from cbck.enumerate import si_tree_keys_upto
from cbck.errors import AnchorError, MinimalityError, PreconditionError
from cbck.iso import algebra_from_key, canonical_form, key_name
from cbck.subalgebras import Subuniverse, embeds, is_subuniverse
from cbck.sweeps import brute_force_covers
from cbck.covers import (
    add_leaf,
    bounds_hold,
    cov_set,
    covers_of_si,
    covers_of_variety,
    minimal_new,
    smallest_new,
    subalgebras_containing_c,
)
from cbck.varieties import cover_oracle, join, n_generated, variety_of


def closures(varieties):
    return {V.si_closure for V in varieties}


def test_add_leaf():
    ext = add_leaf(chain(2), 1)
    assert ext.new_node == 3
    assert ext.extended.tree.parent == (-1, 0, 1, 1)
    with pytest.raises(AnchorError):
        add_leaf(chain(2), 0)
    with pytest.raises(AnchorError):
        add_leaf(chain(2), 5)
    with pytest.raises(AnchorError):
        add_leaf(chain(0), 0)


def test_subalgebras_containing_new_leaf():
    ext = add_leaf(chain(2), 1)
    carriers = {S.carrier for S in subalgebras_containing_c(ext)}
    assert all(3 in c for c in carriers)
    assert frozenset({0, 3}) in carriers and frozenset({0, 1, 2, 3}) in carriers


def test_smallest_new_on_chains():
    S3 = chain(3)
    top = smallest_new(add_leaf(S3, 3), S3)
    assert top.key == chain(4).key
    mid = smallest_new(add_leaf(S3, 1), S3)
    assert key_name(mid.key) == "M_2(S_1)"
    assert mid.carrier == {0, 1, 2, 4}


def test_smallest_new_none_when_nothing_new():
    # every subalgebra of the extension with the new leaf embeds in the bigger algebra
    A = glued([1, 1], 1)
    assert smallest_new(add_leaf(chain(2), 1), A) is None


def test_minimality_tie_is_reported():
    A = glued([3, 2], 2)
    with pytest.raises(MinimalityError):
        cov_set(A)
    tied = [c.key for c in cov_set(A, ties="all")]
    assert len(tied) == len(set(tied))


def test_tie_members_are_incomparable():
    A = glued([3, 2], 2)
    for B_key in [A.key]:
        B = algebra_from_key(B_key)
        for a in range(1, len(B)):
            ext = add_leaf(B, a)
            mins = minimal_new(ext, A)
            keys = {m.key for m in mins}
            if len(keys) > 1 and not any(all(embeds(k, o) for o in keys) for k in keys):
                return
    pytest.fail("expected an anchor with incomparable minimal members")


def test_cov_set_s3():
    assert sorted(key_name(c.key) for c in cov_set(chain(3))) == ["M_2(S_1)", "M_2(S_2)", "S_4"]


def test_trivial_algebra_has_no_cov_set():
    with pytest.raises(PreconditionError):
        cov_set(chain(0))


def test_full_and_reduced_agree_small():
    for key in si_tree_keys_upto(7)[1:]:
        A = algebra_from_key(key)
        assert closures(covers_of_si(A, "full")) == closures(covers_of_si(A, "reduced"))


def test_candidates_respect_bounds_and_leaf_removal():
    for key in si_tree_keys_upto(7)[1:]:
        A = algebra_from_key(key)
        for c in cov_set(A):
            assert bounds_hold(A, c.algebra)
            ext = c.origin.extended
            rest = c.carrier - {c.origin.new_node}
            # dropping the new leaf leaves a subalgebra of the base, so it embeds in A
            assert is_subuniverse(ext, rest)
            assert embeds(Subuniverse(rest, ext).key, A.key)


def test_covers_match_bruteforce_small():
    for key in si_tree_keys_upto(6)[1:]:
        A = algebra_from_key(key)
        assert closures(covers_of_si(A)) == brute_force_covers(A)


def test_covers_of_single_generator_variety():
    V = variety_of([chain(2)])
    got = sorted(W.describe() for W in covers_of_variety(V))
    assert got == ["<M_2(S_1)>", "<S_3>"]


def test_covers_of_trivial_variety():
    (W,) = covers_of_variety(variety_of([]))
    assert W == variety_of([chain(1)])


def test_covers_are_at_most_one_more_generated():
    V = join(variety_of([chain(2)]), variety_of([glued([1, 1], 1)]))
    for W in covers_of_variety(V, method="extension"):
        assert n_generated(W) <= n_generated(V) + 1
        assert cover_oracle(V, W)


def _bruteforce_variety_covers(V, max_nodes):
    """Every <V, B> for s.i. B up to ``max_nodes`` nodes that covers V."""
    found = set()
    for key in si_tree_keys_upto(max_nodes):
        if key in V.si_closure:
            continue
        W = join(V, variety_of([key]))
        if cover_oracle(V, W):
            found.add(W.si_closure)
    return found


def test_extension_method_matches_bruteforce_for_two_generators():
    V = join(variety_of([chain(3)]), variety_of([glued([1, 1], 1)]))
    expected = _bruteforce_variety_covers(V, 6)
    assert closures(covers_of_variety(V, method="extension")) == expected


def test_recipe_misses_a_cover_of_two_generated_variety():
    V = join(variety_of([chain(3)]), variety_of([glued([1, 1], 1)]))
    recipe = closures(covers_of_variety(V, method="recipe"))
    extension = closures(covers_of_variety(V, method="extension"))
    assert recipe < extension
    missing = extension - recipe
    assert join(V, variety_of([glued([2, 1], 1)])).si_closure in missing


def test_bounds_hold():
    assert bounds_hold(chain(3), chain(4))
    assert not bounds_hold(chain(3), chain(5))
    assert not bounds_hold(chain(3), glued([1, 1, 1], 2))
    assert height_of(glued([1, 1], 2)) == 3 and width_of(glued([1, 1], 2)) == 2


def test_example_keys_are_canonical():
    A = algebra_from_parents([None, 0, 1, 1])
    assert A.key == canonical_form(A.tree) == glued([1, 1], 1).key


def test_reduced_bases_can_be_needed():
    from cbck.covers import downset_only_cov_keys
    from cbck.sweeps import search_reduced_only_witness

    key, extra = search_reduced_only_witness(8)
    assert key == glued([2, 2], 2).key
    assert [key_name(k) for k in extra] == ["M_3(S_1)"]
    assert glued([1, 1, 1], 1).key not in downset_only_cov_keys(algebra_from_key(key))
