from itertools import product

import pytest

from cbck.builders import chain, glued, glued_uniform, parse_shorthand
from cbck.core import (
    branching_elements,
    height_of,
    induced_algebra,
    interval,
    maximal_elements,
    monus,
    verify_axioms,
    width_of,
)
from cbck.errors import ArityError, AtomError, ParseError


def test_chain_basics():
    assert len(chain(0)) == 1
    S3 = chain(3)
    assert monus(S3, 3, 1) == 2 and monus(S3, 1, 3) == 0
    for n in range(1, 8):
        assert height_of(chain(n)) == n and width_of(chain(n)) == 1


def test_m2_s1():
    A = glued([1, 1], 1)
    assert len(A) == 4
    assert sorted(A.depth[m] for m in maximal_elements(A)) == [2, 2]


def test_glued_maximal_chains():
    A = glued([2, 1], 3)
    chains = sorted(len(interval(A, m)) - 1 for m in maximal_elements(A))
    assert chains == [4, 5]
    for m in maximal_elements(A):
        B, _ = induced_algebra(A, interval(A, m))
        assert B.key == chain(A.depth[m]).key


def test_single_branching_element():
    for P, q in [([1, 1], 1), ([3, 1, 2], 2), ([2, 2], 4)]:
        A = glued(P, q)
        assert branching_elements(A) == {q}
        assert A.depth[q] == q


def test_uniform_shape():
    for k, q in product(range(2, 5), range(1, 4)):
        A = glued_uniform(k, q)
        assert width_of(A) == k and height_of(A) == q + 1


def test_order_of_p_does_not_matter():
    assert glued([1, 3, 2], 2).tree == glued([3, 2, 1], 2).tree


def test_errors():
    with pytest.raises(ArityError):
        glued([2], 1)
    with pytest.raises(AtomError):
        glued([1, 1], 0)


def test_axioms_for_all_small_glued():
    def partitions(total, k, top):
        if k == 0:
            if total == 0:
                yield []
            return
        for p in range(min(top, total), 0, -1):
            for rest in partitions(total - p, k - 1, p):
                yield [p] + rest

    count = 0
    for q in range(1, 9):
        for s in range(2, 11 - q):
            for k in range(2, s + 1):
                for P in partitions(s, k, s):
                    assert verify_axioms(glued(P, q))
                    count += 1
    assert count > 50


def test_shorthand():
    assert parse_shorthand("S:3").tree == chain(3).tree
    assert parse_shorthand("M:1,1:2").tree == glued([1, 1], 2).tree
    with pytest.raises(ParseError):
        parse_shorthand("S:x")
    with pytest.raises(ArityError):
        parse_shorthand("M:1:2")
