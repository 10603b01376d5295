import random
from math import comb

import pytest

from chernrep.char_ring import VirtualCharacter, augmentation
from chernrep.reps import assert_g_rep, dual, exterior, standard, symmetric
from chernrep.weyl import GL, SO_EVEN, SO_ODD, SP, TORUS, GroupSpec

rng = random.Random(99)


def V(rank, terms):
    return VirtualCharacter(rank, terms)


def test_standard_gl3():
    assert standard(GroupSpec(GL, 3)) == V(
        3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}
    )


def test_standard_so5():
    x = standard(GroupSpec(SO_ODD, 2))
    assert x == V(
        2, {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1, (0, 0): 1}
    )
    assert augmentation(x) == 5


def test_standard_sp4_and_so4():
    weights = {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}
    assert standard(GroupSpec(SP, 2)) == V(2, weights)
    assert standard(GroupSpec(SO_EVEN, 2)) == V(2, weights)
    assert augmentation(standard(GroupSpec(SP, 2))) == 4


def test_standard_rejects_torus():
    with pytest.raises(ValueError):
        standard(GroupSpec(TORUS, 2))


def test_exterior_square_std_gl3():
    x = standard(GroupSpec(GL, 3))
    assert exterior(x, 2) == V(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})


def test_exterior_edges():
    x = standard(GroupSpec(GL, 2))
    assert exterior(x, 0) == VirtualCharacter.unit(2)
    assert not exterior(x, 3)
    assert exterior(x, 2) == V(2, {(1, 1): 1})


def test_exterior_top_and_vanishing():
    for _ in range(15):
        r = rng.randint(1, 3)
        support = set()
        while len(support) < rng.randint(1, 4):
            support.add(tuple(rng.randint(-2, 2) for _ in range(r)))
        x = V(r, {w: 1 for w in support})
        n = augmentation(x)
        assert not exterior(x, n + 1)
        top = exterior(x, n)
        total = tuple(sum(w[i] for w in support) for i in range(r))
        assert top == V(r, {total: 1})


def test_exterior_multiplicity_count():
    for _ in range(15):
        r = rng.randint(1, 3)
        support = set()
        while len(support) < rng.randint(1, 4):
            support.add(tuple(rng.randint(-2, 2) for _ in range(r)))
        x = V(r, {w: rng.randint(1, 2) for w in support})
        n = augmentation(x)
        for p in range(n + 1):
            assert augmentation(exterior(x, p)) == comb(n, p)


def test_symmetric_square_std_gl2():
    x = standard(GroupSpec(GL, 2))
    assert symmetric(x, 2) == V(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})


def test_symmetric_edges():
    x = standard(GroupSpec(GL, 3))
    assert symmetric(x, 1) == x
    assert symmetric(x, 0) == VirtualCharacter.unit(3)
    # dim Sym^p(C^n) = C(n+p-1, p)
    for p in range(5):
        assert augmentation(symmetric(x, p)) == comb(3 + p - 1, p)


def test_dual():
    std = standard(GroupSpec(GL, 2))
    assert dual(std) == V(2, {(-1, 0): 1, (0, -1): 1})
    sp_std = standard(GroupSpec(SP, 2))
    assert dual(sp_std) == sp_std
    for _ in range(10):
        r = rng.randint(1, 3)
        terms = {
            tuple(rng.randint(-2, 2) for _ in range(r)): rng.randint(-2, 2)
            for _ in range(4)
        }
        x = V(r, terms)
        assert dual(dual(x)) == x


def test_assert_g_rep():
    for family, rank in [(GL, 3), (SP, 2), (SO_ODD, 2), (SO_EVEN, 2)]:
        g = GroupSpec(family, rank)
        assert assert_g_rep(standard(g), g)
    gl2 = GroupSpec(GL, 2)
    assert not assert_g_rep(V(2, {(1, 0): 1}), gl2)
    gl3 = GroupSpec(GL, 3)
    assert assert_g_rep(exterior(standard(gl3), 2), gl3)


def test_operations_preserve_invariance():
    for family, rank in [(GL, 3), (SP, 2), (SO_EVEN, 2)]:
        g = GroupSpec(family, rank)
        x = standard(g)
        for p in range(4):
            assert assert_g_rep(exterior(x, p), g)
            assert assert_g_rep(symmetric(x, p), g)
        assert assert_g_rep(x * x, g)
        assert assert_g_rep(dual(x), g)
