"""Signed permutations against an independent breadth-first model."""

import random

import pytest

import reference
from nilheckeb import (
    DX,
    OMEGA,
    ExtPoly,
    act,
    act_gen,
    act_word,
    all_reduced_words,
    compose,
    enumerate_group,
    from_word,
    identity,
    inverse,
    is_reduced,
    length,
    longest_element,
    longest_word,
    parse,
    random_poly,
    some_reduced_word,
    verify_weyl,
)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lengths_match_bfs(n):
    dist = reference.bfs_lengths(n)
    group = enumerate_group(n)
    assert len(group) == len(dist)
    for w in group:
        assert length(w) == dist[w.window]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_longest_element(n):
    w0 = longest_element(n)
    assert w0.window == tuple(-i for i in range(1, n + 1))
    assert length(w0) == n * n
    word = longest_word(n)
    assert len(word) == n * n
    assert from_word(word, n) == w0


def test_group_arithmetic_against_windows():
    rng = random.Random(1)
    n = 3
    group = enumerate_group(n)
    for _ in range(30):
        u, v = rng.choice(group), rng.choice(group)
        assert compose(u, v).window == reference.win_mul(u.window, v.window)
        assert compose(u, inverse(u)) == identity(n)


def test_reduced_words():
    n = 2
    w0 = longest_element(n)
    words = all_reduced_words(w0)
    assert len(words) == 2  # (1,2,1,2) and (2,1,2,1)
    assert all(is_reduced(word, n) and from_word(word, n) == w0 for word in words)
    assert not is_reduced((1, 1), n)
    assert some_reduced_word(identity(n)) == ()
    assert is_reduced(some_reduced_word(w0), n)


def test_action_on_even_variables():
    n = 3
    x = lambda i: ExtPoly.x(i, n)
    assert act_gen(1, x(1)) == x(2)
    assert act_gen(1, x(3)) == x(3)
    assert act_gen(3, x(3)) == -x(3)
    # rightmost letter first: s_1 after s_3
    f = parse("x1^2*x3 + x2", n)
    assert act_word((1, 3), f) == parse("x1 - x2^2*x3", n)


def test_twisted_action_on_odd_generators():
    n = 2
    w1 = ExtPoly.odd(1, n)
    w2 = ExtPoly.odd(2, n)
    x1 = ExtPoly.x(1, n)
    x2 = ExtPoly.x(2, n)
    assert act_gen(1, w1) == w1 + (x1 * x1 - x2 * x2) * w2
    assert act_gen(1, w2) == w2
    assert act_gen(2, w1) == w1
    assert act_gen(2, w2) == w2


def test_action_on_differential_family():
    n = 2
    dx1 = ExtPoly.odd(1, n, DX)
    dx2 = ExtPoly.odd(2, n, DX)
    assert act_gen(1, dx1) == dx2
    assert act_gen(2, dx2) == -dx2
    # the swap on a two-letter dx word carries the sign of the transposition
    assert act_gen(1, dx1 * dx2) == dx2 * dx1
    assert act_gen(1, dx1 * dx2) == -(dx1 * dx2)


def test_action_is_a_group_action():
    rng = random.Random(4)
    n = 3
    group = enumerate_group(n)
    for _ in range(20):
        u, v = rng.choice(group), rng.choice(group)
        f = random_poly(n, OMEGA if rng.random() < 0.5 else DX, rng=rng)
        assert act(compose(u, v), f) == act(u, act(v, f))


@pytest.mark.parametrize("n", [2, 3])
def test_suite_green(n):
    rep = verify_weyl(n, trials=25, seed=0)
    assert rep.passed, str(rep)
