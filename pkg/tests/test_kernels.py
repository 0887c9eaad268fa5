"""The compiled and pure term kernels must agree operation by operation."""

import random
from fractions import Fraction

import pytest

from nilheckeb import _kernels_py

try:
    from nilheckeb import _termkernels
except ImportError:
    _termkernels = None

BACKENDS = [_kernels_py] if _termkernels is None else [_kernels_py, _termkernels]


def random_terms(rng, n, nterms, with_mask=True):
    out = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, 4) for _ in range(n))
        m = tuple(i for i in range(1, n + 1) if with_mask and rng.random() < 0.4)
        c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if c:
            out[(e, m)] = out.get((e, m), Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


@pytest.mark.skipif(_termkernels is None, reason="compiled extension not built")
@pytest.mark.parametrize("seed", range(12))
def test_backends_agree(seed):
    rng = random.Random(seed)
    n = rng.choice([1, 2, 3])
    a = random_terms(rng, n, 4)
    b = random_terms(rng, n, 4)
    c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))

    assert _kernels_py.add_terms(a, b) == _termkernels.add_terms(a, b)
    assert _kernels_py.sub_terms(a, b) == _termkernels.sub_terms(a, b)
    assert _kernels_py.scale_terms(a, c) == _termkernels.scale_terms(a, c)
    assert _kernels_py.mul_terms(a, b) == _termkernels.mul_terms(a, b)

    if n >= 2:
        i, j = rng.sample(range(n), 2)
        s = rng.choice([1, -1])
        assert _kernels_py.div_linear_terms(a, i, j, s) == _termkernels.div_linear_terms(a, i, j, s)
    k = rng.randrange(n)
    assert _kernels_py.div_var_terms(a, k) == _termkernels.div_var_terms(a, k)


@pytest.mark.parametrize("kern", BACKENDS, ids=lambda k: k.BACKEND_NAME)
def test_odd_merge_signs(kern):
    assert kern.odd_merge((), (2,)) == (1, (2,))
    assert kern.odd_merge((1,), (2,)) == (1, (1, 2))
    assert kern.odd_merge((2,), (1,)) == (-1, (1, 2))
    assert kern.odd_merge((1, 3), (2,)) == (-1, (1, 2, 3))
    assert kern.odd_merge((2,), (2,)) is None


@pytest.mark.parametrize("kern", BACKENDS, ids=lambda k: k.BACKEND_NAME)
def test_division_reconstructs(kern):
    rng = random.Random(5)
    for _ in range(20):
        n = 3
        a = random_terms(rng, n, 5)
        i, j = rng.sample(range(n), 2)
        s = rng.choice([1, -1])
        quot, rem = kern.div_linear_terms(a, i, j, s)
        # quotient * (x_i - s x_j) + remainder == a
        ei = [0] * n
        ei[i] = 1
        ej = [0] * n
        ej[j] = 1
        form = {(tuple(ei), ()): Fraction(1), (tuple(ej), ()): Fraction(-s)}
        back = kern.add_terms(kern.mul_terms(quot, form), rem)
        assert back == a
        assert all(e[i] == 0 for (e, _) in rem)


@pytest.mark.parametrize("kern", BACKENDS, ids=lambda k: k.BACKEND_NAME)
def test_var_division_reconstructs(kern):
    rng = random.Random(6)
    for _ in range(20):
        n = 2
        a = random_terms(rng, n, 5)
        i = rng.randrange(n)
        quot, rem = kern.div_var_terms(a, i)
        ei = [0] * n
        ei[i] = 1
        var = {(tuple(ei), ()): Fraction(1)}
        back = kern.add_terms(kern.mul_terms(quot, var), rem)
        assert back == a
        assert all(e[i] == 0 for (e, _) in rem)
