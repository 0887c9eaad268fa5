"""Exterior derivative, localized operators, the admissible matrix, and J."""

import random

import pytest

from nilheckeb import (
    DX,
    ExtPoly,
    LinearForm,
    LocalizedPoly,
    build_J,
    chain_word,
    check_char1,
    check_char2,
    default_admissible,
    default_invariant_gens,
    demazure_dx,
    demazure_word,
    exterior_d,
    mixing_matrix,
    p_matrix,
    parse,
    render,
    solomon_compare,
    validate_admissible,
    verify_J,
    verify_solomon,
)


def lp(text, n):
    return LocalizedPoly.from_poly(parse(text, n))


def test_exterior_derivative():
    n = 2
    assert render(exterior_d(parse("x1^2*x2", n))) == "2*x1*x2*dx1 + x1^2*dx2"
    assert exterior_d(parse("5", n)).is_zero()
    # d of a square lands in the even-exponent lattice times dx
    f = parse("x1^2 + x2^2", n)
    assert render(exterior_d(f)) == "2*x1*dx1 + 2*x2*dx2"


def test_localized_arithmetic_and_cancellation():
    n = 2
    half = LocalizedPoly(parse("x1^2 - x2^2", n), (LinearForm.diff(1, 2),))
    assert half == lp("x1 + x2", n)
    assert half.cancel().denom == ()
    mixed = LocalizedPoly(parse("x1*dx1", n), (LinearForm.var(1),))
    assert mixed == lp("dx1", n)
    stuck = LocalizedPoly(parse("dx1", n), (LinearForm.diff(1, 2),))
    assert stuck.cancel().denom == (LinearForm.diff(1, 2),)
    with pytest.raises(ValueError):
        stuck.as_poly()


def test_localized_cancellation_is_confluent():
    n = 3
    rng = random.Random(0)
    forms = [LinearForm.diff(1, 2), LinearForm.sum(1, 2), LinearForm.var(3)]
    num = parse("x1^2*x3^2*dx2 - x2^2*x3^2*dx2", n)
    loc = LocalizedPoly(num, tuple(forms))
    baseline = loc.cancel()
    for _ in range(6):
        shuffled = list(forms)
        rng.shuffle(shuffled)
        red = loc.cancel(order=shuffled)
        assert red == baseline
        assert red.denom == baseline.denom


def test_divided_difference_stays_localized():
    n = 2
    d1 = demazure_dx(1, lp("dx1", n))
    assert d1 == LocalizedPoly(parse("dx1 - dx2", n), (LinearForm.diff(1, 2),))
    assert d1.cancel().denom  # genuinely not a polynomial
    d2 = demazure_dx(2, lp("dx2", n))
    assert d2 == LocalizedPoly(parse("dx2", n), (LinearForm.var(2),))
    # on even polynomials it reduces to the plain operator
    assert demazure_dx(1, lp("x1^2", n)) == lp("x1 + x2", n)


def test_localized_operators_square_to_zero():
    n = 2
    for probe in ["dx1", "x1*dx1", "x1*dx2 + dx1"]:
        F = lp(probe, n)
        for i in (1, 2):
            assert demazure_dx(i, demazure_dx(i, F)).is_zero()


def test_chain_words():
    assert chain_word(1, 3) == (2, 1, 3, 2)
    assert chain_word(2, 3) == (3, 2)
    assert chain_word(3, 3) == ()
    assert chain_word(1, 2) == (2, 1)


def test_default_tuple_is_admissible():
    for n in (2, 3):
        rep = validate_admissible(default_admissible(n))
        assert rep.passed, str(rep)


def test_chain_on_default_tuple_gives_unit():
    n = 3
    p1, p2, p3 = default_admissible(n)
    assert render(p1) == "x3^4"
    assert render(p2) == "-x3^2"
    assert render(p3) == "1"
    assert render(demazure_word(chain_word(1, n), p1)) == "1"


def test_frozen_matrix_rank_two():
    P = p_matrix(default_admissible(2))
    assert render(P[1, 1]) == "1"
    assert render(P[1, 2]) == "-x2^2"
    assert render(P[2, 1]) == "0"
    assert render(P[2, 2]) == "1"


def test_frozen_matrix_rank_three():
    P = p_matrix(default_admissible(3))
    expected = [
        ["1", "-x2^2 - x3^2", "x3^4"],
        ["0", "1", "-x3^2"],
        ["0", "0", "1"],
    ]
    for i in range(1, 4):
        for j in range(1, 4):
            assert render(P[i, j]) == expected[i - 1][j - 1]


def test_frozen_omega_transform():
    n = 3
    P = p_matrix(default_admissible(n))
    omega = [ExtPoly.odd(i, n) for i in range(1, n + 1)]
    Pw = P.mul_vector(omega)
    assert render(Pw[0]) == "w1 - x2^2*w2 - x3^2*w2 + x3^4*w3"
    assert render(Pw[1]) == "w2 - x3^2*w3"
    assert render(Pw[2]) == "w3"


def test_characterizations():
    for n in (2, 3):
        p = default_admissible(n)
        rep = check_char1(p)
        assert rep.passed, str(rep)
        P = p_matrix(p)
        theta = [ExtPoly.odd(i, n) for i in range(1, n + 1)]
        rep2 = check_char2(P, theta)
        assert rep2.passed, str(rep2)


def test_char2_flags_broken_column():
    n = 2
    P = p_matrix(default_admissible(n))
    bad = [ExtPoly.x(1, n) * ExtPoly.odd(1, n), ExtPoly.odd(2, n)]
    rep = check_char2(P, bad)
    assert not rep.passed


def test_exterior_derivatives_of_invariants_are_killed():
    # the certifying cancellation: every divided difference of df_j
    # reduces to the zero localized element
    for n in (2, 3):
        for f in default_invariant_gens(n):
            df = LocalizedPoly.from_poly(exterior_d(f))
            for k in range(1, n + 1):
                assert demazure_dx(k, df).is_zero()


def test_solved_images_rank_two():
    n = 2
    J = build_J(n=n)
    f1, f2 = default_invariant_gens(n)
    assert J.of_generator(2) == exterior_d(f2)
    assert J.of_generator(1) == exterior_d(f1) + parse("x2^2", n).as_family(DX) * exterior_d(f2)


def test_equivariance_suite_rank_two():
    rep = verify_J(2, trials=6, seed=0)
    assert rep.passed, str(rep)


def test_clean_table_fails_rank_three():
    # the clean one-line table does not survive at rank three; the suite
    # records exactly which rows break and must NOT pass
    rep = verify_J(3, trials=4, seed=0)
    assert not rep.passed
    failing = {c.check for c in rep.failures()}
    assert any("table" in name for name in failing)


def test_mixing_matrix_values_rank_three():
    n = 3
    P = p_matrix(default_admissible(n))
    M1 = mixing_matrix(1, P)
    M2 = mixing_matrix(2, P)
    M3 = mixing_matrix(3, P)
    assert render(M1[1, 2]) == "-x1 - x2"
    assert render(M1[1, 3]) == "x1*x3^2 + x2*x3^2"
    assert render(M2[2, 3]) == "-x2 - x3"
    assert render(M2[1, 3]) == "x2^3 + x2^2*x3 + x2*x3^2 + x3^3"
    assert M3.is_zero()
    for M, k in ((M1, 1), (M2, 2)):
        for i in range(1, 4):
            for j in range(1, 4):
                if (i, j) in ((k, k + 1), (1, 3), (2, 3)):
                    continue
                assert M[i, j].is_zero(), (k, i, j)


def test_mixing_matrix_rank_two_is_clean():
    P = p_matrix(default_admissible(2))
    M1 = mixing_matrix(1, P)
    assert render(M1[1, 2]) == "-x1 - x2"
    assert M1[1, 1].is_zero() and M1[2, 1].is_zero() and M1[2, 2].is_zero()
    assert mixing_matrix(2, P).is_zero()


def test_invariant_dimensions_match():
    rep = solomon_compare(2)
    assert rep.passed, str(rep)


@pytest.mark.parametrize("n", [2, 3])
def test_suite_green(n):
    rep = verify_solomon(n, trials=6, seed=0)
    assert rep.passed, str(rep)
