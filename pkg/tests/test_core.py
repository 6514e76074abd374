import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.numberfields.basis import round_two
from sympy.polys.numberfields.exceptions import ClosureFailure

from purefield.arith import is_squarefree, xn_minus_a_irreducible
from purefield.core import (
    FactoredInteger,
    discriminant,
    discriminant_prime_power,
    index_p_valuation,
    index_q_valuation,
    is_monogenic,
    monogenic,
    octic_table,
    power_basis_discriminant,
    theta_index,
    validate,
)
from purefield.errors import HypothesisError, ReducibleError
from purefield.newton import IntPolynomial, ore_index_valuation, triangle_count
from purefield.verify import shifted_polynomial

X = sympy.symbols("x")


def valid_pairs(n_max, a_max):
    for n in range(2, n_max + 1):
        for m in range(2, a_max + 1):
            for a in (m, -m):
                try:
                    yield validate(n, a)
                except (ReducibleError, HypothesisError):
                    continue


def round_two_disc(n, a):
    """sympy's round-two maximal order; None where sympy itself fails."""
    try:
        _, d = round_two(sympy.Poly(X**n - a, X))
    except ClosureFailure:
        return None
    return int(d)


def test_factored_integer():
    d = FactoredInteger.from_map(-1, {3: 3, 2: 2, 5: 0})
    assert d.factors == ((2, 2), (3, 3))
    assert d.value() == -108
    assert str(d) == "- 2^2 * 3^3"
    assert FactoredInteger(1).format(signed=False) == "1"
    with pytest.raises(ValueError):
        FactoredInteger(1, ((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        FactoredInteger(0)


def test_validate_example():
    f = validate(2, 5)
    assert f.n_factors.as_list() == [(2, 1)]
    assert f.a_factors.as_list() == [(5, 1)]
    assert f.p_data[0].r == 1
    assert f.q_gcds == (1,)


def test_validate_rejections():
    with pytest.raises(ReducibleError):
        validate(4, 16)
    # x^6 - 4 = (x^3 - 2)(x^3 + 2): rejected before the valuation hypothesis is looked at
    with pytest.raises(ReducibleError):
        validate(6, 4)
    with pytest.raises(HypothesisError) as info:
        validate(2, 12)
    assert info.value.prime == 2
    with pytest.raises(HypothesisError) as info:
        validate(6, 54)
    assert info.value.prime == 3
    with pytest.raises(ValueError):
        validate(3, 0)
    with pytest.raises(ValueError):
        validate(1, 3)


def test_shared_prime_r_is_minus_one():
    f = validate(2, 2)
    assert f.p_data[0].r == -1


@pytest.mark.parametrize("n, t, m, expected", [(8, 1, 1, 0), (4, 2, 2, 2), (9, 6, 3, 21)])
def test_index_q_valuation(n, t, m, expected):
    assert index_q_valuation(n, t, m) == expected == triangle_count(n, t)


def test_index_q_valuation_nonintegral():
    with pytest.raises(AssertionError):
        index_q_valuation(4, 2, 1)


@pytest.mark.parametrize("args, expected", [((2, 3, 1, 4), 7), ((3, 2, 1, 0), 0), ((2, 1, 3, 1), 3)])
def test_index_p_valuation(args, expected):
    assert index_p_valuation(*args) == expected


def test_index_p_matches_polygon_examples():
    assert index_p_valuation(2, 3, 1, 4) == ore_index_valuation(shifted_polynomial(2, 3, 33), 2)
    assert index_p_valuation(2, 1, 3, 1) == 3 * ore_index_valuation(shifted_polynomial(2, 1, 5), 2)


@pytest.mark.parametrize("n, a, expected", [(2, 5, [(2, 1)]), (2, 2, []), (8, 33, [(2, 7)])])
def test_theta_index(n, a, expected):
    ind = theta_index(validate(n, a))
    assert ind.sign == 1 and list(ind.factors) == expected


@pytest.mark.parametrize("n, a, expected", [(2, 5, 5), (2, -1, -4), (8, 2, -(2**31)), (3, 2, -108)])
def test_discriminant_examples(n, a, expected):
    assert discriminant(validate(n, a)).value() == expected


def test_discriminant_shared_prime_accumulates():
    # n = 6, a = 3: p = 3 divides both; exponent is 6*1 + (6 - 1)
    d = discriminant(validate(6, 3))
    assert d.exponent(3) == 11


def test_discriminant_against_round_two():
    # independent ring-of-integers computation on a spread of small fields
    cases = [(2, 5), (2, -1), (3, 2), (4, 5), (4, -3), (4, 24), (5, 7), (6, -3), (6, 10),
             (8, 2), (8, 17), (8, 41), (9, 10), (9, 20), (10, 3), (12, 5), (4, 8), (3, 12)]
    for n, a in cases:
        assert discriminant(validate(n, a)).value() == round_two_disc(n, a), (n, a)


@pytest.mark.slow
def test_discriminant_against_round_two_grid():
    compared = 0
    for f in valid_pairs(6, 20):
        expected = round_two_disc(f.n, f.a)
        if expected is None:
            continue
        assert discriminant(f).value() == expected, (f.n, f.a)
        compared += 1
    assert compared > 150


@pytest.mark.parametrize("p, s, a, expected", [
    (2, 3, 2, -(2**31)),
    (2, 3, 17, -(2**10) * 17**7),
    (3, 1, 2, -(2**2) * 3**3),
])
def test_discriminant_prime_power(p, s, a, expected):
    assert discriminant_prime_power(p, s, a).value() == expected


def test_discriminant_prime_power_agrees_with_general():
    for p, s in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1), (5, 2)]:
        for a in range(-60, 61):
            if abs(a) < 2 or not is_squarefree(a) or not xn_minus_a_irreducible(p**s, a):
                continue
            assert discriminant_prime_power(p, s, a) == discriminant(validate(p**s, a))


@pytest.mark.parametrize("a, expected", [
    (2, -(2**31)),
    (5, -(2**16) * 5**7),
    (17, -(2**10) * 17**7),
    (41, -(2**12) * 41**7),
    (-3, 2**16 * 3**7),
])
def test_octic_table_examples(a, expected):
    assert octic_table(a).value() == expected


def test_octic_table_matches_general_formula():
    checked = 0
    for m in range(2, 501):
        for a in (m, -m):
            if not is_squarefree(a) or not xn_minus_a_irreducible(8, a):
                continue
            assert octic_table(a) == discriminant(validate(8, a)), a
            checked += 1
    assert checked > 500


def test_octic_table_rejects():
    with pytest.raises(ValueError):
        octic_table(12)
    with pytest.raises(ValueError):
        octic_table(1)


@pytest.mark.parametrize("n, a, expected, prime", [(2, 5, False, 2), (2, 2, True, None), (3, 2, True, None)])
def test_is_monogenic_examples(n, a, expected, prime):
    ok, witness = is_monogenic(validate(n, a))
    assert ok is expected
    assert (witness.prime if witness else None) == prime


def test_monogenic_without_hypothesis():
    ok, witness = monogenic(4, 12)
    assert not ok and witness.prime == 2 and witness.reason == "a_not_squarefree"
    with pytest.raises(ReducibleError):
        monogenic(4, 16)


def test_global_identity_grid():
    count = 0
    for f in valid_pairs(24, 60):
        d, ind = discriminant(f), theta_index(f)
        assert d.value() * ind.value() ** 2 == power_basis_discriminant(f.n, f.a)
        count += 1
    assert count > 2000


def test_route_agreement_grid():
    for f in valid_pairs(12, 30):
        for d in f.p_data:
            if d.r >= 0:
                ore = ore_index_valuation(shifted_polynomial(d.p, d.s, f.a), d.p)
                assert index_p_valuation(d.p, d.s, d.cofactor, d.r) == d.cofactor * ore
        g = IntPolynomial.x_n_minus_a(f.n, f.a)
        for (q, t), m in zip(f.a_factors, f.q_gcds):
            assert m % q != 0
            assert index_q_valuation(f.n, t, m) == ore_index_valuation(g, q)


def test_monogenic_equivalence_grid():
    for f in valid_pairs(24, 60):
        ok, _ = is_monogenic(f)
        ind = theta_index(f)
        d = discriminant(f)
        assert ok == ind.is_one() == (abs(d.value()) == f.n**f.n * abs(f.a) ** (f.n - 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40), st.integers(2, 10**12), st.booleans())
def test_global_identity_random(n, m, negative):
    a = -m if negative else m
    try:
        f = validate(n, a)
    except (ReducibleError, HypothesisError):
        return
    d, ind = discriminant(f), theta_index(f)
    assert d.value() * ind.value() ** 2 == power_basis_discriminant(n, a)
