import numpy as np
import pytest

from singular_knots.laurent import (
    T_HALF,
    T_MINUS_HALF,
    HalfLaurent,
    from_json,
    invert_T,
    is_symmetric,
    one_minus_T_power,
    parse_half_laurent,
    render,
    to_json,
)

TORUS_DELTA = HalfLaurent({4: 1, 2: 5, 0: 9, -2: 5, -4: 1})


def test_canonical_form_drops_zero_terms():
    p = HalfLaurent([(2, 1), (2, -1), (0, 3)])
    assert p.items() == ((0, 3),)
    assert HalfLaurent({0: 0}).is_zero()
    assert HalfLaurent() == 0


def test_ring_operations():
    assert T_HALF * T_HALF == HalfLaurent({2: 1})
    assert T_HALF * T_MINUS_HALF == 1
    assert (T_HALF - T_MINUS_HALF) * (T_HALF + T_MINUS_HALF) == HalfLaurent({2: 1, -2: -1})
    assert 1 - T_HALF == HalfLaurent({0: 1, 1: -1})
    assert -T_HALF + T_HALF == HalfLaurent.zero()
    assert (T_HALF + 1) ** 2 == HalfLaurent({2: 1, 1: 2, 0: 1})


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        T_HALF ** -1


def test_one_minus_T_power():
    assert render(one_minus_T_power(0)) == '1'
    assert render(one_minus_T_power(2)) == 'T^2 - 2*T + 1'
    assert one_minus_T_power(5).evaluate_at_one() == 0
    with pytest.raises(ValueError):
        one_minus_T_power(-1)


def test_render_T_style():
    assert render(TORUS_DELTA) == 'T^2 + 5*T + 9 + 5*T^-1 + T^-2'
    assert render(HalfLaurent({1: -1, -1: -1})) == '-T^(1/2) - T^(-1/2)'
    assert render(HalfLaurent({3: 1, -1: -1})) == 'T^(3/2) - T^(-1/2)'
    assert render(HalfLaurent()) == '0'
    assert str(HalfLaurent({-2: 1})) == 'T^-1'


def test_render_t_half_style():
    assert render(T_HALF, style='t-half') == 't'
    assert render(HalfLaurent({3: 2, -1: 1}), style='t-half') == '2*t^3 + t^-1'
    with pytest.raises(ValueError):
        render(T_HALF, style='x')


@pytest.mark.parametrize("text", [
    'T^2 + 5*T + 9 + 5*T^-1 + T^-2',
    '-T^7 + 6*T^5 - 21*T^3 + 21*T^2 - 6 + T^-2',
    '-T^(1/2) - T^(-1/2)',
    'T - 1 + T^-1',
    '0',
])
def test_parse_reads_rendered_text(text):
    assert render(parse_half_laurent(text)) == text


def test_parse_t_half_style():
    assert parse_half_laurent('2*t^3 + t^-1') == HalfLaurent({3: 2, -1: 1})


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_half_laurent('T^^2')


def test_symmetry_and_inversion():
    assert is_symmetric(TORUS_DELTA)
    assert not is_symmetric(HalfLaurent({-2: 1}))
    assert invert_T(HalfLaurent({3: 1, -1: -1})) == HalfLaurent({-3: 1, 1: -1})


def test_json_pairs():
    assert to_json(TORUS_DELTA) == [[-4, 1], [-2, 5], [0, 9], [2, 5], [4, 1]]
    assert from_json([[-2, 1], [0, -1], [2, 1]]) == parse_half_laurent('T - 1 + T^-1')


def test_hash_matches_equality():
    assert len({HalfLaurent({2: 1}), HalfLaurent([(2, 1)]), T_HALF * T_HALF}) == 1


def random_polys(rng, count, size=4):
    polys = []
    for _ in range(count):
        n = int(rng.integers(0, size + 1))
        polys.append(HalfLaurent(zip(rng.integers(-6, 7, size=n), rng.integers(-5, 6, size=n))))
    return polys


def test_ring_axioms_on_random_polynomials():
    rng = np.random.default_rng(2024)
    for p, q, r in zip(*(random_polys(rng, 200) for _ in range(3))):
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + HalfLaurent.zero() == p
        assert p * HalfLaurent.one() == p
        assert p - p == 0


def test_evaluation_at_one_is_a_homomorphism():
    rng = np.random.default_rng(11)
    for p, q in zip(random_polys(rng, 200), random_polys(rng, 200)):
        assert (p + q).evaluate_at_one() == p.evaluate_at_one() + q.evaluate_at_one()
        assert (p * q).evaluate_at_one() == p.evaluate_at_one() * q.evaluate_at_one()


def test_invert_T_is_an_involutive_ring_map():
    rng = np.random.default_rng(5)
    for p, q in zip(random_polys(rng, 200), random_polys(rng, 200)):
        assert invert_T(invert_T(p)) == p
        assert invert_T(p + q) == invert_T(p) + invert_T(q)
        assert invert_T(p * q) == invert_T(p) * invert_T(q)
        assert is_symmetric(p * invert_T(p))
