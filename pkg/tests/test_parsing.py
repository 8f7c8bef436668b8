import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinent import NormalizationWarning, StateParseError, parse_state, random_state, render


def test_example_expression():
    s = parse_state("1/2|00> + sqrt(3)/2|11>")
    assert s.dims == (2, 2)
    np.testing.assert_allclose(s.amplitudes, [0.5, 0, 0, math.sqrt(3) / 2], atol=1e-15)


def test_single_ket():
    s = parse_state("|0>")
    assert s.dims == (2,)
    np.testing.assert_array_equal(s.amplitudes, [1, 0])


def test_cancellation_is_an_error():
    with pytest.raises(StateParseError, match="zero vector"):
        parse_state("1/sqrt(2)|01> - 1/sqrt(2)|01>")


@pytest.mark.parametrize(
    "expr, expected",
    [
        ("i|1> + |0>", [1 / math.sqrt(2), 1j / math.sqrt(2)]),
        ("(1 + i)/2 |0> + 1/sqrt(2)*|1>", [(1 + 1j) / 2, 1 / math.sqrt(2)]),
        ("-|0> + |1>", [-1 / math.sqrt(2), 1 / math.sqrt(2)]),
        ("3*4/12|0>", [1, 0]),
        ("2 * sqrt(2) / 4 |0> + (1 - 1/2)*2*i/sqrt(2) |1>", [0.5 * math.sqrt(2), 1j / math.sqrt(2)]),
    ],
)
def test_coefficient_language(expr, expected):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NormalizationWarning)
        s = parse_state(expr)
    np.testing.assert_allclose(s.amplitudes, expected, atol=1e-15)


def test_repeated_kets_add():
    s = parse_state("1/2|0> + 1/2|0> + 0|1>")
    np.testing.assert_allclose(s.amplitudes, [1, 0])


def test_dim_inference_and_override():
    assert parse_state("1/sqrt(2)|02> + 1/sqrt(2)|20>").dims == (3, 3)
    assert parse_state("1/sqrt(5)|01> + 2/sqrt(5)|10>", 4).dims == (4, 4)
    assert parse_state("|00>").dims == (2, 2)


def test_unnormalized_input_warns_and_normalizes():
    with pytest.warns(NormalizationWarning):
        s = parse_state("|00> + |11>")
    assert s.input_norm == pytest.approx(math.sqrt(2))
    assert np.linalg.norm(s.amplitudes) == pytest.approx(1, abs=1e-15)


def test_tiny_rounding_does_not_warn():
    with warnings.catch_warnings():
        warnings.simplefilter("error", NormalizationWarning)
        parse_state("1/sqrt(3)|0> + 1/sqrt(3)|1> + 1/sqrt(3)|2>")


@pytest.mark.parametrize(
    "expr, pos",
    [
        ("1/2|00> + ", 10),
        ("1/2 |0", 4),
        ("1/2|00> $ |11>", 8),
        ("sqrt 2|0>", 5),
        ("(1+2|0>", 4),
        ("1/2 3|0>", 4),
    ],
)
def test_syntax_errors_carry_position(expr, pos):
    with pytest.raises(StateParseError) as info:
        parse_state(expr)
    assert info.value.position == pos


def test_ket_length_mismatch():
    with pytest.raises(StateParseError, match="sites"):
        parse_state("|00> + |1>")


def test_digit_exceeds_dim():
    with pytest.raises(StateParseError, match="digit"):
        parse_state("|02>", dim=2)


def test_division_by_zero():
    with pytest.raises(StateParseError, match="division"):
        parse_state("1/0|0>")


@settings(max_examples=200, deadline=None)
@given(
    seed=st.integers(0, 2**32 - 1),
    d=st.integers(2, 4),
    n=st.integers(1, 3),
)
def test_render_round_trip(seed, d, n):
    s = random_state((d,) * n, np.random.default_rng(seed))
    back = parse_state(render(s), d)
    assert back.dims == s.dims
    assert np.max(np.abs(back.amplitudes - s.amplitudes)) <= 1e-12
