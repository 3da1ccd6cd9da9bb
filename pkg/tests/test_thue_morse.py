import pytest

from wordrep import TernaryStream, Word, is_square_free, squarefree_ternary, thue_morse_bit, thue_morse_bits

from oracles import naive_square_free, ternary_by_zero_gaps, thue_morse_by_doubling


@pytest.mark.parametrize("n,bit", [(0, 0), (1, 1), (2, 1), (3, 0), (4, 1), (7, 1), (255, 0)])
def test_bits(n, bit):
    assert thue_morse_bit(n) == bit


def test_bits_match_doubling_construction():
    assert [int(b) for b in thue_morse_bits(1024)] == thue_morse_by_doubling(1024)


def test_negative_index():
    with pytest.raises(ValueError):
        thue_morse_bit(-1)


def test_ternary_prefix():
    assert squarefree_ternary(6) == Word("210201")
    assert squarefree_ternary(0) == Word()


def test_ternary_matches_zero_gap_oracle():
    assert str(squarefree_ternary(500)) == ternary_by_zero_gaps(500)


def test_alphabet():
    assert set(squarefree_ternary(3000)) == {"0", "1", "2"}


def test_square_free_long_prefix():
    assert is_square_free(squarefree_ternary(10_000))


def test_square_free_short_prefix_naive():
    assert naive_square_free(str(squarefree_ternary(300)))


def test_prefix_property():
    long = squarefree_ternary(200)
    for n in range(200):
        assert squarefree_ternary(n) == long[:n]


def test_stream_is_lazy_and_resumable():
    s = TernaryStream()
    head = s.take(3)
    tail = s.take(3)
    assert head + tail == Word("210201")
    assert s.emitted == 6
