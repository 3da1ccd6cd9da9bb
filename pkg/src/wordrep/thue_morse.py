"""Thue-Morse bits and the square-free ternary word counting the 1s between
consecutive 0s of the Thue-Morse sequence (indexed from 0)."""
from __future__ import annotations

from itertools import count, islice

from .words import Word

__all__ = ["thue_morse_bit", "thue_morse_bits", "TernaryStream", "squarefree_ternary"]


def thue_morse_bit(n: int) -> int:
    if n < 0:
        raise ValueError("index must be non-negative")
    return bin(n).count("1") & 1


def thue_morse_bits(length: int) -> Word:
    return Word(str(thue_morse_bit(n)) for n in range(length))


class TernaryStream:
    """Lazy iterator over the ternary symbols 2, 1, 0, 2, 0, 1, ...

    Each symbol is the number of 1s between two consecutive 0s of the
    Thue-Morse sequence; only the bit cursor and a run counter are kept.
    """

    def __init__(self):
        self._cursor = 1  # t_0 = 0 is the first zero
        self.emitted = 0

    def __iter__(self):
        return self

    def __next__(self) -> int:
        ones = 0
        for n in count(self._cursor):
            if thue_morse_bit(n):
                ones += 1
            else:
                self._cursor = n + 1
                break
        self.emitted += 1
        return ones

    def take(self, length: int) -> Word:
        return Word(islice(self, length))


def squarefree_ternary(length: int) -> Word:
    if length < 0:
        raise ValueError("length must be non-negative")
    return TernaryStream().take(length)
