"""Doubly-even magic squares and the cell permutations they induce."""

from dataclasses import dataclass
from typing import Sequence

from .errors import LengthMismatch, NotDoublyEven

# cells of each 4x4 block whose values get complemented during construction
_INVERT = {(0, 0), (0, 3), (1, 1), (1, 2), (2, 1), (2, 2), (3, 0), (3, 3)}


def magic_constant(n: int) -> int:
    """Common line sum of an order-n magic square: n(n^2+1)/2."""
    return n * (n * n + 1) // 2


@dataclass(frozen=True)
class MagicSquare:
    order: int
    cells: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Permutation:
    """Bijection on [0, size) with its precomputed inverse."""

    size: int
    forward: tuple[int, ...]
    backward: tuple[int, ...]


def generate_doubly_even(n: int) -> MagicSquare:
    """Construct an order-n magic square for n a positive multiple of 4.

    Cells are filled 1..n^2 row-major, then every cell on the diagonal
    pattern of its 4x4 block is replaced by the complement n^2+1-v.
    """
    if n < 4 or n % 4 != 0:
        raise NotDoublyEven(n)
    total = n * n + 1
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = i * n + j + 1
            if (i % 4, j % 4) in _INVERT:
                v = total - v
            row.append(v)
        rows.append(tuple(row))
    return MagicSquare(n, tuple(rows))


def to_permutation(square: MagicSquare) -> Permutation:
    """Cell value v sends row-major source index to destination v-1."""
    n = square.order
    forward = [0] * (n * n)
    for i, row in enumerate(square.cells):
        for j, v in enumerate(row):
            forward[i * n + j] = v - 1
    backward = [0] * len(forward)
    for src, dst in enumerate(forward):
        backward[dst] = src
    return Permutation(n * n, tuple(forward), tuple(backward))


def scramble(grid: Sequence, perm: Permutation) -> list:
    """Rearrange cells so that output[forward[k]] = input[k]."""
    if len(grid) != perm.size:
        raise LengthMismatch(perm.size, len(grid))
    out = [None] * perm.size
    for k, dst in enumerate(perm.forward):
        out[dst] = grid[k]
    return out


def unscramble(grid: Sequence, perm: Permutation) -> list:
    """Exact inverse of scramble: output[k] = input[forward[k]]."""
    if len(grid) != perm.size:
        raise LengthMismatch(perm.size, len(grid))
    return [grid[dst] for dst in perm.forward]
