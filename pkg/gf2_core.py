"""
GF(2) value types
Words, parity-check matrices, syndromes and the weight-compatible order
that every other module of the coset-leader toolkit is built on.

Coordinates are 1-based (e_1 ... e_n) and coordinate 1 is the leftmost
character of a word string. Internally a word of length n is a Python int
where coordinate i lives in bit (n - i), so the string form is just the
zero-padded binary expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike

MAX_WORD_LENGTH = 128
LEFTMOST_SUPPORT_FIRST = "leftmost-support-first"
TIE_BREAKS = (LEFTMOST_SUPPORT_FIRST,)


class ContractViolation(ValueError):
    """Raised when an operation is called outside its preconditions."""


@dataclass(frozen=True, slots=True)
class BinaryWord:
    length: int
    value: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_WORD_LENGTH:
            raise ContractViolation(f"Word length must be in 1..{MAX_WORD_LENGTH}, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise ContractViolation(f"Value {self.value} does not fit in {self.length} bits")

    @classmethod
    def zero(cls, length: int) -> "BinaryWord":
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, coordinate: int) -> "BinaryWord":
        """The canonical basis word e_i."""
        if not 1 <= coordinate <= length:
            raise ContractViolation(f"Coordinate {coordinate} out of range 1..{length}")
        return cls(length, 1 << (length - coordinate))

    @classmethod
    def from_support(cls, length: int, coordinates: Iterable[int]) -> "BinaryWord":
        value = 0
        for coordinate in coordinates:
            value ^= cls.unit(length, coordinate).value
        return cls(length, value)

    @classmethod
    def from_string(cls, bits: str) -> "BinaryWord":
        bits = bits.strip()
        if not bits or any(c not in "01" for c in bits):
            raise ContractViolation(f"Word string must be a non-empty run of 0/1, got {bits!r}")
        return cls(len(bits), int(bits, 2))

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def support(self) -> List[int]:
        """Ascending list of coordinates holding a 1."""
        n = self.length
        return [i for i in range(1, n + 1) if (self.value >> (n - i)) & 1]

    def flip(self, coordinate: int) -> "BinaryWord":
        """self + e_i"""
        return BinaryWord(self.length, self.value ^ BinaryWord.unit(self.length, coordinate).value)

    def __add__(self, other: "BinaryWord") -> "BinaryWord":
        return add(self, other)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b")

    def __repr__(self) -> str:
        return f"BinaryWord('{self}')"


@dataclass(frozen=True, slots=True)
class Syndrome:
    length: int
    value: int

    @classmethod
    def from_string(cls, bits: str) -> "Syndrome":
        bits = bits.strip()
        if any(c not in "01" for c in bits):
            raise ContractViolation(f"Syndrome string must be a run of 0/1, got {bits!r}")
        return cls(len(bits), int(bits, 2) if bits else 0)

    def bits(self) -> Tuple[int, ...]:
        return tuple((self.value >> (self.length - 1 - i)) & 1 for i in range(self.length))

    def __xor__(self, other: "Syndrome") -> "Syndrome":
        if self.length != other.length:
            raise ContractViolation(f"Syndrome lengths differ: {self.length} vs {other.length}")
        return Syndrome(self.length, self.value ^ other.value)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class OrderSpec:
    """Weight-compatible total order on words of length n.

    Lighter words come first. Among words of equal weight the one holding a 1
    at the leftmost coordinate where the two differ comes first, which is
    the same as the larger integer value coming first.
    """

    n: int
    tie_break: str = LEFTMOST_SUPPORT_FIRST

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_WORD_LENGTH:
            raise ContractViolation(f"Order length must be in 1..{MAX_WORD_LENGTH}, got {self.n}")
        if self.tie_break not in TIE_BREAKS:
            raise ContractViolation(f"Unknown tie-break {self.tie_break!r}. Available: {list(TIE_BREAKS)}")

    def key(self, word: BinaryWord) -> Tuple[int, int]:
        return word.value.bit_count(), -word.value

    @property
    def identifier(self) -> str:
        return f"weight/{self.tie_break}"


class GF2Matrix:
    """Dense binary matrix, immutable after construction.

    Columns are cached as integers with row 1 in the most significant bit,
    which is the layout syndromes use.
    """

    def __init__(self, entries: ArrayLike) -> None:
        array = np.asarray(entries, dtype=np.uint8)
        if array.ndim != 2 or array.shape[0] == 0 or array.shape[1] == 0:
            raise ContractViolation(f"Matrix must be a non-empty 2-D array, got shape {array.shape}")
        if np.any(array > 1):
            raise ContractViolation("Matrix entries must be 0 or 1")
        if array.shape[1] > MAX_WORD_LENGTH:
            raise ContractViolation(f"Matrix has {array.shape[1]} columns, the limit is {MAX_WORD_LENGTH}")
        self._entries = array.copy()
        self._entries.setflags(write=False)

        n = self._entries.shape[1]
        self._columns = [int("".join(map(str, self._entries[:, j])), 2) for j in range(n)]
        # indexed by bit position of the word value
        self._by_bit = [self._columns[n - 1 - bit] for bit in range(n)]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GF2Matrix":
        return cls([list(row) for row in rows])

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def entry(self, row: int, col: int) -> int:
        """1-based access, bounds checked."""
        if not (1 <= row <= self.rows and 1 <= col <= self.cols):
            raise ContractViolation(f"Entry ({row}, {col}) outside {self.rows}x{self.cols} matrix")
        return int(self._entries[row - 1, col - 1])

    def column(self, coordinate: int) -> Syndrome:
        if not 1 <= coordinate <= self.cols:
            raise ContractViolation(f"Column {coordinate} out of range 1..{self.cols}")
        return Syndrome(self.rows, self._columns[coordinate - 1])

    def syndrome_value(self, word_value: int) -> int:
        """XOR of the cached columns over the set bits of a word value."""
        s = 0
        v = word_value
        by_bit = self._by_bit
        while v:
            low = v & -v
            s ^= by_bit[low.bit_length() - 1]
            v ^= low
        return s

    def row_strings(self) -> List[str]:
        return ["".join(str(int(b)) for b in row) for row in self._entries]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2Matrix) and np.array_equal(self._entries, other._entries)

    def __hash__(self) -> int:
        return hash((self._entries.shape, self._entries.tobytes()))

    def __repr__(self) -> str:
        return f"GF2Matrix({self.rows}x{self.cols})"


def add(u: BinaryWord, v: BinaryWord) -> BinaryWord:
    if u.length != v.length:
        raise ContractViolation(f"Cannot add words of lengths {u.length} and {v.length}")
    return BinaryWord(u.length, u.value ^ v.value)


def weight(u: BinaryWord) -> int:
    return u.weight


def supp(u: BinaryWord) -> List[int]:
    return u.support()


def distance(u: BinaryWord, v: BinaryWord) -> int:
    return add(u, v).weight


def compare(u: BinaryWord, v: BinaryWord, order: OrderSpec) -> Ordering:
    if u.length != order.n or v.length != order.n:
        raise ContractViolation(f"Words of lengths {u.length}, {v.length} compared under order for n={order.n}")
    ku, kv = order.key(u), order.key(v)
    if ku < kv:
        return Ordering.LESS
    if ku > kv:
        return Ordering.GREATER
    return Ordering.EQUAL


def syndrome(H: GF2Matrix, u: BinaryWord) -> Syndrome:
    if u.length != H.cols:
        raise ContractViolation(f"Word of length {u.length} does not match matrix with {H.cols} columns")
    return Syndrome(H.rows, H.syndrome_value(u.value))


def gf2_rref(M) -> Tuple[np.ndarray, List[int]]:
    """Reduced row-echelon form over GF(2).

    Returns (R, pivot_cols); len(pivot_cols) is the rank.
    """
    R = (np.asarray(M, dtype=np.uint8) % 2).copy()
    m, n = R.shape
    pivot_cols: List[int] = []
    pivot_row = 0

    for col in range(n):
        if pivot_row == m:
            break
        nonzero = np.flatnonzero(R[pivot_row:, col])
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        # eliminate above and below
        others = np.flatnonzero(R[:, col])
        for row in others:
            if row != pivot_row:
                R[row] ^= R[pivot_row]
        pivot_cols.append(col)
        pivot_row += 1

    return R, pivot_cols


def rank(M) -> int:
    entries = M.entries if isinstance(M, GF2Matrix) else M
    _, pivot_cols = gf2_rref(entries)
    return len(pivot_cols)


def nullspace_basis(H: GF2Matrix) -> List[BinaryWord]:
    """k = n - rank(H) independent words spanning {u : Hu = 0}."""
    R, pivot_cols = gf2_rref(H.entries)
    n = H.cols
    pivots = set(pivot_cols)
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        coords = [free + 1]
        for row, pivot in enumerate(pivot_cols):
            if R[row, free]:
                coords.append(pivot + 1)
        basis.append(BinaryWord.from_support(n, coords))
    return basis


def codewords(H: GF2Matrix) -> Iterator[BinaryWord]:
    """Every codeword of the nullspace of H, zero word first."""
    basis = [w.value for w in nullspace_basis(H)]
    n = H.cols
    # Gray-code walk: one XOR per codeword
    value = 0
    yield BinaryWord(n, 0)
    for step in range(1, 1 << len(basis)):
        value ^= basis[(step & -step).bit_length() - 1]
        yield BinaryWord(n, value)
