"""Binary symplectic algebra over GF(2) for phase-free Pauli words.

An n-qubit Pauli word is stored as a pair of n-bit integers (x_bits, z_bits).
Qubit 1 maps to bit 0, so the leftmost character of a printed row is the
lowest bit.  Per qubit the letter map is

    (0, 0) -> I,   (1, 0) -> X,   (0, 1) -> Z,   (1, 1) -> Y,

and a word prints either as letters ("XZZXI") or as both halves of its
binary row ("10010|01100", x half left).  Phases are never tracked: every
check done here (commutation, syndromes, distance) is phase independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

_LETTER_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_TO_LETTER = {v: k for k, v in _LETTER_TO_BITS.items()}


class PauliFormatError(ValueError):
    """Raised when a Pauli word cannot be parsed."""


@dataclass(frozen=True)
class PauliWord:
    """Phase-free n-qubit Pauli operator as an (x|z) bit-vector pair."""

    n: int
    x_bits: int
    z_bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("pauli word needs at least one qubit")
        mask = (1 << self.n) - 1
        if self.x_bits & ~mask or self.z_bits & ~mask:
            raise ValueError("bit vector wider than qubit count")

    def letter(self, q: int) -> str:
        """Letter at qubit q (1-based)."""
        bit = 1 << (q - 1)
        return _BITS_TO_LETTER[(int(bool(self.x_bits & bit)), int(bool(self.z_bits & bit)))]

    def __mul__(self, other: "PauliWord") -> "PauliWord":
        """GF(2) product (XOR of both halves), phases dropped."""
        if self.n != other.n:
            raise ValueError("qubit count mismatch")
        return PauliWord(self.n, self.x_bits ^ other.x_bits, self.z_bits ^ other.z_bits)

    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0

    def __str__(self) -> str:
        return format_pauli_word(self)


@dataclass(frozen=True)
class QubitPartition:
    """Ordered grouping of qubits into contiguous blocks of given sizes."""

    sizes: Tuple[int, ...]

    def __post_init__(self):
        if any(k < 1 for k in self.sizes):
            raise ValueError("block sizes must be positive")

    @classmethod
    def singletons(cls, n: int) -> "QubitPartition":
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return sum(self.sizes)


def identity_word(n: int) -> PauliWord:
    return PauliWord(n, 0, 0)


def single_qubit_word(n: int, q: int, letter: str) -> PauliWord:
    """Word acting as `letter` on qubit q (1-based) and I elsewhere."""
    xb, zb = _LETTER_TO_BITS[letter]
    return PauliWord(n, xb << (q - 1), zb << (q - 1))


def parse_pauli_word(text: str, n_hint: int | None = None) -> PauliWord:
    """Parse a letter row ("YZ") or a binary row ("10|11") into a PauliWord.

    Whitespace is ignored.  Binary rows must contain exactly one '|' with
    halves of equal length; letter rows may only use I, X, Z, Y.
    """
    stripped = "".join(text.split())
    if not stripped:
        raise PauliFormatError("empty pauli word")
    if "|" in stripped:
        halves = stripped.split("|")
        if len(halves) != 2:
            raise PauliFormatError("binary row must have exactly one '|'")
        xs, zs = halves
        if len(xs) != len(zs):
            raise PauliFormatError(
                "binary halves differ in length (%d vs %d)" % (len(xs), len(zs))
            )
        if not xs:
            raise PauliFormatError("empty pauli word")
        bad = set(xs + zs) - {"0", "1"}
        if bad:
            raise PauliFormatError("binary row contains %r" % "".join(sorted(bad)))
        n = len(xs)
        x_bits = sum(1 << i for i, c in enumerate(xs) if c == "1")
        z_bits = sum(1 << i for i, c in enumerate(zs) if c == "1")
        word = PauliWord(n, x_bits, z_bits)
    else:
        bad = set(stripped) - set("IXZY")
        if bad:
            raise PauliFormatError("letter row contains %r" % "".join(sorted(bad)))
        x_bits = 0
        z_bits = 0
        for i, c in enumerate(stripped):
            xb, zb = _LETTER_TO_BITS[c]
            x_bits |= xb << i
            z_bits |= zb << i
        word = PauliWord(len(stripped), x_bits, z_bits)
    if n_hint is not None and word.n != n_hint:
        raise PauliFormatError("expected %d qubits, got %d" % (n_hint, word.n))
    return word


def format_pauli_word(word: PauliWord, style: str = "letters") -> str:
    """Render a word as letters or as "x|z" binary halves (qubit 1 leftmost)."""
    if style == "letters":
        return "".join(word.letter(q) for q in range(1, word.n + 1))
    if style == "binary":
        xs = "".join("1" if word.x_bits >> i & 1 else "0" for i in range(word.n))
        zs = "".join("1" if word.z_bits >> i & 1 else "0" for i in range(word.n))
        return xs + "|" + zs
    raise ValueError("style must be 'letters' or 'binary'")


def symplectic_product(p: PauliWord, q: PauliWord) -> int:
    """(p.x . q.z + p.z . q.x) mod 2; 0 means the operators commute."""
    if p.n != q.n:
        raise ValueError("qubit count mismatch")
    return ((p.x_bits & q.z_bits) ^ (p.z_bits & q.x_bits)).bit_count() & 1


def weight(word: PauliWord) -> int:
    """Number of qubits where the word is not the identity."""
    return (word.x_bits | word.z_bits).bit_count()


def block_weight(word: PauliWord, partition: QubitPartition) -> int:
    """Number of partition blocks touched by a non-identity qubit."""
    if partition.n != word.n:
        raise ValueError("partition covers %d qubits, word has %d" % (partition.n, word.n))
    support = word.x_bits | word.z_bits
    touched = 0
    for size in partition.sizes:
        if support & ((1 << size) - 1):
            touched += 1
        support >>= size
    return touched


# GF(2) row reduction on plain int bitsets.  Columns are scanned from bit 0
# upward, which keeps every routine deterministic.

def gf2_rref(vectors: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, their pivot bits)."""
    rows: List[int] = []
    pivots: List[int] = []
    for vec in vectors:
        v = vec
        for row, p in zip(rows, pivots):
            if v >> p & 1:
                v ^= row
        if v == 0:
            continue
        p = (v & -v).bit_length() - 1
        for i, row in enumerate(rows):
            if row >> p & 1:
                rows[i] ^= v
        # keep rows sorted by pivot so reduction order is stable
        idx = 0
        while idx < len(pivots) and pivots[idx] < p:
            idx += 1
        rows.insert(idx, v)
        pivots.insert(idx, p)
    return rows, pivots


def gf2_reduce(vec: int, rref_rows: Sequence[int], pivots: Sequence[int]) -> int:
    """Reduce vec modulo the span of an RREF basis."""
    v = vec
    for row, p in zip(rref_rows, pivots):
        if v >> p & 1:
            v ^= row
    return v


def pack_word(word: PauliWord) -> int:
    """Pack a word into a single 2n-bit vector, x half in the low bits."""
    return word.x_bits | word.z_bits << word.n


def unpack_word(vec: int, n: int) -> PauliWord:
    mask = (1 << n) - 1
    return PauliWord(n, vec & mask, vec >> n & mask)


def _packed_rows(rows: Iterable[PauliWord]) -> List[int]:
    rows = list(rows)
    if not rows:
        return []
    n = rows[0].n
    for r in rows:
        if r.n != n:
            raise ValueError("qubit count mismatch")
    return [pack_word(r) for r in rows]


def gf2_rank(rows: Sequence[PauliWord]) -> int:
    """Rank of the s x 2n binary matrix formed by the rows."""
    rref, _ = gf2_rref(_packed_rows(rows))
    return len(rref)


def in_row_space(word: PauliWord, rows: Sequence[PauliWord]) -> bool:
    """True iff word lies in the GF(2) span of the rows."""
    packed = _packed_rows(list(rows) + [word])
    rref, pivots = gf2_rref(packed[:-1])
    return gf2_reduce(packed[-1], rref, pivots) == 0
