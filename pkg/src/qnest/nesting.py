"""Syndrome-assignment algebra: the dual view of a generator matrix.

A generator matrix assigns each qubit q a pair of syndromes: sx[q] is the
column of the Z half (what a bit flip on q triggers) and sz[q] the column of
the X half.  The Y syndrome is always derived as sx ^ sz, never stored, so
the representation cannot drift from that identity.  Syndrome values follow
the MSB-first convention of stabilizer.Syndrome: generator 1 owns the top
bit, and nesting concatenates block bits above sub bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .stabilizer import CodeFragment
from .symplectic import PauliWord, in_row_space


@dataclass(frozen=True)
class SyndromeAssignment:
    """Per-qubit (sx, sz) syndrome pairs, each s bits wide."""

    n: int
    s: int
    sx: Tuple[int, ...]
    sz: Tuple[int, ...]

    def __post_init__(self):
        if len(self.sx) != self.n or len(self.sz) != self.n:
            raise ValueError("need one (sx, sz) pair per qubit")
        top = 1 << self.s
        for v in self.sx + self.sz:
            if v < 0 or v >= top:
                raise ValueError("syndrome value wider than %d bits" % self.s)

    def sy(self, q: int) -> int:
        """Derived Y syndrome of qubit q (0-based)."""
        return self.sx[q] ^ self.sz[q]

    @classmethod
    def zero(cls, n: int, s: int) -> "SyndromeAssignment":
        """n qubits whose errors all map to the zero syndrome."""
        return cls(n, s, (0,) * n, (0,) * n)

    @classmethod
    def empty(cls, s: int) -> "SyndromeAssignment":
        """Zero qubits; the identity element of extend()."""
        return cls(0, s, (), ())


@dataclass(frozen=True)
class ConstraintReport:
    """Row parities and forbidden-uniform-element flags of a fragment."""

    left_row_parities: Tuple[int, ...]
    right_row_parities: Tuple[int, ...]
    all_x_in_span: bool   # (11..1|00..0)
    all_z_in_span: bool   # (00..0|11..1)
    all_y_in_span: bool   # (11..1|11..1)

    @property
    def any_forbidden(self) -> bool:
        return self.all_x_in_span or self.all_z_in_span or self.all_y_in_span


def syndromes_of(fragment: CodeFragment) -> SyndromeAssignment:
    """Read the assignment off a fragment: sx = Z-half columns, sz = X-half."""
    s = fragment.s
    sx: List[int] = []
    sz: List[int] = []
    for q in range(fragment.n):
        bit = 1 << q
        vx = 0
        vz = 0
        for r, row in enumerate(fragment.rows):
            pos = s - 1 - r  # generator 1 is the printed MSB
            if row.z_bits & bit:
                vx |= 1 << pos
            if row.x_bits & bit:
                vz |= 1 << pos
        sx.append(vx)
        sz.append(vz)
    return SyndromeAssignment(fragment.n, s, tuple(sx), tuple(sz))


def materialize(assignment: SyndromeAssignment) -> CodeFragment:
    """Inverse of syndromes_of.  No validity implied; run validate() after."""
    if assignment.s < 1:
        raise ValueError("cannot materialize an assignment with no syndrome bits")
    if assignment.n < 1:
        raise ValueError("cannot materialize an assignment with no qubits")
    rows = []
    for r in range(assignment.s):
        pos = assignment.s - 1 - r
        x = 0
        z = 0
        for q in range(assignment.n):
            if assignment.sz[q] >> pos & 1:
                x |= 1 << q
            if assignment.sx[q] >> pos & 1:
                z |= 1 << q
        rows.append(PauliWord(assignment.n, x, z))
    return CodeFragment(assignment.n, tuple(rows))


def nest(block: SyndromeAssignment, sub: SyndromeAssignment) -> SyndromeAssignment:
    """Tensor the syndromes: qubit (i, j) gets block bits above sub bits.

    Qubit order is block-major: sub qubit j of block qubit i lands at
    position (i-1)*sub.n + j, so block rows materialize with each entry
    repeated sub.n times and sub rows tile across the blocks.
    """
    n = block.n * sub.n
    s = block.s + sub.s
    sx = []
    sz = []
    for i in range(block.n):
        for j in range(sub.n):
            sx.append(block.sx[i] << sub.s | sub.sx[j])
            sz.append(block.sz[i] << sub.s | sub.sz[j])
    return SyndromeAssignment(n, s, tuple(sx), tuple(sz))


def extend(a: SyndromeAssignment, b: SyndromeAssignment) -> SyndromeAssignment:
    """Concatenate qubit lists; both assignments must share the bit width."""
    if a.s != b.s:
        raise ValueError("bit-length mismatch: %d vs %d" % (a.s, b.s))
    return SyndromeAssignment(a.n + b.n, a.s, a.sx + b.sx, a.sz + b.sz)


def rotate(a: SyndromeAssignment) -> SyndromeAssignment:
    """Per-qubit syndrome rotation (sx, sz) -> (sy, sx).

    Applying it twice gives (sz, sy); three times is the identity.  This is
    the move that turns copies of one code into over-optimal fragments whose
    X, Z and Y syndrome lists are internally distinct.
    """
    sy = tuple(a.sx[q] ^ a.sz[q] for q in range(a.n))
    return SyndromeAssignment(a.n, a.s, sy, a.sx)


def cross_commutation_ok(block: CodeFragment, sub: CodeFragment) -> bool:
    """Parity test equivalent to commutation of all nested cross row pairs.

    For block row i and sub row j the nested symplectic product collapses to
    (sum of block x bits)(sum of sub z bits) + (sum of block z bits)(sum of
    sub x bits) over GF(2); every pair must vanish.
    """
    block_par = [(r.x_bits.bit_count() & 1, r.z_bits.bit_count() & 1) for r in block.rows]
    sub_par = [(r.x_bits.bit_count() & 1, r.z_bits.bit_count() & 1) for r in sub.rows]
    for bx, bz in block_par:
        for sx, sz in sub_par:
            if bx & sz ^ bz & sx:
                return False
    return True


def strong_constraints(fragment: CodeFragment) -> ConstraintReport:
    """Row parities of both halves and the three uniform-element span flags."""
    left = tuple(r.x_bits.bit_count() & 1 for r in fragment.rows)
    right = tuple(r.z_bits.bit_count() & 1 for r in fragment.rows)
    ones = (1 << fragment.n) - 1
    all_x = PauliWord(fragment.n, ones, 0)
    all_z = PauliWord(fragment.n, 0, ones)
    all_y = PauliWord(fragment.n, ones, ones)
    return ConstraintReport(
        left, right,
        in_row_space(all_x, fragment.rows),
        in_row_space(all_z, fragment.rows),
        in_row_space(all_y, fragment.rows),
    )
