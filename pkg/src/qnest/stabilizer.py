"""Stabilizer codes: validation, syndromes, distance certificates, logicals.

A CodeFragment is any ordered list of same-length rows; no commutation or
independence is implied, so loose {n, s} building blocks are first-class.
A StabilizerCode is a validated fragment: pairwise commuting rows of full
GF(2) rank.  Syndromes are s-bit values where generator 1 owns the most
significant printed bit, so a syndrome string reads top generator first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .symplectic import (
    PauliWord,
    gf2_rank,
    gf2_reduce,
    gf2_rref,
    pack_word,
    parse_pauli_word,
    single_qubit_word,
    symplectic_product,
    unpack_word,
    weight,
)

UNUSED_SYNDROME_CAP = 24

# letter order used by every deterministic enumeration
_ENUM_LETTERS = ("X", "Z", "Y")


class ValidationError(Exception):
    """A fragment is not a valid stabilizer generator set."""


class NonCommuting(ValidationError):
    def __init__(self, i: int, j: int):
        super().__init__("generators %d and %d anticommute" % (i, j))
        self.i = i
        self.j = j


class DependentRows(ValidationError):
    def __init__(self, rank: int, s: int):
        super().__init__("rows span rank %d, expected %d independent" % (rank, s))
        self.rank = rank
        self.s = s


@dataclass(frozen=True)
class CodeFragment:
    """Raw generator rows; may be dependent or non-commuting."""

    n: int
    rows: Tuple[PauliWord, ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("fragment needs at least one row")
        for r in self.rows:
            if r.n != self.n:
                raise ValueError("row length %d does not match n=%d" % (r.n, self.n))

    @classmethod
    def from_rows(cls, rows: Sequence[str | PauliWord]) -> "CodeFragment":
        words = [r if isinstance(r, PauliWord) else parse_pauli_word(r) for r in rows]
        return cls(words[0].n, tuple(words))

    @property
    def s(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class StabilizerCode:
    """Validated code: commuting, independent generators. Use validate()."""

    n: int
    generators: Tuple[PauliWord, ...]

    @property
    def s(self) -> int:
        return len(self.generators)

    @property
    def k(self) -> int:
        return self.n - self.s

    def fragment(self) -> CodeFragment:
        return CodeFragment(self.n, self.generators)


@dataclass(frozen=True)
class Syndrome:
    """s-bit commutation pattern; generator 1 is the leftmost printed bit."""

    bits: int
    width: int

    def __str__(self) -> str:
        return format(self.bits, "0%db" % self.width)


@dataclass(frozen=True)
class DistanceReport:
    """Outcome of a distance search up to searched_weight."""

    status: str  # "exact" | "at_least" | "not_applicable_k0"
    searched_weight: int
    distance: Optional[int] = None
    witness: Optional[PauliWord] = None

    @classmethod
    def exact(cls, d: int, witness: PauliWord, searched: int) -> "DistanceReport":
        return cls("exact", searched, d, witness)

    @classmethod
    def at_least(cls, w: int, searched: int) -> "DistanceReport":
        return cls("at_least", searched, w, None)

    def value(self) -> int:
        if self.distance is None:
            raise ValueError("no distance value for status %r" % self.status)
        return self.distance


@dataclass(frozen=True)
class LogicalSet:
    """k anticommuting (X, Z) pairs that commute with the stabilizer."""

    pairs: Tuple[Tuple[PauliWord, PauliWord], ...]


@dataclass(frozen=True)
class Classification:
    g: Fraction
    t: int
    perfect: bool
    g_optimal: bool


def validate(fragment: CodeFragment) -> StabilizerCode:
    """Check pairwise commutation then independence; raise on the first failure."""
    rows = fragment.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if symplectic_product(rows[i], rows[j]):
                raise NonCommuting(i + 1, j + 1)
    rank = gf2_rank(rows)
    if rank != len(rows):
        raise DependentRows(rank, len(rows))
    return StabilizerCode(fragment.n, rows)


def syndrome_bits(code: StabilizerCode, error: PauliWord) -> int:
    if error.n != code.n:
        raise ValueError("qubit count mismatch")
    bits = 0
    for g in code.generators:
        bits = bits << 1 | symplectic_product(g, error)
    return bits


def syndrome(code: StabilizerCode, error: PauliWord) -> Syndrome:
    """Bit r is the symplectic product of generator r with the error."""
    return Syndrome(syndrome_bits(code, error), code.s)


def single_error_syndrome_table(code: StabilizerCode) -> List[Tuple[str, Syndrome]]:
    """All 3n one-qubit error syndromes: X1..Xn, Z1..Zn, Y1..Yn."""
    table = []
    for letter in ("X", "Z", "Y"):
        for q in range(1, code.n + 1):
            err = single_qubit_word(code.n, q, letter)
            table.append(("%s%d" % (letter, q), syndrome(code, err)))
    return table


def check_distance3(code: StabilizerCode) -> bool:
    """True iff all 3n single-error syndromes are pairwise distinct and nonzero."""
    seen = set()
    for _, syn in single_error_syndrome_table(code):
        if syn.bits == 0 or syn.bits in seen:
            return False
        seen.add(syn.bits)
    return True


def _single_qubit_syndromes(code: StabilizerCode) -> List[Dict[str, int]]:
    """Per qubit (0-based), syndrome bits of X, Z, Y on that qubit."""
    out = []
    for q in range(1, code.n + 1):
        sx = syndrome_bits(code, single_qubit_word(code.n, q, "X"))
        sz = syndrome_bits(code, single_qubit_word(code.n, q, "Z"))
        out.append({"X": sx, "Z": sz, "Y": sx ^ sz})
    return out


def _row_space_reducer(code: StabilizerCode):
    rref, pivots = gf2_rref([pack_word(g) for g in code.generators])
    return rref, pivots


def _words_up_to_weight(n: int, max_weight: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[str, ...]]]:
    """Supports and letter assignments, weight ascending then lexicographic."""
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(n), w):
            for letters in itertools.product(_ENUM_LETTERS, repeat=w):
                yield support, letters


def _assemble(n: int, support: Sequence[int], letters: Sequence[str],
              per_qubit: Sequence[Dict[str, Tuple[int, int]]]) -> PauliWord:
    x = 0
    z = 0
    for q, letter in zip(support, letters):
        xb, zb = per_qubit[q][letter]
        x |= xb
        z |= zb
    return PauliWord(n, x, z)


def _letter_bit_table(n: int) -> List[Dict[str, Tuple[int, int]]]:
    table = []
    for q in range(n):
        bit = 1 << q
        table.append({"X": (bit, 0), "Z": (0, bit), "Y": (bit, bit)})
    return table


def min_distance(code: StabilizerCode, max_weight: int) -> DistanceReport:
    """Exhaustive distance search over all words of weight 1..max_weight.

    The first word (weight ascending, then lexicographic by qubit subset and
    by letters X < Z < Y) that commutes with every generator yet lies outside
    their row space is returned as an exact witness.  Degenerate codes are
    handled correctly: membership in the row space is tested, not syndrome
    distinctness.
    """
    if code.k == 0:
        return DistanceReport("not_applicable_k0", 0)
    if max_weight > code.n:
        raise ValueError("max_weight exceeds qubit count")
    syn_table = _single_qubit_syndromes(code)
    bit_table = _letter_bit_table(code.n)
    rref, pivots = _row_space_reducer(code)
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(code.n), w):
            for letters in itertools.product(_ENUM_LETTERS, repeat=w):
                bits = 0
                for q, letter in zip(support, letters):
                    bits ^= syn_table[q][letter]
                if bits:
                    continue
                word = _assemble(code.n, support, letters, bit_table)
                if gf2_reduce(pack_word(word), rref, pivots) != 0:
                    return DistanceReport.exact(w, word, w)
    return DistanceReport.at_least(max_weight + 1, max_weight)


@dataclass(frozen=True)
class CollisionCertificate:
    """Result of the syndrome-bucket distance check at radius t."""

    ok: bool
    t: int
    words_checked: int
    # two distinct errors sharing a syndrome whose product is a nontrivial
    # stabilizer element; proves the code degenerate at this radius
    degeneracy_pair: Optional[Tuple[PauliWord, PauliWord]] = None
    # counterexample pair whose product escapes the stabilizer (ok=False)
    failing_pair: Optional[Tuple[PauliWord, PauliWord]] = None


def collision_certificate(code: StabilizerCode, t: int) -> CollisionCertificate:
    """Group all weight <= t words by syndrome; certify d >= 2t+1.

    Every pair of equal-syndrome words must multiply into the stabilizer row
    space.  One representative per bucket suffices: membership is closed
    under GF(2) sums, so pair checks against the representative cover all
    pairs in the bucket.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if code.k == 0:
        raise ValueError("collision check is not meaningful for k=0 codes")
    syn_table = _single_qubit_syndromes(code)
    bit_table = _letter_bit_table(code.n)
    rref, pivots = _row_space_reducer(code)
    n = code.n
    buckets: Dict[int, int] = {0: 0}  # syndrome bits -> packed representative
    checked = 1
    degeneracy: Optional[Tuple[PauliWord, PauliWord]] = None
    for support, letters in _words_up_to_weight(n, t):
        bits = 0
        x = 0
        z = 0
        for q, letter in zip(support, letters):
            bits ^= syn_table[q][letter]
            xb, zb = bit_table[q][letter]
            x |= xb
            z |= zb
        checked += 1
        packed = x | z << n
        rep = buckets.get(bits)
        if rep is None:
            buckets[bits] = packed
            continue
        product = rep ^ packed
        if gf2_reduce(product, rref, pivots) != 0:
            return CollisionCertificate(
                False, t, checked,
                degeneracy_pair=degeneracy,
                failing_pair=(unpack_word(rep, n), unpack_word(packed, n)),
            )
        if degeneracy is None and product != 0:
            degeneracy = (unpack_word(rep, n), unpack_word(packed, n))
    return CollisionCertificate(True, t, checked, degeneracy_pair=degeneracy)


def distance_at_least_by_collision(code: StabilizerCode, t: int) -> bool:
    """True iff the bucket check certifies distance >= 2t+1."""
    return collision_certificate(code, t).ok


def logical_operators(code: StabilizerCode) -> LogicalSet:
    """Deterministic symplectic completion into k logical (X, Z) pairs.

    Any gauge choice is acceptable; this one is fixed by the generator order:
    centralizer basis vectors are taken in RREF order, reduced modulo the
    stabilizer, then paired greedily with symplectic Gram-Schmidt.
    """
    if code.k == 0:
        raise ValueError("k=0 code has no logical operators")
    n = code.n
    # centralizer = null space of the half-swapped generator matrix
    swapped = [g.z_bits | g.x_bits << n for g in code.generators]
    rref, pivots = gf2_rref(swapped)
    pivot_set = set(pivots)
    basis = []
    for col in range(2 * n):
        if col in pivot_set:
            continue
        v = 1 << col
        for row, p in zip(rref, pivots):
            if row >> col & 1:
                v |= 1 << p
        basis.append(v)
    # drop the stabilizer itself from the centralizer
    stab_rref, stab_pivots = gf2_rref([pack_word(g) for g in code.generators])
    kept_rows = list(stab_rref)
    kept_pivots = list(stab_pivots)
    cosets = []
    for v in basis:
        r = gf2_reduce(v, kept_rows, kept_pivots)
        if r == 0:
            continue
        p = (r & -r).bit_length() - 1
        idx = 0
        while idx < len(kept_pivots) and kept_pivots[idx] < p:
            idx += 1
        kept_rows.insert(idx, r)
        kept_pivots.insert(idx, p)
        cosets.append(r)
    assert len(cosets) == 2 * code.k

    def sp(u: int, v: int) -> int:
        mask = (1 << n) - 1
        ux, uz = u & mask, u >> n
        vx, vz = v & mask, v >> n
        return ((ux & vz) ^ (uz & vx)).bit_count() & 1

    pairs = []
    pool = cosets
    while pool:
        u = pool[0]
        partner = None
        for idx in range(1, len(pool)):
            if sp(u, pool[idx]):
                partner = idx
                break
        assert partner is not None, "symplectic form degenerate on quotient"
        w = pool[partner]
        rest = [v for i, v in enumerate(pool) if i not in (0, partner)]
        pool = [v ^ (sp(v, w) * u) ^ (sp(v, u) * w) for v in rest]
        pairs.append((unpack_word(u, n), unpack_word(w, n)))
    return LogicalSet(tuple(pairs))


def using_rate(n: int, s: int, t: int) -> Fraction:
    """Syndromes consumed by all weight <= t errors over syndromes available."""
    if t < 1 or s < 1:
        raise ValueError("t and s must be at least 1")
    used = sum(3 ** j * comb(n, j) for j in range(1, t + 1))
    return Fraction(used, 2 ** s)


def classify(code: StabilizerCode, distance_hint: DistanceReport) -> Classification:
    """Classify by using rate at t = floor((d-1)/2).

    perfect: nondegenerate distance 3 with g exactly 1 - 1/2^s.
    g_optimal: 1/2 < g <= 1 (a strong indicator, not a proof of optimality).
    """
    if distance_hint.status == "not_applicable_k0":
        raise ValueError("cannot classify a k=0 code")
    d = distance_hint.value()
    t = max(1, (d - 1) // 2)
    g = using_rate(code.n, code.s, t)
    perfect = (
        d == 3
        and check_distance3(code)
        and g == 1 - Fraction(1, 2 ** code.s)
    )
    g_optimal = Fraction(1, 2) < g <= 1
    return Classification(g, t, perfect, g_optimal)


def unused_syndromes(code: StabilizerCode) -> List[Syndrome]:
    """All 2^s syndrome values no single-qubit error attains, ascending."""
    if code.s > UNUSED_SYNDROME_CAP:
        raise ValueError("refusing to enumerate 2^%d syndromes" % code.s)
    used = {syn.bits for _, syn in single_error_syndrome_table(code)}
    return [Syndrome(v, code.s) for v in range(2 ** code.s) if v not in used]


def unused_syndrome_summary(code: StabilizerCode, limit: int = 4) -> Tuple[int, List[Syndrome]]:
    """Count of unused syndromes plus the first few, without enumerating 2^s."""
    used = {syn.bits for _, syn in single_error_syndrome_table(code)}
    count = 2 ** code.s - len(used)
    first: List[Syndrome] = []
    v = 0
    while len(first) < min(limit, count):
        if v not in used:
            first.append(Syndrome(v, code.s))
        v += 1
    return count, first


def min_stabilizer_weight(code: StabilizerCode) -> int:
    """Minimum weight over nonidentity stabilizer elements (2^s enumeration)."""
    if code.s > 20:
        raise ValueError("stabilizer too large to enumerate")
    packed = [pack_word(g) for g in code.generators]
    best = None
    for mask in range(1, 2 ** code.s):
        v = 0
        m = mask
        while m:
            lsb = m & -m
            v ^= packed[lsb.bit_length() - 1]
            m ^= lsb
        w = weight(unpack_word(v, code.n))
        if best is None or w < best:
            best = w
    assert best is not None
    return best
