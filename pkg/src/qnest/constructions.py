"""Executable recipes for the nested-code constructions.

Every builder assembles its output from pinned ingredient matrices (never by
copying a target fixture), validates it, and checks the claimed parameters.
Recipe names are stable strings used by the CLI; parameterized families are
`power5 n`, `power6x5 n`, `gottesman2k k` and `perfect_recursion k kprime`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .nesting import (
    SyndromeAssignment,
    extend,
    materialize,
    nest,
    rotate,
    syndromes_of,
)
from .stabilizer import (
    CodeFragment,
    LogicalSet,
    StabilizerCode,
    check_distance3,
    logical_operators,
    min_distance,
    min_stabilizer_weight,
    using_rate,
    validate,
)
from .symplectic import (
    PauliWord,
    QubitPartition,
    block_weight,
    identity_word,
    in_row_space,
    symplectic_product,
)


class ConstructionError(Exception):
    """A recipe precondition failed or a built code did not verify."""


# ---------------------------------------------------------------------------
# pinned ingredients

# the {2,2}, {3,2}, {4,3} and {5,3} over-optimal subcode fragments
SUB_2x2 = CodeFragment.from_rows(["10|11", "11|01"])
SUB_3x2 = CodeFragment.from_rows(["100|110", "110|010"])
SUB_4x3 = CodeFragment.from_rows(["1001|0010", "0101|1011", "0011|0101"])
SUB_5x3 = CodeFragment.from_rows(["10011|00110", "01001|11010", "00111|01000"])

# five-qubit cyclic code (both halves even row parity): XZZXI and shifts
FIVE_A = CodeFragment.from_rows(
    ["10010|01100", "01001|00110", "10100|00011", "01010|10001"]
)
# five-qubit code with even left-half row parity, used as block and sub of
# the 25-qubit nest and as the seed of the raw perfect-constructing triple
FIVE_B = CodeFragment.from_rows(
    ["10001|00111", "01001|10010", "00101|11101", "00011|01110"]
)

# degenerate one-qubit "perfect code" seed (1|0),(0|1); not a valid code on
# its own (the rows anticommute) but a legal nesting block
SEED_1QUBIT = CodeFragment.from_rows(["X", "Z"])

# [8,3] code whose first two generators are X(8), Z(8)
CODE_8_33_A = CodeFragment.from_rows([
    "11111111|00000000",
    "00000000|11111111",
    "00001111|01011010",
    "00110011|01010101",
    "01010101|01101001",
])
# the alternative [8,3] code used as the 37-qubit blockcode
CODE_8_33_B = CodeFragment.from_rows([
    "11110000|01011010",
    "00001111|10100101",
    "00001111|01011010",
    "00110011|01010101",
    "01010101|01101001",
])

# {4,2} subcode paired with the [8,3] block in the 37-qubit construction
SUB_4x2 = CodeFragment.from_rows(["1001|1100", "1100|1010"])
# {5,7} fragment riding along the 37-qubit nest: rows 4..7 are a [5,1,3]
# code, rows 1..3 and 7 repeat one of its generators
FRAG_5x7 = CodeFragment.from_rows([
    "01010|10001",
    "01010|10001",
    "01010|10001",
    "10010|01100",
    "01001|00110",
    "10100|00011",
    "01010|10001",
])

# {7,3} raw perfect-constructing fragment: rows 3..5 of CODE_8_33_A on its
# tail qubits (that code's first qubit carries the zero syndrome)
RAW_7x3 = CodeFragment(7, tuple(
    PauliWord(7, row.x_bits >> 1, row.z_bits >> 1) for row in CODE_8_33_A.rows[2:]
))
# {3,2} raw perfect-constructing fragment; found by the constrained search
# (the multiply-by-x family below only commutes internally for k >= 3)
RAW_3x2 = CodeFragment.from_rows(["XZY", "YXZ"])


def _as_fragment(code: Union[StabilizerCode, CodeFragment]) -> CodeFragment:
    return code.fragment() if isinstance(code, StabilizerCode) else code


def _assignment(code: Union[StabilizerCode, CodeFragment]) -> SyndromeAssignment:
    return syndromes_of(_as_fragment(code))


# ---------------------------------------------------------------------------
# over-optimal and raw perfect-constructing builders

def two_copy_over_optimal(code5: StabilizerCode) -> CodeFragment:
    """{10,4} fragment from two copies of a [5,1] code, second copy rotated.

    Copy one keeps the code's own (sx, sz) assignment; copy two carries
    (sy, sx), so the X/Z/Y syndrome lists each join two disjoint families.
    """
    if (code5.n, code5.k) != (5, 1):
        raise ConstructionError("need a [5,1] code, got [%d,%d]" % (code5.n, code5.k))
    a = _assignment(code5)
    return materialize(extend(a, rotate(a)))


def raw_perfect_constructing(code5: StabilizerCode) -> CodeFragment:
    """{15,4} fragment whose X, Z and Y errors each exhaust all 15 syndromes.

    Three copies of a distance-3 [5,1] code carry (sx, sz), (sy, sx) and
    (sz, sy), so each letter's syndrome list is the full nonzero set; that
    also forces even row parity in both halves.
    """
    if (code5.n, code5.k) != (5, 1):
        raise ConstructionError("need a [5,1] code, got [%d,%d]" % (code5.n, code5.k))
    if not check_distance3(code5):
        raise ConstructionError("input code must be nondegenerate distance 3")
    a = _assignment(code5)
    return materialize(extend(extend(a, rotate(a)), rotate(rotate(a))))


def is_raw_perfect_constructing(fragment: CodeFragment) -> bool:
    """{2^k-1, k} fragment whose sx, sz and sy each cover all nonzero values."""
    k = fragment.s
    if fragment.n != 2 ** k - 1:
        return False
    a = syndromes_of(fragment)
    full = set(range(1, 2 ** k))
    return (
        set(a.sx) == full
        and set(a.sz) == full
        and {a.sy(q) for q in range(a.n)} == full
    )


def multiply_by_x_raw(k: int) -> CodeFragment:
    """{2^k-1, k} raw perfect-constructing fragment for any k >= 3.

    Qubit q gets sz = q and sx = x*q mod (x^k + x + 1) (bits as polynomial
    coefficients).  Multiplication by x and by x+1 are both invertible mod
    that polynomial, so each syndrome list covers all nonzero values; the
    rows commute internally for k >= 3 because sum(v v^T) over all nonzero
    v vanishes mod 2.
    """
    if k < 3:
        raise ConstructionError("multiply-by-x family needs k >= 3")
    mask = (1 << k) - 1
    sx = []
    sz = []
    for q in range(1, 2 ** k):
        w = q << 1
        if w >> k & 1:
            w = w & mask ^ 0b11
        sx.append(w)
        sz.append(q)
    frag = materialize(SyndromeAssignment(2 ** k - 1, k, tuple(sx), tuple(sz)))
    assert is_raw_perfect_constructing(frag)
    return frag


def _raw_perfect_fragment(k: int) -> CodeFragment:
    if k == 2:
        return RAW_3x2
    if k == 3:
        return RAW_7x3
    if k == 4:
        return raw_perfect_constructing(validate(FIVE_B))
    return multiply_by_x_raw(k)


# ---------------------------------------------------------------------------
# distance-3 families

def gottesman_2k(raw_pc: CodeFragment) -> StabilizerCode:
    """[2^k, 2^k-k-2] code: nest (1|0),(0|1) over raw fragment + zero qubit."""
    if not is_raw_perfect_constructing(raw_pc):
        raise ConstructionError("subcode is not raw perfect-constructing")
    k = raw_pc.s
    sub = extend(syndromes_of(raw_pc), SyndromeAssignment.zero(1, k))
    code = validate(materialize(nest(syndromes_of(SEED_1QUBIT), sub)))
    if not check_distance3(code):
        raise ConstructionError("nested code failed the distance-3 check")
    if (code.n, code.k) != (2 ** k, 2 ** k - k - 2):
        raise ConstructionError("unexpected parameters [%d,%d]" % (code.n, code.k))
    return code


def _check_perfect_ingredient(block: Union[StabilizerCode, CodeFragment], role: str) -> int:
    """Return the syndrome bit count k of a perfect code or the 1-qubit seed."""
    frag = _as_fragment(block)
    if frag.rows == SEED_1QUBIT.rows:
        return 2
    code = block if isinstance(block, StabilizerCode) else validate(frag)
    if not check_distance3(code):
        raise ConstructionError("%s is not nondegenerate distance 3" % role)
    if 3 * code.n != 2 ** code.s - 1:
        raise ConstructionError("%s is not perfect: 3n != 2^s - 1" % role)
    return code.s


def perfect_recursion(
    perfect_block: Union[StabilizerCode, CodeFragment],
    raw_pc: CodeFragment,
    perfect_sub: Union[StabilizerCode, CodeFragment],
) -> StabilizerCode:
    """Perfect [(2^(k+k')-1)/3, . , 3] code from two perfect codes and a raw
    perfect-constructing fragment.

    The block nests over the raw fragment extended by a zero-syndrome qubit;
    the block's never-used zero syndrome then hosts the second perfect code.
    """
    k = _check_perfect_ingredient(perfect_block, "block")
    kp = raw_pc.s
    if not is_raw_perfect_constructing(raw_pc):
        raise ConstructionError("middle ingredient is not raw perfect-constructing")
    if _check_perfect_ingredient(perfect_sub, "sub") != kp:
        raise ConstructionError("sub bit count must match the raw fragment")
    part1 = nest(_assignment(perfect_block), extend(syndromes_of(raw_pc), SyndromeAssignment.zero(1, kp)))
    part2 = nest(SyndromeAssignment.zero(1, k), _assignment(perfect_sub))
    code = validate(materialize(extend(part1, part2)))
    if not check_distance3(code):
        raise ConstructionError("recursion output failed the distance-3 check")
    expected_n = (2 ** (k + kp) - 1) // 3
    if (code.n, code.s) != (expected_n, k + kp):
        raise ConstructionError("unexpected parameters [%d,%d]" % (code.n, code.k))
    g = using_rate(code.n, code.s, 1)
    if g != 1 - Fraction(1, 2 ** code.s):
        raise ConstructionError("using rate %s is not perfect" % g)
    return code


# ---------------------------------------------------------------------------
# all-distance nesting (logical-substitution form)

@dataclass(frozen=True)
class NestedAllDistance:
    """Code built by logical substitution plus its claimed distance bound."""

    code: StabilizerCode
    block_distance: int
    claimed_distance: int  # exact verification is up to the caller


def _block_redefined_distance(block: CodeFragment, partition: QubitPartition) -> int:
    """Min block weight over words commuting with, but outside, the rows."""
    if block.n > 12:
        raise ConstructionError("block too large for exhaustive weighing")
    best = None
    for packed in range(1, 4 ** block.n):
        x = packed & ((1 << block.n) - 1)
        z = packed >> block.n
        word = PauliWord(block.n, x, z)
        if any(symplectic_product(word, row) for row in block.rows):
            continue
        if in_row_space(word, block.rows):
            continue
        w = block_weight(word, partition)
        if best is None or w < best:
            best = w
    if best is None:
        raise ConstructionError("block has no logical content (k'=0)")
    return best


def nest_all_distance(
    block: Optional[CodeFragment],
    subcodes: Sequence[StabilizerCode],
    logicals: Optional[Sequence[LogicalSet]] = None,
    subcode_distances: Optional[Sequence[int]] = None,
) -> NestedAllDistance:
    """Replace each block qubit by the matching subcode logical operator.

    The block acts on one qubit per encoded qubit of the subcodes (in
    order); its rows are rewritten with X -> logical X, Z -> logical Z,
    Y -> their product, and prepended to the block-diagonal union of all
    subcode generators.  A block of None adds no rows: the result is the
    plain block-diagonal union and the claim falls back to the smallest
    subcode distance.
    """
    if block is None:
        rows: List[PauliWord] = []
        total_n = sum(c.n for c in subcodes)
        off = 0
        for c in subcodes:
            for g in c.generators:
                rows.append(PauliWord(total_n, g.x_bits << off, g.z_bits << off))
            off += c.n
        code = validate(CodeFragment(total_n, tuple(rows)))
        if subcode_distances is None:
            subcode_distances = [min_distance(c, c.n).value() for c in subcodes]
        return NestedAllDistance(code, 1, min(subcode_distances))
    if block.n != sum(c.k for c in subcodes):
        raise ConstructionError(
            "block acts on %d qubits but subcodes encode %d"
            % (block.n, sum(c.k for c in subcodes))
        )
    if logicals is None:
        logicals = [logical_operators(c) for c in subcodes]
    for code, logs in zip(subcodes, logicals):
        if len(logs.pairs) != code.k:
            raise ConstructionError("logical set size does not match k")
    total_n = sum(c.n for c in subcodes)
    offsets = []
    off = 0
    for c in subcodes:
        offsets.append(off)
        off += c.n
    # logical qubit t (0-based) -> shifted logical X and Z words
    lx: List[Tuple[int, int]] = []
    lz: List[Tuple[int, int]] = []
    for m, (code, logs) in enumerate(zip(subcodes, logicals)):
        for xbar, zbar in logs.pairs:
            lx.append((xbar.x_bits << offsets[m], xbar.z_bits << offsets[m]))
            lz.append((zbar.x_bits << offsets[m], zbar.z_bits << offsets[m]))
    rows: List[PauliWord] = []
    for row in block.rows:
        x = 0
        z = 0
        for t in range(block.n):
            bit = 1 << t
            if row.x_bits & bit:
                x ^= lx[t][0]
                z ^= lx[t][1]
            if row.z_bits & bit:
                x ^= lz[t][0]
                z ^= lz[t][1]
        rows.append(PauliWord(total_n, x, z))
    for m, code in enumerate(subcodes):
        for g in code.generators:
            rows.append(PauliWord(total_n, g.x_bits << offsets[m], g.z_bits << offsets[m]))
    code = validate(CodeFragment(total_n, tuple(rows)))
    partition = QubitPartition(tuple(c.k for c in subcodes))
    block_d = _block_redefined_distance(block, partition)
    if subcode_distances is None:
        subcode_distances = [min_distance(c, c.n).value() for c in subcodes]
    claimed = sum(sorted(subcode_distances)[:block_d])
    return NestedAllDistance(code, block_d, claimed)


# ---------------------------------------------------------------------------
# stabilizer pasting

def paste_distance3(
    s2_code: StabilizerCode, s1_code: Optional[StabilizerCode]
) -> StabilizerCode:
    """[n2+n1] distance-3 code with s = max(s2, s1+2) generators.

    The left code must start with the all-X and all-Z generators; the right
    code's generators sit under generators 3..s1+2 while the first two rows
    (and any left generators past s1+2) extend with identity, so every
    right-side error keeps the never-used 00 prefix.
    """
    n2 = s2_code.n
    ones = (1 << n2) - 1
    if s2_code.generators[0] != PauliWord(n2, ones, 0):
        raise ConstructionError("first generator must be X on all qubits")
    if s2_code.generators[1] != PauliWord(n2, 0, ones):
        raise ConstructionError("second generator must be Z on all qubits")
    if s1_code is None:
        return s2_code
    n1 = s1_code.n
    s = max(s2_code.s, s1_code.s + 2)
    rows = []
    for r in range(1, s + 1):
        left = s2_code.generators[r - 1] if r <= s2_code.s else identity_word(n2)
        if 3 <= r <= s1_code.s + 2:
            right = s1_code.generators[r - 3]
        else:
            right = identity_word(n1)
        rows.append(PauliWord(n2 + n1, left.x_bits | right.x_bits << n2,
                              left.z_bits | right.z_bits << n2))
    code = validate(CodeFragment(n2 + n1, tuple(rows)))
    if not check_distance3(code):
        raise ConstructionError("pasted code failed the distance-3 check")
    return code


@dataclass(frozen=True)
class PastingSpec:
    """Two nested generator prefixes R_i inside codes S_i, ready to paste.

    split_i is the generator count of R_i, so R_i = S_i.generators[:split_i]
    defines an [n_i, l_i] code with l_i = n_i - split_i.
    """

    s1: StabilizerCode
    s2: StabilizerCode
    split1: int
    split2: int


@dataclass(frozen=True)
class PastingParams:
    l1: int
    k1: int
    c1: int
    d1: int
    l2: int
    k2: int
    c2: int
    d2: int

    @property
    def claimed_distance(self) -> int:
        return min(self.d1, self.d2, self.c1 + self.c2)


@dataclass(frozen=True)
class PastedCode:
    code: StabilizerCode
    params: PastingParams


def _pasting_distance(code: StabilizerCode) -> int:
    """Exact distance; for k=0 the minimum nonidentity stabilizer weight."""
    if code.k == 0:
        return min_stabilizer_weight(code)
    return min_distance(code, code.n).value()


def check_pasting_spec(spec: PastingSpec) -> PastingParams:
    """Verify every theorem precondition, naming the violated relation."""
    if not (1 <= spec.split1 < spec.s1.s and 1 <= spec.split2 < spec.s2.s):
        raise ConstructionError("k_i < l_i requires 1 <= split_i < s_i")
    r1 = validate(CodeFragment(spec.s1.n, spec.s1.generators[: spec.split1]))
    r2 = validate(CodeFragment(spec.s2.n, spec.s2.generators[: spec.split2]))
    l1, l2 = r1.k, r2.k
    k1, k2 = spec.s1.k, spec.s2.k
    if l1 - k1 != l2 - k2:
        raise ConstructionError("l1 - k1 = %d but l2 - k2 = %d" % (l1 - k1, l2 - k2))
    c1, c2 = _pasting_distance(r1), _pasting_distance(r2)
    d1, d2 = _pasting_distance(spec.s1), _pasting_distance(spec.s2)
    if c1 > d1 or c2 > d2:
        raise ConstructionError("c_i <= d_i violated (c=%d,%d d=%d,%d)" % (c1, c2, d1, d2))
    if min_stabilizer_weight(spec.s1) < d1:
        raise ConstructionError("S1 is degenerate")
    if min_stabilizer_weight(spec.s2) < d2:
        raise ConstructionError("S2 is degenerate")
    return PastingParams(l1, k1, c1, d1, l2, k2, c2, d2)


def paste_general(spec: PastingSpec) -> PastedCode:
    """General pasting: R prefixes act alone, the tails pair up diagonally."""
    p = check_pasting_spec(spec)
    n1, n2 = spec.s1.n, spec.s2.n
    n = n1 + n2
    rows = []
    for g in spec.s1.generators[: spec.split1]:
        rows.append(PauliWord(n, g.x_bits, g.z_bits))
    for g in spec.s2.generators[: spec.split2]:
        rows.append(PauliWord(n, g.x_bits << n1, g.z_bits << n1))
    for a, b in zip(spec.s1.generators[spec.split1:], spec.s2.generators[spec.split2:]):
        rows.append(PauliWord(n, a.x_bits | b.x_bits << n1, a.z_bits | b.z_bits << n1))
    code = validate(CodeFragment(n, tuple(rows)))
    expected_s = spec.split1 + spec.split2 + (p.l1 - p.k1)
    if code.s != expected_s or code.k != p.l1 + p.k2:
        raise ConstructionError("pasted parameters disagree with the theorem")
    return PastedCode(code, p)


# ---------------------------------------------------------------------------
# named recipes

def _five_a_code() -> StabilizerCode:
    return validate(FIVE_A)


def _five_b_code() -> StabilizerCode:
    return validate(FIVE_B)


def _power5_assignment(n: int) -> SyndromeAssignment:
    a = _assignment(FIVE_B)
    out = a
    for _ in range(n - 1):
        out = nest(a, out)
    return out


def _build_code10() -> StabilizerCode:
    return validate(materialize(nest(_assignment(FIVE_A), _assignment(SUB_2x2))))


def _build_code102() -> StabilizerCode:
    sub = two_copy_over_optimal(_five_a_code())
    return validate(materialize(nest(syndromes_of(SEED_1QUBIT), syndromes_of(sub))))


def _build_code15() -> StabilizerCode:
    return validate(materialize(nest(_assignment(FIVE_A), _assignment(SUB_3x2))))


def _build_code20() -> StabilizerCode:
    return validate(materialize(nest(_assignment(FIVE_B), _assignment(SUB_4x3))))


def _build_code2518() -> StabilizerCode:
    return validate(materialize(nest(_assignment(FIVE_A), _assignment(SUB_5x3))))


def _build_power5(n: int) -> StabilizerCode:
    if not 1 <= n <= 3:
        raise ConstructionError("power5 supports 1 <= n <= 3 (n <= 200 qubits)")
    return validate(materialize(_power5_assignment(n)))


def _build_power6x5(n: int) -> StabilizerCode:
    if not 1 <= n <= 2:
        raise ConstructionError("power6x5 supports 1 <= n <= 2 (n <= 200 qubits)")
    block = extend(_assignment(FIVE_B), SyndromeAssignment.zero(1, 4))
    return validate(materialize(nest(block, _power5_assignment(n))))


def _build_code30() -> StabilizerCode:
    b = _assignment(FIVE_B)
    full = nest(b, b)
    tail = nest(SyndromeAssignment.zero(1, 4), b)
    return validate(materialize(extend(full, tail)))


def _build_code35() -> StabilizerCode:
    # printed order: each block carries its five nested qubits then its
    # extra zero-sub qubit; the zero-block copy of the subcode comes last
    b = _assignment(FIVE_B)
    sx: List[int] = []
    sz: List[int] = []
    for i in range(5):
        for j in range(5):
            sx.append(b.sx[i] << 4 | b.sx[j])
            sz.append(b.sz[i] << 4 | b.sz[j])
        sx.append(b.sx[i] << 4)
        sz.append(b.sz[i] << 4)
    for j in range(5):
        sx.append(b.sx[j])
        sz.append(b.sz[j])
    return validate(materialize(SyndromeAssignment(35, 8, tuple(sx), tuple(sz))))


def _build_code16() -> StabilizerCode:
    return gottesman_2k(raw_perfect_constructing(_five_b_code()))


def _build_gottesman2k(k: int) -> StabilizerCode:
    if not 3 <= k <= 7:
        raise ConstructionError("gottesman2k supports 3 <= k <= 7 (n <= 200 qubits)")
    return gottesman_2k(_raw_perfect_fragment(k))


def _perfect_ingredient(k: int) -> Union[CodeFragment, StabilizerCode]:
    if k == 2:
        return SEED_1QUBIT
    if k == 4:
        return _five_b_code()
    return _build_perfect_recursion(2, k - 2)


def _build_perfect_recursion(k: int, kprime: int) -> StabilizerCode:
    if k % 2 or kprime % 2 or k < 2 or kprime < 2:
        raise ConstructionError("perfect codes need even k and k' >= 2")
    if k + kprime > 8:
        raise ConstructionError("perfect_recursion supports k + k' <= 8 (n <= 200 qubits)")
    return perfect_recursion(
        _perfect_ingredient(k), _raw_perfect_fragment(kprime), _perfect_ingredient(kprime)
    )


def _build_code37() -> StabilizerCode:
    nested = nest(_assignment(CODE_8_33_B), _assignment(SUB_4x2))
    full = extend(nested, _assignment(FRAG_5x7))
    code = validate(materialize(full))
    if not check_distance3(code):
        raise ConstructionError("37-qubit assembly failed the distance-3 check")
    return code


def _build_concat25() -> StabilizerCode:
    inner = _five_a_code()
    # transversal logicals (X and Z on every qubit) pin the printed layout
    xbar = PauliWord(5, 0b11111, 0)
    zbar = PauliWord(5, 0, 0b11111)
    logs = LogicalSet(((xbar, zbar),))
    result = nest_all_distance(
        FIVE_A, [inner] * 5, logicals=[logs] * 5, subcode_distances=[3] * 5
    )
    if result.claimed_distance != 9:
        raise ConstructionError("expected a distance >= 9 claim")
    return result.code


@dataclass(frozen=True)
class RecipeInfo:
    """Builder plus the advertised [n, k, d] (d None for claims beyond 3)."""

    builder: object
    params: Tuple[str, ...]
    describe: str


RECIPES: Dict[str, RecipeInfo] = {
    "code10": RecipeInfo(_build_code10, (), "[10,4,3]: five-qubit block over the {2,2} subcode"),
    "code102": RecipeInfo(_build_code102, (), "[10,4,3]: two rotated copies of a [5,1,3] under (1|0),(0|1)"),
    "code15": RecipeInfo(_build_code15, (), "[15,9,3]: five-qubit block over the {3,2} subcode"),
    "code20": RecipeInfo(_build_code20, (), "[20,13,3]: five-qubit block over the {4,3} subcode"),
    "code2517": RecipeInfo(lambda: _build_power5(2), (), "[25,17,3]: five-qubit code nested with itself"),
    "code2518": RecipeInfo(_build_code2518, (), "[25,18,3]: five-qubit block over the {5,3} subcode"),
    "code30": RecipeInfo(_build_code30, (), "[30,22,3]: 25-qubit nest extended by the zero-syndrome block"),
    "code35": RecipeInfo(_build_code35, (), "[35,27,3]: 30-qubit form plus per-block zero-sub qubits"),
    "code16": RecipeInfo(_build_code16, (), "[16,10,3]: raw perfect-constructing triple under (1|0),(0|1)"),
    "code37": RecipeInfo(_build_code37, (), "[37,30,3]: [8,3] block over {4,2} with the {5,7} rider"),
    "power5": RecipeInfo(_build_power5, ("n",), "[5^n, 5^n-4n, 3] tower"),
    "power6x5": RecipeInfo(_build_power6x5, ("n",), "[6*5^n, 6*5^n-4(n+1), 3] tower"),
    "gottesman2k": RecipeInfo(_build_gottesman2k, ("k",), "[2^k, 2^k-k-2, 3] family"),
    "perfect_recursion": RecipeInfo(
        _build_perfect_recursion, ("k", "kprime"), "[(2^(k+k')-1)/3, .-(k+k'), 3] perfect code"
    ),
    "concat_25_1_9": RecipeInfo(_build_concat25, (), "[25,1] concatenated five-qubit code, d >= 9"),
}


def construct_named(recipe: str, **params: int) -> StabilizerCode:
    """Build a named recipe; parameter names must match the recipe exactly."""
    info = RECIPES.get(recipe)
    if info is None:
        raise ConstructionError("unknown recipe %r" % recipe)
    expected = set(info.params)
    if set(params) != expected:
        raise ConstructionError(
            "recipe %r takes parameters %s" % (recipe, sorted(expected) or "none")
        )
    return info.builder(**params)
