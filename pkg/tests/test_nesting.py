import random
from fractions import Fraction

import pytest

from qnest.nesting import (
    SyndromeAssignment,
    cross_commutation_ok,
    extend,
    materialize,
    nest,
    rotate,
    strong_constraints,
    syndromes_of,
)
from qnest.stabilizer import (
    CodeFragment,
    check_distance3,
    single_error_syndrome_table,
    using_rate,
    validate,
)
from qnest.symplectic import format_pauli_word, parse_pauli_word, symplectic_product

EQ1 = CodeFragment.from_rows(["10|11", "11|01"])
EQ3 = CodeFragment.from_rows(["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
EQ8 = CodeFragment.from_rows(["XIZZY", "ZXIZX", "ZZYIY", "IZZYX"])


def random_fragment(rng, max_n=6, max_s=4):
    n = rng.randint(1, max_n)
    s = rng.randint(1, max_s)
    rows = [
        parse_pauli_word(
            format(rng.randrange(2 ** n), "0%db" % n)
            + "|"
            + format(rng.randrange(2 ** n), "0%db" % n)
        )
        for _ in range(s)
    ]
    return CodeFragment(n, tuple(rows))


def test_syndromes_of_columns():
    a = syndromes_of(EQ3)
    assert a.sx[0] == 0b0001
    assert a.sz[0] == 0b1010
    single = syndromes_of(CodeFragment.from_rows(["X"]))
    assert single.sx == (0,) and single.sz == (1,)


def test_round_trip_materialize_syndromes():
    from qnest.catalog import get_entry

    rng = random.Random(3)
    code10 = get_entry("code10").fragment()
    for frag in (EQ1, EQ3, EQ8, code10, *(random_fragment(rng) for _ in range(50))):
        assert materialize(syndromes_of(frag)).rows == frag.rows


def test_assignment_validation():
    with pytest.raises(ValueError):
        SyndromeAssignment(2, 2, (0b100, 0), (0, 0))  # value wider than s bits
    with pytest.raises(ValueError):
        SyndromeAssignment(2, 2, (0,), (0, 0))


def test_nest_shapes_and_order():
    nested = nest(syndromes_of(EQ3), syndromes_of(EQ1))
    assert (nested.n, nested.s) == (10, 6)
    rows = [format_pauli_word(r) for r in materialize(nested).rows]
    assert rows[0] == "XXZZZZXXII"  # block letters repeat sub.n times
    assert rows[4] == "YZYZYZYZYZ"  # sub rows tile across blocks
    code = validate(materialize(nested))
    assert (code.n, code.k) == (10, 4)
    assert check_distance3(code)


def test_nest_identity_sub():
    block = syndromes_of(EQ8)
    one = SyndromeAssignment(1, 0, (0,), (0,))
    assert nest(block, one) == block


def test_nest_syndrome_concatenation():
    block, sub = syndromes_of(EQ8), syndromes_of(EQ1)
    nested = nest(block, sub)
    for i in range(block.n):
        for j in range(sub.n):
            q = i * sub.n + j
            assert nested.sx[q] == block.sx[i] << sub.s | sub.sx[j]
            assert nested.sz[q] == block.sz[i] << sub.s | sub.sz[j]
            assert nested.sy(q) == block.sy(i) << sub.s | sub.sy(j)


def test_extend():
    a, b = syndromes_of(EQ3), syndromes_of(EQ8)
    joined = extend(a, b)
    assert joined.n == 10 and joined.sx == a.sx + b.sx
    assert extend(a, SyndromeAssignment.empty(4)) == a
    with pytest.raises(ValueError):
        extend(a, syndromes_of(EQ1))


def test_rotate_is_order_three():
    a = syndromes_of(EQ3)
    assert rotate(rotate(rotate(a))) == a
    r = rotate(a)
    assert r.sx == tuple(a.sy(q) for q in range(a.n))
    assert r.sz == a.sx


def test_cross_commutation_examples():
    assert cross_commutation_ok(EQ3, EQ1)
    assert cross_commutation_ok(EQ8, EQ8)
    block = CodeFragment.from_rows(["XI"])
    sub = CodeFragment.from_rows(["ZI"])
    assert not cross_commutation_ok(block, sub)


def test_cross_commutation_matches_nested_products():
    rng = random.Random(41)
    for _ in range(100):
        block = random_fragment(rng)
        sub = random_fragment(rng)
        nested = materialize(nest(syndromes_of(block), syndromes_of(sub)))
        block_rows = nested.rows[: block.s]
        sub_rows = nested.rows[block.s:]
        all_zero = True
        for i, brow in enumerate(block.rows):
            for j, srow in enumerate(sub.rows):
                expected = (
                    (brow.x_bits.bit_count() & 1) & (srow.z_bits.bit_count() & 1)
                ) ^ ((brow.z_bits.bit_count() & 1) & (srow.x_bits.bit_count() & 1))
                got = symplectic_product(block_rows[i], sub_rows[j])
                assert got == expected
                all_zero &= expected == 0
        assert cross_commutation_ok(block, sub) == bool(all_zero)


def test_internal_commutation_scaling():
    rng = random.Random(42)
    for _ in range(60):
        block = random_fragment(rng)
        sub = random_fragment(rng)
        nested = materialize(nest(syndromes_of(block), syndromes_of(sub)))
        block_rows = nested.rows[: block.s]
        sub_rows = nested.rows[block.s:]
        for i in range(block.s):
            for j in range(block.s):
                assert symplectic_product(block_rows[i], block_rows[j]) == (
                    sub.n * symplectic_product(block.rows[i], block.rows[j])
                ) % 2
        for i in range(sub.s):
            for j in range(sub.s):
                assert symplectic_product(sub_rows[i], sub_rows[j]) == (
                    block.n * symplectic_product(sub.rows[i], sub.rows[j])
                ) % 2


def test_syndrome_tensor_law_on_nests():
    for block, sub in ((EQ3, EQ1), (EQ8, EQ8), (EQ3, EQ8)):
        ab, asub = syndromes_of(block), syndromes_of(sub)
        code = validate(materialize(nest(ab, asub)))
        table = {label: s.bits for label, s in single_error_syndrome_table(code)}
        for letter in "XZY":
            for i in range(ab.n):
                for j in range(asub.n):
                    q = i * asub.n + j + 1
                    btab = {"X": ab.sx[i], "Z": ab.sz[i], "Y": ab.sy(i)}
                    stab = {"X": asub.sx[j], "Z": asub.sz[j], "Y": asub.sy(j)}
                    assert table["%s%d" % (letter, q)] == btab[letter] << asub.s | stab[letter]


def test_using_rate_product_law():
    for block, sub in ((EQ3, EQ1), (EQ3, EQ8), (EQ8, EQ8)):
        g_nested = using_rate(block.n * sub.n, block.s + sub.s, 1)
        g_block = using_rate(block.n, block.s, 1)
        g_sub = using_rate(sub.n, sub.s, 1)
        assert g_nested == Fraction(1, 3) * g_block * g_sub


def test_strong_constraints_parities():
    con = strong_constraints(EQ3)
    assert con.left_row_parities == (0, 0, 0, 0)
    assert con.right_row_parities == (0, 0, 0, 0)
    con8 = strong_constraints(EQ8)
    assert con8.left_row_parities == (0, 0, 0, 0)
    # right halves 00111, 10010, 11101, 01110 have weights 3, 2, 4, 3
    assert con8.right_row_parities == (1, 0, 0, 1)
    assert not con8.any_forbidden


def test_strong_constraints_forbidden_flags():
    frag = CodeFragment.from_rows(["XXXX"])
    con = strong_constraints(frag)
    assert con.all_x_in_span and not con.all_z_in_span and not con.all_y_in_span
    frag2 = CodeFragment.from_rows(["XXXX", "ZZZZ"])
    con2 = strong_constraints(frag2)
    assert con2.all_x_in_span and con2.all_z_in_span and con2.all_y_in_span


def test_distinct_syndrome_criterion_gives_distance3():
    # blocks with all 15 syndromes distinct, subs with internally distinct
    # X/Z/Y lists: the nest always verifies at distance 3
    SUB_3x2 = CodeFragment.from_rows(["100|110", "110|010"])
    SUB_4x3 = CodeFragment.from_rows(["1001|0010", "0101|1011", "0011|0101"])
    SUB_5x3 = CodeFragment.from_rows(["10011|00110", "01001|11010", "00111|01000"])
    for block, sub in (
        (EQ3, EQ1), (EQ3, SUB_3x2), (EQ8, SUB_4x3), (EQ3, SUB_5x3), (EQ8, EQ8),
    ):
        code = validate(materialize(nest(syndromes_of(block), syndromes_of(sub))))
        assert check_distance3(code)
