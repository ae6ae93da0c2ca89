import random

import pytest

from qnest.symplectic import (
    PauliFormatError,
    PauliWord,
    QubitPartition,
    block_weight,
    format_pauli_word,
    gf2_rank,
    in_row_space,
    parse_pauli_word,
    symplectic_product,
    weight,
)

FIVE_A = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]


def words(rows):
    return [parse_pauli_word(r) for r in rows]


def tuple_rank(rows):
    """Independent rank oracle: Gaussian elimination on 0/1 tuples."""
    mat = [
        [w.x_bits >> i & 1 for i in range(w.n)] + [w.z_bits >> i & 1 for i in range(w.n)]
        for w in rows
    ]
    rank = 0
    cols = 2 * rows[0].n
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                mat[r] = [(a + b) % 2 for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def test_parse_letters():
    w = parse_pauli_word("YZ")
    assert (w.n, w.x_bits, w.z_bits) == (2, 0b01, 0b11)
    assert parse_pauli_word("II") == PauliWord(2, 0, 0)
    assert parse_pauli_word(" X Z ") == parse_pauli_word("XZ")


def test_parse_binary_matches_letter_map():
    # letter map applied qubit by qubit: (1,0)X (0,1)Z (0,1)Z (1,0)X (0,0)I
    assert parse_pauli_word("10010|01100") == parse_pauli_word("XZZXI")
    assert parse_pauli_word("01010|10001") == parse_pauli_word("ZXIXZ")


def test_parse_rejects_bad_input():
    with pytest.raises(PauliFormatError):
        parse_pauli_word("XZ0Y")  # mixed alphabets
    with pytest.raises(PauliFormatError):
        parse_pauli_word("ABC")
    with pytest.raises(PauliFormatError):
        parse_pauli_word("10|1")  # half length mismatch
    with pytest.raises(PauliFormatError):
        parse_pauli_word("1|0|1")
    with pytest.raises(PauliFormatError):
        parse_pauli_word("")
    with pytest.raises(PauliFormatError):
        parse_pauli_word("102|010")
    with pytest.raises(PauliFormatError):
        parse_pauli_word("XZ", n_hint=3)


def test_format_styles():
    w = PauliWord(2, 0b01, 0b11)
    assert format_pauli_word(w) == "YZ"
    assert format_pauli_word(w, "binary") == "10|11"
    with pytest.raises(ValueError):
        format_pauli_word(w, "octal")


def test_round_trip_exhaustive_small():
    for n in (1, 2, 3):
        for x in range(2 ** n):
            for z in range(2 ** n):
                w = PauliWord(n, x, z)
                assert parse_pauli_word(format_pauli_word(w)) == w
                assert parse_pauli_word(format_pauli_word(w, "binary")) == w


def test_round_trip_randomized():
    rng = random.Random(20240817)
    for _ in range(300):
        n = rng.randint(4, 8)
        w = PauliWord(n, rng.randrange(2 ** n), rng.randrange(2 ** n))
        assert parse_pauli_word(format_pauli_word(w)) == w
        assert parse_pauli_word(format_pauli_word(w, "binary")) == w


def test_symplectic_product_basics():
    assert symplectic_product(parse_pauli_word("XI"), parse_pauli_word("ZI")) == 1
    rows = words(FIVE_A)
    for i in range(4):
        for j in range(4):
            assert symplectic_product(rows[i], rows[j]) == 0
    assert symplectic_product(parse_pauli_word("YZ"), parse_pauli_word("XY")) == 0
    with pytest.raises(ValueError):
        symplectic_product(parse_pauli_word("X"), parse_pauli_word("XX"))


def test_symplectic_product_symmetric_bilinear():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 8)
        p, q, r = (PauliWord(n, rng.randrange(2 ** n), rng.randrange(2 ** n)) for _ in range(3))
        assert symplectic_product(p, q) == symplectic_product(q, p)
        assert symplectic_product(p * r, q) == (
            symplectic_product(p, q) ^ symplectic_product(r, q)
        )


def test_rank_examples():
    rows = words(FIVE_A)
    assert gf2_rank(rows) == 4 == tuple_rank(rows)
    assert gf2_rank(rows + [rows[2]]) == 4
    dependent = [PauliWord(2, 0b01, 0), PauliWord(2, 0b10, 0), PauliWord(2, 0b11, 0)]
    assert gf2_rank(dependent) == 2 == tuple_rank(dependent)
    assert gf2_rank([]) == 0


def test_rank_combination_invariant():
    rng = random.Random(99)
    for _ in range(50):
        n = rng.randint(2, 6)
        rows = [PauliWord(n, rng.randrange(2 ** n), rng.randrange(2 ** n)) for _ in range(4)]
        base = gf2_rank(rows)
        assert base <= min(len(rows), 2 * n)
        combo = rows[0]
        for w in rows[1:]:
            if rng.random() < 0.5:
                combo = combo * w
        assert gf2_rank(rows + [combo]) == base


def test_in_row_space():
    rows = words(FIVE_A)
    assert in_row_space(rows[0] * rows[1], rows)
    assert in_row_space(PauliWord(5, 0, 0), rows)
    rep = words(["ZZI", "IZZ"])
    assert not in_row_space(parse_pauli_word("ZII"), rep)


def test_block_weight():
    w = parse_pauli_word("XIIII")
    assert block_weight(w, QubitPartition((5,))) == 1
    assert block_weight(w, QubitPartition.singletons(5)) == 1
    assert block_weight(parse_pauli_word("XYIII"), QubitPartition.singletons(5)) == 2
    assert block_weight(parse_pauli_word("XXIIIII"), QubitPartition((2, 5))) == 1
    with pytest.raises(ValueError):
        block_weight(w, QubitPartition((2, 2)))


def test_block_weight_singletons_equal_weight():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 8)
        w = PauliWord(n, rng.randrange(2 ** n), rng.randrange(2 ** n))
        assert block_weight(w, QubitPartition.singletons(n)) == weight(w)
