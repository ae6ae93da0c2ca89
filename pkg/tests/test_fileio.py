import io

import pytest

from qnest.catalog import entries
from qnest.fileio import (
    CodeFileError,
    parse_code_text,
    read_code_file,
    render_code_text,
    write_code_file,
)

SAMPLE = """# format-version: 1
# name: toy
# distance: 3
XZZXI
IXZZX
"""


def test_parse_text_with_metadata():
    frag, meta = parse_code_text(SAMPLE)
    assert frag.n == 5 and frag.s == 2
    assert meta["name"] == "toy"
    assert meta["distance"] == "3"


def test_parse_binary_body():
    frag, _ = parse_code_text("# format-version: 1\n10010|01100\n01001|00110\n")
    letters, _ = parse_code_text("# format-version: 1\nXZZXI\nIXZZX\n")
    assert frag.rows == letters.rows


def test_reject_missing_format_version():
    with pytest.raises(CodeFileError):
        parse_code_text("XZZXI\n")


def test_reject_empty_body():
    with pytest.raises(CodeFileError) as err:
        parse_code_text("# format-version: 1\n# name: empty\n")
    assert "no generator rows" in str(err.value)


def test_reject_mixed_styles():
    text = "# format-version: 1\nXZZXI\n10010|01100\n"
    with pytest.raises(CodeFileError) as err:
        parse_code_text(text, source="mixed.code")
    assert "mixed.code:3" in str(err.value)


def test_reject_bad_row_with_line_number():
    text = "# format-version: 1\nXZZXI\nXZQXI\n"
    with pytest.raises(CodeFileError) as err:
        parse_code_text(text, source="bad.code")
    assert "bad.code:3" in str(err.value)


def test_reject_ragged_rows():
    text = "# format-version: 1\nXZZXI\nXX\n"
    with pytest.raises(CodeFileError) as err:
        parse_code_text(text)
    assert "expected 5" in str(err.value)


def test_write_read_identity(tmp_path):
    frag, meta = parse_code_text(SAMPLE)
    path = str(tmp_path / "toy.code")
    write_code_file(path, frag, meta, style="binary")
    back, meta2 = read_code_file(path)
    assert back.rows == frag.rows
    assert meta2["name"] == "toy"


def test_stream_round_trip():
    frag, meta = parse_code_text(SAMPLE)
    buf = io.StringIO()
    write_code_file(buf, frag, meta)
    again, _ = parse_code_text(buf.getvalue())
    assert again.rows == frag.rows


def test_constructed_codes_round_trip(tmp_path):
    from qnest.constructions import construct_named

    for recipe in ("code10", "code37", "concat_25_1_9"):
        frag = construct_named(recipe).fragment()
        path = str(tmp_path / (recipe + ".code"))
        write_code_file(path, frag, {"name": recipe}, style="binary")
        back, _ = read_code_file(path)
        assert back.rows == frag.rows


def test_catalog_entries_round_trip_byte_exact():
    # write -> read -> write in binary style reproduces identical bytes
    for entry in entries():
        if entry.kind == "syndromes":
            continue
        frag, meta = parse_code_text(entry.text(), source=entry.id)
        first = render_code_text(frag, meta, style="binary")
        frag2, meta2 = parse_code_text(first, source=entry.id)
        assert frag2.rows == frag.rows
        assert render_code_text(frag2, meta2, style="binary") == first
