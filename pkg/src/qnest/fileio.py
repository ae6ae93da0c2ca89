"""Plain-text code files: `# key: value` headers, one generator row per line.

A file must declare `format-version: 1`, may carry arbitrary metadata
headers, and holds its rows in a single style (letters or binary).  Letter
rows are the display form; binary rows are the canonical interchange form.
"""

from __future__ import annotations

from typing import Dict, TextIO, Tuple, Union

from .stabilizer import CodeFragment
from .symplectic import PauliFormatError, format_pauli_word, parse_pauli_word

FORMAT_VERSION = "1"


class CodeFileError(ValueError):
    """Raised on malformed code files; message carries the line number."""


def _row_style(line: str) -> str:
    return "binary" if ("|" in line or set(line) <= {"0", "1"}) else "letters"


def parse_code_text(text: str, source: str = "<text>") -> Tuple[CodeFragment, Dict[str, str]]:
    meta: Dict[str, str] = {}
    rows = []
    style = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, value = body.split(":", 1)
                meta[key.strip()] = value.strip()
            continue
        this_style = _row_style(line)
        if style is None:
            style = this_style
        elif style != this_style:
            raise CodeFileError(
                "%s:%d: mixed row styles (%s file, %s row)" % (source, lineno, style, this_style)
            )
        try:
            word = parse_pauli_word(line)
        except PauliFormatError as exc:
            raise CodeFileError("%s:%d: %s" % (source, lineno, exc)) from exc
        rows.append((lineno, word))
    if meta.get("format-version") != FORMAT_VERSION:
        raise CodeFileError("%s: missing or unsupported format-version header" % source)
    if not rows:
        raise CodeFileError("%s: no generator rows" % source)
    n = rows[0][1].n
    for lineno, word in rows:
        if word.n != n:
            raise CodeFileError(
                "%s:%d: row has %d qubits, expected %d" % (source, lineno, word.n, n)
            )
    return CodeFragment(n, tuple(w for _, w in rows)), meta


def read_code_file(path_or_fp: Union[str, TextIO]) -> Tuple[CodeFragment, Dict[str, str]]:
    """Read one fragment plus its `# key: value` metadata."""
    if isinstance(path_or_fp, str):
        with open(path_or_fp, "r", encoding="utf-8") as fp:
            return parse_code_text(fp.read(), source=path_or_fp)
    name = getattr(path_or_fp, "name", "<stream>")
    return parse_code_text(path_or_fp.read(), source=name)


def render_code_text(
    fragment: CodeFragment, meta: Dict[str, str] | None = None, style: str = "letters"
) -> str:
    lines = ["# format-version: %s" % FORMAT_VERSION]
    for key, value in (meta or {}).items():
        if key == "format-version":
            continue
        lines.append("# %s: %s" % (key, value))
    for row in fragment.rows:
        lines.append(format_pauli_word(row, style))
    return "\n".join(lines) + "\n"


def write_code_file(
    path_or_fp: Union[str, TextIO],
    fragment: CodeFragment,
    meta: Dict[str, str] | None = None,
    style: str = "letters",
) -> None:
    text = render_code_text(fragment, meta, style)
    if isinstance(path_or_fp, str):
        with open(path_or_fp, "w", encoding="utf-8") as fp:
            fp.write(text)
    else:
        path_or_fp.write(text)
