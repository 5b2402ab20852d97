"""Tagged CSV/JSON tables, alpha files and OEIS b-files.

Every emitted file starts with a kind tag, ``# plethys:<kind>:<version>`` in
CSV and a top-level ``"plethys": "<kind>:<version>"`` field in JSON, so an
alpha consumer can refuse, say, a coefficient table.
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction

import mpmath
from mpmath import libmp

from .errors import InputError

FORMAT_VERSION = 1
_TAG_RE = re.compile(r"^#\s*plethys:([a-z0-9_]+):(\d+)\s*$")


def tag_line(kind: str) -> str:
    return f"# plethys:{kind}:{FORMAT_VERSION}"


def format_scalar(v) -> str:
    """Exact text for rationals, shortest round-trip text for floats."""
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, mpmath.mpf):
        return mpmath.nstr(v, libmp.repr_dps(v.context.prec), strip_zeros=True)
    if isinstance(v, mpmath.mpc):
        raise TypeError("split complex values into re/im columns before formatting")
    if isinstance(v, complex):
        raise TypeError("split complex values into re/im columns before formatting")
    return str(v)


def split_complex(v) -> tuple:
    if isinstance(v, complex):
        return v.real, v.imag
    if isinstance(v, mpmath.mpc):
        return v.real, v.imag
    return v, 0


def render(kind: str, columns, rows, fmt: str = "csv") -> str:
    rows = [[format_scalar(v) for v in row] for row in rows]
    if fmt == "json":
        doc = {"plethys": f"{kind}:{FORMAT_VERSION}", "columns": list(columns), "rows": rows}
        return json.dumps(doc, indent=1) + "\n"
    if fmt != "csv":
        raise InputError(f"unknown output format {fmt!r}")
    buf = io.StringIO()
    buf.write(tag_line(kind) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    return buf.getvalue()


def read_table(text: str) -> tuple[str | None, list[str], list[list[str]]]:
    """Parse a tagged CSV or JSON table into (kind, columns, rows)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON table: {exc}") from exc
        tag = doc.get("plethys")
        kind = tag.split(":")[0] if isinstance(tag, str) else None
        return kind, list(doc.get("columns", [])), [list(map(str, r)) for r in doc.get("rows", [])]
    lines = text.splitlines()
    kind = None
    if lines and lines[0].startswith("#"):
        m = _TAG_RE.match(lines[0].strip())
        kind = m.group(1) if m else None
        lines = lines[1:]
    reader = list(csv.reader(lines))
    if not reader:
        return kind, [], []
    return kind, reader[0], reader[1:]


def parse_alpha_list(text: str) -> list:
    """Inline JSON list of alphas; numbers keep their exact decimal text."""
    try:
        values = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed alpha list {text!r}: {exc}") from exc
    if not isinstance(values, list):
        raise InputError("alpha list must be a JSON array")
    for v in values:
        if not isinstance(v, (int, str)) or isinstance(v, bool):
            raise InputError(f"unsupported alpha entry {v!r}")
    return values


def load_alphas_file(path) -> list:
    """Read alpha values from a tagged alphas table or a bare JSON array."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if text.lstrip().startswith("["):
        return parse_alpha_list(text)
    kind, columns, rows = read_table(text)
    if kind != "alphas":
        found = kind or "an untagged table"
        raise InputError(f"{path}: expected an alphas file, found {found}")
    if columns[:2] == ["k", "alpha"]:
        return [r[1] for r in rows]
    if columns[:3] == ["k", "re", "im"]:
        return [f"{r[1]}{'+' if not r[2].startswith('-') else ''}{r[2]}j" for r in rows]
    raise InputError(f"{path}: unrecognised alphas columns {columns}")


def parse_bfile(path) -> dict[int, int]:
    """OEIS b-file: ``index value`` per line, '#' comments and blanks ignored."""
    out = {}
    try:
        fh = open(path)
    except OSError as exc:
        raise InputError(f"cannot read b-file {path}: {exc}") from exc
    with fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) < 2:
                raise InputError(f"{path}:{lineno}: expected 'index value'")
            try:
                out[int(parts[0])] = int(parts[1])
            except ValueError as exc:
                raise InputError(f"{path}:{lineno}: non-integer entry") from exc
    return out


def compare_bfile(ours: list[int], reference: dict[int, int]) -> list[tuple]:
    """Per-term (j, ours, theirs, status); status is match, sign, mismatch or missing.

    ``sign`` marks theirs == -ours (a convention difference), which is
    reported rather than corrected.
    """
    rows = []
    for j, b in enumerate(ours):
        theirs = reference.get(j)
        if theirs is None:
            status = "missing"
        elif theirs == b:
            status = "match"
        elif theirs == -b:
            status = "sign"
        else:
            status = "mismatch"
        rows.append((j, b, theirs, status))
    return rows
