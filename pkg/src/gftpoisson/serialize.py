"""Canonical JSON and CSV emission.

Floats are printed with 17 significant digits so that parse-and-reprint is
byte-identical; dict key order is insertion order; indentation is fixed at
two spaces.  Non-finite floats use the same spellings the json module accepts
(Infinity, -Infinity, NaN).
"""

from __future__ import annotations

import math


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    if x == 0:
        return "0"   # normalize -0.0 so the round trip stays stable
    return "%.17g" % x


def _write(obj, indent: int, out: list) -> None:
    pad = "  " * indent
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(fmt_float(obj))
    elif isinstance(obj, str):
        out.append('"' + obj.translate(_ESCAPES) + '"')
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(",\n")
            out.append(pad + '  "' + str(key).translate(_ESCAPES) + '": ')
            _write(value, indent + 1, out)
        out.append("\n" + pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, value in enumerate(obj):
            if i:
                out.append(",\n")
            out.append(pad + "  ")
            _write(value, indent + 1, out)
        out.append("\n" + pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


_ESCAPES = {ord('"'): '\\"', ord("\\"): "\\\\", ord("\n"): "\\n",
            ord("\r"): "\\r", ord("\t"): "\\t"}
for _cp in range(0x20):
    _ESCAPES.setdefault(_cp, "\\u%04x" % _cp)


def dumps_canonical(obj) -> str:
    out: list = []
    _write(obj, 0, out)
    return "".join(out)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt_float(value)
    return str(value)


def rows_to_csv(header: list, rows: list) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_csv_cell(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def dict_to_human(d: dict) -> str:
    width = max(len(str(k)) for k in d)
    lines = []
    for k, v in d.items():
        if isinstance(v, (list, tuple)):
            v = "[" + ", ".join(_csv_cell(x) for x in v) + "]"
        else:
            v = _csv_cell(v)
        lines.append(f"{str(k).ljust(width)}  {v}")
    return "\n".join(lines) + "\n"
