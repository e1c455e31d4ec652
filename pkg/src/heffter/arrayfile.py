"""Reading and writing arrays as JSON (canonical) or signed-integer CSV."""
from __future__ import annotations

import json
from pathlib import Path

from .constructions import NzsArray
from .modcore import ModulusContext


class MalformedArrayFile(ValueError):
    pass


def to_dict(A: NzsArray) -> dict:
    return {
        "header": {"n": A.shape[1], "t": A.ctx.t, "v": A.v, "provenance": A.provenance},
        "rows": A.signed_rows(),
    }


def dumps_json(A: NzsArray) -> str:
    return json.dumps(to_dict(A), sort_keys=True) + "\n"


def dumps_csv(A: NzsArray) -> str:
    m, n = A.shape
    lines = [f"# n={n} t={A.ctx.t} v={A.v} provenance={A.provenance}"]
    for row in A.signed_rows():
        lines.append(",".join("" if c is None else str(c) for c in row))
    return "\n".join(lines) + "\n"


def from_dict(d: dict) -> NzsArray:
    try:
        header = d["header"]
        t, v = int(header["t"]), int(header["v"])
        rows = d["rows"]
        if not rows or not all(isinstance(r, list) for r in rows):
            raise MalformedArrayFile("rows must be a nonempty list of lists")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise MalformedArrayFile("rows have different lengths")
        if "n" in header and int(header["n"]) != ncols:
            raise MalformedArrayFile(f"header says n={header['n']} but rows have {ncols} cells")
        cells = []
        for r in rows:
            for c in r:
                if c is not None and (not isinstance(c, int) or isinstance(c, bool)):
                    raise MalformedArrayFile(f"cell {c!r} is not an integer or null")
            cells.append(tuple(r))
        ctx = ModulusContext.from_modulus(v, t, ncols)
    except MalformedArrayFile:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedArrayFile(str(e)) from e
    return NzsArray(ctx, tuple(cells), str(header.get("provenance", "external")))


def loads_json(text: str) -> NzsArray:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedArrayFile(f"invalid JSON: {e}") from e
    if not isinstance(d, dict):
        raise MalformedArrayFile("top-level JSON value must be an object")
    return from_dict(d)


def loads_csv(text: str) -> NzsArray:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#"):
        raise MalformedArrayFile("CSV must start with a '# n=.. t=.. v=..' comment line")
    try:
        header = dict(tok.split("=", 1) for tok in lines[0][1:].split())
        rows = [[None if c.strip() == "" else int(c) for c in ln.split(",")]
                for ln in lines[1:]]
    except ValueError as e:
        raise MalformedArrayFile(f"bad CSV: {e}") from e
    return from_dict({"header": header, "rows": rows})


def loads(text: str) -> NzsArray:
    return loads_csv(text) if text.lstrip().startswith("#") else loads_json(text)


def read(path: str | Path) -> NzsArray:
    return loads(Path(path).read_text(encoding="utf-8"))


def write(A: NzsArray, path: str | Path, fmt: str = "json") -> None:
    text = dumps_json(A) if fmt == "json" else dumps_csv(A)
    Path(path).write_text(text, encoding="utf-8")
