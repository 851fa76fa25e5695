"""Plain-text family files.

Grammar (whitespace between tokens is ignored)::

    group: n1,n2,...,nr
    set: (a1,...,ar),(b1,...,br),...
    set: ...

Element tuples are parenthesized even for a single cyclic factor.  Residues
out of range are reduced modulo the factors, with a warning collected for the
caller.  Serializing a parsed canonical file reproduces it byte for byte.
"""

from __future__ import annotations

import re

from sedf.groups import AbelianGroup, make_group
from sedf.verifier import Family, make_family


class FamilyParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


_TUPLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_ints(text: str, line_no: int, what: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise FamilyParseError(line_no, f"empty {what}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FamilyParseError(line_no, f"malformed {what}: {text!r}") from None


def parse_family_text(text: str) -> tuple[AbelianGroup, list[list[tuple[int, ...]]], list[str]]:
    """Parse file contents; returns (group, raw sets, warnings)."""
    group: AbelianGroup | None = None
    sets: list[list[tuple[int, ...]]] = []
    warnings: list[str] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip().lower()
        if key == "group":
            if group is not None:
                raise FamilyParseError(line_no, "duplicate group line")
            factors = _parse_ints(rest, line_no, "group factor list")
            try:
                group = make_group(factors)
            except ValueError as exc:
                raise FamilyParseError(line_no, str(exc)) from None
        elif key == "set":
            if group is None:
                raise FamilyParseError(line_no, "set line before group line")
            body = rest.replace(" ", "").replace("\t", "")
            matches = list(_TUPLE_RE.finditer(body))
            if not matches:
                raise FamilyParseError(line_no, "no elements on set line")
            leftover = _TUPLE_RE.sub("", body).replace(",", "")
            if leftover:
                raise FamilyParseError(line_no, f"unexpected text {leftover!r} on set line")
            elements = []
            for mt in matches:
                coords = _parse_ints(mt.group(1), line_no, "element tuple")
                if len(coords) != len(group.factors):
                    raise FamilyParseError(
                        line_no,
                        f"element {tuple(coords)} has {len(coords)} coordinates, "
                        f"group has {len(group.factors)}",
                    )
                reduced = group.reduce(tuple(coords))
                if reduced != tuple(coords):
                    warnings.append(
                        f"line {line_no}: element {tuple(coords)} reduced to {reduced}"
                    )
                elements.append(reduced)
            sets.append(elements)
        else:
            raise FamilyParseError(line_no, f"unrecognized line {line!r}")
    if group is None:
        raise FamilyParseError(1, "missing group line")
    if not sets:
        raise FamilyParseError(1, "no set lines")
    return group, sets, warnings


def load_family(path) -> tuple[Family, list[str]]:
    """Read and validate a family file; raises FamilyParseError / FamilyError."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    group, sets, warnings = parse_family_text(text)
    return make_family(group, sets), warnings


def serialize_family(fam: Family) -> str:
    lines = ["group: " + ",".join(str(n) for n in fam.group.factors)]
    for s in fam.sets:
        lines.append("set: " + ",".join("(" + ",".join(str(c) for c in x) + ")" for x in s))
    return "\n".join(lines) + "\n"


def save_family(fam: Family, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_family(fam))
