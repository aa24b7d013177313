"""Reading and writing group files, subgroup files, graphs and JSON reports.

Group file::

    # comment
    degree: 11
    gens:
    (1,2,3,4,5,6,7,8,9,10,11)
    [1,2,7,10,6,4,11,3,9,5,8]

A subgroup file has the same shape plus a ``parent: <path>`` header, the path
being relative to the subgroup file. Optional ``order:`` and ``name:`` headers
are checked when present.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .perm import Permutation, PermutationGroup, Subgroup, parse_permutation

__all__ = [
    "GroupFile",
    "GroupFileError",
    "parse_group_text",
    "read_group_file",
    "read_subgroup_file",
    "format_group_file",
    "write_adjacency",
    "fraction_str",
    "parse_fraction",
    "decimal3",
]


class GroupFileError(ValueError):
    """A group or subgroup file could not be parsed; the message names the line."""


@dataclass
class GroupFile:
    degree: int
    generators: list[Permutation]
    headers: dict = field(default_factory=dict)
    path: Path | None = None

    @property
    def name(self) -> str | None:
        return self.headers.get("name")

    @property
    def order(self) -> int | None:
        return int(self.headers["order"]) if "order" in self.headers else None


def parse_group_text(text: str, source: str = "<text>") -> GroupFile:
    headers: dict = {}
    gens: list[Permutation] = []
    in_gens = False
    degree = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{lineno}"
        if in_gens and line[0] in "([":
            try:
                gens.append(parse_permutation(line, degree))
            except ValueError as exc:
                raise GroupFileError(f"{where}: {exc}") from None
            continue
        if ":" not in line:
            raise GroupFileError(f"{where}: expected 'key: value' or a permutation, got {line!r}")
        key, _, value = line.partition(":")
        key, value = key.strip().lower(), value.strip()
        if key == "gens":
            if degree is None:
                raise GroupFileError(f"{where}: 'gens:' must follow 'degree:'")
            in_gens = True
            if value:
                raise GroupFileError(f"{where}: permutations go on the lines after 'gens:'")
            continue
        if in_gens:
            raise GroupFileError(f"{where}: header {key!r} after the generator list")
        if key == "degree":
            try:
                degree = int(value)
            except ValueError:
                raise GroupFileError(f"{where}: degree must be an integer, got {value!r}") from None
            if degree < 1:
                raise GroupFileError(f"{where}: degree must be positive")
        headers[key] = value
    if degree is None:
        raise GroupFileError(f"{source}: missing 'degree:' line")
    if not in_gens:
        raise GroupFileError(f"{source}: missing 'gens:' line")
    return GroupFile(degree, gens, headers)


def read_group_file(path: str | Path) -> tuple[PermutationGroup, GroupFile]:
    path = Path(path)
    gf = parse_group_text(path.read_text(encoding="utf-8"), str(path))
    gf.path = path
    try:
        group = PermutationGroup(gf.generators, gf.degree, order=gf.order)
    except ValueError as exc:
        raise GroupFileError(f"{path}: {exc}") from None
    if gf.order is not None and group.order != gf.order:
        raise GroupFileError(f"{path}: computed order {group.order} differs from the stated order {gf.order}")
    return group, gf


def read_subgroup_file(path: str | Path, parent: PermutationGroup | None = None) -> tuple[Subgroup, PermutationGroup, GroupFile]:
    """Load a subgroup file and its parent group; generators are checked for membership."""
    path = Path(path)
    gf = parse_group_text(path.read_text(encoding="utf-8"), str(path))
    gf.path = path
    if parent is None:
        if "parent" not in gf.headers:
            raise GroupFileError(f"{path}: missing 'parent:' header")
        parent, _ = read_group_file(path.parent / gf.headers["parent"])
    if parent.degree != gf.degree:
        raise GroupFileError(f"{path}: degree {gf.degree} differs from the parent degree {parent.degree}")
    try:
        sub = Subgroup(parent, gf.generators, name=gf.name, order=gf.order)
    except ValueError as exc:
        raise GroupFileError(f"{path}: {exc}") from None
    if gf.order is not None and sub.order != gf.order:
        raise GroupFileError(f"{path}: computed order {sub.order} differs from the stated order {gf.order}")
    if "index" in gf.headers and sub.index != int(gf.headers["index"]):
        raise GroupFileError(f"{path}: computed index {sub.index} differs from the stated index {gf.headers['index']}")
    return sub, parent, gf


def format_group_file(generators: Sequence[Permutation], degree: int, headers: dict | None = None,
                      comments: Sequence[str] = (), image_notation: bool = False) -> str:
    lines = [f"# {c}" for c in comments]
    for k, v in (headers or {}).items():
        if k not in ("degree", "gens"):
            lines.append(f"{k}: {v}")
    lines.append(f"degree: {degree}")
    lines.append("gens:")
    for g in generators:
        lines.append(g.to_image_string() if image_notation else g.to_cycle_string())
    return "\n".join(lines) + "\n"


def write_adjacency(rows, path_or_file) -> None:
    """Write ``v: n1 n2 ...`` lines, 1-indexed. ``rows`` yields neighbour arrays in vertex order."""
    own = isinstance(path_or_file, (str, Path))
    fh = open(path_or_file, "w", encoding="utf-8") if own else path_or_file
    try:
        for v, nb in enumerate(rows):
            fh.write(f"{v + 1}: " + " ".join(str(int(x) + 1) for x in nb) + "\n")
    finally:
        if own:
            fh.close()


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def decimal3(x: Fraction) -> str:
    """Three decimal places, ties to even, computed exactly."""
    x = Fraction(x)
    if x < 0:
        return "-" + decimal3(-x)
    scaled = x * 1000
    q, r = divmod(scaled.numerator, scaled.denominator)
    twice = 2 * r
    if twice > scaled.denominator or (twice == scaled.denominator and q % 2 == 1):
        q += 1
    return f"{q // 1000}.{q % 1000:03d}"


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_json_default)


def _json_default(o):
    if isinstance(o, Fraction):
        return fraction_str(o)
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"not JSON serialisable: {type(o).__name__}")
