"""Bundled groups and subgroups (see tools/make_catalog.py for their provenance)."""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

from .io import read_group_file, read_subgroup_file
from .perm import PermutationGroup, Subgroup

CATALOG_DIR = Path(__file__).resolve().parent / "catalog"

__all__ = ["CATALOG_DIR", "catalog_index", "load_group", "load_subgroup", "catalog_path"]


@lru_cache(maxsize=1)
def catalog_index() -> dict:
    path = CATALOG_DIR / "index.json"
    if not path.exists():
        raise FileNotFoundError(f"missing catalog index {path}")
    return json.loads(path.read_text(encoding="utf-8"))


def _canonical(name: str) -> str:
    idx = catalog_index()
    for key in idx:
        if key.lower() == name.lower():
            return key
    raise KeyError(f"unknown catalog group {name!r}; known: {', '.join(idx)}")


def catalog_path(name: str, subgroup: str | None = None) -> Path:
    entry = catalog_index()[_canonical(name)]
    if subgroup is None:
        return CATALOG_DIR / entry["group"]
    for key, fname in entry["subgroups"].items():
        if key.lower() == subgroup.lower():
            return CATALOG_DIR / fname
    raise KeyError(f"unknown subgroup {subgroup!r} of {name}; known: {', '.join(entry['subgroups'])}")


@lru_cache(maxsize=None)
def load_group(name: str) -> PermutationGroup:
    """Load a catalog group; its order is checked against the file header."""
    group, _ = read_group_file(catalog_path(name))
    return group


@lru_cache(maxsize=None)
def load_subgroup(name: str, subgroup: str) -> Subgroup:
    """Load a catalog subgroup; membership, order and index are checked."""
    sub, _, _ = read_subgroup_file(catalog_path(name, subgroup), parent=load_group(name))
    return sub
