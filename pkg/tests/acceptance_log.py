"""Collects one result line per acceptance criterion for the terminal summary."""

from __future__ import annotations

RESULTS: dict[int, str] = {}
