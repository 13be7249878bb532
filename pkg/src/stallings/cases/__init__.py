"""Injectivity case analysis over restricted alphabets."""

from .engine import (
    CaseResolution,
    InjectivityCase,
    Resolution,
    SplitCase,
    apply_substitution,
    classify_case,
    initial_split,
    morphisms_unpointed_isomorphic,
    reduce_to,
    root_case,
    split_on_edge,
)
from .fuzz import FuzzReport, fuzz_example
from .verify import TableReport, render_tsv, verify_tables

__all__ = [
    "CaseResolution",
    "InjectivityCase",
    "Resolution",
    "SplitCase",
    "apply_substitution",
    "classify_case",
    "initial_split",
    "morphisms_unpointed_isomorphic",
    "reduce_to",
    "root_case",
    "split_on_edge",
    "FuzzReport",
    "fuzz_example",
    "TableReport",
    "render_tsv",
    "verify_tables",
]
