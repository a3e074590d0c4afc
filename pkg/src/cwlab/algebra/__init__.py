"""Clique-width expressions and explicit expressions for the graph families."""

from .builders import (
    LINEAR_TERM_BUILDERS,
    TERM_BUILDERS,
    build_linear_term_G,
    build_linear_term_H,
    build_linear_term_Hprime,
    build_term_G,
    build_term_H,
    build_term_Hprime,
)
from .terms import (
    AddEdges,
    Create,
    CwTerm,
    LabeledGraph,
    Relabel,
    TermError,
    Union,
    count_creates,
    eval_term,
    is_linear,
    labels_used,
    parse_term,
    rename_labels,
    term_width,
    to_text,
)

__all__ = [
    "LINEAR_TERM_BUILDERS",
    "TERM_BUILDERS",
    "build_linear_term_G",
    "build_linear_term_H",
    "build_linear_term_Hprime",
    "build_term_G",
    "build_term_H",
    "build_term_Hprime",
    "AddEdges",
    "Create",
    "CwTerm",
    "LabeledGraph",
    "Relabel",
    "TermError",
    "Union",
    "count_creates",
    "eval_term",
    "is_linear",
    "labels_used",
    "parse_term",
    "rename_labels",
    "term_width",
    "to_text",
]
