"""Pipelines, property suites and the witness search."""

from .pipelines import PROP1_ALT_SIZES, PROP1_SIZES, prop1_alt_pipeline, prop1_pipeline
from .report import PipelineFailure, PipelineReport, Stage
from .suites import (
    SuiteReport,
    WidthCache,
    cograph_closure_check,
    inequality_suite,
    prop2_property_suite,
    single_steps,
)
from .witness import (
    Checkpoint,
    CheckpointError,
    SearchOutcome,
    WitnessCandidate,
    matching_key,
    orbit_representatives,
    witness_search,
)

__all__ = [
    "PROP1_ALT_SIZES",
    "PROP1_SIZES",
    "prop1_alt_pipeline",
    "prop1_pipeline",
    "PipelineFailure",
    "PipelineReport",
    "Stage",
    "SuiteReport",
    "WidthCache",
    "cograph_closure_check",
    "inequality_suite",
    "prop2_property_suite",
    "single_steps",
    "Checkpoint",
    "CheckpointError",
    "SearchOutcome",
    "WitnessCandidate",
    "matching_key",
    "orbit_representatives",
    "witness_search",
]
