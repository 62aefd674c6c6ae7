"""NNIL toolbox over finite Kripke models, backed by the C++ core."""

from _nnil import (
    Error,
    beta,
    canonical,
    canonical_code,
    check,
    classes,
    countermodel,
    fnf,
    force,
    model_dot,
    nnil_equiv,
    prove,
    reduce,
    refute,
    refute_on_frame,
    universal_dot,
    universal_model_json,
    universal_stats,
)

__all__ = [
    "Error",
    "beta",
    "canonical",
    "canonical_code",
    "check",
    "classes",
    "countermodel",
    "fnf",
    "force",
    "model_dot",
    "nnil_equiv",
    "prove",
    "reduce",
    "refute",
    "refute_on_frame",
    "universal_dot",
    "universal_model_json",
    "universal_stats",
]
