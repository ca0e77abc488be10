"""Pseudospectral laboratory for the (M)KdV-Burgers family."""

try:
    from ._mkdvb import (  # noqa: F401
        BlowUpError,
        DataError,
        ParameterError,
        PeriodicGrid,
        critical_regularity,
        evolve,
        h1_kdv,
        h1_mkdv,
        h2_mkdv,
        h2p_mkdv,
        make_grid,
        make_profile,
        miura_transform,
        resonance,
        run_experiment,
        scaling_check,
        sobolev_norm,
    )
except ImportError:  # in-tree runs keep the extension next to the build
    from _mkdvb import (  # noqa: F401
        BlowUpError,
        DataError,
        ParameterError,
        PeriodicGrid,
        critical_regularity,
        evolve,
        h1_kdv,
        h1_mkdv,
        h2_mkdv,
        h2p_mkdv,
        make_grid,
        make_profile,
        miura_transform,
        resonance,
        run_experiment,
        scaling_check,
        sobolev_norm,
    )

__all__ = [
    "BlowUpError",
    "DataError",
    "ParameterError",
    "PeriodicGrid",
    "critical_regularity",
    "evolve",
    "h1_kdv",
    "h1_mkdv",
    "h2_mkdv",
    "h2p_mkdv",
    "make_grid",
    "make_profile",
    "miura_transform",
    "resonance",
    "run_experiment",
    "scaling_check",
    "sobolev_norm",
]
