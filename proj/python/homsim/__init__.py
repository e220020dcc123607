"""Exact event statistics of partially distinguishable photons at a two-mode coupler."""

from fractions import Fraction

from ._core import (
    MAX_PHOTONS_PER_MODE,
    SPEED_OF_LIGHT,
    ComponentTerm,
    CouplerSpec,
    EventDistribution,
    Extremum,
    ExtremumReport,
    Monotonicity,
    OverlapModel,
    ScanResult,
    ScanRow,
    Species,
    TypeLabel,
    all_events,
    convolve,
    decompose,
    delay_from_overlap,
    detection_table,
    emit_figure_pack,
    event_probability,
    find_extrema,
    linspace,
    oracle_event_probability,
    overlap_from_delay,
    scan,
    sigma_from_filter,
    species_distribution,
)
from ._core import detection_table_exact as _detection_table_exact_str

__all__ = [
    "MAX_PHOTONS_PER_MODE",
    "SPEED_OF_LIGHT",
    "ComponentTerm",
    "CouplerSpec",
    "EventDistribution",
    "Extremum",
    "ExtremumReport",
    "Monotonicity",
    "OverlapModel",
    "ScanResult",
    "ScanRow",
    "Species",
    "TypeLabel",
    "all_events",
    "convolve",
    "decompose",
    "delay_from_overlap",
    "detection_table",
    "detection_table_exact",
    "emit_figure_pack",
    "event_probability",
    "find_extrema",
    "linspace",
    "oracle_event_probability",
    "overlap_from_delay",
    "scan",
    "sigma_from_filter",
    "species_distribution",
]


def detection_table_exact(photons_per_mode):
    """Balanced-coupler detection probabilities as exact fractions.

    Returns a list indexed by the type index j (0..k); entry j maps each
    event (m, n) to a fractions.Fraction.
    """
    table = []
    for row in _detection_table_exact_str(photons_per_mode):
        n_total = len(row) - 1
        table.append({(m, n_total - m): Fraction(value) for m, value in enumerate(row)})
    return table
