"""Directional cell discovery simulator for mm-wave base stations."""

import json

from ._mmdisc import (
    ConfigError,
    angular_offset,
    azimuth_to,
    boresight_range,
    calibrated_tx_power,
    edp_sequence,
    figure_ids,
    gain_at_offset,
    greedy_sequence,
    pathloss,
    peak_gain,
    random_sequence,
    reproduce,
)
from . import _mmdisc

__all__ = [
    "ConfigError",
    "angular_offset",
    "azimuth_to",
    "boresight_range",
    "calibrated_tx_power",
    "edp_sequence",
    "figure_ids",
    "gain_at_offset",
    "greedy_sequence",
    "pathloss",
    "peak_gain",
    "random_sequence",
    "reproduce",
    "run_experiment",
    "sweep",
]


def _as_json(config):
    return config if isinstance(config, str) else json.dumps(config)


def run_experiment(config=None):
    """Run one experiment from a config dict (same schema as the CLI) and return its summary."""
    return json.loads(_mmdisc.run_experiment_json(_as_json(config or {})))


def sweep(config):
    """Run the sweep described by config["sweep"]; one summary per value."""
    return json.loads(_mmdisc.sweep_json(_as_json(config)))
