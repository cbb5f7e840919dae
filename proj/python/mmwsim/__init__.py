# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 The mmwsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""mmWave UMi system-level simulator: coupling loss and geometry metric."""

import json

from ._mmwsim import (
    CdfSeries,
    ConfigError,
    NumericError,
    coupling_loss,
    fspl,
    los_probability,
    noise_power,
    o2i_loss,
    oxygen_absorption,
    pl_los_ci,
    pl_nlos_abg,
    power_allocation,
    sector_gain,
    site_positions,
)
from . import _mmwsim

__all__ = [
    "CdfSeries",
    "ConfigError",
    "NumericError",
    "coupling_loss",
    "default_config",
    "fspl",
    "los_probability",
    "noise_power",
    "normalize_config",
    "o2i_loss",
    "oxygen_absorption",
    "pl_los_ci",
    "pl_nlos_abg",
    "power_allocation",
    "run_scenario",
    "sector_gain",
    "site_positions",
]


def default_config():
    """Return the default scenario configuration as a dict."""
    return json.loads(_mmwsim.default_config_json())


def normalize_config(config):
    """Fill defaults into a partial config dict; raises ConfigError on bad keys."""
    return json.loads(_mmwsim.normalize_config_json(json.dumps(config)))


def run_scenario(config=None, workers=1):
    """Run one scenario.

    Returns a dict with ``summary`` (the summary.json content) and the
    ``coupling_loss`` and ``geometry_metric`` CdfSeries.
    """
    raw = _mmwsim.run_scenario(json.dumps(config) if config else "", workers)
    return {
        "summary": json.loads(raw["summary_json"]),
        "coupling_loss": raw["coupling_loss"],
        "geometry_metric": raw["geometry_metric"],
    }
