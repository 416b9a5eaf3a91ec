# Copyright 2026 The s17bench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python access to the s17bench core: gate infidelities, sweeps and the CSV record schema."""

from ._core import (
    CSV_SCHEMA_VERSION,
    ConfigError,
    config_keys,
    csv_header,
    gate_infidelity,
    preset_names,
    read_csv,
    run_sweep_csv,
)

__all__ = [
    "CSV_SCHEMA_VERSION",
    "ConfigError",
    "config_keys",
    "csv_header",
    "gate_infidelity",
    "preset_names",
    "read_csv",
    "run_sweep",
    "run_sweep_csv",
]


def run_sweep(**settings):
    """Runs a sweep and returns its records as dicts.

    Keyword names are CLI option names with '_' for '-', e.g. ``run_sweep(gate="v1", grid="2x2")``.
    """
    text = {k: str(v) for k, v in settings.items()}
    return read_csv(run_sweep_csv(text))
