# Copyright 2026 The pecsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Pauli channel cancellation with noisy gates."""

import json as _json

from pecsim._pecsim import *  # noqa: F401,F403
from pecsim._pecsim import _run_fig3, _run_fig4, _run_invertibility


def _config(kwargs):
    # Same keys as the CLI config file.
    return _json.dumps(kwargs)


def run_fig3(**kwargs):
    """Bias table for noisy cancellation gates, as CSV text."""
    return _run_fig3(_config(kwargs))


def run_fig4(**kwargs):
    """Bias table for under and over mitigation, as CSV text."""
    return _run_fig4(_config(kwargs))


def run_invertibility(**kwargs):
    """Invertibility check of estimated noise maps, as CSV text."""
    return _run_invertibility(_config(kwargs))
