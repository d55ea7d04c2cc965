// Copyright 2026 The pecsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PECSIM_IO_H
#define PECSIM_IO_H

#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "pecsim/bias.h"
#include "pecsim/channel.h"
#include "pecsim/dense.h"
#include "pecsim/implementability.h"
#include "pecsim/noise_map.h"
#include "pecsim/sampler.h"

namespace pecsim {

using json = nlohmann::json;

/// Fixed 9-significant-digit formatting used in every emitted table.
std::string format_real(double v);

json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

/// {"n": 1, "format": "dense", "coeffs": [...]} or
/// {"n": 2, "format": "lindblad", "generators": [{"pauli": "XI", "lambda": 0.1}]}.
PauliChannel channel_from_json(const json &j);
LindbladModel lindblad_from_json(const json &j);
json channel_to_json(const PauliChannel &c);
json lindblad_to_json(const LindbladModel &m);

/// {"n": 1, "theta": [[...], ...]} row-major, or {"n": 1, "gates": [channel, ...]} giving
/// the noise of each Pauli gate.
NoiseMap noise_map_from_json(const json &j);
json noise_map_to_json(const NoiseMap &m);

/// {"dim": 3, "points": [[...], ...]} with optional "functional".
FreeSet free_set_from_json(const json &j);
json lp_report_to_json(const LpReport &r);

/// {"dim": 2, "entries": [[re, im], ...]} row-major.
CMatrix operator_from_json(const json &j);
json operator_to_json(const CMatrix &m);

json bias_report_to_json(const BiasReport &r);
json estimate_to_json(const PecEstimate &e);

}  // namespace pecsim

#endif
