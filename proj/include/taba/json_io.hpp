// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON forms of the domain types. Objects are written with a fixed key
// order; count maps in allocations and reports are keyed by task id.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "taba/betafit.hpp"
#include "taba/core.hpp"
#include "taba/simulator.hpp"

namespace taba {

using Json = nlohmann::ordered_json;

Json to_json(const TaskSpec& t);
Json to_json(const TaskSet& ts);
Json to_json(const TransferMatrix& m);
Json to_json(const InformationProfile& prof);
Json to_json(const ProbeRecord& r);
Json to_json(const LearningCurve& curve);
Json to_json(const ScorePair& p);
Json to_json(const SimWorld& world);
Json to_json(const Allocation& a, const TaskSet& ts);
Json to_json(const BetaFit& fit, const std::string& task);
Json to_json(const StrategyReport& report, const TaskSet& ts);

// Parsers throw ParseError on malformed documents and DomainError when the
// parsed value breaks a type invariant.
TaskSpec task_spec_from_json(const Json& j);
// Accepts a bare task set or a document carrying it under "task_set".
TaskSet task_set_from_json(const Json& j);
// Accepts {"values": [[...]]} or a bare nested array.
TransferMatrix transfer_matrix_from_json(const Json& j);
// Accepts a bare profile or a document carrying it under "profile".
InformationProfile profile_from_json(const Json& j);
ProbeRecord probe_record_from_json(const Json& j);
std::vector<ProbeRecord> probe_log_from_json(const Json& j);
LearningCurve learning_curve_from_json(const Json& j);
// A single curve object or an array of them.
std::vector<LearningCurve> learning_curves_from_json(const Json& j);
ScorePair score_pair_from_json(const Json& j);
SimWorld sim_world_from_json(const Json& j);
Allocation allocation_from_json(const Json& j, const TaskSet& ts);

Json read_json_file(const std::filesystem::path& path);

// Rounds every floating-point number to `digits` significant digits so the
// serializer prints at most that many.
Json round_floats(Json j, int digits = 9);

// Pretty-prints with two-space indent and a trailing newline.
std::string dump_document(const Json& j);

}  // namespace taba
