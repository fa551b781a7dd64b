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

#include "taba/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "taba/errors.hpp"

namespace taba {
namespace {

template <typename F>
auto guarded(const char* what, F&& parse) {
  try {
    return parse();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& require_key(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("malformed ") + what + ": missing field '" + key + "'");
  }
  return j.at(key);
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Eigen::VectorXd vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("malformed ") + what + ": expected an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Json counts_to_json(const CountVector& counts, const TaskSet& ts) {
  Json out = Json::object();
  for (Eigen::Index i = 0; i < counts.size(); ++i) out[ts.tasks[i].id] = counts(i);
  return out;
}

Json per_task_to_json(const Eigen::VectorXd& v, const TaskSet& ts) {
  Json out = Json::object();
  for (Eigen::Index i = 0; i < v.size(); ++i) out[ts.tasks[i].id] = v(i);
  return out;
}

}  // namespace

Json to_json(const TaskSpec& t) {
  return Json{{"id", t.id}, {"cost", t.cost}, {"lower_is_better", t.lower_is_better}};
}

Json to_json(const TaskSet& ts) {
  Json tasks = Json::array();
  for (const auto& t : ts.tasks) tasks.push_back(to_json(t));
  return Json{{"tasks", tasks}, {"budget", ts.budget}};
}

Json to_json(const TransferMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"values", rows}};
}

Json to_json(const InformationProfile& prof) {
  return Json{{"informativeness", vector_to_json(prof.informativeness)},
              {"beta", vector_to_json(prof.beta)}};
}

Json to_json(const ProbeRecord& r) {
  return Json{{"step", r.step},
              {"source", r.source},
              {"target", r.target},
              {"score_joint", r.score_joint},
              {"score_self_pair", r.score_self_pair},
              {"score_base", r.score_base}};
}

Json to_json(const LearningCurve& curve) {
  Json points = Json::array();
  for (const auto& p : curve.points) points.push_back(Json{{"n", p.n}, {"gain", p.gain}});
  return Json{{"task", curve.task}, {"points", points}};
}

Json to_json(const ScorePair& p) { return Json{{"before", p.before}, {"after", p.after}}; }

Json to_json(const SimWorld& world) {
  return Json{{"task_set", to_json(world.task_set)},
              {"true_transfer", to_json(world.true_transfer)},
              {"true_beta", vector_to_json(world.true_beta)},
              {"base_scores", vector_to_json(world.base_scores)},
              {"gain_scale", vector_to_json(world.gain_scale)},
              {"noise_std", world.noise_std},
              {"seed", world.seed}};
}

Json to_json(const Allocation& a, const TaskSet& ts) {
  if (a.counts.size() != ts.size()) throw DomainError("allocation does not match task set");
  Json out{{"counts", counts_to_json(a.counts, ts)},
           {"spent", a.spent},
           {"objective", a.objective},
           {"solver", a.solver}};
  if (a.same_images) out["same_images"] = true;
  if (!a.notes.empty()) out["notes"] = a.notes;
  return out;
}

Json to_json(const BetaFit& fit, const std::string& task) {
  return Json{{"task", task}, {"beta", fit.beta}, {"ds", fit.ds}, {"residual", fit.residual}};
}

Json to_json(const StrategyReport& report, const TaskSet& ts) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json scores = Json::object();
    for (std::size_t j = 0; j < row.scores.size(); ++j) {
      scores[ts.tasks[j].id] = to_json(row.scores[j]);
    }
    rows.push_back(Json{{"strategy", row.strategy},
                        {"solver", row.allocation.solver},
                        {"counts", counts_to_json(row.allocation.counts, ts)},
                        {"spent", row.allocation.spent},
                        {"objective", row.allocation.objective},
                        {"scores", scores},
                        {"delta", per_task_to_json(row.task_gain, ts)},
                        {"delta_t", row.overall_gain}});
  }
  Json out{{"rows", rows}};
  if (!report.sweep.empty()) {
    Json sweep = Json::array();
    for (const auto& p : report.sweep) {
      sweep.push_back(Json{{"split_fraction", p.split_fraction},
                           {"counts", counts_to_json(p.counts, ts)},
                           {"delta_t", p.overall_gain}});
    }
    out["sweep"] = sweep;
  }
  return out;
}

TaskSpec task_spec_from_json(const Json& j) {
  return guarded("task", [&] {
    TaskSpec t;
    t.id = require_key(j, "id", "task").get<std::string>();
    t.cost = require_key(j, "cost", "task").get<Count>();
    t.lower_is_better = j.value("lower_is_better", false);
    return t;
  });
}

TaskSet task_set_from_json(const Json& j) {
  if (j.is_object() && j.contains("task_set")) return task_set_from_json(j.at("task_set"));
  TaskSet ts = guarded("task set", [&] {
    TaskSet out;
    const Json& tasks = require_key(j, "tasks", "task set");
    if (!tasks.is_array()) throw ParseError("malformed task set: 'tasks' must be an array");
    for (const auto& t : tasks) out.tasks.push_back(task_spec_from_json(t));
    out.budget = require_key(j, "budget", "task set").get<Count>();
    return out;
  });
  require_valid(ts);
  return ts;
}

TransferMatrix transfer_matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? require_key(j, "values", "transfer matrix") : j;
  Eigen::MatrixXd values = guarded("transfer matrix", [&] {
    if (!rows.is_array() || rows.empty()) {
      throw ParseError("malformed transfer matrix: expected a non-empty array of rows");
    }
    const auto k = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd m(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      const Json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != k) {
        throw ParseError("malformed transfer matrix: rows must have length " +
                         std::to_string(k));
      }
      for (Eigen::Index c = 0; c < k; ++c) m(i, c) = row[static_cast<std::size_t>(c)].get<double>();
    }
    return m;
  });
  return TransferMatrix(std::move(values));
}

InformationProfile profile_from_json(const Json& j) {
  if (j.is_object() && j.contains("profile")) return profile_from_json(j.at("profile"));
  InformationProfile prof = guarded("profile", [&] {
    InformationProfile p;
    p.informativeness =
        vector_from_json(require_key(j, "informativeness", "profile"), "profile");
    p.beta = vector_from_json(require_key(j, "beta", "profile"), "profile");
    return p;
  });
  require_valid(prof);
  return prof;
}

ProbeRecord probe_record_from_json(const Json& j) {
  ProbeRecord r = guarded("probe record", [&] {
    ProbeRecord out;
    out.step = j.value("step", std::int64_t{0});
    out.source = require_key(j, "source", "probe record").get<Eigen::Index>();
    out.target = require_key(j, "target", "probe record").get<Eigen::Index>();
    out.score_joint = require_key(j, "score_joint", "probe record").get<double>();
    out.score_self_pair = require_key(j, "score_self_pair", "probe record").get<double>();
    out.score_base = require_key(j, "score_base", "probe record").get<double>();
    return out;
  });
  require_valid(r);
  return r;
}

std::vector<ProbeRecord> probe_log_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("malformed probe log: expected an array of records");
  std::vector<ProbeRecord> log;
  log.reserve(j.size());
  for (const auto& r : j) log.push_back(probe_record_from_json(r));
  return log;
}

LearningCurve learning_curve_from_json(const Json& j) {
  LearningCurve curve = guarded("learning curve", [&] {
    LearningCurve c;
    c.task = j.value("task", std::string{});
    const Json& points = require_key(j, "points", "learning curve");
    if (!points.is_array()) throw ParseError("malformed learning curve: 'points' must be an array");
    for (const auto& p : points) {
      c.points.push_back({require_key(p, "n", "curve point").get<Count>(),
                          require_key(p, "gain", "curve point").get<double>()});
    }
    return c;
  });
  require_valid(curve);
  return curve;
}

std::vector<LearningCurve> learning_curves_from_json(const Json& j) {
  std::vector<LearningCurve> curves;
  if (j.is_array()) {
    for (const auto& c : j) curves.push_back(learning_curve_from_json(c));
  } else {
    curves.push_back(learning_curve_from_json(j));
  }
  return curves;
}

ScorePair score_pair_from_json(const Json& j) {
  return guarded("score pair", [&] {
    return ScorePair{require_key(j, "before", "score pair").get<double>(),
                     require_key(j, "after", "score pair").get<double>()};
  });
}

SimWorld sim_world_from_json(const Json& j) {
  SimWorld world;
  world.task_set = task_set_from_json(require_key(j, "task_set", "world"));
  world.true_transfer = transfer_matrix_from_json(require_key(j, "true_transfer", "world"));
  guarded("world", [&] {
    world.true_beta = vector_from_json(require_key(j, "true_beta", "world"), "world");
    world.base_scores = vector_from_json(require_key(j, "base_scores", "world"), "world");
    world.gain_scale = vector_from_json(require_key(j, "gain_scale", "world"), "world");
    world.noise_std = j.value("noise_std", 0.0);
    world.seed = j.value("seed", std::uint64_t{0});
    return 0;
  });
  require_valid(world);
  return world;
}

Allocation allocation_from_json(const Json& j, const TaskSet& ts) {
  return guarded("allocation", [&] {
    Allocation a;
    const Json& counts = require_key(j, "counts", "allocation");
    a.counts.resize(ts.size());
    for (Eigen::Index i = 0; i < ts.size(); ++i) {
      a.counts(i) = require_key(counts, ts.tasks[i].id.c_str(), "allocation counts").get<Count>();
    }
    a.spent = require_key(j, "spent", "allocation").get<Count>();
    a.objective = require_key(j, "objective", "allocation").get<double>();
    a.solver = require_key(j, "solver", "allocation").get<std::string>();
    a.same_images = j.value("same_images", false);
    if (j.contains("notes")) a.notes = j.at("notes").get<std::vector<std::string>>();
    return a;
  });
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Json round_floats(Json j, int digits) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return j;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return Json(std::strtod(buf, nullptr));
  }
  if (j.is_structured()) {
    for (auto& item : j) item = round_floats(std::move(item), digits);
  }
  return j;
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace taba
