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

#include "taba/core.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "taba/errors.hpp"

namespace taba {

CountVector TaskSet::costs() const {
  CountVector c(size());
  for (Eigen::Index i = 0; i < size(); ++i) c(i) = tasks[i].cost;
  return c;
}

std::optional<Eigen::Index> TaskSet::index_of(const std::string& id) const {
  for (Eigen::Index i = 0; i < size(); ++i) {
    if (tasks[i].id == id) return i;
  }
  return std::nullopt;
}

ValidationReport validate_task_set(const TaskSet& ts) {
  ValidationReport report;
  if (ts.tasks.empty()) report.violations.push_back("task set must contain at least one task");
  if (ts.budget < 0) report.violations.push_back("budget must be >= 0");
  std::set<std::string> seen;
  for (const auto& task : ts.tasks) {
    if (task.cost < 1) {
      report.violations.push_back("task '" + task.id + "': cost must be >= 1");
    }
    if (!seen.insert(task.id).second) {
      report.violations.push_back("task '" + task.id + "': id unique violated");
    }
  }
  return report;
}

void require_valid(const TaskSet& ts) {
  const auto report = validate_task_set(ts);
  if (report.ok()) return;
  std::ostringstream msg;
  msg << "invalid task set:";
  for (const auto& v : report.violations) msg << ' ' << v << ';';
  throw DomainError(msg.str());
}

TransferMatrix::TransferMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
  if (values_.rows() != values_.cols() || values_.rows() == 0) {
    throw DomainError("transfer matrix must be square and non-empty");
  }
  if (!values_.allFinite()) throw DomainError("transfer matrix entries must be finite");
  for (Eigen::Index i = 0; i < values_.rows(); ++i) {
    if (std::abs(values_(i, i) - 1.0) > kDiagonalTolerance) {
      throw DomainError("transfer matrix diagonal entry " + std::to_string(i) +
                        " must be 1");
    }
    values_(i, i) = 1.0;
  }
}

TransferMatrix TransferMatrix::identity(Eigen::Index k) {
  return TransferMatrix(Eigen::MatrixXd::Identity(k, k));
}

void require_valid(const InformationProfile& prof) {
  if (prof.informativeness.size() != prof.beta.size()) {
    throw DomainError("profile informativeness and beta lengths differ");
  }
  if (!prof.informativeness.allFinite()) {
    throw DomainError("profile informativeness must be finite");
  }
  for (Eigen::Index i = 0; i < prof.beta.size(); ++i) {
    const double b = prof.beta(i);
    if (!(b >= 0.0 && b <= 1.0)) {
      throw DomainError("profile beta[" + std::to_string(i) + "] outside [0, 1]");
    }
  }
}

void require_compatible(const TaskSet& ts, const InformationProfile& prof) {
  require_valid(ts);
  require_valid(prof);
  if (prof.size() != ts.size()) {
    throw DomainError("profile has " + std::to_string(prof.size()) +
                      " tasks, task set has " + std::to_string(ts.size()));
  }
}

Count spend(const TaskSet& ts, const CountVector& counts) {
  if (counts.size() != ts.size()) throw DomainError("count vector length mismatch");
  return counts.dot(ts.costs());
}

void require_valid(const ProbeRecord& r) {
  if (r.source == r.target) throw DomainError("probe record source equals target");
  if (r.source < 0 || r.target < 0) throw DomainError("probe record index negative");
  if (!std::isfinite(r.score_joint) || !std::isfinite(r.score_self_pair) ||
      !std::isfinite(r.score_base)) {
    throw DomainError("probe record scores must be finite");
  }
}

void require_valid(const LearningCurve& curve) {
  Count prev = 0;
  for (const auto& p : curve.points) {
    if (p.n <= prev) {
      throw DomainError("learning curve '" + curve.task +
                        "': n must be positive and strictly increasing");
    }
    if (!std::isfinite(p.gain)) {
      throw DomainError("learning curve '" + curve.task + "': gain must be finite");
    }
    prev = p.n;
  }
}

}  // namespace taba
