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

// Domain types shared by the allocation pipeline. Task order is the canonical
// index everywhere: transfer-matrix rows are sources, columns are targets.

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace taba {

using Count = std::int64_t;
using CountVector = Eigen::Matrix<Count, Eigen::Dynamic, 1>;

struct TaskSpec {
  std::string id;
  Count cost = 1;                // budget units per label
  bool lower_is_better = false;  // metric orientation

  bool operator==(const TaskSpec&) const = default;
};

struct TaskSet {
  std::vector<TaskSpec> tasks;
  Count budget = 0;

  Eigen::Index size() const { return static_cast<Eigen::Index>(tasks.size()); }
  CountVector costs() const;
  // Position of the task with the given id, if present.
  std::optional<Eigen::Index> index_of(const std::string& id) const;

  bool operator==(const TaskSet&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate_task_set(const TaskSet& ts);

// Throws DomainError listing every violation when the set is invalid.
void require_valid(const TaskSet& ts);

// K x K matrix of relative transferred informativeness; entry (i, j) is the
// benefit one task-i label confers on task j. The diagonal is exactly 1.
class TransferMatrix {
 public:
  static constexpr double kDiagonalTolerance = 1e-12;

  TransferMatrix() = default;
  // Rejects non-square or non-finite input and any diagonal entry further
  // than kDiagonalTolerance from 1; the stored diagonal is snapped to 1.
  explicit TransferMatrix(Eigen::MatrixXd values);

  static TransferMatrix identity(Eigen::Index k);

  const Eigen::MatrixXd& values() const { return values_; }
  Eigen::Index size() const { return values_.rows(); }
  double operator()(Eigen::Index source, Eigen::Index target) const {
    return values_(source, target);
  }

  bool operator==(const TransferMatrix& other) const {
    return values_.rows() == other.values_.rows() &&
           values_.cols() == other.values_.cols() && values_ == other.values_;
  }

 private:
  Eigen::MatrixXd values_;
};

// Per-task aggregate informativeness I and reduction rate beta.
struct InformationProfile {
  Eigen::VectorXd informativeness;
  Eigen::VectorXd beta;

  Eigen::Index size() const { return informativeness.size(); }

  bool operator==(const InformationProfile& other) const {
    return informativeness.size() == other.informativeness.size() &&
           beta.size() == other.beta.size() &&
           informativeness == other.informativeness && beta == other.beta;
  }
};

// Throws DomainError on size mismatch, beta outside [0, 1] or non-finite I.
void require_valid(const InformationProfile& prof);
void require_compatible(const TaskSet& ts, const InformationProfile& prof);

struct Allocation {
  CountVector counts;
  Count spent = 0;
  double objective = 0.0;
  std::string solver;
  // Set by the same-images baseline: every task labels one shared image set.
  bool same_images = false;
  std::vector<std::string> notes;

  bool operator==(const Allocation& other) const {
    return counts.size() == other.counts.size() && counts == other.counts &&
           spent == other.spent && objective == other.objective &&
           solver == other.solver && same_images == other.same_images &&
           notes == other.notes;
  }
};

Count spend(const TaskSet& ts, const CountVector& counts);

struct ProbeRecord {
  std::int64_t step = 0;
  Eigen::Index source = 0;
  Eigen::Index target = 0;
  double score_joint = 0.0;      // target after joint training with source
  double score_self_pair = 0.0;  // target trained on two of its own batches
  double score_base = 0.0;       // target trained alone

  bool operator==(const ProbeRecord&) const = default;
};

void require_valid(const ProbeRecord& r);

struct CurvePoint {
  Count n = 0;
  double gain = 0.0;

  bool operator==(const CurvePoint&) const = default;
};

struct LearningCurve {
  std::string task;
  std::vector<CurvePoint> points;

  bool operator==(const LearningCurve&) const = default;
};

// Positive, strictly increasing n and finite gains. Does not check the
// point count; fitting raises InsufficientDataError for that.
void require_valid(const LearningCurve& curve);

struct ScorePair {
  double before = 0.0;
  double after = 0.0;

  bool operator==(const ScorePair&) const = default;
};

}  // namespace taba
