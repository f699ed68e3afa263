// Copyright 2026 The Indecision Modeling Authors.
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

#ifndef INDECISION_TYPES_HPP_
#define INDECISION_TYPES_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace indecision {

// Raised when caller-supplied data or parameters violate a documented
// precondition. The CLI maps it to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raw survey attributes of a patient. Stored as doubles so that files with
// non-integer or out-of-range values can still be loaded (with a warning).
struct PatientProfile {
  double age = 0.0;
  double drinks = 0.0;
  double dependents = 0.0;

  friend bool operator==(const PatientProfile&, const PatientProfile&) = default;
};

// A choice alternative. `features` is the normalized vector used by every
// model; `raw` is kept when the item came from the kidney-allocation schema.
struct Item {
  std::vector<double> features;
  std::optional<PatientProfile> raw;

  std::size_t dimension() const { return features.size(); }

  friend bool operator==(const Item&, const Item&) = default;
};

enum class Response : std::uint8_t {
  kIndecision = 0,
  kPreferFirst = 1,
  kPreferSecond = 2,
};

inline constexpr std::array<Response, 3> kAllResponses = {
    Response::kIndecision, Response::kPreferFirst, Response::kPreferSecond};

inline int response_code(Response r) { return static_cast<int>(r); }

inline Response response_from_code(long code) {
  if (code < 0 || code > 2) {
    throw ValidationError("response code must be 0, 1 or 2, got " +
                          std::to_string(code));
  }
  return static_cast<Response>(code);
}

struct ComparisonQuery {
  Item first;
  Item second;
  std::optional<std::size_t> id;

  friend bool operator==(const ComparisonQuery&,
                         const ComparisonQuery&) = default;
};

inline void check_query(const ComparisonQuery& query) {
  if (query.first.dimension() == 0 ||
      query.first.dimension() != query.second.dimension()) {
    throw ValidationError("query items must have equal, nonzero dimension");
  }
}

// Enumerator order is the fixed tie-break order used by ranking.
enum class ModelKind : std::uint8_t {
  kMinDelta,
  kMaxDelta,
  kMinU,
  kMaxU,
  kDom,
  kLogit,
  kNaiveRand,
  kUniformRand,
};

inline constexpr std::array<ModelKind, 8> kAllKinds = {
    ModelKind::kMinDelta, ModelKind::kMaxDelta,  ModelKind::kMinU,
    ModelKind::kMaxU,     ModelKind::kDom,       ModelKind::kLogit,
    ModelKind::kNaiveRand, ModelKind::kUniformRand};

// The five threshold models; also the categorical domain of mixture
// components.
inline constexpr std::array<ModelKind, 5> kIndecisionKinds = {
    ModelKind::kMinDelta, ModelKind::kMaxDelta, ModelKind::kMinU,
    ModelKind::kMaxU, ModelKind::kDom};

// Which indecision score Max-U uses: 2*min{u(i),u(j)} - lambda, or
// u(i) + u(j) - lambda (the form that agrees with the response function).
enum class MaxUVariant : std::uint8_t { kMainText, kSumForm };

inline bool is_indecision_kind(ModelKind kind) {
  return static_cast<int>(kind) <= static_cast<int>(ModelKind::kDom);
}

inline bool has_scores(ModelKind kind) {
  return kind != ModelKind::kNaiveRand && kind != ModelKind::kUniformRand;
}

// Thresholds of Min-delta and Max-delta must be nonnegative.
inline bool is_difference_kind(ModelKind kind) {
  return kind == ModelKind::kMinDelta || kind == ModelKind::kMaxDelta;
}

inline std::string_view kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kMinDelta: return "min-delta";
    case ModelKind::kMaxDelta: return "max-delta";
    case ModelKind::kMinU: return "min-u";
    case ModelKind::kMaxU: return "max-u";
    case ModelKind::kDom: return "dom";
    case ModelKind::kLogit: return "logit";
    case ModelKind::kNaiveRand: return "naive-rand";
    case ModelKind::kUniformRand: return "uniform-rand";
  }
  return "unknown";
}

inline ModelKind kind_from_name(std::string_view name) {
  for (ModelKind kind : kAllKinds) {
    if (kind_name(kind) == name) return kind;
  }
  throw ValidationError("unknown model kind '" + std::string(name) + "'");
}

inline std::string_view maxu_variant_name(MaxUVariant v) {
  return v == MaxUVariant::kMainText ? "main-text" : "sum-form";
}

inline MaxUVariant maxu_variant_from_name(std::string_view name) {
  if (name == "main-text") return MaxUVariant::kMainText;
  if (name == "sum-form") return MaxUVariant::kSumForm;
  throw ValidationError("unknown max-u variant '" + std::string(name) + "'");
}

// Linear-utility agent. The Gumbel noise scale is fixed at 1 and therefore
// not stored.
struct IndecisionModel {
  ModelKind kind = ModelKind::kMinDelta;
  std::vector<double> weights;
  double threshold = 0.0;
  // Probability of indecision for kNaiveRand; unused otherwise.
  double rand_q = 0.0;
  MaxUVariant maxu_variant = MaxUVariant::kMainText;

  friend bool operator==(const IndecisionModel&,
                         const IndecisionModel&) = default;
};

inline void check_model(const IndecisionModel& model) {
  for (double w : model.weights) {
    if (!std::isfinite(w)) throw ValidationError("model weights must be finite");
  }
  if (!std::isfinite(model.threshold)) {
    throw ValidationError("model threshold must be finite");
  }
  if (is_difference_kind(model.kind) && model.threshold < 0.0) {
    throw ValidationError(std::string(kind_name(model.kind)) +
                          " requires a nonnegative threshold");
  }
  if (model.kind == ModelKind::kNaiveRand &&
      !(model.rand_q >= 0.0 && model.rand_q <= 1.0)) {
    throw ValidationError("naive-rand q must lie in [0, 1]");
  }
}

struct ResponseDistribution {
  double p0 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;

  double operator[](Response r) const {
    switch (r) {
      case Response::kIndecision: return p0;
      case Response::kPreferFirst: return p1;
      case Response::kPreferSecond: return p2;
    }
    return 0.0;
  }
};

// How an indecisive agent answers when indecision is not allowed.
//   kClosedForm: the published closed-form distribution (canonical).
//   kProcess: the two-stage draw of the strict-decision flowchart.
enum class StrictVariant : std::uint8_t { kClosedForm, kProcess };

inline std::string_view strict_variant_name(StrictVariant v) {
  return v == StrictVariant::kClosedForm ? "closed-form" : "process";
}

inline StrictVariant strict_variant_from_name(std::string_view name) {
  if (name == "closed-form") return StrictVariant::kClosedForm;
  if (name == "process") return StrictVariant::kProcess;
  throw ValidationError("unknown strict variant '" + std::string(name) + "'");
}

struct StrictPolicy {
  double q = 0.5;
  StrictVariant variant = StrictVariant::kClosedForm;

  friend bool operator==(const StrictPolicy&, const StrictPolicy&) = default;
};

inline void check_policy(const StrictPolicy& policy) {
  if (!(policy.q >= 0.0 && policy.q <= 1.0)) {
    throw ValidationError("strict policy q must lie in [0, 1]");
  }
}

enum class DatasetMode : std::uint8_t { kIndecisive, kStrict };

inline std::string_view mode_name(DatasetMode mode) {
  return mode == DatasetMode::kIndecisive ? "indecisive" : "strict";
}

inline DatasetMode mode_from_name(std::string_view name) {
  if (name == "indecisive") return DatasetMode::kIndecisive;
  if (name == "strict") return DatasetMode::kStrict;
  throw ValidationError("unknown group '" + std::string(name) + "'");
}

struct ResponseRecord {
  std::string voter_id;
  ComparisonQuery query;
  Response response = Response::kIndecision;

  friend bool operator==(const ResponseRecord&,
                         const ResponseRecord&) = default;
};

struct ResponseDataset {
  std::vector<ResponseRecord> records;
  DatasetMode mode = DatasetMode::kIndecisive;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }

  friend bool operator==(const ResponseDataset&,
                         const ResponseDataset&) = default;
};

inline void check_dataset(const ResponseDataset& data) {
  std::size_t dim = 0;
  for (std::size_t i = 0; i < data.records.size(); ++i) {
    const ResponseRecord& rec = data.records[i];
    check_query(rec.query);
    if (i == 0) dim = rec.query.first.dimension();
    if (rec.query.first.dimension() != dim) {
      throw ValidationError("record " + std::to_string(i) +
                            " has a different feature dimension");
    }
    if (data.mode == DatasetMode::kStrict &&
        rec.response == Response::kIndecision) {
      throw ValidationError("record " + std::to_string(i) +
                            " is an indecision response in a strict dataset");
    }
  }
}

// A finite mixture of agents. With `uniform` set every component has
// probability 1/k and `weights` is ignored; otherwise component c is chosen
// with probability softmax(weights)[c]. `policies` is empty for indecisive
// data and holds one policy per component for strict data.
struct MixtureModel {
  std::vector<IndecisionModel> submodels;
  std::vector<double> weights;
  bool uniform = false;
  std::vector<StrictPolicy> policies;

  std::size_t size() const { return submodels.size(); }

  friend bool operator==(const MixtureModel&, const MixtureModel&) = default;
};

inline void check_mixture(const MixtureModel& mix) {
  if (mix.submodels.empty()) {
    throw ValidationError("mixture needs at least one submodel");
  }
  if (!mix.uniform && mix.weights.size() != mix.submodels.size()) {
    throw ValidationError("mixture weights must match the submodel count");
  }
  if (!mix.policies.empty() && mix.policies.size() != mix.submodels.size()) {
    throw ValidationError("mixture policies must match the submodel count");
  }
  for (const auto& m : mix.submodels) check_model(m);
}

}  // namespace indecision

#endif  // INDECISION_TYPES_HPP_
