// Copyright 2026 the convseg authors
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

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "convseg/pipeline.hpp"
#include "convseg/similarity.hpp"

namespace convseg {

struct LabeledShape {
    std::string shape_id;
    std::string class_label;
    FeatureProfile profile;
    std::filesystem::path source_path;
};

struct DatasetLoad {
    std::vector<LabeledShape> shapes;
    // (path, reason) for files that failed the pipeline and were skipped
    std::vector<std::pair<std::filesystem::path, std::string>> failures;
    std::vector<std::string> warnings;
};

struct ConfusionMatrix {
    std::vector<std::string> classes;          // sorted label list
    std::vector<std::size_t> counts;           // classes x classes, true-major

    std::size_t at(std::size_t true_idx, std::size_t pred_idx) const {
        return counts[true_idx * classes.size() + pred_idx];
    }
};

struct PerShapeResult {
    std::string shape_id;
    std::string true_label;
    std::string predicted_label;
    std::string nearest_id;
    double score{0.0};
};

struct EvalReport {
    double accuracy{0.0};  // percentage
    ConfusionMatrix confusion;
    std::vector<PerShapeResult> per_shape;
    double wall_time_s{0.0};
};

/// Full pairwise dissimilarity matrix, row-major, symmetric with a zero
/// diagonal. Rows are computed in parallel; every entry is an independent
/// similarity() call, so any partitioning gives identical results.
std::vector<double> similarity_matrix(const std::vector<LabeledShape>& shapes,
                                      const FeatureWeights& weights = {});

std::string format_matrix_csv(const std::vector<LabeledShape>& shapes,
                              const std::vector<double>& matrix);

/// Loads every supported file in the directory through the full pipeline.
/// The class label is the filename stem up to the last '-'; stems without a
/// hyphen keep the whole stem and produce a warning. Files failing the
/// pipeline are collected, not fatal. Throws EmptyDataset when nothing
/// loads.
DatasetLoad load_dataset(const std::filesystem::path& dir, const ApproxConfig& cfg = {},
                         bool invert = false);

/// Pool element with minimum dissimilarity against the query; ties go to
/// the lexicographically smallest shape_id. Throws EmptyPool.
std::pair<const LabeledShape*, double> nearest_neighbor(
    const LabeledShape& query, const std::vector<const LabeledShape*>& pool,
    const FeatureWeights& weights = {});

/// Leave-one-out 1-NN evaluation. Throws TooFewShapes (< 2 shapes) and
/// SingleClass (< 2 distinct labels).
EvalReport loocv(const std::vector<LabeledShape>& shapes, const FeatureWeights& weights = {});

/// JSON form:
/// {"accuracy", "classes", "confusion", "per_shape":[{"id","true","pred",
/// "nn","score"}], "wall_time_s"}.
std::string report_to_json(const EvalReport& report);

std::string format_summary(const EvalReport& report);

}  // namespace convseg
