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

#include "convseg/classify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include <nlohmann/json.hpp>

#include "convseg/io.hpp"
#include "convseg/parallel.hpp"

namespace convseg {

namespace {

std::string class_of_stem(const std::string& stem, bool* missing_hyphen) {
    const std::size_t pos = stem.rfind('-');
    if (pos == std::string::npos || pos == 0) {
        if (missing_hyphen) *missing_hyphen = true;
        return stem;
    }
    return stem.substr(0, pos);
}

bool supported_file(const std::filesystem::path& path) {
    if (is_raster_file(path)) return true;
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".txt" || ext == ".pts";
}

}  // namespace

std::vector<double> similarity_matrix(const std::vector<LabeledShape>& shapes,
                                      const FeatureWeights& weights) {
    const std::size_t m = shapes.size();
    std::vector<double> matrix(m * m, 0.0);
    parallel_for(m, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            matrix[i * m + j] = similarity(shapes[i].profile, shapes[j].profile, weights);
        }
    });
    // mirror the upper triangle
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            matrix[i * m + j] = matrix[j * m + i];
        }
    }
    return matrix;
}

std::string format_matrix_csv(const std::vector<LabeledShape>& shapes,
                              const std::vector<double>& matrix) {
    const std::size_t m = shapes.size();
    std::string out = "id";
    for (const LabeledShape& s : shapes) {
        out += ',';
        out += s.shape_id;
    }
    out += '\n';
    char cell[64];
    for (std::size_t i = 0; i < m; ++i) {
        out += shapes[i].shape_id;
        for (std::size_t j = 0; j < m; ++j) {
            std::snprintf(cell, sizeof(cell), ",%.9g", matrix[i * m + j]);
            out += cell;
        }
        out += '\n';
    }
    return out;
}

DatasetLoad load_dataset(const std::filesystem::path& dir, const ApproxConfig& cfg,
                         bool invert) {
    if (!std::filesystem::is_directory(dir)) {
        throw Error(errc::io_error, dir.string() + " is not a directory");
    }

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && supported_file(entry.path())) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    DatasetLoad load;
    std::vector<std::optional<LabeledShape>> slots(files.size());
    std::vector<std::optional<std::string>> errors(files.size());

    parallel_for(files.size(), [&](std::size_t i) {
        const std::filesystem::path& path = files[i];
        try {
            const ClosedBoundary boundary = load_boundary(path, invert);
            const std::string stem = path.stem().string();
            ShapeAnalysis analysis = analyze(boundary, cfg, stem);
            LabeledShape shape;
            shape.shape_id = stem;
            shape.class_label = class_of_stem(stem, nullptr);
            shape.profile = std::move(analysis.profile);
            shape.source_path = path;
            slots[i] = std::move(shape);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });

    for (std::size_t i = 0; i < files.size(); ++i) {
        if (slots[i].has_value()) {
            bool missing_hyphen = false;
            class_of_stem(slots[i]->shape_id, &missing_hyphen);
            if (missing_hyphen) {
                load.warnings.push_back("no '-' in \"" + slots[i]->shape_id +
                                        "\"; using the whole stem as class label");
            }
            load.shapes.push_back(std::move(*slots[i]));
        } else if (errors[i].has_value()) {
            load.failures.emplace_back(files[i], *errors[i]);
        }
    }

    if (load.shapes.empty()) {
        throw Error(errc::empty_dataset, "no shape loaded from " + dir.string());
    }
    return load;
}

std::pair<const LabeledShape*, double> nearest_neighbor(
    const LabeledShape& query, const std::vector<const LabeledShape*>& pool,
    const FeatureWeights& weights) {
    if (pool.empty()) {
        throw Error(errc::empty_pool);
    }
    const LabeledShape* best = nullptr;
    double best_score = 0.0;
    for (const LabeledShape* cand : pool) {
        const double s = similarity(query.profile, cand->profile, weights);
        if (best == nullptr || s < best_score ||
            (s == best_score && cand->shape_id < best->shape_id)) {
            best = cand;
            best_score = s;
        }
    }
    return {best, best_score};
}

EvalReport loocv(const std::vector<LabeledShape>& shapes, const FeatureWeights& weights) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t m = shapes.size();
    if (m < 2) {
        throw Error(errc::too_few_shapes, "need at least 2 shapes");
    }
    std::set<std::string> labels;
    for (const LabeledShape& s : shapes) labels.insert(s.class_label);
    if (labels.size() < 2) {
        throw Error(errc::single_class, "need at least 2 classes");
    }

    const std::vector<double> matrix = similarity_matrix(shapes, weights);

    EvalReport report;
    report.confusion.classes.assign(labels.begin(), labels.end());
    const std::size_t k = report.confusion.classes.size();
    report.confusion.counts.assign(k * k, 0);
    std::map<std::string, std::size_t> class_index;
    for (std::size_t c = 0; c < k; ++c) class_index[report.confusion.classes[c]] = c;

    std::size_t correct = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t best = m;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            if (best == m || matrix[i * m + j] < matrix[i * m + best] ||
                (matrix[i * m + j] == matrix[i * m + best] &&
                 shapes[j].shape_id < shapes[best].shape_id)) {
                best = j;
            }
        }
        PerShapeResult r;
        r.shape_id = shapes[i].shape_id;
        r.true_label = shapes[i].class_label;
        r.predicted_label = shapes[best].class_label;
        r.nearest_id = shapes[best].shape_id;
        r.score = matrix[i * m + best];
        if (r.predicted_label == r.true_label) ++correct;
        report.confusion.counts[class_index[r.true_label] * k +
                                class_index[r.predicted_label]] += 1;
        report.per_shape.push_back(std::move(r));
    }

    report.accuracy = 100.0 * static_cast<double>(correct) / static_cast<double>(m);
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_json(const EvalReport& report) {
    nlohmann::ordered_json j;
    j["accuracy"] = report.accuracy;
    j["classes"] = report.confusion.classes;
    nlohmann::ordered_json confusion = nlohmann::ordered_json::array();
    const std::size_t k = report.confusion.classes.size();
    for (std::size_t t = 0; t < k; ++t) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t p = 0; p < k; ++p) {
            row.push_back(report.confusion.at(t, p));
        }
        confusion.push_back(std::move(row));
    }
    j["confusion"] = std::move(confusion);
    nlohmann::ordered_json per_shape = nlohmann::ordered_json::array();
    for (const PerShapeResult& r : report.per_shape) {
        nlohmann::ordered_json entry;
        entry["id"] = r.shape_id;
        entry["true"] = r.true_label;
        entry["pred"] = r.predicted_label;
        entry["nn"] = r.nearest_id;
        entry["score"] = r.score;
        per_shape.push_back(std::move(entry));
    }
    j["per_shape"] = std::move(per_shape);
    j["wall_time_s"] = report.wall_time_s;
    return j.dump(2) + "\n";
}

std::string format_summary(const EvalReport& report) {
    char line[128];
    std::string out;
    std::snprintf(line, sizeof(line), "shapes:   %zu\n", report.per_shape.size());
    out += line;
    std::snprintf(line, sizeof(line), "classes:  %zu\n", report.confusion.classes.size());
    out += line;
    std::snprintf(line, sizeof(line), "accuracy: %.2f%%\n", report.accuracy);
    out += line;
    std::snprintf(line, sizeof(line), "time:     %.3f s\n", report.wall_time_s);
    out += line;
    return out;
}

}  // namespace convseg
