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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convseg/classify.hpp"
#include "convseg/io.hpp"
#include "convseg/pipeline.hpp"
#include "convseg/svg.hpp"

namespace {

using namespace convseg;

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitPipeline = 3;
constexpr int kExitDataset = 4;

struct Options {
    int lambda{5};
    double kappa{-0.9};
    std::size_t max_passes{1000};
    std::size_t min_landmarks{3};
    bool invert{false};
    std::string out;
    std::string svg;
    std::string matrix;
    std::vector<double> weights;

    ApproxConfig approx_config() const {
        ApproxConfig cfg;
        cfg.lambda = lambda;
        cfg.kappa = kappa;
        cfg.max_passes = max_passes;
        cfg.min_landmarks = min_landmarks;
        return cfg;
    }

    FeatureWeights feature_weights() const {
        if (weights.empty()) return {};
        return FeatureWeights{weights[0], weights[1], weights[2], weights[3], weights[4]};
    }
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--lambda", opt.lambda, "Phase-2 object-scale multiplier")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--kappa", opt.kappa, "Phase-3 cosine threshold")
        ->check(CLI::Range(-1.0, 1.0));
    cmd->add_option("--max-passes", opt.max_passes, "Scan pass cap")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--invert", opt.invert, "Flip raster foreground/background");
    cmd->add_option("--out", opt.out, "Output path (default: stdout)");
}

void add_weights_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--weights", opt.weights,
                    "Per-feature weights n,x,a,b,h (experimentation only)")
        ->delimiter(',')
        ->expected(5)
        ->check(CLI::NonNegativeNumber);
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        write_text_file(opt.out, text);
    }
}

int run_trace(const std::string& input, const Options& opt) {
    const ClosedBoundary boundary = load_boundary(input, opt.invert);
    emit(opt, format_point_list(boundary.points()));
    return kExitOk;
}

int run_segment(const std::string& input, const Options& opt) {
    const ClosedBoundary boundary = load_boundary(input, opt.invert);
    const NormalizedBoundary nb = prepare(boundary);
    const LandmarkSequence lm = approximate(nb, opt.approx_config());
    emit(opt, format_landmarks(nb, lm));
    if (!opt.svg.empty()) {
        write_text_file(opt.svg, svg_segments(nb, lm));
    }
    return kExitOk;
}

int run_features(const std::string& input, const Options& opt) {
    const ClosedBoundary boundary = load_boundary(input, opt.invert);
    const ShapeAnalysis analysis = analyze(boundary, opt.approx_config());
    emit(opt, format_profile_csv(analysis.profile));
    if (!opt.svg.empty()) {
        write_text_file(opt.svg, svg_decomposition(analysis.nb, analysis.decomposition));
    }
    return kExitOk;
}

int run_render(const std::string& input, const Options& opt) {
    const ClosedBoundary boundary = load_boundary(input, opt.invert);
    const ShapeAnalysis analysis = analyze(boundary, opt.approx_config());
    std::fputs(format_decomposition(analysis.decomposition).c_str(), stdout);
    const std::string svg = svg_decomposition(analysis.nb, analysis.decomposition);
    if (!opt.svg.empty()) {
        write_text_file(opt.svg, svg);
    } else if (!opt.out.empty()) {
        write_text_file(opt.out, svg);
    }
    return kExitOk;
}

int run_sim(const std::vector<std::string>& inputs, const Options& opt) {
    std::vector<LabeledShape> shapes;
    for (const std::string& input : inputs) {
        const ClosedBoundary boundary = load_boundary(input, opt.invert);
        const std::string stem = std::filesystem::path(input).stem().string();
        ShapeAnalysis analysis = analyze(boundary, opt.approx_config(), stem);
        LabeledShape shape;
        shape.shape_id = stem;
        shape.class_label = stem;
        shape.profile = std::move(analysis.profile);
        shape.source_path = input;
        shapes.push_back(std::move(shape));
    }
    const std::vector<double> matrix = similarity_matrix(shapes, opt.feature_weights());
    emit(opt, format_matrix_csv(shapes, matrix));
    return kExitOk;
}

int run_classify(const std::string& dir, const Options& opt) {
    const DatasetLoad load = load_dataset(dir, opt.approx_config(), opt.invert);
    for (const auto& warning : load.warnings) {
        std::fprintf(stderr, "warning: %s\n", warning.c_str());
    }
    for (const auto& [path, reason] : load.failures) {
        std::fprintf(stderr, "warning: skipped %s (%s)\n", path.string().c_str(),
                     reason.c_str());
    }
    const EvalReport report = loocv(load.shapes, opt.feature_weights());
    emit(opt, report_to_json(report));
    std::fputs(format_summary(report).c_str(), stderr);
    if (!opt.matrix.empty()) {
        const std::vector<double> matrix =
            similarity_matrix(load.shapes, opt.feature_weights());
        write_text_file(opt.matrix, format_matrix_csv(load.shapes, matrix));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Silhouette classification via approximately convex segment features"};
    app.require_subcommand(1);

    Options opt;
    std::string input;
    std::string dataset_dir;
    std::vector<std::string> inputs;

    CLI::App* trace = app.add_subcommand("trace", "Trace a raster to a point-list boundary");
    trace->add_option("input", input, "Raster or point-list file")->required();
    add_common_flags(trace, opt);

    CLI::App* segment = app.add_subcommand("segment", "Polygonal approximation landmarks");
    segment->add_option("input", input, "Raster or point-list file")->required();
    add_common_flags(segment, opt);
    segment->add_option("--svg", opt.svg, "Write an SVG overlay of the approximation");

    CLI::App* features = app.add_subcommand("features", "Per-segment feature CSV");
    features->add_option("input", input, "Raster or point-list file")->required();
    add_common_flags(features, opt);
    features->add_option("--svg", opt.svg, "Write an SVG of the convex decomposition");

    CLI::App* render = app.add_subcommand("render", "Convex decomposition dump and SVG");
    render->add_option("input", input, "Raster or point-list file")->required();
    add_common_flags(render, opt);
    render->add_option("--svg", opt.svg, "SVG output path");

    CLI::App* sim = app.add_subcommand("sim", "Pairwise dissimilarity matrix");
    sim->add_option("inputs", inputs, "Two or more shape files")
        ->required()
        ->expected(2, -1);
    add_common_flags(sim, opt);
    add_weights_flag(sim, opt);

    CLI::App* classify = app.add_subcommand("classify", "Leave-one-out dataset evaluation");
    classify->add_option("dataset", dataset_dir, "Directory of labeled shape files")
        ->required();
    add_common_flags(classify, opt);
    add_weights_flag(classify, opt);
    classify->add_option("--matrix", opt.matrix, "Also write the pairwise CSV here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (trace->parsed()) return run_trace(input, opt);
        if (segment->parsed()) return run_segment(input, opt);
        if (features->parsed()) return run_features(input, opt);
        if (render->parsed()) return run_render(input, opt);
        if (sim->parsed()) return run_sim(inputs, opt);
        if (classify->parsed()) return run_classify(dataset_dir, opt);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.kind()) {
            case error_kind::io: return kExitIo;
            case error_kind::dataset: return kExitDataset;
            case error_kind::pipeline: return kExitPipeline;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPipeline;
    }
    return kExitOk;
}
