#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ospc {

struct LabeledPrediction {
    std::string id;
    double probability = 0.0;
    int label = 0;
};

struct EvalReport {
    double auroc = 0.0;
    double accuracy = 0.0;
    int n_pos = 0;
    int n_neg = 0;
    double threshold = 0.5;
};

// Mann-Whitney AUROC with half-credit ties, computed via a single sort
// (average ranks over tie groups). Requires at least one positive and one
// negative (degenerate_labels otherwise).
double auroc(const std::vector<LabeledPrediction>& preds);

// Fraction of items where (probability > threshold) equals the label.
double accuracy(const std::vector<LabeledPrediction>& preds, double threshold);

EvalReport evaluate(const std::vector<LabeledPrediction>& preds, double threshold);

struct SweepRow {
    double temperature = 0.0;
    double auroc = 0.0;
    double accuracy = 0.0;
};

// Scores each (logit_yes, logit_no) pair at every temperature in the grid.
// AUROC is constant across the grid (temperature is a monotone transform);
// accuracy can vary only when the decision threshold is not 0.5, since
// p > 0.5 iff logit_yes > logit_no at any temperature.
std::vector<SweepRow> temperature_sweep(const std::vector<std::pair<double, double>>& logit_pairs,
                                        const std::vector<int>& labels,
                                        const std::vector<double>& t_grid, double threshold = 0.5);

// --- file formats ---

struct PredictionRow {
    std::string id;
    double probability = 0.0;
    std::optional<int> label;
};

// CSV with header `id,probability[,label]`.
std::vector<PredictionRow> read_predictions_csv(const std::string& path);
// CSV with header `id,label`.
std::vector<std::pair<std::string, int>> read_labels_csv(const std::string& path);
// CSV with header `id,logit_yes,logit_no`.
std::vector<std::pair<std::string, std::pair<double, double>>> read_logit_pairs_csv(
    const std::string& path);

// Joins predictions to ground truth by id; every prediction must match
// exactly one label row.
std::vector<LabeledPrediction> join_labels(
    const std::vector<PredictionRow>& preds,
    const std::vector<std::pair<std::string, int>>& labels);

std::string eval_report_table(const EvalReport& report);

}  // namespace ospc
