#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ospc/backends.hpp"
#include "ospc/classify.hpp"
#include "ospc/ocr_cascade.hpp"
#include "ospc/types.hpp"

namespace ospc {

struct PipelineConfig {
    CascadeConfig cascade;
    ClassifyConfig classify;
    int parallelism = 1;
};

// caption -> OCR cascade -> (translate?) -> score. Caption and OCR are
// independent and run concurrently; translation and scoring strictly follow
// OCR. Failures surface as stage_failure with the failing stage attached.
PipelineResult score_one(const MemeInput& input, const BackendSet& backends,
                         const PipelineConfig& cfg);

struct BatchFailure {
    std::string meme_id;
    Stage stage = Stage::caption;
    Err cause = Err::backend_unavailable;
    std::string message;
};

struct StageTiming {
    double total_ms = 0.0;
    int count = 0;
};

struct BatchReport {
    std::vector<PipelineResult> results;   // input order, failed items omitted
    std::vector<BatchFailure> failures;    // input order
    std::map<std::string, StageTiming> timing;
};

// Invoked in input order as the completed prefix grows, so callers can
// stream output while preserving order.
using ResultCallback = std::function<void(const PipelineResult&)>;

// Scores a batch over a worker pool of cfg.parallelism threads. Ids must be
// unique (duplicate_id otherwise, before any work). Per-item failures never
// abort the batch, and the result set is identical at any parallelism.
BatchReport score_batch(const std::vector<MemeInput>& inputs, const BackendSet& backends,
                        const PipelineConfig& cfg, const ResultCallback& on_result = {});

// Prediction file format: header `id,probability,label`, probability with
// six decimal places.
std::string prediction_header();
std::string prediction_line(const PipelineResult& result);
void write_predictions(std::ostream& out, const std::vector<PipelineResult>& results);

}  // namespace ospc
