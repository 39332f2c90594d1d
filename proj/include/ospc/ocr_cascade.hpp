#pragma once

#include "ospc/backends.hpp"
#include "ospc/types.hpp"

namespace ospc {

struct CascadeConfig {
    double confidence_threshold = 0.9;
};

// Dual-engine OCR: the primary result is accepted iff its confidence is
// strictly above the threshold; otherwise the fallback engine's outcome is
// returned regardless of its own confidence. If the fallback fails after
// the primary produced non-empty text, the primary outcome comes back
// flagged degraded; otherwise the last consulted engine's error propagates.
OcrOutcome cascade_recognize(const BackendSet& backends, const MemeInput& input,
                             const CascadeConfig& cfg);

}  // namespace ospc
