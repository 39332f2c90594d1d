#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ospc/image.hpp"

namespace ospc {

struct MemeInput {
    std::string id;
    Image image;
    std::string source_path;
};

// Decodes a raw payload and enforces the input invariants (positive
// dimensions, non-empty id). Never crashes on malformed bytes.
MemeInput validate_meme_input(std::string_view raw, std::string id, std::string source_path = "");

uint64_t content_hash(const MemeInput& input);

struct CaptionResult {
    std::string text;  // may be empty only if the backend explicitly said so
    std::string backend_name;
};

enum class OcrEngineKind { primary, fallback };
const char* engine_name(OcrEngineKind kind);

struct OcrBox {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
    bool operator==(const OcrBox&) const = default;
};

struct OcrSpan {
    std::string text;
    OcrBox box;
    double confidence = 0.0;
};

struct OcrOutcome {
    std::string text;
    double confidence = 0.0;  // min over span confidences when spans exist
    OcrEngineKind engine = OcrEngineKind::primary;
    std::vector<OcrSpan> spans;
    // Set when the fallback engine failed and the accepted primary result
    // was returned anyway.
    bool degraded = false;
};

// Builds an outcome from raw spans: text assembled in reading order
// (top-to-bottom by box top edge, then left-to-right, single-space joined),
// scalar confidence = min span confidence. No spans -> ("", 0.0).
OcrOutcome assemble_outcome(std::vector<OcrSpan> spans, OcrEngineKind engine);

enum class Language { english, chinese, malay, tamil, unknown };
const char* language_name(Language lang);
Language language_from_name(std::string_view name);  // throws precondition

struct LanguageTag {
    Language value = Language::unknown;
    double tamil_char_fraction = 0.0;
};

// Yes/No logits plus the temperature-scaled softmax probability of "Yes".
struct HarmScore {
    double logit_yes = 0.0;
    double logit_no = 0.0;
    double temperature = 1.0;
    double probability = 0.5;
};

// Binary decision rule: strictly greater than 0.5; a tie at exactly 0.5
// classifies as not harmful.
inline constexpr double kLabelThreshold = 0.5;
inline int harm_label(double probability) { return probability > kLabelThreshold ? 1 : 0; }

struct PipelineResult {
    std::string meme_id;
    CaptionResult caption;
    OcrOutcome ocr;
    LanguageTag language;
    std::optional<std::string> translated_text;  // present iff language == tamil
    HarmScore score;
    int label = 0;
    std::string prompt;  // the exact prompt sent to the scoring model
};

}  // namespace ospc
