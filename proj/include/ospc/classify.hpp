#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ospc/backends.hpp"
#include "ospc/types.hpp"

namespace ospc {

// Scoring prompt with {caption} and {text} placeholders. The body opens
// with the eight bias-category definitions; their names and order are part
// of the contract and are validated on load.
class PromptTemplate {
public:
    // Validates: each placeholder appears exactly once (placeholder_missing
    // otherwise) and the eight canonical categories open the body in order
    // (config_invalid otherwise).
    static PromptTemplate from_body(std::string body);
    static PromptTemplate load_file(const std::string& path);
    static const PromptTemplate& builtin();

    const std::string& body() const { return body_; }
    const std::vector<std::string>& taxonomy() const { return taxonomy_; }

private:
    PromptTemplate() = default;
    std::string body_;
    std::vector<std::string> taxonomy_;
    size_t caption_pos_ = 0;
    size_t text_pos_ = 0;

    friend std::string build_prompt(std::string_view, std::string_view, const PromptTemplate&);
};

// The embedded default template body.
std::string_view default_prompt_body();

// The eight category names, in contract order.
const std::vector<std::string>& canonical_taxonomy();

// Script-based language tagging. The text is Tamil iff the fraction of
// letter characters in the Tamil block is >= tamil_threshold. Otherwise the
// majority letter script picks chinese/english; text with no recognized
// letters is unknown. Malay is script-indistinguishable from English and is
// never auto-assigned.
LanguageTag detect_language(std::string_view text, double tamil_threshold);

// Byte-exact placeholder substitution; nothing else in the body changes.
std::string build_prompt(std::string_view caption, std::string_view text,
                         const PromptTemplate& tmpl);

// P(harmful) = softmax over the temperature-scaled Yes/No logits, computed
// with the max logit subtracted before exponentiation so extreme values
// cannot overflow. The result is kept inside the open interval (0, 1).
HarmScore harm_probability(const NextTokenLogits& logits, double temperature);

struct ClassifyConfig {
    double temperature = 1.0;
    double tamil_threshold = 0.30;
    PromptTemplate prompt = PromptTemplate::builtin();
};

struct Classification {
    LanguageTag language;
    std::optional<std::string> translated_text;  // present iff language == tamil
    HarmScore score;
    std::string prompt;
};

// Language routing + prompt construction + scoring. Tamil text is
// translated exactly once and the translation fills {text}; anything else
// passes through untouched. Backend errors carry stage attribution.
Classification classify_meme(const CaptionResult& caption, const OcrOutcome& ocr,
                             const BackendSet& backends, const ClassifyConfig& cfg);

}  // namespace ospc
