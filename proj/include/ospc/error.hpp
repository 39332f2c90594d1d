#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ospc {

enum class Err {
    undecodable_image,
    empty_id,
    backend_unavailable,
    backend_timeout,
    unsupported_source,
    prompt_too_long,
    placeholder_missing,
    missing_candidate,
    nonpositive_temperature,
    stage_failure,
    duplicate_id,
    degenerate_labels,
    empty_set,
    no_font_for_script,
    text_too_long,
    empty_corpus,
    malformed_verdict,
    provider_failure,
    precondition,
    config_invalid,
    io_error,
};

const char* err_name(Err code);

// Pipeline stages, used for error attribution in batch reports and the
// HTTP service's 502 bodies.
enum class Stage {
    decode,
    caption,
    ocr_primary,
    ocr_fallback,
    translate,
    score,
    annotate,
};

const char* stage_name(Stage stage);

class OspcError : public std::runtime_error {
public:
    OspcError(Err code, std::string message);
    OspcError(Err code, Stage stage, std::string message);
    OspcError(Err code, Stage stage, Err cause, std::string message);

    Err code() const { return code_; }
    // The original backend error when this is a stage_failure wrapper,
    // otherwise equal to code().
    Err cause() const { return cause_; }
    std::optional<Stage> stage() const { return stage_; }

private:
    Err code_;
    Err cause_;
    std::optional<Stage> stage_;
};

[[noreturn]] void fail(Err code, std::string message);
[[noreturn]] void fail(Err code, Stage stage, std::string message);

}  // namespace ospc
