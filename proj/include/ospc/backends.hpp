#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ospc/error.hpp"
#include "ospc/types.hpp"

namespace ospc {

enum class BackendRole {
    captioner,
    ocr_primary,
    ocr_fallback,
    translator,
    chat_llm,
    vision_annotator,
};
const char* role_name(BackendRole role);

enum class BackendKind { mock, http };
const char* kind_name(BackendKind kind);

struct BackendDescriptor {
    BackendRole role = BackendRole::captioner;
    BackendKind kind = BackendKind::mock;
    std::string name;
    std::string endpoint;  // base URL; required for http, empty for mock
    std::chrono::milliseconds timeout{30000};
    int retries = 1;
};

// Finite logits for an exact set of candidate continuations.
class NextTokenLogits {
public:
    // Validates that `values` carries exactly the requested candidates and
    // that every logit is finite.
    static NextTokenLogits make(const std::vector<std::string>& requested,
                                std::map<std::string, double> values);

    double at(const std::string& candidate) const;  // throws missing_candidate
    bool contains(const std::string& candidate) const;
    const std::map<std::string, double>& values() const { return values_; }

private:
    std::map<std::string, double> values_;
};

// Rejects empty or duplicated candidate lists.
void validate_candidates(const std::vector<std::string>& candidates);

class Captioner {
public:
    virtual ~Captioner() = default;
    virtual CaptionResult caption(const MemeInput& input) = 0;
    virtual const BackendDescriptor& descriptor() const = 0;
    virtual bool reachable() const { return true; }
};

class OcrEngine {
public:
    virtual ~OcrEngine() = default;
    virtual OcrOutcome recognize(const MemeInput& input) = 0;
    virtual const BackendDescriptor& descriptor() const = 0;
    virtual bool reachable() const { return true; }
};

class Translator {
public:
    virtual ~Translator() = default;

    // Only Tamil sources are accepted; anything else is unsupported_source.
    // Empty input short-circuits to empty output.
    std::string translate(const std::string& text, const LanguageTag& source);

    virtual const BackendDescriptor& descriptor() const = 0;
    virtual bool reachable() const { return true; }

protected:
    virtual std::string do_translate(const std::string& text) = 0;
};

class ChatLlm {
public:
    virtual ~ChatLlm() = default;

    // Returns one finite logit per requested candidate, exactly.
    NextTokenLogits next_token_logits(const std::string& prompt,
                                      const std::vector<std::string>& candidates);

    virtual const BackendDescriptor& descriptor() const = 0;
    virtual bool reachable() const { return true; }

protected:
    virtual std::map<std::string, double> do_next_token_logits(
        const std::string& prompt, const std::vector<std::string>& candidates) = 0;
};

struct AnnotatorVerdict {
    std::string verdict;  // expected "Yes" or "No"
    std::string rationale;
};

class VisionAnnotator {
public:
    virtual ~VisionAnnotator() = default;
    virtual AnnotatorVerdict annotate(const MemeInput& input, const std::string& question) = 0;
    virtual const BackendDescriptor& descriptor() const = 0;
    virtual bool reachable() const { return true; }
};

// One instance per pipeline role. All members must be set before scoring;
// the annotator is only needed for distillation dataset builds.
struct BackendSet {
    std::shared_ptr<Captioner> captioner;
    std::shared_ptr<OcrEngine> ocr_primary;
    std::shared_ptr<OcrEngine> ocr_fallback;
    std::shared_ptr<Translator> translator;
    std::shared_ptr<ChatLlm> chat_llm;
    std::shared_ptr<VisionAnnotator> annotator;
};

// Dispatches to the requested engine and stamps the engine field on the
// outcome. Backend errors come back tagged with the matching stage.
OcrOutcome recognize(const BackendSet& backends, const MemeInput& input, OcrEngineKind engine);

}  // namespace ospc
