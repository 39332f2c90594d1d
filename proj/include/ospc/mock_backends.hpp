#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ospc/backends.hpp"

namespace ospc {

// Deterministic stand-ins for the model backends. Outputs are pure
// functions of the input (plus the scripted tables), so runs are
// reproducible across threads and processes. Script tables must be
// populated before concurrent use; call counters are atomic.

class MockCaptioner : public Captioner {
public:
    explicit MockCaptioner(std::string name = "mock-captioner");

    void script(const MemeInput& input, std::string caption);
    void script_hash(uint64_t image_hash, std::string caption);
    void fail_with(Err code);

    CaptionResult caption(const MemeInput& input) override;
    const BackendDescriptor& descriptor() const override { return desc_; }
    int calls() const { return calls_.load(); }

private:
    BackendDescriptor desc_;
    std::map<uint64_t, std::string> table_;
    std::optional<Err> fail_;
    std::atomic<int> calls_{0};
};

class MockOcrEngine : public OcrEngine {
public:
    explicit MockOcrEngine(OcrEngineKind kind, std::string name = "");

    void script(const MemeInput& input, std::string text, double confidence);
    void script_spans(const MemeInput& input, std::vector<OcrSpan> spans);
    void fail_with(Err code);

    // Unscripted images yield ("", 0.0): a blank meme is a valid input.
    OcrOutcome recognize(const MemeInput& input) override;
    const BackendDescriptor& descriptor() const override { return desc_; }
    int calls() const { return calls_.load(); }

private:
    struct Entry {
        std::string text;
        double confidence = 0.0;
        std::vector<OcrSpan> spans;
        bool from_spans = false;
    };
    OcrEngineKind kind_;
    BackendDescriptor desc_;
    std::map<uint64_t, Entry> table_;
    std::optional<Err> fail_;
    std::atomic<int> calls_{0};
};

class MockTranslator : public Translator {
public:
    explicit MockTranslator(std::string name = "mock-translator");

    void script(std::string source_text, std::string translation);
    void fail_with(Err code);

    const BackendDescriptor& descriptor() const override { return desc_; }
    int calls() const { return calls_.load(); }

protected:
    // Unscripted text gets a reversible marker prefix so tests can detect
    // that translation happened and recover the original.
    std::string do_translate(const std::string& text) override;

private:
    BackendDescriptor desc_;
    std::map<std::string, std::string> table_;
    std::optional<Err> fail_;
    std::atomic<int> calls_{0};
};

class MockChatLlm : public ChatLlm {
public:
    explicit MockChatLlm(std::string name = "mock-chat-llm");

    // Default scoring rule: with trigger fraction f = (# configured trigger
    // words present in the prompt, case-insensitive) / (# trigger words),
    // logit("Yes") = 4*f - 2 and logit("No") = -(4*f - 2). Any other
    // candidate gets a hash-derived value in [-2, 2].
    void set_trigger_words(std::vector<std::string> words);
    void set_seed(uint64_t seed) { seed_ = seed; }
    void set_max_prompt_chars(size_t n) { max_prompt_chars_ = n; }

    // Exact logits for every prompt; takes precedence over rules.
    void script_fixed(std::map<std::string, double> logits);
    // Logits applied when the prompt contains `needle`; first match wins.
    void script_rule(std::string needle, std::map<std::string, double> logits);
    void fail_with(Err code);

    const BackendDescriptor& descriptor() const override { return desc_; }
    int calls() const { return calls_.load(); }

protected:
    std::map<std::string, double> do_next_token_logits(
        const std::string& prompt, const std::vector<std::string>& candidates) override;

private:
    double default_logit(const std::string& prompt, const std::string& candidate) const;

    BackendDescriptor desc_;
    std::vector<std::string> triggers_;
    std::map<std::string, double> fixed_;
    std::vector<std::pair<std::string, std::map<std::string, double>>> rules_;
    std::optional<Err> fail_;
    uint64_t seed_ = 0x05b0c5ed;
    size_t max_prompt_chars_ = 1 << 20;
    std::atomic<int> calls_{0};
};

class MockVisionAnnotator : public VisionAnnotator {
public:
    explicit MockVisionAnnotator(std::string name = "mock-annotator");

    void script(const MemeInput& input, AnnotatorVerdict verdict);
    void fail_with(Err code);

    // Unscripted memes get a deterministic verdict derived from the image
    // hash, with an empty rationale.
    AnnotatorVerdict annotate(const MemeInput& input, const std::string& question) override;
    const BackendDescriptor& descriptor() const override { return desc_; }
    int calls() const { return calls_.load(); }

private:
    BackendDescriptor desc_;
    std::map<uint64_t, AnnotatorVerdict> table_;
    std::optional<Err> fail_;
    std::atomic<int> calls_{0};
};

// Fresh all-mock stack with default behaviors.
BackendSet make_mock_backends(std::vector<std::string> trigger_words = {});

}  // namespace ospc
