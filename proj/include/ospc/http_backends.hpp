#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ospc/backends.hpp"

namespace ospc {

// HTTP adapters for real inference servers. Wire contract, JSON over POST
// against the descriptor's base URL:
//
//   /caption    {"image_b64": ...}                 => {"caption": ...}
//   /ocr        {"image_b64": ...}                 => {"spans": [{"text","conf","box":[x,y,w,h]}]}
//   /translate  {"text": ..., "src": "tamil"}      => {"text": ...}
//   /logits     {"prompt": ..., "candidates": [..]} => {"logits": {cand: value}}
//
// Images travel as base64-encoded PNG. Candidate-to-token-id resolution
// (including leading-space variants) is the serving side's job; this client
// speaks candidate strings only.
//
// Failures always surface as typed errors: transport failures and 5xx are
// retried up to the descriptor's retry budget and then raised as
// backend_unavailable (backend_timeout for timeouts); contract violations
// (missing fields, missing candidates) are never retried.

namespace detail {
class HttpChannel;  // small connection pool around httplib clients
}

class HttpCaptioner : public Captioner {
public:
    explicit HttpCaptioner(BackendDescriptor desc);
    ~HttpCaptioner() override;
    CaptionResult caption(const MemeInput& input) override;
    const BackendDescriptor& descriptor() const override { return desc_; }
    bool reachable() const override;

private:
    BackendDescriptor desc_;
    std::unique_ptr<detail::HttpChannel> channel_;
};

class HttpOcrEngine : public OcrEngine {
public:
    HttpOcrEngine(OcrEngineKind kind, BackendDescriptor desc);
    ~HttpOcrEngine() override;
    OcrOutcome recognize(const MemeInput& input) override;
    const BackendDescriptor& descriptor() const override { return desc_; }
    bool reachable() const override;

private:
    OcrEngineKind kind_;
    BackendDescriptor desc_;
    std::unique_ptr<detail::HttpChannel> channel_;
};

class HttpTranslator : public Translator {
public:
    explicit HttpTranslator(BackendDescriptor desc);
    ~HttpTranslator() override;
    const BackendDescriptor& descriptor() const override { return desc_; }
    bool reachable() const override;

protected:
    std::string do_translate(const std::string& text) override;

private:
    BackendDescriptor desc_;
    std::unique_ptr<detail::HttpChannel> channel_;
};

class HttpChatLlm : public ChatLlm {
public:
    explicit HttpChatLlm(BackendDescriptor desc);
    ~HttpChatLlm() override;
    const BackendDescriptor& descriptor() const override { return desc_; }
    bool reachable() const override;

protected:
    std::map<std::string, double> do_next_token_logits(
        const std::string& prompt, const std::vector<std::string>& candidates) override;

private:
    BackendDescriptor desc_;
    std::unique_ptr<detail::HttpChannel> channel_;
};

}  // namespace ospc
