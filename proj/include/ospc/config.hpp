#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ospc/backends.hpp"
#include "ospc/pipeline.hpp"

namespace ospc {

struct BackendConfig {
    BackendKind kind = BackendKind::mock;
    std::string name;
    std::string endpoint;
    int timeout_ms = 30000;
    int retries = 1;
    // chat_llm mock only: trigger word list for the default scoring rule.
    std::vector<std::string> trigger_words;

    bool operator==(const BackendConfig&) const = default;
};

struct ServiceConfig {
    std::string host = "0.0.0.0";
    int port = 8080;
    bool operator==(const ServiceConfig&) const = default;
};

// Full application configuration. Every field has a default, so an empty
// config document is valid and yields the all-mock stack.
struct AppConfig {
    BackendConfig captioner;
    BackendConfig ocr_primary;
    BackendConfig ocr_fallback;
    BackendConfig translator;
    BackendConfig chat_llm;
    BackendConfig vision_annotator;

    double ocr_confidence_threshold = 0.9;
    double scorer_temperature = 1.0;
    double language_tamil_threshold = 0.30;
    std::string prompt_template_path;  // empty = embedded default
    int parallelism = 4;
    ServiceConfig service;

    bool operator==(const AppConfig&) const = default;
};

AppConfig default_config();

// JSON round-trip: parse(serialize(cfg)) == cfg.
AppConfig parse_config(const std::string& json_text);  // config_invalid on bad input
std::string serialize_config(const AppConfig& cfg);
AppConfig load_config_file(const std::string& path);

// Environment overrides beat file values. Key mapping: config path with
// dots replaced by underscores, upper-cased, prefixed OSPC_
// (e.g. scorer.temperature -> OSPC_SCORER_TEMPERATURE).
using EnvLookup = std::function<const char*(const char*)>;
void apply_env_overrides(AppConfig& cfg, const EnvLookup& getenv_fn);
void apply_env_overrides(AppConfig& cfg);  // uses std::getenv

// Range checks plus template-file validation when a path is set.
void validate_config(const AppConfig& cfg);

BackendSet make_backends(const AppConfig& cfg);
PromptTemplate load_prompt_template(const AppConfig& cfg);
PipelineConfig make_pipeline_config(const AppConfig& cfg);

}  // namespace ospc
