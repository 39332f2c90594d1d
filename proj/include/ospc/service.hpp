#pragma once

#include <atomic>
#include <memory>
#include <string>

#include "ospc/backends.hpp"
#include "ospc/config.hpp"

namespace ospc {

// HTTP scoring service.
//
//   POST /api/v1/score   multipart field "image" or JSON {"image_b64", "id"?}
//                        -> 200 PipelineResult JSON
//                        -> 400 undecodable or empty image
//                        -> 502 backend failure, body carries the stage
//                        -> 503 while draining for shutdown
//   GET  /api/v1/health  -> 200 {"status", "backends": per-role reachability}
//
// Requests run on a worker pool sized by cfg.parallelism; excess requests
// queue rather than fail.
class ScoreService {
public:
    ScoreService(AppConfig cfg, BackendSet backends);
    explicit ScoreService(AppConfig cfg);
    ~ScoreService();

    ScoreService(const ScoreService&) = delete;
    ScoreService& operator=(const ScoreService&) = delete;

    // Returns the bound port (useful with port 0 for tests), or -1.
    int bind(const std::string& host, int port);
    // Blocks serving requests until stop().
    bool run();
    bool wait_until_ready(int timeout_ms = 5000) const;

    // New score requests get 503 from this point on.
    void begin_drain();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// CLI entry: binds cfg.service host/port, installs SIGINT/SIGTERM handlers
// that drain and stop. Returns a process exit code.
int run_service(const AppConfig& cfg);

}  // namespace ospc
