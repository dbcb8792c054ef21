#pragma once

/**
 * @file session_service.hpp
 * @brief In-memory puzzle sessions behind the JSON protocol.
 *
 * Each session carries a version counter. A move names the version it was
 * made against; a mismatch is rejected as stale (409) instead of being
 * applied on top of a newer state. Mutations of one session are serialized
 * by that session's mutex. Sessions expire ttl after their last use.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "quadbox/json_io.hpp"
#include "quadbox/puzzle.hpp"

namespace quadbox {

struct ServiceResponse {
    int status;
    json::Json body;  // null for 204
};

class SessionStore {
public:
    using Clock = std::chrono::steady_clock;

    explicit SessionStore(std::chrono::seconds ttl = std::chrono::hours(1),
                          std::function<Clock::time_point()> now = Clock::now);

    ServiceResponse create(const std::string& request_body);
    ServiceResponse get(const std::string& id);
    ServiceResponse place(const std::string& id, const std::string& request_body);
    ServiceResponse check(const std::string& id);
    ServiceResponse remove(const std::string& id);

    std::size_t live_sessions();

private:
    struct Session {
        std::mutex mutex;
        std::string id;
        PuzzleState state;
        std::uint64_t version = 0;
        Clock::time_point created;
        Clock::time_point expires;
        bool deleted = false;

        Session(std::string id_, PuzzleState state_, Clock::time_point now, std::chrono::seconds ttl)
            : id(std::move(id_)), state(std::move(state_)), created(now), expires(now + ttl) {}
    };

    std::shared_ptr<Session> find(const std::string& id);
    std::string fresh_id();
    void evict_expired(Clock::time_point now);
    json::Json state_body(const Session& s) const;

    std::chrono::seconds ttl_;
    std::function<Clock::time_point()> now_;
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::mt19937_64 id_rng_;
};

/// HTTP front for a SessionStore.
class HttpService {
public:
    explicit HttpService(SessionStore& store);
    ~HttpService();

    HttpService(const HttpService&) = delete;
    HttpService& operator=(const HttpService&) = delete;

    /// Binds host:port (port 0 picks a free one) and returns the bound port, or -1.
    int bind(const std::string& host, int port);
    /// Serves until stop(); call after bind().
    bool listen();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace quadbox
