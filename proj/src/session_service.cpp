#include "quadbox/session_service.hpp"

#include <cstdio>

#include "quadbox/text.hpp"

namespace quadbox {

namespace {

ServiceResponse error(int status, const std::string& code, const std::string& message) {
    return {status, json::Json{{"error", code}, {"message", message}}};
}

ServiceResponse not_found(const std::string& id) {
    return error(404, "not_found", "no live session " + id);
}

std::optional<CardKind> card_kind(const std::string& name) {
    for (CardKind k : {CardKind::x_square, CardKind::x, CardKind::unit}) {
        if (kind_name(k) == name) return k;
    }
    return std::nullopt;
}

}  // namespace

SessionStore::SessionStore(std::chrono::seconds ttl, std::function<Clock::time_point()> now)
    : ttl_(ttl), now_(std::move(now)), id_rng_(std::random_device{}()) {}

std::string SessionStore::fresh_id() {
    // Caller holds mutex_.
    while (true) {
        char buf[33];
        std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(id_rng_()),
                      static_cast<unsigned long long>(id_rng_()));
        std::string id(buf);
        if (sessions_.count(id) == 0) return id;
    }
}

void SessionStore::evict_expired(Clock::time_point now) {
    for (auto it = sessions_.begin(); it != sessions_.end();) {
        if (it->second->expires <= now) {
            it = sessions_.erase(it);
        } else {
            ++it;
        }
    }
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) {
    std::lock_guard lock(mutex_);
    const auto now = now_();
    evict_expired(now);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return nullptr;
    it->second->expires = now + ttl_;
    return it->second;
}

std::size_t SessionStore::live_sessions() {
    std::lock_guard lock(mutex_);
    evict_expired(now_());
    return sessions_.size();
}

json::Json SessionStore::state_body(const Session& s) const {
    return json::Json{{"id", s.id},
                      {"target", json::poly(s.state.target())},
                      {"inventory", json::inventory(s.state)},
                      {"placed", json::placed(s.state)},
                      {"version", s.version}};
}

ServiceResponse SessionStore::create(const std::string& request_body) {
    const auto body = json::Json::parse(request_body, nullptr, false);
    if (body.is_discarded() || !body.is_object() || !body.contains("polynomial") || !body["polynomial"].is_string())
        return error(400, "bad_request", "expected {\"polynomial\": \"<text>\"}");
    const auto text = body["polynomial"].get<std::string>();
    std::optional<QuadraticPoly> target;
    try {
        const ParsedPoly parsed = parse(text);
        if (!std::holds_alternative<QuadraticPoly>(parsed))
            return error(400, "parse", "the polynomial box needs integer coefficients");
        target = std::get<QuadraticPoly>(parsed);
    } catch (const ParseError& e) {
        auto resp = error(400, "parse", e.what());
        resp.body["position"] = e.position();
        return resp;
    }

    std::lock_guard lock(mutex_);
    const auto now = now_();
    evict_expired(now);
    const std::string id = fresh_id();
    auto session = std::make_shared<Session>(id, PuzzleState::start(*target), now, ttl_);
    sessions_.emplace(id, session);
    return {200, json::Json{{"id", id},
                            {"target", json::poly(*target)},
                            {"inventory", json::inventory(session->state)},
                            {"version", 0}}};
}

ServiceResponse SessionStore::get(const std::string& id) {
    auto s = find(id);
    if (!s) return not_found(id);
    std::lock_guard lock(s->mutex);
    if (s->deleted) return not_found(id);
    return {200, state_body(*s)};
}

ServiceResponse SessionStore::place(const std::string& id, const std::string& request_body) {
    auto s = find(id);
    if (!s) return not_found(id);

    const auto body = json::Json::parse(request_body, nullptr, false);
    const bool shape_ok = !body.is_discarded() && body.is_object() && body.contains("card") &&
                          body["card"].is_object() && body["card"].contains("kind") &&
                          body["card"]["kind"].is_string() && body["card"].contains("sign") &&
                          body["card"]["sign"].is_number_integer() && body.contains("row") &&
                          body["row"].is_number_integer() && body.contains("col") &&
                          body["col"].is_number_integer() && body.contains("version") &&
                          body["version"].is_number_integer();
    if (!shape_ok)
        return error(400, "bad_request",
                     "expected {\"card\":{\"kind\",\"sign\"}, \"row\", \"col\", \"version\"}");
    const auto kind = card_kind(body["card"]["kind"].get<std::string>());
    if (!kind) return error(400, "bad_request", "card kind must be \"x2\", \"x\" or \"1\"");
    std::optional<Orientation> orientation;
    if (body["card"].contains("orientation")) {
        const auto& o = body["card"]["orientation"];
        if (o == "tall") {
            orientation = Orientation::tall;
        } else if (o == "wide") {
            orientation = Orientation::wide;
        } else {
            return error(400, "bad_request", "orientation must be \"tall\" or \"wide\"");
        }
    }
    const Card card{*kind, body["card"]["sign"].get<int>()};
    const Position pos{body["row"].get<int>(), body["col"].get<int>()};
    const auto version = body["version"].get<std::int64_t>();

    std::lock_guard lock(s->mutex);
    if (s->deleted) return not_found(id);
    if (version < 0 || static_cast<std::uint64_t>(version) != s->version) {
        auto resp = error(409, "stale_version", "move made against version " + std::to_string(version));
        resp.body["version"] = s->version;
        return resp;
    }
    try {
        PlacementResult result = validate_placement(s->state, card, pos, orientation);
        if (auto* rejection = std::get_if<PlacementRejection>(&result)) {
            auto resp = error(422, "adjacency", rejection->message());
            resp.body["edge"] = std::string(side_name(rejection->side));
            resp.body["neighbor"] = json::Json{{"row", rejection->neighbor.row},
                                               {"col", rejection->neighbor.col},
                                               {"kind", std::string(kind_name(rejection->neighbor_card.card.kind))}};
            return resp;
        }
        s->state = std::get<PuzzleState>(std::move(result));
    } catch (const PuzzleError& e) {
        return error(422, std::string(puzzle_error_code(e.kind())), e.what());
    }
    ++s->version;
    return {200, state_body(*s)};
}

ServiceResponse SessionStore::check(const std::string& id) {
    auto s = find(id);
    if (!s) return not_found(id);
    std::lock_guard lock(s->mutex);
    if (s->deleted) return not_found(id);
    const CompletionResult result = check_completion(s->state);
    if (const auto* fac = std::get_if<Factorization>(&result)) {
        return {200, json::Json{{"complete", true},
                                {"factors", json::factors(*fac)},
                                {"missing", 0},
                                {"display", print(*fac)},
                                {"version", s->version}}};
    }
    const auto& nc = std::get<NotComplete>(result);
    return {200, json::Json{{"complete", false},
                            {"factors", nullptr},
                            {"missing", nc.missing},
                            {"reason", nc.reason},
                            {"version", s->version}}};
}

ServiceResponse SessionStore::remove(const std::string& id) {
    std::shared_ptr<Session> s;
    {
        std::lock_guard lock(mutex_);
        evict_expired(now_());
        auto it = sessions_.find(id);
        if (it == sessions_.end()) return not_found(id);
        s = it->second;
        sessions_.erase(it);
    }
    std::lock_guard lock(s->mutex);
    s->deleted = true;
    return {204, nullptr};
}

}  // namespace quadbox
