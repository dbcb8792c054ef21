#include "httplib.h"
#include "quadbox/session_service.hpp"

namespace quadbox {

struct HttpService::Impl {
    SessionStore& store;
    httplib::Server server;

    explicit Impl(SessionStore& s) : store(s) {}
};

namespace {

void reply(httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    if (r.status != 204) res.set_content(r.body.dump(), "application/json");
}

}  // namespace

HttpService::HttpService(SessionStore& store) : impl_(std::make_unique<Impl>(store)) {
    auto& svr = impl_->server;
    auto& st = impl_->store;
    const std::string id_pattern = "/session/([0-9a-f]+)";

    svr.Post("/session", [&st](const httplib::Request& req, httplib::Response& res) {
        reply(res, st.create(req.body));
    });
    svr.Get(id_pattern, [&st](const httplib::Request& req, httplib::Response& res) {
        reply(res, st.get(req.matches[1]));
    });
    svr.Post(id_pattern + "/place", [&st](const httplib::Request& req, httplib::Response& res) {
        reply(res, st.place(req.matches[1], req.body));
    });
    svr.Post(id_pattern + "/check", [&st](const httplib::Request& req, httplib::Response& res) {
        reply(res, st.check(req.matches[1]));
    });
    svr.Delete(id_pattern, [&st](const httplib::Request& req, httplib::Response& res) {
        reply(res, st.remove(req.matches[1]));
    });
    svr.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            what = e.what();
        } catch (...) {
        }
        res.status = 500;
        res.set_content(json::Json{{"error", "internal"}, {"message", what}}.dump(), "application/json");
    });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpService::listen() { return impl_->server.listen_after_bind(); }

void HttpService::stop() {
    if (impl_) impl_->server.stop();
}

void HttpService::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace quadbox
