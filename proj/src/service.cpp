#include "skewtilt/service.hpp"

#include "skewtilt/errors.hpp"

#include <httplib.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <stdexcept>

namespace skewtilt::service {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw ParseError("request body must be a JSON object");
    if (!j.contains(key)) throw ParseError("missing field '" + std::string(key) + "'");
    return j.at(key);
}

void only_fields(const json& j, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ParseError("request body must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw ParseError("unknown field '" + key + "'");
    }
}

PseudoTri valid_tri(const json& j) {
    int n = 0;
    auto arcs = wire::arcs_from_json(j, n);
    auto report = validate(arcs, n);
    if (!report.ok) {
        std::string msg = "not a pseudo-triangulation";
        for (const auto& v : report.violations) msg += "; " + v;
        throw DomainError(msg);
    }
    return PseudoTri(n, arcs);
}

int query_int(const Query& q, const std::string& key, std::optional<int> fallback) {
    auto it = q.find(key);
    if (it == q.end()) {
        if (fallback) return *fallback;
        throw ParseError("missing query parameter '" + key + "'");
    }
    try {
        size_t used = 0;
        int v = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("query parameter '" + key + "' must be an integer");
    }
}

Response error_response(int status, const std::string& message) {
    return {status, render(json{{"error", message}, {"violations", json::array({message})}})};
}

} // namespace

json validate_op(const json& tri) {
    int n = 0;
    auto arcs = wire::arcs_from_json(tri, n);
    return wire::to_json(validate(arcs, n), arcs.size());
}

json flip_op(const json& request) {
    only_fields(request, {"tri", "arc"});
    PseudoTri t = valid_tri(field(request, "tri"));
    SkewCurve g = wire::curve_from_json(field(request, "arc"), t.n());
    return wire::to_json(flip(t, g));
}

json path_op(const json& request) {
    only_fields(request, {"from", "to"});
    PseudoTri from = valid_tri(field(request, "from"));
    PseudoTri to = valid_tri(field(request, "to"));
    FlipSequence steps = flip_path(from, to);
    return {{"length", steps.size()}, {"steps", wire::to_json(steps)}};
}

json shift_op(const json& request) {
    only_fields(request, {"tri", "by"});
    PseudoTri t = valid_tri(field(request, "tri"));
    const json& by = field(request, "by");
    if (!by.is_string()) throw ParseError("field 'by' must be a lattice element string");
    return wire::to_json(shift_all(t, LElement::parse(t.n(), by.get<std::string>())));
}

json map_op(const json& request) {
    only_fields(request, {"n", "arc", "sheaf"});
    const json& nj = field(request, "n");
    if (!nj.is_number_integer()) throw ParseError("field 'n' must be an integer");
    int n = nj.get<int>();
    if (n < 2) throw DomainError("weight n must be at least 2");
    bool has_arc = request.contains("arc"), has_sheaf = request.contains("sheaf");
    if (has_arc == has_sheaf) throw ParseError("give exactly one of 'arc' and 'sheaf'");
    SkewCurve g;
    if (has_arc) {
        g = canonicalize(wire::curve_from_json(request.at("arc"), n), n);
    } else {
        if (!request.at("sheaf").is_string()) throw ParseError("field 'sheaf' must be a string");
        g = phi_inv(parse_sheaf(request.at("sheaf").get<std::string>(), n), n);
    }
    return {{"n", n},
            {"arc", wire::to_json(g)},
            {"arc_text", to_string(g)},
            {"sheaf", display(phi(g, n))},
            {"equivariant", equivariant_description(g, n)}};
}

json enumerate_op(int n, int window) {
    if (n < 2) throw DomainError("weight n must be at least 2");
    json nodes = json::array();
    for (const auto& t : enumerate(n, window)) nodes.push_back(wire::to_json(t));
    return {{"n", n}, {"window", window}, {"count", nodes.size()}, {"nodes", nodes}};
}

json model_op(int n) {
    if (n < 2) throw DomainError("weight n must be at least 2");
    json stars = json::array();
    for (Sign e1 : {Sign::Plus, Sign::Minus})
        for (Sign e2 : {Sign::Plus, Sign::Minus}) stars.push_back(wire::to_json(Star{e1, e2}));
    json families = {
        {"half", {{"cross", {1, 2}}, {"index", "any integer"}, {"sign", {"+", "-"}}}},
        {"pair", {{"i", "any integer"}, {"k", {{"min", 1}, {"max", n - 1}}}}},
        {"tors", {{"res", {{"min", 0}, {"max", n - 1}}}, {"len", {{"min", 1}, {"max", n - 1}}}}},
    };
    return {{"n", n}, {"arc_count", n + 3}, {"stars", stars}, {"families", families}};
}

std::string render(const json& body) { return body.dump(2) + "\n"; }

Response handle(const std::string& method, const std::string& path, const std::string& body, const Query& query) {
    try {
        if (method == "GET") {
            if (path == "/enumerate") {
                int n = query_int(query, "n", std::nullopt);
                return {200, render(enumerate_op(n, query_int(query, "window", 2 * n)))};
            }
            if (path == "/model") return {200, render(model_op(query_int(query, "n", std::nullopt)))};
        } else if (method == "POST") {
            if (path == "/validate") {
                json report = validate_op(wire::parse(body));
                return {report.at("ok").get<bool>() ? 200 : 422, render(report)};
            }
            if (path == "/flip") return {200, render(flip_op(wire::parse(body)))};
            if (path == "/path") return {200, render(path_op(wire::parse(body)))};
            if (path == "/shift") return {200, render(shift_op(wire::parse(body)))};
            if (path == "/map") return {200, render(map_op(wire::parse(body)))};
        }
        return error_response(404, "no route for " + method + " " + path);
    } catch (const ParseError& e) {
        return error_response(400, e.what());
    } catch (const json::exception& e) {
        return error_response(400, e.what());
    } catch (const DomainError& e) {
        return error_response(422, e.what());
    } catch (const std::exception& e) {
        spdlog::error("internal error on {} {}: {}", method, path, e.what());
        return error_response(500, e.what());
    }
}

struct Server::Impl {
    httplib::Server server;
};

Server::Server() : impl_(std::make_unique<Impl>()) {
    auto route = [](const httplib::Request& req, httplib::Response& res) {
        Query query;
        for (const auto& [k, v] : req.params) query[k] = v;
        Response r = handle(req.method, req.path, req.body, query);
        spdlog::info("{} {} -> {}", req.method, req.path, r.status);
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };
    for (const char* p : {"/validate", "/flip", "/path", "/shift", "/map"}) impl_->server.Post(p, route);
    for (const char* p : {"/enumerate", "/model"}) impl_->server.Get(p, route);
}

Server::~Server() { stop(); }

int Server::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool Server::bind(const std::string& host, int port) { return impl_->server.bind_to_port(host, port); }

bool Server::listen() { return impl_->server.listen_after_bind(); }

void Server::stop() { impl_->server.stop(); }

void Server::wait_until_ready() const { impl_->server.wait_until_ready(); }

void configure_logging() {
    if (!spdlog::get("skewtilt")) spdlog::set_default_logger(spdlog::stderr_color_mt("skewtilt"));
    spdlog::set_level(spdlog::level::warn);
    if (const char* level = std::getenv("SKEWTILT_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

} // namespace skewtilt::service
