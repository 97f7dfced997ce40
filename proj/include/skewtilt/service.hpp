#pragma once

#include "skewtilt/wire.hpp"

#include <map>
#include <memory>
#include <string>

namespace skewtilt::service {

using wire::json;

struct Response {
    int status = 200;
    std::string body;
};

using Query = std::map<std::string, std::string>;

json validate_op(const json& tri);
json flip_op(const json& request);
json path_op(const json& request);
json shift_op(const json& request);
json map_op(const json& request);
json enumerate_op(int n, int window);
json model_op(int n);

std::string render(const json& body);

// Routes one request without any network I/O.
Response handle(const std::string& method, const std::string& path, const std::string& body, const Query& query = {});

class Server {
public:
    Server();
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    int bind_any_port(const std::string& host);
    bool bind(const std::string& host, int port);
    bool listen();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

void configure_logging();

} // namespace skewtilt::service
