#include "skewtilt/cli.hpp"

#include "skewtilt/errors.hpp"
#include "skewtilt/service.hpp"

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include <fstream>
#include <sstream>

namespace skewtilt {

namespace {

using service::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

json read_json(const std::string& path) { return wire::parse(read_file(path)); }

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pseudo-triangulations of the weighted cylinder and their flips"};
    app.require_subcommand(1);

    int n = 0;
    int window = -1;
    int port = 8080;
    std::string arc, sheaf, dot, csv, file_a, file_b, by;

    auto* map = app.add_subcommand("map", "Map a skew-curve to its sheaf or a sheaf name to its skew-curve");
    map->add_option("--n", n, "Weight n")->required();
    auto* arc_opt = map->add_option("--arc", arc, "Skew-curve as JSON");
    auto* sheaf_opt = map->add_option("--sheaf", sheaf, "Sheaf name");
    arc_opt->excludes(sheaf_opt);

    auto* check = app.add_subcommand("check", "Validate a pseudo-triangulation file");
    check->add_option("file", file_a)->required();

    auto* flip_cmd = app.add_subcommand("flip", "Flip one arc of a pseudo-triangulation");
    flip_cmd->add_option("file", file_a)->required();
    flip_cmd->add_option("--arc", arc, "Arc to flip as JSON")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List pseudo-triangulations modulo the x3 shift");
    enumerate_cmd->add_option("--n", n, "Weight n")->required();
    enumerate_cmd->add_option("--window", window, "Slant window (default 2n)");

    auto* path = app.add_subcommand("path", "Flip sequence between two pseudo-triangulations");
    path->add_option("from", file_a)->required();
    path->add_option("to", file_b)->required();

    auto* graph = app.add_subcommand("graph", "Export the flip graph modulo the x3 shift");
    graph->add_option("--n", n, "Weight n")->required();
    graph->add_option("--window", window, "Slant window (default 2n)");
    graph->add_option("--dot", dot, "Write Graphviz output here");
    graph->add_option("--csv", csv, "Write CSV output here");

    auto* shift_cmd = app.add_subcommand("shift", "Shift every arc by a lattice element");
    shift_cmd->add_option("file", file_a)->required();
    shift_cmd->add_option("by", by, "Lattice element, e.g. x1+2*x3")->required();

    auto* serve = app.add_subcommand("serve", "Run the JSON service");
    serve->add_option("--port", port, "Port to listen on");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    service::configure_logging();
    try {
        if (*map) {
            json request{{"n", n}};
            if (*arc_opt) request["arc"] = wire::parse(arc);
            else if (*sheaf_opt) request["sheaf"] = sheaf;
            else throw ParseError("give --arc or --sheaf");
            json r = service::map_op(request);
            out << (*arc_opt ? r.at("sheaf") : r.at("arc_text")).get<std::string>() << "\n";
            out << r.at("equivariant").get<std::string>() << "\n";
        } else if (*check) {
            json r = service::validate_op(read_json(file_a));
            out << service::render(r);
            return r.at("ok").get<bool>() ? 0 : 1;
        } else if (*flip_cmd) {
            out << service::render(service::flip_op({{"tri", read_json(file_a)}, {"arc", wire::parse(arc)}}));
        } else if (*enumerate_cmd) {
            out << service::render(service::enumerate_op(n, window < 0 ? 2 * n : window));
        } else if (*path) {
            out << service::render(service::path_op({{"from", read_json(file_a)}, {"to", read_json(file_b)}}));
        } else if (*graph) {
            TiltingGraph g = build_graph(n, window < 0 ? 2 * n : window);
            if (!dot.empty()) write_file(dot, export_dot(g));
            if (!csv.empty()) write_file(csv, export_csv(g));
            if (dot.empty() && csv.empty()) out << export_dot(g);
            else out << "nodes " << g.nodes.size() << " edges " << g.edges.size() << "\n";
        } else if (*shift_cmd) {
            out << service::render(service::shift_op({{"tri", read_json(file_a)}, {"by", by}}));
        } else if (*serve) {
            service::Server server;
            if (!server.bind("0.0.0.0", port)) throw DomainError("cannot bind port " + std::to_string(port));
            spdlog::warn("listening on port {}", port);
            server.listen();
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace skewtilt
