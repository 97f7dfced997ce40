#include "skewtilt/cli.hpp"
#include "skewtilt/errors.hpp"
#include "skewtilt/service.hpp"

#include <gtest/gtest.h>
#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

using namespace skewtilt;
using wire::json;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "skewtilt");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() / ("skewtilt_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string write(const std::string& name, const std::string& text) const {
        auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json arrow2() { return wire::to_json(fv_arrow(2, 0, 0)); }

} // namespace

TEST(Wire, CurveRoundTrip) {
    int n = 4;
    std::vector<SkewCurve> samples{Half{1, -3, Sign::Plus}, Half{2, 5, Sign::Minus}, Pair{-2, 3}, TorsPair{1, 2},
                                   Star{Sign::Minus, Sign::Plus}, make_pwloop(-5, 3, 2), make_sploop(-1, 3, Sign::Plus)};
    for (const auto& g : samples) {
        json j = wire::to_json(g);
        EXPECT_EQ(wire::curve_from_json(j, n), g) << j.dump();
        EXPECT_EQ(wire::to_json(wire::curve_from_json(wire::parse(j.dump()), n)), j);
    }
    EXPECT_EQ(wire::to_json(SkewCurve(Half{1, 2, Sign::Plus})).dump(), R"({"cross":1,"index":2,"sign":"+","type":"half"})");
}

TEST(Wire, RejectsMalformedCurves) {
    EXPECT_THROW(wire::curve_from_json(json{{"type", "half"}, {"cross", 1}, {"index", 0}, {"sign", "+"}, {"x", 1}}, 4), ParseError);
    EXPECT_THROW(wire::curve_from_json(json{{"type", "half"}, {"cross", 1}, {"index", 0}}, 4), ParseError);
    EXPECT_THROW(wire::curve_from_json(json{{"type", "half"}, {"cross", 3}, {"index", 0}, {"sign", "+"}}, 4), ParseError);
    EXPECT_THROW(wire::curve_from_json(json{{"type", "pair"}, {"i", "0"}, {"k", 1}}, 4), ParseError);
    EXPECT_THROW(wire::curve_from_json(json{{"type", "blob"}}, 4), ParseError);
    EXPECT_THROW(wire::curve_from_json(json{{"type", "pwloop"}, {"lam", {1}}, {"j", 1}}, 4), ParseError);
    EXPECT_THROW(wire::curve_from_json(json{{"type", "pair"}, {"i", 0}, {"k", 4}}, 4), DomainError);
    EXPECT_THROW(wire::parse("{"), ParseError);
}

TEST(Wire, TriangulationRoundTrip) {
    for (int n = 2; n <= 5; ++n) {
        PseudoTri t = fv_under(n, 1, -1);
        EXPECT_EQ(wire::tri_from_json(wire::to_json(t)), t);
    }
    EXPECT_THROW(wire::tri_from_json(json{{"n", 2}, {"arcs", json::array()}, {"extra", 0}}), ParseError);
}

TEST(Cli, MapExamples) {
    CliRun r = run({"map", "--n", "4", "--arc", R"({"type":"pair","i":0,"k":2})"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "E_{O(-x3)}<x3>");
    r = run({"map", "--n", "4", "--sheaf", "O(x1-x2+2*x3)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "Half(1,2,+)");
    r = run({"map", "--n", "4", "--arc", R"({"type":"pair","i":0)"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("parse error"), std::string::npos);
    r = run({"map", "--n", "4", "--sheaf", "O(x7)"});
    EXPECT_EQ(r.code, 2);
    r = run({"map", "--n", "4", "--arc", R"({"type":"tors","res":0,"len":0})"});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"map", "--arc", "{}"}).code, 2);
    EXPECT_EQ(run({"check", "/nonexistent/file.json"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CheckGenerator) {
    TempDir dir;
    CliRun r = run({"check", dir.write("arrow.json", arrow2().dump())});
    EXPECT_EQ(r.code, 0);
    json report = json::parse(r.out);
    EXPECT_TRUE(report.at("ok").get<bool>());
    EXPECT_EQ(report.at("arcs"), 5);

    json broken = arrow2();
    broken["arcs"].erase(0);
    r = run({"check", dir.write("broken.json", broken.dump())});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(json::parse(r.out).at("ok").get<bool>());
}

TEST(Cli, FlipTwiceRestores) {
    TempDir dir;
    std::string original = arrow2().dump();
    CliRun first = run({"flip", dir.write("a.json", original), "--arc", R"({"type":"half","cross":1,"index":0,"sign":"+"})"});
    ASSERT_EQ(first.code, 0) << first.err;
    json f = json::parse(first.out);
    EXPECT_EQ(f.at("case_label"), "I(1)");
    EXPECT_EQ(f.at("added"), wire::to_json(SkewCurve(Half{1, 1, Sign::Minus})));
    CliRun second = run({"flip", dir.write("b.json", f.at("new_tri").dump()), "--arc", f.at("added").dump()});
    ASSERT_EQ(second.code, 0) << second.err;
    EXPECT_EQ(json::parse(second.out).at("new_tri").dump(), original);
}

TEST(Cli, FlipOfMissingArcIsDomainError) {
    TempDir dir;
    CliRun r = run({"flip", dir.write("a.json", arrow2().dump()), "--arc", R"({"type":"star","e1":"+","e2":"+"})"});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, PathBetweenGenerators) {
    TempDir dir;
    std::string a = dir.write("a.json", wire::to_json(fv_arrow(3, 0, 0)).dump());
    std::string b = dir.write("b.json", wire::to_json(fv_under(3, 1, -1)).dump());
    CliRun r = run({"path", a, b});
    ASSERT_EQ(r.code, 0) << r.err;
    json p = json::parse(r.out);
    EXPECT_GT(p.at("length").get<int>(), 0);
    PseudoTri cur = fv_arrow(3, 0, 0);
    for (const auto& s : p.at("steps")) {
        FlipResult fr = flip(cur, wire::curve_from_json(s.at("removed"), 3));
        EXPECT_EQ(wire::to_json(fr.added), s.at("added"));
        cur = fr.new_tri;
    }
    EXPECT_EQ(cur, fv_under(3, 1, -1));
}

TEST(Cli, ShiftAndEnumerate) {
    TempDir dir;
    CliRun r = run({"shift", dir.write("a.json", wire::to_json(fv_arrow(3, 0, 0)).dump()), "x3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(wire::tri_from_json(json::parse(r.out)), shift_all(fv_arrow(3, 0, 0), LElement::x3(3)));
    r = run({"shift", dir.file("a.json"), "x9"});
    EXPECT_EQ(r.code, 2);

    r = run({"enumerate", "--n", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).at("count"), enumerate(2, 4).size());
}

TEST(Cli, GraphFiles) {
    TempDir dir;
    CliRun r = run({"graph", "--n", "2", "--dot", dir.file("g.dot"), "--csv", dir.file("g.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    TiltingGraph g = build_graph(2, 4);
    EXPECT_EQ(slurp(dir.file("g.dot")), export_dot(g));
    EXPECT_EQ(slurp(dir.file("g.csv")), export_csv(g));
    EXPECT_EQ(run({"graph", "--n", "2"}).out, export_dot(g));
}

TEST(Cli, OutputsAreStable) {
    std::vector<std::string> args{"enumerate", "--n", "3"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Service, FlipEndpoint) {
    json body{{"tri", arrow2()}, {"arc", wire::to_json(SkewCurve(Pair{0, 1}))}};
    service::Response r = service::handle("POST", "/flip", body.dump());
    EXPECT_EQ(r.status, 200);
    json j = json::parse(r.body);
    EXPECT_EQ(j.at("case_label"), "II(2)");
    EXPECT_EQ(j.at("added"), wire::to_json(SkewCurve(Pair{1, 1})));
}

TEST(Service, ValidateEndpoint) {
    json bad{{"n", 2}, {"arcs", {wire::to_json(SkewCurve(Star{Sign::Plus, Sign::Plus})), wire::to_json(SkewCurve(Star{Sign::Minus, Sign::Minus}))}}};
    service::Response r = service::handle("POST", "/validate", bad.dump());
    EXPECT_EQ(r.status, 422);
    EXPECT_FALSE(json::parse(r.body).at("violations").empty());
    EXPECT_EQ(service::handle("POST", "/validate", arrow2().dump()).status, 200);
}

TEST(Service, ModelEndpoint) {
    service::Response r = service::handle("GET", "/model", "", {{"n", "4"}});
    EXPECT_EQ(r.status, 200);
    json j = json::parse(r.body);
    EXPECT_EQ(j.at("stars").size(), 4u);
    EXPECT_EQ(j.at("families").at("pair").at("k").at("max"), 3);
    EXPECT_EQ(j.at("arc_count"), 7);
}

TEST(Service, ErrorStatuses) {
    EXPECT_EQ(service::handle("POST", "/flip", "{not json").status, 400);
    EXPECT_EQ(service::handle("POST", "/flip", R"({"tri":{},"arc":{},"extra":1})").status, 400);
    EXPECT_EQ(service::handle("GET", "/model", "", {{"n", "four"}}).status, 400);
    EXPECT_EQ(service::handle("GET", "/model", "", {{"n", "1"}}).status, 422);
    EXPECT_EQ(service::handle("GET", "/nowhere", "").status, 404);
    json missing{{"tri", arrow2()}, {"arc", wire::to_json(SkewCurve(Star{Sign::Plus, Sign::Plus}))}};
    service::Response r = service::handle("POST", "/flip", missing.dump());
    EXPECT_EQ(r.status, 422);
    EXPECT_TRUE(json::parse(r.body).contains("error"));
}

TEST(Service, PathShiftMapEndpoints) {
    json path{{"from", arrow2()}, {"to", wire::to_json(fv_under(2, 0, 0))}};
    service::Response r = service::handle("POST", "/path", path.dump());
    ASSERT_EQ(r.status, 200) << r.body;
    EXPECT_EQ(json::parse(r.body).at("length"), 1);

    r = service::handle("POST", "/shift", json{{"tri", arrow2()}, {"by", "x1 - x2"}}.dump());
    ASSERT_EQ(r.status, 200);
    EXPECT_EQ(json::parse(r.body), arrow2());

    r = service::handle("POST", "/map", json{{"n", 4}, {"sheaf", "O(x1-3*x3)"}}.dump());
    ASSERT_EQ(r.status, 200);
    EXPECT_EQ(json::parse(r.body).at("arc"), wire::to_json(SkewCurve(Half{2, -3, Sign::Plus})));
    EXPECT_EQ(service::handle("POST", "/map", json{{"n", 4}}.dump()).status, 400);
}

TEST(Service, MatchesCli) {
    TempDir dir;
    std::string file = dir.write("a.json", arrow2().dump());
    std::string arc = wire::to_json(SkewCurve(Pair{0, 1})).dump();
    CliRun cli = run({"flip", file, "--arc", arc});
    service::Response svc = service::handle("POST", "/flip", json{{"tri", arrow2()}, {"arc", json::parse(arc)}}.dump());
    EXPECT_EQ(cli.out, svc.body);
    EXPECT_EQ(run({"enumerate", "--n", "2", "--window", "5"}).out,
              service::handle("GET", "/enumerate", "", {{"n", "2"}, {"window", "5"}}).body);
}

TEST(Service, LiveServer) {
    service::Server server;
    int port = server.bind_any_port("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread worker([&] { server.listen(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto model = client.Get("/model?n=4");
    ASSERT_TRUE(model);
    EXPECT_EQ(model->status, 200);
    EXPECT_EQ(json::parse(model->body).at("stars").size(), 4u);

    json body{{"tri", arrow2()}, {"arc", wire::to_json(SkewCurve(Half{1, 0, Sign::Plus}))}};
    auto flipped = client.Post("/flip", body.dump(), "application/json");
    ASSERT_TRUE(flipped);
    EXPECT_EQ(flipped->status, 200);
    EXPECT_EQ(json::parse(flipped->body).at("case_label"), "I(1)");

    auto bad = client.Post("/validate", "[1,", "application/json");
    ASSERT_TRUE(bad);
    EXPECT_EQ(bad->status, 400);

    auto enumerated = client.Get("/enumerate?n=2");
    ASSERT_TRUE(enumerated);
    EXPECT_EQ(json::parse(enumerated->body).at("count"), enumerate(2, 4).size());

    server.stop();
    worker.join();
}
