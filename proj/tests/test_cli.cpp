#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "commands.hpp"

using namespace kac;
using namespace kac::io;

namespace {

std::string data(const std::string& f) { return std::string(KAC_TEST_DATA) + "/" + f; }

std::string temp_path(const std::string& f) { return (std::filesystem::temp_directory_path() / f).string(); }

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("builders parse to validated Hopf algebras") {
    for (const char* f : {"f2.json", "c2.json", "c3.json", "s3.json", "cs3.json", "dual_c2.json", "tensor.json"}) {
        CAPTURE(f);
        AlgebraFile s = load_algebra(data(f));
        REQUIRE(s.hopf);
        CHECK(validate_hopf(*s.hopf).all_pass());
    }
    AlgebraFile t = load_algebra(data("tensor.json"));
    CHECK(t.hopf->N == 6);
    AlgebraFile base = load_algebra(data("base3.json"));
    CHECK_FALSE(base.hopf);
    CHECK(base.alg->dim() == 9);
}

TEST_CASE("named groups") {
    CHECK(named_group("Z5").size() == 5);
    CHECK(named_group("Z2xZ2").size() == 4);
    CHECK(named_group("S3").size() == 6);
    CHECK_THROWS_AS(named_group("A5"), ParseError);
    CHECK_THROWS_AS(named_group("Zx"), ParseError);
}

TEST_CASE("raw tensors round trip") {
    HopfPtr H = build_group_algebra(symmetric_group3());
    json j = to_json(*H);
    AlgebraFile s = parse_algebra(j);
    REQUIRE(s.hopf);
    CHECK(max_abs(Mat(s.hopf->comult - H->comult)) == 0.0);
    CHECK(max_abs(Mat(s.hopf->antipode - H->antipode)) == 0.0);
    CHECK(validate_hopf(*s.hopf).all_pass());
    CHECK(to_json(*s.hopf).dump() == j.dump());
    // Complex entries are [re, im] pairs inside triplets.
    CHECK(j["mult"][0].size() == 5);
}

TEST_CASE("raw tensors without comultiplication give a structure algebra") {
    json j = to_json(*build_function_algebra(cyclic_group(3))->alg);
    AlgebraFile s = parse_algebra(j);
    CHECK_FALSE(s.hopf);
    CHECK(validate_algebra(*s.alg).all_pass());
}

TEST_CASE("malformed inputs") {
    CHECK_THROWS_AS(parse_algebra(json::parse(R"({"group":"Z2"})")), ParseError);
    CHECK_THROWS_AS(parse_algebra(json::parse(R"({"kind":"lie_algebra"})")), ParseError);
    CHECK_THROWS_AS(parse_algebra(json::parse(R"({"kind":"group_algebra","group":[[0,1],[1]]})")), ParseError);
    CHECK_THROWS_AS(parse_algebra(json::parse(R"({"kind":"group_algebra","group":[[0,2],[1,0]]})")), ParseError);
    CHECK_THROWS_AS(parse_algebra(json::parse(R"({"kind":"raw","dim":2,"mult":[[0,0,0]],"unit":[],"star":[]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_algebra(json::parse(R"({"kind":"group_algebra","group":[[0,1],[0,1]]})")), NotAGroup);
    CHECK_THROWS_AS(load_algebra(data("does_not_exist.json")), ParseError);
}

TEST_CASE("digest") {
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("validate reports the nine axioms") {
    Run r = run_cli({"validate", data("f2.json"), "--format", "json"});
    CHECK(r.code == exit_ok);
    json j = json::parse(r.out);
    CHECK(j["entries"].size() == 9);
    CHECK(j["pass"] == true);
    CHECK(j["version"] == tool_version);
    CHECK_FALSE(j.contains("timing_seconds"));
    for (const auto& e : j["entries"]) {
        CHECK(e.contains("name"));
        CHECK(e.contains("residual"));
        CHECK(e.contains("tolerance"));
        CHECK(e.contains("pass"));
    }
}

TEST_CASE("tower report contains the averaging entries") {
    Run r = run_cli({"tower", "--level", "3", "--hopf", data("f2.json"), "--format", "json"});
    CHECK(r.code == exit_ok);
    json j = json::parse(r.out);
    int found = 0;
    for (const auto& e : j["entries"])
        if (e["name"].get<std::string>().find("e.p - 1/N") != std::string::npos) {
            ++found;
            CHECK(e["pass"] == true);
        }
    CHECK(found == 3);
}

TEST_CASE("span-check prints the dimension") {
    Run r = run_cli({"span-check", data("s3.json")});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("36\n", 0) == 0);
}

TEST_CASE("every subcommand runs on a small input") {
    for (const std::string& c : command_names()) {
        CAPTURE(c);
        std::vector<std::string> args = {c, data("c2.json"), "--trials", "2"};
        if (c == "tower" || c == "rohlin-check" || c == "trivialize-1" || c == "trivialize-2" || c == "aue-step") {
            args.push_back("--level");
            args.push_back("2");
        }
        Run r = run_cli(args);
        CHECK(r.code == exit_ok);
        CAPTURE(r.err);
    }
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"validate", data("bad_syntax.json")}).code == exit_parse);
    CHECK(run_cli({"validate"}).code == exit_parse);
    CHECK(run_cli({"frobnicate", data("f2.json")}).code == exit_parse);
    CHECK(run_cli({"validate", data("f2.json"), "--format", "xml"}).code == exit_parse);
    Run bad = run_cli({"validate", data("bad_group.json")});
    CHECK(bad.code == exit_validation);
    CHECK(bad.err.find("NotAGroup") != std::string::npos);
    CHECK(run_cli({"tower", "--level", "5", "--max-level", "4", data("f2.json")}).code == exit_validation);
    CHECK(run_cli({"dual", data("base3.json")}).code == exit_parse);
    // A tolerance below the achievable accuracy is a failed check.
    Run tight = run_cli({"comatrix", data("s3.json"), "--tol", "1e-300"});
    CHECK(tight.code == exit_validation);
    CHECK(tight.err.find("failed: ") != std::string::npos);
}

TEST_CASE("reports are deterministic and written to disk") {
    std::string path = temp_path("kac_cli_report.json");
    std::string path2 = path + ".2";
    std::vector<std::string> base = {"trivialize-2", data("c2.json"), "--level", "2", "--trials", "2", "--seed", "7"};
    auto a = base, b = base;
    a.insert(a.end(), {"--report", path});
    b.insert(b.end(), {"--report", path2});
    CHECK(run_cli(a).code == exit_ok);
    CHECK(run_cli(b).code == exit_ok);
    std::string ra = read_file(path), rb = read_file(path2);
    CHECK(ra == rb);
    CHECK(json::parse(ra)["input_digest"] == digest(read_file(data("c2.json"))));
    std::remove(path.c_str());
    std::remove(path2.c_str());
    // Different seeds give different randomized data.
    Run s1 = run_cli({"aue-step", data("c2.json"), "--level", "2", "--trials", "1", "--format", "json", "--seed", "1"});
    Run s2 = run_cli({"aue-step", data("c2.json"), "--level", "2", "--trials", "1", "--format", "json", "--seed", "2"});
    CHECK(s1.out != s2.out);
}

TEST_CASE("dual writes a loadable file") {
    std::string path = temp_path("kac_dual_out.json");
    CHECK(run_cli({"dual", data("cs3.json"), "--output", path}).code == exit_ok);
    AlgebraFile s = load_algebra(path);
    REQUIRE(s.hopf);
    CHECK(validate_hopf(*s.hopf).all_pass());
    CHECK(s.hopf->N == 6);
    std::remove(path.c_str());
}

}
