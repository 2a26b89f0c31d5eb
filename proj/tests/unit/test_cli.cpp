#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "regsg/corpus.hpp"

using namespace regsg;

namespace {

  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "regsg");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int const code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  std::string data(char const* name) {
    return std::string(REGSG_TEST_DATA) + "/" + name;
  }

  std::string temp_path(char const* name) {
    return (std::filesystem::temp_directory_path() / name).string();
  }

  std::string slurp(std::string const& path) {
    std::ifstream     f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

  std::size_t count(std::string const& haystack, std::string const& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
      ++n;
    }
    return n;
  }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify writes a deterministic JSON report") {
    std::string const a = temp_path("regsg_verify_a.json");
    std::string const b = temp_path("regsg_verify_b.json");
    REQUIRE(invoke({"verify", "--corpus", "RB22", "--out", a}).code == cli::kPass);
    REQUIRE(invoke({"verify", "--corpus", "RB22", "--out", b}).code == cli::kPass);
    CHECK(slurp(a) == slurp(b));
    auto const doc = nlohmann::json::parse(slurp(a));
    CHECK(doc["command"] == "verify");
    CHECK(doc["ok"] == true);
    REQUIRE(doc["semigroups"].size() == 1);
    auto const& s = doc["semigroups"][0];
    CHECK(s["name"] == "RB22");
    CHECK(s["order"] == 4);
    for (auto const& c : s["checks"]) {
      CHECK(c["status"] == "pass");
      CHECK(c.contains("witness"));
      CHECK(c.contains("checked"));
    }
    std::remove(a.c_str());
    std::remove(b.c_str());
  }

  TEST_CASE("suite selection and aliases") {
    Report const r = cli::run_suites(corpus::b2(), {"section3"}, 4);
    REQUIRE_FALSE(r.records().empty());
    for (auto const& rec : r.records()) {
      CHECK(rec.suite == "ind-from-cxn");
    }
    CHECK(cli::resolve_suite("section4") == "cxn-from-ind");
    CHECK(invoke({"verify", "--corpus", "B2", "--suite", "nonsense"}).code == cli::kInputError);
    CHECK(invoke({"verify", "--corpus", "B2", "--suite", "green", "--suite", "biorder"}).code == cli::kPass);
  }

  TEST_CASE("file inputs") {
    Outcome const rb = invoke({"verify", "--input", data("rb22.json"), "--suite", "igroupoid"});
    CHECK(rb.code == cli::kPass);
    CHECK(rb.out.find("rb22-file") != std::string::npos);
    auto const T = cli::parse_semigroup(data("t2.json"), "transformations");
    CHECK(T.order() == 4);
    CHECK(find_isomorphism(T, corpus::t2()).has_value());
    CHECK(invoke({"roundtrip", "--input", data("t2.json"), "--format", "transformations"}).code == cli::kPass);
  }

  TEST_CASE("bad inputs exit with status 2") {
    Outcome const ragged = invoke({"verify", "--input", data("ragged.json")});
    CHECK(ragged.code == cli::kInputError);
    CHECK(ragged.err.find("BadIndex") != std::string::npos);

    Outcome const cut = invoke({"analyze", "--input", data("truncated.json")});
    CHECK(cut.code == cli::kInputError);
    CHECK(cut.err.find("Parse") != std::string::npos);
    CHECK(cut.err.find("line") != std::string::npos);

    Outcome const typed = invoke({"analyze", "--input", data("wrong_type.json")});
    CHECK(typed.code == cli::kInputError);
    CHECK(typed.err.find("'order'") != std::string::npos);

    CHECK(invoke({"analyze", "--input", data("missing.json")}).code == cli::kInputError);
    CHECK(invoke({"verify"}).code == cli::kInputError);
    CHECK(invoke({"verify", "--corpus", "B2", "--input", data("rb22.json")}).code == cli::kInputError);
    CHECK(invoke({"verify", "--corpus", "B9"}).code == cli::kInputError);
    CHECK(invoke({"verify", "--corpus", "B2", "--max-chain-length", "0"}).code == cli::kInputError);
    CHECK(invoke({"frobnicate"}).code == cli::kInputError);
    CHECK(invoke({"--help"}).code == cli::kPass);
  }

  TEST_CASE("non-regular semigroups") {
    Outcome const a = invoke({"analyze", "--input", data("monogenic.json")});
    CHECK(a.code == cli::kPass);
    CHECK(nlohmann::json::parse(a.out)["regular"] == false);
    Outcome const v = invoke({"verify", "--input", data("monogenic.json")});
    CHECK(v.code == cli::kInputError);
    CHECK(v.err.find("NotRegular") != std::string::npos);
  }

  TEST_CASE("analyze counts") {
    auto const j = cli::analyze(corpus::t3());
    CHECK(j["order"] == 27);
    CHECK(j["idempotents"].size() == 10);
    CHECK(j["groupoid"]["morphisms"] == 87);
    CHECK(j["categories"]["LS_objects"] == 7);
    CHECK(j["categories"]["RS_objects"] == 5);
  }

  TEST_CASE("DOT export") {
    std::string const bio = cli::export_dot(corpus::rb22(), "biorder");
    CHECK(count(bio, "[label=\"(") == 4);
    CHECK(count(bio, "label=\"R\"") == 4);
    CHECK(count(bio, "label=\"L\"") == 4);
    CHECK(count(bio, "label=\"w\"") == 0);
    CHECK(bio == cli::export_dot(corpus::rb22(), "biorder"));

    std::string const g = cli::export_dot(corpus::sl2(), "groupoid");
    CHECK(count(g, "[label=\"") == 4);
    CHECK(g.find("e0 -> e0") != std::string::npos);
    CHECK(g.find("e1 -> e1") != std::string::npos);

    // SL2 has 0 < 1, a single omega edge.
    CHECK(count(cli::export_dot(corpus::sl2(), "biorder"), "label=\"w\"") == 1);
    for (auto const& name : cli::graph_names()) {
      CAPTURE(name);
      std::string const dot = cli::export_dot(corpus::b2(), name);
      CHECK(dot.rfind("digraph", 0) == 0);
      CHECK(dot.back() == '\n');
    }
    std::string const path = temp_path("regsg_export.dot");
    CHECK(invoke({"export-dot", "--corpus", "T2", "--graph", "lg", "--out", path}).code == cli::kPass);
    CHECK(slurp(path) == cli::export_dot(corpus::t2(), "lg"));
    std::remove(path.c_str());
    CHECK(invoke({"export-dot", "--corpus", "T2", "--graph", "nope"}).code == cli::kInputError);
  }

  TEST_CASE("roundtrip report") {
    Report const r = cli::roundtrip(corpus::i2());
    CHECK(r.records().size() == 3);
    CHECK(r.ok());
  }
}
