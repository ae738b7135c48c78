#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pq/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome pq_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(PQ_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("product") {
    auto r = pq_run({"product", "yxxyxy", "xyxyyx"});
    CHECK(r.code == 0);
    CHECK(r.out == "xxyxyy\n");
    CHECK(r.err.empty());
    CHECK(pq_run({"product", "--traced", "yxxyxy", "xyxyyx"}).out
          == golden("product_traced.txt"));
    CHECK(pq_run({"product", "NEEN", "ENNE"}).out == "xxyy\n");
    CHECK(pq_run({"oplus", "yxxyxy", "xyxyyx"}).out == "yxxyyx\n");
  }

  TEST_CASE("domain errors exit 1 with one diagnostic line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"product", "xy", "xxyy"},
             {"product", "xz", "xy"},
             {"emmentaler", "xyxy"},
             {"check", "x-y"},
             {"path", "0,2,1/2"},
             {"from-emmentaler", "1-2"},
             {"from-emmentaler", "--zigzag", "1m0m"},
             {"count", "monotone-idempotents", "0"},
             {"idempotents", "16"},
             {"residual", "right", "xy", "xxyy"}}) {
      auto r = pq_run(args);
      CHECK_MESSAGE(r.code == 1, args[0]);
      CHECK(r.out.empty());
      CHECK(lines(r.err) == 1);
      CHECK(r.err.rfind("pq: ", 0) == 0);
    }
    CHECK(pq_run({"product", "xy", "xxyy"}).err.find("DimensionMismatch") != std::string::npos);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(pq_run({}).code == 2);
    CHECK(pq_run({"frobnicate"}).code == 2);
    CHECK(pq_run({"product", "xy"}).code == 2);
    CHECK(pq_run({"count", "widgets", "3"}).code == 2);
    CHECK(pq_run({"count", "descents", "3"}).code == 2);
    CHECK(pq_run({"idempotents", "-3"}).code == 2);
    CHECK(pq_run({"idempotents", "2", "--list", "--count"}).code == 2);
    CHECK(pq_run({"residual", "up", "xy", "xy"}).code == 2);
    CHECK(pq_run({"identity", "1", "2"}).code == 2);
    CHECK(pq_run({"--help"}).code == 0);
  }

  TEST_CASE("check") {
    auto r = pq_run({"check", "xyxy", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind(R"({"n":2,"m":2,"idempotent":false,"upper_zigzag":false,"nilpotent":true,"descents":1,)", 0) == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["aperiodicity"] == 2);
    CHECK(pq_run({"check", "xyxy"}).out == golden("check_xyxy.txt"));
    auto rect = nlohmann::json::parse(pq_run({"check", "xyy", "--json"}).out);
    CHECK(rect["idempotent"].is_null());
    CHECK(rect["descents"] == 0);
  }

  TEST_CASE("maps and emmentalers") {
    CHECK(pq_run({"map", "yxxxyxyyxy"}).out == "0,1,1,1,2,4 / 5\n");
    CHECK(pq_run({"path", "0,0,2,3,3 / 4"}).out == "xyyxyxxy\n");
    CHECK(pq_run({"emmentaler", "xyyxyxxy"}).out == "0-1;2-2;3-4\n");
    CHECK(pq_run({"emmentaler", "xyyxyxxy", "--zigzag"}).out == "1m11m\n");
    CHECK(pq_run({"from-emmentaler", "0-1;2-2;3-4"}).out == golden("from_emmentaler.txt"));
    CHECK(pq_run({"from-emmentaler", "--zigzag", "1m11m"}).out
          == golden("from_emmentaler.txt"));
  }

  TEST_CASE("enumeration and counts") {
    CHECK(pq_run({"idempotents", "2"}).out == golden("idempotents_2.txt"));
    CHECK(pq_run({"idempotents", "2", "--list"}).out == golden("idempotents_2.txt"));
    CHECK(pq_run({"idempotents", "10", "--count"}).out == "10946\n");
    CHECK(pq_run({"idempotents", "100", "--count"}).out
          == "453973694165307953197296969697410619233826\n");
    CHECK(pq_run({"count", "idempotents", "4"}).out == golden("count_idempotents_4.txt"));
    auto j = nlohmann::json::parse(pq_run({"count", "idempotents-by-top", "2", "0", "--json"}).out);
    CHECK(j["formula"] == 1);
    CHECK(j["oracle"] == 1);
    auto capped = nlohmann::json::parse(
        pq_run({"count", "nilpotents", "8", "--oracle-cap", "4", "--json"}).out);
    CHECK(capped["formula"] == 1430);
    CHECK(capped["oracle"].is_null());
    auto id = nlohmann::json::parse(pq_run({"identity", "2", "2", "2", "--json"}).out);
    CHECK(id["formula"] == 36);
    CHECK(id["agree"] == true);
    CHECK(pq_run({"identity", "3"}).code == 0);
  }

  TEST_CASE("factor, residual, render") {
    CHECK(pq_run({"factor", "yxxyxy"}).out == golden("factor.txt"));
    CHECK(pq_run({"factor", "xyxy", "--m", "2"}).out == "5\n");
    CHECK(pq_run({"residual", "right", "xxyy", "yxyx"}).out == "xxyy\n");
    CHECK(pq_run({"residual", "left", "yxyx", "xyyx"}).out == "xyyx\n");
    CHECK(pq_run({"render", "yxxxyxyyxy"}).out == golden("render_yxxxyxyyxy.txt"));
  }

  TEST_CASE("json mode emits exactly one valid document") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"product", "yxxyxy", "xyxyyx", "--json"},
             {"product", "yxxyxy", "xyxyyx", "--traced", "--json"},
             {"oplus", "yxxyxy", "xyxyyx", "--json"},
             {"check", "yxyx", "--json"},
             {"map", "xyyx", "--json"},
             {"path", "0,1/1", "--json"},
             {"idempotents", "3", "--json"},
             {"idempotents", "3", "--count", "--json"},
             {"emmentaler", "yxyx", "--json"},
             {"from-emmentaler", "0-0;1-2", "--json"},
             {"count", "descents", "2", "2", "1", "--json"},
             {"identity", "2", "--json"},
             {"factor", "xyyx", "--json"},
             {"factor", "xyyx", "--m", "3", "--json"},
             {"residual", "left", "xy", "yx", "--json"},
             {"render", "xy", "--json"}}) {
      auto r = pq_run(args);
      CHECK_MESSAGE(r.code == 0, args[0]);
      CHECK(lines(r.out) == 1);
      CHECK(nlohmann::json::accept(r.out));
    }
  }

  TEST_CASE("verify") {
    auto r = pq_run({"verify", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("17/17 checks passed") != std::string::npos);
    auto j = nlohmann::json::parse(pq_run({"verify", "--n", "2", "--json"}).out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == 17);
  }
}
