#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "lcscount/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(stdin_text);
  const int code = lcscount::cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

const std::string kData = LCSCOUNT_TEST_DATA;

}  // namespace

TEST_CASE("json output for the ab/ba pair") {
  const auto r = run({"--mode", "all", "--format", "json", "--text", "ab", "--text", "ba"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "{\"m\":2,\"n\":2,\"lcs_length\":1,\"distinct_lcs_count\":\"2\",\"embedding_count\":\"2\","
        "\"algorithm\":\"linear\",\"tokenization\":\"bytes\"}\n");
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["distinct_lcs_count"].is_string());
  CHECK(doc["embedding_count"].is_string());
  CHECK(doc["lcs_length"].is_number());
}

TEST_CASE("plain output lists only requested modes") {
  CHECK(run({"--text", "", "--text", "abc", "--mode", "distinct"}).out == "distinct: 1\n");
  CHECK(run({"--mode", "distinct", "--algorithm", "full", "--text", "ABCBDAB", "--text", "BDCABA"})
            .out == "distinct: 3\n");
  CHECK(run({"--text", "ab", "--text", "ba"}).out == "length: 1\ndistinct: 2\nembeddings: 2\n");
  CHECK(run({"--text", "aa", "--text", "aaaa", "--mode", "length,embeddings"}).out ==
        "length: 2\nembeddings: 6\n");
}

TEST_CASE("json omits counts that were not requested") {
  const auto r = run({"--format", "json", "--mode", "length", "--text", "ab", "--text", "b"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["lcs_length"] == 1);
  CHECK_FALSE(doc.contains("distinct_lcs_count"));
  CHECK_FALSE(doc.contains("embedding_count"));
}

TEST_CASE("full and linear agree") {
  const std::vector<std::string> base{"--format", "json", "--text", "GXTXAYBQQAB", "--text",
                                      "AGGTABXQBA"};
  auto full = base;
  full.insert(full.end(), {"--algorithm", "full"});
  auto linear = base;
  linear.insert(linear.end(), {"--algorithm", "linear"});
  auto f = nlohmann::json::parse(run(full).out);
  auto l = nlohmann::json::parse(run(linear).out);
  f.erase("algorithm");
  l.erase("algorithm");
  CHECK(f == l);
}

TEST_CASE("oracle subcommand matches the core") {
  for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{
           {"ab", "ba"}, {"ABCBDAB", "BDCABA"}, {"aab", "ab"}, {"", "q"}}) {
    const auto core = run({"--text", x, "--text", y});
    const auto brute = run({"oracle", "--text", x, "--text", y});
    REQUIRE(brute.code == 0);
    CHECK(core.out == brute.out);
  }
  const auto json = nlohmann::json::parse(
      run({"oracle", "--format", "json", "--text", "ab", "--text", "ba"}).out);
  CHECK(json["algorithm"] == "oracle");
}

TEST_CASE("oracle guard violations exit 3") {
  const auto r = run({"oracle", "--text", std::string(19, 'a'), "--text", "a", "--mode", "distinct"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
  CHECK(run({"oracle", "--text", std::string(16, 'a'), "--text", std::string(15, 'a'), "--mode",
             "embeddings"})
            .code == 3);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({"--text", "a"}).code == 1);
  CHECK(run({"--text", "a", "--text", "b", "--text", "c"}).code == 1);
  CHECK(run({"--bogus", "--text", "a", "--text", "b"}).code == 1);
  CHECK(run({"--mode", "", "--text", "a", "--text", "b"}).code == 1);
  CHECK(run({"--mode", "bogus", "--text", "a", "--text", "b"}).code == 1);
  CHECK(run({"--algorithm", "quadratic", "--text", "a", "--text", "b"}).code == 1);
  CHECK(run({"--file", "-", "--file", "-"}, "x").code == 1);
  CHECK(run({"--tokenize", "codepoints", "--text", "\xC3", "--text", "b"}).code == 1);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--algorithm") != std::string::npos);
}

TEST_CASE("unreadable file exits 2") {
  const auto r = run({"--file", kData + "/does-not-exist.txt", "--text", "a"});
  CHECK(r.code == 2);
  CHECK(r.err.find("does-not-exist") != std::string::npos);
}

TEST_CASE("stdin feeds one side, in command-line order") {
  CHECK(run({"--file", "-", "--text", "ba", "--mode", "distinct"}, "ab").out == "distinct: 2\n");
  const auto doc = nlohmann::json::parse(
      run({"--text", "abc", "--file", "-", "--format", "json", "--mode", "length"}, "a").out);
  CHECK(doc["m"] == 3);
  CHECK(doc["n"] == 1);
}

TEST_CASE("line tokenization compares whole lines") {
  // Same three lines in a different order.
  const std::string a = kData + "/lines_a.txt";
  const std::string b = kData + "/lines_b.txt";
  const auto lines = nlohmann::json::parse(
      run({"--tokenize", "lines", "--format", "json", "--file", a, "--file", b}).out);
  CHECK(lines["m"] == 3);
  CHECK(lines["n"] == 3);
  CHECK(lines["lcs_length"] == 2);  // alpha, beta
  CHECK(lines["distinct_lcs_count"] == "1");
  CHECK(lines["tokenization"] == "lines");

  const auto bytes = nlohmann::json::parse(run({"--format", "json", "--file", a, "--file", b}).out);
  CHECK(bytes["m"] == 17);
  CHECK(bytes["lcs_length"].get<int>() > 2);
}

TEST_CASE("codepoint tokenization counts characters, not bytes") {
  const auto doc = nlohmann::json::parse(
      run({"--tokenize", "codepoints", "--format", "json", "--text", "\xC3\xA9t\xC3\xA9",
           "--text", "\xC3\xA9"})
          .out);
  CHECK(doc["m"] == 3);
  CHECK(doc["lcs_length"] == 1);
  CHECK(doc["embedding_count"] == "2");
}

TEST_CASE("bench reports rolling working set") {
  const auto r = run({"bench", "--len", "50", "--alphabet", "3", "--seed", "7", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["runs"].size() == 4);
  for (const auto& run : doc["runs"]) {
    if (run["algorithm"] == "linear") {
      CHECK(run["count_cells"] == 51);
    } else {
      CHECK(run["count_cells"] == 51 * 51);
    }
  }
  CHECK(doc["runs"][0]["lcs_length"] == doc["runs"][2]["lcs_length"]);
  // Deterministic generator: same seed, same sequences.
  const auto again = nlohmann::json::parse(
      run({"bench", "--len", "50", "--alphabet", "3", "--seed", "7", "--format", "json"}).out);
  CHECK(again["runs"][1]["count_bits"] == doc["runs"][1]["count_bits"]);
  CHECK(run({"bench", "--alphabet", "0"}).code == 1);
}
