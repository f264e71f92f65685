#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "bitensor/cli/commands.hpp"
#include "bitensor/cli/format.hpp"
#include "bitensor/cli/parse.hpp"
#include "bitensor/errors.hpp"
#include "json_fixtures.hpp"
#include "support.hpp"

using namespace bitensor;
using namespace bitensor::cli;
using nlohmann::json;
using test::dim_of;
using test::el;
using test::manifest;
using test::ph;
using test::read_file;
using test::schema_violation;

TEST_CASE("parse_expression") {
  CHECK(parse_expression("x1*x2 | x3", 3) == Element(3, ph({{1, 2}, {3}})));
  CHECK(parse_expression("x1*x1 - 1/2 x1|x1", 1) == el(1, {{1, ph({{1, 1}})}, {ratio(-1, 2), ph({{1}, {1}})}}));
  CHECK(parse_expression("(x1 + x2)*x1", 2) == el(2, {{1, ph({{1, 1}})}, {1, ph({{2, 1}})}}));
  CHECK(parse_expression("1", 1) == Element::unit(1));
  CHECK(parse_expression("-3/6", 1) == Element::unit(1, ratio(-1, 2)));
  CHECK(parse_expression("1*x1|1", 1) == Element::letter(1, 1));
  CHECK(parse_expression("2 (x1 + x1*x1)|x1", 1) == el(1, {{2, ph({{1}, {1}})}, {2, ph({{1, 1}, {1}})}}));
  CHECK(parse_expression("x1 - x1", 1).is_zero());
  CHECK(parse_expression("0", 1).is_zero());
}

TEST_CASE("parse errors") {
  auto position = [](const std::string& s, int d) -> std::size_t {
    try {
      parse_expression(s, d);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position("x1 +", 1) == 4);
  CHECK(position("x1 + * x1", 1) == 5);
  CHECK(position("(x1", 1) == 3);
  CHECK(position("x1 x1", 1) == 3);
  CHECK(position("1/0 x1", 1) == 2);
  CHECK(position("x", 1) == 0);
  CHECK(position("x1.x1", 1) == 2);
  CHECK(position("", 1) == 0);
  CHECK_THROWS_AS(parse_expression("x3", 2), LetterOutOfRange);
  CHECK_THROWS_AS(parse_expression("x0", 2), LetterOutOfRange);
  CHECK_THROWS_AS(parse_expression("(x1|x2)*x1", 2), NotWordSupported);
}

TEST_CASE("format_element") {
  CHECK(format_element(Element(1), Format::Plain).payload == "0");
  const Element prim = el(1, {{1, ph({{1, 1}})}, {ratio(-1, 2), ph({{1}, {1}})}});
  CHECK(format_element(prim, Format::Plain).payload == "x1*x1 - 1/2 x1|x1");
  CHECK(format_element(Element::unit(1), Format::Json).payload == R"([{"coeff":"1","phrase":[]}])");
  CHECK(format_element(Element::unit(1, -2) + Element::letter(1, 1), Format::Plain).payload == "-2 + x1");
  CHECK(format_element(prim, Format::Latex).payload ==
        "(x_{1} \\otimes x_{1}) - \\frac{1}{2} (x_{1} \\bullet x_{1})");
}

TEST_CASE("plain and json round-trip on the basis corpus") {
  for (int d = 1; d <= 2; ++d)
    for (int n = 0; n <= 5; ++n)
      for (const auto& p : basis_phrases(n, d)) {
        const Element e(d, p);
        CHECK(parse_expression(element_plain(e), d) == e);
        CHECK(element_from_json(json::parse(element_json(e).dump()), d) == e);
      }
}

TEST_CASE("plain and json round-trip on random combinations") {
  std::mt19937 rng(test::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 3;
    const Element e = test::random_element(rng, d, 5, 8);
    CHECK(parse_expression(element_plain(e), d) == e);
    const json doc = element_json(e);
    CHECK(schema_violation(doc, d).empty());
    CHECK(element_from_json(json::parse(doc.dump()), d) == e);
  }
}

TEST_CASE("element_from_json rejects schema violations") {
  const auto reject = [](const char* text) {
    CHECK_THROWS_AS(element_from_json(json::parse(text), 2), InvalidArgument);
  };
  reject(R"({"coeff":"1","phrase":[]})");
  reject(R"([{"coeff":"1"}])");
  reject(R"([{"coeff":"1","phrase":[],"extra":0}])");
  reject(R"([{"coeff":1,"phrase":[]}])");
  reject(R"([{"coeff":"2/4","phrase":[[1]]}])");
  reject(R"([{"coeff":"0","phrase":[[1]]}])");
  reject(R"([{"coeff":"1","phrase":[[]]}])");
  reject(R"([{"coeff":"1","phrase":[[1]]},{"coeff":"1","phrase":[]}])");
  reject(R"([{"coeff":"1","phrase":[[1]]},{"coeff":"2","phrase":[[1]]}])");
  reject(R"([{"coeff":"1.5","phrase":[[1]]}])");
  CHECK_THROWS_AS(element_from_json(json::parse(R"([{"coeff":"1","phrase":[[3]]}])"), 2), LetterOutOfRange);
}

TEST_CASE("json fixtures") {
  const auto rows = manifest();
  REQUIRE(rows.size() == 20);
  for (const auto& row : rows) {
    CAPTURE(row[0]);
    std::vector<std::string> args(row.begin() + 1, row.end());
    args.push_back("--format");
    args.push_back("json");
    const auto result = run_command(args);
    REQUIRE(result.exit_code == 0);
    const std::string stored = read_file(std::string(BITENSOR_FIXTURE_DIR) + "/" + row[0] + ".json");
    CHECK(result.out == stored);
    const json doc = json::parse(stored);
    CHECK(schema_violation(doc, dim_of(args)) == "");
    const Element e = element_from_json(doc, dim_of(args));
    CHECK(element_json(e) == doc);
  }
}

TEST_CASE("commands") {
  auto run = [](std::vector<std::string> args) { return run_command(args); };

  auto r = run({"antipode", "--dim", "1", "--method", "both", "x1*x1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-x1*x1 + x1|x1\n");

  r = run({"pair", "--dim", "1", "x1|x1", "x1|x1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2\n");

  r = run({"pn", "--max-degree", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n  P_n            integral\n"
        "1  1              1\n"
        "2  1 + 2t         0\n"
        "3  1 + 6t + 6t^2  0\n");

  r = run({"--dim", "2", "coproduct", "x1|x2"});
  CHECK(r.out == "1 (x) x1|x2 + x1 (x) x2 + x2 (x) x1 + x1|x2 (x) 1\n");

  CHECK(run({"is-primitive", "x1*x1 - 1/2 x1|x1"}).out == "true\n");
  CHECK(run({"is-primitive", "x1*x1"}).out == "false\n");
  CHECK(run({"cut", "--power", "2", "x1*x1*x1"}).out == "2 x1|x1|x1\n");
  CHECK(run({"phiu", "x1*x1"}).out == "x1*x1 - 1/2 x1|x1\n");
  CHECK(run({"product", "--dim", "3", "x1*x2", "x3"}).out == "x1*x2|x3\n");
  CHECK(run({"gram", "--degree", "2"}).out == "basis: x1*x1 x1|x1\n1/2 1\n1 2\n");
  CHECK(run({"gram", "--degree", "2", "--format", "json"}).out ==
        R"({"basis":["x1*x1","x1|x1"],"matrix":[["1/2","1"],["1","2"]]})"
        "\n");
  CHECK(run({"radical", "--degree", "2"}).out == "-2 x1*x1 + x1|x1\n");
  CHECK(run({"pair", "--format", "json", "x1*x1", "x1*x1"}).out == "\"1/2\"\n");
}

TEST_CASE("tabulating commands") {
  auto r = run_command({"radical", "--max-degree", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "degree  basis  rank  radical  ideal  relation\n"
        "1       1      1     0        0      equal\n"
        "2       2      1     1        1      equal\n"
        "3       4      1     3        3      equal\n");
  r = run_command({"prim-dims", "--dim", "2", "--max-degree", "3"});
  CHECK(r.out == "degree  prim\n1       2\n2       4\n3       12\n");
  r = run_command({"conjecture", "--max-degree", "2", "--format", "json"});
  CHECK(r.out == R"([{"degree":1,"equal":true,"lie_span":1,"prim":1},{"degree":2,"equal":true,"lie_span":1,"prim":1}])"
                 "\n");
}

TEST_CASE("exit codes") {
  CHECK(run_command({}).exit_code == 2);
  CHECK(run_command({"frobnicate"}).exit_code == 2);
  CHECK(run_command({"antipode"}).exit_code == 2);
  CHECK(run_command({"antipode", "--method", "other", "x1"}).exit_code == 2);
  CHECK(run_command({"antipode", "--dim", "0", "x1"}).exit_code == 2);
  CHECK(run_command({"antipode", "--format", "yaml", "x1"}).exit_code == 2);
  CHECK(run_command({"check", "nonsense"}).exit_code == 2);

  const auto bad = run_command({"antipode", "x1 +"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("position 4") != std::string::npos);
  CHECK(run_command({"antipode", "--dim", "1", "x2"}).exit_code == 2);
  CHECK(run_command({"antipode", "--dim", "2", "(x1|x2)*x1"}).exit_code == 2);
  CHECK(run_command({"--help"}).exit_code == 0);
}

TEST_CASE("check suites pass and a corrupted antipode is caught") {
  const auto r = run_command({"check", "hopf", "--max-degree", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  checks::HopfMaps corrupted;
  // Flip the sign of the longest-word term whenever the input has a two-letter word.
  corrupted.antipode = [](const Element& a) {
    Element s = antipode_exp(a);
    Element out(s.dim());
    bool flipped = false;
    for (const auto& [p, c] : s.terms()) {
      const bool flip = !flipped && p.word_count() == 1 && p.degree() == 2;
      flipped = flipped || flip;
      out.add_term(p, flip ? Rational(-c) : c);
    }
    return out;
  };
  const auto broken = run_command({"check", "hopf", "--max-degree", "3"}, corrupted);
  CHECK(broken.exit_code == 1);
  CHECK(broken.out.find("FAIL") != std::string::npos);

  const auto both = run_command({"antipode", "--method", "both", "x1*x1"}, corrupted);
  CHECK(both.exit_code == 1);
  CHECK(both.err.find("mismatch") != std::string::npos);
}
