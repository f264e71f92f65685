#ifndef BITENSOR_TESTS_JSON_FIXTURES_HPP
#define BITENSOR_TESTS_JSON_FIXTURES_HPP

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace bitensor::test {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Order key of a phrase written as a list of words: degree, word count,
// word lengths, letters.
using Key = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>, std::vector<long>>;

inline Key order_key(const json& phrase) {
  Key k;
  auto& [degree, count, lengths, letters] = k;
  count = phrase.size();
  for (const auto& w : phrase) {
    lengths.push_back(w.size());
    for (const auto& x : w) letters.push_back(x.get<long>());
  }
  degree = letters.size();
  return k;
}

/// The documented schema, checked without going through element_from_json.
/// Returns an empty string when the document conforms.
inline std::string schema_violation(const json& doc, int dim) {
  static const std::regex coeff("-?[1-9][0-9]*(/[1-9][0-9]*)?");
  if (!doc.is_array()) return "top level is not a list";
  std::optional<Key> previous;
  for (const auto& item : doc) {
    if (!item.is_object() || item.size() != 2 || !item.contains("coeff") || !item.contains("phrase"))
      return "record keys";
    if (!item["coeff"].is_string()) return "coeff type";
    const auto text = item["coeff"].get<std::string>();
    if (!std::regex_match(text, coeff)) return "coeff format " + text;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const long p = std::labs(std::stol(text.substr(0, slash)));
      const long q = std::stol(text.substr(slash + 1));
      if (std::gcd(p, q) != 1) return "coeff not reduced " + text;
    }
    const json& phrase = item["phrase"];
    if (!phrase.is_array()) return "phrase type";
    for (const auto& w : phrase) {
      if (!w.is_array() || w.empty()) return "word type";
      for (const auto& x : w)
        if (!x.is_number_integer() || x.get<long>() < 1 || x.get<long>() > dim) return "letter";
    }
    const Key k = order_key(phrase);
    if (previous && !(*previous < k)) return "order";
    previous = k;
  }
  return "";
}

/// Rows of manifest.tsv: fixture name followed by the command arguments.
inline std::vector<std::vector<std::string>> manifest() {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(std::string(BITENSOR_FIXTURE_DIR) + "/manifest.tsv");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '\t')) fields.push_back(f);
    rows.push_back(fields);
  }
  return rows;
}

inline int dim_of(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--dim") return std::stoi(args[i + 1]);
  return 1;
}

}  // namespace bitensor::test

#endif  // BITENSOR_TESTS_JSON_FIXTURES_HPP
