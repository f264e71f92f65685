#ifndef BITENSOR_CLI_FORMAT_HPP
#define BITENSOR_CLI_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bitensor/element.hpp"
#include "bitensor/linalg.hpp"

namespace bitensor::cli {

enum class Format { Plain, Latex, Json };

/// "plain", "latex" or "json"; throws InvalidArgument otherwise.
Format parse_format(std::string_view name);

struct OutputDocument {
  Format format;
  std::string payload;
};

std::string phrase_plain(const Phrase& p);
std::string phrase_latex(const Phrase& p);

/// Plain output re-parses to the same element; zero prints as "0".
std::string element_plain(const Element& e);
std::string element_latex(const Element& e);

/// [{"coeff": "p/q", "phrase": [[i, ...], ...]}, ...] in canonical basis order.
nlohmann::json element_json(const Element& e);
/// Inverse of element_json; validates the schema and throws InvalidArgument
/// on any deviation.
Element element_from_json(const nlohmann::json& j, int dim);

std::string tensor_plain(const Tensor2& t);
std::string tensor_latex(const Tensor2& t);
/// [{"coeff": ..., "left": [[...]], "right": [[...]]}, ...].
nlohmann::json tensor_json(const Tensor2& t);

OutputDocument format_element(const Element& e, Format fmt);
OutputDocument format_tensor(const Tensor2& t, Format fmt);

std::string rational_latex(const Rational& q);

/// A small table with string cells; rendered aligned (plain), as a tabular
/// (latex) or as a list of objects keyed by header (json).
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<nlohmann::json>> rows;
};

std::string render_table(const Table& t, Format fmt);

/// One row per line, entries separated by spaces (plain); nested string
/// lists (json); a pmatrix (latex).
std::string render_matrix(const Matrix& m, const std::vector<Phrase>& basis, Format fmt);

}  // namespace bitensor::cli

#endif  // BITENSOR_CLI_FORMAT_HPP
