#include "bitensor/cli/format.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "bitensor/errors.hpp"

namespace bitensor::cli {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "plain") return Format::Plain;
  if (name == "latex") return Format::Latex;
  if (name == "json") return Format::Json;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

namespace {

std::string join_phrase(const Phrase& p, const std::string& unit, const std::string& letter_prefix,
                        const std::string& letter_suffix, const std::string& tensor_sep,
                        const std::string& product_sep) {
  if (p.is_unit()) return unit;
  std::string out;
  std::size_t i = 0;
  for (std::size_t w = 0; w < p.word_count(); ++w) {
    if (w > 0) out += product_sep;
    for (int k = 0; k < p.lengths()[w]; ++k, ++i) {
      if (k > 0) out += tensor_sep;
      out += letter_prefix + std::to_string(p.letters()[i]) + letter_suffix;
    }
  }
  return out;
}

// Shared by elements and tensors: renders Σ c_i body_i with signs pulled out.
template <class Terms, class Body, class IsUnit>
std::string signed_sum(const Terms& terms, Body body, IsUnit is_unit, const std::string& zero,
                       std::string (*coeff_text)(const Rational&), const std::string& coeff_sep) {
  if (terms.empty()) return zero;
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (is_unit(key)) {
      out += coeff_text(mag);
    } else {
      if (mag != 1) out += coeff_text(mag) + coeff_sep;
      out += body(key);
    }
  }
  return out;
}

std::string plain_rational(const Rational& q) { return to_string(q); }
std::string latex_rational(const Rational& q) { return rational_latex(q); }

json phrase_json(const Phrase& p) {
  json words = json::array();
  for (const auto& w : p.words()) words.push_back(w);
  return words;
}

Phrase phrase_from_json(const json& j, int dim) {
  if (!j.is_array()) throw InvalidArgument("phrase must be a list of words");
  std::vector<Word> words;
  for (const auto& w : j) {
    if (!w.is_array() || w.empty()) throw InvalidArgument("each word must be a nonempty list");
    Word word;
    for (const auto& x : w) {
      if (!x.is_number_integer()) throw InvalidArgument("letters must be integers");
      const auto v = x.get<long long>();
      if (v < 1 || v > dim) throw LetterOutOfRange("letter " + std::to_string(v) + " outside alphabet");
      word.push_back(static_cast<Letter>(v));
    }
    words.push_back(std::move(word));
  }
  return Phrase::from_words(words);
}

}  // namespace

std::string phrase_plain(const Phrase& p) { return join_phrase(p, "1", "x", "", "*", "|"); }

std::string phrase_latex(const Phrase& p) {
  return join_phrase(p, "1", "x_{", "}", " \\otimes ", " \\bullet ");
}

std::string rational_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  const std::string sign = q < 0 ? "-" : "";
  return sign + "\\frac{" + Integer(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string element_plain(const Element& e) {
  return signed_sum(
      e.terms(), [](const Phrase& p) { return phrase_plain(p); }, [](const Phrase& p) { return p.is_unit(); }, "0",
      plain_rational, " ");
}

std::string element_latex(const Element& e) {
  return signed_sum(
      e.terms(),
      [](const Phrase& p) {
        return p.word_count() > 1 || p.degree() > 1 ? "(" + phrase_latex(p) + ")" : phrase_latex(p);
      },
      [](const Phrase& p) { return p.is_unit(); }, "0", latex_rational, " ");
}

json element_json(const Element& e) {
  json out = json::array();
  for (const auto& [p, c] : e.terms()) out.push_back({{"coeff", to_string(c)}, {"phrase", phrase_json(p)}});
  return out;
}

Element element_from_json(const json& j, int dim) {
  static const std::regex coeff_pattern("-?[0-9]+(/[0-9]+)?");
  if (!j.is_array()) throw InvalidArgument("top level must be a list");
  Element e(dim);
  const Phrase* previous = nullptr;
  std::vector<Phrase> seen;
  seen.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_object() || item.size() != 2 || !item.contains("coeff") || !item.contains("phrase"))
      throw InvalidArgument("each record needs exactly the keys 'coeff' and 'phrase'");
    if (!item["coeff"].is_string()) throw InvalidArgument("'coeff' must be a string");
    const auto text = item["coeff"].get<std::string>();
    if (!std::regex_match(text, coeff_pattern)) throw InvalidArgument("malformed coefficient '" + text + "'");
    const Rational c = parse_rational(text);
    if (c == 0 || to_string(c) != text) throw InvalidArgument("coefficient '" + text + "' is not in lowest terms");
    seen.push_back(phrase_from_json(item["phrase"], dim));
    if (previous && !(*previous < seen.back())) throw InvalidArgument("records are not in canonical basis order");
    previous = &seen.back();
    e.add_term(seen.back(), c);
  }
  return e;
}

std::string tensor_plain(const Tensor2& t) {
  return signed_sum(
      t.terms(),
      [](const Tensor2::Key& k) { return phrase_plain(k.first) + " (x) " + phrase_plain(k.second); },
      [](const Tensor2::Key&) { return false; }, "0", plain_rational, " ");
}

std::string tensor_latex(const Tensor2& t) {
  return signed_sum(
      t.terms(),
      [](const Tensor2::Key& k) {
        return "(" + phrase_latex(k.first) + ") \\mathbin{\\tilde\\otimes} (" + phrase_latex(k.second) + ")";
      },
      [](const Tensor2::Key&) { return false; }, "0", latex_rational, " ");
}

json tensor_json(const Tensor2& t) {
  json out = json::array();
  for (const auto& [k, c] : t.terms())
    out.push_back({{"coeff", to_string(c)}, {"left", phrase_json(k.first)}, {"right", phrase_json(k.second)}});
  return out;
}

OutputDocument format_element(const Element& e, Format fmt) {
  switch (fmt) {
    case Format::Plain: return {fmt, element_plain(e)};
    case Format::Latex: return {fmt, element_latex(e)};
    case Format::Json: return {fmt, element_json(e).dump()};
  }
  return {fmt, {}};
}

OutputDocument format_tensor(const Tensor2& t, Format fmt) {
  switch (fmt) {
    case Format::Plain: return {fmt, tensor_plain(t)};
    case Format::Latex: return {fmt, tensor_latex(t)};
    case Format::Json: return {fmt, tensor_json(t).dump()};
  }
  return {fmt, {}};
}

namespace {

std::string cell_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

namespace {

// Display width in code points.
std::size_t text_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

}  // namespace

std::string render_table(const Table& t, Format fmt) {
  if (fmt == Format::Json) {
    json out = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < t.headers.size(); ++i) obj[t.headers[i]] = row.at(i);
      out.push_back(std::move(obj));
    }
    return out.dump();
  }
  std::ostringstream os;
  if (fmt == Format::Latex) {
    os << "\\begin{tabular}{" << std::string(t.headers.size(), 'l') << "}\n";
    for (std::size_t i = 0; i < t.headers.size(); ++i) os << (i ? " & " : "") << t.headers[i];
    os << " \\\\\n\\hline\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " & " : "") << "$" << cell_text(row[i]) << "$";
      os << " \\\\\n";
    }
    os << "\\end{tabular}";
    return os.str();
  }
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = text_width(t.headers[i]);
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], text_width(cell_text(row[i])));
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - text_width(cells[i]) + 2, ' ');
    }
    return s;
  };
  os << line(t.headers);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const auto& v : row) cells.push_back(cell_text(v));
    os << "\n" << line(cells);
  }
  return os.str();
}

std::string render_matrix(const Matrix& m, const std::vector<Phrase>& basis, Format fmt) {
  if (fmt == Format::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
      rows.push_back(std::move(row));
    }
    json b = json::array();
    for (const auto& p : basis) b.push_back(phrase_plain(p));
    return json{{"basis", b}, {"matrix", rows}}.dump();
  }
  std::ostringstream os;
  if (fmt == Format::Latex) {
    os << "\\begin{pmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " & " : "") << rational_latex(m(i, j));
      os << (i + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}";
    return os.str();
  }
  os << "basis:";
  for (const auto& p : basis) os << " " << phrase_plain(p);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "\n";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
  }
  return os.str();
}

}  // namespace bitensor::cli
