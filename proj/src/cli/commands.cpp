#include "bitensor/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>

#include "bitensor/basis.hpp"
#include "bitensor/cli/format.hpp"
#include "bitensor/cli/parse.hpp"
#include "bitensor/cut_polynomials.hpp"
#include "bitensor/errors.hpp"
#include "bitensor/pairing.hpp"
#include "bitensor/primitives.hpp"

namespace bitensor::cli {

namespace {

using nlohmann::json;

struct Globals {
  int dim = 1;
  std::string format = "plain";
  int max_degree = 0;
};

struct Failed {
  std::string message;
};

std::string render_rational(const Rational& q, Format fmt) {
  if (fmt == Format::Json) return json(to_string(q)).dump();
  if (fmt == Format::Latex) return rational_latex(q);
  return to_string(q);
}

std::string render_bool(bool b, Format fmt) {
  if (fmt == Format::Json) return json(b).dump();
  return b ? "true" : "false";
}

std::string render_elements(const std::vector<Element>& es, Format fmt) {
  if (fmt == Format::Json) {
    json out = json::array();
    for (const auto& e : es) out.push_back(element_json(e));
    return out.dump();
  }
  std::string s;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) s += "\n";
    s += fmt == Format::Latex ? element_latex(es[i]) : element_plain(es[i]);
  }
  return s;
}

int or_default(int v, int fallback) { return v > 0 ? v : fallback; }

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) { return run_command(args, checks::HopfMaps{}); }

CommandResult run_command(const std::vector<std::string>& args, const checks::HopfMaps& maps) {
  CLI::App app{"Exact computations in A_V, the pointed Hopf algebra of products of tensor words", "bitensor"};
  app.require_subcommand(1);
  Globals g;
  auto add_globals = [&g](CLI::App* a) {
    a->add_option("--dim", g.dim, "alphabet size d (letters x1..xd)")->check(CLI::PositiveNumber);
    a->add_option("--format", g.format, "plain, latex or json")->check(CLI::IsMember({"plain", "latex", "json"}));
    a->add_option("--max-degree", g.max_degree, "degree bound for tabulating commands")->check(CLI::NonNegativeNumber);
  };
  add_globals(&app);

  std::string expr_a, expr_b, method = "exp", suite = "all";
  int power = 1;
  int degree = 2;
  bool degree_given = false;

  std::function<std::string(Format)> action;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  auto* coproduct_cmd = sub("coproduct", "Δ of an expression");
  coproduct_cmd->add_option("expr", expr_a)->required();
  coproduct_cmd->callback([&] {
    action = [&](Format f) { return format_tensor(coproduct(parse_expression(expr_a, g.dim)), f).payload; };
  });

  auto* product_cmd = sub("product", "phrase product a | b");
  product_cmd->add_option("a", expr_a)->required();
  product_cmd->add_option("b", expr_b)->required();
  product_cmd->callback([&] {
    action = [&](Format f) {
      return format_element(product(parse_expression(expr_a, g.dim), parse_expression(expr_b, g.dim)), f).payload;
    };
  });

  auto* antipode_cmd = sub("antipode", "antipode S, optionally iterated");
  antipode_cmd->add_option("expr", expr_a)->required();
  antipode_cmd->add_option("--method", method, "subset, exp or both")->check(CLI::IsMember({"subset", "exp", "both"}));
  antipode_cmd->add_option("--power", power, "number of applications")->check(CLI::NonNegativeNumber);
  antipode_cmd->callback([&] {
    action = [&](Format f) {
      const Element e = parse_expression(expr_a, g.dim);
      auto iterate = [&](const EndoMap& s) {
        Element x = e;
        for (int i = 0; i < power; ++i) x = s(x);
        return x;
      };
      const Element via_exp = method != "subset" ? iterate(maps.antipode) : e;
      const Element via_subset = method != "exp" ? iterate(maps.antipode_oracle) : e;
      if (method == "both" && via_exp != via_subset)
        throw Failed{"antipode mismatch: exp gives " + element_plain(via_exp) + ", subset gives " +
                     element_plain(via_subset)};
      return format_element(method == "subset" ? via_subset : via_exp, f).payload;
    };
  });

  auto* cut_cmd = sub("cut", "cut operator U, optionally iterated");
  cut_cmd->add_option("expr", expr_a)->required();
  cut_cmd->add_option("--power", power, "number of applications")->check(CLI::NonNegativeNumber);
  cut_cmd->callback([&] {
    action = [&](Format f) { return format_element(cut_operator_power(parse_expression(expr_a, g.dim), power), f).payload; };
  });

  auto* phiu_cmd = sub("phiu", "φ(U) = Σ (-1)^p U^p/(p+1)!");
  phiu_cmd->add_option("expr", expr_a)->required();
  phiu_cmd->callback([&] {
    action = [&](Format f) { return format_element(phi_u(parse_expression(expr_a, g.dim)), f).payload; };
  });

  auto* prim_cmd = sub("is-primitive", "whether Δv = v ⊗̃ 1 + 1 ⊗̃ v");
  prim_cmd->add_option("expr", expr_a)->required();
  prim_cmd->callback([&] {
    action = [&](Format f) { return render_bool(is_primitive(parse_expression(expr_a, g.dim)), f); };
  });

  auto* pair_cmd = sub("pair", "<v, α> with v over V and α over V*");
  pair_cmd->add_option("v", expr_a)->required();
  pair_cmd->add_option("alpha", expr_b)->required();
  pair_cmd->callback([&] {
    action = [&](Format f) {
      return render_rational(pair(parse_expression(expr_a, g.dim), parse_expression(expr_b, g.dim)), f);
    };
  });

  auto* gram_cmd = sub("gram", "Gram matrix of the pairing in one degree");
  gram_cmd->add_option("--degree", degree, "degree n")->check(CLI::NonNegativeNumber);
  gram_cmd->callback([&] {
    action = [&](Format f) { return render_matrix(gram_matrix(degree, g.dim), basis_phrases(degree, g.dim), f); };
  });

  auto* radical_cmd = sub("radical", "radical of the pairing against the ideal J");
  radical_cmd->add_option("--degree", degree, "print a radical basis in this degree")
      ->check(CLI::NonNegativeNumber)
      ->each([&](const std::string&) { degree_given = true; });
  radical_cmd->callback([&] {
    action = [&](Format f) {
      if (degree_given) return render_elements(radical_basis(degree, g.dim), f);
      Table t{{"degree", "basis", "rank", "radical", "ideal", "relation"}, {}};
      for (int n = 1; n <= or_default(g.max_degree, 4); ++n) {
        const std::size_t size = basis_phrases(n, g.dim).size();
        const std::size_t rad = radical_basis(n, g.dim).size();
        const std::size_t ideal = ideal_dimension(n, g.dim);
        t.rows.push_back({n, size, size - rad, rad, ideal, ideal == rad ? "equal" : "strict"});
      }
      return render_table(t, f);
    };
  });

  auto* prim_dims_cmd = sub("prim-dims", "dimension of the primitive space per degree");
  prim_dims_cmd->callback([&] {
    action = [&](Format f) {
      Table t{{"degree", "prim"}, {}};
      for (int n = 1; n <= or_default(g.max_degree, 4); ++n) t.rows.push_back({n, prim_basis(n, g.dim).size()});
      return render_table(t, f);
    };
  });

  auto* conjecture_cmd = sub("conjecture", "observed Lie-span vs primitive dimensions");
  conjecture_cmd->callback([&] {
    action = [&](Format f) {
      Table t{{"degree", "lie_span", "prim", "equal"}, {}};
      for (const auto& row : conjecture_report(or_default(g.max_degree, 4), g.dim))
        t.rows.push_back({row.degree, row.lie_span_dim, row.prim_dim, row.equal});
      return render_table(t, f);
    };
  });

  auto* pn_cmd = sub("pn", "cut polynomials P_n and their integrals over [-1, 0]");
  pn_cmd->callback([&] {
    action = [&](Format f) {
      Table t{{"n", "P_n", "integral"}, {}};
      for (int n = 1; n <= or_default(g.max_degree, 5); ++n)
        t.rows.push_back({n, pn_polynomial(n).to_string(), to_string(pn_integral(n))});
      return render_table(t, f);
    };
  });

  bool any_failed = false;
  auto* check_cmd = sub("check", "run an invariant suite");
  check_cmd->add_option("suite", suite, "all, hopf, pairing, primitives, lemma27 (alias radical)")
      ->check(CLI::IsMember({"all", "hopf", "pairing", "primitives", "lemma27", "radical"}));
  check_cmd->callback([&] {
    action = [&](Format f) {
      Table t{{"check", "cases", "result", "detail"}, {}};
      for (const auto& r : checks::run_suite(checks::parse_suite(suite), maps, g.max_degree)) {
        any_failed = any_failed || !r.passed;
        t.rows.push_back({r.name, r.cases, r.passed ? "PASS" : "FAIL", r.detail});
      }
      return render_table(t, f);
    };
  });


  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string(e.what()) + "\n";
    return result;
  }

  try {
    const Format fmt = parse_format(g.format);
    result.out = action(fmt) + "\n";
    if (any_failed) {
      result.exit_code = 1;
      result.err = "check failed\n";
    }
  } catch (const Failed& f) {
    result.exit_code = 1;
    result.err = f.message + "\n";
  } catch (const Error& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace bitensor::cli
