// One PASS/FAIL line per acceptance criterion. Each criterion also fails when
// it exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bitensor/basis.hpp"
#include "bitensor/checks.hpp"
#include "bitensor/cli/commands.hpp"
#include "bitensor/cli/format.hpp"
#include "bitensor/cli/parse.hpp"
#include "bitensor/primitives.hpp"
#include "json_fixtures.hpp"

using namespace bitensor;
using checks::CheckResult;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

void require(Outcome& o, const CheckResult& r) {
  if (r.passed) return;
  if (o.passed) o.detail = r.name + ": " + r.detail;
  o.passed = false;
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (ok) return;
  if (o.passed) o.detail = what;
  o.passed = false;
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

Outcome antipode_agreement() {
  Outcome o;
  require(o, checks::antipode_agreement(6, 1));
  require(o, checks::antipode_agreement(5, 2));
  return o;
}

Outcome hopf_axioms() {
  Outcome o;
  for (int d = 1; d <= 2; ++d) {
    require(o, checks::coassociativity(5, d));
    require(o, checks::counit_laws(5, d));
    require(o, checks::bialgebra_compatibility(5, d));
    require(o, checks::antipode_axiom(5, d));
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  require(o, checks::antipode_closed_forms(10));
  return o;
}

Outcome convolution() {
  Outcome o;
  for (int d = 1; d <= 2; ++d) require(o, checks::convolution_identity(6, 6, d));
  return o;
}

Outcome primitives_from_symmetric() {
  Outcome o;
  for (int d = 1; d <= 2; ++d) {
    require(o, checks::symmetric_primitives_are_primitive(6, d));
    require(o, checks::log_coefficients(6, d));
    require(o, checks::grouplike_truncation(6, d));
  }
  require(o, checks::inclusion_exclusion(4, 4));
  return o;
}

Outcome pairing_laws() {
  Outcome o;
  for (int d = 1; d <= 2; ++d) {
    const int n = d == 1 ? 5 : 4;
    require(o, checks::pairing_matches_oracle(n, d));
    require(o, checks::pairing_dual_sum(n, d));
    require(o, checks::hopf_pairing_law(n, d));
    require(o, checks::antipodes_adjoint(n, d));
  }
  require(o, checks::bijection_duality(6));
  return o;
}

Outcome gram() {
  Outcome o;
  require(o, checks::gram_degree_two());
  return o;
}

Outcome radical() {
  Outcome o;
  for (int d = 1; d <= 2; ++d) {
    require(o, checks::phi_u_orthogonal_to_words(6, d));
    require(o, checks::ideal_in_radical(5, d));
  }
  return o;
}

Outcome cut_polynomials() {
  Outcome o;
  require(o, checks::pn_coefficients(10));
  require(o, checks::pn_integrals(12));
  require(o, checks::generating_function(10));
  return o;
}

Outcome primitive_space() {
  Outcome o;
  const auto p2 = prim_basis(2, 1);
  const Element want = phi_u(Element::word(1, {1, 1}));
  require(o, p2.size() == 1 && p2[0] == scale(p2[0].coeff(Phrase::word({1, 1})), want),
          "prim_basis(2, 1) is not spanned by x*x - 1/2 x|x");
  require(o, checks::lie_span_within_prim(5, 1));
  require(o, checks::lie_span_within_prim(4, 2));
  for (const auto& [n_max, d] : {std::pair{5, 1}, std::pair{4, 2}}) {
    const auto report = conjecture_report(n_max, d);
    require(o, report.size() == static_cast<std::size_t>(n_max), "conjecture report is missing rows");
    for (const auto& row : report)
      require(o, row.lie_span_dim <= row.prim_dim && row.equal == (row.lie_span_dim == row.prim_dim),
              "conjecture report row " + std::to_string(row.degree));
  }
  return o;
}

Outcome command_line() {
  Outcome o;
  for (int d = 1; d <= 2; ++d)
    for (int n = 0; n <= 5; ++n)
      for (const auto& p : basis_phrases(n, d)) {
        const Element e(d, p);
        require(o, cli::parse_expression(cli::element_plain(e), d) == e, "plain round-trip of " + cli::phrase_plain(p));
      }
  const auto all = cli::run_command({"check", "all"});
  require(o, all.exit_code == 0, "check all exited " + std::to_string(all.exit_code));
  const auto rows = test::manifest();
  require(o, rows.size() == 20, "expected 20 JSON fixtures");
  for (const auto& row : rows) {
    const auto doc = test::json::parse(test::read_file(std::string(BITENSOR_FIXTURE_DIR) + "/" + row[0] + ".json"));
    std::vector<std::string> args(row.begin() + 1, row.end());
    const std::string violation = test::schema_violation(doc, test::dim_of(args));
    require(o, violation.empty(), "fixture " + row[0] + ": " + violation);
    args.insert(args.end(), {"--format", "json"});
    require(o, cli::run_command(args).out == doc.dump() + "\n", "fixture " + row[0] + " differs from the command output");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "antipode agreement", 30, antipode_agreement},
      {2, "Hopf axioms", 60, hopf_axioms},
      {3, "antipode closed forms", 5, closed_forms},
      {4, "convolution identity", 20, convolution},
      {5, "primitives from symmetric tensors", 60, primitives_from_symmetric},
      {6, "pairing laws", 60, pairing_laws},
      {7, "degree-2 Gram matrix", 1, gram},
      {8, "words of φ(U) pair to zero, ideal in radical", 60, radical},
      {9, "cut polynomials", 10, cut_polynomials},
      {10, "primitive space", 120, primitive_space},
      {11, "command line", 30, command_line},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && seconds > c.budget_seconds) {
      o.passed = false;
      o.detail = "over budget";
    }
    std::printf("%s criterion %d: %s (%.2f s of %.0f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.number, c.title.c_str(),
                seconds, c.budget_seconds, o.passed ? "" : " -- ", o.detail.c_str());
    failures += o.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
