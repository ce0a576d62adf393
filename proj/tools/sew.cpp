// Command-line front end: single weight queries, verification runs over a
// parameter grid, d/q sweeps with CSV/JSON output, and two-generator
// semigroup gap reports.
//
// Exit codes: 0 success, 2 parameter validation failure, 3 verification
// mismatch, 4 unsupported query (--strict and the field needs f).

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "sew/format.hpp"
#include "sew/oracle.hpp"
#include "sew/semigroup.hpp"
#include "sew/sweep.hpp"
#include "sew/verify.hpp"
#include "sew/weights.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_mismatch = 3;
constexpr int exit_unsupported = 4;

using json = nlohmann::ordered_json;

struct output_options {
  bool as_json = false;
  bool as_csv = false;
  unsigned precision = 6;
  long long limit = 50;
};

void print_machine_error(const char* code, const std::string& message) {
  std::cerr << json{{"error", code}, {"message", message}}.dump() << "\n";
}

void print_machine_error(const sew::domain_error& e) {
  print_machine_error(sew::errc_name(e.code()), e.what());
}

// Left-aligned plain-text table.
void print_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells)
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (widths.size() <= k) widths.push_back(0);
      widths[k] = std::max(widths[k], row[k].size());
    }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::string cell = row[k];
      if (k + 1 < row.size()) cell.resize(widths[k] + 2, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::cout << line << "\n";
  }
}

sew::sweep_row single_row(const sew::curve_family& family, const sew::integer& q) {
  sew::sweep_spec spec{family.n(), family.d(), family.d(), {q}, false};
  return sew::run_sweep(spec).at(0);
}

int cmd_weight(long long n, long long d, long long q, bool strict,
               const output_options& out) {
  const sew::curve_family family(n, d);  // validation errors exit 2
  if (q < 1) sew::fail(sew::errc::q_out_of_range, "require q >= 1");
  if (strict && family.gcd_nd() != 1) {
    print_machine_error(
        "requires_coprime_family",
        "gcd(n, d) = " + family.gcd_nd().str() +
            " > 1: the point-at-infinity weight requires the coefficients of f");
    return exit_unsupported;
  }
  const sew::sweep_row row = single_row(family, q);

  if (out.as_csv) {
    std::cout << sew::sweep_csv({row}, out.precision);
    return exit_ok;
  }
  if (out.as_json) {
    json report;
    report["n"] = n;
    report["d"] = d;
    report["q"] = q;
    report["gcd"] = family.gcd_nd().str();
    report["genus"] = family.genus().str();
    report["d_q"] = row.dim.str();
    report["affine_weight"] = row.affine_weight.str();
    report["infinity_weight"] =
        row.infinity_weight ? json(row.infinity_weight->str()) : json(nullptr);
    report["bw_q"] = row.branch_total ? json(row.branch_total->str()) : json(nullptr);
    report["curve_total"] = sew::curve_total_weight(family, q).str();
    report["proportion"] =
        row.proportion ? json(sew::rational_string(*row.proportion)) : json(nullptr);
    report["proportion_decimal"] =
        row.proportion ? json(sew::decimal_string(*row.proportion, out.precision))
                       : json(nullptr);
    report["asymptotic_bound"] = sew::rational_string(row.bound);
    std::cout << report.dump() << "\n";
    return exit_ok;
  }

  const std::string unavailable = "requires f; gcd(n,d)>1";
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"family", "n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                 " gcd=" + family.gcd_nd().str() +
                                 " genus=" + family.genus().str()});
  cells.push_back({"q", std::to_string(q) + " (dim " + row.dim.str() + ")"});
  cells.push_back({"affine branch weight", row.affine_weight.str()});
  cells.push_back({"infinity weight",
                   row.infinity_weight ? row.infinity_weight->str() : unavailable});
  cells.push_back(
      {"branch weight total", row.branch_total ? row.branch_total->str() : unavailable});
  cells.push_back({"curve total weight", sew::curve_total_weight(family, q).str()});
  cells.push_back({"proportion",
                   row.proportion ? sew::rational_string(*row.proportion) + " = " +
                                        sew::decimal_string(*row.proportion, out.precision)
                                  : unavailable});
  cells.push_back({"asymptotic bound",
                   sew::rational_string(row.bound) + " = " +
                       sew::decimal_string(row.bound, out.precision)});
  print_table(cells);
  return exit_ok;
}

int cmd_verify(long long n_max, long long d_max, long long q_max,
               const output_options& out) {
  sew::verify_options opt;
  opt.n_max = n_max;
  opt.d_max = d_max;
  opt.q_max = q_max;
  const sew::verify_result result = sew::run_verify(opt);

  if (out.as_json) {
    json failures = json::array();
    for (const auto& f : result.failures)
      failures.push_back(json{{"check", f.check},
                              {"n", f.n.str()},
                              {"d", f.d.str()},
                              {"q", f.q.str()},
                              {"left", f.left},
                              {"right", f.right}});
    std::cout << json{{"checks", result.checks},
                      {"failed", result.failures.size()},
                      {"passed", result.ok()},
                      {"failures", failures}}
                     .dump()
              << "\n";
  } else {
    for (const auto& f : result.failures)
      std::cout << "FAIL " << f.check << " (n=" << f.n << ", d=" << f.d
                << ", q=" << f.q << "): " << f.left << " != " << f.right << "\n";
    if (result.ok())
      std::cout << "verify: all " << result.checks << " checks passed (n <= "
                << n_max << ", d <= " << d_max << ", q <= " << q_max << ")\n";
    else
      std::cout << "verify: " << result.failures.size() << " of " << result.checks
                << " checks failed\n";
  }
  return result.ok() ? exit_ok : exit_mismatch;
}

int cmd_sweep(long long n, long long d_min, long long d_max,
              const std::vector<long long>& q_list, bool coprime_only,
              const output_options& out) {
  sew::sweep_spec spec;
  spec.n = n;
  spec.d_min = d_min;
  spec.d_max = d_max;
  for (long long q : q_list) spec.q_list.emplace_back(q);
  spec.coprime_only = coprime_only;
  const auto rows = sew::run_sweep(spec);

  if (out.as_json) {
    std::cout << sew::sweep_json(rows, out.precision).dump() << "\n";
    return exit_ok;
  }
  if (out.as_csv) {
    std::cout << sew::sweep_csv(rows, out.precision);
    return exit_ok;
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"d", "q", "g", "d_q", "affine", "infinity", "bw_q",
                   "proportion", "decimal", "bound", "deviation"});
  for (const auto& r : rows)
    cells.push_back(
        {r.d.str(), r.q.str(), r.genus.str(), r.dim.str(), r.affine_weight.str(),
         r.infinity_weight ? r.infinity_weight->str() : "-",
         r.branch_total ? r.branch_total->str() : "-",
         r.proportion ? sew::rational_string(*r.proportion) : "-",
         r.proportion ? sew::decimal_string(*r.proportion, out.precision) : "-",
         sew::rational_string(r.bound),
         r.deviation ? sew::rational_string(*r.deviation) : "-"});
  print_table(cells);
  return exit_ok;
}

int cmd_semigroup(long long a, long long b, const output_options& out) {
  const sew::semigroup_pair pair(a, b);
  if (!pair.coprime()) {
    if (out.as_json) {
      std::cout << json{{"a", a},
                        {"b", b},
                        {"gcd", pair.gcd().str()},
                        {"coprime", false},
                        {"gaps", nullptr},
                        {"gap_count", "infinite"},
                        {"gap_sum", "infinite"},
                        {"frobenius", nullptr}}
                       .dump()
                << "\n";
      return exit_ok;
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"semigroup", "<" + std::to_string(a) + ", " +
                                      std::to_string(b) + ">  gcd " +
                                      pair.gcd().str()});
    cells.push_back({"gaps", "infinite gap set (gcd > 1)"});
    cells.push_back({"count", "infinite"});
    cells.push_back({"sum", "infinite"});
    cells.push_back({"frobenius", "undefined"});
    print_table(cells);
    return exit_ok;
  }

  const auto gaps = sew::gap_set(pair);
  const sew::integer count = sew::gap_count(pair);
  const sew::integer sum = sew::gap_sum(pair);
  const sew::integer frob = sew::frobenius_number(pair);
  sew::integer enumerated_sum = 0;
  for (const auto& g : gaps) enumerated_sum += g;
  const bool agree = count == sew::integer(gaps.size()) && sum == enumerated_sum;

  const std::size_t limit =
      out.limit < 0 ? gaps.size() : static_cast<std::size_t>(out.limit);
  if (out.as_json) {
    json shown = json::array();
    for (std::size_t k = 0; k < gaps.size() && k < limit; ++k)
      shown.push_back(gaps[k].str());
    std::cout << json{{"a", a},
                      {"b", b},
                      {"gcd", pair.gcd().str()},
                      {"coprime", true},
                      {"gaps", shown},
                      {"gaps_elided", gaps.size() > limit ? gaps.size() - limit : 0},
                      {"gap_count", count.str()},
                      {"gap_sum", sum.str()},
                      {"frobenius", frob.str()},
                      {"closed_form_agrees", agree}}
                     .dump()
              << "\n";
    return agree ? exit_ok : exit_mismatch;
  }

  std::string gap_text = "{";
  for (std::size_t k = 0; k < gaps.size() && k < limit; ++k) {
    if (k > 0) gap_text += ", ";
    gap_text += gaps[k].str();
  }
  if (gaps.size() > limit)
    gap_text += ", ... (" + std::to_string(gaps.size() - limit) + " more)";
  gap_text += "}";

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"semigroup", "<" + std::to_string(a) + ", " + std::to_string(b) +
                                    ">  gcd " + pair.gcd().str()});
  cells.push_back({"gaps", gap_text});
  cells.push_back({"count", count.str() + "  (enumeration " +
                                std::to_string(gaps.size()) + ": " +
                                (agree ? "agree" : "MISMATCH") + ")"});
  cells.push_back({"sum", sum.str() + "  (enumeration " + enumerated_sum.str() +
                              ": " + (agree ? "agree" : "MISMATCH") + ")"});
  cells.push_back({"frobenius", frob.str()});
  print_table(cells);
  return agree ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact q-Weierstrass weights of branch points on superelliptic curve "
      "families y^n = f(x), from (n, d, q) alone"};
  app.require_subcommand(1);

  output_options out;
  app.add_flag("--json", out.as_json, "emit JSON (big integers as strings)");
  app.add_flag("--csv", out.as_csv, "emit CSV");
  app.add_option("--precision", out.precision, "decimal digits (round half even)")
      ->capture_default_str()
      ->check(CLI::Range(0, 10000));
  app.add_option("--limit", out.limit, "max gaps to list before eliding")
      ->capture_default_str();

  long long n = 0, d = 0, q = 0;
  bool strict = false;
  auto* weight = app.add_subcommand(
      "weight", "weights, totals and proportion for one (n, d, q)");
  weight->fallthrough();
  weight->add_option("-n", n, "superelliptic exponent (n >= 2)")->required();
  weight->add_option("-d", d, "degree of f (d > n)")->required();
  weight->add_option("-q", q, "differential order (q >= 1)")->required();
  weight->add_flag("--strict", strict,
                   "fail (exit 4) when a requested field needs the coefficients of f");

  long long n_max = 6, d_max = 24, q_max = 4;
  auto* verify = app.add_subcommand(
      "verify", "re-derive every closed form from the enumeration oracle over a grid");
  verify->fallthrough();
  verify->add_option("--n-max", n_max, "largest n")->capture_default_str();
  verify->add_option("--d-max", d_max, "largest d")->capture_default_str();
  verify->add_option("--q-max", q_max, "largest q")->capture_default_str();

  long long sweep_n = 0, sweep_d_min = 0, sweep_d_max = 0;
  std::vector<long long> sweep_q;
  bool coprime_only = false;
  auto* sweep = app.add_subcommand("sweep", "one row per (d, q) over a d range");
  sweep->fallthrough();
  sweep->add_option("-n", sweep_n, "superelliptic exponent")->required();
  sweep->add_option("--d-min", sweep_d_min, "first degree")->required();
  sweep->add_option("--d-max", sweep_d_max, "last degree")->required();
  sweep->add_option("-q", sweep_q, "q values (repeatable)")->required();
  sweep->add_flag("--coprime-only", coprime_only, "keep only d with gcd(n, d) = 1");

  long long a = 0, b = 0;
  auto* semigroup =
      app.add_subcommand("semigroup", "gap set, count, sum and Frobenius number");
  semigroup->fallthrough();
  semigroup->add_option("a", a, "first generator")->required();
  semigroup->add_option("b", b, "second generator")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_validation;
  }

  try {
    if (weight->parsed()) return cmd_weight(n, d, q, strict, out);
    if (verify->parsed()) return cmd_verify(n_max, d_max, q_max, out);
    if (sweep->parsed())
      return cmd_sweep(sweep_n, sweep_d_min, sweep_d_max, sweep_q, coprime_only, out);
    if (semigroup->parsed()) return cmd_semigroup(a, b, out);
  } catch (const sew::domain_error& e) {
    print_machine_error(e);
    return exit_validation;
  } catch (const std::exception& e) {
    print_machine_error("internal_error", e.what());
    return exit_validation;
  }
  return exit_validation;
}
