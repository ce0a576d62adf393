#pragma once

// Parameter sweeps over d (and q) for a fixed n, with CSV and JSON
// writers. Rows are assembled in ascending (d, q) order regardless of how
// they are computed; d values whose genus falls below 2 are skipped so
// that sweeps over mixed gcd classes always complete.

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sew/curve.hpp"
#include "sew/error.hpp"
#include "sew/format.hpp"
#include "sew/oracle.hpp"
#include "sew/weights.hpp"

namespace sew {

struct sweep_spec {
  integer n;
  integer d_min;
  integer d_max;
  std::vector<integer> q_list;
  bool coprime_only = false;
};

struct sweep_row {
  integer d;
  integer q;
  integer genus;
  integer dim;
  integer affine_weight;
  std::optional<integer> infinity_weight;  // gcd(n, d) = 1 only
  std::optional<integer> branch_total;
  std::optional<rational> proportion;
  rational bound;
  std::optional<rational> deviation;  // |proportion - bound|
};

inline void validate(const sweep_spec& spec) {
  if (spec.n < 2) fail(errc::exponent_out_of_range, "require n >= 2");
  if (spec.d_min <= spec.n || spec.d_max < spec.d_min)
    fail(errc::degree_out_of_range, "require n < d_min <= d_max");
  if (spec.q_list.empty()) fail(errc::q_out_of_range, "require at least one q");
  for (const auto& q : spec.q_list)
    if (q < 1) fail(errc::q_out_of_range, "require q >= 1");
}

inline std::vector<sweep_row> run_sweep(const sweep_spec& spec) {
  validate(spec);
  std::vector<integer> qs = spec.q_list;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

  std::vector<sweep_row> rows;
  for (integer d = spec.d_min; d <= spec.d_max; ++d) {
    if (spec.coprime_only && gcd(spec.n, d) != 1) continue;
    std::optional<curve_family> family;
    try {
      family.emplace(spec.n, d);
    } catch (const domain_error&) {
      continue;  // genus below 2 at the low end of the range
    }
    for (const auto& q : qs) {
      sweep_row row{d,
                    q,
                    family->genus(),
                    dimension(*family, q),
                    0,
                    std::nullopt,
                    std::nullopt,
                    std::nullopt,
                    asymptotic_proportion_bound(spec.n, q),
                    std::nullopt};
      if (q >= 2)
        row.affine_weight = affine_branch_weight(*family, q);
      else if (family->gcd_nd() == 1)
        row.affine_weight = affine_branch_weight_q1(*family);
      else
        row.affine_weight = oracle::affine_weight(*family, q);
      if (family->gcd_nd() == 1) {
        row.infinity_weight = infinity_weight(*family, q);
        row.branch_total = d * row.affine_weight + *row.infinity_weight;
        row.proportion =
            rational(*row.branch_total, curve_total_weight(*family, q));
        row.deviation = abs(*row.proportion - row.bound);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline constexpr const char* sweep_csv_header =
    "d,q,g,d_q,affine_weight,infinity_weight,bw_q,proportion,"
    "proportion_decimal,asymptotic_bound,abs_deviation";

inline std::string sweep_csv(const std::vector<sweep_row>& rows,
                             unsigned precision) {
  std::string out = sweep_csv_header;
  out += '\n';
  for (const auto& r : rows) {
    out += r.d.str() + ',' + r.q.str() + ',' + r.genus.str() + ',' +
           r.dim.str() + ',' + r.affine_weight.str() + ',';
    if (r.infinity_weight) out += r.infinity_weight->str();
    out += ',';
    if (r.branch_total) out += r.branch_total->str();
    out += ',';
    if (r.proportion) out += rational_string(*r.proportion);
    out += ',';
    if (r.proportion) out += decimal_string(*r.proportion, precision);
    out += ',';
    out += rational_string(r.bound) + ',';
    if (r.deviation) out += rational_string(*r.deviation);
    out += '\n';
  }
  return out;
}

// Array of objects with the same keys as the CSV columns. Arbitrary
// precision values are emitted as decimal strings so consumers never lose
// precision; absent fields are null.
inline nlohmann::ordered_json sweep_json(const std::vector<sweep_row>& rows,
                                         unsigned precision) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["d"] = r.d.str();
    row["q"] = r.q.str();
    row["g"] = r.genus.str();
    row["d_q"] = r.dim.str();
    row["affine_weight"] = r.affine_weight.str();
    row["infinity_weight"] =
        r.infinity_weight ? nlohmann::ordered_json(r.infinity_weight->str())
                          : nlohmann::ordered_json(nullptr);
    row["bw_q"] = r.branch_total
                      ? nlohmann::ordered_json(r.branch_total->str())
                      : nlohmann::ordered_json(nullptr);
    row["proportion"] = r.proportion
                            ? nlohmann::ordered_json(rational_string(*r.proportion))
                            : nlohmann::ordered_json(nullptr);
    row["proportion_decimal"] =
        r.proportion
            ? nlohmann::ordered_json(decimal_string(*r.proportion, precision))
            : nlohmann::ordered_json(nullptr);
    row["asymptotic_bound"] = rational_string(r.bound);
    row["abs_deviation"] = r.deviation
                               ? nlohmann::ordered_json(rational_string(*r.deviation))
                               : nlohmann::ordered_json(nullptr);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace sew
