#pragma once

// Deterministic tabular output (RFC-4180 CSV or JSON) and run manifests.

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "branch_points.hpp"
#include "elasticity.hpp"
#include "error.hpp"
#include "estimation.hpp"
#include "precision.hpp"
#include "rational_approx.hpp"
#include "series.hpp"

namespace ilangevin {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int output_digits = 17;

/// Nearest-even rounding to `digits` significant figures; "NaN"/"Infinity" for non-finite values.
inline std::string format_sig(double v, int digits = output_digits) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string format_sig(const extended_real& v, int digits = output_digits) {
  const mpfr_srcptr p = v.backend().data();
  if (mpfr_nan_p(p)) return "NaN";
  if (mpfr_inf_p(p)) return mpfr_sgn(p) > 0 ? "Infinity" : "-Infinity";
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.*RNg", digits, p);
  return buf;
}

inline std::string rational_text(const big_rational& q) {
  return q.get_den() == 1 ? numerator_string(q) : numerator_string(q) + "/" + denominator_string(q);
}

struct cell {
  std::string text;
  bool numeric = true;  // false: emitted as a JSON string
};

inline cell num(double v, int digits = output_digits) { return {format_sig(v, digits), true}; }
inline cell num(const extended_real& v, int digits = output_digits) { return {format_sig(v, digits), true}; }
inline cell integer(long long v) { return {std::to_string(v), true}; }
inline cell text(std::string s) { return {std::move(s), false}; }
inline cell empty() { return {"", true}; }

struct table {
  std::vector<std::string> columns;
  std::vector<std::vector<cell>> rows;

  void add(std::vector<cell> row) {
    if (row.size() != columns.size()) throw error(errc::invalid_argument, "row width does not match header");
    rows.push_back(std::move(row));
  }
};

enum class output_format { csv, json };

inline output_format parse_output_format(const std::string& s) {
  if (s == "csv") return output_format::csv;
  if (s == "json") return output_format::json;
  throw error(errc::invalid_argument, "unknown format '" + s + "'");
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

inline void write_csv(std::ostream& os, const table& t) {
  auto line = [&](const auto& fields, auto get) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) os << ',';
      os << detail::csv_field(get(fields[i]));
    }
    os << "\r\n";
  };
  line(t.columns, [](const std::string& s) { return s; });
  for (const auto& r : t.rows) line(r, [](const cell& c) { return c.text; });
}

/// {"columns": [...], "rows": [{column: value}, ...]}; numbers are written verbatim.
inline void write_json(std::ostream& os, const table& t) {
  auto key = [](const std::string& s) { return nlohmann::json(s).dump(); };
  os << "{\"columns\":[";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << key(t.columns[i]);
  os << "],\"rows\":[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << (r ? ",\n" : "\n") << '{';
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      const cell& c = t.rows[r][i];
      os << (i ? "," : "") << key(t.columns[i]) << ':';
      if (!c.numeric) os << key(c.text);
      else if (c.text.empty() || c.text == "NaN" || c.text.find("Infinity") != std::string::npos) os << "null";
      else os << c.text;
    }
    os << '}';
  }
  os << "\n]}\n";
}

inline std::string render(const table& t, output_format f) {
  std::ostringstream os;
  if (f == output_format::csv) write_csv(os, t);
  else write_json(os, t);
  return os.str();
}

// ---------------------------------------------------------------- exporters

/// Nonzero coefficients: power, exact value, and its correctly rounded double.
inline table series_table(const rational_series& s) {
  table t{{"power", "coefficient", "value"}, {}};
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (s[k] == 0) continue;
    t.add({integer(static_cast<long long>(k)), text(rational_text(s[k])), num(to_double(s[k]))});
  }
  return t;
}

inline table estimate_table(const std::vector<singularity_estimate>& rows) {
  table t{{"two_m", "r", "cos_two_theta", "alpha", "residual", "relative_residual", "outlier", "cos_out_of_range",
           "iterations", "note"},
          {}};
  for (const auto& e : rows)
    t.add({integer(e.m_index), num(e.radius), num(e.cos_two_theta), num(e.alpha), num(e.residual, 6),
           num(e.relative_residual, 6), integer(e.outlier), integer(e.cos_out_of_range), integer(e.iterations),
           text(e.note)});
  return t;
}

inline table domb_sykes_table(const domb_sykes_fit& f) {
  table t{{"window_lo", "window_hi", "points", "skipped", "intercept", "slope", "r", "alpha", "median_C",
           "rms_residual"},
          {}};
  t.add({integer(f.window_lo), integer(f.window_hi), integer(static_cast<long long>(f.points)),
         integer(static_cast<long long>(f.skipped)), num(f.intercept), num(f.slope), num(f.radius), num(f.alpha),
         num(f.median_C), num(f.rms_residual, 6)});
  return t;
}

inline table domb_sykes_points_table(const std::vector<domb_sykes_point>& pts, const domb_sykes_fit& f) {
  table t{{"two_m", "inv_two_m", "B", "C", "in_fit"}, {}};
  for (const auto& p : pts)
    t.add({integer(p.two_m), num(p.inv_two_m), num(p.B), num(p.C),
           integer(p.two_m >= f.window_lo && p.two_m <= f.window_hi)});
  return t;
}

/// Every raw pole and zero of one convergent; `retained` marks survivors of `kept`.
inline table pole_zero_table(const pole_zero_set& raw, const pole_zero_set& kept) {
  table t{{"depth", "kind", "re", "im", "modulus", "multiplicity", "residue", "retained"}, {}};
  auto survives = [](const std::vector<pz_point>& v, const pz_point& p) {
    for (const auto& q : v)
      if (q.z.re == p.z.re && q.z.im == p.z.im) return true;
    return false;
  };
  const auto d = static_cast<long long>(raw.truncation_depth);
  for (const auto& p : raw.poles)
    t.add({integer(d), text("pole"), num(p.z.re), num(p.z.im), num(abs(p.z)), integer(p.multiplicity),
           num(p.residue, 6), integer(survives(kept.poles, p))});
  for (const auto& p : raw.zeros)
    t.add({integer(d), text("zero"), num(p.z.re), num(p.z.im), num(abs(p.z)), integer(p.multiplicity), empty(),
           integer(survives(kept.zeros, p))});
  return t;
}

/// Odd n (sinh w = -w) first, then even n (sinh w = w), each in increasing n.
template <class T>
table census_table(const std::vector<branch_point<T>>& bps) {
  table t{{"equation", "n", "re_w", "im_w", "re_z", "im_z", "abs_z", "root_residual", "consistency_residual", "iterations"},
          {}};
  for (int parity : {1, 0})
    for (const auto& b : bps) {
      if (b.n % 2 != parity) continue;
      t.add({text(parity ? "sinh w = -w" : "sinh w = w"), integer(b.n), num(b.w.re), num(b.w.im), num(b.z.re),
             num(b.z.im), num(b.modulus), num(b.root_residual, 6), num(b.consistency_residual, 6), integer(b.iterations)});
    }
  return t;
}

/// Real-line quantities at each grid point. W is left empty where I_1 = x^2 I_m < 3.
inline table evaluation_table(const std::vector<double>& xs, const material_params& p) {
  p.validate();
  table t{{"x", "I1", "Linv", "cohen", "rickaby_scott", "f", "g", "h", "beta", "W"}, {}};
  const double x0 = std::sqrt(3 / p.I_m);
  for (double x : xs) {
    if (!(std::abs(x) < 1)) throw error(errc::domain_error, "grid point " + format_sig(x) + " outside (-1, 1)");
    const double a = std::abs(x);
    const bool at_ref = a == x0;
    const double I1 = at_ref ? 3.0 : x * x * p.I_m;
    cell w = empty();
    if (at_ref) w = num(0.0);
    else if (a > x0 && I1 > 3 && I1 < p.I_m) w = num(strain_energy(I1, p));
    t.add({num(x), num(I1), num(inv_langevin(x)), num(cohen_approx(x)), num(rickaby_scott_approx(x)),
           num(reduced_eval(reduced_kind::f, x)), num(reduced_eval(reduced_kind::g, x)),
           num(reduced_eval(reduced_kind::h, x)), num(stress_response(a, p)), w});
  }
  return t;
}

// ---------------------------------------------------------------- manifest

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw error(errc::invalid_argument, "SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

/// UTC ISO-8601; SOURCE_DATE_EPOCH overrides the clock.
inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* e = std::getenv("SOURCE_DATE_EPOCH"); e && *e) now = static_cast<std::time_t>(std::stoll(e));
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct run_manifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::string precision;
  nlohmann::json inputs = nlohmann::json::array();
  nlohmann::json outputs = nlohmann::json::array();
  std::vector<std::string> notes;

  void add_input(const std::string& name, const std::string& content) {
    inputs.push_back({{"name", name}, {"sha256", sha256_hex(content)}, {"bytes", content.size()}});
  }
  void add_output(const std::string& path, const std::string& content) {
    outputs.push_back({{"path", path}, {"sha256", sha256_hex(content)}, {"bytes", content.size()}});
  }

  [[nodiscard]] nlohmann::json to_json() const {
    return {{"tool", "ilangevin"}, {"version", tool_version}, {"command", command},
            {"parameters", parameters}, {"precision", precision}, {"inputs", inputs},
            {"outputs", outputs},       {"notes", notes},         {"created", utc_timestamp()}};
  }
};

/// Canonical text of a series, used as the digest of a generated input.
inline std::string series_fingerprint(const rational_series& s) {
  std::string out;
  for (std::size_t k = 0; k <= s.order(); ++k) out += std::to_string(k) + ' ' + rational_text(s[k]) + '\n';
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error(errc::invalid_argument, "cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw error(errc::invalid_argument, "write to '" + path + "' failed");
}

}  // namespace ilangevin
