// ilangevin: series, singularity estimates, pole maps, branch points and
// elasticity grids, written as CSV/JSON with a sidecar manifest.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <ilangevin/io.hpp>

namespace il = ilangevin;
namespace fs = std::filesystem;

namespace {

enum exit_code { ok = 0, usage = 2, numerical = 3 };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t max_series_order = 2000;
constexpr std::size_t max_pole_depth = 400;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw usage_error("bad integer '" + s + "' in " + what);
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || !std::isfinite(v)) throw usage_error("bad number '" + s + "' in " + what);
  return v;
}

// "a", "a:b", "a:b:step" or "a,b,c"
std::vector<long> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<long> out;
  if (s.find(',') != std::string::npos) {
    for (const auto& p : split(s, ',')) out.push_back(parse_long(p, what));
  } else {
    const auto p = split(s, ':');
    if (p.size() > 3) throw usage_error("bad range '" + s + "' in " + what);
    const long a = parse_long(p[0], what);
    const long b = p.size() > 1 ? parse_long(p[1], what) : a;
    const long step = p.size() > 2 ? parse_long(p[2], what) : 1;
    if (step <= 0 || b < a) throw usage_error("empty range '" + s + "' in " + what);
    for (long v = a; v <= b; v += step) out.push_back(v);
  }
  return out;
}

std::vector<double> parse_grid(const std::string& s) {
  const auto p = split(s, ':');
  if (p.size() != 3) throw usage_error("grid must be lo:hi:step");
  const double a = parse_double(p[0], "--grid"), b = parse_double(p[1], "--grid"), h = parse_double(p[2], "--grid");
  if (!(h > 0) || b < a) throw usage_error("empty grid '" + s + "'");
  if (!(a > -1 && b < 1)) throw usage_error("grid '" + s + "' leaves (-1, 1)");
  const auto n = static_cast<long>(std::floor((b - a) / h * (1 + 1e-12) + 1e-9));
  if (n > 10'000'000) throw usage_error("grid too fine");
  std::vector<double> xs;
  // When the step divides the span, interpolate between the end points so a
  // symmetric grid is exactly symmetric.
  const bool spans = n > 0 && std::abs(static_cast<double>(n) * h - (b - a)) <= 1e-9 * (b - a);
  for (long i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i);
    xs.push_back(spans ? (a * (static_cast<double>(n) - t) + b * t) / static_cast<double>(n) : std::min(a + t * h, b));
  }
  return xs;
}

il::precision_mode precision_from(const std::string& flag) {
  try {
    return flag.empty() ? il::default_precision_mode() : il::parse_precision_mode(flag);
  } catch (const il::error& e) {
    throw usage_error(e.what());
  }
}

enum class series_kind { langevin, inverse, f, g, h };

series_kind parse_series_kind(const std::string& s) {
  if (s == "langevin") return series_kind::langevin;
  if (s == "inverse") return series_kind::inverse;
  if (s == "f") return series_kind::f;
  if (s == "g") return series_kind::g;
  if (s == "h") return series_kind::h;
  throw usage_error("unknown function '" + s + "'");
}

il::rational_series make_series(series_kind k, std::size_t order) {
  switch (k) {
    case series_kind::langevin: return il::langevin_series(order);
    case series_kind::inverse: return il::inverse_langevin_series(order);
    case series_kind::f: return il::reduce_multiplicative(il::inverse_langevin_series(order + 1), order);
    case series_kind::g: return il::reduce_additive(il::inverse_langevin_series(order), order);
    case series_kind::h: {
      const auto inv = il::inverse_langevin_series(order + 1);
      return il::h_series(il::reduce_additive(inv, order + 1), order);
    }
  }
  throw usage_error("unknown function");
}

struct output_options {
  std::string out;
  std::string format = "csv";
};

void add_output_flags(CLI::App* c, output_options& o) {
  c->add_option("--out,-o", o.out, "output file (stdout when omitted)");
  c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

/// Writes `t` to --out (plus `<out>.manifest.json`) or to stdout.
void emit(const il::table& t, const output_options& o, il::run_manifest& m) {
  const auto fmt = il::parse_output_format(o.format);
  const std::string body = il::render(t, fmt);
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  il::write_file(o.out, body);
  m.parameters["format"] = o.format;
  m.add_output(fs::path(o.out).filename().string(), body);
  il::write_file(o.out + ".manifest.json", m.to_json().dump(2) + "\n");
}

void note(il::run_manifest& m, const std::string& s) {
  std::cerr << "ilangevin: " << s << '\n';
  m.notes.push_back(s);
}

// ------------------------------------------------------------------ series

struct series_args {
  std::string function;
  long order = 0;
  output_options out;
};

int run_series(const series_args& a) {
  const auto kind = parse_series_kind(a.function);
  if (a.order < 1 || static_cast<std::size_t>(a.order) > max_series_order)
    throw usage_error("order must lie in [1, " + std::to_string(max_series_order) + "]");
  const auto s = make_series(kind, static_cast<std::size_t>(a.order));
  il::run_manifest m;
  m.command = "series";
  m.precision = "exact";
  m.parameters = {{"function", a.function}, {"order", a.order}};
  emit(il::series_table(s), a.out, m);
  return ok;
}

// ---------------------------------------------------------------- estimate

struct estimate_args {
  std::string source = "h";
  long order = static_cast<long>(il::default_h_order);
  std::string method;
  std::string window = "auto";
  bool points = false;
  output_options out;
};

int run_estimate(const estimate_args& a) {
  const auto kind = parse_series_kind(a.source);
  if (kind == series_kind::langevin) throw usage_error("estimate needs inverse, f, g or h");
  if (a.order < 16 || static_cast<std::size_t>(a.order) > max_series_order)
    throw usage_error("order must lie in [16, " + std::to_string(max_series_order) + "]");
  const auto s = make_series(kind, static_cast<std::size_t>(a.order));
  // Odd series are estimated through their even quotient by x.
  const il::rational_series even =
      s.parity() == il::series_parity::odd ? il::h_series(s, static_cast<std::size_t>(a.order - 1)) : s;
  const long top = static_cast<long>(even.order() - even.order() % 2);

  std::optional<std::pair<long, long>> win;
  if (a.window != "auto") {
    const auto p = split(a.window, ':');
    if (p.size() != 2) throw usage_error("window must be lo:hi or auto");
    win = {{parse_long(p[0], "--window"), parse_long(p[1], "--window")}};
    if (win->first % 2 || win->second % 2 || win->first > win->second)
      throw usage_error("window bounds must be even and ordered");
    if (win->first < 8 || win->second > top)
      throw usage_error("window outside the available anchors [8, " + std::to_string(top) + "]");
  }

  il::run_manifest m;
  m.command = "estimate";
  m.precision = "standard";
  m.parameters = {{"source", a.source}, {"order", a.order}, {"method", a.method}, {"window", a.window}};
  m.add_input("series:" + a.source + ":" + std::to_string(a.order), il::series_fingerprint(s));
  const auto w = il::window_from_series<double>(even);

  if (a.method == "domb-sykes") {
    const auto fit = win ? il::fit_domb_sykes(w, win->first, win->second) : il::fit_domb_sykes(w);
    std::cerr << "ilangevin: domb-sykes r = " << il::format_sig(fit.radius, 6)
              << ", alpha = " << il::format_sig(fit.alpha, 6) << ", intercept = " << il::format_sig(fit.intercept, 8)
              << " over 2m = " << fit.window_lo << ".." << fit.window_hi << '\n';
    m.parameters["points"] = a.points;
    if (a.points) emit(il::domb_sykes_points_table(il::domb_sykes_points(w, 0, top), fit), a.out, m);
    else emit(il::domb_sykes_table(fit), a.out, m);
    return ok;
  }
  const auto form = a.method == "three-term-exact" ? il::recurrence_form::exact : il::recurrence_form::approximate;
  // Default anchors: 2m = 262..300 when the series reaches it, else the top 20.
  long lo = 262, hi = 300;
  if (!win && hi > top) {
    hi = top;
    lo = std::max(8L, hi - 38);
  }
  if (win) std::tie(lo, hi) = *win;
  m.parameters["anchors"] = {lo, hi};
  // Outliers are judged against two sign cycles on either side of the window.
  const long clo = std::max(16L, lo - 68), chi = std::min(top - 2, hi + 68);
  std::vector<il::singularity_estimate> rows;
  for (auto& r : il::three_term_table(w, std::min(clo, lo), std::max(chi, hi), form))
    if (r.m_index >= lo && r.m_index <= hi) rows.push_back(std::move(r));
  for (const auto& r : rows)
    if (!r.note.empty()) note(m, "2m=" + std::to_string(r.m_index) + ": " + r.note);
  emit(il::estimate_table(rows), a.out, m);
  return ok;
}

// ------------------------------------------------------------------- poles

struct poles_args {
  std::string source = "f";
  std::string depths;
  std::string filter = "none";
  std::optional<double> pair_tol, residue_tol;
  bool scale_by_max_pole = false;
  std::string out;
};

int run_poles(const poles_args& a) {
  const auto kind = parse_series_kind(a.source);
  const auto ds = parse_int_list(a.depths, "--depths");
  for (long d : ds)
    if (d < 1 || static_cast<std::size_t>(d) > max_pole_depth)
      throw usage_error("depth must lie in [1, " + std::to_string(max_pole_depth) + "]");
  if (a.pair_tol && !(*a.pair_tol > 0)) throw usage_error("--pair-tol must be positive");
  if (a.residue_tol && !(*a.residue_tol >= 0)) throw usage_error("--residue-tol must be non-negative");

  il::run_manifest m;
  m.command = "poles";
  m.precision = "extended";
  il::froissart_options fo;
  fo.scale_by_max_pole = a.scale_by_max_pole;
  if (a.pair_tol) {
    note(m, "pair_tol override " + il::format_sig(*a.pair_tol, 6) + " (default " + il::format_sig(fo.pair_tol, 6) + ")");
    fo.pair_tol = *a.pair_tol;
  }
  if (a.residue_tol) {
    note(m, "residue_tol override " + il::format_sig(*a.residue_tol, 6) + " (default " +
                il::format_sig(fo.residue_tol, 6) + ")");
    fo.residue_tol = *a.residue_tol;
  }
  const bool filter = a.filter == "froissart";
  m.parameters = {{"source", a.source},
                  {"depths", ds},
                  {"filter", a.filter},
                  {"pair_tol", fo.pair_tol},
                  {"residue_tol", fo.residue_tol},
                  {"scale_by_max_pole", fo.scale_by_max_pole}};

  const auto dmax = static_cast<std::size_t>(*std::max_element(ds.begin(), ds.end()));
  // Depth k consumes k coefficients of the series in u = x^2 (or x).
  const std::size_t order = 2 * dmax + 1;
  const auto s = make_series(kind, order);
  m.add_input("series:" + a.source + ":" + std::to_string(order), il::series_fingerprint(s));
  const auto cf = il::series_to_cf(s, dmax);
  if (cf.terminated) note(m, "continued fraction terminated at depth " + std::to_string(cf.depth()));

  const auto z1 = il::solve_branch_point<double>(1, il::precision_context::standard()).z;
  const double r1 = std::hypot(z1.re, z1.im);
  const double targets[4][2] = {{z1.re, z1.im}, {z1.re, -z1.im}, {-z1.re, z1.im}, {-z1.re, -z1.im}};

  il::table summary{{"depth", "poles", "zeros", "retained_poles", "retained_zeros", "working_bits", "min_circle_gap",
                     "nearest_z1", "near_z1_count", "real_beyond_one"},
                    {}};
  if (!a.out.empty()) fs::create_directories(a.out);
  std::string all_points;
  for (long d : ds) {
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(d), cf.depth());
    const auto c = il::cf_convergent(cf, k);
    const auto raw = il::poles_and_zeros(c, static_cast<std::size_t>(d));
    const auto kept = filter ? il::filter_froissart(raw, fo) : raw;
    double gap = std::numeric_limits<double>::infinity(), near = gap;
    long near_count = 0, real_beyond = 0;
    for (const auto& p : kept.poles) {
      const double mod = abs(p.z);
      gap = std::min(gap, std::abs(mod - r1));
      double best = std::numeric_limits<double>::infinity();
      for (const auto& t : targets) best = std::min(best, std::hypot(p.z.re - t[0], p.z.im - t[1]));
      near = std::min(near, best);
      if (best < 5e-3) ++near_count;
      if (std::abs(p.z.im) <= 1e-12 * mod && std::abs(p.z.re) > 1) ++real_beyond;
    }
    summary.add({il::integer(d), il::integer(static_cast<long long>(raw.poles.size())),
                 il::integer(static_cast<long long>(raw.zeros.size())),
                 il::integer(static_cast<long long>(kept.poles.size())),
                 il::integer(static_cast<long long>(kept.zeros.size())), il::integer(raw.working_bits),
                 kept.poles.empty() ? il::empty() : il::num(gap), kept.poles.empty() ? il::empty() : il::num(near),
                 il::integer(near_count), il::integer(real_beyond)});
    std::cerr << "ilangevin: depth " << d << ": " << kept.poles.size() << " poles";
    if (!kept.poles.empty()) std::cerr << ", nearest z1 " << il::format_sig(near, 4);
    std::cerr << '\n';
    if (!a.out.empty()) {
      const std::string body = il::render(il::pole_zero_table(raw, kept), il::output_format::csv);
      const std::string name = "depth_" + std::to_string(d) + ".csv";
      il::write_file((fs::path(a.out) / name).string(), body);
      m.add_output(name, body);
    }
  }
  const std::string body = il::render(summary, il::output_format::csv);
  if (a.out.empty()) {
    std::cout << body;
    return ok;
  }
  il::write_file((fs::path(a.out) / "summary.csv").string(), body);
  m.add_output("summary.csv", body);
  il::write_file((fs::path(a.out) / "manifest.json").string(), m.to_json().dump(2) + "\n");
  return ok;
}

// ----------------------------------------------------------- branch points

struct branch_args {
  long n = 0;
  std::string precision;
  output_options out;
};

int run_branch_points(const branch_args& a) {
  if (a.n < 1 || a.n > 100000) throw usage_error("--n must lie in [1, 100000]");
  const auto mode = precision_from(a.precision);
  const auto ctx = il::precision_context::for_mode(mode);
  il::run_manifest m;
  m.command = "branch-points";
  m.precision = std::string(il::to_string(mode));
  m.parameters = {{"n", a.n}, {"newton_tol", ctx.newton_tol}, {"max_iter", ctx.max_iter}};
  const int n = static_cast<int>(a.n);
  const il::table t = mode == il::precision_mode::extended
                          ? il::census_table(il::first_quadrant_root_census<il::extended_real>(n, ctx))
                          : il::census_table(il::first_quadrant_root_census<double>(n, ctx));
  emit(t, a.out, m);
  return ok;
}

// -------------------------------------------------------------------- eval

struct eval_args {
  std::string grid = "0:0.99:0.01";
  double mu = 1;
  double I_m = 25;
  output_options out;
};

int run_eval(const eval_args& a) {
  auto xs = parse_grid(a.grid);
  const il::material_params p{a.mu, a.I_m};
  try {
    p.validate();
  } catch (const il::error& e) {
    throw usage_error(e.what());
  }
  // The reference state x0 = sqrt(3/I_m) is always sampled when the grid spans it.
  const double x0 = std::sqrt(3 / p.I_m);
  if (xs.front() <= x0 && x0 <= xs.back() && std::find(xs.begin(), xs.end(), x0) == xs.end()) {
    xs.push_back(x0);
    std::sort(xs.begin(), xs.end());
  }
  il::run_manifest m;
  m.command = "eval";
  m.precision = "standard";
  m.parameters = {{"grid", a.grid}, {"mu", a.mu}, {"I_m", a.I_m}};
  emit(il::evaluation_table(xs, p), a.out, m);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse Langevin series, singularities and limited-stretch elasticity"};
  app.set_version_flag("--version", std::string(il::tool_version));
  app.require_subcommand(1);

  series_args sa;
  auto* sc = app.add_subcommand("series", "exact Taylor coefficients");
  sc->add_option("--function", sa.function, "langevin, inverse, f, g or h")->required();
  sc->add_option("--order", sa.order, "highest power")->required();
  add_output_flags(sc, sa.out);

  estimate_args ea;
  auto* ec = app.add_subcommand("estimate", "singularity estimates from series coefficients");
  ec->add_option("--method", ea.method, "three-term-exact, three-term-approx or domb-sykes")
      ->required()
      ->check(CLI::IsMember({"three-term-exact", "three-term-approx", "domb-sykes"}));
  ec->add_option("--source", ea.source, "inverse, f, g or h")->capture_default_str();
  ec->add_option("--order", ea.order, "series order")->capture_default_str();
  ec->add_option("--window", ea.window, "lo:hi anchors (even) or auto")->capture_default_str();
  ec->add_flag("--points", ea.points, "domb-sykes: write every (1/2m, B, C) point");
  add_output_flags(ec, ea.out);

  poles_args pa;
  auto* pc = app.add_subcommand("poles", "continued-fraction pole/zero maps");
  pc->add_option("--depths", pa.depths, "depth, lo:hi:step or a,b,c")->required();
  pc->add_option("--source", pa.source, "inverse, f, g or h")->capture_default_str();
  pc->add_option("--filter", pa.filter, "none or froissart")->capture_default_str()->check(CLI::IsMember({"none", "froissart"}));
  pc->add_option("--pair-tol", pa.pair_tol, "pole-zero distance tolerance relative to |pole|");
  pc->add_option("--residue-tol", pa.residue_tol, "residue tolerance relative to the largest residue");
  pc->add_flag("--scale-by-max-pole", pa.scale_by_max_pole, "scale pair_tol by the largest |pole|");
  pc->add_option("--out,-o", pa.out, "output directory (summary to stdout when omitted)");

  branch_args ba;
  auto* bc = app.add_subcommand("branch-points", "roots of sinh w = -+w and their images");
  bc->add_option("--n", ba.n, "number of first-quadrant roots")->required();
  bc->add_option("--precision", ba.precision, "standard or extended (default: ILANGEVIN_PRECISION, else extended)");
  add_output_flags(bc, ba.out);

  eval_args va;
  auto* vc = app.add_subcommand("eval", "inverse Langevin, reduced functions, stress and strain energy on a grid");
  vc->add_option("--grid", va.grid, "lo:hi:step inside (-1, 1)")->capture_default_str();
  vc->add_option("--mu", va.mu, "shear modulus")->capture_default_str();
  vc->add_option("--Im", va.I_m, "limiting first invariant")->capture_default_str();
  add_output_flags(vc, va.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*sc) return run_series(sa);
    if (*ec) return run_estimate(ea);
    if (*pc) return run_poles(pa);
    if (*bc) return run_branch_points(ba);
    if (*vc) return run_eval(va);
  } catch (const usage_error& e) {
    std::cerr << "ilangevin: " << e.what() << '\n';
    return usage;
  } catch (const il::error& e) {
    std::cerr << "ilangevin: " << e.what() << '\n';
    return numerical;
  } catch (const std::exception& e) {
    std::cerr << "ilangevin: " << e.what() << '\n';
    return numerical;
  }
  return usage;
}
