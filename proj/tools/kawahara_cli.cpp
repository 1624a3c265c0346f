// Command-line front end over the C API.
//
// Exit codes: 0 success, 1 comparison outside tolerance, 2 invalid parameters,
// 3 numerical or I/O failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "kawahara/kawahara.h"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

constexpr std::size_t kProfilePoints = 512;
constexpr double kEpsZeroHalfWidth = 1e-3;  // grid half-width when the predicted window is empty

struct CliFailure {
  int code;
  std::string message;
};

struct RunConfig {
  double beta = 0.0;
  double sigma = 1.0;
  double eps = 1e-3;
  int delta_n = 1;
  int order = 1;
  int trunc_N = 32;
  int mu_points = 400;
  double margin = 0.5;
  std::string out_dir = ".";
  std::string format = "csv";
  std::size_t samples = 512;
  unsigned threads = 0;
  std::optional<double> mu2;
  std::optional<double> mu_lo;
  std::optional<double> mu_hi;
  double growth_floor = 1e-10;
  std::string profile;
  std::map<std::string, double> tolerance_overrides;
};

json config_json(const RunConfig& c) {
  json j = {{"beta", c.beta},         {"sigma", c.sigma},     {"eps", c.eps},
            {"delta_n", c.delta_n},   {"order", c.order},     {"trunc_N", c.trunc_N},
            {"mu_points", c.mu_points}, {"margin", c.margin}, {"out_dir", c.out_dir},
            {"format", c.format},     {"samples", c.samples}, {"growth_floor", c.growth_floor}};
  j["mu2_override"] = c.mu2 ? json(*c.mu2) : json(nullptr);
  j["mu_lo"] = c.mu_lo ? json(*c.mu_lo) : json(nullptr);
  j["mu_hi"] = c.mu_hi ? json(*c.mu_hi) : json(nullptr);
  if (!c.profile.empty()) j["profile"] = c.profile;
  if (!c.tolerance_overrides.empty()) j["tolerance_overrides"] = c.tolerance_overrides;
  return j;
}

int exit_code_for(kw_status status) {
  switch (status) {
    case KW_ERR_INVALID_ARGUMENT:
    case KW_ERR_RESONANT:
    case KW_ERR_INADMISSIBLE:
    case KW_ERR_DEGENERATE:
      return kExitInvalid;
    default:
      return kExitNumerical;
  }
}

void check(kw_status status) {
  if (status != KW_OK) throw CliFailure{exit_code_for(status), kw_last_error()};
}

kw_params params_of(const RunConfig& c) { return {c.beta, c.sigma}; }

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

// Writes to a sibling temporary file, then renames over the target.
void write_atomic(const fs::path& path, const std::string& content) {
  std::error_code ec;
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path(), ec);
  if (ec) throw CliFailure{kExitNumerical, "cannot create " + path.parent_path().string() + ": " + ec.message()};
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) throw CliFailure{kExitNumerical, "cannot write " + tmp.string()};
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw CliFailure{kExitNumerical, "cannot rename to " + path.string() + ": " + ec.message()};
  }
}

void write_json(const RunConfig& c, const std::string& name, const json& j) {
  write_atomic(fs::path(c.out_dir) / name, j.dump(2) + "\n");
}

void warn_amplitude(const RunConfig& c) {
  if (c.eps > 0.1) {
    std::cerr << "warning: eps=" << c.eps << " is beyond the small-amplitude regime of the third-order wave\n";
  }
}

kw_collision collision_of(const RunConfig& c) {
  kw_collision site{};
  check(kw_find_collision(params_of(c), c.delta_n, &site));
  return site;
}

json collision_json(const kw_collision& s) {
  return {{"delta_n", s.delta_n}, {"n", s.n},        {"m", s.m},    {"mu0", s.mu0},
          {"lambda0_im", s.lambda0_im}, {"k_n", s.k_n}, {"k_m", s.k_m}};
}

std::vector<kw_curve_point> fetch_points(const std::function<kw_status(kw_curve_point*, size_t, size_t*)>& call) {
  size_t count = 0;
  check(call(nullptr, 0, &count));
  std::vector<kw_curve_point> points(count);
  check(call(points.data(), points.size(), &count));
  points.resize(count);
  return points;
}

// ---- stokes -------------------------------------------------------------

int cmd_stokes(const RunConfig& c) {
  const kw_params p = params_of(c);
  kw_stokes_coeffs w{};
  check(kw_stokes(p, &w));
  warn_amplitude(c);

  std::vector<double> x(kProfilePoints);
  std::vector<double> u(kProfilePoints);
  for (std::size_t i = 0; i < kProfilePoints; ++i) x[i] = 2.0 * M_PI * static_cast<double>(i) / kProfilePoints;
  check(kw_stokes_eval(p, c.eps, x.data(), u.data(), kProfilePoints));
  double res = 0.0;
  check(kw_stokes_residual(p, c.eps, kProfilePoints, &res));
  const double speed = w.c0 + w.c2 * c.eps * c.eps;

  const std::vector<std::pair<const char*, double>> table = {
      {"c0", w.c0}, {"c2", w.c2}, {"u2_0", w.u2_0}, {"u2_2", w.u2_2}, {"u3_3", w.u3_3}, {"speed", speed},
      {"residual", res}};

  if (c.format == "json") {
    json j;
    j["config"] = config_json(c);
    for (const auto& [name, value] : table) j["coefficients"][name] = value;
    j["profile"] = {{"x", x}, {"u", u}};
    write_json(c, "stokes.json", j);
  } else {
    std::ostringstream out;
    out << "quantity,x,value\n";
    for (const auto& [name, value] : table) out << name << ",," << sci(value) << "\n";
    for (std::size_t i = 0; i < kProfilePoints; ++i) out << "u," << sci(x[i]) << "," << sci(u[i]) << "\n";
    write_atomic(fs::path(c.out_dir) / "stokes.csv", out.str());
  }
  return kExitOk;
}

// ---- collide ------------------------------------------------------------

int cmd_collide(const RunConfig& c) {
  const kw_collision s = collision_of(c);
  kw_interval window{};
  check(kw_admissible_beta_range(c.delta_n, &window));
  const double gap = std::abs(kw_omega(s.k_m, c.beta) - kw_omega(s.k_n, c.beta));
  const bool krein = s.k_n * s.k_m < 0.0;

  if (c.format == "json") {
    json j;
    j["config"] = config_json(c);
    j["collision"] = collision_json(s);
    j["omega_gap"] = gap;
    j["krein_opposite"] = krein;
    j["admissible_window"] = {window.lo, window.hi};
    write_json(c, "collision.json", j);
  } else {
    std::ostringstream out;
    out << "delta_n,n,m,mu0,lambda0_im,k_n,k_m,omega_gap,krein_opposite\n";
    out << s.delta_n << "," << s.n << "," << s.m << "," << sci(s.mu0) << "," << sci(s.lambda0_im) << ","
        << sci(s.k_n) << "," << sci(s.k_m) << "," << sci(gap) << "," << (krein ? 1 : 0) << "\n";
    write_atomic(fs::path(c.out_dir) / "collision.csv", out.str());
  }
  return kExitOk;
}

// ---- isola (asymptotic) -------------------------------------------------

struct Prediction {
  double mu_lo = 0.0;
  double mu_hi = 0.0;
  double mu_star = 0.0;
  double re = 0.0;
  double im = 0.0;
  double im_scale = 0.0;  // eps^2 size of the imaginary correction
  kw_isola_model leading{};
};

void require_order(const RunConfig& c) {
  if (c.order == 2 && c.delta_n != 1) {
    throw CliFailure{kExitInvalid, "order 2 is available for delta_n=1 only"};
  }
}

Prediction predict(const RunConfig& c, const kw_collision& s) {
  const kw_params p = params_of(c);
  Prediction out;
  check(kw_isola_model_build(p, &s, c.eps, &out.leading));
  kw_second_order so{};
  if (c.delta_n == 1) {
    check(kw_second_order_build(p, &s, c.eps, c.mu2 ? &*c.mu2 : nullptr, &so));
    out.im_scale = std::abs(so.lambda_star_im - s.lambda0_im);
  } else {
    out.im_scale = c.eps * c.eps * std::abs(out.leading.center_drift);
  }
  if (c.order == 2) {
    out.mu_lo = so.mu_lo;
    out.mu_hi = so.mu_hi;
    out.mu_star = so.mu_star;
    out.re = so.lambda_star_re;
    out.im = so.lambda_star_im;
  } else {
    out.mu_lo = out.leading.mu_lo;
    out.mu_hi = out.leading.mu_hi;
    out.mu_star = out.leading.mu_star;
    out.re = out.leading.lambda_star_re;
    out.im = out.leading.lambda_star_im;
  }
  return out;
}

int cmd_isola(const RunConfig& c) {
  require_order(c);
  const kw_params p = params_of(c);
  const kw_collision s = collision_of(c);
  const Prediction pred = predict(c, s);
  warn_amplitude(c);

  json meta;
  meta["config"] = config_json(c);
  meta["collision"] = collision_json(s);
  meta["order"] = c.order;
  meta["growth_order"] = pred.leading.order;
  meta["interval"] = {pred.mu_lo, pred.mu_hi};
  meta["mu_star"] = pred.mu_star;
  meta["lambda_star"] = {{"re", pred.re}, {"im", pred.im}};
  meta["axes"] = {{"a", pred.leading.semi_major_a}, {"b", pred.leading.semi_minor_b}};
  meta["center"] = {{"re", 0.0}, {"im", pred.leading.center_im}};
  meta["center_drift"] = pred.leading.center_drift;
  meta["strength"] = pred.leading.strength;

  std::vector<kw_curve_point> curve;
  if (c.delta_n == 1) {
    double m1 = 0.0;
    check(kw_m1(p, &s, &m1));
    meta["M1"] = m1;
  }
  if (c.delta_n == 2) {
    double fourier = 0.0;
    double closed = 0.0;
    check(kw_s2(p, &s, &fourier, &closed));
    meta["S2"] = fourier;
    meta["S2_closed_form"] = closed;
  }
  if (c.delta_n == 3) {
    double s3 = 0.0;
    check(kw_s3(p, &s, &s3));
    meta["S3"] = s3;
  }
  if (c.order == 2) {
    kw_second_order so{};
    const double* override_ptr = c.mu2 ? &*c.mu2 : nullptr;
    check(kw_second_order_build(p, &s, c.eps, override_ptr, &so));
    meta["mu2"] = so.mu2;
    meta["mu2_regular"] = so.regular != 0;
    meta["mu_star_shift"] = so.mu_star_shift;
    curve = fetch_points([&](kw_curve_point* out, size_t cap, size_t* written) {
      return kw_second_order_curve(p, &s, c.eps, c.samples, override_ptr, out, cap, written);
    });
  } else {
    curve = fetch_points([&](kw_curve_point* out, size_t cap, size_t* written) {
      return kw_isola_curve(&pred.leading, c.samples, out, cap, written);
    });
  }

  std::ostringstream csv;
  csv << "mu,lambda_re,lambda_im,branch\n";
  for (const auto& pt : curve) {
    csv << sci(pt.mu) << "," << sci(pt.lambda_re) << "," << sci(pt.lambda_im) << "," << pt.branch << "\n";
  }
  write_atomic(fs::path(c.out_dir) / "isola_asym.csv", csv.str());
  write_json(c, "isola_meta.json", meta);
  return kExitOk;
}

// ---- ffh ----------------------------------------------------------------

struct SpectrumHandle {
  void operator()(kw_spectrum* s) const { kw_spectrum_destroy(s); }
};
struct IsolaHandle {
  void operator()(kw_isola* s) const { kw_isola_destroy(s); }
};

struct NumericRun {
  std::vector<double> grid;
  std::unique_ptr<kw_spectrum, SpectrumHandle> spectrum;
  std::unique_ptr<kw_isola, IsolaHandle> isola;
  kw_isola_numerics summary{};
  kw_extract_options options{};
};

NumericRun run_ffh(const RunConfig& c, const kw_collision& s, const Prediction& pred) {
  double lo = pred.mu_lo;
  double hi = pred.mu_hi;
  double width = hi - lo;
  if (!(width > 0.0)) {
    lo = pred.mu_star - kEpsZeroHalfWidth;
    hi = pred.mu_star + kEpsZeroHalfWidth;
    width = 0.0;
  }
  lo = c.mu_lo.value_or(lo - c.margin * width);
  hi = c.mu_hi.value_or(hi + c.margin * width);
  lo = std::max(lo, -0.5);
  hi = std::min(hi, 0.5);
  if (!(lo < hi)) throw CliFailure{kExitInvalid, "empty Floquet grid"};

  NumericRun run;
  run.grid.resize(static_cast<std::size_t>(c.mu_points));
  for (int i = 0; i < c.mu_points; ++i) run.grid[i] = lo + (hi - lo) * i / (c.mu_points - 1.0);

  kw_spectrum* spectrum = nullptr;
  check(kw_sweep(params_of(c), c.eps, c.trunc_N, run.grid.data(), run.grid.size(), c.threads, &spectrum));
  run.spectrum.reset(spectrum);

  kw_extract_options_default(&run.options);
  run.options.growth_floor = c.growth_floor;
  run.options.isola_radius = kw_default_isola_radius(&pred.leading);
  kw_isola* isola = nullptr;
  check(kw_extract_isola(spectrum, &s, &run.options, &isola));
  run.isola.reset(isola);
  check(kw_isola_summary(isola, &run.summary));
  return run;
}

int cmd_ffh(const RunConfig& c) {
  require_order(c);
  const kw_collision s = collision_of(c);
  const Prediction pred = predict(c, s);
  warn_amplitude(c);
  const NumericRun run = run_ffh(c, s, pred);

  std::ostringstream csv;
  csv << "mu,lambda_re,lambda_im\n";
  std::vector<double> re(static_cast<std::size_t>(2 * c.trunc_N + 1));
  std::vector<double> im(re.size());
  for (std::size_t i = 0; i < kw_spectrum_slice_count(run.spectrum.get()); ++i) {
    double mu = 0.0;
    size_t count = 0;
    check(kw_spectrum_slice(run.spectrum.get(), i, &mu, re.data(), im.data(), re.size(), &count));
    for (size_t k = 0; k < count; ++k) csv << sci(mu) << "," << sci(re[k]) << "," << sci(im[k]) << "\n";
  }
  write_atomic(fs::path(c.out_dir) / "spectrum.csv", csv.str());

  const auto points = fetch_points([&](kw_curve_point* out, size_t cap, size_t* written) {
    return kw_isola_points(run.isola.get(), out, cap, written);
  });
  json j;
  j["config"] = config_json(c);
  j["collision"] = collision_json(s);
  const kw_isola_numerics& n = run.summary;
  j["empty"] = n.empty != 0;
  j["mu_lo"] = n.mu_lo;
  j["mu_hi"] = n.mu_hi;
  j["mu_star"] = n.mu_star;
  j["lambda_star"] = {{"re", n.lambda_star_re}, {"im", n.lambda_star_im}};
  j["lo_clipped"] = n.lo_clipped != 0;
  j["hi_clipped"] = n.hi_clipped != 0;
  j["growth_floor"] = run.options.growth_floor;
  j["isola_radius"] = run.options.isola_radius;
  j["grid"] = {{"lo", run.grid.front()}, {"hi", run.grid.back()}, {"points", run.grid.size()}};
  json pts = json::array();
  for (const auto& pt : points) pts.push_back({pt.mu, pt.lambda_re, pt.lambda_im});
  j["points"] = std::move(pts);
  write_json(c, "isola_numeric.json", j);
  if (n.empty) std::cerr << "no eigenvalues above the growth floor: the sampled window looks stable\n";
  return kExitOk;
}

// ---- compare ------------------------------------------------------------

// Tolerance table version 1. Errors are normalized as
//   mu_lo, mu_hi, mu_star: |measured - predicted| / predicted half-width
//   re_lambda:             |measured - predicted| / |predicted|
//   im_lambda:             |measured - predicted| / (eps^2 size of the Im correction)
constexpr int kToleranceTableVersion = 1;

struct Tolerances {
  double mu_lo;
  double mu_hi;
  double mu_star;
  double re_lambda;
  double im_lambda;
};

const std::map<std::string, Tolerances>& tolerance_table() {
  static const std::map<std::string, Tolerances> table = {
      {"order1", {0.10, 0.10, 0.10, 0.02, 2.0}},
      {"order2", {0.02, 0.02, 0.02, 0.02, 0.10}},
      {"dn2", {0.20, 0.20, 0.20, 0.10, 0.25}},
      {"dn3", {0.50, 0.50, 0.50, 0.25, 1.00}},
  };
  return table;
}

std::string default_profile(const RunConfig& c) {
  if (c.delta_n == 1) return c.order == 2 ? "order2" : "order1";
  return c.delta_n == 2 ? "dn2" : "dn3";
}

int cmd_compare(const RunConfig& c) {
  require_order(c);
  const std::string profile = c.profile.empty() ? default_profile(c) : c.profile;
  const auto entry = tolerance_table().find(profile);
  if (entry == tolerance_table().end()) throw CliFailure{kExitInvalid, "unknown tolerance profile '" + profile + "'"};
  Tolerances tol = entry->second;
  const std::map<std::string, double*> slots = {{"mu-lo", &tol.mu_lo},
                                                {"mu-hi", &tol.mu_hi},
                                                {"mu-star", &tol.mu_star},
                                                {"re-lambda", &tol.re_lambda},
                                                {"im-lambda", &tol.im_lambda}};
  for (const auto& [name, value] : c.tolerance_overrides) *slots.at(name) = value;

  const kw_collision s = collision_of(c);
  const Prediction pred = predict(c, s);
  warn_amplitude(c);

  json report;
  report["config"] = config_json(c);
  report["profile"] = profile;
  report["tolerance_table_version"] = kToleranceTableVersion;
  report["collision"] = collision_json(s);
  json quantities = json::object();
  std::vector<std::string> failing;

  if (c.eps == 0.0) {
    for (const auto& [name, unused] : slots) {
      (void)unused;
      quantities[name] = {{"error", 0.0}, {"tolerance", *slots.at(name)}, {"pass", true}};
    }
    report["note"] = "eps=0: both sides reduce to lambda0";
  } else {
    const NumericRun run = run_ffh(c, s, pred);
    const kw_isola_numerics& n = run.summary;
    const double half = (pred.mu_hi - pred.mu_lo) / 2.0;
    const double inf = std::numeric_limits<double>::infinity();
    auto add = [&](const std::string& name, double predicted, double measured, double scale, double tolerance,
                   bool usable) {
      const double error = usable && scale > 0.0 ? std::abs(measured - predicted) / scale : inf;
      const bool pass = error <= tolerance;
      quantities[name] = {{"predicted", predicted}, {"measured", usable ? json(measured) : json(nullptr)},
                          {"scale", scale},         {"error", std::isfinite(error) ? json(error) : json(nullptr)},
                          {"tolerance", tolerance}, {"pass", pass}};
      if (!pass) failing.push_back(name);
    };
    const bool found = n.empty == 0;
    add("mu-lo", pred.mu_lo, n.mu_lo, half, tol.mu_lo, found && n.lo_clipped == 0);
    add("mu-hi", pred.mu_hi, n.mu_hi, half, tol.mu_hi, found && n.hi_clipped == 0);
    add("mu-star", pred.mu_star, n.mu_star, half, tol.mu_star, found);
    add("re-lambda", pred.re, n.lambda_star_re, std::abs(pred.re), tol.re_lambda, found);
    add("im-lambda", pred.im, n.lambda_star_im, pred.im_scale, tol.im_lambda, found);
    report["ffh"] = {{"empty", found ? false : true},
                     {"lo_clipped", n.lo_clipped != 0},
                     {"hi_clipped", n.hi_clipped != 0},
                     {"grid", {{"lo", run.grid.front()}, {"hi", run.grid.back()}, {"points", run.grid.size()}}}};
  }
  report["quantities"] = quantities;
  report["failing"] = failing;
  report["pass"] = failing.empty();
  write_json(c, "report.json", report);

  if (!failing.empty()) {
    std::cerr << "outside tolerance (profile " << profile << "):";
    for (const auto& f : failing) std::cerr << " " << f;
    std::cerr << "\n";
    return kExitTolerance;
  }
  return kExitOk;
}

// ---- argument parsing ---------------------------------------------------

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--beta", c.beta, "fifth-order dispersion coefficient (normalized)")->required();
  sub->add_option("--sigma", c.sigma, "nonlinearity coefficient")->capture_default_str();
  sub->add_option("--eps", c.eps, "Stokes amplitude")->check(CLI::NonNegativeNumber)->capture_default_str();
  sub->add_option("--dn", c.delta_n, "Fourier gap of the colliding modes")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--out", c.out_dir, "output directory")->capture_default_str();
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

void add_model(CLI::App* sub, RunConfig& c) {
  sub->add_option("--order", c.order, "asymptotic order (2 for delta_n=1 only)")->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  sub->add_option("--mu2", c.mu2, "override the second-order Floquet shift (diagnostics)");
}

void add_numeric(CLI::App* sub, RunConfig& c) {
  sub->add_option("--modes", c.trunc_N, "Fourier truncation N (matrix size 2N+1)")->check(CLI::Range(8, 4096))
      ->capture_default_str();
  sub->add_option("--mu-points", c.mu_points, "Floquet grid size")->check(CLI::Range(3, 1000000))
      ->capture_default_str();
  sub->add_option("--margin", c.margin, "fractional widening of the predicted window")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  sub->add_option("--mu-lo", c.mu_lo, "explicit grid start");
  sub->add_option("--mu-hi", c.mu_hi, "explicit grid end");
  sub->add_option("--floor", c.growth_floor, "growth floor for isola detection")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "sweep workers (0 = all cores)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stokes waves, eigenvalue collisions and high-frequency isolas of the Kawahara equation"};
  app.require_subcommand(1);
  RunConfig c;

  auto* stokes = app.add_subcommand("stokes", "Stokes coefficients and wave profile");
  add_common(stokes, c);

  auto* collide = app.add_subcommand("collide", "locate the eigenvalue collision");
  add_common(collide, c);

  auto* isola = app.add_subcommand("isola", "asymptotic isola curve");
  add_common(isola, c);
  add_model(isola, c);
  isola->add_option("--samples", c.samples, "interior curve samples per branch")->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* ffh = app.add_subcommand("ffh", "numerical spectrum over the Floquet window");
  add_common(ffh, c);
  add_model(ffh, c);
  add_numeric(ffh, c);

  auto* compare = app.add_subcommand("compare", "asymptotics vs numerics with tolerance gating");
  add_common(compare, c);
  add_model(compare, c);
  add_numeric(compare, c);
  compare->add_option("--profile", c.profile, "tolerance profile: order1, order2, dn2, dn3");
  for (const char* q : {"mu-lo", "mu-hi", "mu-star", "re-lambda", "im-lambda"}) {
    const std::string name = q;
    compare->add_option_function<double>(
        "--tol-" + name, [&c, name](double v) { c.tolerance_overrides[name] = v; }, "tolerance override")
        ->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*stokes) return cmd_stokes(c);
    if (*collide) return cmd_collide(c);
    if (*isola) return cmd_isola(c);
    if (*ffh) return cmd_ffh(c);
    if (*compare) return cmd_compare(c);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitInvalid;
}
